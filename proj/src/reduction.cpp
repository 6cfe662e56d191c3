/*
 * Copyright 2026 The roabp-order Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "roabp/reduction.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "roabp/errors.hpp"
#include "roabp/nisan.hpp"
#include "roabp/orderfind.hpp"

namespace roabp {

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n), adjacency_(n) {
  if (n < 1 || n > VarSubset::kMaxVars) throw InputError("graph vertex count out of range");
  for (auto [u, v] : edges) {
    if (u < 1 || u > n || v < 1 || v > n) throw InputError("edge endpoint outside [1, n]");
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) throw InputError("repeated edge");
  for (auto [u, v] : edges_) {
    adjacency_[u - 1].push_back(v);
    adjacency_[v - 1].push_back(u);
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

int Graph::max_degree() const {
  int best = 0;
  for (const auto& nbrs : adjacency_) best = std::max(best, static_cast<int>(nbrs.size()));
  return best;
}

int Graph::neighbor_index(int u, int v) const {
  const auto& nbrs = adjacency_[u - 1];
  auto it = std::lower_bound(nbrs.begin(), nbrs.end(), v);
  if (it == nbrs.end() || *it != v) throw InputError("vertices are not adjacent");
  return static_cast<int>(it - nbrs.begin()) + 1;
}

Graph Graph::path(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

Graph Graph::cycle(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
  if (n >= 3) e.emplace_back(n, 1);
  return Graph(n, e);
}

Graph Graph::complete(int n) {
  std::vector<std::pair<int, int>> e;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) e.emplace_back(u, v);
  return Graph(n, e);
}

Graph Graph::star(int n) {
  std::vector<std::pair<int, int>> e;
  for (int v = 2; v <= n; ++v) e.emplace_back(1, v);
  return Graph(n, e);
}

SparsePoly build_gadget_poly(const Graph& g, const PrimeField& field) {
  const int n = g.num_vertices();
  const std::uint64_t delta = std::max(g.max_degree(), 1);
  std::vector<SparseTerm> terms;
  for (int v = 1; v <= n; ++v) {
    ExponentVector e(n, 0);
    e[v - 1] = delta + 1;
    terms.push_back({e, field.one()});
  }
  for (auto [u, v] : g.edges()) {
    ExponentVector e(n, 0);
    e[u - 1] = g.neighbor_index(u, v);
    e[v - 1] = g.neighbor_index(v, u);
    terms.push_back({e, field.one()});
  }
  return SparsePoly(field, n, delta + 1, std::move(terms));
}

std::size_t cut_size(const Graph& g, const VarSubset& a) {
  if (a.ambient() != g.num_vertices()) throw InputError("subset ambient size differs from the vertex count");
  std::size_t cut = 0;
  for (auto [u, v] : g.edges())
    if (a.contains(u) != a.contains(v)) ++cut;
  return cut;
}

Arrangement cutwidth_exact(const Graph& g, int cap) {
  const int n = g.num_vertices();
  if (n > cap) throw InputError("exact cutwidth is capped at n = " + std::to_string(cap));
  std::vector<std::size_t> cuts(std::size_t{1} << n);
  for (std::uint64_t mask = 0; mask < cuts.size(); ++mask) cuts[mask] = cut_size(g, VarSubset(n, mask));

  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i + 1;
  Arrangement best{std::numeric_limits<std::size_t>::max(), Order::identity(n)};
  do {
    std::size_t worst = 0;
    std::uint64_t mask = 0;
    for (int i = 0; i + 1 < n && worst < best.width; ++i) {
      mask |= std::uint64_t{1} << (perm[i] - 1);
      worst = std::max(worst, cuts[mask]);
    }
    if (worst < best.width) best = {worst, Order(perm)};
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

CutCertificate certify_rank_cut_identity(const Graph& g, const PrimeField& field, std::uint64_t budget) {
  const int n = g.num_vertices();
  if (n < 2) throw InputError("a graph with one vertex has no nontrivial bipartition");
  const DensePoly f = sparse_to_dense(build_gadget_poly(g, field), budget);
  const std::int64_t count = (std::int64_t{1} << n) - 2;
  CutCertificate cert;
  cert.partitions.resize(count);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < count; ++i) {
    const VarSubset a(n, static_cast<std::uint64_t>(i + 1));
    cert.partitions[i] = {a, nisan_rank(f, a), 2 + cut_size(g, a)};
  }
  cert.pass = std::all_of(cert.partitions.begin(), cert.partitions.end(),
                          [](const PartitionCheck& c) { return c.equal(); });
  return cert;
}

}  // namespace roabp
