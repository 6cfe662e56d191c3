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

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "roabp/poly.hpp"
#include "roabp/roabp.hpp"
#include "roabp/subset.hpp"

namespace roabp {

/// Simple undirected graph on vertices 1..n.
class Graph {
 public:
  /// Throws InputError on loops, repeated edges or endpoints outside [1, n].
  Graph(int n, std::vector<std::pair<int, int>> edges);

  int num_vertices() const { return n_; }
  /// Normalized (u < v), sorted.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  std::size_t num_edges() const { return edges_.size(); }
  int degree(int v) const { return static_cast<int>(adjacency_[v - 1].size()); }
  int max_degree() const;
  /// Ascending neighbours of v.
  const std::vector<int>& neighbors(int v) const { return adjacency_[v - 1]; }
  /// Rank (1-based) of v among the neighbours of u in increasing vertex order.
  int neighbor_index(int u, int v) const;

  static Graph path(int n);
  static Graph cycle(int n);
  static Graph complete(int n);
  static Graph star(int n);

 private:
  int n_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adjacency_;
};

/// The gadget polynomial: x_v^(D+1) for every vertex plus x_u^n_u(v) x_v^n_v(u) for every
/// edge {u, v}, with D the maximum degree (taken as 1 for an edgeless graph). Individual
/// degree D+1, all coefficients 1.
SparsePoly build_gadget_poly(const Graph& g, const PrimeField& field = PrimeField());

/// Number of edges with exactly one endpoint in `a`.
std::size_t cut_size(const Graph& g, const VarSubset& a);

inline constexpr int kDefaultCutwidthCap = 10;

struct Arrangement {
  std::size_t width = 0;
  Order order;
};

/// Exhaustive over all n! arrangements; lexicographically least optimum.
Arrangement cutwidth_exact(const Graph& g, int cap = kDefaultCutwidthCap);

struct PartitionCheck {
  VarSubset side;
  std::size_t rank = 0;
  std::size_t expected = 0;  // 2 + cut size
  bool equal() const { return rank == expected; }
};

struct CutCertificate {
  std::vector<PartitionCheck> partitions;  // every nontrivial A, by ascending mask
  bool pass = false;
};

/// Compares the exact Nisan rank of the gadget polynomial with 2 + cut size on every
/// nontrivial bipartition. Rejects n = 1.
CutCertificate certify_rank_cut_identity(const Graph& g, const PrimeField& field = PrimeField(),
                                         std::uint64_t budget = kDefaultExpansionBudget);

}  // namespace roabp
