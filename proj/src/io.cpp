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

#include "roabp/io.hpp"

#include <array>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "roabp/errors.hpp"

namespace roabp::io {

namespace {

// Next line that is neither blank nor a comment; false at end of input.
bool next_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    if (line.back() == '\r') line.pop_back();
    return true;
  }
  return false;
}

u64 parse_u64(const std::string& token, const std::string& context) {
  if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
    throw InputError("expected a non-negative integer in " + context + ", got '" + token + "'");
  try {
    return std::stoull(token);
  } catch (const std::out_of_range&) {
    throw InputError("integer out of range in " + context + ": '" + token + "'");
  }
}

struct Header {
  std::string kind;
  std::map<std::string, std::string> fields;

  u64 get(const std::string& key) const {
    auto it = fields.find(key);
    if (it == fields.end()) throw InputError(kind + " header is missing " + key + "=");
    return parse_u64(it->second, kind + " header");
  }
};

Header parse_header(const std::string& line) {
  std::istringstream ss(line);
  Header h;
  ss >> h.kind;
  std::string token;
  while (ss >> token) {
    auto eq = token.find('=');
    if (eq == std::string::npos) throw InputError("malformed header field '" + token + "'");
    h.fields[token.substr(0, eq)] = token.substr(eq + 1);
  }
  return h;
}

Header expect_header(std::istream& in, const std::string& kind) {
  std::string line;
  if (!next_line(in, line)) throw InputError("empty input, expected a '" + kind + "' header");
  Header h = parse_header(line);
  if (h.kind != kind) throw InputError("expected '" + kind + "' header, got '" + h.kind + "'");
  return h;
}

std::vector<u64> numbers(const std::string& line, const std::string& context) {
  std::istringstream ss(line);
  std::vector<u64> out;
  std::string token;
  while (ss >> token) out.push_back(parse_u64(token, context));
  return out;
}

int checked_vars(u64 n) {
  if (n > static_cast<u64>(VarSubset::kMaxVars)) throw InputError("variable count too large");
  return static_cast<int>(n);
}

std::ifstream open_in(const std::string& path, std::ios::openmode mode = std::ios::in) {
  std::ifstream in(path, mode);
  if (!in) throw InputError("cannot open '" + path + "'");
  return in;
}

std::ofstream open_out(const std::string& path, std::ios::openmode mode = std::ios::out) {
  std::ofstream out(path, mode);
  if (!out) throw InputError("cannot write '" + path + "'");
  return out;
}

}  // namespace

SparsePoly read_sparse_poly(std::istream& in) {
  const Header h = expect_header(in, "poly");
  const int n = checked_vars(h.get("n"));
  const u64 d = h.get("d");
  const PrimeField field(h.get("p"));
  std::vector<SparseTerm> terms;
  std::string line;
  while (next_line(in, line)) {
    auto values = numbers(line, "polynomial term");
    if (values.size() != static_cast<std::size_t>(n) + 1)
      throw InputError("term line needs 1 + n = " + std::to_string(n + 1) + " integers: '" + line + "'");
    if (values[0] >= field.modulus()) throw InputError("coefficient not reduced modulo p: '" + line + "'");
    terms.push_back({ExponentVector(values.begin() + 1, values.end()), {values[0]}});
  }
  return SparsePoly(field, n, d, std::move(terms));
}

void write_sparse_poly(std::ostream& out, const SparsePoly& f) {
  out << "poly n=" << f.num_vars() << " d=" << f.degree() << " p=" << f.field().modulus() << "\n";
  for (const auto& t : f.terms()) {
    out << t.coeff.value;
    for (auto e : t.exponents) out << ' ' << e;
    out << "\n";
  }
}

DensePoly read_dense_poly(std::istream& in, std::uint64_t budget) {
  std::string line;
  if (!std::getline(in, line)) throw InputError("empty dense polynomial file");
  const Header h = parse_header(line);
  if (h.kind != "densepoly") throw InputError("expected 'densepoly' header, got '" + h.kind + "'");
  const int n = checked_vars(h.get("n"));
  const u64 d = h.get("d");
  const PrimeField field(h.get("p"));
  DensePoly f(field, n, d, budget);
  for (auto& c : f.coeffs()) {
    std::array<unsigned char, 8> bytes{};
    if (!in.read(reinterpret_cast<char*>(bytes.data()), 8)) throw InputError("dense polynomial body is truncated");
    u64 v = 0;
    for (int b = 7; b >= 0; --b) v = (v << 8) | bytes[b];
    if (v >= field.modulus()) throw InputError("dense coefficient not reduced modulo p");
    c = {v};
  }
  if (in.peek() != std::char_traits<char>::eof()) throw InputError("trailing bytes after dense polynomial body");
  return f;
}

void write_dense_poly(std::ostream& out, const DensePoly& f) {
  out << "densepoly n=" << f.num_vars() << " d=" << f.degree() << " p=" << f.field().modulus() << "\n";
  for (auto c : f.coeffs()) {
    std::array<char, 8> bytes{};
    for (int b = 0; b < 8; ++b) bytes[b] = static_cast<char>((c.value >> (8 * b)) & 0xff);
    out.write(bytes.data(), 8);
  }
}

Roabp read_roabp(std::istream& in) {
  const Header h = expect_header(in, "roabp");
  const int n = checked_vars(h.get("n"));
  const u64 d = h.get("d");
  const PrimeField field(h.get("p"));

  std::string line;
  if (!next_line(in, line)) throw InputError("ROABP file ends before the order line");
  std::istringstream order_line(line);
  std::string word;
  order_line >> word;
  if (word != "order") throw InputError("expected 'order' line, got '" + line + "'");
  std::string rest;
  std::getline(order_line, rest);
  Order order = Order::parse(rest);
  if (order.size() != n) throw InputError("order length differs from n");

  if (!next_line(in, line) || line.rfind("widths", 0) != 0) throw InputError("expected 'widths' line");
  auto widths = numbers(line.substr(6), "widths line");
  if (widths.size() != static_cast<std::size_t>(n) + 1) throw InputError("widths line needs n+1 entries");

  std::vector<std::vector<Matrix>> layers(n);
  for (int i = 1; i <= n; ++i) {
    for (u64 j = 0; j <= d; ++j) {
      if (!next_line(in, line)) throw InputError("ROABP file ends before layer " + std::to_string(i));
      std::istringstream tag(line);
      std::string kw;
      u64 li = 0, lj = 0;
      if (!(tag >> kw >> li >> lj) || kw != "layer" || li != static_cast<u64>(i) || lj != j) {
        throw InputError("expected 'layer " + std::to_string(i) + " " + std::to_string(j) + "', got '" + line + "'");
      }
      Matrix m(widths[i - 1], widths[i]);
      for (std::size_t r = 0; r < m.rows(); ++r) {
        if (!next_line(in, line)) throw InputError("layer block is truncated");
        auto row = numbers(line, "layer row");
        if (row.size() != m.cols()) throw InputError("layer row has wrong length: '" + line + "'");
        for (std::size_t c = 0; c < m.cols(); ++c) {
          if (row[c] >= field.modulus()) throw InputError("matrix entry not reduced modulo p");
          m.at(r, c) = {row[c]};
        }
      }
      layers[i - 1].push_back(std::move(m));
    }
  }
  if (next_line(in, line)) throw InputError("unexpected trailing content: '" + line + "'");
  return Roabp(field, d, std::move(order), std::move(layers));
}

void write_roabp(std::ostream& out, const Roabp& r) {
  const int n = r.num_vars();
  out << "roabp n=" << n << " d=" << r.degree() << " p=" << r.field().modulus() << "\n";
  out << "order";
  for (int v : r.order().values()) out << ' ' << v;
  out << "\nwidths";
  for (auto w : r.widths()) out << ' ' << w;
  out << "\n";
  for (int i = 1; i <= n; ++i) {
    for (u64 j = 0; j <= r.degree(); ++j) {
      out << "layer " << i << ' ' << j << "\n";
      const Matrix& m = r.coefficient(i, j);
      for (std::size_t row = 0; row < m.rows(); ++row) {
        for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? " " : "") << m.at(row, c).value;
        out << "\n";
      }
    }
  }
}

Graph read_graph(std::istream& in) {
  const Header h = expect_header(in, "graph");
  const int n = checked_vars(h.get("n"));
  std::vector<std::pair<int, int>> edges;
  std::string line;
  while (next_line(in, line)) {
    auto values = numbers(line, "edge line");
    if (values.size() != 2) throw InputError("edge line needs two vertices: '" + line + "'");
    if (values[0] > static_cast<u64>(n) || values[1] > static_cast<u64>(n))
      throw InputError("edge endpoint outside [1, n]: '" + line + "'");
    edges.emplace_back(static_cast<int>(values[0]), static_cast<int>(values[1]));
  }
  return Graph(n, std::move(edges));
}

void write_graph(std::ostream& out, const Graph& g) {
  out << "graph n=" << g.num_vertices() << "\n";
  for (auto [u, v] : g.edges()) out << u << ' ' << v << "\n";
}

AnyPoly load_poly(const std::string& path, std::uint64_t budget) {
  auto in = open_in(path, std::ios::in | std::ios::binary);
  std::string word;
  {
    std::string line;
    auto start = in.tellg();
    while (std::getline(in, line)) {
      auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      std::istringstream(line) >> word;
      break;
    }
    in.clear();
    in.seekg(start);
  }
  if (word == "densepoly") return read_dense_poly(in, budget);
  if (word == "poly") return read_sparse_poly(in);
  throw InputError("'" + path + "' is neither a sparse ('poly') nor a dense ('densepoly') polynomial file");
}

DensePoly load_poly_dense(const std::string& path, std::uint64_t budget) {
  auto any = load_poly(path, budget);
  if (auto* dense = std::get_if<DensePoly>(&any)) return std::move(*dense);
  return sparse_to_dense(std::get<SparsePoly>(any), budget);
}

PolyOracle load_poly_oracle(const std::string& path, std::uint64_t budget) {
  auto any = load_poly(path, budget);
  if (auto* dense = std::get_if<DensePoly>(&any)) return dense_oracle(std::move(*dense));
  return sparse_oracle(std::get<SparsePoly>(std::move(any)));
}

Roabp load_roabp(const std::string& path) {
  auto in = open_in(path);
  return read_roabp(in);
}

Graph load_graph(const std::string& path) {
  auto in = open_in(path);
  return read_graph(in);
}

PolyFormat parse_format(const std::string& name) {
  if (name == "sparse") return PolyFormat::sparse;
  if (name == "dense") return PolyFormat::dense;
  throw InputError("unknown polynomial format '" + name + "' (expected sparse or dense)");
}

void save_poly(const std::string& path, const DensePoly& f, PolyFormat format) {
  if (format == PolyFormat::dense) {
    auto out = open_out(path, std::ios::out | std::ios::binary);
    write_dense_poly(out, f);
  } else {
    auto out = open_out(path);
    write_sparse_poly(out, dense_to_sparse(f));
  }
}

void save_poly(const std::string& path, const SparsePoly& f) {
  auto out = open_out(path);
  write_sparse_poly(out, f);
}

}  // namespace roabp::io
