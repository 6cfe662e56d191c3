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

#include <iosfwd>
#include <string>
#include <variant>

#include "roabp/poly.hpp"
#include "roabp/reduction.hpp"
#include "roabp/roabp.hpp"

// Text and binary formats. Parse errors throw InputError with the offending line.
//
//   sparse polynomial   "poly n=<n> d=<d> p=<p>", then "<coeff> <e_1> ... <e_n>" per term
//   dense polynomial    "densepoly n=<n> d=<d> p=<p>\n", then (d+1)^n little-endian u64
//                       residues in linear-index order
//   ROABP               "roabp n=<n> d=<d> p=<p>", "order <s_1 ... s_n>", "widths <w_0 ... w_n>",
//                       then for each layer i and j = 0..d: "layer i j" and w_{i-1} rows of w_i
//   graph               "graph n=<n>", then "u v" per edge
//
// Blank lines and lines starting with '#' are ignored in the text formats.
namespace roabp::io {

SparsePoly read_sparse_poly(std::istream& in);
void write_sparse_poly(std::ostream& out, const SparsePoly& f);

DensePoly read_dense_poly(std::istream& in, std::uint64_t budget = kDefaultExpansionBudget);
void write_dense_poly(std::ostream& out, const DensePoly& f);

Roabp read_roabp(std::istream& in);
void write_roabp(std::ostream& out, const Roabp& r);

Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);

using AnyPoly = std::variant<SparsePoly, DensePoly>;

/// Dispatches on the header word ("poly" or "densepoly").
AnyPoly load_poly(const std::string& path, std::uint64_t budget = kDefaultExpansionBudget);
DensePoly load_poly_dense(const std::string& path, std::uint64_t budget = kDefaultExpansionBudget);
PolyOracle load_poly_oracle(const std::string& path, std::uint64_t budget = kDefaultExpansionBudget);
Roabp load_roabp(const std::string& path);
Graph load_graph(const std::string& path);

enum class PolyFormat { sparse, dense };
PolyFormat parse_format(const std::string& name);
void save_poly(const std::string& path, const DensePoly& f, PolyFormat format);
void save_poly(const std::string& path, const SparsePoly& f);

}  // namespace roabp::io
