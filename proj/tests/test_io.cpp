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

#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "roabp/errors.hpp"
#include "roabp/io.hpp"
#include "support.hpp"

using namespace roabp;
using namespace roabp::testing;

namespace {

std::string data(const std::string& name) { return std::string(ROABP_TEST_DATA) + "/" + name; }

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "roabp_io_tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("sparse text round trip") {
  PrimeField f;
  Rng rng(1);
  for (int i = 0; i < 20; ++i) {
    auto g = dense_to_sparse(random_sparse_dense(f, 1 + i % 4, i % 3, rng));
    std::stringstream s;
    io::write_sparse_poly(s, g);
    auto back = io::read_sparse_poly(s);
    CHECK(sparse_to_dense(back) == sparse_to_dense(g));
  }
}

TEST_CASE("dense binary round trip") {
  PrimeField f(101);
  Rng rng(2);
  auto g = random_dense(f, 3, 2, rng);
  std::stringstream s;
  io::write_dense_poly(s, g);
  CHECK(s.str().rfind("densepoly n=3 d=2 p=101\n", 0) == 0);
  CHECK(s.str().size() == 24 + 27 * 8);
  CHECK(io::read_dense_poly(s) == g);

  std::string body = s.str();
  std::stringstream truncated(body.substr(0, body.size() - 3));
  CHECK_THROWS_AS(io::read_dense_poly(truncated), InputError);
  std::stringstream trailing(body + "x");
  CHECK_THROWS_AS(io::read_dense_poly(trailing), InputError);
}

TEST_CASE("ROABP round trip") {
  PrimeField f;
  Rng rng(3);
  auto r = sample_random_roabp(f, 4, 2, 3, Order::parse("4,2,1,3"), rng);
  std::stringstream s;
  io::write_roabp(s, r);
  CHECK(io::read_roabp(s) == r);
}

TEST_CASE("graph files") {
  auto g = io::load_graph(data("k3.graph"));
  CHECK(g.num_vertices() == 3);
  CHECK(g.num_edges() == 3);
  CHECK(io::load_graph(data("edge.graph")).num_edges() == 1);
  CHECK_THROWS_AS(io::load_graph(data("loop.graph")), InputError);
  std::stringstream s;
  io::write_graph(s, g);
  auto again = io::read_graph(s);
  CHECK(again.edges() == g.edges());
}

TEST_CASE("polynomial files") {
  auto z = io::load_poly_dense(data("split.poly"));
  CHECK(z == z_product());
  CHECK(io::load_poly_oracle(data("split.poly")).provenance() == Provenance::sparse_backed);
  CHECK_THROWS_AS(io::load_poly(data("truncated.poly")), InputError);
  CHECK_THROWS_AS(io::load_poly(data("missing.poly")), InputError);
  CHECK_THROWS_AS(io::load_poly(data("k3.graph")), InputError);

  auto path = scratch("z.dense").string();
  io::save_poly(path, z, io::PolyFormat::dense);
  CHECK(std::holds_alternative<DensePoly>(io::load_poly(path)));
  CHECK(io::load_poly_dense(path) == z);
  io::save_poly(path, z, io::PolyFormat::sparse);
  CHECK(std::holds_alternative<SparsePoly>(io::load_poly(path)));
  CHECK_THROWS_AS(io::parse_format("csv"), InputError);
}

TEST_CASE("malformed text inputs") {
  auto read = [](const std::string& text) {
    std::stringstream s(text);
    return io::read_sparse_poly(s);
  };
  CHECK_THROWS_AS(read(""), InputError);
  CHECK_THROWS_AS(read("poly n=2 d=1\n1 0 0\n"), InputError);
  CHECK_THROWS_AS(read("poly n=2 d=1 p=9\n1 0 0\n"), InputError);
  CHECK_THROWS_AS(read("poly n=2 d=1 p=7\n7 0 0\n"), InputError);
  CHECK_THROWS_AS(read("poly n=2 d=1 p=7\n1 0 -1\n"), InputError);
  CHECK_THROWS_AS(read("poly n=2 d=1 p=7\n1 0 0\n2 0 0\n"), InputError);
  CHECK(read("poly n=2 d=1 p=7\n\n# comment\n3 1 0\n").terms().size() == 1);
  std::stringstream roabp("roabp n=1 d=1 p=7\norder 1\nwidths 1 2\n");
  CHECK_THROWS_AS(io::read_roabp(roabp), InputError);
}
