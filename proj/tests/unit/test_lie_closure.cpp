// Copyright 2026 The noisectl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <random>
#include <vector>

#include <doctest.h>

#include "noisectl/lie_closure.hpp"
#include "noisectl/models.hpp"

using namespace noisectl;

namespace {

HermitianOperator h(const Matrix& m) { return HermitianOperator(m); }

std::vector<HermitianOperator> chain_generators(int n) {
  const ControlSystem sys = ising_chain(n, 1.0, {NoiseKind::bit_flip}, 0, 1.0);
  std::vector<HermitianOperator> out{sys.drift()};
  for (const auto& c : sys.controls()) {
    out.push_back(c.op);
  }
  return out;
}

}  // namespace

TEST_SUITE("lie") {
  TEST_CASE("single qubit closures") {
    CHECK(lie_closure_dimension({h(pauli::x())}) == 1);
    CHECK(lie_closure_dimension({h(pauli::x()), h(pauli::y())}) == 3);
    CHECK(lie_closure_dimension({h(pauli::x()), h(2.0 * pauli::x())}) == 1);
  }

  TEST_CASE("identity components are dropped") {
    CHECK(lie_closure_dimension({h(Matrix::Identity(2, 2))}) == 0);
    CHECK(lie_closure_dimension({h(Matrix(pauli::z() + 3.0 * pauli::identity()))}) == 1);
  }

  TEST_CASE("two-qubit Ising chain with local controls is su(4)") {
    CHECK(lie_closure_dimension(chain_generators(2)) == 15);
  }

  TEST_CASE("local controls alone give su(2) + su(2)") {
    std::vector<HermitianOperator> g = chain_generators(2);
    g.erase(g.begin());
    CHECK(lie_closure_dimension(g) == 6);
  }

  TEST_CASE("three-qubit chain is su(8)") { CHECK(lie_closure_dimension(chain_generators(3)) == 63); }

  TEST_CASE("dimension is invariant under invertible real recombination") {
    const std::vector<HermitianOperator> g = chain_generators(2);
    std::mt19937_64 rng(3);
    std::normal_distribution<double> d;
    const auto m = static_cast<Index>(g.size());
    for (int trial = 0; trial < 3; ++trial) {
      RealMatrix a(m, m);
      for (Index i = 0; i < m; ++i) {
        for (Index j = 0; j < m; ++j) {
          a(i, j) = d(rng);
        }
      }
      REQUIRE(std::abs(a.determinant()) > 1e-6);
      std::vector<HermitianOperator> mixed;
      for (Index i = 0; i < m; ++i) {
        Matrix s = Matrix::Zero(4, 4);
        for (Index j = 0; j < m; ++j) {
          s += a(i, j) * g[static_cast<std::size_t>(j)].matrix();
        }
        mixed.push_back(h(s));
      }
      CHECK(lie_closure_dimension(mixed) == 15);
    }
    // A subset spanning a proper subalgebra stays proper after mixing.
    const std::vector<HermitianOperator> zz_x{
        h(embed_pair(pauli::z(), 1, pauli::z(), 2, 2)),
        h(Matrix(embed_pair(pauli::z(), 1, pauli::z(), 2, 2) + embed_local(pauli::z(), 1, 2)))};
    CHECK(lie_closure_dimension(zz_x) == 2);
  }
}
