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

#include <doctest.h>

#include "noisectl/errors.hpp"
#include "noisectl/majorization.hpp"

using namespace noisectl;

namespace {

RealVector vec_of(std::initializer_list<double> v) {
  RealVector out(static_cast<Index>(v.size()));
  Index i = 0;
  for (const double x : v) {
    out(i++) = x;
  }
  return out;
}

RealVector random_probability(Index n, std::mt19937_64& rng) {
  std::exponential_distribution<double> d;
  RealVector p(n);
  for (Index i = 0; i < n; ++i) {
    p(i) = d(rng);
  }
  return p / p.sum();
}

}  // namespace

TEST_SUITE("reach") {
  TEST_CASE("majorisation examples") {
    CHECK(is_majorised_by(vec_of({0.5, 0.5}), vec_of({1.0, 0.0})));
    CHECK(!is_majorised_by(vec_of({1.0, 0.0}), vec_of({0.5, 0.5})));
    CHECK(is_majorised_by(vec_of({0.5, 0.3, 0.2}), vec_of({0.6, 0.3, 0.1})));
    CHECK(is_majorised_by(vec_of({0.2, 0.3, 0.5}), vec_of({0.1, 0.6, 0.3})));
    CHECK(!is_majorised_by(vec_of({0.5, 0.3, 0.2}), vec_of({0.5, 0.4, 0.2})));
    CHECK_THROWS_AS(is_majorised_by(vec_of({1.0}), vec_of({0.5, 0.5})), ArgumentError);
  }

  TEST_CASE("uniform distribution is majorised by everything") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
      const RealVector p = random_probability(8, rng);
      CHECK(is_majorised_by(RealVector::Constant(8, 0.125), p));
    }
  }

  TEST_CASE("majorisation is a preorder on random triples") {
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 200; ++trial) {
      const RealVector a = random_probability(4, rng);
      const RealVector b = random_probability(4, rng);
      const RealVector c = random_probability(4, rng);
      CHECK(is_majorised_by(a, a));
      if (is_majorised_by(a, b) && is_majorised_by(b, a)) {
        CHECK((sorted_descending(a) - sorted_descending(b)).cwiseAbs().maxCoeff() < 1e-9);
      }
      if (is_majorised_by(a, b) && is_majorised_by(b, c)) {
        CHECK(is_majorised_by(a, c));
      }
    }
    // Construct chains explicitly so the transitivity branch always runs.
    for (int trial = 0; trial < 50; ++trial) {
      const RealVector c = random_probability(5, rng);
      const RealVector b = t_transform(c, 0, 3, 0.8);
      const RealVector a = t_transform(b, 1, 4, 0.6);
      CHECK(is_majorised_by(a, b));
      CHECK(is_majorised_by(b, c));
      CHECK(is_majorised_by(a, c));
    }
  }

  TEST_CASE("t_transform examples") {
    const RealVector v = vec_of({0.7, 0.3});
    CHECK((t_transform(v, 0, 1, 1.0) - v).norm() == 0.0);
    CHECK((t_transform(vec_of({1.0, 0.0}), 0, 1, 0.5) - vec_of({0.5, 0.5})).norm() == 0.0);
    CHECK((t_transform(v, 0, 1, 0.75) - vec_of({0.6, 0.4})).norm() < 1e-15);
    const RealVector w = vec_of({0.4, 0.3, 0.2, 0.1});
    const RealVector t = t_transform(w, 1, 3, 0.0);
    CHECK((t - vec_of({0.4, 0.1, 0.2, 0.3})).norm() == 0.0);
    CHECK_THROWS_AS(t_transform(v, 0, 1, 1.5), ArgumentError);
    CHECK_THROWS_AS(t_transform(v, 0, 1, -0.1), ArgumentError);
    CHECK_THROWS_AS(t_transform(v, 0, 0, 0.5), ArgumentError);
    CHECK_THROWS_AS(t_transform(v, 0, 2, 0.5), ArgumentError);
  }

  TEST_CASE("t_transform output is majorised by its input") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u;
    for (int trial = 0; trial < 100; ++trial) {
      const RealVector p = random_probability(6, rng);
      const Index j = static_cast<Index>(trial % 6);
      const Index k = (j + 1 + trial % 5) % 6;
      CHECK(is_majorised_by(t_transform(p, j, k, u(rng)), p));
    }
  }

  TEST_CASE("sorted_descending") {
    CHECK((sorted_descending(vec_of({0.1, 0.5, 0.2})) - vec_of({0.5, 0.2, 0.1})).norm() == 0.0);
  }
}
