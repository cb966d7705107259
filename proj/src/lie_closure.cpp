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

#include "noisectl/lie_closure.hpp"

#include <cmath>

#include "noisectl/errors.hpp"

namespace noisectl {

namespace {

class OrthonormalBasis {
 public:
  OrthonormalBasis(Index dim, double threshold) : dim_(dim), threshold_(threshold) {}

  // Adds the component of `m` orthogonal to the basis; true if it was new.
  bool add(Matrix m) {
    // Two passes keep the basis orthogonal at N = 16.
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& b : basis_) {
        const double c = (b.adjoint() * m).trace().real();
        m -= c * b;
      }
    }
    const double norm = m.norm();
    if (norm <= threshold_) {
      return false;
    }
    basis_.push_back(m / norm);
    return true;
  }

  const std::vector<Matrix>& elements() const { return basis_; }
  std::size_t size() const { return basis_.size(); }
  bool full() const { return static_cast<Index>(basis_.size()) >= dim_ * dim_ - 1; }

 private:
  Index dim_;
  double threshold_;
  std::vector<Matrix> basis_;
};

}  // namespace

int lie_closure_dimension(const std::vector<HermitianOperator>& generators, double threshold) {
  if (generators.empty()) {
    throw ArgumentError("lie_closure_dimension: no generators");
  }
  const Index dim = generators.front().dim();
  OrthonormalBasis basis(dim, threshold);
  for (const auto& g : generators) {
    if (g.dim() != dim) {
      throw ArgumentError("lie_closure_dimension: generator dimensions differ");
    }
    Matrix a = kI * g.matrix();
    a.diagonal().array() -= a.trace() / static_cast<double>(dim);
    basis.add(a);
  }
  // Commutators of every new element with all earlier ones; the basis grows
  // while we sweep it.
  for (std::size_t i = 1; i < basis.size() && !basis.full(); ++i) {
    for (std::size_t j = 0; j < i && !basis.full(); ++j) {
      const Matrix& a = basis.elements()[i];
      const Matrix& b = basis.elements()[j];
      Matrix c = a * b - b * a;
      basis.add(std::move(c));
    }
  }
  return static_cast<int>(basis.size());
}

}  // namespace noisectl
