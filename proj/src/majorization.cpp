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

#include "noisectl/majorization.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "noisectl/errors.hpp"

namespace noisectl {

RealVector sorted_descending(const RealVector& v) {
  RealVector s = v;
  std::sort(s.begin(), s.end(), std::greater<>());
  return s;
}

bool is_majorised_by(const RealVector& x, const RealVector& y, double tol) {
  if (x.size() != y.size()) {
    throw ArgumentError("is_majorised_by: length mismatch");
  }
  const RealVector xs = sorted_descending(x);
  const RealVector ys = sorted_descending(y);
  double px = 0.0;
  double py = 0.0;
  for (Index i = 0; i < xs.size(); ++i) {
    px += xs(i);
    py += ys(i);
    if (px > py + tol) {
      return false;
    }
  }
  return std::abs(px - py) <= tol;
}

RealVector t_transform(const RealVector& v, Index j, Index k, double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw ArgumentError("t_transform: lambda must lie in [0, 1]");
  }
  if (j < 0 || k < 0 || j >= v.size() || k >= v.size() || j == k) {
    throw ArgumentError("t_transform: invalid index pair");
  }
  RealVector out = v;
  out(j) = lambda * v(j) + (1.0 - lambda) * v(k);
  out(k) = lambda * v(k) + (1.0 - lambda) * v(j);
  return out;
}

}  // namespace noisectl
