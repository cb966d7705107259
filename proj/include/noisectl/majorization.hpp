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

#pragma once

#include <vector>

#include "noisectl/qops.hpp"

namespace noisectl {

// True iff x is majorised by y (x < y): the descending partial sums of x never
// exceed those of y by more than `tol`, and the totals agree within `tol`.
// Throws ArgumentError on a length mismatch.
bool is_majorised_by(const RealVector& x, const RealVector& y, double tol = 1e-10);

// lambda v + (1 - lambda) Q_jk v: entries j and k (0-based) are mixed, all
// others kept. Throws ArgumentError for lambda outside [0, 1] or bad indices.
RealVector t_transform(const RealVector& v, Index j, Index k, double lambda);

// Descending copy of v.
RealVector sorted_descending(const RealVector& v);

}  // namespace noisectl
