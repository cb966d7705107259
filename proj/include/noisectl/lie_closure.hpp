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

// Dimension of the real Lie algebra generated by {i H} under commutation.
// Generators are projected to their traceless part; rank is counted by
// Gram-Schmidt under Re tr(A^dagger B) with `threshold` on residual norms.
// Full unitary controllability on N levels is a result of N^2 - 1.
int lie_closure_dimension(const std::vector<HermitianOperator>& generators,
                          double threshold = 1e-10);

}  // namespace noisectl
