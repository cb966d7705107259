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

#include "noisectl/qops.hpp"

namespace noisectl {

// exp(A) by scaling and squaring with diagonal Pade approximants of degree
// 3, 5, 7, 9 or 13 chosen from the 1-norm of A (Higham 2005). Valid for
// non-normal A. Throws NumericalError on non-finite input or output.
Matrix expm(const Matrix& a);

}  // namespace noisectl
