// Copyright 2026 The qtc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

namespace qtc::tol {

// Absolute entrywise tolerances, applied after normalizing by
// max(1, operator 2-norm) of the matrix under test.
inline constexpr double herm = 1e-10;
inline constexpr double num = 1e-10;

// Adjacent eigenvalues closer than cluster * max(1, ||H||_2) are merged
// into one degenerate cluster.
inline constexpr double cluster = 1e-9;

// Operator-norm threshold separating exact gamma-algebra residuals
// (rounding scale) from genuine violations (O(1) scale).
inline constexpr double gamma = 1e-8;

// Smallest singular value / Gram eigenvalue accepted as full rank.
inline constexpr double rank = 1e-8;

}  // namespace qtc::tol
