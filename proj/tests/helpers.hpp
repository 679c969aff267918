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

#include <cmath>

#include "qtc/qtc.hpp"

namespace qtc_test {

inline double max_abs_diff(const qtc::CMatrix& a, const qtc::CMatrix& b) {
    return (a - b).cwiseAbs().maxCoeff();
}

inline qtc::CMatrix mat2(qtc::Complex a, qtc::Complex b, qtc::Complex c, qtc::Complex d) {
    qtc::CMatrix m(2, 2);
    m << a, b, c, d;
    return m;
}

/// |+><+| with sigma_x |+> = |+>.
inline qtc::DensityOperator plus_state() {
    return qtc::DensityOperator(mat2(0.5, 0.5, 0.5, 0.5));
}

}  // namespace qtc_test
