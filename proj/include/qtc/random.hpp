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

/// \file
/// Seeded, reproducible randomness.
///
/// The generator is std::mt19937_64 (bit-exact by the standard); uniform and
/// normal variates are derived from raw 64-bit draws with fixed arithmetic,
/// so identical seeds give identical streams on every platform.
///
/// Stream splitting: sub-stream k of master seed s is seeded with
/// split_seed(s, k) = splitmix64(s XOR golden_gamma * (k + 1)). Parallel
/// loops draw their per-iteration seeds this way instead of sharing one
/// stream.

#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "qtc/operators.hpp"

namespace qtc {

struct Seed {
    std::uint64_t value = 0;
};

namespace detail {
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}
}  // namespace detail

/// Deterministic sub-seed for stream k: hash(seed, k).
inline Seed split_seed(Seed master, std::uint64_t k) {
    return Seed{detail::splitmix64(master.value ^ (0x9E3779B97F4A7C15ULL * (k + 1)))};
}

class RandomStream {
  public:
    explicit RandomStream(Seed seed) : engine_(seed.value) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform in [0, 1), 53-bit resolution.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Standard normal via Box-Muller (pairs cached).
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double u1 = 1.0 - uniform01();  // (0, 1]
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * M_PI * u2;
        spare_ = r * std::sin(a);
        has_spare_ = true;
        return r * std::cos(a);
    }

    Complex complex_normal() {
        const double re = normal();
        const double im = normal();
        return {re, im};
    }

  private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

/// Matrix with i.i.d. standard complex Gaussian entries.
inline CMatrix ginibre_matrix(int dim, RandomStream& stream) {
    CMatrix g(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) g(i, j) = stream.complex_normal();
    return g;
}

/// Hilbert-Schmidt-distributed mixed state G G^dagger / Tr(G G^dagger).
inline DensityOperator random_density(int dim, RandomStream& stream) {
    if (dim == 1) return DensityOperator(CMatrix::Identity(1, 1));
    const CMatrix g = ginibre_matrix(dim, stream);
    CMatrix m = g * g.adjoint();
    m /= m.trace().real();
    return DensityOperator(std::move(m));
}

inline DensityOperator random_density(int dim, Seed seed) {
    RandomStream stream(seed);
    return random_density(dim, stream);
}

/// Haar-random pure state |psi><psi|.
inline DensityOperator random_pure_density(int dim, RandomStream& stream) {
    Eigen::VectorXcd psi(dim);
    for (int i = 0; i < dim; ++i) psi(i) = stream.complex_normal();
    psi /= psi.norm();
    return DensityOperator(psi * psi.adjoint());
}

inline DensityOperator random_pure_density(int dim, Seed seed) {
    RandomStream stream(seed);
    return random_pure_density(dim, stream);
}

/// GUE-like random Hermitian matrix (G + G^dagger) / 2, entries O(1).
inline HermitianOperator random_hermitian(int dim, RandomStream& stream) {
    const CMatrix g = ginibre_matrix(dim, stream);
    return HermitianOperator(0.5 * (g + g.adjoint()));
}

/// Haar-random unitary: QR of a Ginibre matrix with the R-diagonal phases
/// folded into Q.
inline CMatrix random_unitary(int dim, RandomStream& stream) {
    const CMatrix g = ginibre_matrix(dim, stream);
    Eigen::HouseholderQR<CMatrix> qr(g);
    CMatrix q = qr.householderQ();
    const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int i = 0; i < dim; ++i) {
        const Complex rii = r(i, i);
        const double mag = std::abs(rii);
        if (mag > 0.0) q.col(i) *= rii / mag;
    }
    return q;
}

}  // namespace qtc
