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
/// Gamma-spaces: subspaces of observables admitting a basis of mutually
/// anticommuting Hermitian involutions ({O_i, O_j} = 2 delta_ij 1). Provides
/// the standard bases, the algebraic predicates, and a constructive decision
/// procedure for whether a subspace is a gamma-space.
///
/// decide_gamma_space refutes by sampling states (including extremal pure
/// ones), but a positive verdict is certified deterministically: the
/// returned witness basis satisfies the anticommutation relations up to
/// tol::gamma regardless of how the states were drawn.

#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "qtc/correlation.hpp"
#include "qtc/operators.hpp"
#include "qtc/random.hpp"
#include "qtc/subspace.hpp"

namespace qtc {

enum class GammaFailure {
    none,
    not_inner_product,
    state_dependent,
    basis_not_dichotomic,
    anticommutator_violation,
};

inline const char* to_string(GammaFailure f) {
    switch (f) {
        case GammaFailure::none: return "none";
        case GammaFailure::not_inner_product: return "not-inner-product";
        case GammaFailure::state_dependent: return "state-dependent";
        case GammaFailure::basis_not_dichotomic: return "basis-not-dichotomic";
        case GammaFailure::anticommutator_violation: return "anticommutator-violation";
    }
    return "unknown";
}

struct GammaVerdict {
    bool is_gamma = false;
    std::optional<std::vector<HermitianOperator>> witness_basis;
    /// Max anticommutator residual ||{O_i, O_j} - 2 delta_ij 1||_2 of the
    /// witness basis when one exists, of the input basis otherwise.
    double max_residual = 0.0;
    GammaFailure failure_reason = GammaFailure::none;
};

/// Operator 2-norm of a Hermitian matrix (max |eigenvalue|).
inline double hermitian_norm(const CMatrix& m) {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(m, Eigen::EigenvaluesOnly);
    const auto& evs = es.eigenvalues();
    return std::max(std::abs(evs(0)), std::abs(evs(evs.size() - 1)));
}

/// max over pairs i <= j of ||{O_i, O_j} - 2 delta_ij 1||_2.
inline double anticommutator_residual(const std::vector<HermitianOperator>& ops) {
    if (ops.empty()) return 0.0;
    const int n = ops.front().dim();
    const CMatrix id2 = 2.0 * CMatrix::Identity(n, n);
    double worst = 0.0;
    for (std::size_t i = 0; i < ops.size(); ++i) {
        for (std::size_t j = i; j < ops.size(); ++j) {
            CMatrix anti = ops[i].matrix() * ops[j].matrix() + ops[j].matrix() * ops[i].matrix();
            if (i == j) anti -= id2;
            worst = std::max(worst, hermitian_norm(anti));
        }
    }
    return worst;
}

/// {sigma_x, sigma_y, sigma_z} on one qubit.
inline ObservableSubspace pauli_basis() {
    return ObservableSubspace({pauli_x(), pauli_y(), pauli_z()}, {"X", "Y", "Z"});
}

/// d mutually anticommuting Hermitian involutions, 1 <= d <= 5: the first d
/// Pauli matrices for d <= 3 (2x2), and for d in {4, 5} the 4x4 family
/// {XX, XY, XZ, ZI, YI}.
inline ObservableSubspace standard_gamma_basis(int d) {
    if (d < 1 || d > 5) {
        throw std::invalid_argument("standard_gamma_basis: d must be in 1..5, got " +
                                    std::to_string(d));
    }
    if (d <= 3) {
        std::vector<HermitianOperator> ops{pauli_x(), pauli_y(), pauli_z()};
        std::vector<std::string> labels{"X", "Y", "Z"};
        ops.erase(ops.begin() + d, ops.end());
        labels.erase(labels.begin() + d, labels.end());
        return ObservableSubspace(std::move(ops), std::move(labels));
    }
    const CMatrix x = pauli_x().matrix();
    const CMatrix y = pauli_y().matrix();
    const CMatrix z = pauli_z().matrix();
    const CMatrix id = CMatrix::Identity(2, 2);
    std::vector<HermitianOperator> ops;
    ops.emplace_back(kron(x, x));
    ops.emplace_back(kron(x, y));
    ops.emplace_back(kron(x, z));
    ops.emplace_back(kron(z, id));
    std::vector<std::string> labels{"XX", "XY", "XZ", "ZI"};
    if (d == 5) {
        ops.emplace_back(kron(y, id));
        labels.push_back("YI");
    }
    return ObservableSubspace(std::move(ops), std::move(labels));
}

/// True iff all pairwise anticommutators satisfy the gamma-basis relations
/// within tol::gamma; the max residual is always returned.
inline std::pair<bool, double> is_gamma_basis(const ObservableSubspace& S) {
    const double residual = anticommutator_residual(S.basis());
    return {residual <= tol::gamma, residual};
}

/// True iff the clustered spectrum is exactly {-1, +1}.
inline bool is_dichotomic(const HermitianOperator& O) {
    const auto sd = spectral_decompose(O);
    return sd.eigenvalues.size() == 2 && std::abs(sd.eigenvalues[0] + 1.0) <= tol::gamma &&
           std::abs(sd.eigenvalues[1] - 1.0) <= tol::gamma;
}

/// Decides whether span(S) is a gamma-space, mirroring the constructive
/// argument: (a) sample `trials` states and verify E_rho is symmetric,
/// bilinear, state-independent and positive-definite on S; (b) orthonormalize
/// the basis with respect to the empirical inner product of the first sampled
/// state; (c) check every orthonormal element is dichotomic; (d) check every
/// pairwise sum (O_i + O_j)/sqrt(2) is dichotomic; (e) certify the
/// anticommutation relations of the orthonormal basis, which becomes the
/// witness.
inline GammaVerdict decide_gamma_space(const ObservableSubspace& S, int trials, Seed seed) {
    if (trials < 2) {
        throw std::invalid_argument(
            "decide_gamma_space: trials must be >= 2 to test state independence");
    }
    const int d = S.dim_space();

    const auto states = detail::sample_states(S.matrix_dim(), trials, seed);
    const auto survey = detail::survey_inner_product(S, states, seed);
    const InnerProductReport& rep = survey.report;

    const auto fail = [&](GammaFailure reason) {
        GammaVerdict v;
        v.is_gamma = false;
        v.failure_reason = reason;
        v.max_residual = anticommutator_residual(S.basis());
        return v;
    };

    if (rep.max_asymmetry > tol::gamma) return fail(GammaFailure::not_inner_product);
    if (rep.max_bilinearity_residual > tol::gamma) return fail(GammaFailure::not_inner_product);
    // State independence must be settled before positive-definiteness: a
    // state-dependent form can be singular for some sampled pure state, and
    // the informative verdict is the dependence itself.
    if (rep.max_state_dependence > tol::gamma) return fail(GammaFailure::state_dependent);
    if (rep.min_gram_eigenvalue <= tol::rank) return fail(GammaFailure::not_inner_product);

    // (b) Gram-Schmidt with respect to B(X, Y) = E_rho1(X, Y).
    const DensityOperator& rho1 = states.front().rho;
    const auto form = [&](const HermitianOperator& a, const HermitianOperator& b) {
        return two_time_correlation(a, b, rho1);
    };
    std::vector<HermitianOperator> ortho;
    ortho.reserve(static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k) {
        HermitianOperator v = S.element(k);
        for (const auto& w : ortho) v = v - form(w, v) * w;
        const double norm2 = form(v, v);
        if (norm2 <= tol::rank) return fail(GammaFailure::not_inner_product);
        ortho.push_back(v * (1.0 / std::sqrt(norm2)));
    }

    // (c) + (d) dichotomy of the orthonormal elements and of their pairwise
    // normalized sums.
    for (const auto& w : ortho) {
        if (!is_dichotomic(w)) return fail(GammaFailure::basis_not_dichotomic);
    }
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (std::size_t i = 0; i < ortho.size(); ++i) {
        for (std::size_t j = i + 1; j < ortho.size(); ++j) {
            if (!is_dichotomic((ortho[i] + ortho[j]) * inv_sqrt2)) {
                return fail(GammaFailure::basis_not_dichotomic);
            }
        }
    }

    // (e) the deterministic certificate.
    const double residual = anticommutator_residual(ortho);
    GammaVerdict v;
    v.max_residual = residual;
    if (residual > tol::gamma) {
        v.is_gamma = false;
        v.failure_reason = GammaFailure::anticommutator_violation;
        return v;
    }
    v.is_gamma = true;
    v.failure_reason = GammaFailure::none;
    v.witness_basis = std::move(ortho);
    return v;
}

}  // namespace qtc
