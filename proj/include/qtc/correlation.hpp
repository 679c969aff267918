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
/// The two-time correlation function of sequential projective measurements
/// and its derived quantities.
///
/// E_rho(O1, O2) is the expected product of outcomes when O1 is measured
/// first on state rho (with the projective state update) and O2 second, with
/// no evolution in between:
///
///     E_rho(O1, O2) = sum_i lambda_i Tr[P_i rho P_i O2]
///
/// over the distinct-eigenvalue decomposition O1 = sum_i lambda_i P_i. The
/// first argument is always the first-measured observable.

#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "qtc/operators.hpp"
#include "qtc/random.hpp"
#include "qtc/subspace.hpp"

namespace qtc {

/// E_rho(O1, O2), evaluated exactly from the clustered spectral
/// decomposition of the first-measured observable. Any spectrum is accepted.
inline double two_time_correlation(const HermitianOperator& first,
                                   const HermitianOperator& second, const DensityOperator& rho) {
    if (first.dim() != second.dim() || first.dim() != rho.dim()) {
        throw std::invalid_argument("two_time_correlation: dimension mismatch");
    }
    const auto sd = spectral_decompose(first);
    Complex total(0.0, 0.0);
    for (std::size_t i = 0; i < sd.eigenvalues.size(); ++i) {
        total += sd.eigenvalues[i] *
                 (sd.projectors[i] * rho.matrix() * sd.projectors[i] * second.matrix()).trace();
    }
    if (std::abs(total.imag()) > tol::num * std::max(1.0, std::abs(total.real()))) {
        throw std::logic_error("two_time_correlation: trace has non-negligible imaginary part " +
                               std::to_string(total.imag()));
    }
    return total.real();
}

/// Fast path E_rho(O, P) = Tr[rho {O, P}] / 2, valid only when the spectrum
/// of O is {-lambda, +lambda}; other spectra are a domain error.
inline double anticommutator_correlation(const HermitianOperator& O, const HermitianOperator& P,
                                         const DensityOperator& rho) {
    if (O.dim() != P.dim() || O.dim() != rho.dim()) {
        throw std::invalid_argument("anticommutator_correlation: dimension mismatch");
    }
    const auto sd = spectral_decompose(O);
    if (!two_valued_spectrum_level(sd)) {
        throw std::domain_error(
            "anticommutator_correlation: spectrum of the first observable is not {-lambda, "
            "+lambda}");
    }
    const CMatrix anti = O.matrix() * P.matrix() + P.matrix() * O.matrix();
    return 0.5 * (rho.matrix() * anti).trace().real();
}

/// E_rho(O, O) = Tr[rho O^2]; the independent identity used as an oracle for
/// the diagonal of the correlation function.
inline double self_correlation_identity(const HermitianOperator& O, const DensityOperator& rho) {
    if (O.dim() != rho.dim()) {
        throw std::invalid_argument("self_correlation_identity: dimension mismatch");
    }
    return (rho.matrix() * O.matrix() * O.matrix()).trace().real();
}

/// Pairwise correlation values over a basis. Row index is the first-measured
/// observable. Asymmetry is intentionally preserved: it is the diagnostic
/// signal, never corrected here.
struct GramMatrix {
    RMatrix entries;
    std::string state_tag;

    int dim_space() const { return static_cast<int>(entries.rows()); }
};

inline GramMatrix gram_matrix(const ObservableSubspace& S, const DensityOperator& rho,
                              std::string state_tag = "") {
    const int d = S.dim_space();
    RMatrix g(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            g(i, j) = two_time_correlation(S.element(i), S.element(j), rho);
    return GramMatrix{std::move(g), std::move(state_tag)};
}

/// Inner-product diagnostics of E_rho on a subspace, sampled over `trials`
/// states (Hilbert-Schmidt mixed and Haar pure alternating).
struct InnerProductReport {
    double max_asymmetry = 0.0;            ///< max_ij |G_ij - G_ji| over states
    double max_state_dependence = 0.0;     ///< max_ij spread of G_ij across states
    double min_gram_eigenvalue = 0.0;      ///< over symmetrized Grams of all states
    double max_bilinearity_residual = 0.0; ///< first-argument linearity defect
    int trials = 0;
};

namespace detail {

struct StateSample {
    DensityOperator rho;
    std::string tag;
};

/// trials >= 2 states: even k Hilbert-Schmidt mixed, odd k Haar pure, each
/// from sub-seed k of the master seed.
inline std::vector<StateSample> sample_states(int matrix_dim, int trials, Seed seed) {
    if (trials < 2) {
        throw std::invalid_argument("state sampling needs trials >= 2");
    }
    std::vector<StateSample> out;
    out.reserve(static_cast<std::size_t>(trials));
    for (int k = 0; k < trials; ++k) {
        const Seed sub = split_seed(seed, static_cast<std::uint64_t>(k));
        if (k % 2 == 0) {
            out.push_back({random_density(matrix_dim, sub), "hs-mixed:" + std::to_string(k)});
        } else {
            out.push_back({random_pure_density(matrix_dim, sub), "haar-pure:" + std::to_string(k)});
        }
    }
    return out;
}

struct GramSurvey {
    std::vector<GramMatrix> grams;  // one per state, same order as states
    InnerProductReport report;
};

inline GramSurvey survey_inner_product(const ObservableSubspace& S,
                                       const std::vector<StateSample>& states, Seed seed) {
    const int d = S.dim_space();
    GramSurvey out;
    out.report.trials = static_cast<int>(states.size());
    out.grams.reserve(states.size());
    for (const auto& st : states) out.grams.push_back(gram_matrix(S, st.rho, st.tag));

    double min_eig = std::numeric_limits<double>::infinity();
    double max_asym = 0.0;
    for (const auto& g : out.grams) {
        const RMatrix skew = g.entries - g.entries.transpose();
        max_asym = std::max(max_asym, skew.cwiseAbs().maxCoeff());
        const RMatrix sym = 0.5 * (g.entries + g.entries.transpose());
        Eigen::SelfAdjointEigenSolver<RMatrix> es(sym, Eigen::EigenvaluesOnly);
        min_eig = std::min(min_eig, es.eigenvalues()(0));
    }
    out.report.max_asymmetry = max_asym;
    out.report.min_gram_eigenvalue = min_eig;

    double spread = 0.0;
    for (std::size_t a = 0; a + 1 < out.grams.size(); ++a)
        for (std::size_t b = a + 1; b < out.grams.size(); ++b) {
            const RMatrix diff = out.grams[a].entries - out.grams[b].entries;
            spread = std::max(spread, diff.cwiseAbs().maxCoeff());
        }
    out.report.max_state_dependence = spread;

    // First-argument linearity on random combinations: compare
    // E(sum_i a_i O_i, O_j) against sum_i a_i E(O_i, O_j). Linearity in the
    // second argument is automatic from the trace.
    RandomStream coeff_stream{seed};
    double max_bilin = 0.0;
    std::vector<double> coeffs(static_cast<std::size_t>(d));
    constexpr int kCombos = 4;
    for (std::size_t s = 0; s < states.size(); ++s) {
        const GramMatrix& g = out.grams[s];
        for (int rep = 0; rep < kCombos; ++rep) {
            for (auto& c : coeffs) c = coeff_stream.uniform(-1.0, 1.0);
            const HermitianOperator combo = S.combine(coeffs);
            for (int j = 0; j < d; ++j) {
                const double direct = two_time_correlation(combo, S.element(j), states[s].rho);
                double expanded = 0.0;
                for (int i = 0; i < d; ++i) expanded += coeffs[static_cast<std::size_t>(i)] * g.entries(i, j);
                max_bilin = std::max(max_bilin, std::abs(direct - expanded));
            }
        }
    }
    out.report.max_bilinearity_residual = max_bilin;
    return out;
}

}  // namespace detail

/// Sampled verification that E_rho looks like a state-independent inner
/// product on S: returns the four residual statistics, never a verdict.
inline InnerProductReport inner_product_report(const ObservableSubspace& S, int trials, Seed seed) {
    const auto states = detail::sample_states(S.matrix_dim(), trials, seed);
    return detail::survey_inner_product(S, states, split_seed(seed, 0xC0FFEE)).report;
}

}  // namespace qtc
