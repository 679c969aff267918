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
/// Monte Carlo simulation of sequential projective measurements on a single
/// system: outcomes are sampled by the Born rule, the state is updated by
/// the projective (Lueders) rule P rho P / Tr[P rho], and the state is never
/// re-prepared between measurements. Estimators recover inner products and
/// angles from the stream of consecutive outcome products.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "qtc/correlation.hpp"
#include "qtc/operators.hpp"
#include "qtc/random.hpp"

namespace qtc {

/// Measurement plan: observables are assigned cyclically, step i (1-based)
/// measures observables[(i - 1) mod length]. The all-zero observable is
/// rejected: its only outcome is 0 and every estimator downstream divides by
/// outcome magnitudes.
class Schedule {
  public:
    Schedule(std::vector<HermitianOperator> observables, std::int64_t steps,
             std::vector<std::string> labels = {})
        : observables_(std::move(observables)), labels_(std::move(labels)), steps_(steps) {
        if (observables_.empty()) {
            throw std::invalid_argument("Schedule: need at least one observable");
        }
        if (steps_ < 2) {
            throw std::invalid_argument("Schedule: steps must be >= 2");
        }
        const int n = observables_.front().dim();
        for (const auto& op : observables_) {
            if (op.dim() != n) {
                throw std::invalid_argument("Schedule: observables have mixed matrix dimensions");
            }
            if (max_abs_entry(op.matrix()) <= tol::num) {
                throw std::invalid_argument("Schedule: zero observable has no usable outcomes");
            }
        }
        if (labels_.empty()) {
            for (std::size_t i = 0; i < observables_.size(); ++i)
                labels_.push_back("O" + std::to_string(i + 1));
        }
        if (labels_.size() != observables_.size()) {
            throw std::invalid_argument("Schedule: one label per observable");
        }
    }

    int length() const { return static_cast<int>(observables_.size()); }
    int matrix_dim() const { return observables_.front().dim(); }
    std::int64_t steps() const { return steps_; }
    int slot_of_step(std::int64_t step) const {
        return static_cast<int>((step - 1) % static_cast<std::int64_t>(observables_.size()));
    }
    const HermitianOperator& observable(int slot) const {
        return observables_[static_cast<std::size_t>(slot)];
    }
    const std::string& label(int slot) const { return labels_[static_cast<std::size_t>(slot)]; }

  private:
    std::vector<HermitianOperator> observables_;
    std::vector<std::string> labels_;
    std::int64_t steps_;
};

/// A realized run: outcome x_i of step i is an eigenvalue (cluster
/// representative) of the observable scheduled at that step.
struct OutcomeTrace {
    std::vector<double> outcomes;
    Schedule schedule;
    Seed seed;
    std::string initial_state_tag;
};

struct GeometryEstimate {
    double inner_product_hat = 0.0;
    double angle_hat = std::numeric_limits<double>::quiet_NaN();  // radians, [0, pi] when defined
    std::int64_t n_pairs = 0;
    double standard_error = 0.0;
};

struct Measurement {
    double outcome;
    DensityOperator post;
};

/// One projective measurement of a pre-decomposed observable: branch i is
/// drawn with probability Tr[P_i rho] (negatives within -tol::num clamped to
/// zero, then renormalized) and the post-measurement state is
/// P_i rho P_i / Tr[P_i rho].
inline Measurement measure_once(const DensityOperator& rho, const SpectralDecomposition& sd,
                                RandomStream& stream) {
    if (sd.dim != rho.dim()) {
        throw std::invalid_argument("measure_once: dimension mismatch");
    }
    const std::size_t branches = sd.eigenvalues.size();
    std::vector<double> probs(branches);
    double total = 0.0;
    for (std::size_t i = 0; i < branches; ++i) {
        double p = (sd.projectors[i] * rho.matrix()).trace().real();
        if (p < -tol::num) {
            throw std::logic_error("measure_once: branch probability " + std::to_string(p) +
                                   " below -tolerance");
        }
        probs[i] = std::max(p, 0.0);
        total += probs[i];
    }
    if (total < tol::num) {
        throw std::runtime_error("measure_once: all branch probabilities vanish (malformed state)");
    }

    const double u = stream.uniform01() * total;
    std::size_t pick = branches;  // last positive branch as fallback
    double cumulative = 0.0;
    for (std::size_t i = 0; i < branches; ++i) {
        if (probs[i] <= 0.0) continue;
        cumulative += probs[i];
        pick = i;
        if (u < cumulative) break;
    }

    CMatrix post = sd.projectors[pick] * rho.matrix() * sd.projectors[pick];
    post /= post.trace().real();
    return {sd.eigenvalues[pick], DensityOperator(std::move(post))};
}

inline Measurement measure_once(const DensityOperator& rho, const HermitianOperator& O,
                                RandomStream& stream) {
    return measure_once(rho, spectral_decompose(O), stream);
}

struct SequenceResult {
    OutcomeTrace trace;
    DensityOperator final_state;
};

/// Runs the schedule start to finish, threading the post-measurement state;
/// the state is never re-prepared. Deterministic given the seed.
inline SequenceResult run_sequence_full(const DensityOperator& rho0, const Schedule& schedule,
                                        Seed seed, std::string initial_state_tag = "") {
    if (rho0.dim() != schedule.matrix_dim()) {
        throw std::invalid_argument("run_sequence: state/schedule dimension mismatch");
    }
    std::vector<SpectralDecomposition> decomps;
    decomps.reserve(static_cast<std::size_t>(schedule.length()));
    for (int s = 0; s < schedule.length(); ++s) {
        decomps.push_back(spectral_decompose(schedule.observable(s)));
    }

    RandomStream stream(seed);
    OutcomeTrace trace{{}, schedule, seed, std::move(initial_state_tag)};
    trace.outcomes.reserve(static_cast<std::size_t>(schedule.steps()));
    DensityOperator state = rho0;
    for (std::int64_t step = 1; step <= schedule.steps(); ++step) {
        auto m = measure_once(state, decomps[static_cast<std::size_t>(schedule.slot_of_step(step))],
                              stream);
        trace.outcomes.push_back(m.outcome);
        state = std::move(m.post);
    }
    return {std::move(trace), std::move(state)};
}

inline OutcomeTrace run_sequence(const DensityOperator& rho0, const Schedule& schedule, Seed seed,
                                 std::string initial_state_tag = "") {
    return run_sequence_full(rho0, schedule, seed, std::move(initial_state_tag)).trace;
}

namespace detail {
inline void require_pair_estimator_input(const OutcomeTrace& trace) {
    if (trace.outcomes.size() < 2) {
        throw std::invalid_argument("estimator needs at least 2 outcomes");
    }
    if (trace.schedule.length() > 2) {
        throw std::invalid_argument(
            "estimator is defined for alternating (length <= 2) schedules");
    }
}

inline double pair_product_sum(const std::vector<double>& x) {
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) s += x[i] * x[i + 1];
    return s;
}
}  // namespace detail

/// Inner-product estimator sum_i x_i x_{i+1} / (N - 1) over the N - 1
/// consecutive outcome products. The standard error is the empirical
/// standard deviation of the products divided by sqrt(N - 1); consecutive
/// products share an outcome, so they are treated as exchangeable, not
/// independent.
inline GeometryEstimate estimate_inner_product(const OutcomeTrace& trace) {
    detail::require_pair_estimator_input(trace);
    const auto& x = trace.outcomes;
    const auto n_pairs = static_cast<std::int64_t>(x.size()) - 1;
    const double mean = detail::pair_product_sum(x) / static_cast<double>(n_pairs);

    double var = 0.0;
    if (n_pairs > 1) {
        for (std::size_t i = 0; i + 1 < x.size(); ++i) {
            const double dev = x[i] * x[i + 1] - mean;
            var += dev * dev;
        }
        var /= static_cast<double>(n_pairs - 1);
    }
    GeometryEstimate est;
    est.inner_product_hat = mean;
    est.n_pairs = n_pairs;
    est.standard_error = std::sqrt(var / static_cast<double>(n_pairs));
    return est;
}

/// Angle estimator acos(sum x_i x_{i+1} / ((N-1) |x_1 x_2|)), using that the
/// outcome magnitudes equal the observable norms. The acos argument is
/// clamped to [-1, 1] against sampling noise.
inline GeometryEstimate estimate_angle(const OutcomeTrace& trace) {
    GeometryEstimate est = estimate_inner_product(trace);
    const double mag = std::abs(trace.outcomes[0] * trace.outcomes[1]);
    if (mag <= tol::num) {
        throw std::domain_error("estimate_angle: zero outcome magnitude");
    }
    const double ratio = std::clamp(est.inner_product_hat / mag, -1.0, 1.0);
    est.angle_hat = std::acos(ratio);
    return est;
}

/// Runs an alternating schedule for every unordered pair of vectors and
/// assembles the estimated Gram matrix of their r . sigma observables;
/// diagonal entries come from single-observable schedules. The final state
/// of each run is the initial state of the next (one continuous experiment,
/// no re-preparation).
inline GramMatrix reconstruct_gram(const std::vector<Vector3>& vectors,
                                   const DensityOperator& rho0, std::int64_t steps_per_pair,
                                   Seed seed) {
    if (vectors.empty()) {
        throw std::invalid_argument("reconstruct_gram: need at least one vector");
    }
    for (const auto& v : vectors) {
        if (v.norm() <= tol::num) {
            throw std::invalid_argument("reconstruct_gram: zero vector has no usable outcomes");
        }
    }
    if (rho0.dim() != 2) {
        throw std::invalid_argument("reconstruct_gram: initial state must be a qubit state");
    }

    const auto k = static_cast<int>(vectors.size());
    RMatrix entries(k, k);
    DensityOperator state = rho0;
    std::uint64_t run_index = 0;
    for (int i = 0; i < k; ++i) {
        for (int j = i; j < k; ++j) {
            std::vector<HermitianOperator> obs;
            std::vector<std::string> labels;
            obs.push_back(dot_sigma(vectors[static_cast<std::size_t>(i)]));
            labels.push_back("v" + std::to_string(i + 1));
            if (j != i) {
                obs.push_back(dot_sigma(vectors[static_cast<std::size_t>(j)]));
                labels.push_back("v" + std::to_string(j + 1));
            }
            const Schedule schedule(std::move(obs), steps_per_pair, std::move(labels));
            auto result = run_sequence_full(state, schedule, split_seed(seed, run_index++),
                                            "threaded:pair(" + std::to_string(i + 1) + "," +
                                                std::to_string(j + 1) + ")");
            const auto est = estimate_inner_product(result.trace);
            entries(i, j) = est.inner_product_hat;
            entries(j, i) = est.inner_product_hat;
            state = std::move(result.final_state);
        }
    }
    return GramMatrix{std::move(entries), "sequential-threaded"};
}

}  // namespace qtc
