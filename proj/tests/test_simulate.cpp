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

#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "helpers.hpp"
#include "oracles.hpp"
#include "qtc/correlation.hpp"
#include "qtc/io.hpp"
#include "qtc/simulate.hpp"

using namespace qtc;
using qtc_test::mat2;
using qtc_test::max_abs_diff;

namespace {

Schedule alternating(const Vector3& r, const Vector3& s, std::int64_t steps) {
    return Schedule({dot_sigma(r), dot_sigma(s)}, steps, {"r", "s"});
}

}  // namespace

TEST_CASE("measure_once: eigenstate is deterministic and fixed") {
    const auto rho = DensityOperator::pure_basis_state(2, 0);
    RandomStream stream(Seed{1});
    for (int i = 0; i < 20; ++i) {
        const auto m = measure_once(rho, pauli_z(), stream);
        CHECK(m.outcome == Catch::Approx(1.0).margin(1e-12));
        CHECK(max_abs_diff(m.post.matrix(), rho.matrix()) < 1e-12);
    }
}

TEST_CASE("measure_once: Born rule for sigma_x on |0><0|") {
    const auto rho = DensityOperator::pure_basis_state(2, 0);
    RandomStream stream(Seed{2});
    int plus = 0;
    const int reps = 4000;
    for (int i = 0; i < reps; ++i) {
        const auto m = measure_once(rho, pauli_x(), stream);
        CHECK(std::abs(std::abs(m.outcome) - 1.0) < 1e-12);
        if (m.outcome > 0) ++plus;
        // Post state is the eigenprojector of the observed branch.
        const CMatrix expect =
            0.5 * (CMatrix::Identity(2, 2) + m.outcome * pauli_x().matrix());
        CHECK(max_abs_diff(m.post.matrix(), expect) < 1e-10);
    }
    CHECK(std::abs(plus / static_cast<double>(reps) - 0.5) < 0.05);
}

TEST_CASE("measure_once: scaled observable yields +-2") {
    const auto rho = DensityOperator::maximally_mixed(2);
    RandomStream stream(Seed{3});
    int plus = 0;
    const int reps = 4000;
    for (int i = 0; i < reps; ++i) {
        const auto m = measure_once(rho, pauli_z() * 2.0, stream);
        CHECK(std::abs(std::abs(m.outcome) - 2.0) < 1e-12);
        if (m.outcome > 0) ++plus;
    }
    CHECK(std::abs(plus / static_cast<double>(reps) - 0.5) < 0.05);
}

TEST_CASE("run_sequence: repeated measurement locks the outcome") {
    const Schedule sched({pauli_x()}, 100, {"x"});
    const auto trace = run_sequence(DensityOperator::maximally_mixed(2), sched, Seed{4});
    REQUIRE(trace.outcomes.size() == 100);
    for (std::size_t i = 1; i < trace.outcomes.size(); ++i) {
        CHECK(trace.outcomes[i] == trace.outcomes[1]);
    }
}

TEST_CASE("run_sequence: sigma_z steps after sigma_x are unbiased") {
    const std::int64_t n = 10000;
    const Schedule sched({pauli_x(), pauli_z()}, n, {"x", "z"});
    const auto trace = run_sequence(DensityOperator::pure_basis_state(2, 0), sched, Seed{5});

    std::int64_t plus = 0, count = 0;
    for (std::size_t i = 1; i < trace.outcomes.size(); i += 2) {  // 0-based odd = sigma_z steps
        ++count;
        if (trace.outcomes[i] > 0) ++plus;
    }
    const double freq = plus / static_cast<double>(count);
    CHECK(std::abs(freq - 0.5) < 0.02);

    const auto oracle = qtc_test::oracle_alternating_chain(
        pauli_x().matrix(), pauli_z().matrix(),
        DensityOperator::pure_basis_state(2, 0).matrix(), n);
    CHECK(oracle.slot2_plus_frequency == Catch::Approx(0.5).margin(1e-12));
    CHECK(std::abs(freq - oracle.slot2_plus_frequency) < 0.02);
}

TEST_CASE("run_sequence is deterministic given the seed") {
    const auto sched = alternating({1, 0, 0}, {0, 0, 1}, 500);
    const auto a = run_sequence(DensityOperator::maximally_mixed(2), sched, Seed{6});
    const auto b = run_sequence(DensityOperator::maximally_mixed(2), sched, Seed{6});
    CHECK(a.outcomes == b.outcomes);
    const auto c = run_sequence(DensityOperator::maximally_mixed(2), sched, Seed{7});
    CHECK(a.outcomes != c.outcomes);
}

TEST_CASE("Schedule validation") {
    CHECK_THROWS_AS(Schedule({}, 10), std::invalid_argument);
    CHECK_THROWS_AS(Schedule({pauli_x()}, 1), std::invalid_argument);
    CHECK_THROWS_AS(Schedule({pauli_x(), identity_op(4)}, 10), std::invalid_argument);
    CHECK_THROWS_AS(Schedule({HermitianOperator(CMatrix::Zero(2, 2))}, 10),
                    std::invalid_argument);
}

TEST_CASE("estimate_inner_product: parallel unit vectors give exactly 1") {
    const auto trace = run_sequence(DensityOperator::maximally_mixed(2),
                                    alternating({1, 0, 0}, {1, 0, 0}, 100), Seed{8});
    const auto est = estimate_inner_product(trace);
    CHECK(est.inner_product_hat == 1.0);
    CHECK(est.standard_error == 0.0);
    CHECK(est.n_pairs == 99);
}

TEST_CASE("estimate_inner_product: orthogonal and oblique directions") {
    const std::int64_t n = 100000;
    const auto t1 = run_sequence(DensityOperator::maximally_mixed(2),
                                 alternating({1, 0, 0}, {0, 0, 1}, n), Seed{9});
    CHECK(std::abs(estimate_inner_product(t1).inner_product_hat) < 0.02);

    const auto t2 = run_sequence(DensityOperator::pure_basis_state(2, 0),
                                 alternating({1, 0, 0}, {0.5, 0.0, std::sqrt(3.0) / 2.0}, n),
                                 Seed{10});
    CHECK(std::abs(estimate_inner_product(t2).inner_product_hat - 0.5) < 0.02);
}

TEST_CASE("estimate_inner_product input contract") {
    const Schedule sched({pauli_x(), pauli_y(), pauli_z()}, 9);
    const auto trace = run_sequence(DensityOperator::maximally_mixed(2), sched, Seed{11});
    CHECK_THROWS_AS(estimate_inner_product(trace), std::invalid_argument);

    OutcomeTrace tiny{{1.0}, alternating({1, 0, 0}, {0, 0, 1}, 2), Seed{0}, ""};
    CHECK_THROWS_AS(estimate_inner_product(tiny), std::invalid_argument);
}

TEST_CASE("estimate_angle: parallel vectors give angle 0 exactly") {
    const auto trace = run_sequence(DensityOperator::maximally_mixed(2),
                                    alternating({0, 1, 0}, {0, 1, 0}, 100), Seed{12});
    CHECK(estimate_angle(trace).angle_hat == 0.0);
}

TEST_CASE("estimate_angle: non-unit vectors normalize by |x1 x2|") {
    const std::int64_t n = 200000;
    const auto trace = run_sequence(DensityOperator::maximally_mixed(2),
                                    alternating({2, 0, 0}, {1, 1, 0}, n), Seed{13});
    CHECK(std::abs(trace.outcomes[0]) == Catch::Approx(2.0).margin(1e-12));
    CHECK(std::abs(trace.outcomes[1]) == Catch::Approx(std::sqrt(2.0)).margin(1e-12));
    const auto est = estimate_angle(trace);
    CHECK(std::abs(est.angle_hat - M_PI / 4.0) < 0.02);
}

TEST_CASE("estimate_angle: zero outcome magnitude is a domain error") {
    // diag(1, 0) measured on |1><1| yields outcome 0 with certainty.
    const Schedule sched({HermitianOperator(mat2(1, 0, 0, 0)), pauli_z()}, 10, {"p0", "z"});
    const auto trace = run_sequence(DensityOperator::pure_basis_state(2, 1), sched, Seed{14});
    REQUIRE(trace.outcomes[0] == 0.0);
    CHECK_THROWS_AS(estimate_angle(trace), std::domain_error);
}

TEST_CASE("property: outcome magnitudes equal the vector norm") {
    RandomStream stream(Seed{15});
    const Vector3 r(stream.uniform(-2, 2), stream.uniform(-2, 2), stream.uniform(-2, 2));
    const Schedule sched({dot_sigma(r)}, 500, {"r"});
    const auto trace = run_sequence(random_density(2, stream), sched, Seed{16});
    for (double x : trace.outcomes) {
        CHECK(std::abs(std::abs(x) - r.norm()) < tol::num);
    }
}

TEST_CASE("property: swapping the roles of r and s changes nothing beyond noise") {
    const std::int64_t n = 100000;
    const Vector3 r(1, 0, 0), s(0.5, 0.0, std::sqrt(3.0) / 2.0);
    const auto a = estimate_inner_product(
        run_sequence(DensityOperator::maximally_mixed(2), alternating(r, s, n), Seed{17}));
    const auto b = estimate_inner_product(
        run_sequence(DensityOperator::maximally_mixed(2), alternating(s, r, n), Seed{18}));
    const double combined = std::sqrt(a.standard_error * a.standard_error +
                                      b.standard_error * b.standard_error);
    CHECK(std::abs(a.inner_product_hat - b.inner_product_hat) < 5.0 * combined + 1e-3);
}

TEST_CASE("property: estimator mean over 50 seeds tracks the exact correlation") {
    const Vector3 r(0.0, 0.6, 0.8), s(1.0, 0.0, 0.0);
    const auto rho0 = random_density(2, Seed{19});
    const double exact = two_time_correlation(dot_sigma(r), dot_sigma(s), rho0);

    const int runs = 50;
    const std::int64_t n = 10000;
    double sum = 0.0, sum2 = 0.0;
    for (int k = 0; k < runs; ++k) {
        const auto est = estimate_inner_product(
            run_sequence(rho0, alternating(r, s, n), split_seed(Seed{20}, static_cast<std::uint64_t>(k))));
        sum += est.inner_product_hat;
        sum2 += est.inner_product_hat * est.inner_product_hat;
    }
    const double mean = sum / runs;
    const double spread = std::sqrt((sum2 / runs - mean * mean) / runs);
    CHECK(std::abs(mean - exact) < 4.0 * spread);
}

TEST_CASE("property: estimates are independent of the initial state") {
    const std::int64_t n = 1000000;
    const Vector3 r(1, 0, 0), s(0.5, 0.0, std::sqrt(3.0) / 2.0);
    const auto a = estimate_inner_product(run_sequence(
        DensityOperator::pure_basis_state(2, 0), alternating(r, s, n), Seed{21}));
    const auto b = estimate_inner_product(run_sequence(
        DensityOperator::maximally_mixed(2), alternating(r, s, n), Seed{22}));
    const double combined = std::sqrt(a.standard_error * a.standard_error +
                                      b.standard_error * b.standard_error);
    CHECK(std::abs(a.inner_product_hat - b.inner_product_hat) <= 3.0 * (combined + 1e-3));
}

TEST_CASE("property: empirical pair products match the exact chain distribution") {
    const std::int64_t n = 100000;
    const Vector3 r(1, 0, 0), s(0.5, 0.0, std::sqrt(3.0) / 2.0);
    const auto rho0 = DensityOperator::maximally_mixed(2);
    const auto trace = run_sequence(rho0, alternating(r, s, n), Seed{23});

    std::int64_t positive = 0;
    for (std::size_t i = 0; i + 1 < trace.outcomes.size(); ++i) {
        if (trace.outcomes[i] * trace.outcomes[i + 1] > 0) ++positive;
    }
    const double freq = positive / static_cast<double>(n - 1);

    const auto oracle = qtc_test::oracle_alternating_chain(
        dot_sigma(r).matrix(), dot_sigma(s).matrix(), rho0.matrix(), n);
    CHECK(std::abs(freq - oracle.positive_pair_frequency) < 5.0 / std::sqrt(static_cast<double>(n)));
    CHECK(std::abs(estimate_inner_product(trace).inner_product_hat - oracle.mean_pair_product) <
          5.0 / std::sqrt(static_cast<double>(n)));
}

TEST_CASE("reconstruct_gram: standard basis estimates the identity") {
    const std::vector<Vector3> basis{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    const auto g = reconstruct_gram(basis, DensityOperator::maximally_mixed(2), 10000, Seed{24});
    CHECK((g.entries - RMatrix::Identity(3, 3)).cwiseAbs().maxCoeff() < 0.06);
}

TEST_CASE("reconstruct_gram: duplicated vector gives an exact unit entry") {
    const std::vector<Vector3> vs{{1, 0, 0}, {1, 0, 0}};
    const auto g = reconstruct_gram(vs, DensityOperator::maximally_mixed(2), 1000, Seed{25});
    CHECK(g.entries(0, 1) == 1.0);
    CHECK(g.entries(1, 0) == 1.0);
}

TEST_CASE("reconstruct_gram: scaled vectors scale the diagonal") {
    const std::vector<Vector3> vs{{2, 0, 0}, {0, 1, 0}};
    const std::int64_t n = 100000;
    const auto g = reconstruct_gram(vs, DensityOperator::maximally_mixed(2), n, Seed{26});
    CHECK(g.entries(0, 0) == Catch::Approx(4.0).margin(1e-9));
    CHECK(g.entries(1, 1) == Catch::Approx(1.0).margin(1e-9));
    CHECK(std::abs(g.entries(0, 1)) < 5.0 * 2.0 / std::sqrt(static_cast<double>(n)));
}

TEST_CASE("reconstruct_gram rejects zero vectors") {
    CHECK_THROWS_AS(
        reconstruct_gram({{0, 0, 0}}, DensityOperator::maximally_mixed(2), 100, Seed{0}),
        std::invalid_argument);
}

TEST_CASE("trace CSV export format") {
    OutcomeTrace trace{{1.0, -0.5}, alternating({1, 0, 0}, {0, 0, 1}, 2), Seed{3}, "test"};
    std::ostringstream os;
    write_trace_csv(trace, os);
    CHECK(os.str() == "step,observable_label,outcome\n1,r,1\n2,s,-0.5\n");
}

TEST_CASE("estimate JSON export carries all fields at full precision") {
    GeometryEstimate est;
    est.inner_product_hat = 0.1;  // not exactly representable: checks 17-digit output
    est.angle_hat = M_PI / 3.0;
    est.n_pairs = 99;
    est.standard_error = 0.25;
    const std::string text = estimate_json(est, Seed{77});
    CHECK(text ==
          "{\"inner_product_hat\":0.10000000000000001,"
          "\"angle_hat\":1.0471975511965976,"
          "\"standard_error\":0.25,"
          "\"n_pairs\":99,"
          "\"seed\":77}");
}
