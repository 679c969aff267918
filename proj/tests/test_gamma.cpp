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

#include "helpers.hpp"
#include "qtc/gamma.hpp"

using namespace qtc;
using qtc_test::max_abs_diff;

TEST_CASE("pauli_basis: anticommuting traceless involutions") {
    const auto S = pauli_basis();
    REQUIRE(S.dim_space() == 3);
    const CMatrix xy = S.element(0).matrix() * S.element(1).matrix() +
                       S.element(1).matrix() * S.element(0).matrix();
    CHECK(xy.cwiseAbs().maxCoeff() == 0.0);
    for (int i = 0; i < 3; ++i) {
        CHECK(max_abs_diff(S.element(i).matrix() * S.element(i).matrix(),
                           CMatrix::Identity(2, 2)) == 0.0);
        CHECK(std::abs(S.element(i).matrix().trace()) == 0.0);
    }
}

TEST_CASE("standard_gamma_basis: d=3 is the Pauli basis") {
    const auto S = standard_gamma_basis(3);
    const auto P = pauli_basis();
    for (int i = 0; i < 3; ++i) CHECK(max_abs_diff(S.element(i).matrix(), P.element(i).matrix()) == 0.0);
}

TEST_CASE("standard_gamma_basis: d=4 residual vanishes (direct multiplication)") {
    const auto S = standard_gamma_basis(4);
    REQUIRE(S.matrix_dim() == 4);
    double worst = 0.0;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            CMatrix anti = S.element(i).matrix() * S.element(j).matrix() +
                           S.element(j).matrix() * S.element(i).matrix();
            if (i == j) anti -= 2.0 * CMatrix::Identity(4, 4);
            worst = std::max(worst, anti.cwiseAbs().maxCoeff());
        }
    }
    CHECK(worst == 0.0);
}

TEST_CASE("standard_gamma_basis: d=5 elements are dichotomic") {
    const auto S = standard_gamma_basis(5);
    for (int i = 0; i < 5; ++i) {
        const auto sd = spectral_decompose(S.element(i));
        REQUIRE(sd.eigenvalues.size() == 2);
        CHECK(sd.eigenvalues[0] == Catch::Approx(-1.0).margin(1e-12));
        CHECK(sd.eigenvalues[1] == Catch::Approx(1.0).margin(1e-12));
    }
}

TEST_CASE("standard_gamma_basis rejects d outside 1..5") {
    CHECK_THROWS_AS(standard_gamma_basis(0), std::invalid_argument);
    CHECK_THROWS_AS(standard_gamma_basis(6), std::invalid_argument);
}

TEST_CASE("is_gamma_basis examples") {
    const auto [ok, res] = is_gamma_basis(pauli_basis());
    CHECK(ok);
    CHECK(res <= 1e-12);

    const ObservableSubspace iz({identity_op(2), pauli_z()});
    const auto [ok2, res2] = is_gamma_basis(iz);
    CHECK_FALSE(ok2);
    CHECK(res2 == Catch::Approx(2.0).margin(1e-12));

    const auto diag = (pauli_x() + pauli_z()) * (1.0 / std::sqrt(2.0));
    const ObservableSubspace xs({pauli_x(), diag});
    const auto [ok3, res3] = is_gamma_basis(xs);
    CHECK_FALSE(ok3);
    CHECK(res3 == Catch::Approx(std::sqrt(2.0)).margin(1e-12));
}

TEST_CASE("is_dichotomic examples") {
    CHECK(is_dichotomic(pauli_x()));
    CHECK_FALSE(is_dichotomic(identity_op(2)));
    CHECK(is_dichotomic((pauli_x() + pauli_z()) * (1.0 / std::sqrt(2.0))));
    CHECK_FALSE(is_dichotomic(pauli_z() * 2.0));
    CHECK_FALSE(is_dichotomic(HermitianOperator(qtc_test::mat2(1, 0, 0, 0))));
}

TEST_CASE("decide_gamma_space: Pauli basis verifies with a witness") {
    const auto v = decide_gamma_space(pauli_basis(), 8, Seed{50});
    CHECK(v.is_gamma);
    CHECK(v.failure_reason == GammaFailure::none);
    CHECK(v.max_residual <= 1e-9);
    REQUIRE(v.witness_basis.has_value());
    CHECK(v.witness_basis->size() == 3);
    CHECK(anticommutator_residual(*v.witness_basis) <= 1e-9);
}

TEST_CASE("decide_gamma_space: span{1, sigma_z} fails as state dependent") {
    const ObservableSubspace S({identity_op(2), pauli_z()});
    const auto v = decide_gamma_space(S, 8, Seed{51});
    CHECK_FALSE(v.is_gamma);
    CHECK(v.failure_reason == GammaFailure::state_dependent);
    CHECK_FALSE(v.witness_basis.has_value());
}

TEST_CASE("decide_gamma_space: a single involution spans a gamma-space") {
    const ObservableSubspace S({pauli_x()});
    const auto v = decide_gamma_space(S, 8, Seed{52});
    CHECK(v.is_gamma);
    CHECK(v.max_residual <= 1e-9);
}

TEST_CASE("decide_gamma_space rejects trials < 2") {
    CHECK_THROWS_AS(decide_gamma_space(pauli_basis(), 1, Seed{0}), std::invalid_argument);
}

TEST_CASE("decide_gamma_space is deterministic given the seed") {
    const ObservableSubspace S({identity_op(2), pauli_z()});
    const auto a = decide_gamma_space(S, 8, Seed{53});
    const auto b = decide_gamma_space(S, 8, Seed{53});
    CHECK(a.is_gamma == b.is_gamma);
    CHECK(a.failure_reason == b.failure_reason);
    CHECK(a.max_residual == b.max_residual);
}

TEST_CASE("property: every standard gamma basis verifies") {
    for (int d = 1; d <= 5; ++d) {
        const auto v = decide_gamma_space(standard_gamma_basis(d), 8, Seed{60 + static_cast<std::uint64_t>(d)});
        CHECK(v.is_gamma);
        CHECK(v.max_residual <= 1e-9);
    }
}

TEST_CASE("property: is_gamma_basis = true implies decide_gamma_space = true") {
    // Standard bases and random unitary conjugations of them.
    for (int d = 1; d <= 5; ++d) {
        const auto S = standard_gamma_basis(d);
        REQUIRE(is_gamma_basis(S).first);
        CHECK(decide_gamma_space(S, 6, Seed{70}).is_gamma);

        RandomStream stream(split_seed(Seed{71}, static_cast<std::uint64_t>(d)));
        const CMatrix u = random_unitary(S.matrix_dim(), stream);
        std::vector<HermitianOperator> conj;
        for (const auto& op : S.basis()) conj.emplace_back(u.adjoint() * op.matrix() * u);
        const ObservableSubspace Sc(std::move(conj));
        REQUIRE(is_gamma_basis(Sc).first);
        CHECK(decide_gamma_space(Sc, 6, Seed{72}).is_gamma);
    }
}

TEST_CASE("fuzz: 2-dim subspaces with a trace component are never gamma-spaces") {
    RandomStream stream(Seed{80});
    int checked = 0;
    while (checked < 20) {
        // Random Hermitians with an explicit identity admixture so the
        // subspace always contains elements of nonzero trace.
        const auto a = random_hermitian(2, stream);
        const auto b = random_hermitian(2, stream);
        const double shift = 0.25 + stream.uniform01();
        try {
            const ObservableSubspace S({a + identity_op(2) * shift, b});
            const auto v = decide_gamma_space(S, 8, Seed{81 + static_cast<std::uint64_t>(checked)});
            CHECK_FALSE(v.is_gamma);
            ++checked;
        } catch (const std::invalid_argument&) {
            // dependent draw; try again
        }
    }
}
