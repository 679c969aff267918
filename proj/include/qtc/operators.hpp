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
/// Finite-dimensional Hermitian operator arithmetic: validated operator and
/// density-matrix types, spectral decomposition with distinct-eigenvalue
/// clustering, and the +/- projector pair of two-valued observables.
///
/// All types are immutable values; invariants are checked once at
/// construction and operations may assume them afterwards.

#pragma once

#include <complex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qtc/tolerances.hpp"

namespace qtc {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using RMatrix = Eigen::MatrixXd;
using Vector3 = Eigen::Vector3d;

/// Largest singular value. For the Hermitian matrices handled here this is
/// max |eigenvalue|; the SVD form also covers the not-quite-Hermitian
/// candidates seen during validation.
inline double operator_norm(const CMatrix& m) {
    if (m.size() == 0) return 0.0;
    return m.jacobiSvd().singularValues()(0);
}

inline double max_abs_entry(const CMatrix& m) {
    return m.cwiseAbs().maxCoeff();
}

/// A complex d x d Hermitian matrix. Construction rejects non-square input
/// and matrices whose asymmetry max|M - M^dagger| exceeds tol::herm relative
/// to max(1, ||M||_2).
class HermitianOperator {
  public:
    explicit HermitianOperator(CMatrix entries) : mat_(std::move(entries)) {
        if (mat_.rows() < 1 || mat_.rows() != mat_.cols()) {
            throw std::invalid_argument(
                "HermitianOperator: matrix must be square with dim >= 1, got " +
                std::to_string(mat_.rows()) + "x" + std::to_string(mat_.cols()));
        }
        const double scale = std::max(1.0, operator_norm(mat_));
        const double asym = max_abs_entry(mat_ - mat_.adjoint());
        if (asym > tol::herm * scale) {
            std::ostringstream msg;
            msg << "HermitianOperator: matrix is not Hermitian, max asymmetry "
                << asym << " exceeds " << tol::herm * scale;
            throw std::invalid_argument(msg.str());
        }
    }

    int dim() const { return static_cast<int>(mat_.rows()); }
    const CMatrix& matrix() const { return mat_; }

    HermitianOperator operator+(const HermitianOperator& o) const {
        return HermitianOperator(mat_ + o.mat_);
    }
    HermitianOperator operator-(const HermitianOperator& o) const {
        return HermitianOperator(mat_ - o.mat_);
    }
    HermitianOperator operator*(double c) const { return HermitianOperator(mat_ * c); }

  private:
    CMatrix mat_;
};

inline HermitianOperator operator*(double c, const HermitianOperator& o) { return o * c; }

/// Distinct eigenvalues (strictly increasing cluster representatives) paired
/// with the orthogonal projectors onto their eigenspaces. Satisfies
/// P_i P_j = delta_ij P_i, sum_i P_i = 1, and sum_i lambda_i P_i = source.
struct SpectralDecomposition {
    std::vector<double> eigenvalues;
    std::vector<CMatrix> projectors;
    int dim = 0;

    CMatrix reconstruct() const {
        CMatrix m = CMatrix::Zero(dim, dim);
        for (std::size_t i = 0; i < eigenvalues.size(); ++i) m += eigenvalues[i] * projectors[i];
        return m;
    }
};

/// Eigendecomposition with tolerance-based degeneracy detection: sorted
/// eigenvalues are merged into one cluster while the adjacent gap stays below
/// tol::cluster * max(1, ||H||_2); each cluster is represented by the
/// multiplicity-weighted mean of its members.
namespace detail {

/// Closed-form 2x2 path. Keeps the spectrum of r . sigma at exactly
/// +-hypot(r): the iterative solver is one ulp off on e.g. sigma_x, which
/// breaks the outcome-magnitude identity downstream estimators divide by.
inline SpectralDecomposition spectral_decompose_2x2(const CMatrix& h) {
    const double a = h(0, 0).real();
    const double dd = h(1, 1).real();
    const Complex b = h(0, 1);
    const double mean = 0.5 * (a + dd);
    const double radius = std::hypot(0.5 * (a - dd), std::abs(b));

    SpectralDecomposition out;
    out.dim = 2;
    const double scale = std::max(1.0, std::abs(mean) + radius);
    if (2.0 * radius < tol::cluster * scale) {
        out.eigenvalues = {mean};
        out.projectors = {CMatrix::Identity(2, 2)};
        return out;
    }
    const CMatrix id = CMatrix::Identity(2, 2);
    const CMatrix unit = (h - mean * id) / radius;  // involution within rounding
    out.eigenvalues = {mean - radius, mean + radius};
    out.projectors = {0.5 * (id - unit), 0.5 * (id + unit)};
    return out;
}

}  // namespace detail

inline SpectralDecomposition spectral_decompose(const HermitianOperator& H) {
    const int d = H.dim();
    if (d == 2) return detail::spectral_decompose_2x2(H.matrix());
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(H.matrix());
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("spectral_decompose: eigensolver failed to converge");
    }
    const Eigen::VectorXd evs = solver.eigenvalues();  // ascending
    const CMatrix& vecs = solver.eigenvectors();

    const double scale = std::max(1.0, std::max(std::abs(evs(0)), std::abs(evs(d - 1))));
    const double gap = tol::cluster * scale;

    SpectralDecomposition out;
    out.dim = d;
    int begin = 0;
    for (int i = 1; i <= d; ++i) {
        if (i == d || evs(i) - evs(i - 1) >= gap) {
            double mean = 0.0;
            CMatrix proj = CMatrix::Zero(d, d);
            for (int k = begin; k < i; ++k) {
                mean += evs(k);
                proj += vecs.col(k) * vecs.col(k).adjoint();
            }
            out.eigenvalues.push_back(mean / static_cast<double>(i - begin));
            out.projectors.push_back(std::move(proj));
            begin = i;
        }
    }
    return out;
}

/// If the clustered spectrum has exactly two values {-lambda, +lambda} with
/// lambda > 0, returns lambda; otherwise nullopt. The symmetry comparison is
/// relative to the spectral scale.
inline std::optional<double> two_valued_spectrum_level(const SpectralDecomposition& sd) {
    if (sd.eigenvalues.size() != 2) return std::nullopt;
    const double lo = sd.eigenvalues[0];
    const double hi = sd.eigenvalues[1];
    const double lambda = 0.5 * (hi - lo);
    if (lambda <= 0.0) return std::nullopt;
    if (std::abs(hi + lo) > tol::num * std::max(1.0, lambda)) return std::nullopt;
    return lambda;
}

/// Projectors onto the +/- eigenspaces of an observable with spectrum
/// {+lambda, -lambda}: Pi_pm = (1 +- O/lambda) / 2, returned as (+, -).
inline std::pair<CMatrix, CMatrix> projectors_pm(const HermitianOperator& O) {
    const auto sd = spectral_decompose(O);
    const auto lambda = two_valued_spectrum_level(sd);
    if (!lambda) {
        std::ostringstream msg;
        msg << "projectors_pm: spectrum is not of the form {-lambda, +lambda}; got {";
        for (std::size_t i = 0; i < sd.eigenvalues.size(); ++i)
            msg << (i ? ", " : "") << sd.eigenvalues[i];
        msg << "}";
        throw std::domain_error(msg.str());
    }
    const CMatrix id = CMatrix::Identity(O.dim(), O.dim());
    const CMatrix scaled = O.matrix() / *lambda;
    return {0.5 * (id + scaled), 0.5 * (id - scaled)};
}

/// Positive-semidefinite, unit-trace Hermitian matrix. Construction checks
/// hermiticity within tol::herm, eigenvalues >= -tol::num and |trace - 1|
/// <= tol::num.
class DensityOperator {
  public:
    explicit DensityOperator(CMatrix entries) : mat_(std::move(entries)) {
        if (mat_.rows() < 1 || mat_.rows() != mat_.cols()) {
            throw std::invalid_argument("DensityOperator: matrix must be square with dim >= 1");
        }
        const double asym = max_abs_entry(mat_ - mat_.adjoint());
        if (asym > tol::herm) {
            std::ostringstream msg;
            msg << "DensityOperator: not Hermitian, max asymmetry " << asym;
            throw std::invalid_argument(msg.str());
        }
        const Complex tr = mat_.trace();
        if (std::abs(tr - Complex(1.0, 0.0)) > tol::num) {
            std::ostringstream msg;
            msg << "DensityOperator: trace " << tr << " is not 1";
            throw std::invalid_argument(msg.str());
        }
        Eigen::SelfAdjointEigenSolver<CMatrix> solver(mat_, Eigen::EigenvaluesOnly);
        if (solver.eigenvalues()(0) < -tol::num) {
            std::ostringstream msg;
            msg << "DensityOperator: negative eigenvalue " << solver.eigenvalues()(0);
            throw std::invalid_argument(msg.str());
        }
    }

    int dim() const { return static_cast<int>(mat_.rows()); }
    const CMatrix& matrix() const { return mat_; }

    static DensityOperator maximally_mixed(int dim) {
        return DensityOperator(CMatrix::Identity(dim, dim) / static_cast<double>(dim));
    }

    /// |k><k| in the computational basis.
    static DensityOperator pure_basis_state(int dim, int k) {
        if (k < 0 || k >= dim) {
            throw std::invalid_argument("pure_basis_state: index " + std::to_string(k) +
                                        " out of range for dim " + std::to_string(dim));
        }
        CMatrix m = CMatrix::Zero(dim, dim);
        m(k, k) = 1.0;
        return DensityOperator(std::move(m));
    }

  private:
    CMatrix mat_;
};

// Single-qubit building blocks.

inline HermitianOperator identity_op(int dim) {
    return HermitianOperator(CMatrix::Identity(dim, dim));
}

inline HermitianOperator pauli_x() {
    CMatrix m(2, 2);
    m << 0, 1, 1, 0;
    return HermitianOperator(std::move(m));
}

inline HermitianOperator pauli_y() {
    CMatrix m(2, 2);
    m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
    return HermitianOperator(std::move(m));
}

inline HermitianOperator pauli_z() {
    CMatrix m(2, 2);
    m << 1, 0, 0, -1;
    return HermitianOperator(std::move(m));
}

inline CMatrix kron(const CMatrix& a, const CMatrix& b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

/// r . sigma = r_x sigma_x + r_y sigma_y + r_z sigma_z.
inline HermitianOperator dot_sigma(const Vector3& r) {
    CMatrix m(2, 2);
    m << Complex(r.z(), 0), Complex(r.x(), -r.y()), Complex(r.x(), r.y()), Complex(-r.z(), 0);
    return HermitianOperator(std::move(m));
}

}  // namespace qtc
