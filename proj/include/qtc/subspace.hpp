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

#include <span>
#include <string>
#include <vector>

#include "qtc/operators.hpp"

namespace qtc {

/// An ordered basis of a real linear subspace of Hermitian operators.
/// Construction rejects mismatched matrix dimensions and bases that are not
/// real-linearly independent (smallest singular value of the vectorized
/// basis must exceed tol::rank).
class ObservableSubspace {
  public:
    explicit ObservableSubspace(std::vector<HermitianOperator> basis,
                                std::vector<std::string> labels = {})
        : basis_(std::move(basis)), labels_(std::move(labels)) {
        if (basis_.empty()) {
            throw std::invalid_argument("ObservableSubspace: basis must be non-empty");
        }
        const int n = basis_.front().dim();
        for (const auto& op : basis_) {
            if (op.dim() != n) {
                throw std::invalid_argument(
                    "ObservableSubspace: basis elements have mixed matrix dimensions");
            }
        }
        if (labels_.empty()) {
            for (std::size_t i = 0; i < basis_.size(); ++i)
                labels_.push_back("O" + std::to_string(i + 1));
        }
        if (labels_.size() != basis_.size()) {
            throw std::invalid_argument("ObservableSubspace: one label per basis element");
        }

        // Real-linear independence: stack Re and Im parts of each vectorized
        // element as a row and look at the smallest singular value.
        const auto d = static_cast<Eigen::Index>(basis_.size());
        RMatrix stacked(d, 2 * n * n);
        for (Eigen::Index i = 0; i < d; ++i) {
            const CMatrix& m = basis_[static_cast<std::size_t>(i)].matrix();
            Eigen::Index col = 0;
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c) {
                    stacked(i, col++) = m(r, c).real();
                    stacked(i, col++) = m(r, c).imag();
                }
        }
        const auto sv = stacked.jacobiSvd().singularValues();
        if (sv(sv.size() - 1) <= tol::rank) {
            throw std::invalid_argument(
                "ObservableSubspace: basis is not real-linearly independent "
                "(smallest singular value " +
                std::to_string(sv(sv.size() - 1)) + ")");
        }
    }

    /// Dimension d of the subspace (number of basis elements).
    int dim_space() const { return static_cast<int>(basis_.size()); }
    /// Matrix dimension n of the elements.
    int matrix_dim() const { return basis_.front().dim(); }

    const std::vector<HermitianOperator>& basis() const { return basis_; }
    const HermitianOperator& element(int i) const { return basis_[static_cast<std::size_t>(i)]; }
    const std::vector<std::string>& labels() const { return labels_; }

    /// sum_i coeffs[i] * O_i.
    HermitianOperator combine(std::span<const double> coeffs) const {
        if (coeffs.size() != basis_.size()) {
            throw std::invalid_argument("ObservableSubspace::combine: coefficient count mismatch");
        }
        CMatrix m = CMatrix::Zero(matrix_dim(), matrix_dim());
        for (std::size_t i = 0; i < basis_.size(); ++i) m += coeffs[i] * basis_[i].matrix();
        return HermitianOperator(std::move(m));
    }

  private:
    std::vector<HermitianOperator> basis_;
    std::vector<std::string> labels_;
};

}  // namespace qtc
