// SPDX-FileCopyrightText: 2026 The kronwave authors
// SPDX-License-Identifier: Apache-2.0

#ifndef KRONWAVE_LINALG_HPP
#define KRONWAVE_LINALG_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "kronwave/banded.hpp"
#include "kronwave/tensor.hpp"

namespace kronwave {

/// LU factors of a banded matrix, stored in the same band layout.
///
/// No pivoting: intended for the SPD (or SPD-shifted) directional factors.
/// The unit lower factor occupies the sub-diagonals, U the rest.
class FactoredBanded {
public:
    int size() const noexcept { return lu_.size(); }
    int bandwidth() const noexcept { return lu_.bandwidth(); }

    /// Entries of L (below the diagonal, unit diagonal implied) and U.
    const BandedMatrix& factors() const noexcept { return lu_; }

    /// Solves A X = B in place for a row-major rows x cols block
    /// (row stride cols). Each column is an independent right-hand side.
    void solve_in_place(std::span<double> rhs, int cols) const;

private:
    friend FactoredBanded factorize_banded(const BandedMatrix& a);
    explicit FactoredBanded(BandedMatrix lu) : lu_{std::move(lu)} { }

    BandedMatrix lu_;
};

/// Throws SingularMatrixError when a pivot magnitude drops below
/// 1e-14 times the largest band entry.
FactoredBanded factorize_banded(const BandedMatrix& a);

/// Solves A X = B for an n x k right-hand side stored row-major.
std::vector<double> solve_multi_rhs(const FactoredBanded& a, std::span<const double> rhs, int cols);

/// Factored A_x (x) A_y [(x) A_z], one factor per tensor direction.
class KroneckerOperator {
public:
    KroneckerOperator() = default;
    explicit KroneckerOperator(std::span<const BandedMatrix> factors);

    int rank() const noexcept { return static_cast<int>(factors_.size()); }
    const FactoredBanded& factor(int direction) const { return factors_[direction]; }
    std::vector<int> extents() const;
    std::size_t size() const noexcept;

private:
    std::vector<FactoredBanded> factors_;
};

/// Solves (A_x (x) A_y [(x) A_z]) x = b by one multi-RHS sweep per direction.
CoefficientTensor kron_solve(const KroneckerOperator& op, const CoefficientTensor& b);
void kron_solve_in_place(const KroneckerOperator& op, CoefficientTensor& b);

/// Applies a single banded matrix along one tensor direction.
CoefficientTensor apply_along(const BandedMatrix& a, int direction, const CoefficientTensor& x);

/// Applies A_x (x) A_y [(x) A_z]: entry (i, j, k) of the result is
/// sum A_x(i, i') A_y(j, j') A_z(k, k') x(i', j', k').
CoefficientTensor kron_apply(std::span<const BandedMatrix* const> factors, const CoefficientTensor& x);
CoefficientTensor kron_apply(std::span<const BandedMatrix> factors, const CoefficientTensor& x);

/// Row-major dense square matrix for small reference computations.
struct DenseMatrix {
    int size = 0;
    std::vector<double> values;

    DenseMatrix() = default;
    explicit DenseMatrix(int n) : size{n}, values(static_cast<std::size_t>(n) * n, 0.0) { }

    double& operator()(int i, int j) noexcept { return values[static_cast<std::size_t>(i) * size + j]; }
    double operator()(int i, int j) const noexcept { return values[static_cast<std::size_t>(i) * size + j]; }

    std::vector<double> multiply(std::span<const double> x) const;
};

inline constexpr int kDenseOracleLimit = 4096;

/// Dense Kronecker product matching the x-fastest tensor layout.
DenseMatrix kron_dense(std::span<const BandedMatrix> factors);

/// Dense LU with partial pivoting. Throws InvalidArgument above
/// kDenseOracleLimit unknowns and SingularMatrixError on a zero pivot.
std::vector<double> dense_oracle_solve(const DenseMatrix& a, std::span<const double> b);
CoefficientTensor dense_oracle_solve(std::span<const BandedMatrix> factors, const CoefficientTensor& b);

}  // namespace kronwave

#endif  // KRONWAVE_LINALG_HPP
