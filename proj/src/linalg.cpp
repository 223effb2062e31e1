// SPDX-FileCopyrightText: 2026 The kronwave authors
// SPDX-License-Identifier: Apache-2.0

#include "kronwave/linalg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "kronwave/error.hpp"

namespace kronwave {

FactoredBanded factorize_banded(const BandedMatrix& a) {
    BandedMatrix lu = a;
    const int n = lu.size();
    const int p = lu.bandwidth();
    const double tol = 1e-14 * a.max_abs();

    for (int k = 0; k < n; ++k) {
        const double pivot = lu(k, k);
        if (!(std::abs(pivot) > tol)) {
            throw SingularMatrixError("banded LU: pivot " + std::to_string(pivot) + " at row " + std::to_string(k)
                                      + " below tolerance");
        }
        const int last = std::min(n - 1, k + p);
        for (int i = k + 1; i <= last; ++i) {
            double& lik = lu.at(i, k);
            if (lik == 0.0) {
                continue;
            }
            lik /= pivot;
            for (int j = k + 1; j <= last; ++j) {
                lu.at(i, j) -= lik * lu(k, j);
            }
        }
    }
    return FactoredBanded{std::move(lu)};
}

void FactoredBanded::solve_in_place(std::span<double> rhs, int cols) const {
    const int n = lu_.size();
    const int p = lu_.bandwidth();
    if (cols < 1 || rhs.size() != static_cast<std::size_t>(n) * cols) {
        throw InvalidArgument("banded solve: right-hand side has " + std::to_string(rhs.size())
                              + " entries, expected " + std::to_string(n) + " x " + std::to_string(cols));
    }
    const auto row = [&](int i) { return rhs.data() + static_cast<std::size_t>(i) * cols; };

    // forward substitution with unit lower factor
    for (int i = 1; i < n; ++i) {
        double* ri = row(i);
        for (int j = std::max(0, i - p); j < i; ++j) {
            const double l = lu_(i, j);
            if (l == 0.0) {
                continue;
            }
            const double* rj = row(j);
            for (int c = 0; c < cols; ++c) {
                ri[c] -= l * rj[c];
            }
        }
    }
    // back substitution
    for (int i = n - 1; i >= 0; --i) {
        double* ri = row(i);
        for (int j = i + 1; j <= std::min(n - 1, i + p); ++j) {
            const double u = lu_(i, j);
            if (u == 0.0) {
                continue;
            }
            const double* rj = row(j);
            for (int c = 0; c < cols; ++c) {
                ri[c] -= u * rj[c];
            }
        }
        const double inv = 1.0 / lu_(i, i);
        for (int c = 0; c < cols; ++c) {
            ri[c] *= inv;
        }
    }
}

std::vector<double> solve_multi_rhs(const FactoredBanded& a, std::span<const double> rhs, int cols) {
    std::vector<double> x(rhs.begin(), rhs.end());
    a.solve_in_place(x, cols);
    return x;
}

KroneckerOperator::KroneckerOperator(std::span<const BandedMatrix> factors) {
    if (factors.empty() || factors.size() > 3) {
        throw InvalidArgument("Kronecker operator needs 1 to 3 factors");
    }
    factors_.reserve(factors.size());
    for (const auto& f : factors) {
        factors_.push_back(factorize_banded(f));
    }
}

std::vector<int> KroneckerOperator::extents() const {
    std::vector<int> out;
    for (const auto& f : factors_) {
        out.push_back(f.size());
    }
    return out;
}

std::size_t KroneckerOperator::size() const noexcept {
    std::size_t n = factors_.empty() ? 0 : 1;
    for (const auto& f : factors_) {
        n *= static_cast<std::size_t>(f.size());
    }
    return n;
}

namespace {

struct Sweep {
    std::size_t inner = 1;
    int length = 0;
    std::size_t outer = 1;
};

Sweep sweep_shape(const CoefficientTensor& t, int direction) {
    Sweep s;
    for (int d = 0; d < direction; ++d) {
        s.inner *= static_cast<std::size_t>(t.extent(d));
    }
    s.length = t.extent(direction);
    for (int d = direction + 1; d < t.rank(); ++d) {
        s.outer *= static_cast<std::size_t>(t.extent(d));
    }
    return s;
}

void check_extents(const KroneckerOperator& op, const CoefficientTensor& b) {
    if (op.rank() != b.rank()) {
        throw InvalidArgument("Kronecker solve: operator rank " + std::to_string(op.rank()) + " vs tensor rank "
                              + std::to_string(b.rank()));
    }
    for (int d = 0; d < op.rank(); ++d) {
        if (op.factor(d).size() != b.extent(d)) {
            throw InvalidArgument("Kronecker solve: extent mismatch in direction " + std::to_string(d));
        }
    }
}

}  // namespace

void kron_solve_in_place(const KroneckerOperator& op, CoefficientTensor& b) {
    check_extents(op, b);
    auto data = b.data();
    for (int d = 0; d < op.rank(); ++d) {
        const Sweep s = sweep_shape(b, d);
        const std::size_t block = s.inner * s.length;
        for (std::size_t o = 0; o < s.outer; ++o) {
            op.factor(d).solve_in_place(data.subspan(o * block, block), static_cast<int>(s.inner));
        }
    }
}

CoefficientTensor kron_solve(const KroneckerOperator& op, const CoefficientTensor& b) {
    CoefficientTensor x = b;
    kron_solve_in_place(op, x);
    return x;
}

CoefficientTensor apply_along(const BandedMatrix& a, int direction, const CoefficientTensor& x) {
    if (direction < 0 || direction >= x.rank() || a.size() != x.extent(direction)) {
        throw InvalidArgument("apply_along: dimension mismatch in direction " + std::to_string(direction));
    }
    CoefficientTensor y{x.extents()};
    const Sweep s = sweep_shape(x, direction);
    const int n = s.length;
    const int p = a.bandwidth();
    const std::size_t block = s.inner * n;
    const auto src = x.data();
    auto dst = y.data();
    for (std::size_t o = 0; o < s.outer; ++o) {
        const double* in = src.data() + o * block;
        double* out = dst.data() + o * block;
        for (int i = 0; i < n; ++i) {
            double* ri = out + static_cast<std::size_t>(i) * s.inner;
            for (int j = std::max(0, i - p); j <= std::min(n - 1, i + p); ++j) {
                const double aij = a(i, j);
                if (aij == 0.0) {
                    continue;
                }
                const double* rj = in + static_cast<std::size_t>(j) * s.inner;
                for (std::size_t c = 0; c < s.inner; ++c) {
                    ri[c] += aij * rj[c];
                }
            }
        }
    }
    return y;
}

CoefficientTensor kron_apply(std::span<const BandedMatrix* const> factors, const CoefficientTensor& x) {
    if (static_cast<int>(factors.size()) != x.rank()) {
        throw InvalidArgument("kron_apply: need one factor per tensor direction");
    }
    CoefficientTensor y = x;
    for (int d = 0; d < x.rank(); ++d) {
        if (factors[d] != nullptr) {
            y = apply_along(*factors[d], d, y);
        }
    }
    return y;
}

CoefficientTensor kron_apply(std::span<const BandedMatrix> factors, const CoefficientTensor& x) {
    std::vector<const BandedMatrix*> ptrs;
    for (const auto& f : factors) {
        ptrs.push_back(&f);
    }
    return kron_apply(std::span<const BandedMatrix* const>{ptrs}, x);
}

std::vector<double> DenseMatrix::multiply(std::span<const double> x) const {
    std::vector<double> y(size, 0.0);
    for (int i = 0; i < size; ++i) {
        double s = 0.0;
        for (int j = 0; j < size; ++j) {
            s += (*this)(i, j) * x[j];
        }
        y[i] = s;
    }
    return y;
}

DenseMatrix kron_dense(std::span<const BandedMatrix> factors) {
    if (factors.empty() || factors.size() > 3) {
        throw InvalidArgument("kron_dense needs 1 to 3 factors");
    }
    std::array<int, 3> n{1, 1, 1};
    std::size_t total = 1;
    for (std::size_t d = 0; d < factors.size(); ++d) {
        n[d] = factors[d].size();
        total *= static_cast<std::size_t>(n[d]);
    }
    if (total > static_cast<std::size_t>(kDenseOracleLimit)) {
        throw InvalidArgument("dense Kronecker product limited to " + std::to_string(kDenseOracleLimit) + " unknowns");
    }
    const auto entry = [&](std::size_t d, int i, int j) {
        return d < factors.size() ? factors[d](i, j) : (i == j ? 1.0 : 0.0);
    };
    DenseMatrix out{static_cast<int>(total)};
    for (int k = 0; k < n[2]; ++k) {
        for (int j = 0; j < n[1]; ++j) {
            for (int i = 0; i < n[0]; ++i) {
                const int row = i + n[0] * (j + n[1] * k);
                for (int kk = 0; kk < n[2]; ++kk) {
                    const double az = entry(2, k, kk);
                    if (az == 0.0) {
                        continue;
                    }
                    for (int jj = 0; jj < n[1]; ++jj) {
                        const double ay = entry(1, j, jj);
                        if (ay == 0.0) {
                            continue;
                        }
                        for (int ii = 0; ii < n[0]; ++ii) {
                            const int col = ii + n[0] * (jj + n[1] * kk);
                            out(row, col) = entry(0, i, ii) * ay * az;
                        }
                    }
                }
            }
        }
    }
    return out;
}

std::vector<double> dense_oracle_solve(const DenseMatrix& a, std::span<const double> b) {
    const int n = a.size;
    if (n > kDenseOracleLimit) {
        throw InvalidArgument("dense oracle limited to " + std::to_string(kDenseOracleLimit) + " unknowns");
    }
    if (static_cast<int>(b.size()) != n) {
        throw InvalidArgument("dense oracle: right-hand side size mismatch");
    }
    DenseMatrix lu = a;
    std::vector<double> x(b.begin(), b.end());
    double scale = 0.0;
    for (double v : a.values) {
        scale = std::max(scale, std::abs(v));
    }
    const double tol = 1e-14 * scale;

    for (int k = 0; k < n; ++k) {
        int piv = k;
        for (int i = k + 1; i < n; ++i) {
            if (std::abs(lu(i, k)) > std::abs(lu(piv, k))) {
                piv = i;
            }
        }
        if (!(std::abs(lu(piv, k)) > tol)) {
            throw SingularMatrixError("dense oracle: matrix is singular to working precision");
        }
        if (piv != k) {
            for (int j = 0; j < n; ++j) {
                std::swap(lu(k, j), lu(piv, j));
            }
            std::swap(x[k], x[piv]);
        }
        const double inv = 1.0 / lu(k, k);
        for (int i = k + 1; i < n; ++i) {
            const double l = lu(i, k) * inv;
            if (l == 0.0) {
                continue;
            }
            lu(i, k) = l;
            for (int j = k + 1; j < n; ++j) {
                lu(i, j) -= l * lu(k, j);
            }
            x[i] -= l * x[k];
        }
    }
    for (int i = n - 1; i >= 0; --i) {
        double s = x[i];
        for (int j = i + 1; j < n; ++j) {
            s -= lu(i, j) * x[j];
        }
        x[i] = s / lu(i, i);
    }
    return x;
}

CoefficientTensor dense_oracle_solve(std::span<const BandedMatrix> factors, const CoefficientTensor& b) {
    const DenseMatrix a = kron_dense(factors);
    CoefficientTensor x{b.extents()};
    const auto sol = dense_oracle_solve(a, b.data());
    std::copy(sol.begin(), sol.end(), x.data().begin());
    return x;
}

}  // namespace kronwave
