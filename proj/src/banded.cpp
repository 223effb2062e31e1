// SPDX-FileCopyrightText: 2026 The kronwave authors
// SPDX-License-Identifier: Apache-2.0

#include "kronwave/banded.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "kronwave/error.hpp"

namespace kronwave {

BandedMatrix::BandedMatrix(int size, int bandwidth)
: size_{size}
, bandwidth_{bandwidth} {
    if (size < 1 || bandwidth < 0) {
        throw InvalidArgument("banded matrix needs size >= 1 and bandwidth >= 0");
    }
    band_.assign(static_cast<std::size_t>(size) * row_width(), 0.0);
}

BandedMatrix BandedMatrix::identity(int size, int bandwidth) {
    BandedMatrix m{size, bandwidth};
    for (int i = 0; i < size; ++i) {
        m.at(i, i) = 1.0;
    }
    return m;
}

double& BandedMatrix::at(int i, int j) {
    if (!in_band(i, j)) {
        throw InvalidArgument("entry (" + std::to_string(i) + ", " + std::to_string(j) + ") outside the band");
    }
    return band_[index(i, j)];
}

void BandedMatrix::multiply(std::span<const double> x, std::span<double> y) const {
    if (std::ssize(x) != size_ || std::ssize(y) != size_) {
        throw InvalidArgument("banded multiply: dimension mismatch");
    }
    for (int i = 0; i < size_; ++i) {
        const int lo = std::max(0, i - bandwidth_);
        const int hi = std::min(size_ - 1, i + bandwidth_);
        const double* row = band_.data() + index(i, 0) ;
        double s = 0.0;
        for (int j = lo; j <= hi; ++j) {
            s += row[j] * x[j];
        }
        y[i] = s;
    }
}

BandedMatrix BandedMatrix::transposed() const {
    BandedMatrix t{size_, bandwidth_};
    for (int i = 0; i < size_; ++i) {
        for (int j = std::max(0, i - bandwidth_); j <= std::min(size_ - 1, i + bandwidth_); ++j) {
            t.at(j, i) = (*this)(i, j);
        }
    }
    return t;
}

std::vector<double> BandedMatrix::to_dense() const {
    std::vector<double> d(static_cast<std::size_t>(size_) * size_, 0.0);
    for (int i = 0; i < size_; ++i) {
        for (int j = std::max(0, i - bandwidth_); j <= std::min(size_ - 1, i + bandwidth_); ++j) {
            d[static_cast<std::size_t>(i) * size_ + j] = (*this)(i, j);
        }
    }
    return d;
}

double BandedMatrix::max_abs() const noexcept {
    double m = 0.0;
    for (double v : band_) {
        m = std::max(m, std::abs(v));
    }
    return m;
}

BandedMatrix combine(double alpha, const BandedMatrix& a, double beta, const BandedMatrix& b) {
    if (a.size() != b.size() || a.bandwidth() != b.bandwidth()) {
        throw InvalidArgument("banded combine: shape mismatch");
    }
    BandedMatrix out{a.size(), a.bandwidth()};
    auto dst = out.band();
    auto sa = a.band();
    auto sb = b.band();
    for (std::size_t k = 0; k < dst.size(); ++k) {
        dst[k] = alpha * sa[k] + beta * sb[k];
    }
    return out;
}

}  // namespace kronwave
