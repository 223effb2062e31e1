// SPDX-FileCopyrightText: 2026 The kronwave authors
// SPDX-License-Identifier: Apache-2.0

#ifndef KRONWAVE_BANDED_HPP
#define KRONWAVE_BANDED_HPP

#include <span>
#include <vector>

namespace kronwave {

/// Square matrix with equal lower and upper half-bandwidth.
///
/// Row i stores the 2 * bandwidth + 1 diagonals j = i - bandwidth .. i + bandwidth
/// contiguously. Entries outside the band are structurally zero.
class BandedMatrix {
public:
    BandedMatrix() = default;
    BandedMatrix(int size, int bandwidth);

    static BandedMatrix identity(int size, int bandwidth = 0);

    int size() const noexcept { return size_; }
    int bandwidth() const noexcept { return bandwidth_; }
    int row_width() const noexcept { return 2 * bandwidth_ + 1; }

    bool in_band(int i, int j) const noexcept {
        return i >= 0 && j >= 0 && i < size_ && j < size_ && j - i <= bandwidth_ && i - j <= bandwidth_;
    }

    /// Zero outside the band.
    double operator()(int i, int j) const noexcept {
        return in_band(i, j) ? band_[index(i, j)] : 0.0;
    }

    /// Throws InvalidArgument outside the band.
    double& at(int i, int j);

    std::span<double> band() noexcept { return band_; }
    std::span<const double> band() const noexcept { return band_; }

    /// y = A x
    void multiply(std::span<const double> x, std::span<double> y) const;

    BandedMatrix transposed() const;

    /// Row-major dense copy, size() * size() entries.
    std::vector<double> to_dense() const;

    double max_abs() const noexcept;

private:
    std::size_t index(int i, int j) const noexcept {
        return static_cast<std::size_t>(i) * row_width() + (j - i + bandwidth_);
    }

    int size_ = 0;
    int bandwidth_ = 0;
    std::vector<double> band_;
};

/// alpha * a + beta * b; operands must share size and bandwidth.
BandedMatrix combine(double alpha, const BandedMatrix& a, double beta, const BandedMatrix& b);

}  // namespace kronwave

#endif  // KRONWAVE_BANDED_HPP
