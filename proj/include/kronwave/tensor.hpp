// SPDX-FileCopyrightText: 2026 The kronwave authors
// SPDX-License-Identifier: Apache-2.0

#ifndef KRONWAVE_TENSOR_HPP
#define KRONWAVE_TENSOR_HPP

#include <array>
#include <cstddef>
#include <span>
#include <vector>

namespace kronwave {

/// Dense 1-, 2- or 3-way array of spline coefficients.
///
/// Layout is x-fastest: entry (i, j, k) lives at i + n * (j + m * k).
class CoefficientTensor {
public:
    CoefficientTensor() = default;

    /// Throws InvalidArgument unless 1 <= dims.size() <= 3 and all extents are positive.
    explicit CoefficientTensor(std::span<const int> dims, double fill = 0.0);
    CoefficientTensor(std::initializer_list<int> dims, double fill = 0.0);

    int rank() const noexcept { return rank_; }
    int extent(int direction) const noexcept { return extents_[direction]; }
    std::span<const int> extents() const noexcept { return {extents_.data(), static_cast<std::size_t>(rank_)}; }
    std::size_t size() const noexcept { return data_.size(); }

    std::span<double> data() noexcept { return data_; }
    std::span<const double> data() const noexcept { return data_; }

    double& operator[](std::size_t idx) noexcept { return data_[idx]; }
    double operator[](std::size_t idx) const noexcept { return data_[idx]; }

    double& operator()(int i, int j) noexcept { return data_[i + extents_[0] * j]; }
    double operator()(int i, int j) const noexcept { return data_[i + extents_[0] * j]; }
    double& operator()(int i, int j, int k) noexcept {
        return data_[i + extents_[0] * (j + extents_[1] * static_cast<std::size_t>(k))];
    }
    double operator()(int i, int j, int k) const noexcept {
        return data_[i + extents_[0] * (j + extents_[1] * static_cast<std::size_t>(k))];
    }

    bool same_shape(const CoefficientTensor& other) const noexcept {
        return rank_ == other.rank_ && extents_ == other.extents_;
    }

    void fill(double value) noexcept;

    /// this += alpha * x
    CoefficientTensor& add_scaled(double alpha, const CoefficientTensor& x);
    CoefficientTensor& scale(double alpha) noexcept;

private:
    int rank_ = 0;
    std::array<int, 3> extents_{1, 1, 1};
    std::vector<double> data_;
};

double dot(const CoefficientTensor& a, const CoefficientTensor& b);
double max_abs(const CoefficientTensor& a) noexcept;

/// Returns alpha * a + beta * b.
CoefficientTensor combine(double alpha, const CoefficientTensor& a, double beta, const CoefficientTensor& b);

}  // namespace kronwave

#endif  // KRONWAVE_TENSOR_HPP
