// SPDX-FileCopyrightText: 2026 The kronwave authors
// SPDX-License-Identifier: Apache-2.0

#include "kronwave/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "kronwave/error.hpp"

namespace kronwave {

CoefficientTensor::CoefficientTensor(std::span<const int> dims, double fill) {
    if (dims.empty() || dims.size() > 3) {
        throw InvalidArgument("coefficient tensors have rank 1, 2 or 3, got " + std::to_string(dims.size()));
    }
    std::size_t total = 1;
    for (std::size_t d = 0; d < dims.size(); ++d) {
        if (dims[d] < 1) {
            throw InvalidArgument("tensor extents must be positive");
        }
        extents_[d] = dims[d];
        total *= static_cast<std::size_t>(dims[d]);
    }
    rank_ = static_cast<int>(dims.size());
    data_.assign(total, fill);
}

CoefficientTensor::CoefficientTensor(std::initializer_list<int> dims, double fill)
: CoefficientTensor(std::span<const int>{dims.begin(), dims.size()}, fill) { }

void CoefficientTensor::fill(double value) noexcept {
    std::fill(data_.begin(), data_.end(), value);
}

CoefficientTensor& CoefficientTensor::add_scaled(double alpha, const CoefficientTensor& x) {
    if (!same_shape(x)) {
        throw InvalidArgument("tensor shape mismatch in add_scaled");
    }
    for (std::size_t i = 0; i < data_.size(); ++i) {
        data_[i] += alpha * x.data_[i];
    }
    return *this;
}

CoefficientTensor& CoefficientTensor::scale(double alpha) noexcept {
    for (auto& v : data_) {
        v *= alpha;
    }
    return *this;
}

double dot(const CoefficientTensor& a, const CoefficientTensor& b) {
    if (!a.same_shape(b)) {
        throw InvalidArgument("tensor shape mismatch in dot");
    }
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += a[i] * b[i];
    }
    return s;
}

double max_abs(const CoefficientTensor& a) noexcept {
    double m = 0.0;
    for (double v : a.data()) {
        m = std::max(m, std::abs(v));
    }
    return m;
}

CoefficientTensor combine(double alpha, const CoefficientTensor& a, double beta, const CoefficientTensor& b) {
    CoefficientTensor out = a;
    out.scale(alpha);
    out.add_scaled(beta, b);
    return out;
}

}  // namespace kronwave
