// SPDX-FileCopyrightText: 2026 The kronwave authors
// SPDX-License-Identifier: Apache-2.0

#include "kronwave/splines.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "kronwave/error.hpp"

namespace kronwave {

BSplineSpace1D::BSplineSpace1D(int degree, int elements, std::vector<double> knots)
: degree_{degree}
, elements_{elements}
, knots_{std::move(knots)} { }

BSplineSpace1D BSplineSpace1D::uniform(int degree, int elements) {
    if (degree < 0) {
        throw InvalidArgument("spline degree must be non-negative, got " + std::to_string(degree));
    }
    if (elements < 1) {
        throw InvalidArgument("element count must be at least 1, got " + std::to_string(elements));
    }
    std::vector<double> knots;
    knots.reserve(elements + 2 * degree + 1);
    knots.insert(knots.end(), degree + 1, 0.0);
    for (int i = 1; i < elements; ++i) {
        knots.push_back(static_cast<double>(i) / elements);
    }
    knots.insert(knots.end(), degree + 1, 1.0);
    return BSplineSpace1D{degree, elements, std::move(knots)};
}

int BSplineSpace1D::element_of(double x) const {
    if (!(x >= 0.0 && x <= 1.0)) {
        throw InvalidArgument("evaluation point " + std::to_string(x) + " outside [0, 1]");
    }
    // first knot strictly greater than x among the interior breakpoints
    const auto begin = knots_.begin() + degree_ + 1;
    const auto end = knots_.begin() + degree_ + elements_;
    const auto it = std::upper_bound(begin, end, x);
    return static_cast<int>(it - begin);
}

void BSplineSpace1D::eval_on_element(int e, double x, std::span<double> values,
                                     std::span<double> derivatives) const {
    const int p = degree_;
    const int span = e + p;
    const auto& u = knots_;

    // ndu[j][r], r <= j: basis functions of degree j; r > j: knot differences
    double ndu[16][16];
    double left[16];
    double right[16];
    if (p >= 15) {
        throw InvalidArgument("spline degree above 14 is not supported");
    }

    ndu[0][0] = 1.0;
    for (int j = 1; j <= p; ++j) {
        left[j] = x - u[span + 1 - j];
        right[j] = u[span + j] - x;
        double saved = 0.0;
        for (int r = 0; r < j; ++r) {
            ndu[j][r] = right[r + 1] + left[j - r];
            const double temp = ndu[r][j - 1] / ndu[j][r];
            ndu[r][j] = saved + right[r + 1] * temp;
            saved = left[j - r] * temp;
        }
        ndu[j][j] = saved;
    }

    for (int r = 0; r <= p; ++r) {
        values[r] = ndu[r][p];
    }

    if (derivatives.empty()) {
        return;
    }
    if (p == 0) {
        derivatives[0] = 0.0;
        return;
    }
    for (int r = 0; r <= p; ++r) {
        double d = 0.0;
        if (r >= 1) {
            d += ndu[r - 1][p - 1] / ndu[p][r - 1];
        }
        if (r <= p - 1) {
            d -= ndu[r][p - 1] / ndu[p][r];
        }
        derivatives[r] = d * p;
    }
}

BasisValues BSplineSpace1D::eval(double x, int derivative_order) const {
    if (derivative_order != 0 && derivative_order != 1) {
        throw InvalidArgument("only derivative orders 0 and 1 are supported");
    }
    const int e = element_of(x);
    BasisValues out;
    out.first = first_active(e);
    out.values.resize(degree_ + 1);
    if (derivative_order == 0) {
        eval_on_element(e, x, out.values, {});
    } else {
        std::vector<double> scratch(degree_ + 1);
        eval_on_element(e, x, scratch, out.values);
    }
    return out;
}

QuadratureRule BSplineSpace1D::quadrature() const {
    const int q = degree_ + 1;
    std::vector<double> nodes;
    std::vector<double> weights;
    gauss_legendre(q, nodes, weights);

    QuadratureRule rule;
    rule.points_per_element = q;
    rule.points.reserve(static_cast<std::size_t>(q) * elements_);
    rule.weights.reserve(static_cast<std::size_t>(q) * elements_);
    for (int e = 0; e < elements_; ++e) {
        const double a = element_left(e);
        const double b = element_right(e);
        const double half = 0.5 * (b - a);
        for (int k = 0; k < q; ++k) {
            rule.points.push_back(a + half * (nodes[k] + 1.0));
            rule.weights.push_back(half * weights[k]);
        }
    }
    return rule;
}

std::vector<double> BSplineSpace1D::greville() const {
    std::vector<double> out(basis_count());
    for (int a = 0; a < basis_count(); ++a) {
        if (degree_ == 0) {
            out[a] = 0.5 * (knots_[a] + knots_[a + 1]);
            continue;
        }
        double s = 0.0;
        for (int k = 1; k <= degree_; ++k) {
            s += knots_[a + k];
        }
        out[a] = s / degree_;
    }
    return out;
}

void gauss_legendre(int count, std::vector<double>& nodes, std::vector<double>& weights) {
    if (count < 1) {
        throw InvalidArgument("Gauss-Legendre rule needs at least one point");
    }
    nodes.assign(count, 0.0);
    weights.assign(count, 0.0);
    const int half = (count + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (count + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= count; ++k) {
                const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = pk;
            }
            dp = count * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) {
                break;
            }
        }
        // recompute derivative at the converged node
        double p0 = 1.0;
        double p1 = x;
        for (int k = 2; k <= count; ++k) {
            const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = pk;
        }
        dp = count * (x * p1 - p0) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[count - 1 - i] = x;
        weights[i] = w;
        weights[count - 1 - i] = w;
    }
    if (count % 2 == 1) {
        nodes[count / 2] = 0.0;
    }
}

}  // namespace kronwave
