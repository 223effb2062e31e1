// SPDX-FileCopyrightText: 2026 The kronwave authors
// SPDX-License-Identifier: Apache-2.0

#ifndef KRONWAVE_SPLINES_HPP
#define KRONWAVE_SPLINES_HPP

#include <span>
#include <vector>

namespace kronwave {

/// Nonzero basis values at a point: functions first, first + 1, ..., first + p.
struct BasisValues {
    int first = 0;
    std::vector<double> values;
};

/// Gauss-Legendre points and weights mapped onto every knot span.
///
/// Storage is element-major: entries [e * points_per_element, (e + 1) * points_per_element)
/// belong to element e.
struct QuadratureRule {
    int points_per_element = 0;
    std::vector<double> points;
    std::vector<double> weights;

    int element_count() const noexcept {
        return points_per_element == 0 ? 0 : static_cast<int>(points.size()) / points_per_element;
    }
};

/// One-dimensional B-spline space on [0, 1] with an open uniform knot vector.
class BSplineSpace1D {
public:
    /// Throws InvalidArgument when degree < 0 or elements < 1.
    static BSplineSpace1D uniform(int degree, int elements);

    int degree() const noexcept { return degree_; }
    int element_count() const noexcept { return elements_; }
    int basis_count() const noexcept { return static_cast<int>(knots_.size()) - degree_ - 1; }
    std::span<const double> knots() const noexcept { return knots_; }

    double element_left(int e) const { return knots_[degree_ + e]; }
    double element_right(int e) const { return knots_[degree_ + e + 1]; }

    /// Index of the first basis function supported on element e.
    int first_active(int e) const noexcept { return e; }

    /// Element containing x; the right end point belongs to the last element.
    int element_of(double x) const;

    /// Values (order 0) or first derivatives (order 1) of the p + 1 basis
    /// functions that do not vanish at x. Throws InvalidArgument for x
    /// outside [0, 1] or an order other than 0 and 1.
    BasisValues eval(double x, int derivative_order) const;

    /// Values and first derivatives on a known element, written to
    /// values[0..p] and derivatives[0..p].
    void eval_on_element(int e, double x, std::span<double> values, std::span<double> derivatives) const;

    /// Gauss-Legendre rule with p + 1 points on every element.
    QuadratureRule quadrature() const;

    /// Greville abscissae, one per basis function.
    std::vector<double> greville() const;

private:
    BSplineSpace1D(int degree, int elements, std::vector<double> knots);

    int degree_ = 0;
    int elements_ = 0;
    std::vector<double> knots_;
};

/// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(int count, std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace kronwave

#endif  // KRONWAVE_SPLINES_HPP
