// SPDX-FileCopyrightText: 2026 The kronwave authors
// SPDX-License-Identifier: Apache-2.0

#ifndef KRONWAVE_ASSEMBLY_HPP
#define KRONWAVE_ASSEMBLY_HPP

#include <functional>
#include <span>
#include <vector>

#include "kronwave/banded.hpp"
#include "kronwave/linalg.hpp"
#include "kronwave/splines.hpp"
#include "kronwave/tensor.hpp"

namespace kronwave {

/// M(a, c) = integral of N_a N_c over [0, 1].
BandedMatrix assemble_mass(const BSplineSpace1D& space);

/// K(a, c) = integral of N_a' N_c'. Throws InvalidArgument for degree 0.
BandedMatrix assemble_stiffness(const BSplineSpace1D& space);

/// B(a, c) = integral of N_a' N_c. Throws InvalidArgument for degree 0.
BandedMatrix assemble_mixed(const BSplineSpace1D& space);

/// Scalar field on [0, 1]^d; the span holds d coordinates.
using ScalarField = std::function<double(std::span<const double>)>;

/// Extents of the coefficient tensor of a tensor-product space.
std::vector<int> coefficient_extents(std::span<const BSplineSpace1D> spaces);

/// Entries are the integrals of f against each tensor-product basis function,
/// computed element by element with the spaces' Gauss rules.
CoefficientTensor load_vector(const ScalarField& f, std::span<const BSplineSpace1D> spaces);

/// Solves (M_x (x) M_y [(x) M_z]) c = load_vector(f). `mass` must hold the
/// factored directional mass matrices of `spaces`.
CoefficientTensor l2_project(const ScalarField& f, std::span<const BSplineSpace1D> spaces,
                             const KroneckerOperator& mass);

/// Builds and factors the mass operator on the fly.
CoefficientTensor l2_project(const ScalarField& f, std::span<const BSplineSpace1D> spaces);

/// Value of the spline field with coefficients c at point x.
double evaluate(std::span<const BSplineSpace1D> spaces, const CoefficientTensor& c, std::span<const double> x);

/// L2 norm of (spline field - exact) using p + 3 Gauss points per element and direction.
double l2_error(std::span<const BSplineSpace1D> spaces, const CoefficientTensor& c, const ScalarField& exact);

}  // namespace kronwave

#endif  // KRONWAVE_ASSEMBLY_HPP
