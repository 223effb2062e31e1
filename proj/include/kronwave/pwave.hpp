// SPDX-FileCopyrightText: 2026 The kronwave authors
// SPDX-License-Identifier: Apache-2.0

#ifndef KRONWAVE_PWAVE_HPP
#define KRONWAVE_PWAVE_HPP

#include <span>
#include <vector>

#include "kronwave/banded.hpp"
#include "kronwave/linalg.hpp"
#include "kronwave/splines.hpp"
#include "kronwave/tensor.hpp"

namespace kronwave {

/// Directional mass and stiffness matrices of a 2D or 3D tensor-product space.
class ScalarOperators {
public:
    explicit ScalarOperators(std::span<const BSplineSpace1D> spaces);

    int rank() const noexcept { return static_cast<int>(spaces_.size()); }
    std::span<const BSplineSpace1D> spaces() const noexcept { return spaces_; }
    const BandedMatrix& mass(int d) const { return mass_[d]; }
    const BandedMatrix& stiffness(int d) const { return stiffness_[d]; }
    std::vector<int> extents() const;

    /// (M (x) M [(x) M]) x
    CoefficientTensor apply_mass(const CoefficientTensor& x) const;

    /// Sum over directions d of the Kronecker product with K in slot d and M elsewhere.
    CoefficientTensor apply_stiffness(const CoefficientTensor& x) const;

    /// Factored mass operator, used for projections and consistent accelerations.
    const KroneckerOperator& mass_solver() const noexcept { return mass_solver_; }

private:
    std::vector<BSplineSpace1D> spaces_;
    std::vector<BandedMatrix> mass_;
    std::vector<BandedMatrix> stiffness_;
    KroneckerOperator mass_solver_;
};

/// Left-hand side of the split implicit step: the Kronecker product of
/// (M_d + tau^2 / 4 K_d) over directions, factored once per tau.
class SplitOperator {
public:
    SplitOperator(std::span<const BSplineSpace1D> spaces, double tau);

    double tau() const noexcept { return tau_; }
    int rank() const noexcept { return ops_.rank(); }
    const ScalarOperators& operators() const noexcept { return ops_; }
    std::span<const BandedMatrix> factors() const noexcept { return factors_; }
    const KroneckerOperator& solver() const noexcept { return solver_; }

private:
    double tau_;
    ScalarOperators ops_;
    std::vector<BandedMatrix> factors_;
    KroneckerOperator solver_;
};

/// Throws InvalidArgument for tau <= 0, degree 0 or rank outside {2, 3}.
SplitOperator build_split_operator(std::span<const BSplineSpace1D> spaces, double tau);

struct WaveState {
    CoefficientTensor u;      // displacement
    CoefficientTensor v;      // velocity
    CoefficientTensor a;      // acceleration
    double time = 0.0;
    int step = 0;
};

/// How velocity and displacement are advanced once the new acceleration is known.
enum class NewmarkUpdate {
    /// v += tau/2 (a_n + a_{n+1}), u += tau v_n + tau^2/4 (a_n + a_{n+1}); the
    /// acceleration solve sees u_n + tau v_n + tau^2/4 a_n. Second order, energy conserving.
    average_acceleration,
    /// v += tau/2 a_{n+1}, u = u_n + tau v_{n+1} - tau^2/2 a_{n+1}; acceleration solve
    /// sees u_n + tau v_n. Kept for comparison; not consistent with the wave equation.
    printed,
};

/// State with consistent acceleration (M (x) M) a0 = -K u0 + f0.
WaveState make_initial_state(const ScalarOperators& ops, CoefficientTensor u0, CoefficientTensor v0,
                             const CoefficientTensor* forcing = nullptr);

/// Advances one step of size op.tau(); `forcing` is the load at the new time level (null for zero).
void step(WaveState& state, const SplitOperator& op, const CoefficientTensor* forcing = nullptr,
          NewmarkUpdate update = NewmarkUpdate::average_acceleration);

struct Energies {
    double kinetic = 0.0;
    double potential = 0.0;
    double total = 0.0;
};

/// kinetic = rho/2 v^T M v, potential = 1/2 u^T K u.
Energies energies(const WaveState& state, const ScalarOperators& ops, double rho = 1.0);

}  // namespace kronwave

#endif  // KRONWAVE_PWAVE_HPP
