// SPDX-FileCopyrightText: 2026 The kronwave authors
// SPDX-License-Identifier: Apache-2.0

#include "kronwave/pwave.hpp"

#include <algorithm>
#include <string>

#include "kronwave/assembly.hpp"
#include "kronwave/error.hpp"

namespace kronwave {

namespace {

std::vector<BandedMatrix> mass_matrices(std::span<const BSplineSpace1D> spaces) {
    std::vector<BandedMatrix> out;
    for (const auto& s : spaces) {
        out.push_back(assemble_mass(s));
    }
    return out;
}

void check_shape(const CoefficientTensor& t, const std::vector<int>& extents, const char* what) {
    const auto e = t.extents();
    if (!std::equal(e.begin(), e.end(), extents.begin(), extents.end())) {
        throw InvalidArgument(std::string{what} + ": tensor shape does not match the discrete space");
    }
}

}  // namespace

ScalarOperators::ScalarOperators(std::span<const BSplineSpace1D> spaces)
: spaces_(spaces.begin(), spaces.end())
, mass_{mass_matrices(spaces)} {
    if (spaces.size() < 2 || spaces.size() > 3) {
        throw InvalidArgument("scalar wave operators need 2 or 3 directions, got " + std::to_string(spaces.size()));
    }
    for (const auto& s : spaces_) {
        stiffness_.push_back(assemble_stiffness(s));
    }
    mass_solver_ = KroneckerOperator{mass_};
}

std::vector<int> ScalarOperators::extents() const {
    return coefficient_extents(spaces_);
}

CoefficientTensor ScalarOperators::apply_mass(const CoefficientTensor& x) const {
    return kron_apply(std::span<const BandedMatrix>{mass_}, x);
}

CoefficientTensor ScalarOperators::apply_stiffness(const CoefficientTensor& x) const {
    CoefficientTensor out{x.extents()};
    std::vector<const BandedMatrix*> f(rank());
    for (int k = 0; k < rank(); ++k) {
        for (int d = 0; d < rank(); ++d) {
            f[d] = d == k ? &stiffness_[d] : &mass_[d];
        }
        out.add_scaled(1.0, kron_apply(std::span<const BandedMatrix* const>{f}, x));
    }
    return out;
}

SplitOperator::SplitOperator(std::span<const BSplineSpace1D> spaces, double tau)
: tau_{tau}
, ops_{spaces} {
    if (!(tau > 0.0)) {
        throw InvalidArgument("time step must be positive");
    }
    const double eta = 0.25 * tau * tau;
    for (int d = 0; d < ops_.rank(); ++d) {
        factors_.push_back(combine(1.0, ops_.mass(d), eta, ops_.stiffness(d)));
    }
    solver_ = KroneckerOperator{factors_};
}

SplitOperator build_split_operator(std::span<const BSplineSpace1D> spaces, double tau) {
    return SplitOperator{spaces, tau};
}

WaveState make_initial_state(const ScalarOperators& ops, CoefficientTensor u0, CoefficientTensor v0,
                             const CoefficientTensor* forcing) {
    const auto extents = ops.extents();
    check_shape(u0, extents, "initial displacement");
    check_shape(v0, extents, "initial velocity");
    CoefficientTensor rhs = ops.apply_stiffness(u0);
    rhs.scale(-1.0);
    if (forcing != nullptr) {
        check_shape(*forcing, extents, "initial forcing");
        rhs.add_scaled(1.0, *forcing);
    }
    kron_solve_in_place(ops.mass_solver(), rhs);
    return WaveState{std::move(u0), std::move(v0), std::move(rhs), 0.0, 0};
}

void step(WaveState& state, const SplitOperator& op, const CoefficientTensor* forcing, NewmarkUpdate update) {
    const auto extents = op.operators().extents();
    check_shape(state.u, extents, "step");
    check_shape(state.v, extents, "step");
    check_shape(state.a, extents, "step");
    const double tau = op.tau();
    const double eta = 0.25 * tau * tau;

    CoefficientTensor predicted = state.u;
    predicted.add_scaled(tau, state.v);
    if (update == NewmarkUpdate::average_acceleration) {
        predicted.add_scaled(eta, state.a);
    }
    CoefficientTensor accel = op.operators().apply_stiffness(predicted);
    accel.scale(-1.0);
    if (forcing != nullptr) {
        check_shape(*forcing, extents, "forcing");
        accel.add_scaled(1.0, *forcing);
    }
    kron_solve_in_place(op.solver(), accel);

    switch (update) {
    case NewmarkUpdate::average_acceleration:
        // predicted already holds u + tau v + eta a_n
        state.v.add_scaled(0.5 * tau, state.a);
        state.v.add_scaled(0.5 * tau, accel);
        state.u = std::move(predicted);
        state.u.add_scaled(eta, accel);
        break;
    case NewmarkUpdate::printed:
        state.v.add_scaled(0.5 * tau, accel);
        state.u.add_scaled(tau, state.v);
        state.u.add_scaled(-0.5 * tau * tau, accel);
        break;
    }
    state.a = std::move(accel);
    state.time += tau;
    ++state.step;
}

Energies energies(const WaveState& state, const ScalarOperators& ops, double rho) {
    Energies e;
    e.kinetic = 0.5 * rho * dot(state.v, ops.apply_mass(state.v));
    e.potential = 0.5 * dot(state.u, ops.apply_stiffness(state.u));
    e.total = e.kinetic + e.potential;
    return e;
}

}  // namespace kronwave
