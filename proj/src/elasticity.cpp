// SPDX-FileCopyrightText: 2026 The kronwave authors
// SPDX-License-Identifier: Apache-2.0

#include "kronwave/elasticity.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "kronwave/assembly.hpp"
#include "kronwave/error.hpp"

namespace kronwave {

void MaterialParams::validate() const {
    if (!(rho > 0.0)) {
        throw InvalidArgument("density must be positive");
    }
    if (!(mu > 0.0)) {
        throw InvalidArgument("shear modulus mu must be positive");
    }
    if (!(lambda >= 0.0)) {
        throw InvalidArgument("Lame parameter lambda must be non-negative");
    }
}

namespace {

constexpr int index_of(Factor1D f) {
    return static_cast<int>(f);
}

BlockOperator make_full(const MaterialParams& m, BlockConvention convention) {
    using F = Factor1D;
    const double c1 = 2.0 * m.mu + m.lambda;
    BlockOperator op;
    if (convention == BlockConvention::weak_form) {
        op.block(0, 0) = {{c1, F::stiffness, F::mass}, {m.mu, F::mass, F::stiffness}};
        op.block(1, 1) = {{m.mu, F::stiffness, F::mass}, {c1, F::mass, F::stiffness}};
        op.block(0, 1) = {{m.mu, F::mixed_transposed, F::mixed}, {m.lambda, F::mixed, F::mixed_transposed}};
        op.block(1, 0) = {{m.mu, F::mixed, F::mixed_transposed}, {m.lambda, F::mixed_transposed, F::mixed}};
    } else {
        op.block(0, 0) = {{c1, F::stiffness, F::mass}, {m.mu, F::stiffness, F::mass}};
        op.block(1, 1) = {{m.mu, F::stiffness, F::mass}, {c1, F::stiffness, F::mass}};
        op.block(0, 1) = {{m.mu, F::mixed, F::mixed_transposed}, {m.lambda, F::mixed_transposed, F::mixed}};
        op.block(1, 0) = {{m.mu, F::mixed_transposed, F::mixed}, {m.lambda, F::mixed, F::mixed_transposed}};
    }
    return op;
}

TermList scaled(const TermList& terms, double s) {
    TermList out = terms;
    for (auto& t : out) {
        t.coefficient *= s;
    }
    return out;
}

void check_pair(const VectorCoefficients& u, const std::vector<int>& extents, const char* what) {
    for (const auto* t : {&u.x, &u.y}) {
        const auto e = t->extents();
        if (!std::equal(e.begin(), e.end(), extents.begin(), extents.end())) {
            throw InvalidArgument(std::string{what} + ": component shape does not match the discrete space");
        }
    }
}

VectorCoefficients combine(double a, const VectorCoefficients& u, double b, const VectorCoefficients& v) {
    return {kronwave::combine(a, u.x, b, v.x), kronwave::combine(a, u.y, b, v.y)};
}

double dot(const VectorCoefficients& u, const VectorCoefficients& v) {
    return kronwave::dot(u.x, v.x) + kronwave::dot(u.y, v.y);
}

}  // namespace

ElasticOperator::ElasticOperator(std::span<const BSplineSpace1D> spaces, MaterialParams material, double tau,
                                 double sigma, BlockConvention convention)
: spaces_(spaces.begin(), spaces.end())
, material_{material}
, tau_{tau}
, sigma_{sigma} {
    if (spaces.size() != 2) {
        throw InvalidArgument("elasticity is implemented in 2D only");
    }
    material_.validate();
    if (!(tau > 0.0)) {
        throw InvalidArgument("time step must be positive");
    }
    if (!(sigma > 0.0)) {
        throw InvalidArgument("splitting weight sigma must be positive");
    }
    for (int d = 0; d < 2; ++d) {
        const BandedMatrix b = assemble_mixed(spaces_[d]);
        matrices_[d][index_of(Factor1D::mass)] = assemble_mass(spaces_[d]);
        matrices_[d][index_of(Factor1D::stiffness)] = assemble_stiffness(spaces_[d]);
        matrices_[d][index_of(Factor1D::mixed_transposed)] = b.transposed();
        matrices_[d][index_of(Factor1D::mixed)] = b;
    }

    full_ = make_full(material_, convention);
    lower_.block(0, 0) = scaled(full_.block(0, 0), 0.5);
    lower_.block(1, 0) = full_.block(1, 0);
    lower_.block(1, 1) = scaled(full_.block(1, 1), 0.5);
    upper_.block(0, 0) = scaled(full_.block(0, 0), 0.5);
    upper_.block(0, 1) = full_.block(0, 1);
    upper_.block(1, 1) = scaled(full_.block(1, 1), 0.5);

    const double s = sigma_ * tau_ * tau_ / material_.rho;
    const double c1 = 2.0 * material_.mu + material_.lambda;
    const std::array<std::array<double, 2>, 2> weights{{{c1, material_.mu}, {material_.mu, c1}}};
    for (int c = 0; c < 2; ++c) {
        for (int d = 0; d < 2; ++d) {
            split_factors_[c].push_back(
                kronwave::combine(1.0, matrix(d, Factor1D::mass), s * weights[c][d], matrix(d, Factor1D::stiffness)));
        }
        split_solver_[c] = KroneckerOperator{split_factors_[c]};
    }
    const std::array<BandedMatrix, 2> mass{matrix(0, Factor1D::mass), matrix(1, Factor1D::mass)};
    mass_solver_ = KroneckerOperator{mass};
}

std::vector<int> ElasticOperator::extents() const {
    return coefficient_extents(spaces_);
}

const BandedMatrix& ElasticOperator::matrix(int direction, Factor1D kind) const {
    return matrices_[direction][index_of(kind)];
}

CoefficientTensor ElasticOperator::apply(const TermList& terms, const CoefficientTensor& u) const {
    CoefficientTensor out{u.extents()};
    for (const auto& t : terms) {
        const std::array<const BandedMatrix*, 2> f{&matrix(0, t.x), &matrix(1, t.y)};
        out.add_scaled(t.coefficient, kron_apply(std::span<const BandedMatrix* const>{f}, u));
    }
    return out;
}

VectorCoefficients ElasticOperator::apply(const BlockOperator& op, const VectorCoefficients& u) const {
    VectorCoefficients out{apply(op.block(0, 0), u.x), apply(op.block(1, 1), u.y)};
    out.x.add_scaled(1.0, apply(op.block(0, 1), u.y));
    out.y.add_scaled(1.0, apply(op.block(1, 0), u.x));
    return out;
}

CoefficientTensor ElasticOperator::apply_mass(const CoefficientTensor& u) const {
    const std::array<const BandedMatrix*, 2> f{&matrix(0, Factor1D::mass), &matrix(1, Factor1D::mass)};
    return kron_apply(std::span<const BandedMatrix* const>{f}, u).scale(material_.rho);
}

CoefficientTensor ElasticOperator::apply_split(int component, const CoefficientTensor& u) const {
    return kron_apply(std::span<const BandedMatrix>{split_factors_[component]}, u).scale(material_.rho);
}

CoefficientTensor ElasticOperator::solve_split(int component, const CoefficientTensor& r) const {
    return kron_solve(split_solver_[component], r).scale(1.0 / material_.rho);
}

DenseMatrix ElasticOperator::dense(const BlockOperator& op) const {
    const int n = spaces_[0].basis_count() * spaces_[1].basis_count();
    if (2 * n > kDenseOracleLimit) {
        throw InvalidArgument("dense block operator limited to " + std::to_string(kDenseOracleLimit) + " unknowns");
    }
    DenseMatrix out{2 * n};
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
            for (const auto& t : op.block(r, c)) {
                const std::array<BandedMatrix, 2> f{matrix(0, t.x), matrix(1, t.y)};
                const DenseMatrix k = kron_dense(f);
                for (int i = 0; i < n; ++i) {
                    for (int j = 0; j < n; ++j) {
                        out(r * n + i, c * n + j) += t.coefficient * k(i, j);
                    }
                }
            }
        }
    }
    return out;
}

ElasticOperator build_elastic_operator(std::span<const BSplineSpace1D> spaces, const MaterialParams& material,
                                       double tau, double sigma, BlockConvention convention) {
    return ElasticOperator{spaces, material, tau, sigma, convention};
}

VectorCoefficients predictor_step(const ElasticState& state, const ElasticOperator& op,
                                  const VectorCoefficients* forcing) {
    const auto extents = op.extents();
    check_pair(state.current, extents, "predictor");
    check_pair(state.previous, extents, "predictor");
    const double tau2 = op.tau() * op.tau();

    // increment form: L1 (U~ - 2U^n + U^{n-1}) = tau^2 (f - Upsilon U^n)
    VectorCoefficients r = op.apply(op.full(), state.current);
    r.x.scale(-tau2);
    r.y.scale(-tau2);
    if (forcing != nullptr) {
        check_pair(*forcing, extents, "forcing");
        r.x.add_scaled(tau2, forcing->x);
        r.y.add_scaled(tau2, forcing->y);
    }
    const double coupling = 2.0 * op.sigma() * tau2;
    VectorCoefficients w;
    w.x = op.solve_split(0, r.x);
    r.y.add_scaled(-coupling, op.apply(op.lower().block(1, 0), w.x));
    w.y = op.solve_split(1, r.y);

    w.x.add_scaled(2.0, state.current.x).add_scaled(-1.0, state.previous.x);
    w.y.add_scaled(2.0, state.current.y).add_scaled(-1.0, state.previous.y);
    return w;
}

void corrector_step(ElasticState& state, const ElasticOperator& op, const VectorCoefficients& predicted,
                    const VectorCoefficients* /*forcing*/) {
    const auto extents = op.extents();
    check_pair(predicted, extents, "corrector");
    const double coupling = 2.0 * op.sigma() * op.tau() * op.tau();

    // L2 (U^{n+1} - 2U^n + U^{n-1}) = rho M (U~ - 2U^n + U^{n-1}); the load enters through U~
    VectorCoefficients inc = predicted;
    inc.x.add_scaled(-2.0, state.current.x).add_scaled(1.0, state.previous.x);
    inc.y.add_scaled(-2.0, state.current.y).add_scaled(1.0, state.previous.y);
    VectorCoefficients g{op.apply_mass(inc.x), op.apply_mass(inc.y)};

    VectorCoefficients w;
    w.y = op.solve_split(1, g.y);
    g.x.add_scaled(-coupling, op.apply(op.upper().block(0, 1), w.y));
    w.x = op.solve_split(0, g.x);

    w.x.add_scaled(2.0, state.current.x).add_scaled(-1.0, state.previous.x);
    w.y.add_scaled(2.0, state.current.y).add_scaled(-1.0, state.previous.y);
    state.previous = std::move(state.current);
    state.current = std::move(w);
    state.time += op.tau();
    ++state.step;
}

void elastic_step(ElasticState& state, const ElasticOperator& op, const VectorCoefficients* forcing) {
    const VectorCoefficients predicted = predictor_step(state, op, forcing);
    corrector_step(state, op, predicted, forcing);
}

ElasticState bootstrap_first_step(const VectorCoefficients& u0, const VectorCoefficients& v0,
                                  const ElasticOperator& op, const VectorCoefficients* forcing) {
    const auto extents = op.extents();
    check_pair(u0, extents, "initial displacement");
    check_pair(v0, extents, "initial velocity");
    VectorCoefficients r = op.apply(op.full(), u0);
    r.x.scale(-1.0);
    r.y.scale(-1.0);
    if (forcing != nullptr) {
        check_pair(*forcing, extents, "initial forcing");
        r.x.add_scaled(1.0, forcing->x);
        r.y.add_scaled(1.0, forcing->y);
    }
    const double tau = op.tau();
    const double inv_rho = 1.0 / op.material().rho;
    kron_solve_in_place(op.mass_solver(), r.x);
    kron_solve_in_place(op.mass_solver(), r.y);

    ElasticState s;
    s.previous = u0;
    s.current = u0;
    s.current.x.add_scaled(tau, v0.x).add_scaled(0.5 * tau * tau * inv_rho, r.x);
    s.current.y.add_scaled(tau, v0.y).add_scaled(0.5 * tau * tau * inv_rho, r.y);
    s.time = tau;
    s.step = 1;
    return s;
}

double star_norm(const ElasticState& state, const ElasticOperator& op, StarNormWeight weight) {
    const double tau = op.tau();
    const double coupling = 2.0 * op.sigma() * tau * tau;
    const VectorCoefficients v = combine(1.0 / tau, state.current, -1.0 / tau, state.previous);
    const VectorCoefficients mean = combine(0.5, state.current, 0.5, state.previous);

    // |v|_D^2 = (L2 v)^T (rho M)^{-1} (L2 v), since L1^T = L2
    VectorCoefficients z{op.apply_split(0, v.x), op.apply_split(1, v.y)};
    z.x.add_scaled(coupling, op.apply(op.upper().block(0, 1), v.y));
    const double inv_rho = 1.0 / op.material().rho;
    double velocity = inv_rho * (kronwave::dot(z.x, kron_solve(op.mass_solver(), z.x))
                                 + kronwave::dot(z.y, kron_solve(op.mass_solver(), z.y)));
    if (weight == StarNormWeight::energy) {
        velocity -= 0.25 * tau * tau * dot(v, op.apply(op.full(), v));
    }
    const double displacement = dot(mean, op.apply(op.full(), mean));
    return std::sqrt(std::max(0.0, velocity + displacement));
}

ElasticEnergies elastic_energies(const ElasticState& state, const ElasticOperator& op) {
    const double tau = op.tau();
    const VectorCoefficients v = combine(1.0 / tau, state.current, -1.0 / tau, state.previous);
    const VectorCoefficients mean = combine(0.5, state.current, 0.5, state.previous);
    return elastic_energies(mean, v, op);
}

ElasticEnergies elastic_energies(const VectorCoefficients& u, const VectorCoefficients& v, const ElasticOperator& op) {
    ElasticEnergies e;
    e.kinetic = 0.5 * (kronwave::dot(v.x, op.apply_mass(v.x)) + kronwave::dot(v.y, op.apply_mass(v.y)));
    e.potential = 0.5 * dot(u, op.apply(op.full(), u));
    e.total = e.kinetic + e.potential;
    return e;
}

}  // namespace kronwave
