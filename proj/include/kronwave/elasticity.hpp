// SPDX-FileCopyrightText: 2026 The kronwave authors
// SPDX-License-Identifier: Apache-2.0

#ifndef KRONWAVE_ELASTICITY_HPP
#define KRONWAVE_ELASTICITY_HPP

#include <array>
#include <span>
#include <vector>

#include "kronwave/banded.hpp"
#include "kronwave/linalg.hpp"
#include "kronwave/splines.hpp"
#include "kronwave/tensor.hpp"

namespace kronwave {

/// Isotropic material: density rho and Lame parameters mu, lambda.
struct MaterialParams {
    double rho = 1.0;
    double mu = 1.0;
    double lambda = 1.0;

    /// Throws InvalidArgument unless rho > 0, mu > 0, lambda >= 0.
    void validate() const;
};

/// One-dimensional factor appearing in an elasticity Kronecker term.
enum class Factor1D { mass, stiffness, mixed, mixed_transposed };

struct KronTerm {
    double coefficient = 0.0;
    Factor1D x = Factor1D::mass;
    Factor1D y = Factor1D::mass;
};

using TermList = std::vector<KronTerm>;

/// 2 x 2 block operator acting on (U_x, U_y); block(r, c) maps component c into row r.
struct BlockOperator {
    std::array<TermList, 4> blocks;

    TermList& block(int r, int c) { return blocks[2 * r + c]; }
    const TermList& block(int r, int c) const { return blocks[2 * r + c]; }
};

/// How the off-diagonal and diagonal blocks are laid out.
enum class BlockConvention {
    /// Blocks obtained from the symmetric-gradient weak form with rows indexing test functions.
    weak_form,
    /// Blocks exactly as typeset in the source derivation (repeated K_x (x) M_y on the
    /// diagonal, B / B^T swapped off the diagonal). Only for comparison tests.
    printed,
};

/// Displacement coefficients of both components.
struct VectorCoefficients {
    CoefficientTensor x;
    CoefficientTensor y;
};

/// The 2D elasticity operator, its alternating-triangular parts and the
/// Kronecker-factored diagonal blocks used by the predictor and corrector.
class ElasticOperator {
public:
    ElasticOperator(std::span<const BSplineSpace1D> spaces, MaterialParams material, double tau,
                    double sigma = 0.25, BlockConvention convention = BlockConvention::weak_form);

    const MaterialParams& material() const noexcept { return material_; }
    double tau() const noexcept { return tau_; }
    double sigma() const noexcept { return sigma_; }
    std::span<const BSplineSpace1D> spaces() const noexcept { return spaces_; }
    std::vector<int> extents() const;

    const BandedMatrix& matrix(int direction, Factor1D kind) const;

    const BlockOperator& full() const noexcept { return full_; }
    const BlockOperator& lower() const noexcept { return lower_; }
    const BlockOperator& upper() const noexcept { return upper_; }

    /// Unfactored directional factors of component c's diagonal block:
    /// (M_x + s a_c K_x) and (M_y + s b_c K_y), s = sigma tau^2 / rho.
    std::span<const BandedMatrix> split_factors(int component) const { return split_factors_[component]; }
    const KroneckerOperator& split_solver(int component) const { return split_solver_[component]; }
    const KroneckerOperator& mass_solver() const noexcept { return mass_solver_; }

    /// sum_k coefficient_k (A_x (x) A_y) u
    CoefficientTensor apply(const TermList& terms, const CoefficientTensor& u) const;
    VectorCoefficients apply(const BlockOperator& op, const VectorCoefficients& u) const;

    /// rho (M_x (x) M_y) u, per component.
    CoefficientTensor apply_mass(const CoefficientTensor& u) const;

    /// rho (split factors of component c) u.
    CoefficientTensor apply_split(int component, const CoefficientTensor& u) const;
    /// Inverse of apply_split.
    CoefficientTensor solve_split(int component, const CoefficientTensor& r) const;

    /// Dense matrix of a block operator (2 N unknowns, x component first). Small meshes only.
    DenseMatrix dense(const BlockOperator& op) const;

private:
    std::vector<BSplineSpace1D> spaces_;
    MaterialParams material_;
    double tau_;
    double sigma_;
    std::array<std::array<BandedMatrix, 4>, 2> matrices_;
    BlockOperator full_;
    BlockOperator lower_;
    BlockOperator upper_;
    std::array<std::vector<BandedMatrix>, 2> split_factors_;
    std::array<KroneckerOperator, 2> split_solver_;
    KroneckerOperator mass_solver_;
};

/// Throws InvalidArgument for invalid material, tau <= 0, sigma <= 0 or degree 0.
ElasticOperator build_elastic_operator(std::span<const BSplineSpace1D> spaces, const MaterialParams& material,
                                       double tau, double sigma = 0.25,
                                       BlockConvention convention = BlockConvention::weak_form);

/// Two consecutive displacement levels of the three-level scheme.
struct ElasticState {
    VectorCoefficients current;   // U^n
    VectorCoefficients previous;  // U^{n-1}
    double time = 0.0;
    int step = 0;
};

/// Predictor: lower-triangular solve, x component first, then y.
VectorCoefficients predictor_step(const ElasticState& state, const ElasticOperator& op,
                                  const VectorCoefficients* forcing = nullptr);

/// Corrector: upper-triangular solve, y component first, then x. Rotates the
/// state so that current holds U^{n+1}.
void corrector_step(ElasticState& state, const ElasticOperator& op, const VectorCoefficients& predicted,
                    const VectorCoefficients* forcing = nullptr);

/// Predictor followed by corrector.
void elastic_step(ElasticState& state, const ElasticOperator& op, const VectorCoefficients* forcing = nullptr);

/// U^1 = U^0 + tau V^0 + tau^2 / 2 A^0 with (rho M) A^0 = f^0 - Upsilon U^0.
ElasticState bootstrap_first_step(const VectorCoefficients& u0, const VectorCoefficients& v0,
                                  const ElasticOperator& op, const VectorCoefficients* forcing = nullptr);

enum class StarNormWeight {
    /// Velocity part weighted by D, as in the stated estimate.
    printed,
    /// Velocity part weighted by D - tau^2 / 4 Upsilon; exactly conserved for f = 0.
    energy,
};

/// ||U^{n+1}||_* for the pair (current, previous) of the state.
double star_norm(const ElasticState& state, const ElasticOperator& op, StarNormWeight weight = StarNormWeight::printed);

struct ElasticEnergies {
    double kinetic = 0.0;
    double potential = 0.0;
    double total = 0.0;
};

/// kinetic = rho/2 |(U^n - U^{n-1}) / tau|_M^2, potential = 1/2 |(U^n + U^{n-1}) / 2|_Upsilon^2.
ElasticEnergies elastic_energies(const ElasticState& state, const ElasticOperator& op);

/// Energies of a displacement/velocity pair at a single time level.
ElasticEnergies elastic_energies(const VectorCoefficients& u, const VectorCoefficients& v, const ElasticOperator& op);

}  // namespace kronwave

#endif  // KRONWAVE_ELASTICITY_HPP
