// SPDX-FileCopyrightText: 2026 The kronwave authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <Eigen/Dense>

#include <cmath>
#include <random>

#include "kronwave/elasticity.hpp"
#include "kronwave/error.hpp"
#include "oracles.hpp"

using namespace kronwave;

namespace {

std::vector<BSplineSpace1D> square(int p, int n) {
    return {BSplineSpace1D::uniform(p, n), BSplineSpace1D::uniform(p, n)};
}

std::vector<double> flat(const VectorCoefficients& u) {
    std::vector<double> out = oracle::as_vector(u.x);
    const auto y = oracle::as_vector(u.y);
    out.insert(out.end(), y.begin(), y.end());
    return out;
}

VectorCoefficients unflat(const std::vector<double>& v, std::span<const int> extents) {
    VectorCoefficients u{CoefficientTensor{extents}, CoefficientTensor{extents}};
    const std::size_t n = u.x.size();
    for (std::size_t i = 0; i < n; ++i) {
        u.x[i] = v[i];
        u.y[i] = v[n + i];
    }
    return u;
}

VectorCoefficients random_pair(std::span<const int> extents, std::mt19937& rng) {
    return {oracle::random_tensor(extents, rng), oracle::random_tensor(extents, rng)};
}

oracle::Dense from_library(const DenseMatrix& d) {
    oracle::Dense out(d.size, std::vector<double>(d.size));
    for (int i = 0; i < d.size; ++i) {
        for (int j = 0; j < d.size; ++j) {
            out[i][j] = d(i, j);
        }
    }
    return out;
}

double max_abs_diff(const oracle::Dense& a, const oracle::Dense& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a.size(); ++j) {
            m = std::max(m, std::abs(a[i][j] - b[i][j]));
        }
    }
    return m;
}

oracle::Dense block_diag(const oracle::Dense& a, const oracle::Dense& b) {
    const std::size_t n = a.size();
    oracle::Dense out(2 * n, std::vector<double>(2 * n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            out[i][j] = a[i][j];
            out[n + i][n + j] = b[i][j];
        }
    }
    return out;
}

oracle::Dense scaled(double s, const oracle::Dense& a) {
    return oracle::add(s, a, 0.0, a);
}

// rho (M (x) M) on both components.
oracle::Dense dense_mass(int p, int n, double rho) {
    const auto m = oracle::gram(p, n, oracle::Gram::mass);
    const auto mm = scaled(rho, oracle::kron({m, m}));
    return block_diag(mm, mm);
}

// Rigid rotation (-y, x) in Greville coefficients.
VectorCoefficients rotation(int p, int n_el) {
    const int n = n_el + p;
    VectorCoefficients r{CoefficientTensor{n, n}, CoefficientTensor{n, n}};
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            r.x(i, j) = -oracle::greville(p, n_el, j);
            r.y(i, j) = oracle::greville(p, n_el, i);
        }
    }
    return r;
}

const MaterialParams kMaterial{1.3, 1.0, 2.0};

}  // namespace

TEST(Elasticity, FullOperatorMatchesBilinearForm) {
    for (int p : {1, 2, 3}) {
        const auto spaces = square(p, 3);
        const ElasticOperator op{spaces, kMaterial, 0.01};
        const auto ref = oracle::elastic_stiffness(p, 3, kMaterial.mu, kMaterial.lambda);
        EXPECT_LE(max_abs_diff(from_library(op.dense(op.full())), ref), 1e-13) << "p=" << p;
    }
}

TEST(Elasticity, ShearOnlyMaterialBlocks) {
    const MaterialParams m{1.0, 1.0, 0.0};
    const auto spaces = square(2, 2);
    const ElasticOperator op{spaces, m, 0.1};
    const auto mx = oracle::gram(2, 2, oracle::Gram::mass);
    const auto kx = oracle::gram(2, 2, oracle::Gram::stiffness);
    const auto bx = oracle::gram(2, 2, oracle::Gram::mixed);
    oracle::Dense bt = bx;
    for (std::size_t i = 0; i < bx.size(); ++i) {
        for (std::size_t j = 0; j < bx.size(); ++j) {
            bt[i][j] = bx[j][i];
        }
    }
    const auto d = from_library(op.dense(op.full()));
    const std::size_t n = mx.size() * mx.size();
    const auto b11 = oracle::add(2.0, oracle::kron({kx, mx}), 1.0, oracle::kron({mx, kx}));
    const auto b12 = oracle::kron({bt, bx});
    double err = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            err = std::max(err, std::abs(d[i][j] - b11[i][j]));
            err = std::max(err, std::abs(d[i][n + j] - b12[i][j]));
        }
    }
    EXPECT_LE(err, 1e-14);
}

TEST(Elasticity, TriangularPartsSumToFullOperator) {
    for (auto conv : {BlockConvention::weak_form, BlockConvention::printed}) {
        const auto spaces = square(2, 4);
        const ElasticOperator op{spaces, kMaterial, 0.02, 0.25, conv};
        const auto full = from_library(op.dense(op.full()));
        const auto sum = oracle::add(1.0, from_library(op.dense(op.lower())), 1.0, from_library(op.dense(op.upper())));
        EXPECT_LE(max_abs_diff(full, sum), 1e-13);
        EXPECT_TRUE(op.lower().block(0, 1).empty());
        EXPECT_TRUE(op.upper().block(1, 0).empty());
    }
}

TEST(Elasticity, OperatorIsSymmetric) {
    const auto spaces = square(3, 3);
    const ElasticOperator op{spaces, kMaterial, 0.02};
    const auto d = op.dense(op.full());
    double err = 0.0;
    for (int i = 0; i < d.size; ++i) {
        for (int j = 0; j < d.size; ++j) {
            err = std::max(err, std::abs(d(i, j) - d(j, i)));
        }
    }
    EXPECT_LE(err, 1e-13);
}

TEST(Elasticity, RigidMotionsAreInKernel) {
    const int p = 2, n = 4;
    const auto spaces = square(p, n);
    const ElasticOperator op{spaces, kMaterial, 0.02};
    const auto e = op.extents();
    const VectorCoefficients tx{CoefficientTensor{e, 1.0}, CoefficientTensor{e, 0.0}};
    const VectorCoefficients ty{CoefficientTensor{e, 0.0}, CoefficientTensor{e, 1.0}};
    for (const auto& r : {tx, ty, rotation(p, n)}) {
        const auto out = op.apply(op.full(), r);
        EXPECT_LE(std::max(max_abs(out.x), max_abs(out.y)), 1e-12);
    }
}

TEST(Elasticity, PrintedLayoutBreaksRotationKernel) {
    const int p = 2, n = 4;
    const auto spaces = square(p, n);
    const ElasticOperator op{spaces, kMaterial, 0.02, 0.25, BlockConvention::printed};
    const auto out = op.apply(op.full(), rotation(p, n));
    EXPECT_GT(std::max(max_abs(out.x), max_abs(out.y)), 1e-3);
}

TEST(Elasticity, RejectsInvalidParameters) {
    const auto spaces = square(1, 2);
    EXPECT_THROW(build_elastic_operator(spaces, kMaterial, 0.0), InvalidArgument);
    EXPECT_THROW(build_elastic_operator(spaces, kMaterial, 0.1, 0.0), InvalidArgument);
    EXPECT_THROW(build_elastic_operator(spaces, MaterialParams{1.0, 0.0, 1.0}, 0.1), InvalidArgument);
    EXPECT_THROW(build_elastic_operator(spaces, MaterialParams{1.0, 1.0, -1.0}, 0.1), InvalidArgument);
    EXPECT_THROW(build_elastic_operator(spaces, MaterialParams{0.0, 1.0, 1.0}, 0.1), InvalidArgument);
    const std::vector<BSplineSpace1D> one{BSplineSpace1D::uniform(1, 2)};
    EXPECT_THROW(build_elastic_operator(one, kMaterial, 0.1), InvalidArgument);
}

// One step against the dense factored scheme L1 (rho M)^-1 L2 (U+ - 2U + U-) = tau^2 (f - Upsilon U).
TEST(Elasticity, StepMatchesDenseSplitScheme) {
    const int p = 2, n = 3;
    const double tau = 0.05, sigma = 0.25;
    const auto spaces = square(p, n);
    const ElasticOperator op{spaces, kMaterial, tau, sigma};
    const double s = sigma * tau * tau / kMaterial.rho;
    const double c1 = 2.0 * kMaterial.mu + kMaterial.lambda;
    const auto m = oracle::gram(p, n, oracle::Gram::mass);
    const auto k = oracle::gram(p, n, oracle::Gram::stiffness);
    const auto f1 = scaled(kMaterial.rho, oracle::kron({oracle::add(1.0, m, s * c1, k), oracle::add(1.0, m, s * kMaterial.mu, k)}));
    const auto f2 = scaled(kMaterial.rho, oracle::kron({oracle::add(1.0, m, s * kMaterial.mu, k), oracle::add(1.0, m, s * c1, k)}));
    const auto ups = oracle::elastic_stiffness(p, n, kMaterial.mu, kMaterial.lambda);
    const std::size_t nn = m.size() * m.size();
    auto l1 = block_diag(f1, f2);
    auto l2 = l1;
    for (std::size_t i = 0; i < nn; ++i) {
        for (std::size_t j = 0; j < nn; ++j) {
            l1[nn + i][j] = 2.0 * sigma * tau * tau * ups[nn + i][j];
            l2[i][nn + j] = 2.0 * sigma * tau * tau * ups[i][nn + j];
        }
    }
    const auto mass = dense_mass(p, n, kMaterial.rho);

    std::mt19937 rng(5);
    ElasticState st{random_pair(op.extents(), rng), random_pair(op.extents(), rng)};
    const VectorCoefficients load = random_pair(op.extents(), rng);
    const auto un = flat(st.current), um = flat(st.previous), f = flat(load);

    auto rhs = oracle::multiply(ups, un);
    for (std::size_t i = 0; i < rhs.size(); ++i) {
        rhs[i] = tau * tau * (f[i] - rhs[i]);
    }
    auto inc = oracle::solve(l1, rhs);
    inc = oracle::solve(l2, oracle::multiply(mass, inc));
    std::vector<double> expected(inc.size());
    for (std::size_t i = 0; i < inc.size(); ++i) {
        expected[i] = inc[i] + 2.0 * un[i] - um[i];
    }

    elastic_step(st, op, &load);
    EXPECT_LE(oracle::max_abs_diff(expected, flat(st.current)), 1e-11 * (1.0 + oracle::max_abs(expected)));
    EXPECT_EQ(oracle::max_abs_diff(un, flat(st.previous)), 0.0);
    EXPECT_EQ(st.step, 1);
    EXPECT_DOUBLE_EQ(st.time, tau);
}

// Splitting defect: the factored operator D against rho M + 2 sigma tau^2 Upsilon.
TEST(Elasticity, SplittingDefectIsFourthOrder) {
    const int p = 2, n = 4;
    const auto spaces = square(p, n);
    const auto ups = oracle::elastic_stiffness(p, n, kMaterial.mu, kMaterial.lambda);
    const auto mass = dense_mass(p, n, kMaterial.rho);
    std::vector<double> defects;
    for (double tau : {0.01, 0.005, 0.0025, 0.00125}) {
        const ElasticOperator op{spaces, kMaterial, tau};
        const auto e = op.extents();
        std::mt19937 rng(3);
        const VectorCoefficients x = random_pair(e, rng);
        VectorCoefficients load{combine(1.0 / (tau * tau), x.x, 0.0, x.x), combine(1.0 / (tau * tau), x.y, 0.0, x.y)};
        ElasticState st{VectorCoefficients{CoefficientTensor{e}, CoefficientTensor{e}},
                        VectorCoefficients{CoefficientTensor{e}, CoefficientTensor{e}}};
        elastic_step(st, op, &load);
        const auto unsplit = oracle::solve(oracle::add(1.0, mass, 0.5 * tau * tau, ups), flat(x));
        defects.push_back(oracle::max_abs_diff(unsplit, flat(st.current)) / oracle::max_abs(unsplit));
    }
    for (std::size_t i = 1; i < defects.size(); ++i) {
        EXPECT_GE(defects[i - 1] / defects[i], 14.0) << "halving " << i << ": " << defects[i - 1] << " -> " << defects[i];
    }
}

// Trajectories of the split and unsplit three-level schemes agree to second order.
TEST(Elasticity, ConvergesToUnsplitScheme) {
    const int p = 2, n = 3;
    const auto spaces = square(p, n);
    const auto ups = oracle::elastic_stiffness(p, n, kMaterial.mu, kMaterial.lambda);
    const auto mass = dense_mass(p, n, kMaterial.rho);
    const double horizon = 0.16;
    std::vector<double> diffs;
    for (int steps : {8, 16, 32}) {
        const double tau = horizon / steps;
        const ElasticOperator op{spaces, kMaterial, tau};
        const auto e = op.extents();
        std::mt19937 rng(11);
        const VectorCoefficients u0 = random_pair(e, rng);
        const VectorCoefficients v0{CoefficientTensor{e}, CoefficientTensor{e}};
        ElasticState st = bootstrap_first_step(u0, v0, op);
        auto cur = flat(st.current), prev = flat(st.previous);
        const auto lhs = oracle::add(1.0, mass, 0.5 * tau * tau, ups);
        for (int k = 1; k < steps; ++k) {
            elastic_step(st, op);
            auto rhs = oracle::multiply(ups, cur);
            for (auto& v : rhs) {
                v *= -tau * tau;
            }
            const auto inc = oracle::solve(lhs, rhs);
            for (std::size_t i = 0; i < cur.size(); ++i) {
                const double next = inc[i] + 2.0 * cur[i] - prev[i];
                prev[i] = cur[i];
                cur[i] = next;
            }
        }
        diffs.push_back(oracle::max_abs_diff(cur, flat(st.current)));
    }
    for (std::size_t i = 1; i < diffs.size(); ++i) {
        EXPECT_GE(diffs[i - 1] / diffs[i], 3.5) << diffs[i - 1] << " -> " << diffs[i];
    }
}

TEST(Elasticity, ZeroStateStaysZero) {
    const auto spaces = square(2, 3);
    const ElasticOperator op{spaces, kMaterial, 0.05};
    const auto e = op.extents();
    ElasticState st{VectorCoefficients{CoefficientTensor{e}, CoefficientTensor{e}},
                    VectorCoefficients{CoefficientTensor{e}, CoefficientTensor{e}}};
    for (int k = 0; k < 5; ++k) {
        elastic_step(st, op);
    }
    EXPECT_EQ(max_abs(st.current.x) + max_abs(st.current.y), 0.0);
    EXPECT_EQ(star_norm(st, op), 0.0);
}

TEST(Elasticity, TranslationMovesRigidly) {
    const auto spaces = square(2, 3);
    const double tau = 0.05;
    const ElasticOperator op{spaces, kMaterial, tau};
    const auto e = op.extents();
    const VectorCoefficients u0{CoefficientTensor{e, 1.0}, CoefficientTensor{e, 0.5}};
    const VectorCoefficients v0{CoefficientTensor{e, 0.2}, CoefficientTensor{e, -0.1}};
    ElasticState st = bootstrap_first_step(u0, v0, op);
    for (int k = 1; k < 10; ++k) {
        elastic_step(st, op);
    }
    const double t = 10 * tau;
    for (std::size_t i = 0; i < st.current.x.size(); ++i) {
        ASSERT_NEAR(st.current.x[i], 1.0 + 0.2 * t, 1e-11);
        ASSERT_NEAR(st.current.y[i], 0.5 - 0.1 * t, 1e-11);
    }
    const auto en = elastic_energies(st, op);
    EXPECT_NEAR(en.potential, 0.0, 1e-20 + 1e-12 * en.kinetic);
    EXPECT_NEAR(en.kinetic, 0.5 * kMaterial.rho * (0.04 + 0.01), 1e-11);
}

TEST(Elasticity, StaticTranslationHasZeroStarNorm) {
    const auto spaces = square(2, 3);
    const ElasticOperator op{spaces, kMaterial, 0.05};
    const auto e = op.extents();
    const VectorCoefficients u{CoefficientTensor{e, 1.0}, CoefficientTensor{e, 0.5}};
    const ElasticState st{u, u};
    EXPECT_NEAR(star_norm(st, op), 0.0, 1e-6);
    EXPECT_NEAR(star_norm(st, op, StarNormWeight::energy), 0.0, 1e-6);
}

// U^1 from the Taylor start against the exact semi-discrete solution.
TEST(Elasticity, BootstrapIsThirdOrderLocally) {
    const int p = 2, n = 3;
    const auto spaces = square(p, n);
    const auto ups = oracle::elastic_stiffness(p, n, kMaterial.mu, kMaterial.lambda);
    const auto mass = dense_mass(p, n, kMaterial.rho);
    const int dim = static_cast<int>(ups.size());
    Eigen::MatrixXd a(dim, dim), b(dim, dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            a(i, j) = ups[i][j];
            b(i, j) = mass[i][j];
        }
    }
    const Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> eig(a, b);
    const Eigen::MatrixXd& phi = eig.eigenvectors();  // phi^T B phi = I

    std::mt19937 rng(23);
    const ElasticOperator probe{spaces, kMaterial, 1.0};
    const VectorCoefficients u0 = random_pair(probe.extents(), rng);
    const VectorCoefficients v0 = random_pair(probe.extents(), rng);
    const auto u0f = flat(u0), v0f = flat(v0);
    const Eigen::VectorXd cu = phi.transpose() * b * Eigen::Map<const Eigen::VectorXd>(u0f.data(), dim);
    const Eigen::VectorXd cv = phi.transpose() * b * Eigen::Map<const Eigen::VectorXd>(v0f.data(), dim);

    std::vector<double> errors;
    for (double tau : {0.01, 0.005, 0.0025}) {
        Eigen::VectorXd c(dim);
        for (int k = 0; k < dim; ++k) {
            const double w = std::sqrt(std::max(0.0, eig.eigenvalues()(k)));
            c(k) = cu(k) * std::cos(w * tau) + (w > 0.0 ? cv(k) * std::sin(w * tau) / w : cv(k) * tau);
        }
        const Eigen::VectorXd exact = phi * c;
        const ElasticOperator op{spaces, kMaterial, tau};
        const ElasticState st = bootstrap_first_step(u0, v0, op);
        EXPECT_DOUBLE_EQ(st.time, tau);
        const auto got = flat(st.current);
        errors.push_back(oracle::max_abs_diff(std::vector<double>(exact.data(), exact.data() + dim), got));
    }
    for (std::size_t i = 1; i < errors.size(); ++i) {
        EXPECT_GE(errors[i - 1] / errors[i], 7.0) << errors[i - 1] << " -> " << errors[i];
    }
}

TEST(Elasticity, EnergyWeightedStarNormIsConserved) {
    const auto spaces = square(2, 8);
    const ElasticOperator op{spaces, kMaterial, 0.01};
    for (unsigned seed : {1u, 2u, 3u}) {
        std::mt19937 rng(seed);
        ElasticState st{random_pair(op.extents(), rng), random_pair(op.extents(), rng)};
        const double n0 = star_norm(st, op, StarNormWeight::energy);
        for (int k = 0; k < 50; ++k) {
            elastic_step(st, op);
            ASSERT_NEAR(star_norm(st, op, StarNormWeight::energy), n0, 1e-10 * n0) << "step " << k;
        }
    }
}

TEST(Elasticity, PrintedStarNormDominatesEnergyWeight) {
    const auto spaces = square(2, 6);
    const ElasticOperator op{spaces, kMaterial, 0.02};
    std::mt19937 rng(8);
    ElasticState st{random_pair(op.extents(), rng), random_pair(op.extents(), rng)};
    for (int k = 0; k < 10; ++k) {
        elastic_step(st, op);
        EXPECT_GE(star_norm(st, op), star_norm(st, op, StarNormWeight::energy) - 1e-12);
    }
}

TEST(Elasticity, EnergiesOfSingleLevel) {
    const auto spaces = square(1, 2);
    const ElasticOperator op{spaces, kMaterial, 0.1};
    const auto e = op.extents();
    const VectorCoefficients u{CoefficientTensor{e, 3.0}, CoefficientTensor{e, -1.0}};
    const VectorCoefficients v{CoefficientTensor{e, 2.0}, CoefficientTensor{e, 0.0}};
    const auto en = elastic_energies(u, v, op);
    EXPECT_NEAR(en.kinetic, 0.5 * kMaterial.rho * 4.0, 1e-13);
    EXPECT_NEAR(en.potential, 0.0, 1e-13);
    EXPECT_DOUBLE_EQ(en.total, en.kinetic + en.potential);
}

TEST(Elasticity, RejectsMismatchedShapes) {
    const auto spaces = square(1, 2);
    const ElasticOperator op{spaces, kMaterial, 0.1};
    const VectorCoefficients bad{CoefficientTensor{2, 2}, CoefficientTensor{2, 2}};
    const ElasticState st{bad, bad};
    EXPECT_THROW(predictor_step(st, op), InvalidArgument);
    EXPECT_THROW(bootstrap_first_step(bad, bad, op), InvalidArgument);
}
