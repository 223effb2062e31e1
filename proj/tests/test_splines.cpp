// SPDX-FileCopyrightText: 2026 The kronwave authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "kronwave/error.hpp"
#include "kronwave/splines.hpp"
#include "oracles.hpp"

using kronwave::BSplineSpace1D;

TEST(Splines, SingleLinearElement) {
    const auto s = BSplineSpace1D::uniform(1, 1);
    const std::vector<double> knots{0, 0, 1, 1};
    EXPECT_EQ(std::vector<double>(s.knots().begin(), s.knots().end()), knots);
    EXPECT_EQ(s.basis_count(), 2);
}

TEST(Splines, SingleQuadraticElement) {
    const auto s = BSplineSpace1D::uniform(2, 1);
    const std::vector<double> knots{0, 0, 0, 1, 1, 1};
    EXPECT_EQ(std::vector<double>(s.knots().begin(), s.knots().end()), knots);
    EXPECT_EQ(s.basis_count(), 3);
}

TEST(Splines, BasisCountIsElementsPlusDegree) {
    EXPECT_EQ(BSplineSpace1D::uniform(2, 32).basis_count(), 34);
    for (int p = 0; p <= 4; ++p) {
        for (int n : {1, 3, 7}) {
            const auto s = BSplineSpace1D::uniform(p, n);
            EXPECT_EQ(s.basis_count(), n + p);
            EXPECT_EQ(static_cast<int>(s.knots().size()) - p - 1, s.basis_count());
        }
    }
}

TEST(Splines, KnotVectorIsOpenAndSorted) {
    const auto s = BSplineSpace1D::uniform(3, 5);
    const auto t = s.knots();
    EXPECT_TRUE(std::is_sorted(t.begin(), t.end()));
    for (int i = 0; i <= 3; ++i) {
        EXPECT_EQ(t[i], 0.0);
        EXPECT_EQ(t[t.size() - 1 - i], 1.0);
    }
}

TEST(Splines, RejectsBadArguments) {
    EXPECT_THROW(BSplineSpace1D::uniform(-1, 4), kronwave::InvalidArgument);
    EXPECT_THROW(BSplineSpace1D::uniform(2, 0), kronwave::InvalidArgument);
    const auto s = BSplineSpace1D::uniform(2, 4);
    EXPECT_THROW(s.eval(-0.01, 0), kronwave::InvalidArgument);
    EXPECT_THROW(s.eval(1.01, 0), kronwave::InvalidArgument);
}

TEST(Splines, LinearHatsAtMidpoint) {
    const auto b = BSplineSpace1D::uniform(1, 1).eval(0.5, 0);
    EXPECT_EQ(b.first, 0);
    ASSERT_EQ(b.values.size(), 2u);
    EXPECT_DOUBLE_EQ(b.values[0], 0.5);
    EXPECT_DOUBLE_EQ(b.values[1], 0.5);
}

TEST(Splines, ClampedEndpointInterpolation) {
    const auto s = BSplineSpace1D::uniform(2, 1);
    const auto left = s.eval(0.0, 0);
    EXPECT_EQ(left.first, 0);
    EXPECT_DOUBLE_EQ(left.values[0], 1.0);
    EXPECT_DOUBLE_EQ(left.values[1], 0.0);
    EXPECT_DOUBLE_EQ(left.values[2], 0.0);
    const auto right = s.eval(1.0, 0);
    EXPECT_DOUBLE_EQ(right.values[2], 1.0);
}

TEST(Splines, PartitionOfUnityAtRandomPoints) {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int p = 0; p <= 4; ++p) {
        const auto s = BSplineSpace1D::uniform(p, 6);
        for (int k = 0; k < 1000; ++k) {
            const auto b = s.eval(u(rng), 0);
            EXPECT_NEAR(std::accumulate(b.values.begin(), b.values.end(), 0.0), 1.0, 1e-12);
        }
    }
}

TEST(Splines, MatchesCoxDeBoorRecursion) {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int p = 1; p <= 4; ++p) {
        const int n_el = 5;
        const auto s = BSplineSpace1D::uniform(p, n_el);
        const auto t = oracle::uniform_knots(p, n_el);
        for (int k = 0; k < 200; ++k) {
            const double x = k == 0 ? 0.0 : (k == 1 ? 1.0 : u(rng));
            const auto v = s.eval(x, 0);
            const auto d = s.eval(x, 1);
            for (int a = 0; a < s.basis_count(); ++a) {
                const int local = a - v.first;
                const double got = local >= 0 && local <= p ? v.values[local] : 0.0;
                EXPECT_NEAR(got, oracle::basis(t, a, p, x), 1e-13) << "p=" << p << " a=" << a << " x=" << x;
                const double dgot = local >= 0 && local <= p ? d.values[local] : 0.0;
                EXPECT_NEAR(dgot, oracle::basis_derivative(t, a, p, x), 1e-11);
            }
        }
    }
}

TEST(Splines, DerivativeMatchesCentralDifferences) {
    const double h = 1e-6;
    for (int p = 1; p <= 3; ++p) {
        const auto s = BSplineSpace1D::uniform(p, 4);
        for (double x : {0.1, 0.33, 0.6, 0.9}) {  // away from knots 0, .25, .5, .75, 1
            const auto d = s.eval(x, 1);
            const auto plus = s.eval(x + h, 0);
            const auto minus = s.eval(x - h, 0);
            ASSERT_EQ(plus.first, d.first);
            ASSERT_EQ(minus.first, d.first);
            for (int i = 0; i <= p; ++i) {
                EXPECT_NEAR(d.values[i], (plus.values[i] - minus.values[i]) / (2 * h), 1e-6);
            }
        }
    }
}

TEST(Splines, SupportIsLocal) {
    const int p = 2;
    const int n_el = 6;
    const auto s = BSplineSpace1D::uniform(p, n_el);
    const auto t = s.knots();
    for (int k = 0; k <= 600; ++k) {
        const double x = k / 600.0;
        const auto b = s.eval(x, 0);
        for (int a = 0; a < s.basis_count(); ++a) {
            const bool inside = x >= t[a] && x <= t[a + p + 1];
            const int local = a - b.first;
            if (!inside) {
                EXPECT_TRUE(local < 0 || local > p) << "a=" << a << " x=" << x;
            }
        }
    }
}

TEST(Splines, QuadratureWeightsSumToSpanLength) {
    for (int p = 0; p <= 3; ++p) {
        const auto s = BSplineSpace1D::uniform(p, 3);
        const auto q = s.quadrature();
        EXPECT_EQ(q.points_per_element, p + 1);
        EXPECT_EQ(q.element_count(), 3);
        for (int e = 0; e < 3; ++e) {
            double sum = 0.0;
            for (int g = 0; g < q.points_per_element; ++g) {
                const double w = q.weights[e * q.points_per_element + g];
                EXPECT_GT(w, 0.0);
                sum += w;
            }
            EXPECT_NEAR(sum, 1.0 / 3.0, 1e-15);
        }
    }
}

TEST(Splines, GaussLegendreIntegratesPolynomialsExactly) {
    std::vector<double> x, w;
    for (int n = 1; n <= 6; ++n) {
        kronwave::gauss_legendre(n, x, w);
        for (int k = 0; k <= 2 * n - 1; ++k) {
            double q = 0.0;
            for (int i = 0; i < n; ++i) {
                q += w[i] * std::pow(x[i], k);
            }
            const double exact = k % 2 ? 0.0 : 2.0 / (k + 1);  // on [-1, 1]
            EXPECT_NEAR(q, exact, 1e-14) << "n=" << n << " k=" << k;
        }
    }
}

TEST(Splines, GrevilleAbscissae) {
    const auto g = BSplineSpace1D::uniform(1, 4).greville();
    ASSERT_EQ(g.size(), 5u);
    for (int i = 0; i < 5; ++i) {
        EXPECT_NEAR(g[i], i / 4.0, 1e-15);
    }
    const auto g2 = BSplineSpace1D::uniform(2, 2).greville();
    const std::vector<double> expected{0.0, 0.25, 0.75, 1.0};
    for (int i = 0; i < 4; ++i) {
        EXPECT_NEAR(g2[i], expected[i], 1e-15);
    }
}
