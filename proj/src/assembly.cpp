// SPDX-FileCopyrightText: 2026 The kronwave authors
// SPDX-License-Identifier: Apache-2.0

#include "kronwave/assembly.hpp"

#include <array>
#include <cmath>
#include <string>

#include "kronwave/error.hpp"

namespace kronwave {

namespace {

// Basis values and derivatives at every quadrature point of every element.
struct DirectionTable {
    int elements = 1;
    int points = 1;
    int functions = 1;
    std::vector<double> x;        // [e][q]
    std::vector<double> w;        // [e][q]
    std::vector<double> values;   // [e][q][a]
    std::vector<double> derivs;   // [e][q][a]

    std::size_t at(int e, int q) const { return static_cast<std::size_t>(e) * points + q; }
    const double* value(int e, int q) const { return values.data() + at(e, q) * functions; }
    const double* deriv(int e, int q) const { return derivs.data() + at(e, q) * functions; }
};

DirectionTable make_table(const BSplineSpace1D& space, int points) {
    std::vector<double> nodes;
    std::vector<double> weights;
    gauss_legendre(points, nodes, weights);

    DirectionTable t;
    t.elements = space.element_count();
    t.points = points;
    t.functions = space.degree() + 1;
    const std::size_t n = static_cast<std::size_t>(t.elements) * points;
    t.x.resize(n);
    t.w.resize(n);
    t.values.resize(n * t.functions);
    t.derivs.resize(n * t.functions);
    for (int e = 0; e < t.elements; ++e) {
        const double a = space.element_left(e);
        const double half = 0.5 * (space.element_right(e) - a);
        for (int q = 0; q < points; ++q) {
            const std::size_t k = t.at(e, q);
            t.x[k] = a + half * (nodes[q] + 1.0);
            t.w[k] = half * weights[q];
            space.eval_on_element(e, t.x[k], {t.values.data() + k * t.functions, static_cast<std::size_t>(t.functions)},
                                  {t.derivs.data() + k * t.functions, static_cast<std::size_t>(t.functions)});
        }
    }
    return t;
}

// Placeholder direction for rank < 3 loops.
DirectionTable unit_table() {
    DirectionTable t;
    t.x = {0.0};
    t.w = {1.0};
    t.values = {1.0};
    t.derivs = {0.0};
    return t;
}

enum class Integrand { mass, stiffness, mixed };

BandedMatrix assemble_1d(const BSplineSpace1D& space, Integrand kind) {
    const int p = space.degree();
    if (kind != Integrand::mass && p == 0) {
        throw InvalidArgument("derivative matrices need spline degree >= 1");
    }
    const auto table = make_table(space, p + 1);
    BandedMatrix m{space.basis_count(), p};
    for (int e = 0; e < table.elements; ++e) {
        const int first = space.first_active(e);
        for (int q = 0; q < table.points; ++q) {
            const double w = table.w[table.at(e, q)];
            const double* n = table.value(e, q);
            const double* dn = table.deriv(e, q);
            for (int a = 0; a <= p; ++a) {
                for (int c = 0; c <= p; ++c) {
                    double v = 0.0;
                    switch (kind) {
                    case Integrand::mass: v = n[a] * n[c]; break;
                    case Integrand::stiffness: v = dn[a] * dn[c]; break;
                    case Integrand::mixed: v = dn[a] * n[c]; break;
                    }
                    m.at(first + a, first + c) += w * v;
                }
            }
        }
    }
    return m;
}

std::array<DirectionTable, 3> tables_for(std::span<const BSplineSpace1D> spaces, int extra_points) {
    if (spaces.empty() || spaces.size() > 3) {
        throw InvalidArgument("tensor-product spaces have 1 to 3 directions");
    }
    std::array<DirectionTable, 3> t{unit_table(), unit_table(), unit_table()};
    for (std::size_t d = 0; d < spaces.size(); ++d) {
        t[d] = make_table(spaces[d], spaces[d].degree() + 1 + extra_points);
    }
    return t;
}

}  // namespace

BandedMatrix assemble_mass(const BSplineSpace1D& space) {
    return assemble_1d(space, Integrand::mass);
}

BandedMatrix assemble_stiffness(const BSplineSpace1D& space) {
    return assemble_1d(space, Integrand::stiffness);
}

BandedMatrix assemble_mixed(const BSplineSpace1D& space) {
    return assemble_1d(space, Integrand::mixed);
}

std::vector<int> coefficient_extents(std::span<const BSplineSpace1D> spaces) {
    std::vector<int> out;
    for (const auto& s : spaces) {
        out.push_back(s.basis_count());
    }
    return out;
}

CoefficientTensor load_vector(const ScalarField& f, std::span<const BSplineSpace1D> spaces) {
    const auto t = tables_for(spaces, 0);
    const std::size_t dim = spaces.size();
    CoefficientTensor out{coefficient_extents(spaces)};
    std::array<int, 3> first{0, 0, 0};
    std::array<double, 3> x{0.0, 0.0, 0.0};
    const std::span<const double> point{x.data(), dim};

    for (int ez = 0; ez < t[2].elements; ++ez) {
        first[2] = dim > 2 ? spaces[2].first_active(ez) : 0;
        for (int ey = 0; ey < t[1].elements; ++ey) {
            first[1] = dim > 1 ? spaces[1].first_active(ey) : 0;
            for (int ex = 0; ex < t[0].elements; ++ex) {
                first[0] = spaces[0].first_active(ex);
                for (int qz = 0; qz < t[2].points; ++qz) {
                    x[2] = t[2].x[t[2].at(ez, qz)];
                    const double wz = t[2].w[t[2].at(ez, qz)];
                    const double* nz = t[2].value(ez, qz);
                    for (int qy = 0; qy < t[1].points; ++qy) {
                        x[1] = t[1].x[t[1].at(ey, qy)];
                        const double wy = t[1].w[t[1].at(ey, qy)];
                        const double* ny = t[1].value(ey, qy);
                        for (int qx = 0; qx < t[0].points; ++qx) {
                            x[0] = t[0].x[t[0].at(ex, qx)];
                            const double wx = t[0].w[t[0].at(ex, qx)];
                            const double* nx = t[0].value(ex, qx);
                            const double fw = f(point) * wx * wy * wz;
                            for (int c = 0; c < t[2].functions; ++c) {
                                for (int b = 0; b < t[1].functions; ++b) {
                                    const double s = fw * nz[c] * ny[b];
                                    // missing directions have extent 1, so the 3-index form covers rank 1 and 2
                                    double* row = &out(first[0], first[1] + b, first[2] + c);
                                    for (int a = 0; a < t[0].functions; ++a) {
                                        row[a] += s * nx[a];
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    return out;
}

CoefficientTensor l2_project(const ScalarField& f, std::span<const BSplineSpace1D> spaces,
                             const KroneckerOperator& mass) {
    CoefficientTensor rhs = load_vector(f, spaces);
    kron_solve_in_place(mass, rhs);
    return rhs;
}

CoefficientTensor l2_project(const ScalarField& f, std::span<const BSplineSpace1D> spaces) {
    std::vector<BandedMatrix> m;
    for (const auto& s : spaces) {
        m.push_back(assemble_mass(s));
    }
    return l2_project(f, spaces, KroneckerOperator{m});
}

double evaluate(std::span<const BSplineSpace1D> spaces, const CoefficientTensor& c, std::span<const double> x) {
    if (spaces.size() != x.size() || static_cast<int>(spaces.size()) != c.rank()) {
        throw InvalidArgument("evaluate: dimension mismatch");
    }
    std::array<BasisValues, 3> b;
    for (std::size_t d = 0; d < 3; ++d) {
        if (d < spaces.size()) {
            b[d] = spaces[d].eval(x[d], 0);
        } else {
            b[d].first = 0;
            b[d].values = {1.0};
        }
    }
    double s = 0.0;
    for (std::size_t k = 0; k < b[2].values.size(); ++k) {
        for (std::size_t j = 0; j < b[1].values.size(); ++j) {
            for (std::size_t i = 0; i < b[0].values.size(); ++i) {
                const int ii = b[0].first + static_cast<int>(i);
                const int jj = b[1].first + static_cast<int>(j);
                const int kk = b[2].first + static_cast<int>(k);
                s += c(ii, jj, kk) * b[0].values[i] * b[1].values[j] * b[2].values[k];
            }
        }
    }
    return s;
}

double l2_error(std::span<const BSplineSpace1D> spaces, const CoefficientTensor& c, const ScalarField& exact) {
    const auto t = tables_for(spaces, 2);
    const std::size_t dim = spaces.size();
    if (static_cast<int>(dim) != c.rank()) {
        throw InvalidArgument("l2_error: dimension mismatch");
    }
    std::array<double, 3> x{0.0, 0.0, 0.0};
    const std::span<const double> point{x.data(), dim};
    double sum = 0.0;
    for (int ez = 0; ez < t[2].elements; ++ez) {
        const int fz = dim > 2 ? spaces[2].first_active(ez) : 0;
        for (int ey = 0; ey < t[1].elements; ++ey) {
            const int fy = dim > 1 ? spaces[1].first_active(ey) : 0;
            for (int ex = 0; ex < t[0].elements; ++ex) {
                const int fx = spaces[0].first_active(ex);
                for (int qz = 0; qz < t[2].points; ++qz) {
                    x[2] = t[2].x[t[2].at(ez, qz)];
                    const double wz = t[2].w[t[2].at(ez, qz)];
                    const double* nz = t[2].value(ez, qz);
                    for (int qy = 0; qy < t[1].points; ++qy) {
                        x[1] = t[1].x[t[1].at(ey, qy)];
                        const double wy = t[1].w[t[1].at(ey, qy)];
                        const double* ny = t[1].value(ey, qy);
                        for (int qx = 0; qx < t[0].points; ++qx) {
                            x[0] = t[0].x[t[0].at(ex, qx)];
                            const double wx = t[0].w[t[0].at(ex, qx)];
                            const double* nx = t[0].value(ex, qx);
                            double uh = 0.0;
                            for (int kk = 0; kk < t[2].functions; ++kk) {
                                for (int jj = 0; jj < t[1].functions; ++jj) {
                                    for (int ii = 0; ii < t[0].functions; ++ii) {
                                        uh += c(fx + ii, fy + jj, fz + kk) * nx[ii] * ny[jj] * nz[kk];
                                    }
                                }
                            }
                            const double diff = uh - exact(point);
                            sum += diff * diff * wx * wy * wz;
                        }
                    }
                }
            }
        }
    }
    return std::sqrt(sum);
}

}  // namespace kronwave
