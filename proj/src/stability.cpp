// SPDX-FileCopyrightText: 2026 The kronwave authors
// SPDX-License-Identifier: Apache-2.0

#include "kronwave/stability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Cholesky>
#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "kronwave/error.hpp"

namespace kronwave {

namespace {

Eigen::MatrixXd to_eigen(const BandedMatrix& m) {
    const int n = m.size();
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = std::max(0, i - m.bandwidth()); j <= std::min(n - 1, i + m.bandwidth()); ++j) {
            out(i, j) = m(i, j);
        }
    }
    return out;
}

}  // namespace

EigenPencil generalized_eig(const BandedMatrix& stiffness, const BandedMatrix& mass, int direction) {
    const int n = mass.size();
    if (stiffness.size() != n) {
        throw InvalidArgument("generalized_eig: K and M differ in size");
    }
    if (n > kDenseEigenLimit) {
        throw InvalidArgument("generalized_eig: dense path limited to n <= " + std::to_string(kDenseEigenLimit));
    }
    const Eigen::MatrixXd k = to_eigen(stiffness);
    const Eigen::MatrixXd m = to_eigen(mass);
    if (m.llt().info() != Eigen::Success) {
        throw InvalidArgument("generalized_eig: mass matrix is not symmetric positive definite");
    }
    Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> solver(k, m);
    if (solver.info() != Eigen::Success) {
        throw InvalidArgument("generalized_eig: eigensolver did not converge");
    }
    EigenPencil out;
    out.direction = direction;
    out.eigenvalues.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
    // kernel modes (constants for a stiffness matrix) come back as +-1e-15; make them exact
    const double top = solver.eigenvalues().cwiseAbs().maxCoeff();
    const double snap = 64.0 * n * std::numeric_limits<double>::epsilon() * top;
    for (double& lambda : out.eigenvalues) {
        if (std::abs(lambda) <= snap) {
            lambda = 0.0;
        }
    }
    out.eigenvectors.assign(solver.eigenvectors().data(), solver.eigenvectors().data() + static_cast<std::size_t>(n) * n);
    return out;
}

Matrix3 modal_amplification(std::span<const double> eigenvalues, double tau, AmplificationForm form) {
    const double eta = 0.25 * tau * tau;
    double e = 1.0;
    double sum = 0.0;
    for (double lambda : eigenvalues) {
        e /= 1.0 + eta * lambda;
        sum += lambda;
    }
    // tau^2 zeta for this mode
    const double w = tau * tau * e * sum;

    switch (form) {
    case AmplificationForm::scheme: {
        const std::array<double, 3> r3{-w, -w, -0.25 * w};
        return {1.0 + 0.25 * r3[0], 1.0 + 0.25 * r3[1], 0.25 + 0.25 * r3[2],
                0.5 * r3[0],        1.0 + 0.5 * r3[1],  0.5 + 0.5 * r3[2],
                r3[0],              r3[1],              r3[2]};
    }
    case AmplificationForm::printed_update:
        return {1.0,      1.0,            0.0,
                -0.5 * w, 1.0 - 0.5 * w,  0.0,
                -w,       -w,             0.0};
    case AmplificationForm::published:
        return {1.0 - w,  1.0 - w,        0.5 - e - 0.5 * w,
                -0.5 * w, 1.0 - 0.5 * w,  1.0 - 0.5 * e - 0.25 * w,
                -w,       -w,             1.0 - e - 0.5 * w};
    }
    throw InvalidArgument("unknown amplification form");
}

std::array<std::array<double, 2>, 3> eigenvalues3(const Matrix3& m) {
    Eigen::Matrix3d a;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            a(i, j) = m[3 * i + j];
        }
    }
    Eigen::EigenSolver<Eigen::Matrix3d> solver(a, false);
    std::array<std::array<double, 2>, 3> out{};
    for (int i = 0; i < 3; ++i) {
        out[i] = {solver.eigenvalues()[i].real(), solver.eigenvalues()[i].imag()};
    }
    return out;
}

double spectral_radius(const Matrix3& m) {
    double r = 0.0;
    for (const auto& ev : eigenvalues3(m)) {
        r = std::max(r, std::hypot(ev[0], ev[1]));
    }
    return r;
}

AmplificationMatrix build_amplification(const EigenPencil& x, const EigenPencil& y, double tau, AmplificationForm form) {
    if (!(tau >= 0.0)) {
        throw InvalidArgument("build_amplification: tau must be non-negative");
    }
    AmplificationMatrix out;
    out.tau = tau;
    out.form = form;
    out.modes_x = x.size();
    out.modes_y = y.size();
    out.blocks.reserve(static_cast<std::size_t>(out.modes_x) * out.modes_y);
    for (int j = 0; j < out.modes_y; ++j) {
        for (int i = 0; i < out.modes_x; ++i) {
            const std::array<double, 2> lambdas{x.eigenvalues[i], y.eigenvalues[j]};
            out.blocks.push_back(modal_amplification(lambdas, tau, form));
        }
    }
    return out;
}

std::vector<SweepRow> spectral_radius_sweep(const EigenPencil& x, const EigenPencil& y, std::span<const double> taus,
                                            AmplificationForm form) {
    if (taus.empty()) {
        throw InvalidArgument("spectral_radius_sweep: empty time-step list");
    }
    std::vector<SweepRow> rows;
    rows.reserve(taus.size());
    for (double tau : taus) {
        const auto amp = build_amplification(x, y, tau, form);
        double r = 0.0;
        for (const auto& b : amp.blocks) {
            r = std::max(r, spectral_radius(b));
        }
        rows.push_back({tau, r});
    }
    return rows;
}

}  // namespace kronwave
