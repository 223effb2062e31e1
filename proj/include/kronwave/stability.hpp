// SPDX-FileCopyrightText: 2026 The kronwave authors
// SPDX-License-Identifier: Apache-2.0

#ifndef KRONWAVE_STABILITY_HPP
#define KRONWAVE_STABILITY_HPP

#include <array>
#include <span>
#include <vector>

#include "kronwave/banded.hpp"

namespace kronwave {

/// Solution of K v = lambda M v for one direction.
struct EigenPencil {
    int direction = 0;
    std::vector<double> eigenvalues;   // ascending
    std::vector<double> eigenvectors;  // column-major n x n, M-orthonormal columns

    int size() const noexcept { return static_cast<int>(eigenvalues.size()); }
    double vector_entry(int row, int col) const { return eigenvectors[static_cast<std::size_t>(col) * size() + row]; }
};

inline constexpr int kDenseEigenLimit = 512;

/// Dense generalized symmetric eigensolve. Throws InvalidArgument when M is
/// not SPD, sizes differ or n exceeds kDenseEigenLimit.
EigenPencil generalized_eig(const BandedMatrix& stiffness, const BandedMatrix& mass, int direction = 0);

/// Which one-step map is analysed. The modal state is (U, tau U', tau^2 U'').
enum class AmplificationForm {
    /// Derived from the implemented average-acceleration split step.
    scheme,
    /// Derived from the printed velocity/displacement updates (NewmarkUpdate::printed).
    printed_update,
    /// The published 3 x 3 block matrix, with the unsubscripted E read as E_x (x) E_y.
    published,
};

using Matrix3 = std::array<double, 9>;  // row-major

/// Amplification matrix of one modal tuple (one generalized eigenvalue per direction).
Matrix3 modal_amplification(std::span<const double> eigenvalues, double tau, AmplificationForm form);

/// Eigenvalues of a real 3 x 3 matrix as (re, im) pairs.
std::array<std::array<double, 2>, 3> eigenvalues3(const Matrix3& m);
double spectral_radius(const Matrix3& m);

/// Per modal pair (i, j) of two pencils, the 3 x 3 amplification block at one tau.
struct AmplificationMatrix {
    double tau = 0.0;
    AmplificationForm form = AmplificationForm::scheme;
    int modes_x = 0;
    int modes_y = 0;
    std::vector<Matrix3> blocks;  // index i + modes_x * j

    const Matrix3& block(int i, int j) const { return blocks[static_cast<std::size_t>(i) + modes_x * j]; }
};

/// Throws InvalidArgument for tau < 0.
AmplificationMatrix build_amplification(const EigenPencil& x, const EigenPencil& y, double tau,
                                        AmplificationForm form = AmplificationForm::scheme);

struct SweepRow {
    double tau = 0.0;
    double max_radius = 0.0;
};

/// Largest modal spectral radius for every tau. Throws InvalidArgument on an empty list.
std::vector<SweepRow> spectral_radius_sweep(const EigenPencil& x, const EigenPencil& y, std::span<const double> taus,
                                            AmplificationForm form = AmplificationForm::scheme);

}  // namespace kronwave

#endif  // KRONWAVE_STABILITY_HPP
