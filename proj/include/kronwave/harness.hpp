// SPDX-FileCopyrightText: 2026 The kronwave authors
// SPDX-License-Identifier: Apache-2.0

#ifndef KRONWAVE_HARNESS_HPP
#define KRONWAVE_HARNESS_HPP

#include <span>
#include <vector>

#include "kronwave/config.hpp"
#include "kronwave/elasticity.hpp"
#include "kronwave/pwave.hpp"
#include "kronwave/stability.hpp"

namespace kronwave {

// Drivers write into config.out_dir; an empty out_dir runs without touching the filesystem.

struct EnergyRecord {
    int step = 0;
    double time = 0.0;
    double kinetic = 0.0;
    double potential = 0.0;
    double total = 0.0;
};

struct RunSummary {
    std::vector<EnergyRecord> energies;
    std::vector<double> star_norms;         // elasticity only, one per step from step 1
    std::vector<double> star_norms_energy;  // same, energy-weighted velocity part
    double relative_drift = 0.0;
    int snapshots = 0;
};

/// max_n |E_n - E_0| / |E_0| (absolute when E_0 == 0).
double relative_drift(std::span<const EnergyRecord> records);

/// Least-squares slope of log(y) against log(x).
double loglog_slope(std::span<const double> x, std::span<const double> y);

std::vector<BSplineSpace1D> make_spaces(const SimulationConfig& config);

/// Initial displacement for the configured initial condition (velocity is always zero).
CoefficientTensor pwave_initial_displacement(const SimulationConfig& config, std::span<const BSplineSpace1D> spaces);
VectorCoefficients elastic_initial_displacement(const SimulationConfig& config, std::span<const BSplineSpace1D> spaces);

/// Load of the manufactured shear mode u = (0, cos(k pi x)) at unit amplitude: only the
/// traction on the y = 0 and y = 1 faces survives. Scale by cos(omega t).
VectorCoefficients shear_mode_load(const SimulationConfig& config, std::span<const BSplineSpace1D> spaces);
double shear_mode_frequency(const SimulationConfig& config);
double pwave_mode_frequency(const SimulationConfig& config);

RunSummary run_pwave(const SimulationConfig& config);
RunSummary run_elasticity(const SimulationConfig& config);

struct ConvergenceReport {
    std::vector<double> taus;
    std::vector<double> errors;
    std::vector<double> ratios;  // errors[i - 1] / errors[i]
    double slope = 0.0;
    double final_time = 0.0;
};

/// tau_0 = config.tau, T = config.steps * tau_0, halving tau config.levels - 1 times.
/// The scheme follows config.problem.
ConvergenceReport run_convergence(const SimulationConfig& config);

/// Uses config.taus (a default log-spaced list over [1e-3, 1e3] when empty) and the
/// first two element counts.
std::vector<SweepRow> run_stability_sweep(const SimulationConfig& config);
std::vector<double> default_sweep_taus();

struct ScalingRow {
    int elements = 0;
    long unknowns = 0;
    double seconds_per_step = 0.0;
};

struct ScalingReport {
    std::vector<ScalingRow> rows;
    double slope = 0.0;
};

/// 3D P-wave step timing over config.sizes (elements per direction).
ScalingReport run_scaling_bench(const SimulationConfig& config);

}  // namespace kronwave

#endif  // KRONWAVE_HARNESS_HPP
