// SPDX-FileCopyrightText: 2026 The kronwave authors
// SPDX-License-Identifier: Apache-2.0

#include "kronwave/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>

#include "kronwave/assembly.hpp"
#include "kronwave/error.hpp"
#include "kronwave/output.hpp"

namespace kronwave {

namespace {

using std::numbers::pi;

const std::vector<std::string> kEnergyHeader{"step", "time", "kinetic", "potential", "total"};

std::string join_path(const std::string& dir, const std::string& name) {
    return dir.empty() ? name : dir + "/" + name;
}

void check_finite(double value, int step) {
    if (!std::isfinite(value)) {
        throw NumericalError("non-finite energy at step " + std::to_string(step));
    }
}

void prepare_output(const SimulationConfig& config) {
    if (config.out_dir.empty()) {
        return;
    }
    ensure_directory(config.out_dir);
    write_text(join_path(config.out_dir, "config.echo"), config.echo());
}

std::string snapshot_name(int step) {
    return "snapshot_" + std::to_string(step) + ".vtk";
}

bool wants_snapshot(const SimulationConfig& config, int step) {
    return !config.out_dir.empty() && config.output_every > 0 && step % config.output_every == 0;
}

ScalarField gaussian(const SimulationConfig& config) {
    const double w2 = config.width * config.width;
    const std::vector<double> c = config.center;
    return [c, w2](std::span<const double> x) {
        double r2 = 0.0;
        for (std::size_t d = 0; d < x.size(); ++d) {
            r2 += (x[d] - c[d]) * (x[d] - c[d]);
        }
        return std::exp(-r2 / w2);
    };
}

ScalarField cosine_mode(const std::vector<int>& k, double amplitude) {
    return [k, amplitude](std::span<const double> x) {
        double v = amplitude;
        for (std::size_t d = 0; d < x.size(); ++d) {
            v *= std::cos(k[d] * pi * x[d]);
        }
        return v;
    };
}

CoefficientTensor constant(std::span<const BSplineSpace1D> spaces, double value) {
    // B-splines form a partition of unity, so a constant has constant coefficients
    return CoefficientTensor{coefficient_extents(spaces), value};
}

double l2_error_elastic(std::span<const BSplineSpace1D> spaces, const VectorCoefficients& u, const ScalarField& ex,
                        const ScalarField& ey) {
    const double a = l2_error(spaces, u.x, ex);
    const double b = l2_error(spaces, u.y, ey);
    return std::sqrt(a * a + b * b);
}

std::vector<int> bench_sizes(const SimulationConfig& config) {
    if (!config.sizes.empty()) {
        return config.sizes;
    }
    return config.full ? std::vector<int>{8, 16, 32} : std::vector<int>{4, 8, 16};
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace

double relative_drift(std::span<const EnergyRecord> records) {
    if (records.empty()) {
        return 0.0;
    }
    const double e0 = records.front().total;
    double worst = 0.0;
    for (const auto& r : records) {
        worst = std::max(worst, std::abs(r.total - e0));
    }
    return e0 != 0.0 ? worst / std::abs(e0) : worst;
}

double loglog_slope(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2) {
        throw InvalidArgument("log-log fit needs at least two (x, y) pairs");
    }
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    const double n = static_cast<double>(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] > 0.0) || !(y[i] > 0.0)) {
            throw InvalidArgument("log-log fit needs positive data");
        }
        const double lx = std::log(x[i]);
        const double ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double denom = n * sxx - sx * sx;
    if (denom == 0.0) {
        throw InvalidArgument("log-log fit needs distinct x values");
    }
    return (n * sxy - sx * sy) / denom;
}

std::vector<BSplineSpace1D> make_spaces(const SimulationConfig& config) {
    std::vector<BSplineSpace1D> spaces;
    for (int n : config.element_counts()) {
        spaces.push_back(BSplineSpace1D::uniform(config.degree, n));
    }
    return spaces;
}

CoefficientTensor pwave_initial_displacement(const SimulationConfig& config, std::span<const BSplineSpace1D> spaces) {
    switch (config.initial) {
    case InitialCondition::gaussian: return l2_project(gaussian(config), spaces);
    case InitialCondition::mode: return l2_project(cosine_mode(config.mode, 1.0), spaces);
    case InitialCondition::zero: return constant(spaces, 0.0);
    case InitialCondition::translation: return constant(spaces, 1.0);
    }
    throw InvalidArgument("unknown initial condition");
}

VectorCoefficients elastic_initial_displacement(const SimulationConfig& config, std::span<const BSplineSpace1D> spaces) {
    switch (config.initial) {
    case InitialCondition::gaussian: {
        CoefficientTensor g = l2_project(gaussian(config), spaces);
        return {g, g};
    }
    case InitialCondition::mode: {
        const int k = config.mode.front();
        return {constant(spaces, 0.0), l2_project([k](std::span<const double> x) { return std::cos(k * pi * x[0]); },
                                                  spaces)};
    }
    case InitialCondition::zero: return {constant(spaces, 0.0), constant(spaces, 0.0)};
    case InitialCondition::translation: return {constant(spaces, 1.0), constant(spaces, 0.5)};
    }
    throw InvalidArgument("unknown initial condition");
}

double pwave_mode_frequency(const SimulationConfig& config) {
    double k2 = 0.0;
    for (int d = 0; d < config.dimension(); ++d) {
        k2 += static_cast<double>(config.mode[d]) * config.mode[d];
    }
    return pi * std::sqrt(k2);
}

double shear_mode_frequency(const SimulationConfig& config) {
    return config.mode.front() * pi * std::sqrt(config.material.mu / config.material.rho);
}

VectorCoefficients shear_mode_load(const SimulationConfig& config, std::span<const BSplineSpace1D> spaces) {
    // sigma_xy = -mu k pi sin(k pi x) on y = const faces, outward normal -+ e_y
    const int k = config.mode.front();
    const BSplineSpace1D& sx = spaces[0];
    const CoefficientTensor s = load_vector([k](std::span<const double> x) { return std::sin(k * pi * x[0]); },
                                            std::span<const BSplineSpace1D>{&sx, 1});
    VectorCoefficients f{constant(spaces, 0.0), constant(spaces, 0.0)};
    const int ny = spaces[1].basis_count();
    const double scale = -config.material.mu * k * pi;
    for (int a = 0; a < sx.basis_count(); ++a) {
        f.x(a, ny - 1) += scale * s[a];
        f.x(a, 0) -= scale * s[a];
    }
    return f;
}

RunSummary run_pwave(const SimulationConfig& config) {
    if (!config.is_pwave()) {
        throw ConfigError("run_pwave needs problem pwave2d or pwave3d");
    }
    config.validate();
    const auto spaces = make_spaces(config);
    const SplitOperator op{spaces, config.tau};
    CoefficientTensor u0 = pwave_initial_displacement(config, spaces);
    CoefficientTensor v0{u0.extents()};
    WaveState state = make_initial_state(op.operators(), std::move(u0), std::move(v0));

    prepare_output(config);
    std::optional<CsvWriter> csv;
    if (!config.out_dir.empty()) {
        csv.emplace(join_path(config.out_dir, "energy.csv"), kEnergyHeader);
    }

    RunSummary summary;
    const auto record = [&] {
        const Energies e = energies(state, op.operators());
        check_finite(e.total, state.step);
        summary.energies.push_back({state.step, state.time, e.kinetic, e.potential, e.total});
        if (csv) {
            csv->row({static_cast<double>(state.step), state.time, e.kinetic, e.potential, e.total});
        }
        if (wants_snapshot(config, state.step)) {
            write_vtk_scalar(join_path(config.out_dir, snapshot_name(state.step)), spaces, state.u);
            ++summary.snapshots;
        }
    };
    record();
    for (int n = 0; n < config.steps; ++n) {
        step(state, op);
        record();
    }
    summary.relative_drift = relative_drift(summary.energies);
    return summary;
}

RunSummary run_elasticity(const SimulationConfig& config) {
    if (config.problem != ProblemKind::elasticity2d) {
        throw ConfigError("run_elasticity needs problem elasticity2d");
    }
    config.validate();
    const auto spaces = make_spaces(config);
    const ElasticOperator op{spaces, config.material, config.tau, config.sigma};
    const VectorCoefficients u0 = elastic_initial_displacement(config, spaces);
    const VectorCoefficients v0{constant(spaces, 0.0), constant(spaces, 0.0)};

    const bool forced = config.initial == InitialCondition::mode;
    const VectorCoefficients load = forced ? shear_mode_load(config, spaces) : VectorCoefficients{};
    const double omega = forced ? shear_mode_frequency(config) : 0.0;
    VectorCoefficients f = load;
    const auto forcing_at = [&](double t) -> const VectorCoefficients* {
        if (!forced) {
            return nullptr;
        }
        const double c = std::cos(omega * t);
        f.x = load.x;
        f.x.scale(c);
        f.y = load.y;
        f.y.scale(c);
        return &f;
    };

    prepare_output(config);
    std::optional<CsvWriter> energy_csv;
    std::optional<CsvWriter> star_csv;
    if (!config.out_dir.empty()) {
        energy_csv.emplace(join_path(config.out_dir, "energy.csv"), kEnergyHeader);
        const std::vector<std::string> header{"step", "time", "star_norm", "star_norm_energy"};
        star_csv.emplace(join_path(config.out_dir, "starnorm.csv"), header);
    }

    RunSummary summary;
    const auto record_energy = [&](int n, double t, const ElasticEnergies& e) {
        check_finite(e.total, n);
        summary.energies.push_back({n, t, e.kinetic, e.potential, e.total});
        if (energy_csv) {
            energy_csv->row({static_cast<double>(n), t, e.kinetic, e.potential, e.total});
        }
    };
    record_energy(0, 0.0, elastic_energies(u0, v0, op));
    if (wants_snapshot(config, 0)) {
        write_vtk_vector(join_path(config.out_dir, snapshot_name(0)), spaces, u0.x, u0.y);
        ++summary.snapshots;
    }

    ElasticState state = bootstrap_first_step(u0, v0, op, forcing_at(0.0));
    const auto record = [&] {
        record_energy(state.step, state.time, elastic_energies(state, op));
        const double star = star_norm(state, op, StarNormWeight::printed);
        const double star_energy = star_norm(state, op, StarNormWeight::energy);
        summary.star_norms.push_back(star);
        summary.star_norms_energy.push_back(star_energy);
        if (star_csv) {
            star_csv->row({static_cast<double>(state.step), state.time, star, star_energy});
        }
        if (wants_snapshot(config, state.step)) {
            write_vtk_vector(join_path(config.out_dir, snapshot_name(state.step)), spaces, state.current.x,
                             state.current.y);
            ++summary.snapshots;
        }
    };
    record();
    while (state.step < config.steps) {
        elastic_step(state, op, forcing_at(state.time));
        record();
    }
    summary.relative_drift = relative_drift(summary.energies);
    return summary;
}

ConvergenceReport run_convergence(const SimulationConfig& config) {
    config.validate();
    if (config.levels < 3) {
        throw ConfigError("convergence study needs at least 3 levels");
    }
    SimulationConfig level = config;
    level.out_dir.clear();
    level.output_every = 0;
    level.initial = InitialCondition::mode;
    const auto spaces = make_spaces(config);

    ConvergenceReport report;
    report.final_time = config.steps * config.tau;
    for (int l = 0; l < config.levels; ++l) {
        const int factor = 1 << l;
        const double tau = config.tau / factor;
        const int steps = config.steps * factor;
        double error = 0.0;
        if (config.is_pwave()) {
            const SplitOperator op{spaces, tau};
            CoefficientTensor u0 = pwave_initial_displacement(level, spaces);
            CoefficientTensor v0{u0.extents()};
            WaveState state = make_initial_state(op.operators(), std::move(u0), std::move(v0));
            for (int n = 0; n < steps; ++n) {
                step(state, op);
            }
            const double amp = std::cos(pwave_mode_frequency(config) * steps * tau);
            error = l2_error(spaces, state.u, cosine_mode(config.mode, amp));
        } else {
            const ElasticOperator op{spaces, config.material, tau, config.sigma};
            const VectorCoefficients u0 = elastic_initial_displacement(level, spaces);
            const VectorCoefficients v0{constant(spaces, 0.0), constant(spaces, 0.0)};
            const VectorCoefficients load = shear_mode_load(config, spaces);
            const double omega = shear_mode_frequency(config);
            const auto at = [&](double t) {
                return VectorCoefficients{combine(std::cos(omega * t), load.x, 0.0, load.x),
                                          combine(std::cos(omega * t), load.y, 0.0, load.y)};
            };
            VectorCoefficients f = at(0.0);
            ElasticState state = bootstrap_first_step(u0, v0, op, &f);
            while (state.step < steps) {
                f = at(state.step * tau);
                elastic_step(state, op, &f);
            }
            const int k = config.mode.front();
            const double amp = std::cos(omega * steps * tau);
            error = l2_error_elastic(
                spaces, state.current, [](std::span<const double>) { return 0.0; },
                [k, amp](std::span<const double> x) { return amp * std::cos(k * pi * x[0]); });
        }
        if (!std::isfinite(error)) {
            throw NumericalError("non-finite error at convergence level " + std::to_string(l));
        }
        report.taus.push_back(tau);
        report.errors.push_back(error);
        if (l > 0) {
            report.ratios.push_back(report.errors[l - 1] / error);
        }
    }
    report.slope = loglog_slope(report.taus, report.errors);

    if (!config.out_dir.empty()) {
        prepare_output(config);
        const std::vector<std::string> header{"tau", "error"};
        CsvWriter csv{join_path(config.out_dir, "convergence.csv"), header};
        for (std::size_t i = 0; i < report.taus.size(); ++i) {
            csv.row({report.taus[i], report.errors[i]});
        }
    }
    return report;
}

std::vector<double> default_sweep_taus() {
    std::vector<double> taus;
    for (int i = 0; i <= 60; ++i) {
        taus.push_back(std::pow(10.0, -3.0 + 0.1 * i));
    }
    return taus;
}

std::vector<SweepRow> run_stability_sweep(const SimulationConfig& config) {
    config.validate();
    const auto spaces = make_spaces(config);
    const EigenPencil x = generalized_eig(assemble_stiffness(spaces[0]), assemble_mass(spaces[0]), 0);
    const EigenPencil y = generalized_eig(assemble_stiffness(spaces[1]), assemble_mass(spaces[1]), 1);
    const std::vector<double> taus = config.taus.empty() ? default_sweep_taus() : config.taus;
    auto rows = spectral_radius_sweep(x, y, taus, config.amplification);

    if (!config.out_dir.empty()) {
        prepare_output(config);
        const std::vector<std::string> header{"tau", "max_radius"};
        CsvWriter csv{join_path(config.out_dir, "stability.csv"), header};
        for (const auto& r : rows) {
            csv.row({r.tau, r.max_radius});
        }
    }
    return rows;
}

ScalingReport run_scaling_bench(const SimulationConfig& config) {
    const std::vector<int> sizes = bench_sizes(config);
    if (sizes.size() < 3) {
        throw ConfigError("scaling benchmark needs at least 3 sizes");
    }
    for (int n : sizes) {
        if (n < 2) {
            throw ConfigError("benchmark sizes must be at least 2");
        }
        if (static_cast<long>(n) * n * n > kFullScaleThreshold && !config.full) {
            throw ConfigError("benchmark sizes above 16 need --full (full = true)");
        }
    }
    if (config.degree < 1 || !(config.tau > 0.0)) {
        throw ConfigError("benchmark needs degree >= 1 and tau > 0");
    }

    using clock = std::chrono::steady_clock;
    ScalingReport report;
    std::vector<double> unknowns;
    std::vector<double> seconds;
    for (int n : sizes) {
        SimulationConfig level = config;
        level.problem = ProblemKind::pwave3d;
        level.elements = {n};
        level.initial = InitialCondition::gaussian;
        const auto spaces = make_spaces(level);
        const SplitOperator op{spaces, config.tau};
        CoefficientTensor u0 = pwave_initial_displacement(level, spaces);
        CoefficientTensor v0{u0.extents()};
        WaveState state = make_initial_state(op.operators(), std::move(u0), std::move(v0));

        const auto t0 = clock::now();
        step(state, op);
        step(state, op);
        const double warm = std::chrono::duration<double>(clock::now() - t0).count() / 2.0;
        const int reps = std::clamp(static_cast<int>(0.3 / std::max(warm, 1e-9)), 5, 500);
        std::vector<double> samples;
        samples.reserve(reps);
        for (int r = 0; r < reps; ++r) {
            const auto s = clock::now();
            step(state, op);
            samples.push_back(std::chrono::duration<double>(clock::now() - s).count());
        }
        if (!std::isfinite(max_abs(state.u))) {
            throw NumericalError("non-finite state in benchmark");
        }
        ScalingRow row{n, static_cast<long>(state.u.size()), median(samples)};
        report.rows.push_back(row);
        unknowns.push_back(static_cast<double>(row.unknowns));
        seconds.push_back(row.seconds_per_step);
    }
    report.slope = loglog_slope(unknowns, seconds);

    if (!config.out_dir.empty()) {
        ensure_directory(config.out_dir);
        write_text(join_path(config.out_dir, "config.echo"), config.echo());
        const std::vector<std::string> header{"N", "seconds_per_step"};
        CsvWriter csv{join_path(config.out_dir, "scaling.csv"), header};
        for (const auto& r : report.rows) {
            csv.row({static_cast<double>(r.unknowns), r.seconds_per_step});
        }
    }
    return report;
}

}  // namespace kronwave
