// SPDX-FileCopyrightText: 2026 The kronwave authors
// SPDX-License-Identifier: Apache-2.0

// Command line front end. Talks to the solver only through the C API.

#include <CLI11.hpp>

#include <cstdio>
#include <string>
#include <vector>

#include "kronwave/kronwave.h"

namespace {

// exit codes
constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitIo = 4;

int exit_code(kw_status s) {
    switch (s) {
    case KW_OK: return kExitOk;
    case KW_ERR_INVALID_ARGUMENT:
    case KW_ERR_CONFIG: return kExitConfig;
    case KW_ERR_IO: return kExitIo;
    case KW_ERR_NUMERICAL:
    case KW_ERR_INTERNAL: return kExitNumerical;
    }
    return kExitNumerical;
}

struct Failure {
    kw_status status;
};

void check(kw_status s) {
    if (s != KW_OK) {
        throw Failure{s};
    }
}

struct Options {
    std::string config_file;
    std::string out;
    std::string elements;
    std::string problem;
    int degree = 0;
    double tau = 0.0;
    int steps = 0;
    bool full = false;
    std::vector<std::string> overrides;
};

class Config {
public:
    Config() { check(kw_config_create(&handle_)); }
    ~Config() { kw_config_destroy(handle_); }
    Config(const Config&) = delete;
    Config& operator=(const Config&) = delete;

    kw_config* get() const { return handle_; }

    void set(const std::string& key, const std::string& value) { check(kw_config_set(handle_, key.c_str(), value.c_str())); }

    std::string value(const std::string& key) const {
        size_t need = 0;
        check(kw_config_get(handle_, key.c_str(), nullptr, 0, &need));
        std::string out(need, '\0');
        check(kw_config_get(handle_, key.c_str(), out.data(), out.size(), &need));
        out.resize(need - 1);
        return out;
    }

private:
    kw_config* handle_ = nullptr;
};

void add_common(CLI::App& sub, Options& o) {
    sub.add_option("--config", o.config_file, "key = value configuration file");
    sub.add_option("--out", o.out, "output directory");
    sub.add_option("--elements", o.elements, "elements per direction: n[,m[,l]]");
    sub.add_option("--degree", o.degree, "spline degree");
    sub.add_option("--tau", o.tau, "time step");
    sub.add_option("--steps", o.steps, "number of time steps (terminal time = steps * tau for convergence)");
    sub.add_flag("--full", o.full, "allow full-scale meshes (32 elements per direction by default)");
    sub.add_option("--set", o.overrides, "extra key=value override, repeatable");
}

std::size_t comma_count(const std::string& s) {
    std::size_t n = 0;
    for (char c : s) {
        n += c == ',';
    }
    return n;
}

// defaults < config file < flags
void apply(Config& cfg, const Options& o) {
    if (!o.config_file.empty()) {
        check(kw_config_load_file(cfg.get(), o.config_file.c_str()));
    }
    if (!o.problem.empty()) {
        cfg.set("problem", o.problem);
    }
    if (o.full) {
        cfg.set("full", "true");
    }
    if (!o.out.empty()) {
        cfg.set("out", o.out);
    }
    if (!o.elements.empty()) {
        cfg.set("elements", o.elements);
    }
    if (o.degree != 0) {
        cfg.set("degree", std::to_string(o.degree));
    }
    if (o.tau != 0.0) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.17g", o.tau);
        cfg.set("tau", buf);
    }
    if (o.steps != 0) {
        cfg.set("steps", std::to_string(o.steps));
    }
    for (const auto& kv : o.overrides) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) {
            std::fprintf(stderr, "--set expects key=value, got '%s'\n", kv.c_str());
            throw Failure{KW_ERR_CONFIG};
        }
        cfg.set(kv.substr(0, eq), kv.substr(eq + 1));
    }
}

// pick the scalar problem dimension from --elements when it names 2 or 3 directions
void choose_pwave_problem(Config& cfg, const Options& o) {
    if (!o.problem.empty()) {
        return;
    }
    const std::size_t commas = comma_count(o.elements);
    if (!o.elements.empty() && commas == 1) {
        cfg.set("problem", "pwave2d");
    } else if (!o.elements.empty() && commas == 2) {
        cfg.set("problem", "pwave3d");
    } else if (cfg.value("problem") == "elasticity2d") {
        cfg.set("problem", "pwave3d");
    }
}

int run_pwave(Config& cfg, const Options& o) {
    choose_pwave_problem(cfg, o);
    kw_run_summary s{};
    check(kw_run_pwave(cfg.get(), &s));
    std::printf("problem %s, elements %s, %d energy rows\n", cfg.value("problem").c_str(),
                cfg.value("elements").c_str(), s.records);
    std::printf("total energy %.10g -> %.10g, relative drift %.3e\n", s.initial_energy, s.final_energy,
                s.relative_drift);
    std::printf("snapshots written: %d\n", s.snapshots);
    return kExitOk;
}

int run_elasticity(Config& cfg) {
    cfg.set("problem", "elasticity2d");
    kw_run_summary s{};
    check(kw_run_elasticity(cfg.get(), &s));
    std::printf("elements %s, %d energy rows\n", cfg.value("elements").c_str(), s.records);
    std::printf("total energy %.10g -> %.10g, relative drift %.3e\n", s.initial_energy, s.final_energy,
                s.relative_drift);
    std::printf("max *-norm increase per step: %.3e\n", s.star_norm_max_increase);
    std::printf("snapshots written: %d\n", s.snapshots);
    return kExitOk;
}

int run_convergence(Config& cfg, const Options& o) {
    if (cfg.value("problem") != "elasticity2d") {
        choose_pwave_problem(cfg, o);
    }
    std::vector<double> taus(64), errors(64);
    int count = 0;
    double slope = 0.0;
    check(kw_run_convergence(cfg.get(), taus.data(), errors.data(), 64, &count, &slope));
    std::printf("%-14s %-14s %s\n", "tau", "error", "ratio");
    for (int i = 0; i < count && i < 64; ++i) {
        if (i == 0) {
            std::printf("%-14.6g %-14.6e\n", taus[i], errors[i]);
        } else {
            std::printf("%-14.6g %-14.6e %.3f\n", taus[i], errors[i], errors[i - 1] / errors[i]);
        }
    }
    std::printf("observed order (log-log slope): %.4f\n", slope);
    return kExitOk;
}

int run_stability(Config& cfg, const Options& o) {
    if (o.problem.empty()) {
        cfg.set("problem", "pwave2d");
    }
    std::vector<double> taus(1024), radii(1024);
    int count = 0;
    double worst = 0.0;
    check(kw_run_stability(cfg.get(), taus.data(), radii.data(), 1024, &count, &worst));
    std::printf("%d time steps swept, largest spectral radius %.17g (form %s)\n", count, worst,
                cfg.value("amplification").c_str());
    return kExitOk;
}

int run_bench(Config& cfg, const Options& o) {
    if (!o.elements.empty()) {
        cfg.set("sizes", o.elements);
        cfg.set("elements", "");
    }
    std::vector<long> unknowns(64);
    std::vector<double> seconds(64);
    int count = 0;
    double slope = 0.0;
    check(kw_run_bench(cfg.get(), unknowns.data(), seconds.data(), 64, &count, &slope));
    std::printf("%-12s %s\n", "N", "seconds_per_step");
    for (int i = 0; i < count && i < 64; ++i) {
        std::printf("%-12ld %.6e\n", unknowns[i], seconds[i]);
    }
    std::printf("log-log slope of time vs N: %.3f\n", slope);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"kronwave: tensor-product spline wave solvers with Kronecker-split implicit steps"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kw_version());

    Options o;
    auto* pwave = app.add_subcommand("pwave", "scalar P-wave run (2D or 3D), writes energy.csv and snapshots");
    auto* elasticity = app.add_subcommand("elasticity", "2D linear elasticity run, writes energy.csv and starnorm.csv");
    auto* convergence = app.add_subcommand("convergence", "time-convergence study against a manufactured mode");
    auto* stability = app.add_subcommand("stability", "spectral radius sweep of the amplification matrix");
    auto* bench = app.add_subcommand("bench", "3D per-step timing over mesh sizes, writes scaling.csv");
    for (auto* sub : {pwave, elasticity, convergence, stability, bench}) {
        add_common(*sub, o);
    }
    for (auto* sub : {pwave, convergence, stability}) {
        sub->add_option("--problem", o.problem, "pwave2d | pwave3d | elasticity2d");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        Config cfg;
        apply(cfg, o);
        if (pwave->parsed()) {
            return run_pwave(cfg, o);
        }
        if (elasticity->parsed()) {
            return run_elasticity(cfg);
        }
        if (convergence->parsed()) {
            return run_convergence(cfg, o);
        }
        if (stability->parsed()) {
            return run_stability(cfg, o);
        }
        return run_bench(cfg, o);
    } catch (const Failure& f) {
        const char* msg = kw_last_error();
        std::fprintf(stderr, "kronwave: %s%s%s\n", kw_status_string(f.status), *msg ? ": " : "", msg);
        return exit_code(f.status);
    }
}
