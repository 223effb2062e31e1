// SPDX-FileCopyrightText: 2026 The kronwave authors
// SPDX-License-Identifier: Apache-2.0

#include "kronwave/kronwave.h"

#include <algorithm>
#include <cstring>
#include <memory>
#include <new>
#include <optional>
#include <string>

#include "kronwave/config.hpp"
#include "kronwave/error.hpp"
#include "kronwave/harness.hpp"

struct kw_config {
    kronwave::SimulationConfig value;
};

struct kw_pwave {
    std::vector<kronwave::BSplineSpace1D> spaces;
    std::unique_ptr<kronwave::SplitOperator> op;
    kronwave::WaveState state;
};

struct kw_elastic {
    std::vector<kronwave::BSplineSpace1D> spaces;
    std::unique_ptr<kronwave::ElasticOperator> op;
    kronwave::ElasticState state;
};

namespace {

thread_local std::string last_error;

template <typename F>
kw_status guarded(F&& body) noexcept {
    try {
        last_error.clear();
        body();
        return KW_OK;
    } catch (const kronwave::ConfigError& e) {
        last_error = e.what();
        return KW_ERR_CONFIG;
    } catch (const kronwave::IoError& e) {
        last_error = e.what();
        return KW_ERR_IO;
    } catch (const kronwave::NumericalError& e) {
        last_error = e.what();
        return KW_ERR_NUMERICAL;
    } catch (const kronwave::InvalidArgument& e) {
        last_error = e.what();
        return KW_ERR_INVALID_ARGUMENT;
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return KW_ERR_INTERNAL;
    } catch (const std::exception& e) {
        last_error = e.what();
        return KW_ERR_INTERNAL;
    } catch (...) {
        last_error = "unknown failure";
        return KW_ERR_INTERNAL;
    }
}

void require(bool ok, const char* what) {
    if (!ok) {
        throw kronwave::InvalidArgument(what);
    }
}

void copy_out(const std::string& text, char* buffer, size_t capacity, size_t* required) {
    if (required != nullptr) {
        *required = text.size() + 1;
    }
    if (buffer == nullptr) {
        return;
    }
    if (capacity <= text.size()) {
        throw kronwave::InvalidArgument("output buffer too small");
    }
    std::memcpy(buffer, text.c_str(), text.size() + 1);
}

void fill_summary(const kronwave::RunSummary& s, kw_run_summary* out) {
    out->records = static_cast<int>(s.energies.size());
    out->relative_drift = s.relative_drift;
    out->initial_energy = s.energies.empty() ? 0.0 : s.energies.front().total;
    out->final_energy = s.energies.empty() ? 0.0 : s.energies.back().total;
    out->snapshots = s.snapshots;
    double worst = 0.0;
    for (std::size_t i = 1; i < s.star_norms.size(); ++i) {
        worst = std::max(worst, s.star_norms[i] - s.star_norms[i - 1]);
    }
    out->star_norm_max_increase = worst;
}

}  // namespace

extern "C" {

KW_API const char* kw_version(void) {
    return "0.1.0";
}

KW_API const char* kw_status_string(kw_status status) {
    switch (status) {
    case KW_OK: return "ok";
    case KW_ERR_INVALID_ARGUMENT: return "invalid argument";
    case KW_ERR_CONFIG: return "configuration error";
    case KW_ERR_NUMERICAL: return "numerical failure";
    case KW_ERR_IO: return "I/O error";
    case KW_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

KW_API const char* kw_last_error(void) {
    return last_error.c_str();
}

KW_API kw_status kw_config_create(kw_config** out) {
    return guarded([&] {
        require(out != nullptr, "null output pointer");
        *out = new kw_config{};
    });
}

KW_API void kw_config_destroy(kw_config* config) {
    delete config;
}

KW_API kw_status kw_config_set(kw_config* config, const char* key, const char* value) {
    return guarded([&] {
        require(config && key && value, "null argument");
        config->value.set(key, value);
    });
}

KW_API kw_status kw_config_load_file(kw_config* config, const char* path) {
    return guarded([&] {
        require(config && path, "null argument");
        config->value.load_file(path);
    });
}

KW_API kw_status kw_config_validate(const kw_config* config) {
    return guarded([&] {
        require(config != nullptr, "null configuration");
        config->value.validate();
    });
}

KW_API kw_status kw_config_echo(const kw_config* config, char* buffer, size_t capacity, size_t* required) {
    return guarded([&] {
        require(config != nullptr, "null configuration");
        copy_out(config->value.echo(), buffer, capacity, required);
    });
}

KW_API kw_status kw_config_get(const kw_config* config, const char* key, char* buffer, size_t capacity,
                               size_t* required) {
    return guarded([&] {
        require(config && key, "null argument");
        copy_out(config->value.get(key), buffer, capacity, required);
    });
}

KW_API kw_status kw_config_elements(const kw_config* config, int* counts, int capacity, int* dimension) {
    return guarded([&] {
        require(config != nullptr, "null configuration");
        const auto e = config->value.element_counts();
        if (dimension != nullptr) {
            *dimension = static_cast<int>(e.size());
        }
        for (int i = 0; counts && i < std::min<int>(capacity, static_cast<int>(e.size())); ++i) {
            counts[i] = e[i];
        }
    });
}

KW_API kw_status kw_config_total_elements(const kw_config* config, long* total) {
    return guarded([&] {
        require(config && total, "null argument");
        long t = 1;
        for (int n : config->value.element_counts()) {
            t *= n;
        }
        *total = t;
    });
}

KW_API kw_status kw_run_pwave(const kw_config* config, kw_run_summary* out) {
    return guarded([&] {
        require(config != nullptr, "null configuration");
        const auto s = kronwave::run_pwave(config->value);
        if (out != nullptr) {
            fill_summary(s, out);
        }
    });
}

KW_API kw_status kw_run_elasticity(const kw_config* config, kw_run_summary* out) {
    return guarded([&] {
        require(config != nullptr, "null configuration");
        const auto s = kronwave::run_elasticity(config->value);
        if (out != nullptr) {
            fill_summary(s, out);
        }
    });
}

KW_API kw_status kw_run_convergence(const kw_config* config, double* taus, double* errors, int capacity, int* count,
                                    double* slope) {
    return guarded([&] {
        require(config != nullptr, "null configuration");
        const auto r = kronwave::run_convergence(config->value);
        const int n = static_cast<int>(r.taus.size());
        for (int i = 0; i < std::min(n, capacity); ++i) {
            if (taus) taus[i] = r.taus[i];
            if (errors) errors[i] = r.errors[i];
        }
        if (count) *count = n;
        if (slope) *slope = r.slope;
    });
}

KW_API kw_status kw_run_stability(const kw_config* config, double* taus, double* radii, int capacity, int* count,
                                  double* max_radius) {
    return guarded([&] {
        require(config != nullptr, "null configuration");
        const auto rows = kronwave::run_stability_sweep(config->value);
        const int n = static_cast<int>(rows.size());
        double worst = 0.0;
        for (int i = 0; i < n; ++i) {
            worst = std::max(worst, rows[i].max_radius);
            if (i < capacity) {
                if (taus) taus[i] = rows[i].tau;
                if (radii) radii[i] = rows[i].max_radius;
            }
        }
        if (count) *count = n;
        if (max_radius) *max_radius = worst;
    });
}

KW_API kw_status kw_run_bench(const kw_config* config, long* unknowns, double* seconds, int capacity, int* count,
                              double* slope) {
    return guarded([&] {
        require(config != nullptr, "null configuration");
        const auto r = kronwave::run_scaling_bench(config->value);
        const int n = static_cast<int>(r.rows.size());
        for (int i = 0; i < std::min(n, capacity); ++i) {
            if (unknowns) unknowns[i] = r.rows[i].unknowns;
            if (seconds) seconds[i] = r.rows[i].seconds_per_step;
        }
        if (count) *count = n;
        if (slope) *slope = r.slope;
    });
}

KW_API kw_status kw_pwave_create(const kw_config* config, kw_pwave** out) {
    return guarded([&] {
        require(config && out, "null argument");
        const auto& cfg = config->value;
        if (!cfg.is_pwave()) {
            throw kronwave::ConfigError("pwave handle needs problem pwave2d or pwave3d");
        }
        cfg.validate();
        auto sim = std::make_unique<kw_pwave>();
        sim->spaces = kronwave::make_spaces(cfg);
        sim->op = std::make_unique<kronwave::SplitOperator>(sim->spaces, cfg.tau);
        kronwave::CoefficientTensor u0 = kronwave::pwave_initial_displacement(cfg, sim->spaces);
        kronwave::CoefficientTensor v0{u0.extents()};
        sim->state = kronwave::make_initial_state(sim->op->operators(), std::move(u0), std::move(v0));
        *out = sim.release();
    });
}

KW_API void kw_pwave_destroy(kw_pwave* sim) {
    delete sim;
}

KW_API kw_status kw_pwave_step(kw_pwave* sim, int steps) {
    return guarded([&] {
        require(sim != nullptr, "null handle");
        require(steps >= 0, "negative step count");
        for (int i = 0; i < steps; ++i) {
            kronwave::step(sim->state, *sim->op);
        }
    });
}

KW_API kw_status kw_pwave_energies(const kw_pwave* sim, double* kinetic, double* potential, double* total) {
    return guarded([&] {
        require(sim != nullptr, "null handle");
        const auto e = kronwave::energies(sim->state, sim->op->operators());
        if (kinetic) *kinetic = e.kinetic;
        if (potential) *potential = e.potential;
        if (total) *total = e.total;
    });
}

KW_API kw_status kw_pwave_time(const kw_pwave* sim, double* time, int* step) {
    return guarded([&] {
        require(sim != nullptr, "null handle");
        if (time) *time = sim->state.time;
        if (step) *step = sim->state.step;
    });
}

KW_API kw_status kw_pwave_size(const kw_pwave* sim, size_t* unknowns) {
    return guarded([&] {
        require(sim && unknowns, "null argument");
        *unknowns = sim->state.u.size();
    });
}

KW_API kw_status kw_pwave_copy_displacement(const kw_pwave* sim, double* buffer, size_t capacity) {
    return guarded([&] {
        require(sim && buffer, "null argument");
        const auto d = sim->state.u.data();
        require(capacity >= d.size(), "buffer too small");
        std::copy(d.begin(), d.end(), buffer);
    });
}

KW_API kw_status kw_elastic_create(const kw_config* config, kw_elastic** out) {
    return guarded([&] {
        require(config && out, "null argument");
        const auto& cfg = config->value;
        if (cfg.problem != kronwave::ProblemKind::elasticity2d) {
            throw kronwave::ConfigError("elastic handle needs problem elasticity2d");
        }
        cfg.validate();
        auto sim = std::make_unique<kw_elastic>();
        sim->spaces = kronwave::make_spaces(cfg);
        sim->op = std::make_unique<kronwave::ElasticOperator>(sim->spaces, cfg.material, cfg.tau, cfg.sigma);
        const auto u0 = kronwave::elastic_initial_displacement(cfg, sim->spaces);
        kronwave::VectorCoefficients v0{kronwave::CoefficientTensor{u0.x.extents()},
                                        kronwave::CoefficientTensor{u0.y.extents()}};
        sim->state = kronwave::bootstrap_first_step(u0, v0, *sim->op);
        *out = sim.release();
    });
}

KW_API void kw_elastic_destroy(kw_elastic* sim) {
    delete sim;
}

KW_API kw_status kw_elastic_step(kw_elastic* sim, int steps) {
    return guarded([&] {
        require(sim != nullptr, "null handle");
        require(steps >= 0, "negative step count");
        for (int i = 0; i < steps; ++i) {
            kronwave::elastic_step(sim->state, *sim->op);
        }
    });
}

KW_API kw_status kw_elastic_energies(const kw_elastic* sim, double* kinetic, double* potential, double* total) {
    return guarded([&] {
        require(sim != nullptr, "null handle");
        const auto e = kronwave::elastic_energies(sim->state, *sim->op);
        if (kinetic) *kinetic = e.kinetic;
        if (potential) *potential = e.potential;
        if (total) *total = e.total;
    });
}

KW_API kw_status kw_elastic_star_norm(const kw_elastic* sim, int energy_weighted, double* value) {
    return guarded([&] {
        require(sim && value, "null argument");
        *value = kronwave::star_norm(sim->state, *sim->op,
                                     energy_weighted ? kronwave::StarNormWeight::energy
                                                     : kronwave::StarNormWeight::printed);
    });
}

KW_API kw_status kw_elastic_time(const kw_elastic* sim, double* time, int* step) {
    return guarded([&] {
        require(sim != nullptr, "null handle");
        if (time) *time = sim->state.time;
        if (step) *step = sim->state.step;
    });
}

KW_API kw_status kw_elastic_size(const kw_elastic* sim, size_t* unknowns_per_component) {
    return guarded([&] {
        require(sim && unknowns_per_component, "null argument");
        *unknowns_per_component = sim->state.current.x.size();
    });
}

KW_API kw_status kw_elastic_copy_displacement(const kw_elastic* sim, double* x, double* y, size_t capacity) {
    return guarded([&] {
        require(sim && x && y, "null argument");
        const auto dx = sim->state.current.x.data();
        const auto dy = sim->state.current.y.data();
        require(capacity >= dx.size(), "buffer too small");
        std::copy(dx.begin(), dx.end(), x);
        std::copy(dy.begin(), dy.end(), y);
    });
}

}  // extern "C"
