// SPDX-FileCopyrightText: 2026 The kronwave authors
// SPDX-License-Identifier: Apache-2.0

#ifndef KRONWAVE_CONFIG_HPP
#define KRONWAVE_CONFIG_HPP

#include <string>
#include <string_view>
#include <vector>

#include "kronwave/elasticity.hpp"
#include "kronwave/stability.hpp"

namespace kronwave {

enum class ProblemKind { pwave2d, pwave3d, elasticity2d };

enum class InitialCondition {
    gaussian,     // exp(-|x - center|^2 / width^2), zero velocity
    mode,         // manufactured standing mode with known analytic evolution
    zero,
    translation,  // constant displacement (rigid translation)
};

/// Everything a driver needs. Parsed from flat `key = value` text; `#` starts a comment.
struct SimulationConfig {
    ProblemKind problem = ProblemKind::pwave3d;
    std::vector<int> elements;  // empty: 16 per direction, 32 with full
    int degree = 2;
    double tau = 0.01;
    int steps = 100;
    MaterialParams material;
    double sigma = 0.25;
    InitialCondition initial = InitialCondition::gaussian;
    std::vector<double> center{0.5, 0.5, 0.5};
    double width = 0.1;
    std::vector<int> mode{1, 1, 1};
    int output_every = 0;  // snapshot cadence in steps; 0 disables snapshots
    std::string out_dir = "out";
    bool full = false;
    int levels = 5;
    std::vector<double> taus;
    std::vector<int> sizes;  // empty: 8,16,32 with full, else 4,8,16
    AmplificationForm amplification = AmplificationForm::scheme;

    int dimension() const noexcept { return problem == ProblemKind::pwave3d ? 3 : 2; }
    bool is_pwave() const noexcept { return problem != ProblemKind::elasticity2d; }

    /// Element counts expanded to dimension() entries (a single value is replicated).
    std::vector<int> element_counts() const;

    /// Throws ConfigError for unknown keys or malformed values.
    void set(std::string_view key, std::string_view value);

    /// Applies every `key = value` line of a file. Throws IoError if the file
    /// cannot be read and ConfigError on a malformed line.
    void load_file(const std::string& path);

    /// Throws ConfigError when the configuration cannot be run.
    void validate() const;

    /// Machine-readable `key = value` dump accepted by load_file.
    std::string echo() const;

    /// Value of one key as echo() prints it; throws ConfigError for unknown keys.
    std::string get(std::string_view key) const;
};

std::string_view to_string(ProblemKind kind) noexcept;
std::string_view to_string(InitialCondition kind) noexcept;
std::string_view to_string(AmplificationForm form) noexcept;

/// Total element count above which runs need `full = true`.
inline constexpr long kFullScaleThreshold = 16L * 16L * 16L;

}  // namespace kronwave

#endif  // KRONWAVE_CONFIG_HPP
