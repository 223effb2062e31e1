// SPDX-FileCopyrightText: 2026 The kronwave authors
// SPDX-License-Identifier: Apache-2.0

#include "kronwave/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "kronwave/error.hpp"

namespace kronwave {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

template <typename T>
T parse_number(std::string_view key, std::string_view text) {
    text = trim(text);
    T value{};
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end || text.empty()) {
        throw ConfigError("invalid value '" + std::string{text} + "' for key '" + std::string{key} + "'");
    }
    return value;
}

template <typename T>
std::vector<T> parse_list(std::string_view key, std::string_view text) {
    std::vector<T> out;
    while (true) {
        const auto comma = text.find(',');
        out.push_back(parse_number<T>(key, text.substr(0, comma)));
        if (comma == std::string_view::npos) {
            break;
        }
        text.remove_prefix(comma + 1);
    }
    return out;
}

bool parse_bool(std::string_view key, std::string_view text) {
    text = trim(text);
    if (text == "true" || text == "1" || text == "yes" || text == "on") {
        return true;
    }
    if (text == "false" || text == "0" || text == "no" || text == "off") {
        return false;
    }
    throw ConfigError("invalid boolean '" + std::string{text} + "' for key '" + std::string{key} + "'");
}

template <typename T>
std::string join(const std::vector<T>& values) {
    std::ostringstream os;
    os.precision(17);
    for (std::size_t i = 0; i < values.size(); ++i) {
        os << (i ? "," : "") << values[i];
    }
    return os.str();
}

}  // namespace

std::string_view to_string(ProblemKind kind) noexcept {
    switch (kind) {
    case ProblemKind::pwave2d: return "pwave2d";
    case ProblemKind::pwave3d: return "pwave3d";
    case ProblemKind::elasticity2d: return "elasticity2d";
    }
    return "?";
}

std::string_view to_string(InitialCondition kind) noexcept {
    switch (kind) {
    case InitialCondition::gaussian: return "gaussian";
    case InitialCondition::mode: return "mode";
    case InitialCondition::zero: return "zero";
    case InitialCondition::translation: return "translation";
    }
    return "?";
}

std::string_view to_string(AmplificationForm form) noexcept {
    switch (form) {
    case AmplificationForm::scheme: return "scheme";
    case AmplificationForm::printed_update: return "printed_update";
    case AmplificationForm::published: return "published";
    }
    return "?";
}

std::vector<int> SimulationConfig::element_counts() const {
    const int dim = dimension();
    if (elements.empty()) {
        return std::vector<int>(dim, full ? 32 : 16);
    }
    if (elements.size() == 1) {
        return std::vector<int>(dim, elements.front());
    }
    return elements;
}

void SimulationConfig::set(std::string_view key, std::string_view value) {
    key = trim(key);
    value = trim(value);
    if (key == "problem") {
        if (value == "pwave2d") {
            problem = ProblemKind::pwave2d;
        } else if (value == "pwave3d") {
            problem = ProblemKind::pwave3d;
        } else if (value == "elasticity2d") {
            problem = ProblemKind::elasticity2d;
        } else {
            throw ConfigError("unknown problem '" + std::string{value} + "'");
        }
    } else if (key == "elements") {
        elements = value.empty() ? std::vector<int>{} : parse_list<int>(key, value);
    } else if (key == "degree") {
        degree = parse_number<int>(key, value);
    } else if (key == "tau") {
        tau = parse_number<double>(key, value);
    } else if (key == "steps") {
        steps = parse_number<int>(key, value);
    } else if (key == "rho") {
        material.rho = parse_number<double>(key, value);
    } else if (key == "mu") {
        material.mu = parse_number<double>(key, value);
    } else if (key == "lambda") {
        material.lambda = parse_number<double>(key, value);
    } else if (key == "sigma") {
        sigma = parse_number<double>(key, value);
    } else if (key == "initial") {
        if (value == "gaussian") {
            initial = InitialCondition::gaussian;
        } else if (value == "mode") {
            initial = InitialCondition::mode;
        } else if (value == "zero") {
            initial = InitialCondition::zero;
        } else if (value == "translation") {
            initial = InitialCondition::translation;
        } else {
            throw ConfigError("unknown initial condition '" + std::string{value} + "'");
        }
    } else if (key == "center") {
        center = parse_list<double>(key, value);
    } else if (key == "width") {
        width = parse_number<double>(key, value);
    } else if (key == "mode") {
        mode = parse_list<int>(key, value);
    } else if (key == "output_every") {
        output_every = parse_number<int>(key, value);
    } else if (key == "out") {
        out_dir = std::string{value};
    } else if (key == "full") {
        full = parse_bool(key, value);
    } else if (key == "levels") {
        levels = parse_number<int>(key, value);
    } else if (key == "taus") {
        taus = value.empty() ? std::vector<double>{} : parse_list<double>(key, value);
    } else if (key == "sizes") {
        sizes = value.empty() ? std::vector<int>{} : parse_list<int>(key, value);
    } else if (key == "amplification") {
        if (value == "scheme") {
            amplification = AmplificationForm::scheme;
        } else if (value == "printed_update") {
            amplification = AmplificationForm::printed_update;
        } else if (value == "published") {
            amplification = AmplificationForm::published;
        } else {
            throw ConfigError("unknown amplification form '" + std::string{value} + "'");
        }
    } else {
        throw ConfigError("unknown configuration key '" + std::string{key} + "'");
    }
}

void SimulationConfig::load_file(const std::string& path) {
    std::ifstream in{path};
    if (!in) {
        throw IoError("cannot open configuration file '" + path + "'");
    }
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        std::string_view view{line};
        if (const auto hash = view.find('#'); hash != std::string_view::npos) {
            view = view.substr(0, hash);
        }
        view = trim(view);
        if (view.empty()) {
            continue;
        }
        const auto eq = view.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError(path + ":" + std::to_string(number) + ": expected key = value");
        }
        try {
            set(view.substr(0, eq), view.substr(eq + 1));
        } catch (const ConfigError& e) {
            throw ConfigError(path + ":" + std::to_string(number) + ": " + e.what());
        }
    }
}

void SimulationConfig::validate() const {
    const int dim = dimension();
    if (elements.size() > 1 && static_cast<int>(elements.size()) != dim) {
        throw ConfigError("problem " + std::string{to_string(problem)} + " needs " + std::to_string(dim)
                          + " element counts, got " + std::to_string(elements.size()));
    }
    long total = 1;
    for (int n : element_counts()) {
        if (n < 2) {
            throw ConfigError("element counts must be at least 2 per direction");
        }
        total *= n;
    }
    if (total > kFullScaleThreshold && !full) {
        throw ConfigError("meshes above 16^3 elements are full-scale runs; pass --full (full = true)");
    }
    if (degree < 1) {
        throw ConfigError("spline degree must be at least 1");
    }
    if (!(tau > 0.0)) {
        throw ConfigError("tau must be positive");
    }
    if (steps < 1) {
        throw ConfigError("steps must be at least 1");
    }
    if (!(width > 0.0)) {
        throw ConfigError("gaussian width must be positive");
    }
    if (!(sigma > 0.0)) {
        throw ConfigError("sigma must be positive");
    }
    if (output_every < 0) {
        throw ConfigError("output_every must be non-negative");
    }
    if (center.size() < static_cast<std::size_t>(dim)) {
        throw ConfigError("center needs one coordinate per direction");
    }
    if (mode.size() < static_cast<std::size_t>(dim) && !(problem == ProblemKind::elasticity2d && !mode.empty())) {
        throw ConfigError("mode needs one wave number per direction");
    }
    try {
        material.validate();
    } catch (const InvalidArgument& e) {
        throw ConfigError(e.what());
    }
}

std::string SimulationConfig::echo() const {
    std::ostringstream os;
    os.precision(17);
    os << "problem = " << to_string(problem) << '\n'
       << "elements = " << join(element_counts()) << '\n'
       << "degree = " << degree << '\n'
       << "tau = " << tau << '\n'
       << "steps = " << steps << '\n'
       << "rho = " << material.rho << '\n'
       << "mu = " << material.mu << '\n'
       << "lambda = " << material.lambda << '\n'
       << "sigma = " << sigma << '\n'
       << "initial = " << to_string(initial) << '\n'
       << "center = " << join(center) << '\n'
       << "width = " << width << '\n'
       << "mode = " << join(mode) << '\n'
       << "output_every = " << output_every << '\n'
       << "out = " << out_dir << '\n'
       << "full = " << (full ? "true" : "false") << '\n'
       << "levels = " << levels << '\n'
       << "taus = " << join(taus) << '\n'
       << "sizes = " << join(sizes) << '\n'
       << "amplification = " << to_string(amplification) << '\n';
    return os.str();
}

std::string SimulationConfig::get(std::string_view key) const {
    key = trim(key);
    std::istringstream in{echo()};
    std::string line;
    while (std::getline(in, line)) {
        const auto eq = line.find('=');
        if (trim(std::string_view{line}.substr(0, eq)) == key) {
            return std::string{trim(std::string_view{line}.substr(eq + 1))};
        }
    }
    throw ConfigError("unknown configuration key '" + std::string{key} + "'");
}

}  // namespace kronwave
