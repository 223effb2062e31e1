// SPDX-FileCopyrightText: 2026 The kronwave authors
// SPDX-License-Identifier: Apache-2.0

#ifndef KRONWAVE_OUTPUT_HPP
#define KRONWAVE_OUTPUT_HPP

#include <fstream>
#include <span>
#include <string>
#include <vector>

#include "kronwave/splines.hpp"
#include "kronwave/tensor.hpp"

namespace kronwave {

/// printf %.17g
std::string format_double(double value);

/// Comma separated file with a fixed header; numbers are written round-trippable.
class CsvWriter {
public:
    /// Throws IoError if the file cannot be created.
    CsvWriter(const std::string& path, std::span<const std::string> header);

    void row(std::span<const double> values);
    void row(std::initializer_list<double> values) { row(std::span<const double>{values.begin(), values.size()}); }

private:
    std::string path_;
    std::size_t columns_;
    std::ofstream out_;
};

/// Samples per direction used for snapshots: 4 per element.
inline constexpr int kSamplesPerElement = 4;

/// Legacy ASCII STRUCTURED_POINTS file of a scalar spline field sampled on a uniform
/// grid of (4 n_el) points per direction spanning [0, 1].
void write_vtk_scalar(const std::string& path, std::span<const BSplineSpace1D> spaces, const CoefficientTensor& c,
                      const std::string& name = "u");

/// Same for a two-component field (written as 3-vectors with zero z component).
void write_vtk_vector(const std::string& path, std::span<const BSplineSpace1D> spaces, const CoefficientTensor& cx,
                      const CoefficientTensor& cy, const std::string& name = "u");

/// Samples a spline field on the snapshot grid, x fastest.
std::vector<double> sample_field(std::span<const BSplineSpace1D> spaces, const CoefficientTensor& c);

void write_text(const std::string& path, const std::string& content);

/// Creates the directory (and parents); throws IoError on failure.
void ensure_directory(const std::string& path);

}  // namespace kronwave

#endif  // KRONWAVE_OUTPUT_HPP
