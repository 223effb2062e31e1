// SPDX-FileCopyrightText: 2026 The kronwave authors
// SPDX-License-Identifier: Apache-2.0

#include "kronwave/output.hpp"

#include <array>
#include <cstdio>
#include <filesystem>
#include <system_error>

#include "kronwave/error.hpp"

namespace kronwave {

namespace {

struct SampleTable {
    int count = 0;
    int degree = 0;
    std::vector<int> first;
    std::vector<double> values;  // count x (degree + 1)
};

SampleTable sample_table(const BSplineSpace1D& space) {
    SampleTable t;
    t.count = space.element_count() * kSamplesPerElement;
    t.degree = space.degree();
    const int width = t.degree + 1;
    t.first.resize(t.count);
    t.values.resize(static_cast<std::size_t>(t.count) * width);
    for (int s = 0; s < t.count; ++s) {
        const double x = t.count == 1 ? 0.0 : static_cast<double>(s) / (t.count - 1);
        const BasisValues b = space.eval(x, 0);
        t.first[s] = b.first;
        std::copy(b.values.begin(), b.values.end(), t.values.begin() + static_cast<std::ptrdiff_t>(s) * width);
    }
    return t;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out{path};
    if (!out) {
        throw IoError("cannot write '" + path + "'");
    }
    return out;
}

void write_vtk_header(std::ofstream& out, std::span<const BSplineSpace1D> spaces, const std::string& title) {
    std::array<int, 3> dims{1, 1, 1};
    std::array<double, 3> spacing{1.0, 1.0, 1.0};
    for (std::size_t d = 0; d < spaces.size(); ++d) {
        dims[d] = spaces[d].element_count() * kSamplesPerElement;
        spacing[d] = dims[d] > 1 ? 1.0 / (dims[d] - 1) : 1.0;
    }
    out << "# vtk DataFile Version 3.0\n"
        << title << '\n'
        << "ASCII\n"
        << "DATASET STRUCTURED_POINTS\n"
        << "DIMENSIONS " << dims[0] << ' ' << dims[1] << ' ' << dims[2] << '\n'
        << "ORIGIN 0 0 0\n"
        << "SPACING " << format_double(spacing[0]) << ' ' << format_double(spacing[1]) << ' '
        << format_double(spacing[2]) << '\n'
        << "POINT_DATA " << static_cast<long>(dims[0]) * dims[1] * dims[2] << '\n';
}

}  // namespace

std::string format_double(double value) {
    std::array<char, 32> buf{};
    std::snprintf(buf.data(), buf.size(), "%.17g", value);
    return buf.data();
}

CsvWriter::CsvWriter(const std::string& path, std::span<const std::string> header)
: path_{path}
, columns_{header.size()}
, out_{open_output(path)} {
    for (std::size_t i = 0; i < header.size(); ++i) {
        out_ << (i ? "," : "") << header[i];
    }
    out_ << '\n';
}

void CsvWriter::row(std::span<const double> values) {
    if (values.size() != columns_) {
        throw InvalidArgument("csv row has " + std::to_string(values.size()) + " values, header has "
                              + std::to_string(columns_));
    }
    for (std::size_t i = 0; i < values.size(); ++i) {
        out_ << (i ? "," : "") << format_double(values[i]);
    }
    out_ << '\n';
    if (!out_) {
        throw IoError("write to '" + path_ + "' failed");
    }
}

std::vector<double> sample_field(std::span<const BSplineSpace1D> spaces, const CoefficientTensor& c) {
    if (spaces.size() != static_cast<std::size_t>(c.rank())) {
        throw InvalidArgument("field rank does not match the number of spaces");
    }
    std::array<SampleTable, 3> tables;
    std::array<int, 3> counts{1, 1, 1};
    for (std::size_t d = 0; d < spaces.size(); ++d) {
        if (spaces[d].basis_count() != c.extent(static_cast<int>(d))) {
            throw InvalidArgument("field extents do not match the spaces");
        }
        tables[d] = sample_table(spaces[d]);
        counts[d] = tables[d].count;
    }
    const auto entry = [&](int d, int s, int a, int& index) {
        if (static_cast<std::size_t>(d) >= spaces.size()) {
            index = 0;
            return a == 0 ? 1.0 : 0.0;
        }
        const auto& t = tables[d];
        index = t.first[s] + a;
        return t.values[static_cast<std::size_t>(s) * (t.degree + 1) + a];
    };
    const std::array<int, 3> widths{
        spaces.size() > 0 ? spaces[0].degree() + 1 : 1,
        spaces.size() > 1 ? spaces[1].degree() + 1 : 1,
        spaces.size() > 2 ? spaces[2].degree() + 1 : 1,
    };

    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(counts[0]) * counts[1] * counts[2]);
    for (int sk = 0; sk < counts[2]; ++sk) {
        for (int sj = 0; sj < counts[1]; ++sj) {
            for (int si = 0; si < counts[0]; ++si) {
                double value = 0.0;
                for (int c3 = 0; c3 < widths[2]; ++c3) {
                    int k = 0;
                    const double w3 = entry(2, sk, c3, k);
                    for (int c2 = 0; c2 < widths[1]; ++c2) {
                        int j = 0;
                        const double w2 = w3 * entry(1, sj, c2, j);
                        for (int c1 = 0; c1 < widths[0]; ++c1) {
                            int i = 0;
                            const double w1 = w2 * entry(0, si, c1, i);
                            value += w1 * c(i, j, k);
                        }
                    }
                }
                out.push_back(value);
            }
        }
    }
    return out;
}

void write_vtk_scalar(const std::string& path, std::span<const BSplineSpace1D> spaces, const CoefficientTensor& c,
                      const std::string& name) {
    const auto values = sample_field(spaces, c);
    auto out = open_output(path);
    write_vtk_header(out, spaces, "kronwave scalar field");
    out << "SCALARS " << name << " double 1\nLOOKUP_TABLE default\n";
    for (double v : values) {
        out << format_double(v) << '\n';
    }
    if (!out) {
        throw IoError("write to '" + path + "' failed");
    }
}

void write_vtk_vector(const std::string& path, std::span<const BSplineSpace1D> spaces, const CoefficientTensor& cx,
                      const CoefficientTensor& cy, const std::string& name) {
    const auto vx = sample_field(spaces, cx);
    const auto vy = sample_field(spaces, cy);
    auto out = open_output(path);
    write_vtk_header(out, spaces, "kronwave vector field");
    out << "VECTORS " << name << " double\n";
    for (std::size_t i = 0; i < vx.size(); ++i) {
        out << format_double(vx[i]) << ' ' << format_double(vy[i]) << " 0\n";
    }
    if (!out) {
        throw IoError("write to '" + path + "' failed");
    }
}

void write_text(const std::string& path, const std::string& content) {
    auto out = open_output(path);
    out << content;
    if (!out) {
        throw IoError("write to '" + path + "' failed");
    }
}

void ensure_directory(const std::string& path) {
    std::error_code ec;
    std::filesystem::create_directories(path, ec);
    if (ec || !std::filesystem::is_directory(path)) {
        throw IoError("cannot create output directory '" + path + "'");
    }
}

}  // namespace kronwave
