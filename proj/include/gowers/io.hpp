#pragma once

// Text formats.
//
// Function file:            Set file:
//     n=4                       n=4
//     0011 0.5                  0011
//     0101 -1.25                0101
//
// Bitstrings are written most significant coordinate first, so the last
// character is the coefficient of e_1. Blank lines and lines starting with
// '#' are ignored. Omitted points of a function file are zero.

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "gowers/compression.hpp"
#include "gowers/hypercube.hpp"
#include "gowers/spectral.hpp"

namespace gowers::io {

class FormatError : public std::runtime_error {
public:
    FormatError(int line, const std::string& message);
    [[nodiscard]] int line() const noexcept { return line_; }

private:
    int line_;
};

[[nodiscard]] std::string format_point(Point x, int n);
/// Throws std::invalid_argument unless `bits` is exactly n characters of 0/1.
[[nodiscard]] Point parse_point(std::string_view bits, int n);

/// 17 significant digits, so parsing reproduces the double exactly.
[[nodiscard]] std::string format_real(double v);

/// Requires a header, valid distinct bitstrings, finite values, and at least
/// one nonzero value.
[[nodiscard]] DenseFunction read_function(std::istream& in);
[[nodiscard]] DenseFunction read_function_file(const std::string& path);
/// Writes the header and every nonzero entry in increasing point order.
void write_function(std::ostream& out, const DenseFunction& f);
[[nodiscard]] std::string format_function(const DenseFunction& f);

[[nodiscard]] PointSet read_set(std::istream& in);
[[nodiscard]] PointSet read_set_file(const std::string& path);
void write_set(std::ostream& out, const PointSet& set);

/// Columns: sweep,pair_i,pair_j,max_change,u2_fourth,l2
void write_trace_csv(std::ostream& out, const CompressionTrace& trace);

}  // namespace gowers::io
