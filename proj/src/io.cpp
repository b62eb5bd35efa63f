#include "gowers/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

namespace gowers::io {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

/// Yields trimmed content lines with their 1-based line numbers.
class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    std::optional<std::string_view> next() {
        while (std::getline(in_, buffer_)) {
            ++line_;
            const auto t = trim(buffer_);
            if (t.empty() || t.front() == '#') continue;
            return t;
        }
        return std::nullopt;
    }
    [[nodiscard]] int line() const noexcept { return line_; }

private:
    std::istream& in_;
    std::string buffer_;
    int line_ = 0;
};

int read_header(LineReader& reader) {
    const auto header = reader.next();
    if (!header) throw FormatError(std::max(1, reader.line()), "missing header \"n=<int>\"");
    if (header->substr(0, 2) != "n=") throw FormatError(reader.line(), "expected header \"n=<int>\"");
    const auto digits = header->substr(2);
    int n = -1;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
        throw FormatError(reader.line(), "malformed dimension in header");
    }
    if (n < 1 || n > kMaxDim) {
        throw FormatError(reader.line(), "dimension must be in [1, " + std::to_string(kMaxDim) + "]");
    }
    return n;
}

Point parse_point_at(std::string_view bits, int n, int line) {
    try {
        return parse_point(bits, n);
    } catch (const std::invalid_argument& e) {
        throw FormatError(line, e.what());
    }
}

std::ifstream open(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return in;
}

}  // namespace

FormatError::FormatError(int line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

std::string format_point(Point x, int n) {
    std::string s(static_cast<std::size_t>(n), '0');
    for (int b = 0; b < n; ++b) {
        if ((x >> b) & 1) s[static_cast<std::size_t>(n - 1 - b)] = '1';
    }
    return s;
}

Point parse_point(std::string_view bits, int n) {
    if (bits.size() != static_cast<std::size_t>(n)) {
        throw std::invalid_argument("bitstring \"" + std::string(bits) + "\" does not have length " +
                                    std::to_string(n));
    }
    Point x = 0;
    for (const char c : bits) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("bitstring \"" + std::string(bits) + "\" contains a non-binary digit");
        }
        x = (x << 1) | static_cast<Point>(c - '0');
    }
    return x;
}

std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

DenseFunction read_function(std::istream& in) {
    LineReader reader(in);
    const int n = read_header(reader);
    DenseFunction f(n);
    std::vector<bool> seen(f.size(), false);
    bool any_nonzero = false;
    while (const auto line = reader.next()) {
        const auto split = line->find_first_of(" \t");
        if (split == std::string_view::npos) throw FormatError(reader.line(), "expected \"<bits> <value>\"");
        const Point x = parse_point_at(line->substr(0, split), n, reader.line());
        const auto text = trim(line->substr(split));
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
        if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(v)) {
            throw FormatError(reader.line(), "malformed value \"" + std::string(text) + "\"");
        }
        if (seen[x]) throw FormatError(reader.line(), "duplicate point " + format_point(x, n));
        seen[x] = true;
        f[x] = v;
        any_nonzero = any_nonzero || v != 0.0;
    }
    if (!any_nonzero) throw FormatError(reader.line(), "function has no nonzero value");
    return f;
}

DenseFunction read_function_file(const std::string& path) {
    auto in = open(path);
    return read_function(in);
}

void write_function(std::ostream& out, const DenseFunction& f) {
    out << "n=" << f.n() << '\n';
    for (Point x = 0; x < f.size(); ++x) {
        if (f[x] != 0.0) out << format_point(x, f.n()) << ' ' << format_real(f[x]) << '\n';
    }
}

std::string format_function(const DenseFunction& f) {
    std::ostringstream out;
    write_function(out, f);
    return out.str();
}

PointSet read_set(std::istream& in) {
    LineReader reader(in);
    const int n = read_header(reader);
    std::vector<Point> points;
    std::vector<bool> seen(table_size(n), false);
    while (const auto line = reader.next()) {
        const Point x = parse_point_at(*line, n, reader.line());
        if (seen[x]) throw FormatError(reader.line(), "duplicate point " + format_point(x, n));
        seen[x] = true;
        points.push_back(x);
    }
    return PointSet(n, std::move(points));
}

PointSet read_set_file(const std::string& path) {
    auto in = open(path);
    return read_set(in);
}

void write_set(std::ostream& out, const PointSet& set) {
    out << "n=" << set.n() << '\n';
    for (const Point x : set.points()) out << format_point(x, set.n()) << '\n';
}

void write_trace_csv(std::ostream& out, const CompressionTrace& trace) {
    out << "sweep,pair_i,pair_j,max_change,u2_fourth,l2\n";
    for (const auto& r : trace.records) {
        out << r.sweep << ',' << r.pair.i << ',' << r.pair.j << ',' << format_real(r.max_change) << ','
            << format_real(r.u2_fourth) << ',' << format_real(r.l2) << '\n';
    }
}

}  // namespace gowers::io
