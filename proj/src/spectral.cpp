#include "gowers/spectral.hpp"

#include <cmath>
#include <string>

namespace gowers {

namespace {

void check_table(int n, std::size_t len) {
    check_dimension(n);
    if (len != table_size(n)) {
        throw std::invalid_argument("table length " + std::to_string(len) +
                                    " does not match 2^" + std::to_string(n));
    }
}

}  // namespace

DenseFunction::DenseFunction(int n) : n_(n) {
    check_dimension(n);
    values_.assign(table_size(n), 0.0);
}

DenseFunction::DenseFunction(int n, std::vector<double> values) : n_(n), values_(std::move(values)) {
    check_table(n, values_.size());
    for (const double v : values_) {
        if (!std::isfinite(v)) throw std::invalid_argument("DenseFunction: non-finite value");
    }
}

DenseFunction DenseFunction::constant(int n, double c) {
    return DenseFunction(n, std::vector<double>(table_size(n), c));
}

DenseFunction DenseFunction::delta(int n, Point x, double value) {
    DenseFunction f(n);
    if (x >= f.size()) throw std::invalid_argument("delta: point outside F_2^n");
    f[x] = value;
    return f;
}

DenseFunction DenseFunction::indicator(int n, std::span<const Point> points) {
    DenseFunction f(n);
    for (const Point x : points) {
        if (x >= f.size()) throw std::invalid_argument("indicator: point outside F_2^n");
        f[x] = 1.0;
    }
    return f;
}

std::vector<Point> DenseFunction::support() const {
    std::vector<Point> out;
    for (Point x = 0; x < values_.size(); ++x) {
        if (values_[x] != 0.0) out.push_back(x);
    }
    return out;
}

Spectrum::Spectrum(int n, std::vector<double> coeffs, Normalization normalization)
    : n_(n), coeffs_(std::move(coeffs)), normalization_(normalization) {
    check_table(n, coeffs_.size());
}

Spectrum fourier_forward(const DenseFunction& f, Normalization normalization) {
    std::vector<double> t(f.values().begin(), f.values().end());
    fwht_in_place(std::span<double>(t));
    if (normalization == Normalization::expectation) {
        const double scale = 1.0 / static_cast<double>(t.size());
        for (double& v : t) v *= scale;
    }
    return Spectrum(f.n(), std::move(t), normalization);
}

DenseFunction fourier_inverse(const Spectrum& s) {
    if (s.normalization() != Normalization::expectation) {
        throw std::invalid_argument("fourier_inverse: spectrum is not expectation-normalized");
    }
    std::vector<double> t(s.coeffs().begin(), s.coeffs().end());
    fwht_in_place(std::span<double>(t));
    return DenseFunction(s.n(), std::move(t));
}

std::vector<std::int64_t> indicator_transform(int n, std::span<const Point> points) {
    check_dimension(n);
    std::vector<std::int64_t> t(table_size(n), 0);
    for (const Point x : points) {
        if (x >= t.size()) throw std::invalid_argument("indicator_transform: point outside F_2^n");
        t[x] = 1;
    }
    fwht_in_place(std::span<std::int64_t>(t));
    return t;
}

}  // namespace gowers
