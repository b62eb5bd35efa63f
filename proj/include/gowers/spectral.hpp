#pragma once

#include <concepts>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "gowers/hypercube.hpp"

namespace gowers {

/// Real-valued table over all 2^n points of F_2^n.
class DenseFunction {
public:
    /// Zero function.
    explicit DenseFunction(int n);
    /// Throws on length != 2^n or non-finite entries.
    DenseFunction(int n, std::vector<double> values);

    static DenseFunction constant(int n, double c);
    static DenseFunction delta(int n, Point x, double value = 1.0);
    static DenseFunction indicator(int n, std::span<const Point> points);

    [[nodiscard]] int n() const noexcept { return n_; }
    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
    [[nodiscard]] std::span<const double> values() const noexcept { return values_; }
    [[nodiscard]] std::span<double> values() noexcept { return values_; }

    [[nodiscard]] double operator[](Point x) const { return values_[x]; }
    [[nodiscard]] double& operator[](Point x) { return values_[x]; }

    /// Points where the value is nonzero, increasing.
    [[nodiscard]] std::vector<Point> support() const;

    friend bool operator==(const DenseFunction&, const DenseFunction&) = default;

private:
    int n_;
    std::vector<double> values_;
};

enum class Normalization {
    /// coeffs(xi) = 2^-n * sum_x f(x) (-1)^<xi,x>
    expectation,
    /// coeffs(xi) = sum_x f(x) (-1)^<xi,x>
    counting,
};

/// Walsh-Hadamard coefficients of a function, tagged with their scaling.
class Spectrum {
public:
    Spectrum(int n, std::vector<double> coeffs, Normalization normalization);

    [[nodiscard]] int n() const noexcept { return n_; }
    [[nodiscard]] Normalization normalization() const noexcept { return normalization_; }
    [[nodiscard]] std::span<const double> coeffs() const noexcept { return coeffs_; }
    [[nodiscard]] double operator[](Point xi) const { return coeffs_[xi]; }

    /// The coefficient table viewed as a function of the character index.
    [[nodiscard]] DenseFunction as_function() const { return DenseFunction(n_, coeffs_); }

private:
    int n_;
    std::vector<double> coeffs_;
    Normalization normalization_;
};

[[nodiscard]] constexpr bool is_power_of_two(std::size_t len) noexcept {
    return len != 0 && (len & (len - 1)) == 0;
}

/// Unnormalized in-place Walsh-Hadamard butterfly: t(xi) <- sum_x t(x) (-1)^<xi,x>.
/// Applying it twice multiplies the table by its length.
template <typename T>
    requires std::integral<T> || std::floating_point<T>
void fwht_in_place(std::span<T> t) {
    const std::size_t len = t.size();
    if (!is_power_of_two(len)) {
        throw std::invalid_argument("fwht_in_place: length is not a power of two");
    }
    for (std::size_t half = 1; half < len; half <<= 1) {
        for (std::size_t block = 0; block < len; block += 2 * half) {
            T* lo = t.data() + block;
            T* hi = lo + half;
            for (std::size_t j = 0; j < half; ++j) {
                const T a = lo[j];
                const T b = hi[j];
                lo[j] = a + b;
                hi[j] = a - b;
            }
        }
    }
}

/// Expectation-normalized unless asked otherwise.
[[nodiscard]] Spectrum fourier_forward(const DenseFunction& f,
                                       Normalization normalization = Normalization::expectation);

/// f(x) = sum_xi coeffs(xi) (-1)^<xi,x>. Requires expectation normalization.
[[nodiscard]] DenseFunction fourier_inverse(const Spectrum& s);

/// Exact counting-measure transform of the indicator of a point set.
[[nodiscard]] std::vector<std::int64_t> indicator_transform(int n, std::span<const Point> points);

}  // namespace gowers
