#include "gowers/functionals.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

namespace gowers {

namespace {

__extension__ using i128 = __int128;
__extension__ using u128 = unsigned __int128;

constexpr u128 kU64Max = std::numeric_limits<std::uint64_t>::max();

void require_naive_dim(int n, const char* who) {
    if (n > kNaiveMaxDim) {
        throw DimensionError(std::string(who) + ": n=" + std::to_string(n) + " exceeds " +
                             std::to_string(kNaiveMaxDim) + " for the O(N^3) route");
    }
}

void require_exact_dim(int n, const char* who) {
    check_dimension(n);
    if (n > kExactEnergyMaxDim) {
        throw DimensionError(std::string(who) + ": n=" + std::to_string(n) + " exceeds " +
                             std::to_string(kExactEnergyMaxDim) + " for exact energy");
    }
}

// Fourth power and sum stay below 2^127 for |x| <= 2^24 and at most 2^24 terms:
// 2^96 * 2^24 = 2^120.
i128 fourth(std::int64_t x) {
    const i128 sq = static_cast<i128>(x) * x;
    return sq * sq;
}

// f / max|f|; ratios of functions with a single absolute value come out exact.
DenseFunction scaled_to_unit_max(const DenseFunction& f, const char* who) {
    double m = 0.0;
    for (const double v : f.values()) m = std::max(m, std::abs(v));
    if (m == 0.0) throw std::invalid_argument(std::string(who) + ": zero function");
    DenseFunction g = f;
    for (auto& v : g.values()) v /= m;
    return g;
}

double mean_square(const DenseFunction& f) {
    double s = 0.0;
    for (const double v : f.values()) s += v * v;
    return s / static_cast<double>(f.size());
}

EnergyValue to_energy(i128 total, int n) {
    const i128 N = i128{1} << n;
    if (total < 0 || total % N != 0) {
        throw std::logic_error("energy sum not divisible by 2^n");
    }
    const i128 e = total / N;
    if (static_cast<u128>(e) > kU64Max) throw OverflowError("additive energy exceeds 64 bits");
    return EnergyValue{static_cast<std::uint64_t>(e)};
}

}  // namespace

Rational Rational::reduced(std::uint64_t num, std::uint64_t den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    const std::uint64_t g = std::gcd(num, den);
    if (g == 0) return Rational{0, 1};
    return Rational{num / g, den / g};
}

double Rational::to_double() const noexcept {
    return static_cast<double>(static_cast<long double>(num) / static_cast<long double>(den));
}

std::string Rational::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

double l2_norm(const DenseFunction& f) {
    double s = 0.0;
    for (const double v : f.values()) s += v * v;
    return std::sqrt(s / static_cast<double>(f.size()));
}

double l4_fourth(const DenseFunction& f) {
    double s = 0.0;
    for (const double v : f.values()) {
        const double sq = v * v;
        s += sq * sq;
    }
    return s / static_cast<double>(f.size());
}

double u2_fourth_naive(const DenseFunction& f) {
    require_naive_dim(f.n(), "u2_fourth_naive");
    const auto supp = f.support();
    double total = 0.0;
    for (const Point a1 : supp) {
        for (const Point a2 : supp) {
            const double f12 = f[a1] * f[a2];
            const Point s12 = a1 ^ a2;
            double inner = 0.0;
            for (const Point a3 : supp) inner += f[a3] * f[s12 ^ a3];
            total += f12 * inner;
        }
    }
    const double N = static_cast<double>(f.size());
    return total / (N * N * N);
}

double u2_fourth_from_spectrum(const Spectrum& s) {
    if (s.normalization() != Normalization::expectation) {
        throw std::invalid_argument("u2_fourth_from_spectrum: expectation normalization required");
    }
    double total = 0.0;
    for (const double c : s.coeffs()) {
        const double sq = c * c;
        total += sq * sq;
    }
    return total;
}

double u2_fourth_fast(const DenseFunction& f) {
    return u2_fourth_from_spectrum(fourier_forward(f));
}

double coset_bracket(const DenseFunction& f, PairIndex p, Point b1, Point b2, Point b3) {
    const Point b4 = b1 ^ b2 ^ b3;
    if (!is_canonical(b1, p) || !is_canonical(b2, p) || !is_canonical(b3, p)) {
        throw std::invalid_argument("coset_bracket: representatives must have bits i,j clear");
    }
    if (b1 >= f.size() || b2 >= f.size() || b3 >= f.size()) {
        throw std::invalid_argument("coset_bracket: representative outside F_2^n");
    }
    const std::array<Point, 4> offsets{0, p.bit_i(), p.bit_j(), p.mask()};
    double total = 0.0;
    for (const Point u1 : offsets) {
        const double v1 = f[b1 | u1];
        if (v1 == 0.0) continue;
        for (const Point u2 : offsets) {
            const double v12 = v1 * f[b2 | u2];
            if (v12 == 0.0) continue;
            for (const Point u3 : offsets) {
                // a4 = a1+a2+a3 lands in coset(b4) automatically.
                total += v12 * f[b3 | u3] * f[b4 | (u1 ^ u2 ^ u3)];
            }
        }
    }
    return total;
}

double u2_fourth_by_cosets(const DenseFunction& f, PairIndex p) {
    require_naive_dim(f.n(), "u2_fourth_by_cosets");
    if (f.n() < 2) throw DimensionError("u2_fourth_by_cosets: n must be at least 2");
    p = PairIndex::make(p.i, p.j, f.n());

    std::vector<Point> reps;
    for (Point b = 0; b < f.size(); ++b) {
        if (is_canonical(b, p)) reps.push_back(b);
    }
    double total = 0.0;
    for (const Point b1 : reps) {
        for (const Point b2 : reps) {
            for (const Point b3 : reps) total += coset_bracket(f, p, b1, b2, b3);
        }
    }
    const double R = static_cast<double>(reps.size());
    return total / (R * R * R) / 64.0;
}

double u2_ratio(const DenseFunction& f) {
    const auto g = scaled_to_unit_max(f, "u2_ratio");
    const double sq = mean_square(g);
    return u2_fourth_fast(g) / (sq * sq);
}

double l4_ratio(const DenseFunction& f) {
    const auto g = scaled_to_unit_max(f, "l4_ratio");
    const double sq = mean_square(g);
    return l4_fourth(g) / (sq * sq);
}

EnergyValue additive_energy(std::span<const Point> points, int n) {
    require_exact_dim(n, "additive_energy");
    std::vector<bool> seen(table_size(n), false);
    for (const Point x : points) {
        if (x >= table_size(n)) throw std::invalid_argument("additive_energy: point outside F_2^n");
        if (seen[x]) throw std::invalid_argument("additive_energy: duplicate point");
        seen[x] = true;
    }
    const auto t = indicator_transform(n, points);
    i128 total = 0;
    for (const std::int64_t c : t) total += fourth(c);
    return to_energy(total, n);
}

std::int64_t krawtchouk(int n, int k, int w) {
    if (n < 0 || n > 62 || k < 0 || k > n || w < 0 || w > n) {
        throw std::invalid_argument("krawtchouk: requires 0 <= k, w <= n <= 62");
    }
    i128 total = 0;
    for (int j = 0; j <= std::min(w, k); ++j) {
        const i128 term = static_cast<i128>(binomial(w, j)) * binomial(n - w, k - j);
        total += (j % 2 == 0) ? term : -term;
    }
    if (total > std::numeric_limits<std::int64_t>::max() ||
        total < std::numeric_limits<std::int64_t>::min()) {
        throw OverflowError("krawtchouk value exceeds 64 bits");
    }
    return static_cast<std::int64_t>(total);
}

EnergyValue energy_via_krawtchouk(SphereSpec s) {
    s = SphereSpec::make(s.n, s.k);
    require_exact_dim(s.n, "energy_via_krawtchouk");
    i128 total = 0;
    for (int w = 0; w <= s.n; ++w) {
        total += static_cast<i128>(binomial(s.n, w)) * fourth(krawtchouk(s.n, s.k, w));
    }
    return to_energy(total, s.n);
}

MuValue mu_constant(SphereSpec s) {
    s = SphereSpec::make(s.n, s.k);
    const auto points = sphere_points(s);
    const EnergyValue e = additive_energy(points, s.n);
    const u128 size = points.size();
    const u128 den = (u128{1} << s.n) * size * size;
    if (den > kU64Max) throw OverflowError("mu_constant: denominator exceeds 64 bits");
    const Rational exact = Rational::reduced(e.count, static_cast<std::uint64_t>(den));
    return MuValue{exact, exact.to_double()};
}

}  // namespace gowers
