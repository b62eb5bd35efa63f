#pragma once

// Scalar functionals on F_2^n: norms, the Gowers u2 norm (three evaluation
// routes kept as mutual oracles), exact additive energy, and the value of
// mu(S(n,k)) attained by the constant function.

#include <cstdint>
#include <span>
#include <string>

#include "gowers/hypercube.hpp"
#include "gowers/spectral.hpp"

namespace gowers {

/// Largest n accepted by the O(N^3) routes.
inline constexpr int kNaiveMaxDim = 8;
/// Largest n accepted by the exact energy routes.
inline constexpr int kExactEnergyMaxDim = 20;

class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

/// Number of quadruples (a1,a2,a3,a4) in A^4 with a1 + a2 = a3 + a4.
struct EnergyValue {
    std::uint64_t count = 0;
    friend bool operator==(const EnergyValue&, const EnergyValue&) = default;
};

/// Non-negative reduced fraction.
struct Rational {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    static Rational reduced(std::uint64_t num, std::uint64_t den);
    [[nodiscard]] double to_double() const noexcept;
    [[nodiscard]] std::string str() const;

    friend bool operator==(const Rational&, const Rational&) = default;
};

struct MuValue {
    Rational exact;
    double value = 0.0;
};

/// (E_x f^2)^{1/2}
[[nodiscard]] double l2_norm(const DenseFunction& f);
/// E_x f^4
[[nodiscard]] double l4_fourth(const DenseFunction& f);

/// Direct sum over (a1,a2,a3) with a4 = a1+a2+a3, divided by N^3.
/// Zero entries are skipped, so the cost is |supp f|^3. Requires n <= 8.
[[nodiscard]] double u2_fourth_naive(const DenseFunction& f);

/// sum_xi fhat(xi)^4 with fhat expectation-normalized.
[[nodiscard]] double u2_fourth_fast(const DenseFunction& f);
/// Same quantity from a precomputed expectation-normalized spectrum.
[[nodiscard]] double u2_fourth_from_spectrum(const Spectrum& s);

/// Sum of f(a1)f(a2)f(a3)f(a4) over a_t in coset(b_t) with a1+a2 = a3+a4,
/// where b4 = b1+b2+b3. The representatives must have bits i and j clear.
[[nodiscard]] double coset_bracket(const DenseFunction& f, PairIndex p, Point b1, Point b2, Point b3);

/// u2^4 rewritten as (1/4^3) times the average bracket over representative
/// triples. Requires 2 <= n <= 8.
[[nodiscard]] double u2_fourth_by_cosets(const DenseFunction& f, PairIndex p);

/// u2^4 / l2^4 (spectral route). Throws on the zero function.
[[nodiscard]] double u2_ratio(const DenseFunction& f);
/// l4^4 / l2^4. Throws on the zero function.
[[nodiscard]] double l4_ratio(const DenseFunction& f);

/// Exact E(A) via (1/N) sum_xi A^(xi)^4 on the integer indicator transform.
/// A must be duplicate-free with points in F_2^n, n <= 20.
[[nodiscard]] EnergyValue additive_energy(std::span<const Point> points, int n);

/// K_k(w) = sum_j (-1)^j C(w,j) C(n-w,k-j).
[[nodiscard]] std::int64_t krawtchouk(int n, int k, int w);

/// (1/2^n) sum_w C(n,w) K_k(w)^4.
[[nodiscard]] EnergyValue energy_via_krawtchouk(SphereSpec s);

/// E(S) / (2^n |S|^2), exact.
[[nodiscard]] MuValue mu_constant(SphereSpec s);

}  // namespace gowers
