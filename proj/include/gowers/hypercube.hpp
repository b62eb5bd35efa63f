#pragma once

// Bit-level combinatorics of F_2^n: points, Hamming weights, spheres,
// the (i,j) pair structure used by compressions, and sphere connectivity.

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace gowers {

/// A vector of F_2^n. Bit position i-1 holds the coefficient of e_i.
using Point = std::uint64_t;

inline constexpr int kMaxDim = 24;

class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Throws DimensionError unless 0 <= n <= kMaxDim. F_2^0 is the single point 0.
void check_dimension(int n);

[[nodiscard]] constexpr std::size_t table_size(int n) noexcept {
    return std::size_t{1} << n;
}

/// The Hamming sphere S(n,k).
struct SphereSpec {
    int n = 1;
    int k = 0;

    /// Throws DimensionError unless 0 <= k <= n <= kMaxDim.
    static SphereSpec make(int n, int k);

    friend bool operator==(const SphereSpec&, const SphereSpec&) = default;
};

/// A coordinate pair (i,j), 1-based, i < j.
struct PairIndex {
    int i = 1;
    int j = 2;

    static PairIndex make(int i, int j, int n);

    [[nodiscard]] constexpr Point mask() const noexcept {
        return (Point{1} << (i - 1)) | (Point{1} << (j - 1));
    }
    [[nodiscard]] constexpr Point bit_i() const noexcept { return Point{1} << (i - 1); }
    [[nodiscard]] constexpr Point bit_j() const noexcept { return Point{1} << (j - 1); }

    friend bool operator==(const PairIndex&, const PairIndex&) = default;
};

[[nodiscard]] constexpr int weight(Point x) noexcept {
    return std::popcount(x);
}

/// Parity of the standard inner product <v,w>.
[[nodiscard]] constexpr int inner_product(Point v, Point w) noexcept {
    return std::popcount(v & w) & 1;
}

/// Next mask with the same popcount (Gosper's hack). x must be nonzero.
[[nodiscard]] constexpr Point next_combination(Point x) noexcept {
    const Point lowest = x & (~x + 1);
    const Point ripple = x + lowest;
    return ripple | (((x ^ ripple) >> 2) / lowest);
}

/// Exact binomial coefficient; n <= 62 keeps every intermediate in range.
[[nodiscard]] std::uint64_t binomial(int n, int k);

/// All C(n,k) weight-k masks in increasing order.
[[nodiscard]] std::vector<Point> sphere_points(SphereSpec s);

enum class PairParity { equal, differ };

/// "equal" iff <x, e_i + e_j> = 0.
[[nodiscard]] constexpr PairParity pair_parity(Point x, PairIndex p) noexcept {
    return inner_product(x, p.mask()) == 0 ? PairParity::equal : PairParity::differ;
}

[[nodiscard]] constexpr Point flip_pair(Point x, PairIndex p) noexcept {
    return x ^ p.mask();
}

/// Canonical representative of x's coset of ker(pi_ij): bits i and j cleared.
[[nodiscard]] constexpr Point project_pair(Point x, PairIndex p) noexcept {
    return x & ~p.mask();
}

[[nodiscard]] constexpr bool is_canonical(Point b, PairIndex p) noexcept {
    return (b & p.mask()) == 0;
}

/// {b, b+e_i, b+e_j, b+e_i+e_j} for b = project_pair(x, p).
[[nodiscard]] constexpr std::array<Point, 4> coset(Point x, PairIndex p) noexcept {
    const Point b = project_pair(x, p);
    return {b, b | p.bit_i(), b | p.bit_j(), b | p.mask()};
}

/// Pairs (i,j), 1 <= i < j <= n, in lexicographic order.
[[nodiscard]] std::vector<PairIndex> all_pairs(int n);

/// A duplicate-free set of points of F_2^n, kept sorted.
class PointSet {
public:
    /// Throws on duplicates or points outside F_2^n.
    PointSet(int n, std::vector<Point> points);
    static PointSet sphere(SphereSpec s);
    static PointSet full(int n);

    [[nodiscard]] int n() const noexcept { return n_; }
    [[nodiscard]] const std::vector<Point>& points() const noexcept { return points_; }
    [[nodiscard]] std::size_t size() const noexcept { return points_.size(); }
    [[nodiscard]] bool empty() const noexcept { return points_.empty(); }
    [[nodiscard]] bool contains(Point x) const noexcept { return x < member_.size() && member_[x]; }

private:
    int n_;
    std::vector<Point> points_;
    std::vector<bool> member_;
};

/// Whether S(n,k) is connected under v ~ v + e_i + e_j (breadth-first search).
[[nodiscard]] bool sphere_connected(SphereSpec s);

}  // namespace gowers
