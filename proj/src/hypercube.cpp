#include "gowers/hypercube.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace gowers {

void check_dimension(int n) {
    if (n < 0 || n > kMaxDim) {
        throw DimensionError("dimension n=" + std::to_string(n) + " outside [0, " +
                             std::to_string(kMaxDim) + "]");
    }
}

SphereSpec SphereSpec::make(int n, int k) {
    check_dimension(n);
    if (k < 0 || k > n) {
        throw DimensionError("sphere weight k=" + std::to_string(k) + " outside [0, " +
                             std::to_string(n) + "]");
    }
    return SphereSpec{n, k};
}

PairIndex PairIndex::make(int i, int j, int n) {
    check_dimension(n);
    if (!(1 <= i && i < j && j <= n)) {
        throw DimensionError("pair (" + std::to_string(i) + "," + std::to_string(j) +
                             ") invalid for n=" + std::to_string(n));
    }
    return PairIndex{i, j};
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    // r * (n - k + t) / t is exact at every step: it is C(n-k+t, t).
    for (int t = 1; t <= k; ++t) {
        r = r * static_cast<std::uint64_t>(n - k + t) / static_cast<std::uint64_t>(t);
    }
    return r;
}

std::vector<Point> sphere_points(SphereSpec s) {
    s = SphereSpec::make(s.n, s.k);
    std::vector<Point> out;
    out.reserve(binomial(s.n, s.k));
    if (s.k == 0) {
        out.push_back(0);
        return out;
    }
    const Point limit = Point{1} << s.n;
    for (Point x = (Point{1} << s.k) - 1; x < limit; x = next_combination(x)) {
        out.push_back(x);
    }
    return out;
}

std::vector<PairIndex> all_pairs(int n) {
    std::vector<PairIndex> out;
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) out.push_back(PairIndex{i, j});
    }
    return out;
}

PointSet::PointSet(int n, std::vector<Point> points) : n_(n), points_(std::move(points)) {
    check_dimension(n);
    member_.assign(table_size(n), false);
    for (const Point x : points_) {
        if (x >= table_size(n)) {
            throw std::invalid_argument("point " + std::to_string(x) + " outside F_2^" + std::to_string(n));
        }
        if (member_[x]) throw std::invalid_argument("duplicate point " + std::to_string(x));
        member_[x] = true;
    }
    std::sort(points_.begin(), points_.end());
}

PointSet PointSet::sphere(SphereSpec s) {
    return PointSet(s.n, sphere_points(s));
}

PointSet PointSet::full(int n) {
    check_dimension(n);
    std::vector<Point> all(table_size(n));
    for (Point x = 0; x < all.size(); ++x) all[x] = x;
    return PointSet(n, std::move(all));
}

bool sphere_connected(SphereSpec s) {
    const auto points = sphere_points(s);
    std::vector<bool> seen(table_size(s.n), false);
    std::deque<Point> queue{points.front()};
    seen[points.front()] = true;
    std::size_t reached = 1;
    const auto pairs = all_pairs(s.n);
    while (!queue.empty()) {
        const Point v = queue.front();
        queue.pop_front();
        for (const auto p : pairs) {
            if (pair_parity(v, p) != PairParity::differ) continue;
            const Point w = flip_pair(v, p);
            if (!seen[w]) {
                seen[w] = true;
                ++reached;
                queue.push_back(w);
            }
        }
    }
    return reached == points.size();
}

}  // namespace gowers
