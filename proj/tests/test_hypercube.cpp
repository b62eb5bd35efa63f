#include <doctest.h>

#include <algorithm>
#include <random>

#include "gowers/hypercube.hpp"
#include "oracles.hpp"

using namespace gowers;

TEST_CASE("weight is popcount") {
    CHECK(weight(0b0000) == 0);
    CHECK(weight(0b1011) == 3);
    CHECK(weight(0b1111) == 4);
}

TEST_CASE("sphere_points enumerates in increasing order") {
    CHECK(sphere_points({3, 2}) == std::vector<Point>{0b011, 0b101, 0b110});
    CHECK(sphere_points({3, 0}) == std::vector<Point>{0b000});
    CHECK(sphere_points({4, 1}) == std::vector<Point>{0b0001, 0b0010, 0b0100, 0b1000});
    CHECK(sphere_points({5, 5}) == std::vector<Point>{0b11111});
    CHECK(sphere_points({0, 0}) == std::vector<Point>{0});
}

TEST_CASE("sphere_points has C(n,k) strictly increasing weight-k entries") {
    for (int n = 0; n <= 14; ++n) {
        for (int k = 0; k <= n; ++k) {
            const auto pts = sphere_points({n, k});
            REQUIRE(pts.size() == binomial(n, k));
            CHECK(std::adjacent_find(pts.begin(), pts.end(), std::greater_equal<>()) == pts.end());
            CHECK(std::all_of(pts.begin(), pts.end(), [&](Point x) { return weight(x) == k; }));
            CHECK(pts.back() < table_size(n));
        }
    }
}

TEST_CASE("binomial") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(20, 10) == 184756);
    CHECK(binomial(24, 12) == 2704156);
    CHECK(binomial(5, 7) == 0);
}

TEST_CASE("pair parity, flip and projection") {
    const PairIndex p{1, 2};
    CHECK(pair_parity(0b01, p) == PairParity::differ);
    CHECK(pair_parity(0b11, p) == PairParity::equal);
    CHECK(pair_parity(0b00, p) == PairParity::equal);

    CHECK(flip_pair(0b01, p) == 0b10);
    CHECK(flip_pair(0b11, p) == 0b00);

    CHECK(project_pair(0b111, p) == 0b100);
    CHECK(project_pair(0b100, p) == 0b100);

    const auto c = coset(0b01, p);
    CHECK(std::vector<Point>(c.begin(), c.end()) == std::vector<Point>{0b00, 0b01, 0b10, 0b11});
}

TEST_CASE("pair operations on random points") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 2000; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 23);
        const int i = 1 + static_cast<int>(rng() % n);
        int j = 1 + static_cast<int>(rng() % n);
        if (i == j) continue;
        const PairIndex p = PairIndex::make(std::min(i, j), std::max(i, j), n);
        const Point x = rng() & (table_size(n) - 1);

        CHECK(flip_pair(flip_pair(x, p), p) == x);
        const bool differ = pair_parity(x, p) == PairParity::differ;
        CHECK((weight(flip_pair(x, p)) == weight(x)) == differ);
        if (differ) {
            const Point lifted = project_pair(x, p) | p.bit_i();
            CHECK((lifted == x || lifted == flip_pair(x, p)));
        }
        const auto c = coset(x, p);
        CHECK(std::find(c.begin(), c.end(), x) != c.end());
    }
}

TEST_CASE("validation") {
    CHECK_THROWS_AS(SphereSpec::make(25, 1), DimensionError);
    CHECK_THROWS_AS(SphereSpec::make(-1, 0), DimensionError);
    CHECK_THROWS_AS(SphereSpec::make(4, 5), DimensionError);
    CHECK_THROWS_AS(PairIndex::make(2, 2, 4), DimensionError);
    CHECK_THROWS_AS(PairIndex::make(3, 5, 4), DimensionError);
    CHECK_THROWS_AS(PointSet(3, {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(PointSet(3, {8}), std::invalid_argument);
}

TEST_CASE("all_pairs is lexicographic") {
    const auto pairs = all_pairs(4);
    REQUIRE(pairs.size() == 6);
    CHECK(pairs.front() == PairIndex{1, 2});
    CHECK(pairs[2] == PairIndex{1, 4});
    CHECK(pairs.back() == PairIndex{3, 4});
}

TEST_CASE("sphere connectivity") {
    CHECK(sphere_connected({3, 1}));
    CHECK(sphere_connected({7, 0}));
    CHECK(sphere_connected({0, 0}));

    REQUIRE(oracle::sphere_components(12, 6) == 1);
    CHECK(sphere_connected({12, 6}));

    for (int n = 1; n <= 14; ++n) {
        for (int k = 0; k <= n; ++k) CHECK(sphere_connected({n, k}));
    }
}
