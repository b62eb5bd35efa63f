#include <doctest.h>

#include <cmath>
#include <random>

#include "gowers/functionals.hpp"
#include "oracles.hpp"

using namespace gowers;

namespace {

double rel_gap(double a, double b) {
    return std::abs(a - b) / std::max(1.0, std::abs(b));
}

}  // namespace

TEST_CASE("norms") {
    CHECK(l2_norm(DenseFunction::constant(3, 1.0)) == 1.0);
    CHECK(l4_fourth(DenseFunction::constant(3, 1.0)) == 1.0);
    CHECK(l2_norm(DenseFunction::delta(2, 0)) == 0.5);
    CHECK(l4_fourth(DenseFunction::delta(2, 0)) == 0.25);
    const auto ind = DenseFunction::indicator(2, std::vector<Point>{0b01, 0b10});
    CHECK(l2_norm(ind) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
    CHECK(l4_fourth(ind) == 0.5);
}

TEST_CASE("u2 on small fixed functions, all three routes") {
    const PairIndex p{1, 2};
    for (int n = 1; n <= 8; ++n) {
        CHECK(u2_fourth_naive(DenseFunction::constant(n, 1.0)) == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(u2_fourth_fast(DenseFunction::constant(n, 1.0)) == doctest::Approx(1.0).epsilon(1e-14));
    }
    CHECK(u2_fourth_by_cosets(DenseFunction::constant(2, 1.0), p) == 1.0);

    const auto delta = DenseFunction::delta(2, 0);
    CHECK(u2_fourth_naive(delta) == 1.0 / 64);
    CHECK(u2_fourth_fast(delta) == 1.0 / 64);
    CHECK(u2_fourth_by_cosets(delta, p) == 1.0 / 64);

    const auto ind = DenseFunction::indicator(2, std::vector<Point>{0b01, 0b10});
    CHECK(u2_fourth_naive(ind) == 0.125);
    CHECK(u2_fourth_fast(ind) == 0.125);
    CHECK(u2_fourth_by_cosets(ind, p) == 0.125);
}

TEST_CASE("coset brackets") {
    const PairIndex p{1, 2};
    const auto ind = DenseFunction::indicator(2, std::vector<Point>{0b01, 0b10});
    CHECK(coset_bracket(ind, p, 0, 0, 0) == 8.0);
    CHECK(coset_bracket(DenseFunction::delta(2, 0b11), p, 0, 0, 0) == 1.0);
    CHECK_THROWS_AS((void)coset_bracket(ind, p, 0b01, 0, 0), std::invalid_argument);
}

TEST_CASE("u2 routes agree on random functions") {
    std::mt19937_64 rng(17);
    for (int n = 2; n <= 6; ++n) {
        for (int t = 0; t < 10; ++t) {
            const auto f = (t % 2 == 0) ? oracle::random_dense(n, rng)
                                        : oracle::random_on_sphere(n, 1 + t % (n - 1), rng, t % 3 == 0);
            const double naive = u2_fourth_naive(f);
            CHECK(rel_gap(u2_fourth_fast(f), naive) <= 1e-10);
            for (const auto p : all_pairs(n)) CHECK(rel_gap(u2_fourth_by_cosets(f, p), naive) <= 1e-10);
        }
    }
    SUBCASE("S(4,2)") {
        const auto f = oracle::random_on_sphere(4, 2, rng, false);
        const double naive = u2_fourth_naive(f);
        for (const auto p : all_pairs(4)) CHECK(rel_gap(u2_fourth_by_cosets(f, p), naive) <= 1e-10);
    }
}

TEST_CASE("Cauchy-Schwarz bound u2^4 <= l2^4") {
    std::mt19937_64 rng(19);
    for (int n = 1; n <= 12; ++n) {
        for (int t = 0; t < 5; ++t) {
            const auto f = oracle::random_dense(n, rng, t % 2 == 0);
            CHECK(u2_fourth_fast(f) <= std::pow(l2_norm(f), 4) * (1 + 1e-12));
        }
    }
}

TEST_CASE("ratios are scale invariant") {
    std::mt19937_64 rng(23);
    for (int n = 2; n <= 10; ++n) {
        const auto f = oracle::random_dense(n, rng);
        for (const double c : {-3.0, 1e-3, 7.5e4}) {
            DenseFunction g = f;
            for (auto& v : g.values()) v *= c;
            CHECK(std::abs(u2_ratio(g) - u2_ratio(f)) <= 1e-12);
            CHECK(std::abs(l4_ratio(g) - l4_ratio(f)) <= 1e-12 * l4_ratio(f));
        }
    }
    CHECK_THROWS((void)u2_ratio(DenseFunction(3)));
}

TEST_CASE("additive energy of fixed sets") {
    const auto energy = [](int n, int k) {
        return additive_energy(sphere_points({n, k}), n).count;
    };
    REQUIRE(oracle::brute_force_energy(sphere_points({2, 1})) == 8);
    REQUIRE(oracle::brute_force_energy(sphere_points({3, 1})) == 21);
    REQUIRE(oracle::brute_force_energy(sphere_points({4, 1})) == 40);
    REQUIRE(oracle::brute_force_energy(sphere_points({4, 2})) == 168);
    CHECK(energy(2, 1) == 8);
    CHECK(energy(3, 1) == 21);
    CHECK(energy(4, 1) == 40);
    CHECK(energy(4, 2) == 168);
    const std::vector<Point> single{5};
    CHECK(additive_energy(single, 3).count == 1);
}

TEST_CASE("additive energy matches brute force on random sets") {
    std::mt19937_64 rng(29);
    for (int n = 1; n <= 9; ++n) {
        for (int t = 0; t < 4; ++t) {
            std::vector<Point> a;
            for (Point x = 0; x < table_size(n); ++x) {
                if (rng() % 3 == 0) a.push_back(x);
            }
            if (a.empty()) a.push_back(0);
            const auto e = additive_energy(a, n).count;
            CHECK(e == oracle::brute_force_energy(a));
            const auto s = static_cast<std::uint64_t>(a.size());
            CHECK(s * s <= e);
            CHECK(e <= s * s * s);
        }
    }
}

TEST_CASE("additive energy validation") {
    const std::vector<Point> dup{1, 1};
    CHECK_THROWS_AS((void)additive_energy(dup, 3), std::invalid_argument);
    const std::vector<Point> out{8};
    CHECK_THROWS_AS((void)additive_energy(out, 3), std::invalid_argument);
    const std::vector<Point> ok{0};
    CHECK_THROWS((void)additive_energy(ok, 21));
}

TEST_CASE("Krawtchouk values") {
    CHECK(krawtchouk(2, 1, 0) == 2);
    CHECK(krawtchouk(2, 1, 1) == 0);
    CHECK(krawtchouk(2, 1, 2) == -2);
    CHECK(energy_via_krawtchouk({2, 1}).count == 8);
    CHECK(energy_via_krawtchouk({4, 2}).count == 168);
    for (int n = 0; n <= 10; ++n) {
        for (int k = 0; k <= n; ++k) {
            for (int w = 0; w <= n; ++w) CHECK(krawtchouk(n, k, w) == oracle::krawtchouk_by_characters(n, k, w));
        }
    }
}

TEST_CASE("indicator bridge: N^3 u2^4(1_S) = E(S)") {
    for (int n = 0; n <= 14; ++n) {
        for (int k = 0; k <= n; ++k) {
            const auto pts = sphere_points({n, k});
            const auto f = DenseFunction::indicator(n, pts);
            const double n3 = std::ldexp(1.0, 3 * n);
            const double e = static_cast<double>(additive_energy(pts, n).count);
            CHECK(std::abs(u2_fourth_fast(f) * n3 - e) <= 1e-6);
        }
    }
}

TEST_CASE("mu_constant") {
    CHECK(mu_constant({2, 1}).exact == Rational{1, 2});
    CHECK(mu_constant({2, 1}).value == 0.5);
    CHECK(mu_constant({4, 2}).exact.str() == "7/24");
    CHECK(mu_constant({3, 1}).exact.str() == "7/24");
    for (int n = 0; n <= 20; ++n) {
        const auto m = mu_constant({n, 0});
        CHECK(m.exact == Rational{1, std::uint64_t{1} << n});
        CHECK(m.value == std::ldexp(1.0, -n));
    }
    CHECK(Rational::reduced(4, 4).str() == "1");
}

TEST_CASE("mu_constant is symmetric under k <-> n-k and lies in [1/N, 1]") {
    for (int n = 0; n <= 20; ++n) {
        for (int k = 0; k <= n; ++k) {
            const SphereSpec s{n, k};
            const SphereSpec c{n, n - k};
            CHECK(additive_energy(sphere_points(s), n) == additive_energy(sphere_points(c), n));
            const auto m = mu_constant(s);
            CHECK(m.exact == mu_constant(c).exact);
            CHECK(m.value >= std::ldexp(1.0, -n));
            CHECK(m.value <= 1.0);
        }
    }
}
