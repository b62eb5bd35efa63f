#include <doctest.h>

#include <cmath>
#include <random>

#include "gowers/spectral.hpp"
#include "oracles.hpp"

using namespace gowers;

TEST_CASE("fwht_in_place small tables") {
    std::vector<double> delta{1, 0, 0, 0};
    fwht_in_place(std::span<double>(delta));
    CHECK(delta == std::vector<double>{1, 1, 1, 1});

    std::vector<double> ones{1, 1, 1, 1};
    fwht_in_place(std::span<double>(ones));
    CHECK(ones == std::vector<double>{4, 0, 0, 0});

    std::vector<double> t{3, -1, 2, 0};
    fwht_in_place(std::span<double>(t));
    fwht_in_place(std::span<double>(t));
    CHECK(t == std::vector<double>{12, -4, 8, 0});

    std::vector<double> bad(6, 0.0);
    CHECK_THROWS_AS(fwht_in_place(std::span<double>(bad)), std::invalid_argument);
}

TEST_CASE("fourier_forward normalization") {
    const auto d = fourier_forward(DenseFunction::delta(2, 0));
    CHECK(d.normalization() == Normalization::expectation);
    for (const double c : d.coeffs()) CHECK(c == 0.25);

    const auto c = fourier_forward(DenseFunction::constant(2, 1.0));
    CHECK(std::vector<double>(c.coeffs().begin(), c.coeffs().end()) == std::vector<double>{1, 0, 0, 0});

    // Direct character sums for 1_{S(2,1)}: xi=00 -> 2/4, 01 and 10 -> 0, 11 -> -2/4.
    const auto ind = DenseFunction::indicator(2, std::vector<Point>{0b01, 0b10});
    const auto s = fourier_forward(ind);
    const std::vector<double> expected{0.5, 0.0, 0.0, -0.5};
    for (Point xi = 0; xi < 4; ++xi) {
        CHECK(s[xi] == expected[xi]);
        CHECK(oracle::character_sum(ind, xi) == expected[xi]);
    }

    const auto counting = fourier_forward(ind, Normalization::counting);
    CHECK(counting[3] == -2.0);
    CHECK_THROWS_AS((void)fourier_inverse(counting), std::invalid_argument);
}

TEST_CASE("fourier_forward matches direct character sums") {
    std::mt19937_64 rng(3);
    for (int n = 1; n <= 7; ++n) {
        const auto f = oracle::random_dense(n, rng);
        const auto s = fourier_forward(f);
        for (Point xi = 0; xi < f.size(); ++xi) {
            CHECK(s[xi] == doctest::Approx(oracle::character_sum(f, xi)).epsilon(1e-12));
        }
    }
}

TEST_CASE("fourier_inverse") {
    const auto one = fourier_inverse(Spectrum(2, {1, 0, 0, 0}, Normalization::expectation));
    CHECK(one == DenseFunction::constant(2, 1.0));

    const auto delta = fourier_inverse(Spectrum(2, {0.25, 0.25, 0.25, 0.25}, Normalization::expectation));
    CHECK(delta == DenseFunction::delta(2, 0));

    std::mt19937_64 rng(5);
    for (int n = 1; n <= 10; ++n) {
        const auto f = oracle::random_dense(n, rng);
        const auto back = fourier_inverse(fourier_forward(f));
        for (Point x = 0; x < f.size(); ++x) CHECK(std::abs(back[x] - f[x]) <= 1e-12);
    }
}

TEST_CASE("Parseval") {
    std::mt19937_64 rng(7);
    for (int n = 1; n <= 12; ++n) {
        const auto f = oracle::random_dense(n, rng);
        double lhs = 0.0;
        for (const double v : f.values()) lhs += v * v;
        lhs /= static_cast<double>(f.size());
        const auto s = fourier_forward(f);
        double rhs = 0.0;
        for (const double c : s.coeffs()) rhs += c * c;
        CHECK(std::abs(lhs - rhs) <= 1e-12 * lhs);
    }
}

TEST_CASE("convolution law against direct convolution") {
    std::mt19937_64 rng(9);
    for (int n = 1; n <= 8; ++n) {
        const auto f = oracle::random_dense(n, rng);
        const auto g = oracle::random_dense(n, rng);
        const auto conv = fourier_forward(oracle::convolve(f, g));
        const auto fh = fourier_forward(f);
        const auto gh = fourier_forward(g);
        for (Point xi = 0; xi < f.size(); ++xi) {
            CHECK(std::abs(conv[xi] - fh[xi] * gh[xi]) <= 1e-12);
        }
    }
}

TEST_CASE("0/1 inputs transform to exact integers") {
    std::mt19937_64 rng(13);
    const int n = 18;
    std::vector<Point> pts;
    for (Point x = 0; x < table_size(n); ++x) {
        if (rng() % 3 == 0) pts.push_back(x);
    }
    const auto exact = indicator_transform(n, pts);
    const auto f = DenseFunction::indicator(n, pts);
    const auto s = fourier_forward(f, Normalization::counting);
    for (Point xi = 0; xi < f.size(); ++xi) {
        REQUIRE(s[xi] == static_cast<double>(exact[xi]));
    }
    CHECK(exact[0] == static_cast<std::int64_t>(pts.size()));
}

TEST_CASE("DenseFunction validation") {
    CHECK_THROWS_AS(DenseFunction(2, std::vector<double>(3, 0.0)), std::invalid_argument);
    CHECK_THROWS_AS(DenseFunction(1, std::vector<double>{1.0, NAN}), std::invalid_argument);
    CHECK_THROWS_AS(DenseFunction(1, std::vector<double>{1.0, INFINITY}), std::invalid_argument);
    CHECK(DenseFunction::delta(3, 5).support() == std::vector<Point>{5});
}
