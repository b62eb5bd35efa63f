#pragma once

#include <cstdint>
#include <random>
#include <span>

#include "gowers/hypercube.hpp"
#include "gowers/spectral.hpp"

namespace gowers {

/// splitmix64 finalizer; used to derive independent stream seeds.
[[nodiscard]] constexpr std::uint64_t mix_seed(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Seed for stream `index` under a base seed.
[[nodiscard]] constexpr std::uint64_t stream_seed(std::uint64_t base, std::uint64_t index) noexcept {
    return mix_seed(mix_seed(base) ^ mix_seed(index + 0x632be59bd9b4e019ULL));
}

using Rng = std::mt19937_64;

/// Independent N(0,1) values on `points`, zero elsewhere.
[[nodiscard]] DenseFunction random_gaussian_on(int n, std::span<const Point> points, Rng& rng);

/// Independent U[0,1) values on `points`, zero elsewhere.
[[nodiscard]] DenseFunction random_uniform_on(int n, std::span<const Point> points, Rng& rng);

}  // namespace gowers
