#include "gowers/random.hpp"

namespace gowers {

DenseFunction random_gaussian_on(int n, std::span<const Point> points, Rng& rng) {
    std::normal_distribution<double> dist(0.0, 1.0);
    DenseFunction f(n);
    for (const Point x : points) f[x] = dist(rng);
    return f;
}

DenseFunction random_uniform_on(int n, std::span<const Point> points, Rng& rng) {
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    DenseFunction f(n);
    for (const Point x : points) f[x] = dist(rng);
    return f;
}

}  // namespace gowers
