#pragma once

// Multi-start projected gradient ascent of u2^4 over unit-l2 functions
// supported on a given point set. Independent of the compression route.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "gowers/hypercube.hpp"
#include "gowers/spectral.hpp"

namespace gowers {

inline constexpr int kOptimizeMaxDim = 20;

/// Raised by project() when f vanishes on the support.
class ZeroRestrictionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct OptimizerConfig {
    int starts = 32;
    /// Initial step of each line search, in units of the current objective
    /// (see maximize_ratio).
    double step = 0.5;
    /// Stop once the norm of the projected gradient falls below this.
    double tol = 1e-10;
    int max_iters = 50000;
    std::uint64_t seed = 0;

    /// Throws std::invalid_argument unless starts >= 1, step > 0, tol > 0, max_iters >= 1.
    void validate() const;
};

struct StartTrace {
    int iterations = 0;
    double final_gradient_norm = 0.0;
    double ratio = 0.0;
    bool converged = false;
    int restarts = 0;
};

struct OptimizerResult {
    double best_ratio = 0.0;
    int best_start = 0;
    /// Unit l2, zero outside the support.
    DenseFunction argmax;
    std::vector<StartTrace> starts;
};

/// Coordinate gradient of u2^4: g(x) = (4/N^3) sum_{a2,a3} f(a2) f(a3) f(x+a2+a3),
/// evaluated as (4/N) times the inverse transform of fhat^3.
[[nodiscard]] DenseFunction u2_gradient(const DenseFunction& f);

/// Zero f outside A, then rescale to unit l2. Throws ZeroRestrictionError if
/// nothing survives.
[[nodiscard]] DenseFunction project(const DenseFunction& f, const PointSet& support);

/// Maximizes u2^4(f) / l2(f)^4 over f supported on `support`.
///
/// Each start draws a Gaussian vector on the support from its own seeded
/// stream and normalizes it. An iteration moves along the gradient measured
/// in the expectation inner product and divided by 4 u2^4(f), i.e. the
/// gradient of log u2^4, so `step` is dimensionless:
///     f <- project(f + step * N g(f) / (4 u2^4(f)), A).
/// Each line search starts from cfg.step and halves until u2^4 does not drop.
/// A start stops when the Riemannian gradient N g - <N g, f> f restricted
/// to A has expectation norm below cfg.tol, or after cfg.max_iters.
[[nodiscard]] OptimizerResult maximize_ratio(const PointSet& support, const OptimizerConfig& cfg);

}  // namespace gowers
