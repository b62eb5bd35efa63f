#include "gowers/optimize.hpp"

#include <cmath>
#include <limits>
#include <optional>

#include "gowers/functionals.hpp"
#include "gowers/random.hpp"

namespace gowers {

namespace {

constexpr int kMaxRedraws = 64;
constexpr double kMinStep = 1e-30;
// Near a maximizer u2^4 is flat to second order, so comparisons below a few
// ulps are noise; rejecting such moves would freeze the iterate at sqrt(eps).
constexpr double kValueSlack = 16 * std::numeric_limits<double>::epsilon();

std::vector<double> gradient_from_spectrum(const Spectrum& s) {
    std::vector<double> h(s.coeffs().begin(), s.coeffs().end());
    for (double& c : h) c = c * c * c;
    fwht_in_place(std::span<double>(h));
    const double scale = 4.0 / static_cast<double>(h.size());
    for (double& v : h) v *= scale;
    return h;
}

double mean_square(std::span<const double> v) {
    double s = 0.0;
    for (const double x : v) s += x * x;
    return s / static_cast<double>(v.size());
}

struct Iterate {
    DenseFunction f;
    Spectrum spectrum;
    double value;

    explicit Iterate(DenseFunction g)
        : f(std::move(g)), spectrum(fourier_forward(f)), value(u2_fourth_from_spectrum(spectrum)) {}
};

}  // namespace

void OptimizerConfig::validate() const {
    if (starts < 1) throw std::invalid_argument("OptimizerConfig: starts must be >= 1");
    if (!(step > 0.0)) throw std::invalid_argument("OptimizerConfig: step must be > 0");
    if (!(tol > 0.0)) throw std::invalid_argument("OptimizerConfig: tol must be > 0");
    if (max_iters < 1) throw std::invalid_argument("OptimizerConfig: max_iters must be >= 1");
}

DenseFunction u2_gradient(const DenseFunction& f) {
    return DenseFunction(f.n(), gradient_from_spectrum(fourier_forward(f)));
}

DenseFunction project(const DenseFunction& f, const PointSet& support) {
    if (support.n() != f.n()) throw std::invalid_argument("project: dimension mismatch");
    if (support.empty()) throw std::invalid_argument("project: empty support");
    DenseFunction out(f.n());
    for (const Point x : support.points()) out[x] = f[x];
    const double norm = std::sqrt(mean_square(out.values()));
    if (norm == 0.0) throw ZeroRestrictionError("project: function vanishes on the support");
    for (const Point x : support.points()) out[x] /= norm;
    return out;
}

OptimizerResult maximize_ratio(const PointSet& support, const OptimizerConfig& cfg) {
    cfg.validate();
    if (support.empty()) throw std::invalid_argument("maximize_ratio: empty support");
    const int n = support.n();
    if (n > kOptimizeMaxDim) {
        throw DimensionError("maximize_ratio: n=" + std::to_string(n) + " exceeds " +
                             std::to_string(kOptimizeMaxDim));
    }
    const double N = static_cast<double>(table_size(n));

    OptimizerResult result{-1.0, 0, DenseFunction(n), {}};
    for (int s = 0; s < cfg.starts; ++s) {
        Rng rng(stream_seed(cfg.seed, static_cast<std::uint64_t>(s)));
        StartTrace trace;

        std::optional<Iterate> cur;
        while (!cur) {
            try {
                cur.emplace(project(random_gaussian_on(n, support.points(), rng), support));
            } catch (const ZeroRestrictionError&) {
                if (++trace.restarts > kMaxRedraws) throw;
            }
        }

        for (; trace.iterations < cfg.max_iters; ++trace.iterations) {
            // Gradient in the expectation inner product, restricted to A.
            const auto g = gradient_from_spectrum(cur->spectrum);
            DenseFunction direction(n);
            double radial = 0.0;
            for (const Point x : support.points()) {
                direction[x] = N * g[x];
                radial += direction[x] * cur->f[x];
            }
            radial /= N;
            double tangential = 0.0;
            for (const Point x : support.points()) {
                const double r = direction[x] - radial * cur->f[x];
                tangential += r * r;
            }
            trace.final_gradient_norm = std::sqrt(tangential / N);
            if (trace.final_gradient_norm < cfg.tol) {
                trace.converged = true;
                break;
            }

            const double scale = 1.0 / (4.0 * cur->value);
            bool accepted = false;
            for (double step = cfg.step; step >= kMinStep; step /= 2.0) {
                DenseFunction moved = cur->f;
                for (const Point x : support.points()) moved[x] += step * scale * direction[x];
                Iterate cand(project(moved, support));
                if (cand.value >= cur->value * (1.0 - kValueSlack)) {
                    cur.emplace(std::move(cand));
                    accepted = true;
                    break;
                }
            }
            // No ascent even at a vanishing step: stationary to float precision.
            if (!accepted) break;
        }

        trace.ratio = u2_ratio(cur->f);
        if (trace.ratio > result.best_ratio) {
            result.best_ratio = trace.ratio;
            result.best_start = s;
            result.argmax = cur->f;
        }
        result.starts.push_back(trace);
    }
    return result;
}

}  // namespace gowers
