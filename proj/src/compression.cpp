#include "gowers/compression.hpp"

#include <algorithm>
#include <cmath>

#include "gowers/functionals.hpp"
#include "gowers/random.hpp"

namespace gowers {

namespace {

PairIndex checked_pair(const DenseFunction& f, PairIndex p) {
    if (f.n() < 2) throw DimensionError("compression needs n >= 2");
    return PairIndex::make(p.i, p.j, f.n());
}

}  // namespace

double compress_in_place(DenseFunction& f, PairIndex p) {
    p = checked_pair(f, p);
    const Point bi = p.bit_i();
    const Point bj = p.bit_j();
    double max_change = 0.0;
    // Visit each moved pair once, from its member with bit i set and bit j clear.
    for (Point x = 0; x < f.size(); ++x) {
        if ((x & bi) == 0 || (x & bj) != 0) continue;
        const Point y = flip_pair(x, p);
        const double a = f[x];
        const double b = f[y];
        const double m = std::sqrt((a * a + b * b) / 2.0);
        max_change = std::max({max_change, std::abs(a - m), std::abs(b - m)});
        f[x] = m;
        f[y] = m;
    }
    return max_change;
}

DenseFunction compress(const DenseFunction& f, PairIndex p) {
    DenseFunction out = f;
    compress_in_place(out, p);
    return out;
}

double compression_distance(const DenseFunction& f, PairIndex p) {
    DenseFunction scratch = f;
    return compress_in_place(scratch, p);
}

SweepResult sweep(const DenseFunction& f) {
    SweepResult r{f, 0.0};
    for (const auto p : all_pairs(f.n())) {
        r.max_change = std::max(r.max_change, compress_in_place(r.f, p));
    }
    return r;
}

bool CompressionTrace::monotone(double slack, double l2_tol) const {
    for (std::size_t t = 1; t < records.size(); ++t) {
        if (records[t].u2_fourth < records[t - 1].u2_fourth - slack) return false;
        if (std::abs(records[t].l2 - records.front().l2) > l2_tol) return false;
    }
    return true;
}

FixpointResult symmetrize_to_fixpoint(const DenseFunction& f, const FixpointOptions& options) {
    if (!(options.tol > 0.0)) throw std::invalid_argument("symmetrize_to_fixpoint: tol must be positive");
    if (f.n() < 2) throw DimensionError("symmetrize_to_fixpoint: n must be at least 2");
    const int max_sweeps = options.max_sweeps > 0 ? options.max_sweeps : 10 * f.n() * f.n();
    const auto pairs = all_pairs(f.n());

    FixpointResult r{f, {}, 0, 0.0, false};
    while (r.sweeps < max_sweeps) {
        ++r.sweeps;
        double sweep_change = 0.0;
        for (std::size_t t = 0; t < pairs.size(); ++t) {
            const double change = compress_in_place(r.f, pairs[t]);
            sweep_change = std::max(sweep_change, change);
            const bool last = t + 1 == pairs.size();
            if (options.detail == TraceDetail::per_pair || last) {
                const double reported = options.detail == TraceDetail::per_pair ? change : sweep_change;
                r.trace.records.push_back(
                    TraceRecord{r.sweeps, pairs[t], reported, u2_fourth_fast(r.f), l2_norm(r.f)});
            }
        }
        r.last_max_change = sweep_change;
        if (sweep_change < options.tol) {
            r.converged = true;
            break;
        }
    }
    return r;
}

SignedSearchReport signed_monotonicity_search(SphereSpec s, int trials, std::uint64_t seed) {
    s = SphereSpec::make(s.n, s.k);
    if (s.n < 2) throw DimensionError("signed_monotonicity_search: n must be at least 2");
    SignedSearchReport report;
    report.spec = s;
    report.trials = trials;
    report.seed = seed;
    const auto points = sphere_points(s);
    const auto pairs = all_pairs(s.n);
    for (int t = 0; t < trials; ++t) {
        Rng rng(stream_seed(seed, static_cast<std::uint64_t>(t)));
        const DenseFunction f = random_gaussian_on(s.n, points, rng);
        const double before = u2_fourth_fast(f);
        if (before == 0.0) continue;
        for (const auto p : pairs) {
            const double after = u2_fourth_fast(compress(f, p));
            const double rel = (after - before) / before;
            ++report.steps_checked;
            if (rel < -1e-12) ++report.decreases;
            if (rel < report.worst_relative_change) {
                report.worst_relative_change = rel;
                report.worst_function.assign(f.values().begin(), f.values().end());
                report.worst_pair = p;
            }
        }
    }
    if (report.decreases == 0) report.worst_function.clear();
    return report;
}

}  // namespace gowers
