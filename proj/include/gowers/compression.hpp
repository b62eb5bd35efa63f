#pragma once

// The (i,j) l2-compression and its iteration to a fixpoint.
//
// compress(f, p) replaces f on every pair {x, x + e_i + e_j} whose i-th and
// j-th coordinates differ by the root mean square of the two values, and
// leaves every other point alone. On a Hamming sphere it preserves support
// and l2 norm and does not decrease u2 for non-negative f.

#include <cstdint>
#include <vector>

#include "gowers/hypercube.hpp"
#include "gowers/spectral.hpp"

namespace gowers {

[[nodiscard]] DenseFunction compress(const DenseFunction& f, PairIndex p);

/// Applies compress in place, returns max_x |f(x) - f'(x)|.
double compress_in_place(DenseFunction& f, PairIndex p);

/// max_x |f(x) - compress(f, p)(x)|
[[nodiscard]] double compression_distance(const DenseFunction& f, PairIndex p);

struct SweepResult {
    DenseFunction f;
    double max_change = 0.0;
};

/// compress over all pairs in lexicographic order, each step feeding the next.
[[nodiscard]] SweepResult sweep(const DenseFunction& f);

struct TraceRecord {
    int sweep = 0;
    PairIndex pair;
    double max_change = 0.0;
    double u2_fourth = 0.0;
    double l2 = 0.0;
};

struct CompressionTrace {
    std::vector<TraceRecord> records;

    /// True when u2^4 never drops by more than `slack` between consecutive
    /// records and l2 stays within `l2_tol` of the first record.
    [[nodiscard]] bool monotone(double slack = 1e-12, double l2_tol = 1e-12) const;
};

enum class TraceDetail {
    /// One record per compression step.
    per_pair,
    /// One record per sweep (the last pair of the sweep).
    per_sweep,
};

struct FixpointOptions {
    double tol = 1e-12;
    /// 0 selects 10 n^2.
    int max_sweeps = 0;
    TraceDetail detail = TraceDetail::per_pair;
};

struct FixpointResult {
    DenseFunction f;
    CompressionTrace trace;
    int sweeps = 0;
    double last_max_change = 0.0;
    /// False when max_sweeps ran out before a sweep moved nothing by tol or more.
    bool converged = false;
};

[[nodiscard]] FixpointResult symmetrize_to_fixpoint(const DenseFunction& f,
                                                    const FixpointOptions& options = {});

/// Outcome of a randomized search for sign-changing f on a sphere whose u2
/// drops under a single compression.
struct SignedSearchReport {
    SphereSpec spec;
    int trials = 0;
    std::uint64_t seed = 0;
    std::int64_t steps_checked = 0;
    std::int64_t decreases = 0;
    /// Most negative u2^4(compress(f)) - u2^4(f) seen, relative to u2^4(f).
    double worst_relative_change = 0.0;
    /// Set when decreases > 0: the worst function and pair, for replay.
    std::vector<double> worst_function;
    PairIndex worst_pair;
};

[[nodiscard]] SignedSearchReport signed_monotonicity_search(SphereSpec s, int trials,
                                                            std::uint64_t seed);

}  // namespace gowers
