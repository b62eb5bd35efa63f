#pragma once

// Certification harness for mu(S(n,k)) = E(S) / (N |S|^2).
//
// Each sphere is attacked from two independent directions: compression
// fixpoints from random non-negative starts (which should all land on the
// constant function) and proof-agnostic gradient ascent from random signed
// starts (which must never beat the constant). Reports are plain data and
// serialize to JSON; failures carry a replayable function file.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gowers/functionals.hpp"
#include "gowers/hypercube.hpp"
#include "gowers/optimize.hpp"

namespace gowers {

struct VerifyOptions {
    int trials = 8;
    std::uint64_t seed = 0;
    /// Tolerance on ratios reached by the two maximization routes.
    double tol = 1e-7;
    /// Tolerance on the ratio of the constant function itself.
    double constant_tol = 1e-9;
    double fixpoint_tol = 1e-12;
    /// 0 selects 10 n^2.
    int max_sweeps = 0;
    double step = 0.5;
    double optimizer_tol = 1e-10;
    int max_iters = 50000;
};

struct CompressionRun {
    double final_ratio = 0.0;
    int sweeps = 0;
    bool converged = false;
    bool trace_monotone = false;
    /// max over the sphere of |f - mean|, relative to max |f|.
    double constant_deviation = 0.0;
    bool ended_constant = false;
};

struct VerifyReport {
    SphereSpec spec;
    std::uint64_t sphere_size = 0;
    EnergyValue energy;
    Rational mu_exact;
    double mu_closed_form = 0.0;
    double constant_ratio = 0.0;
    bool constant_matches = false;
    double best_ratio_compression = 0.0;
    double best_ratio_gradient = 0.0;
    bool constant_attained = false;
    bool gradient_within_bound = false;
    /// Diagnostic only: whether some gradient start also reached mu.
    bool gradient_reached_mu = false;
    bool pass = false;
    int trials = 0;
    std::uint64_t compression_seed = 0;
    std::uint64_t gradient_seed = 0;
    std::vector<CompressionRun> compression_runs;
    std::vector<StartTrace> gradient_runs;
    std::vector<std::string> diagnostics;
    /// Function file of an offending function when pass is false.
    std::optional<std::string> replay;
};

[[nodiscard]] VerifyReport verify_theorem(SphereSpec s, const VerifyOptions& options = {});

struct VerifySummary {
    int n_max = 0;
    VerifyOptions options;
    std::vector<VerifyReport> cells;
    bool pass = false;
};

/// verify_theorem for every 0 <= k <= n <= n_max.
[[nodiscard]] VerifySummary verify_range(int n_max, const VerifyOptions& options = {});

enum class LemmaPopulation {
    random_nonnegative,
    constant,
};

struct LemmaOptions {
    int trials = 100;
    std::uint64_t seed = 0;
    LemmaPopulation population = LemmaPopulation::random_nonnegative;
    /// Bracket monotonicity is checked only up to this n (cost ~ N^3 per pair).
    int bracket_max_n = 6;
    double l2_tol = 1e-12;
    double u2_slack = 1e-12;
    double strict_threshold = 1e-8;
    double bracket_slack = 1e-12;
};

struct LemmaReport {
    SphereSpec spec;
    int trials = 0;
    std::uint64_t seed = 0;
    std::int64_t steps_checked = 0;
    std::int64_t support_violations = 0;
    double max_l2_drift = 0.0;
    /// min over steps of u2^4(compress f) - u2^4(f).
    double worst_u2_change = 0.0;
    std::int64_t u2_violations = 0;
    std::int64_t strict_candidates = 0;
    std::int64_t strict_triggers = 0;
    std::int64_t strict_failures = 0;
    bool brackets_checked = false;
    std::int64_t bracket_checks = 0;
    std::int64_t bracket_violations = 0;
    double worst_bracket_change = 0.0;
    double max_idempotence_error = 0.0;
    bool pass = false;
    std::optional<std::string> replay;
};

/// Checks support and l2 preservation, u2 monotonicity and strictness, and
/// per-coset bracket monotonicity of every (i,j) compression on random
/// functions supported on S(n,k). Requires n <= 8 (naive oracle).
[[nodiscard]] LemmaReport lemma_suite(SphereSpec s, const LemmaOptions& options = {});

struct DualityReport {
    int n = 0;
    std::uint64_t support_size = 0;
    int trials = 0;
    std::uint64_t seed = 0;
    /// max relative deviation of l4_ratio(f) from N * u2_ratio(fhat).
    double max_ratio_deviation = 0.0;
    /// max relative deviation of l4^4(f) from N^3 u2^4(fhat).
    double max_l4_deviation = 0.0;
    double tol = 0.0;
    bool pass = false;
};

/// Draws random spectra supported on A, forms f by inverse transform and
/// compares the l4 ratio of f with N times the u2 ratio of its spectrum.
/// Requires n <= 10.
[[nodiscard]] DualityReport remark_duality_check(const PointSet& support, int trials, std::uint64_t seed,
                                                 double tol = 1e-10);

[[nodiscard]] nlohmann::ordered_json to_json(const VerifyReport& r);
[[nodiscard]] nlohmann::ordered_json to_json(const VerifySummary& s);
[[nodiscard]] nlohmann::ordered_json to_json(const LemmaReport& r);
[[nodiscard]] nlohmann::ordered_json to_json(const DualityReport& r);

}  // namespace gowers
