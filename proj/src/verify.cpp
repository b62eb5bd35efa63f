#include "gowers/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gowers/compression.hpp"
#include "gowers/io.hpp"
#include "gowers/random.hpp"

namespace gowers {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::uint64_t cell_id(SphereSpec s) {
    return static_cast<std::uint64_t>(s.n) * (kMaxDim + 1) + static_cast<std::uint64_t>(s.k);
}

double max_abs(const DenseFunction& f) {
    double m = 0.0;
    for (const double v : f.values()) m = std::max(m, std::abs(v));
    return m;
}

/// max over A of |f - mean_A f| divided by max |f|.
double constant_deviation(const DenseFunction& f, const PointSet& support) {
    double mean = 0.0;
    for (const Point x : support.points()) mean += f[x];
    mean /= static_cast<double>(support.size());
    double dev = 0.0;
    for (const Point x : support.points()) dev = std::max(dev, std::abs(f[x] - mean));
    const double scale = max_abs(f);
    return scale == 0.0 ? 0.0 : dev / scale;
}

DenseFunction nonnegative_start(const PointSet& support, Rng& rng) {
    for (;;) {
        DenseFunction f = random_uniform_on(support.n(), support.points(), rng);
        if (max_abs(f) > 0.0) return f;
    }
}

/// Canonical representatives whose coset meets the support.
std::vector<Point> active_representatives(const PointSet& support, PairIndex p) {
    std::vector<Point> reps;
    for (Point b = 0; b < table_size(support.n()); ++b) {
        if (!is_canonical(b, p)) continue;
        const auto c = coset(b, p);
        if (std::any_of(c.begin(), c.end(), [&](Point x) { return support.contains(x); })) {
            reps.push_back(b);
        }
    }
    return reps;
}

}  // namespace

VerifyReport verify_theorem(SphereSpec s, const VerifyOptions& options) {
    s = SphereSpec::make(s.n, s.k);
    if (options.trials < 1) throw std::invalid_argument("verify_theorem: trials must be >= 1");

    VerifyReport r;
    r.spec = s;
    r.trials = options.trials;
    r.compression_seed = stream_seed(options.seed, 2 * cell_id(s));
    r.gradient_seed = stream_seed(options.seed, 2 * cell_id(s) + 1);

    try {
        const PointSet support = PointSet::sphere(s);
        r.sphere_size = support.size();
        r.energy = additive_energy(support.points(), s.n);
        const MuValue mu = mu_constant(s);
        r.mu_exact = mu.exact;
        r.mu_closed_form = mu.value;

        r.constant_ratio = u2_ratio(DenseFunction::indicator(s.n, support.points()));
        r.constant_matches = std::abs(r.constant_ratio - r.mu_closed_form) <= options.constant_tol;
        if (!r.constant_matches) r.diagnostics.push_back("constant function ratio differs from closed form");

        // Route 1: compression fixpoints from non-negative starts.
        const double constant_tol = options.fixpoint_tol * std::max(1, s.n * s.n);
        bool all_attained = true;
        r.best_ratio_compression = -kInf;
        for (int t = 0; t < options.trials; ++t) {
            Rng rng(stream_seed(r.compression_seed, static_cast<std::uint64_t>(t)));
            const DenseFunction start = nonnegative_start(support, rng);
            CompressionRun run;
            DenseFunction final_f = start;
            if (s.n >= 2) {
                FixpointOptions fo;
                fo.tol = options.fixpoint_tol;
                fo.max_sweeps = options.max_sweeps;
                auto fr = symmetrize_to_fixpoint(start, fo);
                run.sweeps = fr.sweeps;
                run.converged = fr.converged;
                run.trace_monotone = fr.trace.monotone();
                final_f = std::move(fr.f);
            } else {
                // No pairs exist; every function on a sphere of F_2^1 is a point mass.
                run.converged = true;
                run.trace_monotone = true;
            }
            run.final_ratio = u2_ratio(final_f);
            run.constant_deviation = constant_deviation(final_f, support);
            run.ended_constant = run.constant_deviation <= constant_tol;
            r.best_ratio_compression = std::max(r.best_ratio_compression, run.final_ratio);

            const bool reached = std::abs(run.final_ratio - r.mu_closed_form) <= options.tol;
            const bool ok = run.converged && run.trace_monotone && run.ended_constant && reached;
            if (!ok) {
                all_attained = false;
                r.diagnostics.push_back("compression trial " + std::to_string(t) +
                                        (run.converged ? "" : " did not converge;") +
                                        (run.trace_monotone ? "" : " trace not monotone;") +
                                        (run.ended_constant ? "" : " did not end constant;") +
                                        (reached ? "" : " ratio misses mu;"));
                if (!r.replay) r.replay = io::format_function(start);
            }
            r.compression_runs.push_back(run);
        }
        r.constant_attained = all_attained;

        // Route 2: gradient ascent from signed starts.
        OptimizerConfig cfg;
        cfg.starts = options.trials;
        cfg.step = options.step;
        cfg.tol = options.optimizer_tol;
        cfg.max_iters = options.max_iters;
        cfg.seed = r.gradient_seed;
        const OptimizerResult opt = maximize_ratio(support, cfg);
        r.best_ratio_gradient = opt.best_ratio;
        r.gradient_runs = opt.starts;
        r.gradient_within_bound = opt.best_ratio <= r.mu_closed_form + options.tol;
        r.gradient_reached_mu = std::abs(opt.best_ratio - r.mu_closed_form) <= options.tol;
        if (!r.gradient_within_bound) {
            r.diagnostics.push_back("gradient ascent exceeded the closed-form value");
            r.replay = io::format_function(opt.argmax);
        }
        const auto unconverged = std::count_if(opt.starts.begin(), opt.starts.end(),
                                               [](const StartTrace& t) { return !t.converged; });
        if (unconverged > 0) {
            r.diagnostics.push_back(std::to_string(unconverged) + " gradient start(s) hit the iteration cap");
        }

        r.pass = r.constant_matches && r.constant_attained &&
                 r.best_ratio_compression <= r.mu_closed_form + options.tol && r.gradient_within_bound;
    } catch (const std::exception& e) {
        r.diagnostics.push_back(std::string("error: ") + e.what());
        r.pass = false;
    }
    return r;
}

VerifySummary verify_range(int n_max, const VerifyOptions& options) {
    check_dimension(n_max);
    VerifySummary summary{n_max, options, {}, true};
    for (int n = 0; n <= n_max; ++n) {
        for (int k = 0; k <= n; ++k) {
            summary.cells.push_back(verify_theorem(SphereSpec{n, k}, options));
            summary.pass = summary.pass && summary.cells.back().pass;
        }
    }
    return summary;
}

LemmaReport lemma_suite(SphereSpec s, const LemmaOptions& options) {
    s = SphereSpec::make(s.n, s.k);
    if (s.n > kNaiveMaxDim) {
        throw DimensionError("lemma_suite: n=" + std::to_string(s.n) + " exceeds " +
                             std::to_string(kNaiveMaxDim));
    }
    LemmaReport r;
    r.spec = s;
    r.trials = options.trials;
    r.seed = options.seed;
    r.worst_u2_change = kInf;
    r.worst_bracket_change = kInf;
    r.brackets_checked = s.n <= options.bracket_max_n;

    const PointSet support = PointSet::sphere(s);
    const auto pairs = s.n >= 2 ? all_pairs(s.n) : std::vector<PairIndex>{};
    std::vector<std::vector<Point>> reps;
    if (r.brackets_checked) {
        for (const auto p : pairs) reps.push_back(active_representatives(support, p));
    }

    for (int t = 0; t < options.trials; ++t) {
        Rng rng(stream_seed(options.seed, static_cast<std::uint64_t>(t)));
        DenseFunction f(s.n);
        if (options.population == LemmaPopulation::constant) {
            const double c = std::uniform_real_distribution<double>(0.5, 1.5)(rng);
            for (const Point x : support.points()) f[x] = c;
        } else {
            f = nonnegative_start(support, rng);
        }
        const double u_before = u2_fourth_naive(f);
        const double l2_before = l2_norm(f);
        bool trial_failed = false;

        for (std::size_t pi = 0; pi < pairs.size(); ++pi) {
            const PairIndex p = pairs[pi];
            const DenseFunction g = compress(f, p);
            ++r.steps_checked;

            for (Point x = 0; x < g.size(); ++x) {
                if (!support.contains(x) && g[x] != 0.0) {
                    ++r.support_violations;
                    trial_failed = true;
                }
            }
            r.max_l2_drift = std::max(r.max_l2_drift, std::abs(l2_norm(g) - l2_before));

            const double change = u2_fourth_naive(g) - u_before;
            r.worst_u2_change = std::min(r.worst_u2_change, change);
            if (change < -options.u2_slack) {
                ++r.u2_violations;
                trial_failed = true;
            }

            const double distance = compression_distance(f, p);
            if (distance > options.strict_threshold) {
                ++r.strict_candidates;
                if (change > 0.0) {
                    ++r.strict_triggers;
                } else {
                    ++r.strict_failures;
                    trial_failed = true;
                }
            }

            const DenseFunction gg = compress(g, p);
            for (Point x = 0; x < g.size(); ++x) {
                r.max_idempotence_error = std::max(r.max_idempotence_error, std::abs(gg[x] - g[x]));
            }

            if (r.brackets_checked) {
                const auto& active = reps[pi];
                std::vector<bool> is_active(g.size(), false);
                for (const Point b : active) is_active[b] = true;
                for (const Point b1 : active) {
                    for (const Point b2 : active) {
                        for (const Point b3 : active) {
                            if (!is_active[b1 ^ b2 ^ b3]) continue;
                            const double d = coset_bracket(g, p, b1, b2, b3) - coset_bracket(f, p, b1, b2, b3);
                            ++r.bracket_checks;
                            r.worst_bracket_change = std::min(r.worst_bracket_change, d);
                            if (d < -options.bracket_slack) {
                                ++r.bracket_violations;
                                trial_failed = true;
                            }
                        }
                    }
                }
            }
        }
        if (trial_failed && !r.replay) r.replay = io::format_function(f);
    }
    if (r.worst_u2_change == kInf) r.worst_u2_change = 0.0;
    if (r.worst_bracket_change == kInf) r.worst_bracket_change = 0.0;

    // Values are drawn from [0, 1.5), so an absolute bound of a few ulps suffices.
    const double idempotence_tol = 16 * std::numeric_limits<double>::epsilon();
    r.pass = r.support_violations == 0 && r.max_l2_drift <= options.l2_tol && r.u2_violations == 0 &&
             r.strict_failures == 0 && r.bracket_violations == 0 &&
             r.max_idempotence_error <= idempotence_tol;
    return r;
}

DualityReport remark_duality_check(const PointSet& support, int trials, std::uint64_t seed, double tol) {
    const int n = support.n();
    if (n > 10) throw DimensionError("remark_duality_check: n must be at most 10");
    if (support.empty()) throw std::invalid_argument("remark_duality_check: empty support");
    DualityReport r;
    r.n = n;
    r.support_size = support.size();
    r.trials = trials;
    r.seed = seed;
    r.tol = tol;
    const double N = static_cast<double>(table_size(n));
    for (int t = 0; t < trials; ++t) {
        Rng rng(stream_seed(seed, static_cast<std::uint64_t>(t)));
        const DenseFunction coeffs = random_gaussian_on(n, support.points(), rng);
        if (max_abs(coeffs) == 0.0) continue;
        const Spectrum spectrum(n, std::vector<double>(coeffs.values().begin(), coeffs.values().end()),
                                Normalization::expectation);
        const DenseFunction f = fourier_inverse(spectrum);

        const double lhs = l4_ratio(f);
        const double rhs = N * u2_ratio(coeffs);
        r.max_ratio_deviation = std::max(r.max_ratio_deviation, std::abs(lhs - rhs) / std::abs(rhs));

        const double l4 = l4_fourth(f);
        const double dual = N * N * N * u2_fourth_fast(coeffs);
        r.max_l4_deviation = std::max(r.max_l4_deviation, std::abs(l4 - dual) / std::abs(dual));
    }
    r.pass = r.max_ratio_deviation <= tol && r.max_l4_deviation <= tol;
    return r;
}

nlohmann::ordered_json to_json(const VerifyReport& r) {
    nlohmann::ordered_json compression = nlohmann::ordered_json::array();
    for (const auto& c : r.compression_runs) {
        compression.push_back({{"final_ratio", c.final_ratio},
                               {"sweeps", c.sweeps},
                               {"converged", c.converged},
                               {"trace_monotone", c.trace_monotone},
                               {"constant_deviation", c.constant_deviation},
                               {"ended_constant", c.ended_constant}});
    }
    nlohmann::ordered_json gradient = nlohmann::ordered_json::array();
    for (const auto& g : r.gradient_runs) {
        gradient.push_back({{"iterations", g.iterations},
                            {"final_gradient_norm", g.final_gradient_norm},
                            {"ratio", g.ratio},
                            {"converged", g.converged}});
    }
    nlohmann::ordered_json j = {
        {"spec", {{"n", r.spec.n}, {"k", r.spec.k}}},
        {"sphere_size", r.sphere_size},
        {"energy", r.energy.count},
        {"mu_exact", r.mu_exact.str()},
        {"mu_closed_form", r.mu_closed_form},
        {"constant_ratio", r.constant_ratio},
        {"constant_matches", r.constant_matches},
        {"best_ratio_compression", r.best_ratio_compression},
        {"best_ratio_gradient", r.best_ratio_gradient},
        {"constant_attained", r.constant_attained},
        {"gradient_within_bound", r.gradient_within_bound},
        {"gradient_reached_mu", r.gradient_reached_mu},
        {"pass", r.pass},
        {"trials", r.trials},
        {"compression_seed", r.compression_seed},
        {"gradient_seed", r.gradient_seed},
        {"compression_runs", compression},
        {"gradient_runs", gradient},
        {"diagnostics", r.diagnostics},
    };
    if (r.replay) j["replay"] = *r.replay;
    return j;
}

nlohmann::ordered_json to_json(const VerifySummary& s) {
    nlohmann::ordered_json cells = nlohmann::ordered_json::array();
    for (const auto& c : s.cells) cells.push_back(to_json(c));
    return {
        {"n_max", s.n_max},
        {"trials", s.options.trials},
        {"seed", s.options.seed},
        {"tol", s.options.tol},
        {"pass", s.pass},
        {"cells", cells},
    };
}

nlohmann::ordered_json to_json(const LemmaReport& r) {
    nlohmann::ordered_json j = {
        {"spec", {{"n", r.spec.n}, {"k", r.spec.k}}},
        {"trials", r.trials},
        {"seed", r.seed},
        {"steps_checked", r.steps_checked},
        {"support_violations", r.support_violations},
        {"max_l2_drift", r.max_l2_drift},
        {"worst_u2_change", r.worst_u2_change},
        {"u2_violations", r.u2_violations},
        {"strict_candidates", r.strict_candidates},
        {"strict_triggers", r.strict_triggers},
        {"strict_failures", r.strict_failures},
        {"brackets_checked", r.brackets_checked},
        {"bracket_checks", r.bracket_checks},
        {"bracket_violations", r.bracket_violations},
        {"worst_bracket_change", r.worst_bracket_change},
        {"max_idempotence_error", r.max_idempotence_error},
        {"pass", r.pass},
    };
    if (r.replay) j["replay"] = *r.replay;
    return j;
}

nlohmann::ordered_json to_json(const DualityReport& r) {
    return {
        {"n", r.n},
        {"support_size", r.support_size},
        {"trials", r.trials},
        {"seed", r.seed},
        {"max_ratio_deviation", r.max_ratio_deviation},
        {"max_l4_deviation", r.max_l4_deviation},
        {"tol", r.tol},
        {"pass", r.pass},
    };
}

}  // namespace gowers
