#include "gowers/cli.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <ostream>
#include <string>

#include <CLI11.hpp>

#include "gowers/compression.hpp"
#include "gowers/functionals.hpp"
#include "gowers/io.hpp"
#include "gowers/optimize.hpp"
#include "gowers/verify.hpp"

namespace gowers::cli {

namespace {

// Shortest decimal that reads back to the same double.
std::string shortest(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void write_text_file(const std::string& path, const std::function<void(std::ostream&)>& body) {
    std::ofstream f(path);
    if (!f) throw UsageError("cannot write " + path);
    body(f);
}

struct Options {
    int n = -1;
    int k = -1;
    int n_max = -1;
    std::string set_path;
    std::string fn_path;
    std::string trace_path;
    std::string out_path;
    bool inverse = false;
    double tol = 0.0;
    int max_sweeps = 0;
    int starts = 32;
    int trials = 0;
    std::uint64_t seed = 0;
    double step = 0.5;
    int max_iters = 50000;
};

int cmd_mu(const Options& o, std::ostream& out) {
    const auto s = SphereSpec::make(o.n, o.k);
    const auto points = sphere_points(s);
    const auto e = additive_energy(points, s.n);
    const auto mu = mu_constant(s);
    out << "E=" << e.count << " |A|=" << points.size() << " mu=" << mu.exact.str() << " ("
        << shortest(mu.value) << ")\n";
    return kExitOk;
}

int cmd_energy(const Options& o, std::ostream& out) {
    const auto set = io::read_set_file(o.set_path);
    const auto e = additive_energy(set.points(), set.n());
    out << "E=" << e.count << " |A|=" << set.size() << '\n';
    return kExitOk;
}

int cmd_transform(const Options& o, std::ostream& out) {
    const auto f = io::read_function_file(o.fn_path);
    if (o.inverse) {
        const Spectrum s(f.n(), std::vector<double>(f.values().begin(), f.values().end()),
                         Normalization::expectation);
        out << "# function (inverse of an expectation-normalized spectrum)\n";
        io::write_function(out, fourier_inverse(s));
    } else {
        const auto s = fourier_forward(f);
        out << "# spectrum (expectation normalization)\n";
        io::write_function(out, s.as_function());
    }
    return kExitOk;
}

int cmd_compress(const Options& o, std::ostream& out) {
    const auto f = io::read_function_file(o.fn_path);
    if (f.n() < 2) throw UsageError("compress needs n >= 2");
    FixpointOptions fo;
    fo.tol = o.tol > 0.0 ? o.tol : 1e-12;
    fo.max_sweeps = o.max_sweeps;
    const auto r = symmetrize_to_fixpoint(f, fo);
    if (!o.trace_path.empty()) {
        write_text_file(o.trace_path, [&](std::ostream& csv) { io::write_trace_csv(csv, r.trace); });
    }
    out << "# converged=" << (r.converged ? "true" : "false") << " sweeps=" << r.sweeps
        << " last_max_change=" << io::format_real(r.last_max_change)
        << " u2_fourth=" << io::format_real(u2_fourth_fast(r.f)) << " l2=" << io::format_real(l2_norm(r.f))
        << " ratio=" << io::format_real(u2_ratio(r.f)) << '\n';
    io::write_function(out, r.f);
    return r.converged ? kExitOk : kExitFail;
}

int cmd_optimize(const Options& o, std::ostream& out) {
    const bool sphere = o.set_path.empty();
    if (sphere && (o.n < 0 || o.k < 0)) throw UsageError("optimize needs --set FILE or --n and --k");
    if (!sphere && (o.n >= 0 || o.k >= 0)) throw UsageError("optimize takes either --set or --n/--k");
    const PointSet support = sphere ? PointSet::sphere(SphereSpec::make(o.n, o.k)) : io::read_set_file(o.set_path);

    OptimizerConfig cfg;
    cfg.starts = o.starts;
    cfg.seed = o.seed;
    cfg.tol = o.tol > 0.0 ? o.tol : 1e-10;
    cfg.step = o.step;
    cfg.max_iters = o.max_iters;
    const auto r = maximize_ratio(support, cfg);

    int converged = 0;
    for (const auto& t : r.starts) converged += t.converged ? 1 : 0;
    out << "best_ratio=" << io::format_real(r.best_ratio) << " best_start=" << r.best_start
        << " converged_starts=" << converged << '/' << r.starts.size() << '\n';
    int code = kExitOk;
    if (sphere) {
        const auto mu = mu_constant(SphereSpec{o.n, o.k});
        const bool within = r.best_ratio <= mu.value + 1e-7;
        out << "mu=" << mu.exact.str() << " (" << shortest(mu.value) << ") "
            << (within ? "within bound" : "EXCEEDS BOUND") << '\n';
        if (!within) code = kExitFail;
    }
    if (!o.out_path.empty()) {
        write_text_file(o.out_path, [&](std::ostream& f) { io::write_function(f, r.argmax); });
    }
    return code;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
    VerifyOptions vo;
    vo.trials = o.trials > 0 ? o.trials : 8;
    vo.seed = o.seed;
    if (o.tol > 0.0) vo.tol = o.tol;
    check_dimension(o.n_max);
    if (o.n_max > 14) throw UsageError("verify supports --n-max up to 14");

    VerifySummary summary{o.n_max, vo, {}, true};
    for (int n = 0; n <= o.n_max; ++n) {
        for (int k = 0; k <= n; ++k) {
            auto r = verify_theorem(SphereSpec{n, k}, vo);
            err << "n=" << n << " k=" << k << " mu=" << r.mu_exact.str()
                << " compression=" << io::format_real(r.best_ratio_compression)
                << " gradient=" << io::format_real(r.best_ratio_gradient) << ' '
                << (r.pass ? "PASS" : "FAIL") << '\n';
            summary.pass = summary.pass && r.pass;
            summary.cells.push_back(std::move(r));
        }
    }
    const std::string json = to_json(summary).dump(2) + "\n";
    if (o.out_path.empty()) {
        out << json;
    } else {
        write_text_file(o.out_path, [&](std::ostream& f) { f << json; });
    }
    err << (summary.pass ? "all cells pass" : "verification FAILED") << '\n';
    return summary.pass ? kExitOk : kExitFail;
}

int cmd_lemma(const Options& o, std::ostream& out) {
    LemmaOptions lo;
    lo.trials = o.trials > 0 ? o.trials : 100;
    lo.seed = o.seed;
    const auto r = lemma_suite(SphereSpec::make(o.n, o.k), lo);
    out << to_json(r).dump(2) << '\n';
    return r.pass ? kExitOk : kExitFail;
}

int cmd_duality(const Options& o, std::ostream& out) {
    const auto set = io::read_set_file(o.set_path);
    if (set.n() != o.n) throw UsageError("--n does not match the set file dimension");
    const auto r = remark_duality_check(set, o.trials > 0 ? o.trials : 50, o.seed);
    out << to_json(r).dump(2) << '\n';
    return r.pass ? kExitOk : kExitFail;
}

int cmd_signed(const Options& o, std::ostream& out) {
    const auto r = signed_monotonicity_search(SphereSpec::make(o.n, o.k), o.trials > 0 ? o.trials : 100, o.seed);
    nlohmann::ordered_json j = {{"spec", {{"n", r.spec.n}, {"k", r.spec.k}}},
                        {"trials", r.trials},
                        {"seed", r.seed},
                        {"steps_checked", r.steps_checked},
                        {"decreases", r.decreases},
                        {"worst_relative_change", r.worst_relative_change}};
    if (r.decreases > 0) {
        j["worst_pair"] = {r.worst_pair.i, r.worst_pair.j};
        j["replay"] = io::format_function(DenseFunction(r.spec.n, r.worst_function));
    }
    out << j.dump(2) << '\n';
    return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Additive energy of functions on Hamming spheres"};
    app.require_subcommand(1);
    Options o;

    auto* mu = app.add_subcommand("mu", "exact E(S(n,k)), |S| and mu for the constant function");
    mu->add_option("--n", o.n)->required();
    mu->add_option("--k", o.k)->required();

    auto* energy = app.add_subcommand("energy", "exact additive energy of a set");
    energy->add_option("--set", o.set_path, "set file")->required();

    auto* transform = app.add_subcommand("transform", "Walsh-Hadamard transform of a function file");
    transform->add_option("--fn", o.fn_path, "function file")->required();
    transform->add_flag("--inverse", o.inverse, "treat the input as a spectrum");

    auto* compress_cmd = app.add_subcommand("compress", "iterate (i,j) compressions to a fixpoint");
    compress_cmd->add_option("--fn", o.fn_path, "function file")->required();
    compress_cmd->add_option("--tol", o.tol, "fixpoint tolerance (default 1e-12)");
    compress_cmd->add_option("--max-sweeps", o.max_sweeps, "sweep cap (default 10 n^2)");
    compress_cmd->add_option("--trace", o.trace_path, "write the per-step trace as CSV");

    auto* optimize = app.add_subcommand("optimize", "multi-start gradient ascent of the u2 ratio");
    optimize->add_option("--set", o.set_path, "support set file");
    optimize->add_option("--n", o.n);
    optimize->add_option("--k", o.k);
    optimize->add_option("--starts", o.starts)->check(CLI::PositiveNumber);
    optimize->add_option("--seed", o.seed);
    optimize->add_option("--tol", o.tol, "gradient-norm tolerance (default 1e-10)");
    optimize->add_option("--step", o.step)->check(CLI::PositiveNumber);
    optimize->add_option("--max-iters", o.max_iters)->check(CLI::PositiveNumber);
    optimize->add_option("--out", o.out_path, "write the best function found");

    auto* verify = app.add_subcommand("verify", "certify mu(S(n,k)) for all k and n <= n-max");
    verify->add_option("--n-max", o.n_max)->required();
    verify->add_option("--trials", o.trials, "random starts per route (default 8)");
    verify->add_option("--seed", o.seed);
    verify->add_option("--tol", o.tol, "ratio tolerance (default 1e-7)");
    verify->add_option("--out", o.out_path, "JSON report path (default stdout)");

    auto* lemma = app.add_subcommand("lemma-test", "property suite for single compressions");
    lemma->add_option("--n", o.n)->required();
    lemma->add_option("--k", o.k)->required();
    lemma->add_option("--trials", o.trials, "random functions (default 100)");
    lemma->add_option("--seed", o.seed);

    auto* duality = app.add_subcommand("duality-test", "l4 / u2 Fourier duality on random spectra");
    duality->add_option("--n", o.n)->required();
    duality->add_option("--set", o.set_path, "spectral support set file")->required();
    duality->add_option("--trials", o.trials, "random spectra (default 50)");
    duality->add_option("--seed", o.seed);

    auto* signed_cmd = app.add_subcommand("signed-search",
                                          "look for sign-changing functions whose u2 drops under compression");
    signed_cmd->add_option("--n", o.n)->required();
    signed_cmd->add_option("--k", o.k)->required();
    signed_cmd->add_option("--trials", o.trials, "random functions (default 100)");
    signed_cmd->add_option("--seed", o.seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*mu) return cmd_mu(o, out);
        if (*energy) return cmd_energy(o, out);
        if (*transform) return cmd_transform(o, out);
        if (*compress_cmd) return cmd_compress(o, out);
        if (*optimize) return cmd_optimize(o, out);
        if (*verify) return cmd_verify(o, out, err);
        if (*lemma) return cmd_lemma(o, out);
        if (*duality) return cmd_duality(o, out);
        if (*signed_cmd) return cmd_signed(o, out);
    } catch (const io::FormatError& e) {
        err << "format error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace gowers::cli
