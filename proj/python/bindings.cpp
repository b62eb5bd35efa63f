#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gowers/compression.hpp"
#include "gowers/functionals.hpp"
#include "gowers/hypercube.hpp"
#include "gowers/optimize.hpp"
#include "gowers/spectral.hpp"
#include "gowers/verify.hpp"

namespace py = pybind11;
using namespace gowers;

namespace {

using Array = py::array_t<double, py::array::c_style | py::array::forcecast>;

DenseFunction to_function(const Array& a) {
    if (a.ndim() != 1) throw std::invalid_argument("expected a 1-d array");
    const auto size = static_cast<std::uint64_t>(a.size());
    if (size == 0 || !std::has_single_bit(size)) throw std::invalid_argument("length must be a power of two");
    const int n = std::countr_zero(size);
    return DenseFunction(n, std::vector<double>(a.data(), a.data() + a.size()));
}

py::array_t<double> to_array(std::span<const double> v) {
    return py::array_t<double>(static_cast<py::ssize_t>(v.size()), v.data());
}

py::array_t<double> to_array(const DenseFunction& f) { return to_array(f.values()); }

PairIndex pair(const DenseFunction& f, int i, int j) { return PairIndex::make(i, j, f.n()); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Additive energy and the u2 norm on Hamming spheres";
    m.attr("MAX_DIM") = kMaxDim;

    py::register_exception<DimensionError>(m, "DimensionError", PyExc_ValueError);

    m.def("sphere_points", [](int n, int k) { return sphere_points(SphereSpec::make(n, k)); },
          py::arg("n"), py::arg("k"));
    m.def("sphere_connected", [](int n, int k) { return sphere_connected(SphereSpec::make(n, k)); },
          py::arg("n"), py::arg("k"));

    m.def("fourier_forward",
          [](const Array& f, bool counting) {
              const auto s = fourier_forward(to_function(f),
                                             counting ? Normalization::counting : Normalization::expectation);
              return to_array(s.coeffs());
          },
          py::arg("f"), py::arg("counting") = false);
    m.def("fourier_inverse",
          [](const Array& c) {
              const auto g = to_function(c);
              const Spectrum s(g.n(), std::vector<double>(g.values().begin(), g.values().end()),
                               Normalization::expectation);
              return to_array(fourier_inverse(s));
          },
          py::arg("coeffs"));

    m.def("l2_norm", [](const Array& f) { return l2_norm(to_function(f)); }, py::arg("f"));
    m.def("l4_fourth", [](const Array& f) { return l4_fourth(to_function(f)); }, py::arg("f"));
    m.def("u2_fourth_naive", [](const Array& f) { return u2_fourth_naive(to_function(f)); }, py::arg("f"));
    m.def("u2_fourth_fast", [](const Array& f) { return u2_fourth_fast(to_function(f)); }, py::arg("f"));
    m.def("u2_fourth_by_cosets",
          [](const Array& f, int i, int j) {
              const auto g = to_function(f);
              return u2_fourth_by_cosets(g, pair(g, i, j));
          },
          py::arg("f"), py::arg("i"), py::arg("j"));
    m.def("u2_ratio", [](const Array& f) { return u2_ratio(to_function(f)); }, py::arg("f"));
    m.def("l4_ratio", [](const Array& f) { return l4_ratio(to_function(f)); }, py::arg("f"));
    m.def("u2_gradient", [](const Array& f) { return to_array(u2_gradient(to_function(f))); }, py::arg("f"));

    m.def("additive_energy",
          [](const std::vector<Point>& points, int n) { return additive_energy(points, n).count; },
          py::arg("points"), py::arg("n"));
    m.def("krawtchouk", &krawtchouk, py::arg("n"), py::arg("k"), py::arg("w"));
    m.def("energy_via_krawtchouk",
          [](int n, int k) { return energy_via_krawtchouk(SphereSpec::make(n, k)).count; },
          py::arg("n"), py::arg("k"));
    m.def("mu_constant",
          [](int n, int k) {
              const auto mu = mu_constant(SphereSpec::make(n, k));
              return py::make_tuple(mu.exact.num, mu.exact.den, mu.value);
          },
          py::arg("n"), py::arg("k"));

    m.def("compress",
          [](const Array& f, int i, int j) {
              const auto g = to_function(f);
              return to_array(compress(g, pair(g, i, j)));
          },
          py::arg("f"), py::arg("i"), py::arg("j"));
    m.def("compression_distance",
          [](const Array& f, int i, int j) {
              const auto g = to_function(f);
              return compression_distance(g, pair(g, i, j));
          },
          py::arg("f"), py::arg("i"), py::arg("j"));
    m.def("symmetrize_to_fixpoint",
          [](const Array& f, double tol, int max_sweeps) {
              const auto r = symmetrize_to_fixpoint(
                  to_function(f), FixpointOptions{.tol = tol, .max_sweeps = max_sweeps, .detail = TraceDetail::per_sweep});
              py::list trace;
              for (const auto& t : r.trace.records) {
                  trace.append(py::dict(py::arg("sweep") = t.sweep, py::arg("max_change") = t.max_change,
                                        py::arg("u2_fourth") = t.u2_fourth, py::arg("l2") = t.l2));
              }
              return py::dict(py::arg("f") = to_array(r.f), py::arg("sweeps") = r.sweeps,
                              py::arg("converged") = r.converged, py::arg("last_max_change") = r.last_max_change,
                              py::arg("trace") = trace);
          },
          py::arg("f"), py::arg("tol") = 1e-12, py::arg("max_sweeps") = 0);

    m.def("maximize_ratio",
          [](const std::vector<Point>& points, int n, int starts, double step, double tol, int max_iters,
             std::uint64_t seed) {
              const auto r = maximize_ratio(PointSet(n, points), OptimizerConfig{.starts = starts,
                                                                                  .step = step,
                                                                                  .tol = tol,
                                                                                  .max_iters = max_iters,
                                                                                  .seed = seed});
              py::list runs;
              for (const auto& s : r.starts) {
                  runs.append(py::dict(py::arg("iterations") = s.iterations, py::arg("ratio") = s.ratio,
                                       py::arg("final_gradient_norm") = s.final_gradient_norm,
                                       py::arg("converged") = s.converged));
              }
              return py::dict(py::arg("best_ratio") = r.best_ratio, py::arg("best_start") = r.best_start,
                              py::arg("argmax") = to_array(r.argmax), py::arg("starts") = runs);
          },
          py::arg("points"), py::arg("n"), py::arg("starts") = 32, py::arg("step") = 0.5, py::arg("tol") = 1e-10,
          py::arg("max_iters") = 50000, py::arg("seed") = 0);

    m.def("verify_theorem_json",
          [](int n, int k, int trials, std::uint64_t seed, double tol) {
              return to_json(verify_theorem(SphereSpec::make(n, k),
                                            VerifyOptions{.trials = trials, .seed = seed, .tol = tol}))
                  .dump();
          },
          py::arg("n"), py::arg("k"), py::arg("trials") = 8, py::arg("seed") = 0, py::arg("tol") = 1e-7);
    m.def("lemma_suite_json",
          [](int n, int k, int trials, std::uint64_t seed) {
              return to_json(lemma_suite(SphereSpec::make(n, k), LemmaOptions{.trials = trials, .seed = seed})).dump();
          },
          py::arg("n"), py::arg("k"), py::arg("trials") = 100, py::arg("seed") = 0);
    m.def("remark_duality_json",
          [](const std::vector<Point>& points, int n, int trials, std::uint64_t seed) {
              return to_json(remark_duality_check(PointSet(n, points), trials, seed)).dump();
          },
          py::arg("points"), py::arg("n"), py::arg("trials") = 50, py::arg("seed") = 0);
}
