// Python surface: signal generators, sensing operators, the dithered
// quantizer, set projectors, PBP reconstruction, and the experiment runner.
// Seeds are explicit everywhere; the same call with the same seed returns
// the same bytes as the C++ core and the CLI.

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <string>
#include <vector>

#include "qcs/dct.hpp"
#include "qcs/errors.hpp"
#include "qcs/harness.hpp"
#include "qcs/pbp.hpp"
#include "qcs/projectors.hpp"
#include "qcs/quantizer.hpp"
#include "qcs/rng.hpp"
#include "qcs/sensing.hpp"
#include "qcs/signals.hpp"

namespace py = pybind11;

namespace {

qcs::SetTag tag_for(const std::string& set, int n, int k, int n1, int n2, int r) {
  qcs::SetTag tag;
  tag.kind = qcs::set_kind_from_string(set);
  if (tag.kind == qcs::SetKind::LowRank) {
    if (n1 < 1 || n2 < 1 || r < 1) throw qcs::ConfigError("lowrank set needs n1, n2, r >= 1");
    if (n1 * n2 != n) throw qcs::ConfigError("n1 * n2 must equal the operator's n");
    tag.n1 = n1;
    tag.n2 = n2;
    tag.r = r;
    tag.n = n;
  } else {
    if (k < 1) throw qcs::ConfigError("vector sets need k >= 1");
    tag.n = n;
    tag.k = k;
  }
  return tag;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "quantized compressive sensing: dithered uniform quantization of random "
            "linear measurements, structured-set projectors, projected back projection, "
            "and a reproducible experiment runner";

  py::register_exception<qcs::ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<qcs::NumericalError>(m, "NumericalError", PyExc_RuntimeError);

  py::class_<qcs::SensingOperator>(m, "SensingOperator")
      .def_property_readonly("kind",
                             [](const qcs::SensingOperator& op) { return qcs::to_string(op.kind); })
      .def_readonly("m", &qcs::SensingOperator::m)
      .def_readonly("n", &qcs::SensingOperator::n)
      .def_readonly("seed", &qcs::SensingOperator::seed)
      .def_readonly("rows", &qcs::SensingOperator::rows,
                    "selected transform rows, draw order (subsampled kinds only)")
      .def("apply", &qcs::SensingOperator::apply, py::arg("x"), "Phi x")
      .def("adjoint", &qcs::SensingOperator::adjoint, py::arg("y"), "Phi^T y")
      .def("matrix",
           [](const qcs::SensingOperator& op) {
             if (op.dense.size() > 0) return op.dense;
             Eigen::MatrixXd out(op.m, op.n);
             Eigen::VectorXd e = Eigen::VectorXd::Zero(op.n);
             for (int j = 0; j < op.n; ++j) {
               e[j] = 1.0;
               out.col(j) = op.apply(e);
               e[j] = 0.0;
             }
             return out;
           },
           "materialize Phi as a dense array (columns via apply for fast kinds)");

  py::class_<qcs::Measurements>(m, "Measurements")
      .def_readonly("y", &qcs::Measurements::y)
      .def_readonly("dither", &qcs::Measurements::dither)
      .def_property_readonly("delta",
                             [](const qcs::Measurements& ms) { return ms.config.delta; })
      .def_property_readonly("dithered",
                             [](const qcs::Measurements& ms) {
                               return ms.config.dithering == qcs::Dithering::Uniform;
                             })
      .def_readonly("operator_seed", &qcs::Measurements::operator_seed)
      .def_readonly("dither_seed", &qcs::Measurements::dither_seed);

  py::class_<qcs::Reconstruction>(m, "Reconstruction")
      .def_readonly("estimate", &qcs::Reconstruction::estimate)
      .def_readonly("back_projection", &qcs::Reconstruction::back_projection)
      .def_readonly("iterations", &qcs::Reconstruction::iterations)
      .def_readonly("step", &qcs::Reconstruction::step);

  m.def("derive_seed",
        [](std::uint64_t base, const std::vector<std::uint64_t>& tags) {
          std::uint64_t s = base;
          for (std::uint64_t t : tags) s = qcs::derive_seed(s, {t});
          return s;
        },
        py::arg("base"), py::arg("tags"),
        "child seed from a base seed and a tag path, same chain the runner uses");

  // signal generators; seed pins the draw
  m.def("gen_sparse",
        [](int n, int k, std::uint64_t seed) {
          qcs::Rng rng(seed);
          return qcs::gen_sparse(n, k, rng).values;
        },
        py::arg("n"), py::arg("k"), py::arg("seed"),
        "k nonzeros, uniform support, standard normal amplitudes, not normalized");
  m.def("gen_compressible",
        [](int n, int k, std::uint64_t seed) {
          qcs::Rng rng(seed);
          return qcs::gen_compressible(n, k, rng).values;
        },
        py::arg("n"), py::arg("k"), py::arg("seed"),
        "unit-norm member of the l1 x l2 intersection set for sparsity budget k");
  m.def("gen_lowrank",
        [](int n1, int n2, int r, std::uint64_t seed) {
          qcs::Rng rng(seed);
          return qcs::gen_lowrank(n1, n2, r, rng).values;
        },
        py::arg("n1"), py::arg("n2"), py::arg("r"), py::arg("seed"),
        "vec of a unit Frobenius norm rank-r matrix (column-major)");
  m.def("reshape", &qcs::reshape, py::arg("v"), py::arg("n1"), py::arg("n2"),
        "column-major vector to matrix");
  m.def("vec", &qcs::vec, py::arg("X"), "column-major matrix to vector");

  m.def("make_operator",
        [](const std::string& kind, int m_, int n, std::uint64_t seed) {
          return qcs::make_operator(qcs::sensing_kind_from_string(kind), m_, n, seed);
        },
        py::arg("kind"), py::arg("m"), py::arg("n"), py::arg("seed"),
        "kind in {gaussian, bernoulli, pdct, sors}; same arguments, same operator");

  m.def("quantize", py::overload_cast<double, double>(&qcs::quantize), py::arg("u"),
        py::arg("delta"), "delta * floor(u / delta)");
  m.def("quantize", py::overload_cast<const Eigen::VectorXd&, double>(&qcs::quantize),
        py::arg("u"), py::arg("delta"));
  m.def("draw_dither",
        [](int m_, double delta, std::uint64_t seed) {
          qcs::Rng rng(seed);
          return qcs::draw_dither(m_, delta, rng);
        },
        py::arg("m"), py::arg("delta"), py::arg("seed"), "iid uniform on [0, delta)");
  m.def("sense",
        [](const qcs::SensingOperator& op, const Eigen::VectorXd& x, double delta,
           bool dithered, std::uint64_t dither_seed) {
          const qcs::QuantizerConfig cfg{delta,
                                         dithered ? qcs::Dithering::Uniform : qcs::Dithering::None};
          return qcs::sense(op, x, cfg, dither_seed);
        },
        py::arg("op"), py::arg("x"), py::arg("delta") = 1.0, py::arg("dithered") = true,
        py::arg("dither_seed") = 0, "y = quantize(Phi x + dither, delta)");
  m.def("dither_expectation_check",
        [](double a, double delta, long num_samples, std::uint64_t seed) {
          qcs::Rng rng(seed);
          return qcs::dither_expectation_check(a, delta, num_samples, rng);
        },
        py::arg("a"), py::arg("delta"), py::arg("num_samples"), py::arg("seed"),
        "mean of quantize(a + dither) over fresh dithers; unbiased, so close to a");

  m.def("hard_threshold", &qcs::hard_threshold, py::arg("z"), py::arg("k"),
        "keep the k largest magnitudes, ties broken by lower index");
  m.def("l1ball_project", &qcs::l1ball_project, py::arg("z"), py::arg("tau"));
  m.def("l2ball_project", &qcs::l2ball_project, py::arg("z"), py::arg("radius"));
  m.def("compressible_project", &qcs::compressible_project, py::arg("z"), py::arg("k"),
        py::arg("tol") = 1e-10, py::arg("max_iter") = 1000,
        "Euclidean projection onto the intersection of the l1 ball of radius sqrt(k) "
        "and the unit l2 ball");
  m.def("lowrank_project", &qcs::lowrank_project, py::arg("Z"), py::arg("r"),
        "best rank-r approximation in Frobenius norm");

  m.def("dct2_orthonormal", &qcs::dct2_orthonormal, py::arg("x"));
  m.def("idct2_orthonormal", &qcs::idct2_orthonormal, py::arg("y"));

  m.def("back_project", &qcs::back_project, py::arg("op"), py::arg("y"), "(1/m) Phi^T y");
  m.def("pbp_reconstruct",
        [](const qcs::SensingOperator& op, const qcs::Measurements& ms, const std::string& set,
           int k, int n1, int n2, int r) {
          const auto proj = qcs::projector_for(tag_for(set, op.n, k, n1, n2, r));
          return qcs::pbp_reconstruct(op, ms, proj);
        },
        py::arg("op"), py::arg("ms"), py::arg("set") = "sparse", py::arg("k") = 0,
        py::arg("n1") = 0, py::arg("n2") = 0, py::arg("r") = 0,
        "project (1/m) Phi^T y onto the signal set named by `set`");
  m.def("qiht",
        [](const qcs::SensingOperator& op, const qcs::Measurements& ms, const std::string& set,
           int k, int n1, int n2, int r, double mu, int iterations) {
          const auto proj = qcs::projector_for(tag_for(set, op.n, k, n1, n2, r));
          return qcs::qiht(op, ms, proj, mu, iterations);
        },
        py::arg("op"), py::arg("ms"), py::arg("set") = "sparse", py::arg("k") = 0,
        py::arg("n1") = 0, py::arg("n2") = 0, py::arg("r") = 0, py::arg("mu") = 1.0,
        py::arg("iterations") = 10,
        "experimental iterative refinement; one iteration at mu=1 equals pbp_reconstruct");

  m.def("run_experiment_csv",
        [](const std::string& text, int threads) {
          const auto cfg = qcs::parse_config(text);
          return qcs::csv_string(qcs::run_experiment(cfg, threads));
        },
        py::arg("config_text"), py::arg("threads") = 1,
        py::call_guard<py::gil_scoped_release>(),
        "parse a flat key = value config, run it, return the CSV (byte-stable across "
        "thread counts)");
}
