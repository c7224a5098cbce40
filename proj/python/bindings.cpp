#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstring>
#include <sstream>

#include "qmccop/config.hpp"
#include "qmccop/copulas.hpp"
#include "qmccop/discrepancy.hpp"
#include "qmccop/experiments.hpp"
#include "qmccop/lds.hpp"
#include "qmccop/specfun.hpp"

namespace py = pybind11;
using namespace qmccop;
using copulas::Copula;
using copulas::SamplerKind;

namespace {

using Array = py::array_t<double, py::array::c_style | py::array::forcecast>;

lds::SequenceSpec make_spec(const std::string& kind, int dimension, std::uint64_t seed) {
  if (kind == "halton") return lds::SequenceSpec::halton(dimension);
  if (kind == "ghalton") return lds::SequenceSpec::generalized_halton(dimension);
  if (kind == "sobol") return lds::SequenceSpec::sobol(dimension);
  if (kind == "pseudorandom") return lds::SequenceSpec::pseudorandom(dimension, seed);
  throw std::invalid_argument("unknown sequence kind: " + kind);
}

lds::RandomizationKind make_randomization(const std::string& kind) {
  if (kind == "none") return lds::RandomizationKind::None;
  if (kind == "shift") return lds::RandomizationKind::Shift;
  if (kind == "digital") return lds::RandomizationKind::DigitalShift;
  throw std::invalid_argument("unknown randomization: " + kind);
}

SamplerKind make_sampler(const std::string& kind) {
  if (kind == "cdm") return SamplerKind::CDM;
  if (kind == "mo") return SamplerKind::MO;
  if (kind == "stochgauss") return SamplerKind::StochGauss;
  if (kind == "stocht") return SamplerKind::StochT;
  throw std::invalid_argument("unknown sampler: " + kind);
}

py::array_t<double> matrix_to_numpy(const std::vector<double>& m, int n, int k) {
  py::array_t<double> out({n, k});
  std::memcpy(out.mutable_data(), m.data(), m.size() * sizeof(double));
  return out;
}

py::array_t<double> pointset_to_numpy(const lds::PointSet& p) {
  return matrix_to_numpy(p.pts, p.n, p.k);
}

Matrix numpy_to_corr(const Array& a) {
  auto buf = a.request();
  if (buf.ndim != 2 || buf.shape[0] != buf.shape[1])
    throw std::invalid_argument("correlation must be a square matrix");
  int d = static_cast<int>(buf.shape[0]);
  Matrix m(d);
  const double* src = static_cast<const double*>(buf.ptr);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m(i, j) = src[i * d + j];
  return m;
}

struct MatrixView {
  std::vector<double> data;
  int n = 0, d = 0;
};

MatrixView view_of(const Array& a) {
  auto buf = a.request();
  if (buf.ndim != 2) throw std::invalid_argument("expected an (n, d) array");
  MatrixView v;
  v.n = static_cast<int>(buf.shape[0]);
  v.d = static_cast<int>(buf.shape[1]);
  const double* src = static_cast<const double*>(buf.ptr);
  v.data.assign(src, src + static_cast<std::size_t>(v.n) * v.d);
  return v;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "quasi-Monte Carlo copula toolkit (C++ core)";

  py::register_exception<NumericalError>(m, "NumericalError", PyExc_RuntimeError);

  // ------------------------------------------------------------- sequences
  m.def(
      "generate",
      [](const std::string& kind, int dimension, int n, std::uint64_t start_index,
         std::uint64_t seed) {
        return pointset_to_numpy(lds::generate(make_spec(kind, dimension, seed), n, start_index));
      },
      py::arg("kind"), py::arg("dimension"), py::arg("n"), py::arg("start_index") = 1,
      py::arg("seed") = 0,
      "Deterministic low-discrepancy points (or seeded pseudo-random points).");

  m.def(
      "randomized_replicates",
      [](const std::string& kind, int dimension, int n, int B, const std::string& randomization,
         std::uint64_t seed, std::uint64_t start_index) {
        lds::Randomizer r{make_randomization(randomization), seed, 0};
        auto reps = lds::randomized_replicates(make_spec(kind, dimension, seed), n, B, r,
                                               start_index);
        py::list out;
        for (const auto& rep : reps) out.append(pointset_to_numpy(rep));
        return out;
      },
      py::arg("kind"), py::arg("dimension"), py::arg("n"), py::arg("B"),
      py::arg("randomization") = "digital", py::arg("seed") = 0, py::arg("start_index") = 2);

  m.def("radical_inverse", &lds::radical_inverse, py::arg("i"), py::arg("base"));
  m.def("scrambled_radical_inverse", &lds::scrambled_radical_inverse, py::arg("i"),
        py::arg("base"), py::arg("factor"));

  // --------------------------------------------------------------- copulas
  py::class_<Copula>(m, "Copula")
      .def_property_readonly("dim", &Copula::dim)
      .def_property_readonly("family", &Copula::family_name)
      .def("__repr__", [](const Copula& c) {
        return "Copula(" + std::string(c.family_name()) + ", " + c.params_string() + ")";
      });

  m.def("clayton", &Copula::clayton, py::arg("theta"), py::arg("d"));
  m.def("gumbel", &Copula::gumbel, py::arg("theta"), py::arg("d"));
  m.def(
      "gauss", [](int d, double rho) { return Copula::gauss_exchangeable(d, rho); }, py::arg("d"),
      py::arg("rho"), "Exchangeable Gauss copula.");
  m.def(
      "gauss_corr", [](const Array& corr) { return Copula::gauss(numpy_to_corr(corr)); },
      py::arg("correlation"));
  m.def(
      "student_t", [](int d, double nu, double rho) { return Copula::t_exchangeable(d, nu, rho); },
      py::arg("d"), py::arg("nu"), py::arg("rho"));
  m.def(
      "student_t_corr", [](double nu, const Array& corr) { return Copula::t(nu, numpy_to_corr(corr)); },
      py::arg("nu"), py::arg("correlation"));
  m.def("marshall_olkin", &Copula::marshall_olkin, py::arg("alpha1"), py::arg("alpha2"));
  m.def("mixture", &Copula::mixture, py::arg("lambda_"), py::arg("d"));

  m.def(
      "copula_cdf",
      [](const Copula& c, const std::vector<double>& u) { return copulas::copula_cdf(c, u); },
      py::arg("copula"), py::arg("u"));
  m.def(
      "cond_cdf",
      [](const Copula& c, int j, const std::vector<double>& u) {
        if (static_cast<int>(u.size()) != j)
          throw std::invalid_argument("cond_cdf: u must hold (u_1, ..., u_j)");
        return copulas::cond_cdf(c, j, u.data());
      },
      py::arg("copula"), py::arg("j"), py::arg("u"));
  m.def(
      "cond_quantile",
      [](const Copula& c, int j, const std::vector<double>& prefix, double p) {
        if (static_cast<int>(prefix.size()) != j - 1)
          throw std::invalid_argument("cond_quantile: prefix must hold (u_1, ..., u_{j-1})");
        return copulas::cond_quantile(c, j, prefix.data(), p);
      },
      py::arg("copula"), py::arg("j"), py::arg("prefix"), py::arg("p"));

  m.def(
      "sample",
      [](const Copula& c, const std::string& sampler, const Array& points) {
        MatrixView v = view_of(points);
        std::vector<double> u =
            copulas::sample_matrix(c, make_sampler(sampler), v.data.data(), v.n, v.d);
        return matrix_to_numpy(u, v.n, c.dim());
      },
      py::arg("copula"), py::arg("sampler"), py::arg("points"),
      "Transform an (n, k) point array into an (n, d) copula sample.");

  m.def("sampler_input_dim", [](const Copula& c, const std::string& sampler) {
    return copulas::sampler_input_dim(make_sampler(sampler), c);
  });

  m.def(
      "cdm_sample",
      [](const Copula& c, const Array& v) {
        MatrixView in = view_of(v);
        if (in.d != c.dim()) throw std::invalid_argument("cdm_sample: expected (n, d) input");
        std::vector<double> out(in.data.size());
        for (int i = 0; i < in.n; ++i)
          copulas::cdm_sample(c, in.data.data() + static_cast<std::size_t>(i) * in.d,
                              out.data() + static_cast<std::size_t>(i) * in.d);
        return matrix_to_numpy(out, in.n, in.d);
      },
      py::arg("copula"), py::arg("v"));
  m.def(
      "rosenblatt",
      [](const Copula& c, const Array& u) {
        MatrixView in = view_of(u);
        if (in.d != c.dim()) throw std::invalid_argument("rosenblatt: expected (n, d) input");
        std::vector<double> out(in.data.size());
        for (int i = 0; i < in.n; ++i)
          copulas::rosenblatt(c, in.data.data() + static_cast<std::size_t>(i) * in.d,
                              out.data() + static_cast<std::size_t>(i) * in.d);
        return matrix_to_numpy(out, in.n, in.d);
      },
      py::arg("copula"), py::arg("u"));

  // ----------------------------------------------------------- discrepancy
  auto as_view = [](const Array& pts, MatrixView& store) {
    store = view_of(pts);
    return discrepancy::PointsView(store.data.data(), store.n, store.d);
  };
  m.def(
      "star_discrepancy_exact",
      [as_view](const Array& pts) {
        MatrixView s;
        return discrepancy::star_discrepancy_exact(as_view(pts, s));
      },
      py::arg("points"));
  m.def(
      "l2_star_uniform",
      [as_view](const Array& pts) {
        MatrixView s;
        return discrepancy::l2_star_uniform(as_view(pts, s));
      },
      py::arg("points"));
  m.def(
      "l2_star_copula",
      [as_view](const Array& pts, const Copula& c, double tol) {
        MatrixView s;
        return discrepancy::l2_star_copula_discrepancy(as_view(pts, s), c, tol);
      },
      py::arg("points"), py::arg("copula"), py::arg("quad_tol") = 1e-6);
  m.def(
      "l2_star_copula_mixture",
      [as_view](const Array& pts, double lam) {
        MatrixView s;
        return discrepancy::l2_star_copula_discrepancy_mixture(as_view(pts, s), lam);
      },
      py::arg("points"), py::arg("lambda_"));
  m.def(
      "star_copula_grid",
      [as_view](const Array& pts, const Copula& c) {
        MatrixView s;
        return discrepancy::star_copula_discrepancy_grid(as_view(pts, s), c);
      },
      py::arg("points"), py::arg("copula"));

  // ------------------------------------------------------------- specfun
  m.def("normal_cdf", &specfun::normal_cdf);
  m.def("normal_quantile", &specfun::normal_quantile);
  m.def("t_cdf", &specfun::t_cdf, py::arg("x"), py::arg("nu"));
  m.def("t_quantile", &specfun::t_quantile, py::arg("p"), py::arg("nu"));
  m.def("gamma_quantile", &specfun::gamma_quantile, py::arg("p"), py::arg("shape"),
        py::arg("rate"));
  m.def("kendall_tau_maps", [](double tau) {
    auto maps = specfun::kendall_tau_maps(tau);
    return py::make_tuple(maps.theta_clayton, maps.rho_elliptical);
  });

  // ----------------------------------------------------------- experiments
  m.def(
      "kendall_tau",
      [](const std::vector<double>& x, const std::vector<double>& y) {
        if (x.size() != y.size()) throw std::invalid_argument("kendall_tau: length mismatch");
        return experiments::kendall_tau(x.data(), y.data(), static_cast<int>(x.size()));
      },
      py::arg("x"), py::arg("y"));
  m.def("fit_alpha", &experiments::fit_alpha, py::arg("n"), py::arg("values"));

  m.def(
      "run_experiment_json",
      [](const std::string& json_text, int threads) {
        config::ExperimentFileConfig file = config::parse_experiment_config(json_text);
        py::list out;
        for (const auto& method : file.methods) {
          experiments::ExperimentConfig cfg{file.copula,     file.sampler, method,
                                            file.nGrid,      file.B,       file.functional,
                                            file.masterSeed, file.skipOrigin, threads};
          experiments::ExperimentResult res = experiments::run_experiment(cfg);
          py::dict d;
          d["method"] = res.method;
          d["sequence"] = res.sequence;
          d["randomization"] = res.randomization;
          d["alpha"] = res.fittedAlpha;
          py::list recs;
          for (const auto& rec : res.records) {
            py::dict r;
            r["n"] = rec.n;
            r["estimates"] = rec.estimates;
            r["mean"] = rec.replicateMean;
            r["variance"] = rec.replicateVariance;
            r["mean_abs_error"] = rec.meanAbsError;
            recs.append(r);
          }
          d["records"] = recs;
          out.append(d);
        }
        return out;
      },
      py::arg("config_json"), py::arg("threads") = 1,
      "Run an experiment sweep from the same JSON schema the CLI accepts.");
}
