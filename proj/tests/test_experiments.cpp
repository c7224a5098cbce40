#include <doctest.h>

#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "qmccop/experiments.hpp"

using namespace qmccop;
using namespace qmccop::experiments;
using copulas::Copula;
using copulas::SamplerKind;
namespace sf = qmccop::specfun;

namespace {

ExperimentConfig basic_config(Copula c, SamplerKind s, Functional f, std::vector<int> grid,
                              int B, lds::SequenceKind seq) {
  ExperimentConfig cfg{std::move(c), s, Method{}, std::move(grid), B, std::move(f), 20250801u};
  int k = copulas::sampler_input_dim(cfg.sampler, cfg.copula);
  switch (seq) {
    case lds::SequenceKind::Sobol: cfg.method.sequence = lds::SequenceSpec::sobol(k); break;
    case lds::SequenceKind::Halton: cfg.method.sequence = lds::SequenceSpec::halton(k); break;
    case lds::SequenceKind::GeneralizedHalton:
      cfg.method.sequence = lds::SequenceSpec::generalized_halton(k);
      break;
    case lds::SequenceKind::PseudoRandom:
      cfg.method.sequence = lds::SequenceSpec::pseudorandom(k, 7);
      break;
  }
  return cfg;
}

}  // namespace

TEST_SUITE("experiments") {

TEST_CASE("psi1 evaluation") {
  Copula c = Copula::clayton(2.0, 3);
  std::vector<double> ones(9, 1.0);
  Functional f;
  f.kind = FunctionalKind::Psi1;
  CHECK(evaluate_functional(f, c, ones.data(), 3, 3).estimate == 3.0);
  CHECK(functional_truth(f, 5) == 1.0);
}

TEST_CASE("psi2 truth value") {
  Functional f;
  f.kind = FunctionalKind::Psi2;
  CHECK(std::abs(functional_truth(f, 1) - 9.0 / 8.0) < 1e-15);
  CHECK(std::abs(functional_truth(f, 2) - 1.21875) < 1e-15);
  CHECK(std::abs(functional_truth(f, 5) - 1.41632080078125) < 1e-13);

  // d = 1: rosenblatt is the identity, estimate approaches 9/8
  Copula c = Copula::gauss(Matrix::identity(1));
  lds::PointSet p = lds::generate(lds::SequenceSpec::sobol(1), 1 << 14, 2);
  std::vector<double> U(p.pts);
  double est = evaluate_functional(f, c, U.data(), p.n, 1).estimate;
  CHECK(std::abs(est - 9.0 / 8.0) < 1e-3);
}

TEST_CASE("monte carlo psi1 lands near 1") {
  Functional f;
  f.kind = FunctionalKind::Psi1;
  ExperimentConfig cfg = basic_config(Copula::clayton(2.0, 2), SamplerKind::CDM, f, {10000}, 1,
                                      lds::SequenceKind::PseudoRandom);
  ExperimentResult res = run_experiment(cfg);
  CHECK(std::abs(res.records[0].replicateMean - 1.0) < 0.05);
}

TEST_CASE("fit alpha") {
  std::vector<double> n = {1000, 2000, 4000, 8000, 16000};
  std::vector<double> v1, v05, v15;
  SplitMix64 g(3);
  for (double x : n) {
    v1.push_back(7.0 / x);
    v05.push_back(2.0 / std::sqrt(x));
    v15.push_back(3.0 * std::pow(x, -1.5) * (1.0 + 0.01 * (2.0 * g.next_double() - 1.0)));
  }
  CHECK(std::abs(fit_alpha(n, v1) - 1.0) < 1e-12);
  CHECK(std::abs(fit_alpha(n, v05) - 0.5) < 1e-12);
  CHECK(std::abs(fit_alpha(n, v15) - 1.5) < 0.05);
  CHECK_THROWS_AS(fit_alpha({100, 200}, {1.0, 2.0}), std::invalid_argument);
  CHECK_THROWS_AS(fit_alpha(n, {1.0, 0.0, 1.0, 1.0, 1.0}), std::invalid_argument);
}

TEST_CASE("determinism and thread independence") {
  Functional f;
  f.kind = FunctionalKind::Psi1;
  ExperimentConfig cfg = basic_config(Copula::clayton(2.0, 3), SamplerKind::MO, f, {512, 1024},
                                      8, lds::SequenceKind::Sobol);
  ExperimentResult a = run_experiment(cfg);
  ExperimentResult b = run_experiment(cfg);
  cfg.threads = 4;
  ExperimentResult c = run_experiment(cfg);
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    CHECK(a.records[i].estimates == b.records[i].estimates);
    CHECK(a.records[i].estimates == c.records[i].estimates);
  }
}

TEST_CASE("var estimator consistency in the degenerate 1-d case") {
  Functional f;
  f.kind = FunctionalKind::VaR;
  f.level = 0.99;
  f.margins = {sf::Margin::exponential(1.0)};
  ExperimentConfig cfg = basic_config(Copula::gauss(Matrix::identity(1)), SamplerKind::CDM, f,
                                      {200000}, 1, lds::SequenceKind::PseudoRandom);
  ExperimentResult res = run_experiment(cfg);
  double want = 4.605170185988091;  // -log(0.01)
  CHECK(std::abs(res.records[0].replicateMean - want) / want < 0.02);
}

TEST_CASE("es dominates var replicate by replicate") {
  const int n = 10000, B = 5, d = 3;
  Copula c = Copula::clayton(2.0, d);
  std::vector<sf::Margin> margins(d, sf::Margin::lognormal(std::log(100.0) + 0.0001 - 0.02, 0.2));
  Functional fvar, fes;
  fvar.kind = FunctionalKind::VaR;
  fvar.margins = margins;
  fes.kind = FunctionalKind::ES;
  fes.margins = margins;

  lds::Randomizer r{lds::RandomizationKind::DigitalShift, 77u, 0};
  auto reps = lds::randomized_replicates(lds::SequenceSpec::sobol(d), n, B, r, 2);
  for (const auto& rep : reps) {
    std::vector<double> U = copulas::sample_matrix(c, SamplerKind::CDM, rep);
    ReplicateOutcome v = evaluate_functional(fvar, c, U.data(), n, d);
    ReplicateOutcome e = evaluate_functional(fes, c, U.data(), n, d);
    CHECK(!v.degenerate);
    CHECK(!e.degenerate);
    CHECK(e.estimate >= v.estimate);
  }
}

TEST_CASE("degenerate tail replicate is flagged") {
  // identical rows make S constant, so no strict exceedance exists
  const int n = 100, d = 2;
  Copula c = Copula::clayton(2.0, d);
  std::vector<double> U(n * d, 0.5);
  Functional f;
  f.kind = FunctionalKind::ES;
  f.level = 0.5;
  f.margins = std::vector<sf::Margin>(d, sf::Margin::exponential(1.0));
  ReplicateOutcome o = evaluate_functional(f, c, U.data(), n, d);
  CHECK(o.degenerate);
  CHECK(std::isnan(o.estimate));
}

TEST_CASE("config validation") {
  Functional f;
  f.kind = FunctionalKind::ES;
  f.level = 0.99;
  f.margins = std::vector<sf::Margin>(2, sf::Margin::exponential(1.0));
  ExperimentConfig cfg = basic_config(Copula::clayton(2.0, 2), SamplerKind::CDM, f, {100}, 2,
                                      lds::SequenceKind::Sobol);
  CHECK_THROWS_AS(run_experiment(cfg), ConfigError);  // level*n too small

  ExperimentConfig bad = basic_config(Copula::clayton(2.0, 2), SamplerKind::StochT, Functional{},
                                      {1000}, 2, lds::SequenceKind::Sobol);
  CHECK_THROWS_AS(run_experiment(bad), std::exception);  // sampler incompatible with family
}

TEST_CASE("unbiasedness across copulas and samplers") {
  // grand mean of pseudo-random psi1 estimates within 4 standard errors of 1
  const int B = 100, n = 2048;
  Functional f;
  f.kind = FunctionalKind::Psi1;
  struct Cell {
    Copula c;
    SamplerKind s;
  };
  for (int d : {2, 5}) {
    std::vector<Cell> cells = {{Copula::clayton(2.0, d), SamplerKind::CDM},
                               {Copula::clayton(2.0, d), SamplerKind::MO},
                               {Copula::t_exchangeable(d, 3.0, 0.5), SamplerKind::CDM},
                               {Copula::t_exchangeable(d, 3.0, 0.5), SamplerKind::StochT},
                               {Copula::gauss_exchangeable(d, 0.5), SamplerKind::CDM},
                               {Copula::gauss_exchangeable(d, 0.5), SamplerKind::StochGauss}};
    for (auto& cell : cells) {
      ExperimentConfig cfg = basic_config(cell.c, cell.s, f, {n}, B,
                                          lds::SequenceKind::PseudoRandom);
      ExperimentResult res = run_experiment(cfg);
      const NRecord& rec = res.records[0];
      double se = std::sqrt(rec.replicateVariance / B);
      INFO("d=", d, " sampler=", copulas::sampler_name(cell.s),
           " family=", cell.c.family_name());
      CHECK(std::abs(rec.replicateMean - 1.0) < 4.0 * se);
    }
  }
}

TEST_CASE("kendall tau estimator") {
  // perfect concordance / discordance
  std::vector<double> x = {1, 2, 3, 4, 5}, y = {2, 4, 6, 8, 10}, yr = {5, 4, 3, 2, 1};
  CHECK(kendall_tau(x.data(), y.data(), 5) == 1.0);
  CHECK(kendall_tau(x.data(), yr.data(), 5) == -1.0);

  // independence: tau of a big pseudo-random sample is near 0
  lds::PointSet p = lds::generate(lds::SequenceSpec::pseudorandom(2, 17), 20000);
  std::vector<double> a(p.n), b(p.n);
  for (int i = 0; i < p.n; ++i) {
    a[i] = p(i, 0);
    b[i] = p(i, 1);
  }
  CHECK(std::abs(kendall_tau(a.data(), b.data(), p.n)) < 0.02);
}

}  // TEST_SUITE
