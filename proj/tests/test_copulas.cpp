#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "qmccop/copulas.hpp"
#include "qmccop/experiments.hpp"
#include "qmccop/specfun.hpp"

using namespace qmccop;
using copulas::Copula;
using copulas::SamplerKind;
namespace sf = qmccop::specfun;

namespace {

std::vector<double> interior_point(int d, SplitMix64& g) {
  std::vector<double> v(d);
  for (auto& x : v) x = 0.01 + 0.98 * g.next_double();
  return v;
}

}  // namespace

TEST_SUITE("copulas") {

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(Copula::clayton(0.0, 2), ConfigError);
  CHECK_THROWS_AS(Copula::gumbel(0.9, 2), ConfigError);
  CHECK_THROWS_AS(Copula::marshall_olkin(0.0, 0.5), ConfigError);
  CHECK_THROWS_AS(Copula::mixture(0.0, 2), ConfigError);
  CHECK_THROWS_AS(Copula::t(-1.0, Matrix::identity(2)), ConfigError);
  CHECK_THROWS_AS(Copula::gauss_exchangeable(3, 1.2), ConfigError);

  Matrix bad = Matrix::identity(2);
  bad(0, 1) = bad(1, 0) = 1.5;  // not PD
  CHECK_THROWS_AS(Copula::gauss(bad), NumericalError);
  Matrix asym = Matrix::identity(2);
  asym(0, 1) = 0.2;
  CHECK_THROWS_AS(Copula::gauss(asym), ConfigError);
}

TEST_CASE("copula cdf") {
  Copula cl = Copula::clayton(2.0, 2);
  CHECK(std::abs(copulas::copula_cdf(cl, {0.5, 0.5}) - 1.0 / std::sqrt(7.0)) < 1e-15);
  CHECK(copulas::copula_cdf(cl, {0.0, 0.7}) == 0.0);
  CHECK(copulas::copula_cdf(cl, {1.0, 1.0}) == 1.0);

  Copula mo = Copula::marshall_olkin(0.25, 0.75);
  for (double u : {0.05, 0.3, 0.77, 0.99})
    CHECK(std::abs(copulas::copula_cdf(mo, {u, 1.0}) - u) < 1e-15);

  Copula ind = Copula::mixture(1.0, 3);
  CHECK(std::abs(copulas::copula_cdf(ind, {0.2, 0.5, 0.8}) - 0.2 * 0.5 * 0.8) < 1e-15);

  // grounded boundary behavior across families
  for (const Copula& c : {Copula::gumbel(2.5, 3), Copula::clayton(0.7, 3), Copula::mixture(0.5, 3)}) {
    CHECK(copulas::copula_cdf(c, {0.4, 0.0, 0.9}) == 0.0);
    CHECK(copulas::copula_cdf(c, {1.0, 1.0, 1.0}) == 1.0);
  }

  SUBCASE("exchangeability") {
    SplitMix64 g(3);
    for (const Copula& c : {Copula::clayton(1.7, 4), Copula::gumbel(2.5, 4),
                            Copula::mixture(0.4, 4)}) {
      std::vector<double> u = interior_point(4, g);
      double base = copulas::copula_cdf(c, u);
      std::sort(u.begin(), u.end());
      do {
        CHECK(std::abs(copulas::copula_cdf(c, u) - base) < 1e-14);
      } while (std::next_permutation(u.begin(), u.end()));
    }
  }
  SUBCASE("elliptical cdf is unavailable") {
    CHECK_THROWS_AS(copulas::copula_cdf(Copula::gauss_exchangeable(2, 0.4), {0.5, 0.5}),
                    std::domain_error);
    CHECK_THROWS_AS(copulas::copula_cdf(Copula::t_exchangeable(2, 4.0, 0.4), {0.5, 0.5}),
                    std::domain_error);
    CHECK(!copulas::cdf_available(Copula::gauss_exchangeable(2, 0.4)));
    CHECK(copulas::cdf_available(Copula::clayton(1.0, 2)));
  }
}

TEST_CASE("conditional cdf") {
  SUBCASE("gauss independence") {
    Copula c = Copula::gauss_exchangeable(2, 0.0);
    for (double u1 : {0.2, 0.5, 0.9})
      for (double u2 : {0.1, 0.66, 0.98}) {
        double u[2] = {u1, u2};
        CHECK(std::abs(copulas::cond_cdf(c, 2, u) - u2) < 1e-13);
      }
  }
  SUBCASE("clayton independence limit") {
    Copula c = Copula::clayton(1e-8, 3);
    double worst = 0.0;
    for (double u1 : {0.2, 0.7})
      for (double u2 : {0.3, 0.9})
        for (double u3 : {0.15, 0.55}) {
          double u[3] = {u1, u2, u3};
          worst = std::max(worst, std::abs(copulas::cond_cdf(c, 3, u) - u3));
        }
    CHECK(worst < 1e-5);
  }
  SUBCASE("t with huge nu matches gauss") {
    Copula tc = Copula::t_exchangeable(2, 1e6, 0.7);
    Copula gc = Copula::gauss_exchangeable(2, 0.7);
    double worst = 0.0;
    for (double u1 = 0.05; u1 < 0.96; u1 += 0.1)
      for (double u2 = 0.05; u2 < 0.96; u2 += 0.1) {
        double u[2] = {u1, u2};
        worst = std::max(worst, std::abs(copulas::cond_cdf(tc, 2, u) - copulas::cond_cdf(gc, 2, u)));
      }
    CHECK(worst < 1e-4);
  }
  SUBCASE("gumbel closed form at d=2") {
    Copula g2 = Copula::gumbel(2.0, 2);
    double u[2] = {0.3, 0.7};
    CHECK(std::abs(copulas::cond_cdf(g2, 2, u) - 0.9104803864754554) < 1e-12);
    Copula g3 = Copula::gumbel(3.0, 2);
    double v[2] = {0.5, 0.5};
    CHECK(std::abs(copulas::cond_cdf(g3, 2, v) - 0.5261012136979311) < 1e-12);
    // theta = 1 is independence
    Copula g1 = Copula::gumbel(1.0, 2);
    double w[2] = {0.31, 0.87};
    CHECK(std::abs(copulas::cond_cdf(g1, 2, w) - 0.87) < 1e-12);
  }
  SUBCASE("derivative-ratio oracle at d = 3") {
    // C(u_3 | u_1, u_2) = D_12 C(u_1,u_2,u_3) / D_12 C(u_1,u_2), with the
    // mixed partials taken by central differences on the plain CDF
    auto mixed12 = [](const Copula& c, double u1, double u2, double u3) {
      const double h = 1e-4;
      auto f = [&](double a, double b) { return copulas::copula_cdf(c, {a, b, u3}); };
      return (f(u1 + h, u2 + h) - f(u1 + h, u2 - h) - f(u1 - h, u2 + h) + f(u1 - h, u2 - h)) /
             (4.0 * h * h);
    };
    for (const Copula& c : {Copula::gumbel(2.0, 3), Copula::clayton(1.5, 3)}) {
      double worst = 0.0;
      for (double u1 : {0.25, 0.6})
        for (double u2 : {0.35, 0.8})
          for (double u3 : {0.2, 0.5, 0.9}) {
            double oracle = mixed12(c, u1, u2, u3) / mixed12(c, u1, u2, 1.0);
            double u[3] = {u1, u2, u3};
            worst = std::max(worst, std::abs(copulas::cond_cdf(c, 3, u) - oracle));
          }
      CHECK(worst < 1e-5);
    }
  }
  SUBCASE("argument validation") {
    Copula c = Copula::clayton(2.0, 3);
    double u[3] = {0.5, 0.0, 0.5};
    CHECK_THROWS_AS(copulas::cond_cdf(c, 2, u), std::invalid_argument);
    CHECK_THROWS_AS(copulas::cond_cdf(c, 1, u), std::invalid_argument);
    CHECK_THROWS_AS(copulas::cond_cdf(c, 4, u), std::invalid_argument);
  }
}

TEST_CASE("conditional quantile") {
  SUBCASE("clayton closed form") {
    Copula c = Copula::clayton(2.0, 2);
    double u1 = 0.5;
    CHECK(std::abs(copulas::cond_quantile(c, 2, &u1, 0.5) - 0.5463906428428872) < 1e-12);
  }
  SUBCASE("gauss median is the conditional mean") {
    for (double rho : {-0.4, 0.0, 0.6, 0.95}) {
      Copula c = Copula::gauss_exchangeable(2, rho);
      double u1 = 0.5;
      CHECK(std::abs(copulas::cond_quantile(c, 2, &u1, 0.5) - 0.5) < 1e-13);
    }
  }
  SUBCASE("strictly increasing in p") {
    SplitMix64 g(11);
    for (const Copula& c :
         {Copula::gauss_exchangeable(3, 0.5), Copula::t_exchangeable(3, 3.0, 0.5),
          Copula::clayton(2.0, 3), Copula::gumbel(2.0, 3)}) {
      std::vector<double> prefix = interior_point(2, g);
      double prev = 0.0;
      bool increasing = true;
      for (int i = 1; i < 1000; ++i) {
        double q = copulas::cond_quantile(c, 3, prefix.data(), i / 1000.0);
        if (q <= prev) increasing = false;
        prev = q;
      }
      CHECK(increasing);
    }
  }
  SUBCASE("round trip against cond_cdf") {
    SplitMix64 g(13);
    for (const Copula& c :
         {Copula::gauss_exchangeable(4, 0.3), Copula::t_exchangeable(4, 5.0, 0.4),
          Copula::clayton(1.5, 4), Copula::gumbel(2.5, 4)}) {
      double worst = 0.0;
      for (int rep = 0; rep < 25; ++rep) {
        std::vector<double> u = interior_point(4, g);
        double p = 0.02 + 0.96 * g.next_double();
        double q = copulas::cond_quantile(c, 4, u.data(), p);
        u[3] = q;
        worst = std::max(worst, std::abs(copulas::cond_cdf(c, 4, u.data()) - p));
      }
      CHECK(worst < 1e-9);
    }
  }
}

TEST_CASE("marshall-olkin piecewise inverse") {
  Copula mo = Copula::marshall_olkin(0.25, 0.75);
  double u1 = 0.5;
  double k = std::pow(u1, 0.25 * (1.0 / 0.75 - 1.0));
  double low = (1.0 - 0.25) * k;

  // atom branch returns u1^(alpha1/alpha2) on the open middle interval
  for (double p : {low + 1e-6, 0.5 * (low + k), k - 1e-6})
    CHECK(std::abs(copulas::cond_quantile(mo, 2, &u1, p) - 0.7937005259840998) < 1e-12);

  // the continuous branches invert cond_cdf exactly
  for (double p : {0.1 * low, 0.9 * low, k + 0.3 * (1 - k), 0.999}) {
    double u2 = copulas::cond_quantile(mo, 2, &u1, p);
    double u[2] = {u1, u2};
    CHECK(std::abs(copulas::cond_cdf(mo, 2, u) - p) < 1e-12);
  }

  // boundary values belong to the left-closed intervals
  CHECK(std::abs(copulas::cond_quantile(mo, 2, &u1, low) - low * std::pow(u1, 0.25) / 0.75) < 1e-12);
  CHECK(std::abs(copulas::cond_quantile(mo, 2, &u1, k) - std::pow(k, 4.0)) < 1e-12);
}

TEST_CASE("cdm and rosenblatt are inverse") {
  SplitMix64 g(17);
  SUBCASE("identity under independence parameters") {
    Copula c = Copula::gauss_exchangeable(3, 0.0);
    std::vector<double> v = interior_point(3, g), u(3);
    copulas::cdm_sample(c, v.data(), u.data());
    for (int j = 0; j < 3; ++j) CHECK(std::abs(u[j] - v[j]) < 1e-13);
  }
  SUBCASE("round trips for every family and d in {2,3,5}") {
    for (int d : {2, 3, 5}) {
      std::vector<Copula> cs = {Copula::gauss_exchangeable(d, 0.5),
                                Copula::t_exchangeable(d, 3.0, 0.5), Copula::clayton(2.0, d),
                                Copula::gumbel(2.0, d)};
      for (const Copula& c : cs) {
        double worst = 0.0;
        std::vector<double> v(d), u(d), back(d);
        for (int rep = 0; rep < 100; ++rep) {
          v = interior_point(d, g);
          copulas::cdm_sample(c, v.data(), u.data());
          copulas::rosenblatt(c, u.data(), back.data());
          for (int j = 0; j < d; ++j) worst = std::max(worst, std::abs(back[j] - v[j]));
          copulas::rosenblatt(c, u.data(), back.data());
          std::vector<double> u2(d);
          copulas::cdm_sample(c, back.data(), u2.data());
          for (int j = 0; j < d; ++j) worst = std::max(worst, std::abs(u2[j] - u[j]));
        }
        CHECK(worst < 1e-8);
      }
    }
  }
  SUBCASE("gumbel cdm recovers its kendall tau") {
    // tau = 1 - 1/theta for the gumbel family
    const int n = 20000;
    Copula c = Copula::gumbel(2.0, 2);
    lds::PointSet p = lds::generate(lds::SequenceSpec::sobol(2), n, 2);
    std::vector<double> U = copulas::sample_matrix(c, SamplerKind::CDM, p);
    std::vector<double> x(n), y(n);
    for (int i = 0; i < n; ++i) {
      x[i] = U[2 * i];
      y[i] = U[2 * i + 1];
    }
    CHECK(std::abs(experiments::kendall_tau(x.data(), y.data(), n) - 0.5) < 0.02);
  }
  SUBCASE("rosenblatt uniformizes genuine samples") {
    // MO-algorithm Clayton samples pushed back through the analytic
    // Rosenblatt transform must look i.i.d. uniform
    const int n = 10000, d = 3;
    Copula c = Copula::clayton(2.0, d);
    lds::PointSet p = lds::generate(lds::SequenceSpec::pseudorandom(d + 1, 99), n);
    std::vector<double> U = copulas::sample_matrix(c, SamplerKind::MO, p);
    std::vector<std::vector<double>> coords(d);
    std::vector<double> v(d);
    for (int i = 0; i < n; ++i) {
      copulas::rosenblatt(c, U.data() + static_cast<std::size_t>(i) * d, v.data());
      for (int j = 0; j < d; ++j) coords[j].push_back(v[j]);
    }
    for (int j = 0; j < d; ++j)
      CHECK(oracles::ks_statistic_uniform(coords[j]) < oracles::ks_crit_1pct(n));
  }
}

TEST_CASE("stochastic gauss sampler") {
  SplitMix64 g(23);
  SUBCASE("identity correlation passes the uniforms through") {
    Copula c = Copula::gauss(Matrix::identity(3));
    std::vector<double> v = interior_point(3, g), u(3);
    copulas::stochastic_sample_gauss(c, v.data(), u.data());
    for (int j = 0; j < 3; ++j) CHECK(std::abs(u[j] - v[j]) < 1e-13);
  }
  SUBCASE("pathwise equal to the cdm") {
    for (int d : {2, 5}) {
      Copula c = Copula::gauss_exchangeable(d, 0.6);
      double worst = 0.0;
      for (int rep = 0; rep < 50; ++rep) {
        std::vector<double> v = interior_point(d, g), a(d), b(d);
        copulas::cdm_sample(c, v.data(), a.data());
        copulas::stochastic_sample_gauss(c, v.data(), b.data());
        for (int j = 0; j < d; ++j) worst = std::max(worst, std::abs(a[j] - b[j]));
      }
      CHECK(worst < 1e-10);
    }
  }
  SUBCASE("uniform margins") {
    const int n = 10000, d = 3;
    Copula c = Copula::gauss_exchangeable(d, 0.7);
    lds::PointSet p = lds::generate(lds::SequenceSpec::pseudorandom(d, 5), n);
    std::vector<double> U = copulas::sample_matrix(c, SamplerKind::StochGauss, p);
    for (int j = 0; j < d; ++j) {
      std::vector<double> col(n);
      for (int i = 0; i < n; ++i) col[i] = U[static_cast<std::size_t>(i) * d + j];
      CHECK(oracles::ks_statistic_uniform(col) < oracles::ks_crit_1pct(n));
    }
  }
}

TEST_CASE("stochastic t sampler") {
  SplitMix64 g(29);
  SUBCASE("w -> 1 limit matches the gauss sampler") {
    int d = 3;
    Copula tc = Copula::t_exchangeable(d, 1e8, 0.5);
    Copula gc = Copula::gauss_exchangeable(d, 0.5);
    double worst = 0.0;
    for (int rep = 0; rep < 40; ++rep) {
      std::vector<double> v = interior_point(d + 1, g), a(d), b(d);
      copulas::stochastic_sample_t(tc, v.data(), a.data());
      copulas::stochastic_sample_gauss(gc, v.data(), b.data());
      for (int j = 0; j < d; ++j) worst = std::max(worst, std::abs(a[j] - b[j]));
    }
    CHECK(worst < 2e-4);
  }
  SUBCASE("uniform margins") {
    const int n = 10000, d = 2;
    Copula c = Copula::t_exchangeable(d, 3.0, 1.0 / std::sqrt(2.0));
    lds::PointSet p = lds::generate(lds::SequenceSpec::pseudorandom(d + 1, 31), n);
    std::vector<double> U = copulas::sample_matrix(c, SamplerKind::StochT, p);
    for (int j = 0; j < d; ++j) {
      std::vector<double> col(n);
      for (int i = 0; i < n; ++i) col[i] = U[static_cast<std::size_t>(i) * d + j];
      CHECK(oracles::ks_statistic_uniform(col) < oracles::ks_crit_1pct(n));
    }
  }
}

TEST_CASE("marshall-olkin frailty algorithm for clayton") {
  Copula c = Copula::clayton(2.0, 3);
  SUBCASE("vanishing exponential input sends the coordinate to 1") {
    // E_j = -log(v_{j+1}) -> 0 as v_{j+1} -> 1, and psi(0) = 1
    double v[4] = {0.4, 1.0 - 1e-14, 1.0 - 1e-14, 1.0 - 1e-14}, u[3];
    copulas::mo_algorithm_sample(c, v, u);
    for (int j = 0; j < 3; ++j) CHECK(u[j] > 0.999999999);
  }
  SUBCASE("monotone in the frailty and exponential inputs") {
    double prev = 0.0;
    for (double v1 = 0.05; v1 < 1.0; v1 += 0.05) {
      double v[4] = {v1, 0.3, 0.6, 0.8}, u[3];
      copulas::mo_algorithm_sample(c, v, u);
      CHECK(u[0] > prev);
      prev = u[0];
    }
    prev = 0.0;
    for (double v2 = 0.05; v2 < 1.0; v2 += 0.05) {
      double v[4] = {0.4, v2, 0.6, 0.8}, u[3];
      copulas::mo_algorithm_sample(c, v, u);
      CHECK(u[0] > prev);
      prev = u[0];
    }
  }
  SUBCASE("family guard") {
    double v[3] = {0.2, 0.4, 0.6};
    double u[2];
    CHECK_THROWS_AS(copulas::mo_algorithm_sample(Copula::gumbel(2.0, 2), v, u),
                    std::invalid_argument);
  }
}

TEST_CASE("marshall-olkin copula representation") {
  Copula c = Copula::marshall_olkin(0.25, 0.75);
  SUBCASE("vanishing shock decouples the coordinates") {
    double v[3] = {0.3, 0.8, 1e-300}, u[2];
    copulas::mo_copula_sample(c, v, u);
    CHECK(std::abs(u[0] - std::pow(0.3, 1.0 / 0.75)) < 1e-14);
    CHECK(std::abs(u[1] - std::pow(0.8, 4.0)) < 1e-14);
  }
  SUBCASE("uniform margins") {
    const int n = 10000;
    lds::PointSet p = lds::generate(lds::SequenceSpec::pseudorandom(3, 41), n);
    std::vector<double> U = copulas::sample_matrix(c, SamplerKind::MO, p);
    for (int j = 0; j < 2; ++j) {
      std::vector<double> col(n);
      for (int i = 0; i < n; ++i) col[i] = U[static_cast<std::size_t>(i) * 2 + j];
      CHECK(oracles::ks_statistic_uniform(col) < oracles::ks_crit_1pct(n));
    }
  }
}

TEST_CASE("sample_matrix dimension checks and clamping") {
  Copula c = Copula::clayton(2.0, 2);
  lds::PointSet p = lds::generate(lds::SequenceSpec::sobol(2), 8, 1);  // includes the origin
  // the origin row is clamped instead of producing a quantile singularity
  std::vector<double> U = copulas::sample_matrix(c, SamplerKind::CDM, p);
  for (double x : U) CHECK((x > 0.0 && x < 1.0));

  CHECK(copulas::sampler_input_dim(SamplerKind::CDM, c) == 2);
  CHECK(copulas::sampler_input_dim(SamplerKind::MO, c) == 3);
  CHECK(copulas::sampler_input_dim(SamplerKind::MO, Copula::marshall_olkin(0.3, 0.6)) == 3);
  CHECK_THROWS_AS(copulas::sample_matrix(c, SamplerKind::MO, p), std::invalid_argument);
  CHECK_THROWS_AS(copulas::sample_matrix(c, SamplerKind::StochGauss, p), std::invalid_argument);
}

TEST_CASE("block determinant identity") {
  // |P| = |P_{1:(j-1),1:(j-1)}| / (P^{-1})_{j,j} for the full block at j = d
  SplitMix64 g(37);
  for (int d : {2, 3, 4, 6}) {
    for (int rep = 0; rep < 5; ++rep) {
      Matrix p = oracles::random_correlation(d, g);
      Matrix l;
      try {
        l = cholesky_lower(p);
      } catch (const NumericalError&) {
        continue;  // extremely rare near-singular draw
      }
      double det = std::exp(logdet_from_cholesky(l, d));
      double det_lead = std::exp(logdet_from_cholesky(l, d - 1));
      Matrix inv = inverse_spd(p);
      CHECK(std::abs(det - det_lead / inv(d - 1, d - 1)) < 1e-10);
    }
  }
}

}  // TEST_SUITE
