#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "qmccop/specfun.hpp"

using namespace qmccop::specfun;

TEST_SUITE("specfun") {

TEST_CASE("normal quantile and cdf") {
  CHECK(normal_quantile(0.5) == 0.0);
  CHECK(normal_cdf(0.0) == 0.5);

  // oracle: bisection on the erfc-based CDF, independent of the
  // rational-approximation inversion
  double q975 = oracles::bisect([](double x) { return normal_cdf(x); }, 0.0, 10.0, 0.975);
  CHECK(std::abs(q975 - 1.959963984540054) < 1e-12);
  CHECK(std::abs(normal_quantile(0.975) - 1.959963984540054) < 1e-12);

  SUBCASE("round trip within 1e-12 on [1e-10, 1-1e-10]") {
    double worst = 0.0;
    for (double lp = -10.0; lp <= -0.32; lp += 0.04) {
      double p = std::pow(10.0, lp);
      worst = std::max(worst, std::abs(normal_cdf(normal_quantile(p)) - p));
      worst = std::max(worst, std::abs(normal_cdf(normal_quantile(1.0 - p)) - (1.0 - p)));
    }
    CHECK(worst < 1e-12);
  }
  SUBCASE("domain errors") {
    CHECK_THROWS_AS(normal_quantile(0.0), std::invalid_argument);
    CHECK_THROWS_AS(normal_quantile(1.0), std::invalid_argument);
    CHECK_THROWS_AS(normal_quantile(-0.1), std::invalid_argument);
  }
}

TEST_CASE("student t") {
  for (double nu : {0.7, 1.0, 3.0, 25.0}) CHECK(t_quantile(0.5, nu) == 0.0);
  CHECK(std::abs(t_cdf(1.0, 1.0) - 0.75) < 1e-15);  // Cauchy arctan closed form

  // oracle: invert the numerically integrated density
  double q = oracles::bisect(
      [](double x) {
        return 0.5 + oracles::integrate([](double z) { return t_pdf(z, 3.0); }, 0.0, x, 1e-12);
      },
      0.0, 20.0, 0.95);
  CHECK(std::abs(q - 2.3533634348018264) < 1e-8);
  CHECK(std::abs(t_quantile(0.95, 3.0) - 2.3533634348018264) < 1e-10);

  SUBCASE("round trip within 1e-10") {
    double worst = 0.0;
    for (double nu : {0.5, 1.0, 3.0, 7.5, 18.0, 150.0, 1000.0})
      for (double lp = -9.0; lp <= -0.32; lp += 0.1) {
        double p = std::pow(10.0, lp);
        worst = std::max(worst, std::abs(t_cdf(t_quantile(p, nu), nu) - p));
        worst = std::max(worst, std::abs(t_cdf(t_quantile(1.0 - p, nu), nu) - (1.0 - p)));
      }
    CHECK(worst < 1e-10);
  }
  SUBCASE("normal limit at nu = 1e7") {
    double worst = 0.0;
    for (double x : {-4.0, -1.5, -0.3, 0.2, 1.0, 2.5, 5.5})
      worst = std::max(worst, std::abs(t_cdf(x, 1e7) - normal_cdf(x)));
    CHECK(worst < 1e-6);
  }
  SUBCASE("invalid parameters") {
    CHECK_THROWS_AS(t_cdf(0.3, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(t_quantile(0.0, 3.0), std::invalid_argument);
    CHECK_THROWS_AS(t_quantile(0.3, 0.0), std::invalid_argument);
  }
}

TEST_CASE("gamma quantile") {
  CHECK(std::abs(gamma_quantile(1.0 - std::exp(-1.0), 1.0, 1.0) - 1.0) < 1e-12);
  CHECK(std::abs(gamma_quantile(0.5, 1.0, 2.0) - 0.5 * std::log(2.0)) < 1e-12);

  // oracle: bisection on the pure power-series incomplete gamma
  double q = oracles::bisect([](double x) { return oracles::gamma_p_series(0.5, x); }, 0.0, 30.0,
                             0.9);
  CHECK(std::abs(q - 1.352771727047702) < 1e-9);
  CHECK(std::abs(gamma_quantile(0.9, 0.5, 1.0) - 1.352771727047702) < 1e-9);

  SUBCASE("round trip and monotonicity") {
    double worst = 0.0;
    for (double a : {0.25, 0.5, 1.0, 2.5, 40.0})
      for (double lp = -8.0; lp <= -0.32; lp += 0.2) {
        double p = std::pow(10.0, lp);
        worst = std::max(worst, std::abs(gamma_p(a, gamma_quantile(p, a, 1.0)) - p));
        worst = std::max(worst, std::abs(gamma_p(a, gamma_quantile(1.0 - p, a, 1.0)) - (1.0 - p)));
      }
    CHECK(worst < 1e-10);

    double prev = 0.0;
    bool monotone = true;
    for (int i = 1; i < 10000; ++i) {
      double x = gamma_quantile(i / 10000.0, 0.5, 1.0);
      if (x < prev) monotone = false;
      prev = x;
    }
    CHECK(monotone);
  }
  SUBCASE("invalid parameters") {
    CHECK_THROWS_AS(gamma_quantile(0.5, -1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(gamma_quantile(0.5, 1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(gamma_quantile(1.0, 1.0, 1.0), std::invalid_argument);
  }
}

TEST_CASE("margins") {
  // the lognormal stock margin used throughout the experiments
  double meanlog = std::log(100.0) + 0.0001 - 0.02;
  Margin ln = Margin::lognormal(meanlog, 0.2);
  CHECK(std::abs(margin_quantile(ln, 0.5) - 98.02966980752433) < 1e-10);

  CHECK(std::abs(margin_quantile(Margin::exponential(1.0), 1.0 - std::exp(-1.0)) - 1.0) < 1e-12);

  SUBCASE("pareto moment matching") {
    Margin pa = pareto_matched_to_lognormal(meanlog, 0.2);
    CHECK(std::abs(pa.mean() / ln.mean() - 1.0) < 1e-9);
    CHECK(std::abs(pa.variance() / ln.variance() - 1.0) < 1e-9);
    CHECK(pa.p1 > 2.0);  // finite variance

    // verify the closed-form moments by quadrature over the quantile scale
    double qmean = oracles::integrate([&](double p) { return margin_quantile(pa, p); }, 1e-9,
                                      1.0 - 1e-9, 1e-9);
    CHECK(std::abs(qmean / pa.mean() - 1.0) < 1e-5);
    double q2 = oracles::integrate(
        [&](double p) {
          double x = margin_quantile(pa, p);
          return x * x;
        },
        1e-9, 1.0 - 1e-9, 1e-9);
    CHECK(std::abs((q2 - qmean * qmean) / pa.variance() - 1.0) < 1e-4);
  }
  SUBCASE("quantile monotonicity") {
    for (const Margin& m : {Margin::lognormal(0.0, 0.5), pareto_matched_to_lognormal(0.0, 0.5),
                            Margin::exponential(2.0)}) {
      double prev = -1.0;
      bool monotone = true;
      for (int i = 1; i < 10000; ++i) {
        double x = margin_quantile(m, i / 10000.0);
        if (x < prev) monotone = false;
        prev = x;
      }
      CHECK(monotone);
    }
  }
  SUBCASE("validation") {
    CHECK_THROWS_AS(Margin::lognormal(0.0, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(Margin::pareto(1.5, 1.0), std::invalid_argument);  // shape must exceed 2
    CHECK_THROWS_AS(Margin::exponential(0.0), std::invalid_argument);
    CHECK_THROWS_AS(margin_quantile(Margin::uniform(), 1.0), std::invalid_argument);
  }
}

TEST_CASE("kendall tau parameter maps") {
  TauMaps m = kendall_tau_maps(0.5);
  CHECK(std::abs(m.theta_clayton - 2.0) < 1e-15);
  CHECK(std::abs(m.rho_elliptical - 1.0 / std::sqrt(2.0)) < 1e-15);

  TauMaps tiny = kendall_tau_maps(1e-9);
  CHECK(tiny.theta_clayton < 1e-8);
  CHECK(tiny.rho_elliptical < 1e-8);

  CHECK_THROWS_AS(kendall_tau_maps(0.0), std::invalid_argument);
  CHECK_THROWS_AS(kendall_tau_maps(1.0), std::invalid_argument);
}

}  // TEST_SUITE
