#pragma once

#include <vector>

#include "qmccop/common.hpp"

namespace qmccop::specfun {

double normal_pdf(double x);
double normal_cdf(double x);
// Rational approximation plus one Halley refinement on the CDF;
// |normal_cdf(normal_quantile(p)) - p| <= 1e-12 on p in [1e-10, 1-1e-10].
double normal_quantile(double p);

double t_pdf(double x, double nu);
double t_cdf(double x, double nu);
double t_quantile(double p, double nu);

// regularized lower incomplete gamma P(a, x)
double gamma_p(double a, double x);
double gamma_quantile(double p, double shape, double rate);

// regularized incomplete beta I_x(a, b)
double beta_i(double a, double b, double x);

// ---------------------------------------------------------------------------
// Margin models used by the finance functionals.

struct Margin {
  enum class Kind { LogNormal, Pareto, Exponential, Uniform };
  Kind kind = Kind::Uniform;
  double p1 = 0.0;  // meanlog | shape a | rate
  double p2 = 1.0;  // sdlog   | scale s

  static Margin lognormal(double meanlog, double sdlog);
  // classical Pareto on x >= s: F(x) = 1 - (s/x)^a
  static Margin pareto(double shape, double scale);
  static Margin exponential(double rate);
  static Margin uniform();

  double mean() const;
  double variance() const;
};

double margin_quantile(const Margin& m, double p);

// Pareto with the same mean and variance as LogNormal(meanlog, sdlog);
// requires coefficient of variation < 1 is not needed for this form.
Margin pareto_matched_to_lognormal(double meanlog, double sdlog);

struct TauMaps {
  double theta_clayton;
  double rho_elliptical;
};

// theta = 2*tau/(1-tau), rho = sin(pi*tau/2), tau in (0,1)
TauMaps kendall_tau_maps(double tau);

}  // namespace qmccop::specfun
