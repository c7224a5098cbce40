#include "qmccop/specfun.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace qmccop::specfun {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;
constexpr double kSqrt2Pi = 2.5066282746310002;

void require_prob(double p, const char* who) {
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument(std::string(who) + ": p must be in (0,1)");
}

}  // namespace

double normal_pdf(double x) { return std::exp(-0.5 * x * x) / kSqrt2Pi; }

double normal_cdf(double x) { return 0.5 * std::erfc(-x / kSqrt2); }

double normal_quantile(double p) {
  require_prob(p, "normal_quantile");

  // Acklam's rational approximation, |rel err| < 1.15e-9
  static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                             -2.759285104469687e+02, 1.383577518672690e+02,
                             -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                             -1.556989798598866e+02, 6.680131188771972e+01,
                             -1.328068155288572e+01};
  static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                             -2.400758277161838e+00, -2.549732539343734e+00,
                             4.374664141464968e+00,  2.938163982698783e+00};
  static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                             2.445134137142996e+00, 3.754408661907416e+00};
  const double plow = 0.02425;
  double x;
  if (p < plow) {
    double q = std::sqrt(-2.0 * std::log(p));
    x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  } else if (p <= 1.0 - plow) {
    double q = p - 0.5, r = q * q;
    x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
        (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  } else {
    double q = std::sqrt(-2.0 * std::log(1.0 - p));
    x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  // one Halley step on the CDF
  double e = normal_cdf(x) - p;
  double u = e * kSqrt2Pi * std::exp(0.5 * x * x);
  x -= u / (1.0 + 0.5 * x * u);
  return x;
}

// ---------------------------------------------------------------------------
// incomplete beta (continued fraction, Lentz) and incomplete gamma

namespace {

double betacf(double a, double b, double x) {
  const int maxit = 300;
  const double eps = 3e-16, fpmin = 1e-300;
  double qab = a + b, qap = a + 1.0, qam = a - 1.0;
  double c = 1.0, d = 1.0 - qab * x / qap;
  if (std::abs(d) < fpmin) d = fpmin;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= maxit; ++m) {
    int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < fpmin) d = fpmin;
    c = 1.0 + aa / c;
    if (std::abs(c) < fpmin) c = fpmin;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < fpmin) d = fpmin;
    c = 1.0 + aa / c;
    if (std::abs(c) < fpmin) c = fpmin;
    d = 1.0 / d;
    double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < eps) return h;
  }
  throw NumericalError("beta_i: continued fraction did not converge");
}

}  // namespace

namespace {

// regularized incomplete beta with the complement xc = 1-x supplied
// directly (avoids cancellation when x is within an ulp of 1)
double beta_i_pair(double a, double b, double x, double xc) {
  if (x <= 0.0) return 0.0;
  if (xc <= 0.0) return 1.0;
  double lbeta = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b);
  double front = std::exp(lbeta + a * std::log(x) + b * std::log(xc));
  if (x < (a + 1.0) / (a + b + 2.0)) return front * betacf(a, b, x) / a;
  return 1.0 - front * betacf(b, a, xc) / b;
}

}  // namespace

double beta_i(double a, double b, double x) {
  if (!(a > 0.0 && b > 0.0)) throw std::invalid_argument("beta_i: a,b must be > 0");
  return beta_i_pair(a, b, x, 1.0 - x);
}

double gamma_p(double a, double x) {
  if (!(a > 0.0)) throw std::invalid_argument("gamma_p: a must be > 0");
  if (x <= 0.0) return 0.0;
  // the series/fraction pair needs O(sqrt(a)) terms near x ~ a
  const int maxit = 500 + static_cast<int>(8.0 * std::sqrt(a));
  if (x < a + 1.0) {
    double ap = a, sum = 1.0 / a, del = sum;
    for (int n = 0; n < maxit; ++n) {
      ap += 1.0;
      del *= x / ap;
      sum += del;
      if (std::abs(del) < std::abs(sum) * 1e-16)
        return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
    }
    throw NumericalError("gamma_p: series did not converge");
  }
  // continued fraction for Q(a,x)
  const double fpmin = 1e-300;
  double b = x + 1.0 - a, c = 1.0 / fpmin, d = 1.0 / b, h = d;
  for (int i = 1; i <= maxit; ++i) {
    double an = -static_cast<double>(i) * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < fpmin) d = fpmin;
    c = b + an / c;
    if (std::abs(c) < fpmin) c = fpmin;
    d = 1.0 / d;
    double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < 1e-16) {
      double q = std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
      return 1.0 - q;
    }
  }
  throw NumericalError("gamma_p: continued fraction did not converge");
}

double gamma_quantile(double p, double shape, double rate) {
  require_prob(p, "gamma_quantile");
  if (!(shape > 0.0 && rate > 0.0))
    throw std::invalid_argument("gamma_quantile: shape and rate must be > 0");

  const double a = shape;
  // Wilson-Hilferty start; series start for small shape
  double x;
  if (a > 0.3) {
    double z = normal_quantile(p);
    double t = 1.0 - 1.0 / (9.0 * a) + z / (3.0 * std::sqrt(a));
    x = a * t * t * t;
    if (x <= 0.0) x = std::exp((std::log(p) + std::lgamma(a + 1.0)) / a);
    // for very large shapes the start is already O(1/a) accurate and the
    // series/fraction refinement would need too many terms
    if (a > 1e6) return x / rate;
  } else {
    x = std::exp((std::log(p) + std::lgamma(a + 1.0)) / a);
  }
  if (!(x > 0.0) || !std::isfinite(x)) x = a;

  // bracket then safeguarded Newton
  double lo = 0.0, hi = std::numeric_limits<double>::infinity();
  for (int it = 0; it < 200; ++it) {
    double f = gamma_p(a, x) - p;
    if (f > 0.0) hi = x; else lo = x;
    double logpdf = (a - 1.0) * std::log(x) - x - std::lgamma(a);
    double step = f * std::exp(-logpdf);
    double xn = x - step;
    if (!(xn > lo && xn < hi)) xn = std::isfinite(hi) ? 0.5 * (lo + hi) : x * 2.0;
    if (std::abs(xn - x) <= 1e-14 * x) { x = xn; break; }
    x = xn;
  }
  return x / rate;
}

// ---------------------------------------------------------------------------
// Student t

double t_pdf(double x, double nu) {
  // cache the normalization constant for the last nu seen (hot loops in the
  // conditional transforms call this with a fixed nu)
  thread_local double cached_nu = -1.0, cached_lg = 0.0;
  if (nu != cached_nu) {
    cached_nu = nu;
    cached_lg = std::lgamma(0.5 * (nu + 1.0)) - std::lgamma(0.5 * nu) -
                0.5 * std::log(nu * M_PI);
  }
  return std::exp(cached_lg - 0.5 * (nu + 1.0) * std::log1p(x * x / nu));
}

namespace {

// closed-form CDF for integer degrees of freedom (A&S 26.7.3/26.7.4)
double t_cdf_integer(double x, int nu) {
  double theta = std::atan2(x, std::sqrt(static_cast<double>(nu)));
  double s = std::sin(theta), c = std::cos(theta), c2 = c * c;
  if (nu % 2 == 1) {
    double sum = 0.0, term = c, coef = 1.0;
    for (int j = 0; 2 * j + 1 <= nu - 2; ++j) {
      if (j > 0) {
        coef *= (2.0 * j) / (2.0 * j + 1.0);
        term *= c2;
      }
      sum += coef * term;
    }
    return 0.5 + (theta + s * sum) / M_PI;
  }
  double sum = 0.0, term = 1.0, coef = 1.0;
  for (int j = 0; 2 * j <= nu - 2; ++j) {
    if (j > 0) {
      coef *= (2.0 * j - 1.0) / (2.0 * j);
      term *= c2;
    }
    sum += coef * term;
  }
  return 0.5 + 0.5 * s * sum;
}

}  // namespace

double t_cdf(double x, double nu) {
  if (!(nu > 0.0)) throw std::invalid_argument("t_cdf: nu must be > 0");
  if (x == 0.0) return 0.5;
  if (nu == std::floor(nu) && nu <= 200.0) return t_cdf_integer(x, static_cast<int>(nu));
  // 2*P(T > |x|) = I_s(nu/2, 1/2) with s = nu/(nu+x^2); both s and its
  // complement are formed directly to keep the tails accurate
  double s = nu / (nu + x * x);
  double sc = x * x / (nu + x * x);
  double tail = 0.5 * beta_i_pair(0.5 * nu, 0.5, s, sc);
  return x > 0.0 ? 1.0 - tail : tail;
}

double t_quantile(double p, double nu) {
  require_prob(p, "t_quantile");
  if (!(nu > 0.0)) throw std::invalid_argument("t_quantile: nu must be > 0");
  if (p == 0.5) return 0.0;

  // start from the Cornish-Fisher expansion around the normal quantile
  double z = normal_quantile(p);
  double x;
  if (nu <= 2.0) {
    // heavy tails: scale the Cauchy quantile as a rough start
    x = std::tan(M_PI * (p - 0.5));
    if (nu > 1.0) x *= std::sqrt(nu);
  } else {
    double z3 = z * z * z;
    x = z + (z3 + z) / (4.0 * nu) + (5.0 * z3 * z * z + 16.0 * z3 + 3.0 * z) / (96.0 * nu * nu);
  }
  if (!std::isfinite(x)) x = p < 0.5 ? -1.0 : 1.0;

  // bracket the root by doubling steps away from the start
  double lo, hi;
  if (t_cdf(x, nu) < p) {
    lo = x;
    double step = std::max(1.0, 0.5 * std::abs(x));
    hi = x + step;
    while (t_cdf(hi, nu) < p) {
      lo = hi;
      step *= 4.0;
      hi += step;
      if (!std::isfinite(hi)) throw NumericalError("t_quantile: failed to bracket the root");
    }
  } else {
    hi = x;
    double step = std::max(1.0, 0.5 * std::abs(x));
    lo = x - step;
    while (t_cdf(lo, nu) > p) {
      hi = lo;
      step *= 4.0;
      lo -= step;
      if (!std::isfinite(lo)) throw NumericalError("t_quantile: failed to bracket the root");
    }
  }

  // safeguarded Newton; converge on the residual so the round trip holds
  x = std::clamp(x, lo, hi);
  for (int it = 0; it < 100; ++it) {
    double f = t_cdf(x, nu) - p;
    if (std::abs(f) <= 1e-14) break;
    if (f > 0.0) hi = x; else lo = x;
    double xn = x - f / t_pdf(x, nu);
    if (!(xn > lo && xn < hi)) xn = 0.5 * (lo + hi);
    if (xn == x) break;
    x = xn;
    if (hi - lo <= 8.0 * std::abs(x) * std::numeric_limits<double>::epsilon()) break;
  }
  return x;
}

// ---------------------------------------------------------------------------
// margins

Margin Margin::lognormal(double meanlog, double sdlog) {
  if (!(sdlog > 0.0)) throw std::invalid_argument("lognormal: sdlog must be > 0");
  return Margin{Kind::LogNormal, meanlog, sdlog};
}

Margin Margin::pareto(double shape, double scale) {
  if (!(shape > 2.0)) throw std::invalid_argument("pareto: shape must be > 2 (finite variance)");
  if (!(scale > 0.0)) throw std::invalid_argument("pareto: scale must be > 0");
  return Margin{Kind::Pareto, shape, scale};
}

Margin Margin::exponential(double rate) {
  if (!(rate > 0.0)) throw std::invalid_argument("exponential: rate must be > 0");
  return Margin{Kind::Exponential, rate, 0.0};
}

Margin Margin::uniform() { return Margin{Kind::Uniform, 0.0, 1.0}; }

double Margin::mean() const {
  switch (kind) {
    case Kind::LogNormal: return std::exp(p1 + 0.5 * p2 * p2);
    case Kind::Pareto: return p1 * p2 / (p1 - 1.0);
    case Kind::Exponential: return 1.0 / p1;
    case Kind::Uniform: return 0.5;
  }
  return 0.0;
}

double Margin::variance() const {
  switch (kind) {
    case Kind::LogNormal: {
      double s2 = p2 * p2;
      return (std::exp(s2) - 1.0) * std::exp(2.0 * p1 + s2);
    }
    case Kind::Pareto: {
      double a = p1, s = p2;
      return a * s * s / ((a - 1.0) * (a - 1.0) * (a - 2.0));
    }
    case Kind::Exponential: return 1.0 / (p1 * p1);
    case Kind::Uniform: return 1.0 / 12.0;
  }
  return 0.0;
}

double margin_quantile(const Margin& m, double p) {
  require_prob(p, "margin_quantile");
  switch (m.kind) {
    case Margin::Kind::LogNormal: return std::exp(m.p1 + m.p2 * normal_quantile(p));
    case Margin::Kind::Pareto: return m.p2 * std::pow(1.0 - p, -1.0 / m.p1);
    case Margin::Kind::Exponential: return -std::log1p(-p) / m.p1;
    case Margin::Kind::Uniform: return p;
  }
  return 0.0;
}

Margin pareto_matched_to_lognormal(double meanlog, double sdlog) {
  Margin ln = Margin::lognormal(meanlog, sdlog);
  double mu = ln.mean(), var = ln.variance();
  double r = var / (mu * mu);  // squared coefficient of variation
  // classical Pareto: cv^2 = 1/(a(a-2))  =>  a = 1 + sqrt(1 + 1/r)
  double a = 1.0 + std::sqrt(1.0 + 1.0 / r);
  double s = mu * (a - 1.0) / a;
  return Margin::pareto(a, s);
}

TauMaps kendall_tau_maps(double tau) {
  if (!(tau > 0.0 && tau < 1.0)) throw std::invalid_argument("kendall_tau_maps: tau must be in (0,1)");
  return TauMaps{2.0 * tau / (1.0 - tau), std::sin(M_PI * tau / 2.0)};
}

}  // namespace qmccop::specfun
