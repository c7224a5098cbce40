#include "qmccop/copulas.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "qmccop/specfun.hpp"

namespace qmccop::copulas {

namespace sf = qmccop::specfun;

namespace {

void require_interior(double x, const char* who) {
  if (!(x > 0.0 && x < 1.0)) throw std::invalid_argument(std::string(who) + ": argument must be in (0,1)");
}

}  // namespace

// ---------------------------------------------------------------------------
// construction / validation

Copula Copula::gauss(Matrix corr) {
  Copula c;
  c.family_ = Family::Gauss;
  c.dim_ = corr.size();
  c.chol_ = validate_correlation(corr);
  c.corr_ = std::move(corr);
  return c;
}

Copula Copula::gauss_exchangeable(int d, double rho) {
  return gauss(exchangeable_correlation(d, rho));
}

Copula Copula::t(double nu, Matrix corr) {
  if (!(nu > 0.0)) throw ConfigError("t copula: nu must be > 0");
  Copula c;
  c.family_ = Family::T;
  c.dim_ = corr.size();
  c.nu_ = nu;
  c.chol_ = validate_correlation(corr);
  c.corr_ = std::move(corr);
  return c;
}

Copula Copula::t_exchangeable(int d, double nu, double rho) {
  return t(nu, exchangeable_correlation(d, rho));
}

Copula Copula::clayton(double theta, int d) {
  if (!(theta > 0.0)) throw ConfigError("clayton: theta must be > 0");
  if (d < 1) throw ConfigError("clayton: dimension must be >= 1");
  Copula c;
  c.family_ = Family::Clayton;
  c.dim_ = d;
  c.theta_ = theta;
  return c;
}

Copula Copula::gumbel(double theta, int d) {
  if (!(theta >= 1.0)) throw ConfigError("gumbel: theta must be >= 1");
  if (d < 1) throw ConfigError("gumbel: dimension must be >= 1");
  Copula c;
  c.family_ = Family::Gumbel;
  c.dim_ = d;
  c.theta_ = theta;
  return c;
}

Copula Copula::marshall_olkin(double alpha1, double alpha2) {
  if (!(alpha1 > 0.0 && alpha1 < 1.0 && alpha2 > 0.0 && alpha2 < 1.0))
    throw ConfigError("marshall-olkin: alpha1, alpha2 must be in (0,1)");
  Copula c;
  c.family_ = Family::MarshallOlkin;
  c.dim_ = 2;
  c.alpha1_ = alpha1;
  c.alpha2_ = alpha2;
  return c;
}

Copula Copula::mixture(double lambda, int d) {
  if (!(lambda > 0.0 && lambda <= 1.0)) throw ConfigError("mixture: lambda must be in (0,1]");
  if (d < 1) throw ConfigError("mixture: dimension must be >= 1");
  Copula c;
  c.family_ = Family::Mixture;
  c.dim_ = d;
  c.lambda_ = lambda;
  return c;
}

const char* Copula::family_name() const {
  switch (family_) {
    case Family::Gauss: return "gauss";
    case Family::T: return "t";
    case Family::Clayton: return "clayton";
    case Family::Gumbel: return "gumbel";
    case Family::MarshallOlkin: return "marshallolkin";
    case Family::Mixture: return "mixture";
  }
  return "?";
}

std::string Copula::params_string() const {
  std::ostringstream os;
  switch (family_) {
    case Family::Gauss: os << "d=" << dim_; break;
    case Family::T: os << "nu=" << nu_ << ";d=" << dim_; break;
    case Family::Clayton:
    case Family::Gumbel: os << "theta=" << theta_ << ";d=" << dim_; break;
    case Family::MarshallOlkin: os << "alpha1=" << alpha1_ << ";alpha2=" << alpha2_; break;
    case Family::Mixture: os << "lambda=" << lambda_ << ";d=" << dim_; break;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// copula CDF

bool cdf_available(const Copula& c) {
  return c.family() == Family::Clayton || c.family() == Family::Gumbel ||
         c.family() == Family::MarshallOlkin || c.family() == Family::Mixture;
}

double copula_cdf(const Copula& c, const std::vector<double>& u) {
  if (static_cast<int>(u.size()) != c.dim())
    throw std::invalid_argument("copula_cdf: argument length must equal dimension");
  for (double x : u)
    if (!(x >= 0.0 && x <= 1.0)) throw std::invalid_argument("copula_cdf: u must be in [0,1]^d");
  for (double x : u)
    if (x == 0.0) return 0.0;

  switch (c.family()) {
    case Family::Clayton: {
      double s = 0.0;
      for (double x : u) s += std::expm1(-c.theta() * std::log(x));
      return std::exp(-std::log1p(s) / c.theta());
    }
    case Family::Gumbel: {
      double t = 0.0;
      for (double x : u) t += std::pow(-std::log(x), c.theta());
      if (t == 0.0) return 1.0;
      return std::exp(-std::pow(t, 1.0 / c.theta()));
    }
    case Family::MarshallOlkin: {
      double a = std::pow(u[0], 1.0 - c.alpha1()) * u[1];
      double b = u[0] * std::pow(u[1], 1.0 - c.alpha2());
      return std::min(a, b);
    }
    case Family::Mixture: {
      double prod = 1.0, mn = 1.0;
      for (double x : u) {
        prod *= x;
        mn = std::min(mn, x);
      }
      return c.lambda() * prod + (1.0 - c.lambda()) * mn;
    }
    default:
      throw std::domain_error(std::string("cdf-unavailable: no closed-form CDF for family ") +
                              c.family_name());
  }
}

// ---------------------------------------------------------------------------
// Gumbel generator derivatives
//
// psi(t) = exp(-t^a), a = 1/theta in (0,1]. Then
//   psi^(k)(t) = (-1)^k exp(-y) t^(-k) P_k(y),  y = t^a,
// where P_k has nonnegative coefficients obeying
//   p_{k+1,i} = (k - a i) p_{k,i} + a p_{k,i-1},  P_1(y) = a y.

namespace {

class GumbelDerivs {
 public:
  GumbelDerivs(double alpha, int max_order) : alpha_(alpha) {
    coef_.resize(max_order + 1);
    coef_[0] = {1.0};  // P_0 = 1
    for (int k = 0; k < max_order; ++k) {
      const auto& p = coef_[k];
      std::vector<double> q(k + 2, 0.0);
      for (int i = 0; i <= k; ++i) {
        q[i] += (k - alpha_ * i) * p[i];
        q[i + 1] += alpha_ * p[i];
      }
      coef_[k + 1] = std::move(q);
    }
  }

  // log of (-1)^k psi^(k)(t) for t > 0
  double log_abs_deriv(int k, double t) const {
    double y = std::pow(t, alpha_);
    return -y - k * std::log(t) + std::log(poly(k, y));
  }

  double poly(int k, double y) const {
    const auto& p = coef_[k];
    double acc = 0.0;
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) acc = acc * y + p[i];
    if (!(acc > 0.0) || !std::isfinite(acc))
      throw NumericalError("gumbel: generator derivative polynomial over/underflow");
    return acc;
  }

 private:
  double alpha_;
  std::vector<std::vector<double>> coef_;  // coef_[k][i], i = 0..k
};

}  // namespace

// ---------------------------------------------------------------------------
// conditional state shared by cdm_sample / rosenblatt

namespace {

struct CondState {
  const Copula& c;
  // elliptical: latent coordinates propagated through the Cholesky factor
  std::vector<double> w;
  double g = 0.0;  // squared norm of w
  int filled = 0;
  // Archimedean running sums
  double clayton_sum = 0.0;  // sum of (u_l^-theta - 1)
  double gumbel_sum = 0.0;   // sum of (-log u_l)^theta
  // Marshall-Olkin remembers u_1
  double u1 = 0.0;
  const GumbelDerivs* gd = nullptr;

  explicit CondState(const Copula& cop) : c(cop) {
    if (cop.family() == Family::Gauss || cop.family() == Family::T) w.resize(cop.dim());
  }

  // latent value of the newly fixed coordinate u_{filled+1}
  void push(double u) {
    switch (c.family()) {
      case Family::Gauss:
      case Family::T: {
        double x = c.family() == Family::Gauss ? sf::normal_quantile(u) : sf::t_quantile(u, c.nu());
        const Matrix& l = c.chol();
        int i = filled;
        double s = x;
        for (int k = 0; k < i; ++k) s -= l(i, k) * w[k];
        w[i] = s / l(i, i);
        g += w[i] * w[i];
        break;
      }
      case Family::Clayton:
        clayton_sum += std::expm1(-c.theta() * std::log(u));
        break;
      case Family::Gumbel:
        gumbel_sum += std::pow(-std::log(u), c.theta());
        break;
      case Family::MarshallOlkin:
        if (filled == 0) u1 = u;
        break;
      default:
        break;
    }
    ++filled;
  }

  double cond_mean() const {
    const Matrix& l = c.chol();
    double s = 0.0;
    for (int k = 0; k < filled; ++k) s += l(filled, k) * w[k];
    return s;
  }

  double cond_sd() const { return c.chol()(filled, filled); }
};

// forward conditional CDF of u_j given the state (state.filled = j-1 >= 1)
double cond_cdf_state(const CondState& st, double uj) {
  const Copula& c = st.c;
  const int jm1 = st.filled;
  switch (c.family()) {
    case Family::Gauss: {
      double x = sf::normal_quantile(uj);
      return sf::normal_cdf((x - st.cond_mean()) / st.cond_sd());
    }
    case Family::T: {
      double x = sf::t_quantile(uj, c.nu());
      double s1 = std::sqrt((c.nu() + jm1) / (c.nu() + st.g));
      return sf::t_cdf((x - st.cond_mean()) / st.cond_sd() * s1, c.nu() + jm1);
    }
    case Family::Clayton: {
      double theta = c.theta();
      double a = 1.0 + st.clayton_sum;
      double num = std::expm1(-theta * std::log(uj));
      // exponent -(j-1+1/theta); see the generator-derivative ratio
      return std::exp(-(jm1 + 1.0 / theta) * std::log1p(num / a));
    }
    case Family::Gumbel: {
      double theta = c.theta();
      double t1 = st.gumbel_sum;
      double xj = std::pow(-std::log(uj), theta);
      double t2 = t1 + xj;
      return std::exp(st.gd->log_abs_deriv(jm1, t2) - st.gd->log_abs_deriv(jm1, t1));
    }
    case Family::MarshallOlkin: {
      double a1 = c.alpha1(), a2 = c.alpha2();
      double atom = std::pow(st.u1, a1 / a2);
      if (uj < atom) return (1.0 - a1) * std::pow(st.u1, -a1) * uj;
      return std::pow(uj, 1.0 - a2);
    }
    default:
      throw std::domain_error("cond_cdf: sampling not supported for this family");
  }
}

double cond_quantile_state(const CondState& st, double p) {
  const Copula& c = st.c;
  const int jm1 = st.filled;
  switch (c.family()) {
    case Family::Gauss: {
      double x = st.cond_mean() + st.cond_sd() * sf::normal_quantile(p);
      return sf::normal_cdf(x);
    }
    case Family::T: {
      double s1 = std::sqrt((c.nu() + jm1) / (c.nu() + st.g));
      double x = st.cond_mean() + st.cond_sd() * sf::t_quantile(p, c.nu() + jm1) / s1;
      return sf::t_cdf(x, c.nu());
    }
    case Family::Clayton: {
      double theta = c.theta();
      double a = 1.0 + st.clayton_sum;
      double e = theta / (1.0 + jm1 * theta);  // 1/(j-1+1/theta)
      double grow = std::expm1(-e * std::log(p));
      return std::exp(-std::log1p(a * grow) / theta);
    }
    case Family::Gumbel: {
      // safeguarded Newton on u_j in [eps, 1-eps]
      const double eps = 1e-15;
      double lo = eps, hi = 1.0 - eps;
      double flo = cond_cdf_state(st, lo), fhi = cond_cdf_state(st, hi);
      if (p <= flo) return lo;
      if (p >= fhi) return hi;
      double theta = c.theta(), alpha = 1.0 / theta;
      double t1 = st.gumbel_sum;
      double log_denom = st.gd->log_abs_deriv(jm1, t1);
      double u = 0.5 * (lo + hi);
      for (int it = 0; it < 200; ++it) {
        double xj = std::pow(-std::log(u), theta);
        double t2 = t1 + xj;
        double f = std::exp(st.gd->log_abs_deriv(jm1, t2) - log_denom) - p;
        if (f > 0.0) hi = u; else lo = u;
        if (std::abs(f) < 1e-13) return u;
        // f'(u) = exp(log|psi^(j)(t2)| - log_denom) * theta * x^(1-alpha) / u
        double dlog = st.gd->log_abs_deriv(jm1 + 1, t2);
        double fp = std::exp(dlog - log_denom) * theta * std::pow(xj, 1.0 - alpha) / u;
        double un = u - f / fp;
        if (!(un > lo && un < hi)) un = 0.5 * (lo + hi);
        if (std::abs(un - u) < 1e-17) return un;
        u = un;
      }
      throw NumericalError("gumbel cond_quantile: no convergence after 200 iterations (p=" +
                           std::to_string(p) + ", j=" + std::to_string(jm1 + 1) + ")");
    }
    case Family::MarshallOlkin: {
      double a1 = c.alpha1(), a2 = c.alpha2();
      double k = std::pow(st.u1, a1 * (1.0 / a2 - 1.0));
      double low = (1.0 - a1) * k;
      if (p <= low) return p * std::pow(st.u1, a1) / (1.0 - a1);
      if (p < k) return std::pow(st.u1, a1 / a2);  // atom branch
      return std::pow(p, 1.0 / (1.0 - a2));
    }
    default:
      throw std::domain_error("cond_quantile: sampling not supported for this family");
  }
}

GumbelDerivs make_gumbel_derivs(const Copula& c) {
  return GumbelDerivs(1.0 / c.theta(), c.dim() + 1);
}

}  // namespace

// ---------------------------------------------------------------------------
// public conditional API

double cond_cdf(const Copula& c, int j, const double* u) {
  if (j < 2 || j > c.dim()) throw std::invalid_argument("cond_cdf: need 2 <= j <= d");
  for (int l = 0; l < j; ++l) require_interior(u[l], "cond_cdf");
  CondState st(c);
  GumbelDerivs gd = c.family() == Family::Gumbel ? make_gumbel_derivs(c) : GumbelDerivs(1.0, 0);
  st.gd = &gd;
  for (int l = 0; l < j - 1; ++l) st.push(u[l]);
  return cond_cdf_state(st, u[j - 1]);
}

double cond_quantile(const Copula& c, int j, const double* prefix, double p) {
  if (j < 2 || j > c.dim()) throw std::invalid_argument("cond_quantile: need 2 <= j <= d");
  require_interior(p, "cond_quantile");
  for (int l = 0; l < j - 1; ++l) require_interior(prefix[l], "cond_quantile");
  CondState st(c);
  GumbelDerivs gd = c.family() == Family::Gumbel ? make_gumbel_derivs(c) : GumbelDerivs(1.0, 0);
  st.gd = &gd;
  for (int l = 0; l < j - 1; ++l) st.push(prefix[l]);
  return cond_quantile_state(st, p);
}

void cdm_sample(const Copula& c, const double* v, double* u) {
  const int d = c.dim();
  for (int l = 0; l < d; ++l) require_interior(v[l], "cdm_sample");
  CondState st(c);
  GumbelDerivs gd = c.family() == Family::Gumbel ? make_gumbel_derivs(c) : GumbelDerivs(1.0, 0);
  st.gd = &gd;
  u[0] = v[0];
  st.push(u[0]);
  for (int j = 2; j <= d; ++j) {
    // quantiles can saturate to 0/1 in the far tails; keep the chain interior
    u[j - 1] = clamp_unit(cond_quantile_state(st, v[j - 1]));
    st.push(u[j - 1]);
  }
}

void rosenblatt(const Copula& c, const double* u, double* v) {
  const int d = c.dim();
  for (int l = 0; l < d; ++l) require_interior(u[l], "rosenblatt");
  CondState st(c);
  GumbelDerivs gd = c.family() == Family::Gumbel ? make_gumbel_derivs(c) : GumbelDerivs(1.0, 0);
  st.gd = &gd;
  v[0] = u[0];
  st.push(u[0]);
  for (int j = 2; j <= d; ++j) {
    v[j - 1] = cond_cdf_state(st, u[j - 1]);
    st.push(u[j - 1]);
  }
}

// ---------------------------------------------------------------------------
// stochastic representations

void stochastic_sample_gauss(const Copula& c, const double* v, double* u) {
  if (c.family() != Family::Gauss) throw std::invalid_argument("stochastic_sample_gauss: gauss family required");
  const int d = c.dim();
  const Matrix& l = c.chol();
  std::vector<double> z(d);
  for (int j = 0; j < d; ++j) {
    require_interior(v[j], "stochastic_sample_gauss");
    z[j] = sf::normal_quantile(v[j]);
  }
  for (int i = 0; i < d; ++i) {
    double s = 0.0;
    for (int k = 0; k <= i; ++k) s += l(i, k) * z[k];
    u[i] = sf::normal_cdf(s);
  }
}

void stochastic_sample_t(const Copula& c, const double* v, double* u) {
  if (c.family() != Family::T) throw std::invalid_argument("stochastic_sample_t: t family required");
  const int d = c.dim();
  const Matrix& l = c.chol();
  for (int j = 0; j <= d; ++j) require_interior(v[j], "stochastic_sample_t");
  std::vector<double> z(d);
  for (int j = 0; j < d; ++j) z[j] = sf::normal_quantile(v[j]);
  double gamma = sf::gamma_quantile(v[d], 0.5 * c.nu(), 0.5 * c.nu());
  double sqw = 1.0 / std::sqrt(gamma);  // sqrt(W), W = 1/Gamma
  for (int i = 0; i < d; ++i) {
    double s = 0.0;
    for (int k = 0; k <= i; ++k) s += l(i, k) * z[k];
    u[i] = sf::t_cdf(sqw * s, c.nu());
  }
}

void mo_algorithm_sample(const Copula& c, const double* v, double* u) {
  if (c.family() != Family::Clayton)
    throw std::invalid_argument("mo_algorithm_sample: clayton family required (V ~ Gamma(1/theta,1))");
  const int d = c.dim();
  for (int j = 0; j <= d; ++j) require_interior(v[j], "mo_algorithm_sample");
  double vfrail = sf::gamma_quantile(v[0], 1.0 / c.theta(), 1.0);
  for (int j = 0; j < d; ++j) {
    // exponentials by inversion of 1 - v_{j+1}, i.e. E = -log(v_{j+1}),
    // so that u_j is increasing in both v_1 and v_{j+1}
    double e = -std::log(v[j + 1]);
    u[j] = std::exp(-std::log1p(e / vfrail) / c.theta());
  }
}

void mo_copula_sample(const Copula& c, const double* v, double* u) {
  if (c.family() != Family::MarshallOlkin)
    throw std::invalid_argument("mo_copula_sample: marshall-olkin family required");
  for (int j = 0; j < 3; ++j) require_interior(v[j], "mo_copula_sample");
  double a1 = c.alpha1(), a2 = c.alpha2();
  u[0] = std::max(std::pow(v[0], 1.0 / (1.0 - a1)), std::pow(v[2], 1.0 / a1));
  u[1] = std::max(std::pow(v[1], 1.0 / (1.0 - a2)), std::pow(v[2], 1.0 / a2));
}

// ---------------------------------------------------------------------------
// batch transform

int sampler_input_dim(SamplerKind s, const Copula& c) {
  switch (s) {
    case SamplerKind::CDM: return c.dim();
    case SamplerKind::StochGauss: return c.dim();
    case SamplerKind::StochT: return c.dim() + 1;
    case SamplerKind::MO:
      return c.family() == Family::MarshallOlkin ? 3 : c.dim() + 1;
  }
  return c.dim();
}

const char* sampler_name(SamplerKind s) {
  switch (s) {
    case SamplerKind::CDM: return "cdm";
    case SamplerKind::MO: return "mo";
    case SamplerKind::StochGauss: return "stochgauss";
    case SamplerKind::StochT: return "stocht";
  }
  return "?";
}

std::vector<double> sample_matrix(const Copula& c, SamplerKind s, const double* pts, int n, int k) {
  const int need = sampler_input_dim(s, c);
  if (k != need)
    throw std::invalid_argument(std::string("sample_matrix: sampler ") + sampler_name(s) +
                                " needs point dimension " + std::to_string(need) + ", got " +
                                std::to_string(k));
  switch (s) {
    case SamplerKind::StochGauss:
      if (c.family() != Family::Gauss) throw std::invalid_argument("sample_matrix: stochgauss needs gauss family");
      break;
    case SamplerKind::StochT:
      if (c.family() != Family::T) throw std::invalid_argument("sample_matrix: stocht needs t family");
      break;
    case SamplerKind::MO:
      if (c.family() != Family::Clayton && c.family() != Family::MarshallOlkin)
        throw std::invalid_argument("sample_matrix: mo sampler needs clayton or marshall-olkin family");
      break;
    case SamplerKind::CDM:
      if (c.family() == Family::Mixture)
        throw std::invalid_argument("sample_matrix: mixture family has no sampler");
      break;
  }

  const int d = c.dim();
  std::vector<double> out(static_cast<std::size_t>(n) * d);
  std::vector<double> v(k);
  for (int i = 0; i < n; ++i) {
    const double* row = pts + static_cast<std::size_t>(i) * k;
    for (int j = 0; j < k; ++j) v[j] = clamp_unit(row[j]);
    double* urow = out.data() + static_cast<std::size_t>(i) * d;
    switch (s) {
      case SamplerKind::CDM: cdm_sample(c, v.data(), urow); break;
      case SamplerKind::StochGauss: stochastic_sample_gauss(c, v.data(), urow); break;
      case SamplerKind::StochT: stochastic_sample_t(c, v.data(), urow); break;
      case SamplerKind::MO:
        if (c.family() == Family::MarshallOlkin) mo_copula_sample(c, v.data(), urow);
        else mo_algorithm_sample(c, v.data(), urow);
        break;
    }
    for (int j = 0; j < d; ++j) urow[j] = clamp_unit(urow[j]);
  }
  return out;
}

std::vector<double> sample_matrix(const Copula& c, SamplerKind s, const lds::PointSet& p) {
  return sample_matrix(c, s, p.pts.data(), p.n, p.k);
}

}  // namespace qmccop::copulas
