#pragma once

#include <vector>

#include "qmccop/common.hpp"
#include "qmccop/lds.hpp"
#include "qmccop/mat.hpp"

namespace qmccop::copulas {

enum class Family { Gauss, T, Clayton, Gumbel, MarshallOlkin, Mixture };

// Validated copula parameter value. Immutable after construction.
class Copula {
 public:
  static Copula gauss(Matrix corr);
  static Copula gauss_exchangeable(int d, double rho);
  static Copula t(double nu, Matrix corr);
  static Copula t_exchangeable(int d, double nu, double rho);
  static Copula clayton(double theta, int d);
  static Copula gumbel(double theta, int d);
  static Copula marshall_olkin(double alpha1, double alpha2);
  static Copula mixture(double lambda, int d);

  Family family() const { return family_; }
  int dim() const { return dim_; }
  double theta() const { return theta_; }
  double nu() const { return nu_; }
  double alpha1() const { return alpha1_; }
  double alpha2() const { return alpha2_; }
  double lambda() const { return lambda_; }
  const Matrix& corr() const { return corr_; }
  const Matrix& chol() const { return chol_; }

  const char* family_name() const;
  std::string params_string() const;

 private:
  Copula() = default;
  Family family_ = Family::Clayton;
  int dim_ = 2;
  double theta_ = 0, nu_ = 0, alpha1_ = 0, alpha2_ = 0, lambda_ = 0;
  Matrix corr_, chol_;
};

// C(u); supported for Clayton, Gumbel, MarshallOlkin and Mixture
// (elliptical CDFs have no closed form and signal cdf-unavailable).
double copula_cdf(const Copula& c, const std::vector<double>& u);
bool cdf_available(const Copula& c);

// C(u_j | u_1,...,u_{j-1}); u holds (u_1,...,u_j), 2 <= j <= d, all in (0,1)
double cond_cdf(const Copula& c, int j, const double* u);
// inverse in the last argument; prefix holds (u_1,...,u_{j-1})
double cond_quantile(const Copula& c, int j, const double* prefix, double p);

// u_1 = v_1, u_j = C^-(v_j | u_1..u_{j-1}); v strictly interior
void cdm_sample(const Copula& c, const double* v, double* u);
// exact inverse of cdm_sample: v_j = C(u_j | u_1..u_{j-1})
void rosenblatt(const Copula& c, const double* u, double* v);

// u = Phi(L z), z_j = Phi^{-1}(v_j); pathwise equal to the CDM for a
// lower-triangular Cholesky factor
void stochastic_sample_gauss(const Copula& c, const double* v, double* u);
// v has d+1 coordinates, the last drives W = 1/Gamma(nu/2, nu/2)
void stochastic_sample_t(const Copula& c, const double* v, double* u);
// Marshall-Olkin frailty algorithm for Clayton: V from v_1, E_j from v_{j+1}
void mo_algorithm_sample(const Copula& c, const double* v, double* u);
// bivariate Marshall-Olkin copula from three uniforms
void mo_copula_sample(const Copula& c, const double* v, double* u);

enum class SamplerKind { CDM, MO, StochGauss, StochT };

// point-set dimension the sampler consumes (d, or d+1 for MO / StochT)
int sampler_input_dim(SamplerKind s, const Copula& c);
const char* sampler_name(SamplerKind s);

// Transform a point set row-by-row into an n x d copula sample. Inputs and
// outputs are clamped to [2^-53, 1-2^-53]: quantile transforms never see an
// exact 0 or 1, and tail-saturated sample values stay strictly interior.
std::vector<double> sample_matrix(const Copula& c, SamplerKind s, const lds::PointSet& p);
std::vector<double> sample_matrix(const Copula& c, SamplerKind s, const double* pts, int n, int k);

inline double clamp_unit(double x) {
  constexpr double lo = 0x1.0p-53, hi = 1.0 - 0x1.0p-53;
  return x < lo ? lo : (x > hi ? hi : x);
}

}  // namespace qmccop::copulas
