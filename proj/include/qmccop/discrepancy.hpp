#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qmccop/copulas.hpp"
#include "qmccop/lds.hpp"

namespace qmccop::discrepancy {

// Read-only n x k matrix view; binds to a PointSet or a transformed sample.
struct PointsView {
  const double* data = nullptr;
  int n = 0;
  int k = 0;

  PointsView(const double* d_, int n_, int k_) : data(d_), n(n_), k(k_) {}
  PointsView(const lds::PointSet& p) : data(p.pts.data()), n(p.n), k(p.k) {}
  PointsView(const std::vector<double>& m, int n_, int k_) : data(m.data()), n(n_), k(k_) {}
  double operator()(int i, int j) const { return data[static_cast<std::size_t>(i) * k + j]; }
};

// Exact star discrepancy, k <= 2 and n <= 512 (coordinate-grid enumeration
// with open and closed corner counts).
double star_discrepancy_exact(PointsView p);

// classical L2 star discrepancy (Warnock formula), any dimension
double l2_star_uniform(PointsView p);

// T*_C: L2 star discrepancy against the copula-induced measure. Families
// without closed-form box integrals use a deterministic nested
// Gauss-Legendre quadrature; the two-resolution error estimate must certify
// `quad_tol` on the returned value or a NumericalError is thrown.
// Quadrature-backed families are limited to d <= 3.
double l2_star_copula_discrepancy(PointsView p, const copulas::Copula& c, double quad_tol = 1e-6);

// closed form of T*_C for the convex combination of the independence copula
// and the upper Frechet-Hoeffding bound; lambda = 1 is the Warnock value
double l2_star_copula_discrepancy_mixture(PointsView p, double lambda);

// sup of |A([0,z);P)/n - C(z)| over the coordinate-induced grid with both
// corner conventions; exact on boxes anchored at data coordinates, a lower
// bound for the true D*_C. k <= 2, n <= 512.
double star_copula_discrepancy_grid(PointsView p, const copulas::Copula& c);

struct DiscrepancyReport {
  enum class Kind { StarExact, L2StarUniform, L2StarCopula, StarCopulaGrid };
  Kind kind;
  double value;
  int n;
  int k;
  std::string family;  // empty when not copula-weighted
  std::string params;

  std::string csv_row() const;
  static const char* kind_name(Kind k);
};

}  // namespace qmccop::discrepancy
