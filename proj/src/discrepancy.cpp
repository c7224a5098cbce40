#include "qmccop/discrepancy.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "qmccop/csv.hpp"

namespace qmccop::discrepancy {

using copulas::Copula;
using copulas::Family;

namespace {

void require_desk_scale(PointsView p, const char* who) {
  if (p.k > 2) throw std::invalid_argument(std::string(who) + ": only k <= 2 supported");
  if (p.n > 512) throw std::invalid_argument(std::string(who) + ": only n <= 512 supported");
  if (p.n < 1) throw std::invalid_argument(std::string(who) + ": empty point set");
}

std::vector<double> grid_levels(PointsView p, int j) {
  std::vector<double> g(p.n);
  for (int i = 0; i < p.n; ++i) g[i] = p(i, j);
  g.push_back(1.0);
  std::sort(g.begin(), g.end());
  g.erase(std::unique(g.begin(), g.end()), g.end());
  return g;
}

// sup over grid corners of max(measure - A_strict/n, A_closed/n - measure)
template <typename MeasureFn>
double grid_sup(PointsView p, MeasureFn&& measure) {
  const int n = p.n;
  double best = 0.0;
  if (p.k == 1) {
    std::vector<double> gx = grid_levels(p, 0);
    for (double zx : gx) {
      int strict = 0, closed = 0;
      for (int i = 0; i < n; ++i) {
        strict += p(i, 0) < zx;
        closed += p(i, 0) <= zx;
      }
      double m = measure(zx, 1.0);
      best = std::max(best, std::max(m - static_cast<double>(strict) / n,
                                     static_cast<double>(closed) / n - m));
    }
    return best;
  }
  std::vector<double> gx = grid_levels(p, 0), gy = grid_levels(p, 1);
  for (double zx : gx)
    for (double zy : gy) {
      int strict = 0, closed = 0;
      for (int i = 0; i < n; ++i) {
        double x = p(i, 0), y = p(i, 1);
        strict += (x < zx) && (y < zy);
        closed += (x <= zx) && (y <= zy);
      }
      double m = measure(zx, zy);
      best = std::max(best, std::max(m - static_cast<double>(strict) / n,
                                     static_cast<double>(closed) / n - m));
    }
  return best;
}

}  // namespace

double star_discrepancy_exact(PointsView p) {
  require_desk_scale(p, "star_discrepancy_exact");
  return grid_sup(p, [](double zx, double zy) { return zx * zy; });
}

double star_copula_discrepancy_grid(PointsView p, const Copula& c) {
  require_desk_scale(p, "star_copula_discrepancy_grid");
  if (!copulas::cdf_available(c))
    throw std::domain_error("star_copula_discrepancy_grid: cdf-unavailable for this family");
  if (c.dim() != p.k) throw std::invalid_argument("star_copula_discrepancy_grid: dimension mismatch");
  std::vector<double> z(p.k);
  return grid_sup(p, [&](double zx, double zy) {
    z[0] = zx;
    if (p.k == 2) z[1] = zy;
    return copulas::copula_cdf(c, z);
  });
}

// ---------------------------------------------------------------------------
// L2 star discrepancies

namespace {

// pair term (1/n^2) sum_{k,l} prod_j (1 - max(u_kj, u_lj)), fixed order
double pair_sum(PointsView p) {
  const int n = p.n, k = p.k;
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    // diagonal term
    double diag = 1.0;
    for (int j = 0; j < k; ++j) diag *= 1.0 - p(i, j);
    total += diag;
    for (int l = i + 1; l < n; ++l) {
      double prod = 1.0;
      for (int j = 0; j < k; ++j) prod *= 1.0 - std::max(p(i, j), p(l, j));
      total += 2.0 * prod;
    }
  }
  return total / (static_cast<double>(n) * n);
}

}  // namespace

double l2_star_uniform(PointsView p) {
  const int n = p.n, k = p.k;
  double mid = 0.0;
  for (int i = 0; i < n; ++i) {
    double prod = 1.0;
    for (int j = 0; j < k; ++j) prod *= (1.0 - p(i, j) * p(i, j)) * 0.5;
    mid += prod;
  }
  double sq = pair_sum(p) - 2.0 * mid / n + std::pow(3.0, -k);
  return std::sqrt(std::max(0.0, sq));
}

// ---------------------------------------------------------------------------
// mixture copula closed form

namespace {

// integral of min(z) over the box [u,1]^d via the bands of
// t -> prod_j (1 - max(u_j, t)) between sorted coordinates
double min_tail_integral(const double* u, int d) {
  std::vector<double> w(u, u + d);
  std::sort(w.begin(), w.end());
  // suffix products of (1 - w_i)
  std::vector<double> suffix(d + 1, 1.0);
  for (int i = d - 1; i >= 0; --i) suffix[i] = suffix[i + 1] * (1.0 - w[i]);
  double total = 0.0;
  double prev = 0.0;  // w_0 = 0
  for (int m = 0; m <= d; ++m) {
    double next = m < d ? w[m] : 1.0;
    if (next > prev)
      total += suffix[m] *
               (std::pow(1.0 - prev, m + 1) - std::pow(1.0 - next, m + 1)) / (m + 1);
    prev = next;
  }
  return total;
}

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

double l2_star_copula_discrepancy_mixture(PointsView p, double lambda) {
  if (!(lambda > 0.0 && lambda <= 1.0))
    throw std::invalid_argument("l2_star_copula_discrepancy_mixture: lambda must be in (0,1]");
  const int d = p.k, n = p.n;
  if (d < 1) throw std::invalid_argument("l2_star_copula_discrepancy_mixture: d >= 1 required");
  if (d > 8) throw std::invalid_argument("l2_star_copula_discrepancy_mixture: d > 8 rejected");

  double odd = 1.0;
  for (int i = 1; i <= d; ++i) odd *= 2.0 * i + 1.0;
  double int_c2 = lambda * lambda * std::pow(3.0, -d) +
                  (1.0 - lambda) * (1.0 - lambda) * 2.0 / ((d + 1.0) * (d + 2.0)) +
                  2.0 * lambda * (1.0 - lambda) * factorial(d) / odd;

  double tail = 0.0;
  std::vector<double> row(d);
  for (int i = 0; i < n; ++i) {
    double prod = 1.0;
    for (int j = 0; j < d; ++j) {
      row[j] = p(i, j);
      prod *= (1.0 - row[j] * row[j]) * 0.5;
    }
    tail += lambda * prod + (1.0 - lambda) * min_tail_integral(row.data(), d);
  }
  double sq = pair_sum(p) + int_c2 - 2.0 * tail / n;
  return std::sqrt(std::max(0.0, sq));
}

// ---------------------------------------------------------------------------
// quadrature-backed T*_C

namespace {

struct GaussLegendre {
  std::vector<double> x, w;  // nodes/weights on [-1,1]
};

// Golub-Welsch via Newton on Legendre polynomials; cached per order
const GaussLegendre& gl_rule(int order) {
  static std::array<GaussLegendre, 33> cache;
  GaussLegendre& r = cache[order];
  if (!r.x.empty()) return r;
  r.x.resize(order);
  r.w.resize(order);
  for (int i = 0; i < (order + 1) / 2; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (order + 0.5));
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= order; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      double dp = order * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= order; ++k) {
      double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    double dp = order * (x * p1 - p0) / (x * x - 1.0);
    r.x[i] = -x;
    r.x[order - 1 - i] = x;
    r.w[i] = r.w[order - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return r;
}

// Recursive tensor quadrature over [lo_j, 1]^d with family-specific
// breakpoints per axis; each smooth segment uses `panels` geometrically
// graded Gauss-Legendre panels (finer toward the left endpoint).
struct BoxQuad {
  const Copula& c;
  bool squared;
  int order;
  int panels;
  std::vector<double> z;  // work buffer

  double run(const std::vector<double>& lo) { return level(0, lo); }

  double level(int j, const std::vector<double>& lo) {
    const int d = c.dim();
    const GaussLegendre& rule = gl_rule(order);

    // axis breakpoints from the non-smooth structure of C
    std::vector<double> cuts;
    cuts.push_back(lo[j]);
    if (c.family() == Family::Mixture) {
      for (int t = 0; t < j; ++t)
        if (z[t] > lo[j] && z[t] < 1.0) cuts.push_back(z[t]);
    } else if (c.family() == Family::MarshallOlkin && j == 1) {
      double b = std::pow(z[0], c.alpha1() / c.alpha2());
      if (b > lo[j] && b < 1.0) cuts.push_back(b);
    }
    cuts.push_back(1.0);
    std::sort(cuts.begin(), cuts.end());

    double total = 0.0;
    for (std::size_t s = 0; s + 1 < cuts.size(); ++s) {
      double a = cuts[s], b = cuts[s + 1];
      if (b <= a) continue;
      // geometric grading: panel widths 1 : 3 : 9 ... from the left
      double wsum = 0.0, r = 1.0;
      for (int t = 0; t < panels; ++t) { wsum += r; r *= 3.0; }
      double left = a, width = (b - a) / wsum;
      r = 1.0;
      for (int t = 0; t < panels; ++t) {
        double right = (t == panels - 1) ? b : left + width * r;
        double h = 0.5 * (right - left), m = 0.5 * (right + left);
        for (int q = 0; q < order; ++q) {
          z[j] = m + h * rule.x[q];
          double f;
          if (j + 1 < d) {
            f = level(j + 1, lo);
          } else {
            std::vector<double> zz(z.begin(), z.begin() + d);
            double cv = copulas::copula_cdf(c, zz);
            f = squared ? cv * cv : cv;
          }
          total += rule.w[q] * h * f;
        }
        left = right;
        r *= 3.0;
      }
    }
    return total;
  }
};

double box_integral(const Copula& c, bool squared, const std::vector<double>& lo, int order,
                    int panels) {
  BoxQuad q{c, squared, order, panels, std::vector<double>(c.dim(), 0.0)};
  return q.run(lo);
}

}  // namespace

double l2_star_copula_discrepancy(PointsView p, const Copula& c, double quad_tol) {
  if (!copulas::cdf_available(c))
    throw std::domain_error("l2_star_copula_discrepancy: cdf-unavailable for this family");
  const int d = c.dim(), n = p.n;
  if (p.k != d) throw std::invalid_argument("l2_star_copula_discrepancy: dimension mismatch");
  if (d > 3)
    throw std::invalid_argument("l2_star_copula_discrepancy: quadrature path restricted to d <= 3");

  double pair = pair_sum(p);

  auto assemble = [&](int order, int panels) {
    std::vector<double> zero(d, 0.0);
    double int_c2 = box_integral(c, true, zero, order, panels);
    double tails = 0.0;
    std::vector<double> lo(d);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < d; ++j) lo[j] = p(i, j);
      tails += box_integral(c, false, lo, order, panels);
    }
    double sq = pair + int_c2 - 2.0 * tails / n;
    return std::sqrt(std::max(0.0, sq));
  };

  double coarse = assemble(12, 2);
  double fine = assemble(16, 3);
  if (std::abs(fine - coarse) > quad_tol)
    throw NumericalError("l2_star_copula_discrepancy: quadrature error estimate " +
                         format_double(std::abs(fine - coarse)) + " exceeds tolerance " +
                         format_double(quad_tol));
  return fine;
}

// ---------------------------------------------------------------------------

const char* DiscrepancyReport::kind_name(Kind k) {
  switch (k) {
    case Kind::StarExact: return "star_exact";
    case Kind::L2StarUniform: return "l2_star_uniform";
    case Kind::L2StarCopula: return "l2_star_copula";
    case Kind::StarCopulaGrid: return "star_copula_grid";
  }
  return "?";
}

std::string DiscrepancyReport::csv_row() const {
  std::ostringstream os;
  os << kind_name(kind) << ',' << n << ',' << k << ',' << family << ',' << params << ','
     << format_double(value);
  return os.str();
}

}  // namespace qmccop::discrepancy
