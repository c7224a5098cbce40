// Test-only oracles, kept independent of the library implementation paths
// they are used to check.
#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "qmccop/mat.hpp"
#include "qmccop/rng.hpp"

namespace oracles {

// ---------------------------------------------------------------------------
// adaptive Simpson quadrature

inline double simpson_step(const std::function<double(double)>& f, double a, double b, double fa,
                           double fm, double fb, double whole, double tol, int depth) {
  double m = 0.5 * (a + b);
  double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  double flm = f(lm), frm = f(rm);
  double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  if (depth <= 0) return left + right;
  if (std::abs(left + right - whole) <= 15.0 * tol)
    return left + right + (left + right - whole) / 15.0;
  return simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

inline double integrate(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-10) {
  double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_step(f, a, b, fa, fm, fb, whole, tol, 48);
}

// ---------------------------------------------------------------------------
// bisection on a monotone function

inline double bisect(const std::function<double(double)>& f, double lo, double hi,
                     double target, int iters = 200) {
  double flo = f(lo) - target;
  for (int i = 0; i < iters; ++i) {
    double mid = 0.5 * (lo + hi);
    double fm = f(mid) - target;
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// ---------------------------------------------------------------------------
// regularized lower incomplete gamma via the plain power series
// P(a,x) = x^a e^-x / Gamma(a+1) * sum_k x^k / ((a+1)...(a+k))

inline double gamma_p_series(double a, double x) {
  if (x <= 0.0) return 0.0;
  double term = 1.0, sum = 1.0, ak = a;
  for (int k = 0; k < 2000; ++k) {
    ak += 1.0;
    term *= x / ak;
    sum += term;
    if (term < sum * 1e-17) break;
  }
  return sum * std::exp(a * std::log(x) - x - std::lgamma(a + 1.0));
}

// ---------------------------------------------------------------------------
// Kolmogorov-Smirnov uniformity check

inline double ks_statistic_uniform(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const double n = static_cast<double>(v.size());
  double d = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    d = std::max(d, std::abs((i + 1.0) / n - v[i]));
    d = std::max(d, std::abs(v[i] - i / n));
  }
  return d;
}

// asymptotic 1% critical value of the KS statistic
inline double ks_crit_1pct(std::size_t n) { return 1.6276236115189502 / std::sqrt(static_cast<double>(n)); }

// ---------------------------------------------------------------------------
// dense-scan lower bound of the star discrepancy (d <= 2)

template <typename Measure>
double dense_scan_sup(const double* pts, int n, int k, int cells, Measure&& measure) {
  double best = 0.0;
  if (k == 1) {
    for (int a = 1; a <= cells; ++a) {
      double zx = static_cast<double>(a) / cells;
      int strict = 0, closed = 0;
      for (int i = 0; i < n; ++i) {
        strict += pts[i] < zx;
        closed += pts[i] <= zx;
      }
      double m = measure(zx, 1.0);
      best = std::max({best, std::abs(m - static_cast<double>(strict) / n),
                       std::abs(static_cast<double>(closed) / n - m)});
    }
    return best;
  }
  for (int a = 1; a <= cells; ++a)
    for (int b = 1; b <= cells; ++b) {
      double zx = static_cast<double>(a) / cells, zy = static_cast<double>(b) / cells;
      int strict = 0, closed = 0;
      for (int i = 0; i < n; ++i) {
        double x = pts[2 * i], y = pts[2 * i + 1];
        strict += (x < zx) && (y < zy);
        closed += (x <= zx) && (y <= zy);
      }
      double m = measure(zx, zy);
      best = std::max({best, std::abs(m - static_cast<double>(strict) / n),
                       std::abs(static_cast<double>(closed) / n - m)});
    }
  return best;
}

// ---------------------------------------------------------------------------
// random correlation matrix: normalized Gram matrix of a random d x (d+2)
// normal matrix

inline qmccop::Matrix random_correlation(int d, qmccop::SplitMix64& g) {
  int m = d + 2;
  std::vector<double> a(static_cast<std::size_t>(d) * m);
  for (auto& x : a) {
    // Box-Muller from two uniforms
    double u1 = g.next_double(), u2 = g.next_double();
    x = std::sqrt(-2.0 * std::log(u1 + 1e-300)) * std::cos(2.0 * M_PI * u2);
  }
  qmccop::Matrix p(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j <= i; ++j) {
      double s = 0.0, si = 0.0, sj = 0.0;
      for (int t = 0; t < m; ++t) {
        s += a[i * m + t] * a[j * m + t];
        si += a[i * m + t] * a[i * m + t];
        sj += a[j * m + t] * a[j * m + t];
      }
      p(i, j) = p(j, i) = s / std::sqrt(si * sj);
    }
  return p;
}

}  // namespace oracles
