#include "qmccop/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <atomic>
#include <numeric>
#include <ostream>
#include <thread>

#include "qmccop/csv.hpp"
#include "qmccop/rng.hpp"

namespace qmccop::experiments {

namespace sf = qmccop::specfun;
using copulas::Copula;
using copulas::SamplerKind;

// ---------------------------------------------------------------------------
// functionals

const char* Functional::kind_name(FunctionalKind k) {
  switch (k) {
    case FunctionalKind::BasketCall: return "basketcall";
    case FunctionalKind::BestOfCall: return "bestofcall";
    case FunctionalKind::VaR: return "var";
    case FunctionalKind::ES: return "es";
    case FunctionalKind::AllocationFirst: return "allocationfirst";
    case FunctionalKind::AllocationMiddle: return "allocationmiddle";
    case FunctionalKind::Psi1: return "psi1";
    case FunctionalKind::Psi2: return "psi2";
  }
  return "?";
}

void Functional::validate(int d) const {
  if (is_finance()) {
    if (static_cast<int>(margins.size()) != d)
      throw ConfigError("functional: need one margin per dimension");
    if (!(level > 0.0 && level < 1.0)) throw ConfigError("functional: level must be in (0,1)");
    if ((kind == FunctionalKind::BasketCall || kind == FunctionalKind::BestOfCall) && !(strike > 0.0))
      throw ConfigError("functional: strike must be > 0");
  }
}

double functional_truth(const Functional& f, int d) {
  switch (f.kind) {
    case FunctionalKind::Psi1:
      return 1.0;
    case FunctionalKind::Psi2: {
      double prod = 1.0;
      for (int j = 1; j <= d; ++j) prod *= (j + 1.25) / (j + 1.0);
      return prod;
    }
    default:
      return std::numeric_limits<double>::quiet_NaN();
  }
}

namespace {

// upper order statistic at ceil(level*n), left-continuous empirical quantile
double empirical_var(std::vector<double>& s, double level) {
  std::size_t idx = static_cast<std::size_t>(std::ceil(level * s.size()));
  idx = std::min(std::max<std::size_t>(idx, 1), s.size());
  std::nth_element(s.begin(), s.begin() + (idx - 1), s.end());
  return s[idx - 1];
}

}  // namespace

ReplicateOutcome evaluate_functional(const Functional& f, const Copula& c, const double* U,
                                     int n, int d) {
  ReplicateOutcome out;
  switch (f.kind) {
    case FunctionalKind::Psi1: {
      double acc = 0.0;
      for (int i = 0; i < n; ++i) {
        const double* u = U + static_cast<std::size_t>(i) * d;
        double s = 0.0;
        for (int j = 0; j < d; ++j) s += u[j] * u[j];
        acc += 3.0 * s / d;
      }
      out.estimate = acc / n;
      return out;
    }
    case FunctionalKind::Psi2: {
      std::vector<double> v(d), row(d);
      double acc = 0.0;
      for (int i = 0; i < n; ++i) {
        const double* u = U + static_cast<std::size_t>(i) * d;
        for (int j = 0; j < d; ++j) row[j] = copulas::clamp_unit(u[j]);
        copulas::rosenblatt(c, row.data(), v.data());
        double g = 1.0;
        for (int j = 0; j < d; ++j)
          g *= (std::abs(4.0 * v[j] - 1.0) + (j + 1.0)) / (1.0 + (j + 1.0));
        acc += g;
      }
      out.estimate = acc / n;
      return out;
    }
    default:
      break;
  }

  // finance functionals: push through the margins first
  std::vector<double> S(n);
  std::vector<double> first(n), middle(n), maxx(n);
  const int mid_index = (d + 1) / 2 - 1;  // X_{ceil(d/2)}, zero-based
  for (int i = 0; i < n; ++i) {
    const double* u = U + static_cast<std::size_t>(i) * d;
    double sum = 0.0, mx = -std::numeric_limits<double>::infinity();
    for (int j = 0; j < d; ++j) {
      double x = sf::margin_quantile(f.margins[j], copulas::clamp_unit(u[j]));
      sum += x;
      mx = std::max(mx, x);
      if (j == 0) first[i] = x;
      if (j == mid_index) middle[i] = x;
    }
    S[i] = sum;
    maxx[i] = mx;
  }

  switch (f.kind) {
    case FunctionalKind::BasketCall: {
      double acc = 0.0;
      for (int i = 0; i < n; ++i) acc += std::max(S[i] / d - f.strike, 0.0);
      out.estimate = acc / n;
      return out;
    }
    case FunctionalKind::BestOfCall: {
      double acc = 0.0;
      for (int i = 0; i < n; ++i) acc += std::max(maxx[i] - f.strike, 0.0);
      out.estimate = acc / n;
      return out;
    }
    case FunctionalKind::VaR: {
      std::vector<double> s = S;
      out.estimate = empirical_var(s, f.level);
      return out;
    }
    case FunctionalKind::ES:
    case FunctionalKind::AllocationFirst:
    case FunctionalKind::AllocationMiddle: {
      std::vector<double> s = S;
      double var = empirical_var(s, f.level);
      double acc = 0.0;
      int count = 0;
      for (int i = 0; i < n; ++i) {
        if (S[i] > var) {  // strict exceedance of the within-replicate VaR
          ++count;
          if (f.kind == FunctionalKind::ES) acc += S[i];
          else if (f.kind == FunctionalKind::AllocationFirst) acc += first[i];
          else acc += middle[i];
        }
      }
      if (count == 0) {
        out.degenerate = true;
        out.estimate = std::numeric_limits<double>::quiet_NaN();
      } else {
        out.estimate = acc / count;
      }
      return out;
    }
    default:
      throw std::logic_error("evaluate_functional: unhandled kind");
  }
}

// ---------------------------------------------------------------------------
// experiment harness

void ExperimentConfig::validate() const {
  method.sequence.validate();
  functional.validate(copula.dim());
  if (B < 1) throw ConfigError("experiment: B must be >= 1");
  if (nGrid.empty()) throw ConfigError("experiment: empty sample size grid");
  for (int n : nGrid)
    if (n < 1) throw ConfigError("experiment: sample sizes must be >= 1");
  const int need = copulas::sampler_input_dim(sampler, copula);
  if (method.sequence.dimension != need)
    throw ConfigError("experiment: sampler " + std::string(copulas::sampler_name(sampler)) +
                      " needs point dimension " + std::to_string(need) + ", sequence has " +
                      std::to_string(method.sequence.dimension));
  if (functional.kind == FunctionalKind::Psi2 && !copulas::cdf_available(copula) &&
      copula.family() == copulas::Family::Mixture)
    throw ConfigError("experiment: psi2 needs a sampleable copula");
  // tail functionals need enough points in the tail
  if (functional.is_finance() && functional.kind != FunctionalKind::BasketCall &&
      functional.kind != FunctionalKind::BestOfCall)
    for (int n : nGrid)
      if ((1.0 - functional.level) * n < 10.0)
        throw ConfigError("experiment: level*n too small for tail estimation (n=" +
                          std::to_string(n) + ")");
}

const char* sequence_kind_name(lds::SequenceKind k) {
  switch (k) {
    case lds::SequenceKind::Halton: return "halton";
    case lds::SequenceKind::GeneralizedHalton: return "ghalton";
    case lds::SequenceKind::Sobol: return "sobol";
    case lds::SequenceKind::PseudoRandom: return "pseudorandom";
  }
  return "?";
}

const char* randomization_name(lds::RandomizationKind k) {
  switch (k) {
    case lds::RandomizationKind::None: return "none";
    case lds::RandomizationKind::Shift: return "shift";
    case lds::RandomizationKind::DigitalShift: return "digital";
  }
  return "?";
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  ExperimentResult result;
  result.method = cfg.method.name.empty() ? sequence_kind_name(cfg.method.sequence.kind)
                                          : cfg.method.name;
  result.sequence = sequence_kind_name(cfg.method.sequence.kind);
  result.randomization = cfg.method.sequence.is_deterministic()
                             ? randomization_name(cfg.method.randomization)
                             : "none";

  const std::uint64_t start = cfg.skipOrigin && cfg.method.sequence.is_deterministic() ? 2 : 1;

  for (int n : cfg.nGrid) {
    NRecord rec;
    rec.n = n;
    rec.estimates.resize(cfg.B);
    rec.degenerate.assign(cfg.B, 0);

    lds::Randomizer r;
    r.kind = cfg.method.randomization;
    r.seed = derive_seed(cfg.masterSeed, static_cast<std::uint64_t>(n));
    std::vector<lds::PointSet> reps =
        lds::randomized_replicates(cfg.method.sequence, n, cfg.B, r, start);

    auto work = [&](int b) {
      std::vector<double> U = copulas::sample_matrix(cfg.copula, cfg.sampler, reps[b]);
      ReplicateOutcome o =
          evaluate_functional(cfg.functional, cfg.copula, U.data(), n, cfg.copula.dim());
      rec.estimates[b] = o.estimate;
      rec.degenerate[b] = o.degenerate ? 1 : 0;
    };

    if (cfg.threads > 1) {
      std::vector<std::thread> pool;
      std::atomic<int> next{0};
      int nthreads = std::min(cfg.threads, cfg.B);
      for (int t = 0; t < nthreads; ++t)
        pool.emplace_back([&] {
          for (int b = next.fetch_add(1); b < cfg.B; b = next.fetch_add(1)) work(b);
        });
      for (auto& th : pool) th.join();
    } else {
      for (int b = 0; b < cfg.B; ++b) work(b);
    }

    double mean = std::accumulate(rec.estimates.begin(), rec.estimates.end(), 0.0) / cfg.B;
    double var = 0.0;
    for (double e : rec.estimates) var += (e - mean) * (e - mean);
    rec.replicateMean = mean;
    rec.replicateVariance = cfg.B > 1 ? var / (cfg.B - 1) : 0.0;

    double truth = functional_truth(cfg.functional, cfg.copula.dim());
    if (std::isnan(truth)) {
      rec.meanAbsError = std::numeric_limits<double>::quiet_NaN();
    } else {
      double mae = 0.0;
      for (double e : rec.estimates) mae += std::abs(e - truth);
      rec.meanAbsError = mae / cfg.B;
    }
    result.records.push_back(std::move(rec));
  }

  if (result.records.size() >= 3) {
    std::vector<double> ns, vs;
    bool ok = true;
    for (const auto& rec : result.records) {
      if (!(rec.replicateVariance > 0.0)) { ok = false; break; }
      ns.push_back(rec.n);
      vs.push_back(rec.replicateVariance);
    }
    result.fittedAlpha = ok ? fit_alpha(ns, vs) : std::numeric_limits<double>::quiet_NaN();
  } else {
    result.fittedAlpha = std::numeric_limits<double>::quiet_NaN();
  }
  return result;
}

double fit_alpha(const std::vector<double>& n, const std::vector<double>& values) {
  if (n.size() != values.size() || n.size() < 3)
    throw std::invalid_argument("fit_alpha: need >= 3 grid points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double m = static_cast<double>(n.size());
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (!(values[i] > 0.0)) throw std::invalid_argument("fit_alpha: values must be > 0");
    double x = std::log(n[i]), y = std::log(values[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  return -slope;
}

// ---------------------------------------------------------------------------
// Kendall's tau (Knight's algorithm)

namespace {

// counts swaps performed by merge sort = number of inversions
std::uint64_t merge_count(std::vector<double>& a, std::vector<double>& buf, std::size_t lo,
                          std::size_t hi) {
  if (hi - lo < 2) return 0;
  std::size_t mid = (lo + hi) / 2;
  std::uint64_t cnt = merge_count(a, buf, lo, mid) + merge_count(a, buf, mid, hi);
  std::size_t i = lo, j = mid, k = lo;
  while (i < mid && j < hi) {
    if (a[j] < a[i]) {
      cnt += mid - i;
      buf[k++] = a[j++];
    } else {
      buf[k++] = a[i++];
    }
  }
  while (i < mid) buf[k++] = a[i++];
  while (j < hi) buf[k++] = a[j++];
  std::copy(buf.begin() + lo, buf.begin() + hi, a.begin() + lo);
  return cnt;
}

std::uint64_t tie_pairs(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  std::uint64_t total = 0, run = 1;
  for (std::size_t i = 1; i <= v.size(); ++i) {
    if (i < v.size() && v[i] == v[i - 1]) {
      ++run;
    } else {
      total += run * (run - 1) / 2;
      run = 1;
    }
  }
  return total;
}

}  // namespace

double kendall_tau(const double* x, const double* y, int n) {
  if (n < 2) throw std::invalid_argument("kendall_tau: need n >= 2");
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    if (x[a] != x[b]) return x[a] < x[b];
    return y[a] < y[b];
  });
  std::vector<double> ys(n);
  for (int i = 0; i < n; ++i) ys[i] = y[idx[i]];

  // joint ties (pairs tied in both x and y)
  std::uint64_t joint = 0;
  {
    std::size_t i = 0;
    while (i < static_cast<std::size_t>(n)) {
      std::size_t j = i + 1;
      while (j < static_cast<std::size_t>(n) && x[idx[j]] == x[idx[i]] && ys[j] == ys[i]) ++j;
      std::uint64_t run = j - i;
      joint += run * (run - 1) / 2;
      i = j;
    }
  }
  std::uint64_t tx = tie_pairs(std::vector<double>(x, x + n));
  std::uint64_t ty = tie_pairs(std::vector<double>(y, y + n));

  std::vector<double> work = ys, buf(n);
  std::uint64_t discordant = merge_count(work, buf, 0, n);

  const double n0 = 0.5 * static_cast<double>(n) * (n - 1);
  double concordant_minus_discordant =
      n0 - static_cast<double>(tx) - static_cast<double>(ty) + static_cast<double>(joint) -
      2.0 * static_cast<double>(discordant);
  double denom = std::sqrt((n0 - tx) * (n0 - ty));
  return concordant_minus_discordant / denom;
}

// ---------------------------------------------------------------------------
// CSV output

void write_replicates_csv(std::ostream& os, const std::vector<ExperimentResult>& results) {
  os << "method,sequence,randomization,n,replicate,estimate,degenerate\n";
  for (const auto& res : results)
    for (const auto& rec : res.records)
      for (std::size_t b = 0; b < rec.estimates.size(); ++b)
        os << res.method << ',' << res.sequence << ',' << res.randomization << ',' << rec.n << ','
           << b << ',' << format_double(rec.estimates[b]) << ','
           << static_cast<int>(rec.degenerate[b]) << '\n';
}

void write_summary_csv(std::ostream& os, const std::vector<ExperimentResult>& results) {
  os << "method,n,mean,variance,meanAbsError,alpha\n";
  for (const auto& res : results)
    for (const auto& rec : res.records)
      os << res.method << ',' << rec.n << ',' << format_double(rec.replicateMean) << ','
         << format_double(rec.replicateVariance) << ',' << format_double(rec.meanAbsError) << ','
         << format_double(res.fittedAlpha) << '\n';
}

}  // namespace qmccop::experiments
