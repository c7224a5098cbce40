#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qmccop/copulas.hpp"
#include "qmccop/lds.hpp"
#include "qmccop/specfun.hpp"

namespace qmccop::experiments {

enum class FunctionalKind {
  BasketCall,
  BestOfCall,
  VaR,
  ES,
  AllocationFirst,
  AllocationMiddle,
  Psi1,
  Psi2
};

struct Functional {
  FunctionalKind kind = FunctionalKind::Psi1;
  double strike = 100.0;  // options
  double level = 0.99;    // tail functionals
  std::vector<specfun::Margin> margins;  // finance kinds only, length d

  bool is_finance() const {
    return kind != FunctionalKind::Psi1 && kind != FunctionalKind::Psi2;
  }
  void validate(int d) const;
  static const char* kind_name(FunctionalKind k);
};

// exact value when known (Psi1, Psi2), NaN otherwise
double functional_truth(const Functional& f, int d);

struct ReplicateOutcome {
  double estimate = 0.0;
  bool degenerate = false;  // empty exceedance set for ES/allocations
};

// one replicate estimate from an n x d copula sample
ReplicateOutcome evaluate_functional(const Functional& f, const copulas::Copula& c,
                                     const double* U, int n, int d);

struct Method {
  std::string name;
  lds::SequenceSpec sequence;
  lds::RandomizationKind randomization = lds::RandomizationKind::DigitalShift;
};

struct ExperimentConfig {
  copulas::Copula copula;
  copulas::SamplerKind sampler = copulas::SamplerKind::CDM;
  Method method;
  std::vector<int> nGrid;
  int B = 25;
  Functional functional;
  std::uint64_t masterSeed = 42;
  bool skipOrigin = true;  // start deterministic sequences at index 2
  int threads = 1;

  void validate() const;
};

struct NRecord {
  int n = 0;
  std::vector<double> estimates;       // length B
  std::vector<std::uint8_t> degenerate;
  double replicateMean = 0.0;
  double replicateVariance = 0.0;      // sample variance of the B estimates
  double meanAbsError = 0.0;           // NaN when the truth is unknown
};

struct ExperimentResult {
  std::string method;
  std::string sequence;
  std::string randomization;
  std::vector<NRecord> records;
  double fittedAlpha = 0.0;  // variance ~ n^-alpha regression
};

ExperimentResult run_experiment(const ExperimentConfig& cfg);

// OLS of log(values) on log(n); returns -slope. Needs >= 3 points, all > 0.
double fit_alpha(const std::vector<double>& n, const std::vector<double>& values);

// Kendall rank correlation, O(n log n) (merge-sort inversion counting),
// with tie corrections
double kendall_tau(const double* x, const double* y, int n);

const char* sequence_kind_name(lds::SequenceKind k);
const char* randomization_name(lds::RandomizationKind k);

void write_replicates_csv(std::ostream& os, const std::vector<ExperimentResult>& results);
void write_summary_csv(std::ostream& os, const std::vector<ExperimentResult>& results);

}  // namespace qmccop::experiments
