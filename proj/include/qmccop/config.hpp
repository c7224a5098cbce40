#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qmccop/copulas.hpp"
#include "qmccop/discrepancy.hpp"
#include "qmccop/experiments.hpp"
#include "qmccop/lds.hpp"

namespace qmccop::config {

// Parsed `gen` command configuration.
struct GenConfig {
  lds::SequenceSpec sequence;
  int n = 0;
  std::uint64_t startIndex = 1;
  lds::RandomizationKind randomization = lds::RandomizationKind::None;
  std::uint64_t seed = 0;
};

struct SampleConfig {
  copulas::Copula copula;
  copulas::SamplerKind sampler;
  lds::SequenceSpec sequence;
  int n = 0;
  bool skipOrigin = true;
  lds::RandomizationKind randomization = lds::RandomizationKind::None;
  std::uint64_t seed = 0;
};

struct DiscrepancyCase {
  discrepancy::DiscrepancyReport::Kind kind;
  bool mixture_closed_form = false;
  lds::SequenceSpec sequence;
  int n = 0;
  std::uint64_t startIndex = 1;
  std::vector<int> coordinates;  // 1-based projection, empty = all
  std::optional<copulas::Copula> copula;
  std::optional<copulas::SamplerKind> sampler;  // transform points before measuring
  double lambda = 1.0;                          // mixture closed form
  std::string label;
};

struct DiscrepancyConfig {
  std::vector<DiscrepancyCase> cases;
};

struct ExperimentFileConfig {
  copulas::Copula copula;
  copulas::SamplerKind sampler;
  experiments::Functional functional;
  std::vector<int> nGrid;
  int B = 25;
  std::uint64_t masterSeed = 42;
  bool skipOrigin = true;
  std::vector<experiments::Method> methods;
};

GenConfig parse_gen_config(const std::string& json_text);
SampleConfig parse_sample_config(const std::string& json_text);
DiscrepancyConfig parse_discrepancy_config(const std::string& json_text);
ExperimentFileConfig parse_experiment_config(const std::string& json_text);

}  // namespace qmccop::config
