#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qmccop/config.hpp"
#include "qmccop/csv.hpp"

namespace {

using namespace qmccop;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open output file: " + path);
  return out;
}

struct CommonArgs {
  std::string config;
  std::string out;
  std::optional<std::uint64_t> seed;
  int threads = 1;
};

void add_common(CLI::App* cmd, CommonArgs& a, bool out_required) {
  cmd->add_option("--config", a.config, "path to the JSON configuration")->required();
  auto* o = cmd->add_option("--out", a.out, "output path (or prefix for multi-file commands)");
  if (out_required) o->required();
  cmd->add_option("--seed", a.seed, "override the seed from the configuration");
  cmd->add_option("--threads", a.threads, "worker threads for replicate evaluation");
}

int cmd_gen(const CommonArgs& a) {
  config::GenConfig cfg = config::parse_gen_config(read_file(a.config));
  if (a.seed) cfg.seed = *a.seed;
  if (cfg.sequence.kind == lds::SequenceKind::PseudoRandom && a.seed) cfg.sequence.seed = *a.seed;

  lds::PointSet p;
  if (cfg.randomization == lds::RandomizationKind::None) {
    p = lds::generate(cfg.sequence, cfg.n, cfg.startIndex);
  } else {
    lds::Randomizer r{cfg.randomization, cfg.seed, 0};
    p = lds::randomized_replicates(cfg.sequence, cfg.n, 1, r, cfg.startIndex)[0];
  }

  std::ofstream out = open_out(a.out);
  out << "# sequence=" << experiments::sequence_kind_name(cfg.sequence.kind)
      << " dimension=" << cfg.sequence.dimension << " start=" << cfg.startIndex
      << " randomization=" << experiments::randomization_name(cfg.randomization)
      << " seed=" << cfg.seed << "\n";
  lds::write_csv(out, p);
  return 0;
}

int cmd_sample(const CommonArgs& a) {
  config::SampleConfig cfg = config::parse_sample_config(read_file(a.config));
  if (a.seed) cfg.seed = *a.seed;
  if (cfg.sequence.kind == lds::SequenceKind::PseudoRandom && a.seed) cfg.sequence.seed = *a.seed;

  std::uint64_t start = cfg.skipOrigin && cfg.sequence.is_deterministic() ? 2 : 1;
  lds::Randomizer r{cfg.randomization, cfg.seed, 0};
  lds::PointSet p = lds::randomized_replicates(cfg.sequence, cfg.n, 1, r, start)[0];
  std::vector<double> u = copulas::sample_matrix(cfg.copula, cfg.sampler, p);

  std::ofstream out = open_out(a.out);
  const int d = cfg.copula.dim();
  for (int i = 0; i < cfg.n; ++i) write_csv_row(out, u.data() + static_cast<std::size_t>(i) * d, d);
  return 0;
}

int cmd_discrepancy(const CommonArgs& a) {
  config::DiscrepancyConfig cfg = config::parse_discrepancy_config(read_file(a.config));
  std::ofstream out = open_out(a.out);
  for (const auto& dc : cfg.cases) {
    lds::PointSet p = lds::generate(dc.sequence, dc.n, dc.startIndex);

    // project onto the requested 1-based coordinates
    std::vector<double> pts;
    int k = dc.sequence.dimension;
    const double* data = p.pts.data();
    if (!dc.coordinates.empty()) {
      k = static_cast<int>(dc.coordinates.size());
      pts.resize(static_cast<std::size_t>(dc.n) * k);
      for (int i = 0; i < dc.n; ++i)
        for (int j = 0; j < k; ++j) pts[static_cast<std::size_t>(i) * k + j] = p(i, dc.coordinates[j] - 1);
      data = pts.data();
    }

    std::vector<double> transformed;
    if (dc.sampler) {
      transformed = copulas::sample_matrix(*dc.copula, *dc.sampler, data, dc.n, k);
      data = transformed.data();
      k = dc.copula->dim();
    }

    discrepancy::PointsView view(data, dc.n, k);
    discrepancy::DiscrepancyReport rep;
    rep.kind = dc.kind;
    rep.n = dc.n;
    rep.k = k;
    using RK = discrepancy::DiscrepancyReport::Kind;
    switch (dc.kind) {
      case RK::StarExact:
        rep.value = discrepancy::star_discrepancy_exact(view);
        break;
      case RK::L2StarUniform:
        rep.value = discrepancy::l2_star_uniform(view);
        break;
      case RK::L2StarCopula:
        if (dc.mixture_closed_form) {
          rep.value = discrepancy::l2_star_copula_discrepancy_mixture(view, dc.lambda);
          rep.family = "mixture";
          rep.params = "lambda=" + format_double(dc.lambda);
        } else {
          if (!dc.copula) throw ConfigError("discrepancy: l2_star_copula needs a copula");
          rep.value = discrepancy::l2_star_copula_discrepancy(view, *dc.copula);
          rep.family = dc.copula->family_name();
          rep.params = dc.copula->params_string();
        }
        break;
      case RK::StarCopulaGrid:
        if (!dc.copula) throw ConfigError("discrepancy: star_copula_grid needs a copula");
        rep.value = discrepancy::star_copula_discrepancy_grid(view, *dc.copula);
        rep.family = dc.copula->family_name();
        rep.params = dc.copula->params_string();
        break;
    }
    out << rep.csv_row() << "\n";
    std::cout << (dc.label.empty() ? std::string(rep.kind_name(rep.kind)) : dc.label) << ": "
              << format_double(rep.value) << "\n";
  }
  return 0;
}

int cmd_experiment(const CommonArgs& a) {
  config::ExperimentFileConfig file = config::parse_experiment_config(read_file(a.config));
  std::vector<experiments::ExperimentResult> results;
  for (const auto& m : file.methods) {
    experiments::ExperimentConfig cfg{file.copula,     file.sampler, m,
                                      file.nGrid,      file.B,       file.functional,
                                      file.masterSeed, file.skipOrigin, a.threads};
    if (a.seed) cfg.masterSeed = *a.seed;
    results.push_back(experiments::run_experiment(cfg));
  }
  std::ofstream reps = open_out(a.out + "_replicates.csv");
  experiments::write_replicates_csv(reps, results);
  std::ofstream summ = open_out(a.out + "_summary.csv");
  experiments::write_summary_csv(summ, results);
  for (const auto& r : results)
    std::cout << "alpha[" << r.method << "] = " << format_double(r.fittedAlpha) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quasi-Monte Carlo copula toolkit"};
  app.require_subcommand(1);

  CommonArgs gen_args, sample_args, disc_args, exp_args;
  add_common(app.add_subcommand("gen", "generate a low-discrepancy point set as CSV"), gen_args, true);
  add_common(app.add_subcommand("sample", "draw copula samples as CSV"), sample_args, true);
  add_common(app.add_subcommand("discrepancy", "compute discrepancy reports"), disc_args, true);
  add_common(app.add_subcommand("experiment", "run an RQMC/MC estimation sweep"), exp_args, true);

  try {
    app.parse(argc, argv);
    if (app.got_subcommand("gen")) return cmd_gen(gen_args);
    if (app.got_subcommand("sample")) return cmd_sample(sample_args);
    if (app.got_subcommand("discrepancy")) return cmd_discrepancy(disc_args);
    if (app.got_subcommand("experiment")) return cmd_experiment(exp_args);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const qmccop::NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid configuration: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "invalid configuration: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
