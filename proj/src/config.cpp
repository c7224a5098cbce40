#include "qmccop/config.hpp"

#include <set>

#include <json.hpp>

namespace qmccop::config {

using nlohmann::json;
using copulas::Copula;
using copulas::SamplerKind;
using specfun::Margin;

namespace {

// strict object reader: every key must be consumed, unknown keys are errors
class Obj {
 public:
  Obj(const json& j, std::string ctx) : j_(j), ctx_(std::move(ctx)) {
    if (!j_.is_object()) throw ConfigError(ctx_ + ": expected an object");
  }

  const json* find(const char* key) {
    seen_.insert(key);
    auto it = j_.find(key);
    return it == j_.end() ? nullptr : &*it;
  }

  const json& need(const char* key) {
    const json* p = find(key);
    if (!p) throw ConfigError(ctx_ + ": missing key '" + key + "'");
    return *p;
  }

  void finish() const {
    for (auto it = j_.begin(); it != j_.end(); ++it)
      if (!seen_.count(it.key()))
        throw ConfigError(ctx_ + ": unknown key '" + it.key() + "'");
  }

  const std::string& ctx() const { return ctx_; }

 private:
  const json& j_;
  std::string ctx_;
  std::set<std::string> seen_;
};

double as_double(const json& j, const std::string& ctx) {
  if (!j.is_number()) throw ConfigError(ctx + ": expected a number");
  return j.get<double>();
}

int as_int(const json& j, const std::string& ctx) {
  if (!j.is_number_integer()) throw ConfigError(ctx + ": expected an integer");
  return j.get<int>();
}

std::uint64_t as_u64(const json& j, const std::string& ctx) {
  if (!j.is_number_integer()) throw ConfigError(ctx + ": expected an integer");
  return j.get<std::uint64_t>();
}

std::string as_string(const json& j, const std::string& ctx) {
  if (!j.is_string()) throw ConfigError(ctx + ": expected a string");
  return j.get<std::string>();
}

bool as_bool(const json& j, const std::string& ctx) {
  if (!j.is_boolean()) throw ConfigError(ctx + ": expected a boolean");
  return j.get<bool>();
}

lds::RandomizationKind parse_randomization(const std::string& s, const std::string& ctx) {
  if (s == "none") return lds::RandomizationKind::None;
  if (s == "shift") return lds::RandomizationKind::Shift;
  if (s == "digital") return lds::RandomizationKind::DigitalShift;
  throw ConfigError(ctx + ": unknown randomization '" + s + "' (none|shift|digital)");
}

SamplerKind parse_sampler(const std::string& s, const std::string& ctx) {
  if (s == "cdm") return SamplerKind::CDM;
  if (s == "mo") return SamplerKind::MO;
  if (s == "stochgauss") return SamplerKind::StochGauss;
  if (s == "stocht") return SamplerKind::StochT;
  throw ConfigError(ctx + ": unknown sampler '" + s + "' (cdm|mo|stochgauss|stocht)");
}

// `dim_hint` < 0 means the dimension key is required
lds::SequenceSpec parse_sequence(const json& j, const std::string& ctx, int dim_hint = -1) {
  Obj o(j, ctx);
  std::string kind = as_string(o.need("kind"), ctx + ".kind");
  int dim = dim_hint;
  if (const json* p = o.find("dimension")) dim = as_int(*p, ctx + ".dimension");
  if (dim < 1) throw ConfigError(ctx + ": missing or invalid 'dimension'");

  lds::SequenceSpec spec;
  if (kind == "halton") {
    spec = lds::SequenceSpec::halton(dim);
  } else if (kind == "ghalton") {
    spec = lds::SequenceSpec::generalized_halton(dim);
  } else if (kind == "sobol") {
    spec = lds::SequenceSpec::sobol(dim);
  } else if (kind == "pseudorandom") {
    std::uint64_t seed = 0;
    if (const json* p = o.find("seed")) seed = as_u64(*p, ctx + ".seed");
    spec = lds::SequenceSpec::pseudorandom(dim, seed);
    o.finish();
    return spec;
  } else {
    throw ConfigError(ctx + ": unknown sequence kind '" + kind +
                      "' (halton|ghalton|sobol|pseudorandom)");
  }

  if (const json* p = o.find("bases")) {
    if (!p->is_array()) throw ConfigError(ctx + ".bases: expected an array");
    spec.bases.clear();
    for (const auto& b : *p) spec.bases.push_back(as_int(b, ctx + ".bases"));
  }
  if (const json* p = o.find("scrambleFactors")) {
    if (kind != "ghalton") throw ConfigError(ctx + ": scrambleFactors only apply to ghalton");
    if (!p->is_array()) throw ConfigError(ctx + ".scrambleFactors: expected an array");
    spec.scrambleFactors.clear();
    for (const auto& f : *p) spec.scrambleFactors.push_back(as_int(f, ctx + ".scrambleFactors"));
  }
  spec.validate();
  o.finish();
  return spec;
}

Copula parse_copula(const json& j, const std::string& ctx) {
  Obj o(j, ctx);
  std::string family = as_string(o.need("family"), ctx + ".family");

  auto corr_from = [&](Obj& obj, int d) -> Matrix {
    if (const json* p = obj.find("correlation")) {
      if (!p->is_array() || static_cast<int>(p->size()) != d)
        throw ConfigError(ctx + ".correlation: expected a d x d array");
      Matrix m(d);
      for (int i = 0; i < d; ++i) {
        const auto& row = (*p)[i];
        if (!row.is_array() || static_cast<int>(row.size()) != d)
          throw ConfigError(ctx + ".correlation: expected a d x d array");
        for (int jj = 0; jj < d; ++jj) m(i, jj) = as_double(row[jj], ctx + ".correlation");
      }
      return m;
    }
    double rho;
    if (const json* p = obj.find("rho")) {
      rho = as_double(*p, ctx + ".rho");
    } else if (const json* p2 = obj.find("tau")) {
      rho = specfun::kendall_tau_maps(as_double(*p2, ctx + ".tau")).rho_elliptical;
    } else {
      throw ConfigError(ctx + ": elliptical family needs 'rho', 'tau' or 'correlation'");
    }
    return exchangeable_correlation(d, rho);
  };

  Copula c = Copula::clayton(1.0, 2);
  if (family == "gauss") {
    int d = as_int(o.need("dimension"), ctx + ".dimension");
    c = Copula::gauss(corr_from(o, d));
  } else if (family == "t") {
    int d = as_int(o.need("dimension"), ctx + ".dimension");
    double nu = as_double(o.need("nu"), ctx + ".nu");
    c = Copula::t(nu, corr_from(o, d));
  } else if (family == "clayton" || family == "gumbel") {
    int d = as_int(o.need("dimension"), ctx + ".dimension");
    double theta;
    if (const json* p = o.find("theta")) {
      theta = as_double(*p, ctx + ".theta");
    } else if (const json* p2 = o.find("tau")) {
      double tau = as_double(*p2, ctx + ".tau");
      if (family == "clayton") theta = specfun::kendall_tau_maps(tau).theta_clayton;
      else theta = 1.0 / (1.0 - tau);
    } else {
      throw ConfigError(ctx + ": need 'theta' or 'tau'");
    }
    c = family == "clayton" ? Copula::clayton(theta, d) : Copula::gumbel(theta, d);
  } else if (family == "marshallolkin") {
    if (const json* p = o.find("dimension"))
      if (as_int(*p, ctx + ".dimension") != 2)
        throw ConfigError(ctx + ": marshall-olkin copulas are bivariate");
    c = Copula::marshall_olkin(as_double(o.need("alpha1"), ctx + ".alpha1"),
                               as_double(o.need("alpha2"), ctx + ".alpha2"));
  } else if (family == "mixture") {
    int d = as_int(o.need("dimension"), ctx + ".dimension");
    c = Copula::mixture(as_double(o.need("lambda"), ctx + ".lambda"), d);
  } else {
    throw ConfigError(ctx + ": unknown family '" + family + "'");
  }
  o.finish();
  return c;
}

Margin parse_margin(const json& j, const std::string& ctx) {
  Obj o(j, ctx);
  std::string kind = as_string(o.need("kind"), ctx + ".kind");
  Margin m = Margin::uniform();
  if (kind == "lognormal") {
    m = Margin::lognormal(as_double(o.need("meanlog"), ctx), as_double(o.need("sdlog"), ctx));
  } else if (kind == "pareto") {
    m = Margin::pareto(as_double(o.need("shape"), ctx), as_double(o.need("scale"), ctx));
  } else if (kind == "pareto_matched_lognormal") {
    m = specfun::pareto_matched_to_lognormal(as_double(o.need("meanlog"), ctx),
                                             as_double(o.need("sdlog"), ctx));
  } else if (kind == "exponential") {
    m = Margin::exponential(as_double(o.need("rate"), ctx));
  } else if (kind == "uniform") {
    // no parameters
  } else {
    throw ConfigError(ctx + ": unknown margin kind '" + kind + "'");
  }
  o.finish();
  return m;
}

experiments::Functional parse_functional(const json& j, const std::string& ctx, int d) {
  Obj o(j, ctx);
  std::string kind = as_string(o.need("kind"), ctx + ".kind");
  experiments::Functional f;
  if (kind == "basketcall") f.kind = experiments::FunctionalKind::BasketCall;
  else if (kind == "bestofcall") f.kind = experiments::FunctionalKind::BestOfCall;
  else if (kind == "var") f.kind = experiments::FunctionalKind::VaR;
  else if (kind == "es") f.kind = experiments::FunctionalKind::ES;
  else if (kind == "allocationfirst") f.kind = experiments::FunctionalKind::AllocationFirst;
  else if (kind == "allocationmiddle") f.kind = experiments::FunctionalKind::AllocationMiddle;
  else if (kind == "psi1") f.kind = experiments::FunctionalKind::Psi1;
  else if (kind == "psi2") f.kind = experiments::FunctionalKind::Psi2;
  else throw ConfigError(ctx + ": unknown functional kind '" + kind + "'");

  if (const json* p = o.find("strike")) f.strike = as_double(*p, ctx + ".strike");
  if (const json* p = o.find("level")) f.level = as_double(*p, ctx + ".level");
  if (const json* p = o.find("margins")) {
    if (!p->is_array()) throw ConfigError(ctx + ".margins: expected an array");
    for (const auto& mj : *p) f.margins.push_back(parse_margin(mj, ctx + ".margins"));
  }
  if (const json* p = o.find("marginsAll")) {
    if (!f.margins.empty()) throw ConfigError(ctx + ": give either margins or marginsAll");
    Margin m = parse_margin(*p, ctx + ".marginsAll");
    f.margins.assign(d, m);
  }
  f.validate(d);
  o.finish();
  return f;
}

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ConfigError("config: not valid JSON");
  return j;
}

}  // namespace

GenConfig parse_gen_config(const std::string& text) {
  json j = parse_json(text);
  Obj o(j, "gen");
  GenConfig cfg;
  cfg.sequence = parse_sequence(o.need("sequence"), "gen.sequence");
  cfg.n = as_int(o.need("n"), "gen.n");
  if (cfg.n < 1) throw ConfigError("gen.n: must be >= 1");
  if (const json* p = o.find("startIndex")) cfg.startIndex = as_u64(*p, "gen.startIndex");
  if (cfg.startIndex < 1) throw ConfigError("gen.startIndex: must be >= 1");
  if (const json* p = o.find("randomization"))
    cfg.randomization = parse_randomization(as_string(*p, "gen.randomization"), "gen.randomization");
  if (const json* p = o.find("seed")) cfg.seed = as_u64(*p, "gen.seed");
  o.finish();
  return cfg;
}

SampleConfig parse_sample_config(const std::string& text) {
  json j = parse_json(text);
  Obj o(j, "sample");
  SampleConfig cfg{Copula::clayton(1.0, 2), SamplerKind::CDM, lds::SequenceSpec{}, 0};
  cfg.copula = parse_copula(o.need("copula"), "sample.copula");
  cfg.sampler = parse_sampler(as_string(o.need("sampler"), "sample.sampler"), "sample.sampler");
  int need_dim = copulas::sampler_input_dim(cfg.sampler, cfg.copula);
  cfg.sequence = parse_sequence(o.need("sequence"), "sample.sequence", need_dim);
  if (cfg.sequence.dimension != need_dim)
    throw ConfigError("sample.sequence: sampler needs dimension " + std::to_string(need_dim));
  cfg.n = as_int(o.need("n"), "sample.n");
  if (cfg.n < 1) throw ConfigError("sample.n: must be >= 1");
  if (const json* p = o.find("skipOrigin")) cfg.skipOrigin = as_bool(*p, "sample.skipOrigin");
  if (const json* p = o.find("randomization"))
    cfg.randomization =
        parse_randomization(as_string(*p, "sample.randomization"), "sample.randomization");
  if (const json* p = o.find("seed")) cfg.seed = as_u64(*p, "sample.seed");
  o.finish();
  return cfg;
}

DiscrepancyConfig parse_discrepancy_config(const std::string& text) {
  json j = parse_json(text);
  Obj o(j, "discrepancy");
  const json& cases = o.need("cases");
  if (!cases.is_array() || cases.empty())
    throw ConfigError("discrepancy.cases: expected a non-empty array");
  DiscrepancyConfig cfg;
  int ci = 0;
  for (const auto& cj : cases) {
    std::string ctx = "discrepancy.cases[" + std::to_string(ci++) + "]";
    Obj co(cj, ctx);
    DiscrepancyCase dc;
    std::string kind = as_string(co.need("kind"), ctx + ".kind");
    using RK = discrepancy::DiscrepancyReport::Kind;
    if (kind == "star_exact") dc.kind = RK::StarExact;
    else if (kind == "l2_star_uniform") dc.kind = RK::L2StarUniform;
    else if (kind == "l2_star_copula") dc.kind = RK::L2StarCopula;
    else if (kind == "l2_star_copula_mixture") { dc.kind = RK::L2StarCopula; dc.mixture_closed_form = true; }
    else if (kind == "star_copula_grid") dc.kind = RK::StarCopulaGrid;
    else throw ConfigError(ctx + ".kind: unknown discrepancy kind '" + kind + "'");

    if (const json* p = co.find("coordinates")) {
      if (!p->is_array()) throw ConfigError(ctx + ".coordinates: expected an array");
      for (const auto& c : *p) dc.coordinates.push_back(as_int(c, ctx + ".coordinates"));
      for (int c : dc.coordinates)
        if (c < 1) throw ConfigError(ctx + ".coordinates: 1-based coordinate indices required");
    }
    int dim_hint = -1;
    if (!dc.coordinates.empty()) dim_hint = *std::max_element(dc.coordinates.begin(), dc.coordinates.end());
    if (const json* p = co.find("copula")) dc.copula = parse_copula(*p, ctx + ".copula");
    if (const json* p = co.find("sampler")) {
      dc.sampler = parse_sampler(as_string(*p, ctx + ".sampler"), ctx + ".sampler");
      if (!dc.copula) throw ConfigError(ctx + ": sampler requires a copula");
      if (dim_hint < 0) dim_hint = copulas::sampler_input_dim(*dc.sampler, *dc.copula);
    }
    dc.sequence = parse_sequence(co.need("sequence"), ctx + ".sequence", dim_hint);
    dc.n = as_int(co.need("n"), ctx + ".n");
    if (dc.n < 1) throw ConfigError(ctx + ".n: must be >= 1");
    if (const json* p = co.find("startIndex")) dc.startIndex = as_u64(*p, ctx + ".startIndex");
    if (const json* p = co.find("lambda")) dc.lambda = as_double(*p, ctx + ".lambda");
    if (const json* p = co.find("label")) dc.label = as_string(*p, ctx + ".label");
    co.finish();
    cfg.cases.push_back(std::move(dc));
  }
  o.finish();
  return cfg;
}

ExperimentFileConfig parse_experiment_config(const std::string& text) {
  json j = parse_json(text);
  Obj o(j, "experiment");
  ExperimentFileConfig cfg{Copula::clayton(1.0, 2), SamplerKind::CDM, {}, {}, 25, 42, true, {}};
  cfg.copula = parse_copula(o.need("copula"), "experiment.copula");
  cfg.sampler = parse_sampler(as_string(o.need("sampler"), "experiment.sampler"), "experiment.sampler");
  cfg.functional = parse_functional(o.need("functional"), "experiment.functional", cfg.copula.dim());
  const json& grid = o.need("nGrid");
  if (!grid.is_array() || grid.empty()) throw ConfigError("experiment.nGrid: expected a non-empty array");
  for (const auto& g : grid) cfg.nGrid.push_back(as_int(g, "experiment.nGrid"));
  if (const json* p = o.find("B")) cfg.B = as_int(*p, "experiment.B");
  if (const json* p = o.find("masterSeed")) cfg.masterSeed = as_u64(*p, "experiment.masterSeed");
  if (const json* p = o.find("skipOrigin")) cfg.skipOrigin = as_bool(*p, "experiment.skipOrigin");

  const json& methods = o.need("methods");
  if (!methods.is_array() || methods.empty())
    throw ConfigError("experiment.methods: expected a non-empty array");
  int need_dim = copulas::sampler_input_dim(cfg.sampler, cfg.copula);
  int mi = 0;
  for (const auto& mj : methods) {
    std::string ctx = "experiment.methods[" + std::to_string(mi++) + "]";
    Obj mo(mj, ctx);
    experiments::Method m;
    if (const json* p = mo.find("name")) m.name = as_string(*p, ctx + ".name");
    m.sequence = parse_sequence(mo.need("sequence"), ctx + ".sequence", need_dim);
    if (m.sequence.dimension != need_dim)
      throw ConfigError(ctx + ".sequence: sampler needs dimension " + std::to_string(need_dim));
    if (const json* p = mo.find("randomization"))
      m.randomization = parse_randomization(as_string(*p, ctx + ".randomization"), ctx);
    mo.finish();
    cfg.methods.push_back(std::move(m));
  }
  o.finish();
  return cfg;
}

}  // namespace qmccop::config
