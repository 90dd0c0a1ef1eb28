#ifndef KURODA_CLI_HPP
#define KURODA_CLI_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kuroda/blowup.hpp"
#include "kuroda/config.hpp"
#include "kuroda/expression.hpp"
#include "kuroda/membership.hpp"
#include "kuroda/regions.hpp"
#include "kuroda/report.hpp"

// Command-line driver.  Exit codes: 0 success or property holds, 1 property
// violated, 2 bad input.

namespace kuroda {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolated = 1;
inline constexpr int kExitBadInput = 2;

namespace detail {

struct CliState {
  std::string config;
  std::string expr;
  std::string format = "text";
  std::string out;
  std::int64_t degree_bound = 4;
  std::string lambda = "1";
  std::size_t samples = 10000;
  std::uint64_t seed = 1;
  double radius = 10.0;
  std::int64_t r1 = 0;
  std::int64_t r2 = 0;
  std::int64_t r3 = 0;
  int axis = 1;
  int which = 0;
  int sweep = -1;
  int grid = 40;
  std::string region;
  std::string cloud_region = "stilde";
  std::int64_t escape_last = 10000;
  double tolerance = 1e-6;
};

struct Outcome {
  Report report;
  int exit_code = kExitOk;
};

inline KurodaConfig load_valid_config(const std::string& path) {
  const auto cfg = load_config(path);
  const auto v = validate(cfg);
  if (!v.valid) {
    std::string why = v.sign_pattern_ok ? "validity sum " + to_string(*v.eq1_value) + " is not < 1"
                                        : "sign pattern violated";
    throw InputError("config '" + path + "' is not a valid configuration: " + why);
  }
  return cfg;
}

inline SparsePolynomial require_pi(const std::string& expr) {
  if (expr.empty()) throw InputError("--expr is required");
  auto f = parse_polynomial(expr, VarSystem::pi3);
  if (f.system() != VarSystem::pi3) throw InputError("expected an expression in P1, P2, P3");
  return f;
}

inline Outcome run_validate(const CliState& s) {
  const auto cfg = load_config(s.config);
  const auto v = validate(cfg);
  return {validation_report(cfg, v), v.valid ? kExitOk : kExitViolated};
}

inline Outcome run_tower(const CliState& s) {
  const auto cfg = load_valid_config(s.config);
  return {tower_report(euclid_tower(cfg), boundary_census(cfg)), kExitOk};
}

inline Outcome run_generators(const CliState& s) {
  if (s.degree_bound < 0) throw InputError("--degree-bound must be >= 0");
  const auto cfg = load_valid_config(s.config);
  return {generators_report(enumerate_t_generators(cfg, s.degree_bound)), kExitOk};
}

inline Outcome run_member(const CliState& s) {
  const auto cfg = load_valid_config(s.config);
  const auto f = require_pi(s.expr);
  const auto star = in_r_star_report(f, cfg);
  const auto oracle = in_r_oracle_report(f, cfg);
  return {membership_report(f, star, oracle), star.holds == oracle.holds ? kExitOk : kExitViolated};
}

inline Outcome run_cond(const CliState& s, bool axis_given) {
  const auto cfg = load_valid_config(s.config);
  const auto tower = euclid_tower(cfg);
  const Axis axis = Axis::from_label(s.axis);

  if (!s.expr.empty()) {
    const auto f = require_pi(s.expr);
    Report r{"cond", Json::object(), {{"axis", "cond1", "cond2", "cond3", "agree"}, {}}};
    r.doc["polynomial"] = format_polynomial(f);
    Json per_axis = Json::array();
    bool agree = true;
    for (Axis a : kAllAxes) {
      if (axis_given && a != axis) continue;
      const auto v = cond_for_polynomial(f, a, cfg, tower);
      agree = agree && v.agree();
      Json entry = cond_json(v);
      entry["axis"] = a.label();
      per_axis.push_back(entry);
      r.table.rows.push_back({std::to_string(a.label()), v.cond1 ? "true" : "false", v.cond2 ? "true" : "false",
                              v.cond3 ? "true" : "false", v.agree() ? "true" : "false"});
    }
    r.doc["agree"] = agree;
    r.doc["axes"] = per_axis;
    return {r, agree ? kExitOk : kExitViolated};
  }

  if (s.sweep >= 0) {
    Report r{"cond", Json::object(), {{"axis", "r1", "r2", "r3", "cond1", "cond2", "cond3"}, {}}};
    std::size_t checked = 0;
    std::size_t disagreements = 0;
    for (Axis a : kAllAxes) {
      if (axis_given && a != axis) continue;
      for (std::int64_t r1 = 0; r1 <= s.sweep; ++r1)
        for (std::int64_t r2 = 0; r2 <= 1; ++r2)
          for (std::int64_t r3 = 0; r3 <= s.sweep; ++r3) {
            const auto v = cond_for_triple({r1, r2, r3}, a, cfg, tower);
            ++checked;
            if (v.agree()) continue;
            ++disagreements;
            r.table.rows.push_back({std::to_string(a.label()), std::to_string(r1), std::to_string(r2),
                                    std::to_string(r3), v.cond1 ? "true" : "false", v.cond2 ? "true" : "false",
                                    v.cond3 ? "true" : "false"});
          }
    }
    r.doc["sweep_bound"] = s.sweep;
    r.doc["checked"] = checked;
    r.doc["disagreements"] = disagreements;
    return {r, disagreements == 0 ? kExitOk : kExitViolated};
  }

  const ChartTriple t{s.r1, s.r2, s.r3};
  const auto& at = tower[axis];
  const auto trace = pullback_trace(t, at);
  const auto poles = pole_profile(trace, at);
  const auto v = cond_for_triple(t, axis, cfg, tower);
  Report r = trace_report("cond", trace, poles, at);
  r.doc["triple"] = Json::array({t.r1, t.r2, t.r3});
  const Json verdict = cond_json(v);
  for (const auto& [k, val] : verdict.items()) r.doc[k] = val;
  if (s.which != 0) r.doc["selected"] = v.get(s.which);
  return {r, v.agree() ? kExitOk : kExitViolated};
}

inline Outcome run_pullback(const CliState& s) {
  const auto cfg = load_valid_config(s.config);
  const auto tower = euclid_tower(cfg);
  const Axis axis = Axis::from_label(s.axis);
  const auto& at = tower[axis];
  const ChartTriple t{s.r1, s.r2, s.r3};
  const auto trace = pullback_trace(t, at);
  Report r = trace_report("pullback", trace, pole_profile(trace, at), at);
  const auto blocks = block_formula_check(t, at);
  const auto region = region_inequality_pullback(axis, cfg);
  r.doc["triple"] = Json::array({t.r1, t.r2, t.r3});
  r.doc["block_formula_holds"] = blocks.holds;
  r.doc["region_poles"] = region.pole_indices;
  r.doc["region_z2"] = region.z2_indices;
  r.doc["region_poles_equal_z2"] = region.poles_equal_z2;
  r.doc["region_pullback"] = region_pullback_json(region);
  return {r, blocks.holds && region.poles_equal_z2 ? kExitOk : kExitViolated};
}

inline RegionKind parse_region(const std::string& name) {
  if (name == "sprime") return RegionKind::s_prime;
  if (name == "sdoubleprime") return RegionKind::s_double_prime;
  if (name == "s") return RegionKind::s;
  if (name == "stilde") return RegionKind::s_tilde;
  throw InputError("unknown region '" + name + "' (expected sprime, sdoubleprime, s or stilde)");
}

inline Outcome run_probe(const CliState& s) {
  const auto cfg = load_valid_config(s.config);
  if (s.expr.empty()) throw InputError("--expr is required");
  const auto f = parse_polynomial(s.expr, VarSystem::pi3);
  RegionSpec spec;
  spec.kind = s.region.empty() ? (f.system() == VarSystem::y4 ? RegionKind::s_prime : RegionKind::s_tilde)
                               : parse_region(s.region);
  spec.lambda = parse_scalar(s.lambda);
  spec.check();
  if ((f.system() == VarSystem::y4) != (region_dimension(spec.kind) == 4))
    throw InputError("Y expressions need region sprime; P expressions need a 3-dimensional region");
  if (s.samples == 0) throw InputError("--samples must be positive");
  if (s.escape_last < 16) throw InputError("--escape-last must be >= 16");
  const auto samples = sample_region(spec, s.samples, s.seed, s.radius, cfg);
  const auto probe = boundedness_probe(f, samples, escape_schedule(16, s.escape_last), cfg);
  return {probe_report(f, spec, samples, probe), probe.bound_ok ? kExitOk : kExitViolated};
}

inline Outcome run_sandwich(const CliState& s) {
  const auto cfg = load_valid_config(s.config);
  if (s.samples == 0) throw InputError("--samples must be positive");
  if (!(s.radius > 2.0)) throw InputError("--radius must exceed 2 so the exclusion region is reachable");
  const auto report = sandwich_check(cfg, s.samples, s.seed, s.radius, s.tolerance);
  return {sandwich_report(report), report.violations() == 0 ? kExitOk : kExitViolated};
}

inline Outcome run_cloud(const CliState& s) {
  const auto cfg = load_valid_config(s.config);
  CloudRegion which;
  if (s.cloud_region == "stilde") {
    which = CloudRegion::s_tilde;
  } else if (s.cloud_region == "sdoubleprime") {
    which = CloudRegion::s_double_prime;
  } else {
    throw InputError("cloud region must be sdoubleprime or stilde");
  }
  return {cloud_report(surface_cloud(cfg, which, s.grid, s.radius)), kExitOk};
}

}  // namespace detail

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  detail::CliState s;
  CLI::App app{"Kuroda configurations: exact membership, blowup tower and region probes", "kuroda"};
  app.require_subcommand(1);

  const auto common = [&](CLI::App* sub) {
    sub->add_option("--config", s.config, "configuration JSON file")->required();
    sub->add_option("--format", s.format, "json, text or csv")->check(CLI::IsMember({"json", "text", "csv"}));
    sub->add_option("--out", s.out, "write the report to this file instead of stdout");
  };
  const auto triple = [&](CLI::App* sub) {
    sub->add_option("--r1", s.r1, "negated gamma exponent");
    sub->add_option("--r2", s.r2, "alpha exponent");
    sub->add_option("--r3", s.r3, "beta exponent");
  };

  auto* validate_cmd = app.add_subcommand("validate", "check the sign pattern and the validity inequality");
  common(validate_cmd);

  auto* tower_cmd = app.add_subcommand("tower", "continued-fraction tower data and boundary census");
  common(tower_cmd);

  auto* gens_cmd = app.add_subcommand("generators", "minimal generators of the monoid up to a degree bound");
  common(gens_cmd);
  gens_cmd->add_option("--degree-bound", s.degree_bound, "maximum total degree");

  auto* member_cmd = app.add_subcommand("member", "membership of a P-polynomial in R by both routes");
  common(member_cmd);
  member_cmd->add_option("--expr", s.expr, "polynomial in P1, P2, P3")->required();

  auto* cond_cmd = app.add_subcommand("cond", "compare the three pole conditions");
  common(cond_cmd);
  triple(cond_cmd);
  auto* cond_axis = cond_cmd->add_option("--axis", s.axis, "axis 1, 2 or 3")->check(CLI::Range(1, 3));
  cond_cmd->add_option("--which", s.which, "also report this condition alone (1, 2 or 3)")->check(CLI::Range(1, 3));
  cond_cmd->add_option("--expr", s.expr, "polynomial in P1, P2, P3 instead of a triple");
  cond_cmd->add_option("--sweep", s.sweep, "sweep 0 <= r1, r3 <= BOUND, r2 in {0,1}")->check(CLI::Range(0, 10000));

  auto* pull_cmd = app.add_subcommand("pullback", "pullback trace, pole profile and region-inequality poles");
  common(pull_cmd);
  triple(pull_cmd);
  pull_cmd->add_option("--axis", s.axis, "axis 1, 2 or 3")->check(CLI::Range(1, 3));

  auto* probe_cmd = app.add_subcommand("probe", "sampled boundedness evidence for a polynomial on a region");
  common(probe_cmd);
  probe_cmd->add_option("--expr", s.expr, "polynomial in P1..P3 or Y1..Y4")->required();
  probe_cmd->add_option("--region", s.region, "sprime, sdoubleprime, s or stilde");
  probe_cmd->add_option("--lambda", s.lambda, "region scale, rational or decimal");
  probe_cmd->add_option("--samples", s.samples, "number of accepted samples");
  probe_cmd->add_option("--seed", s.seed, "random seed");
  probe_cmd->add_option("--radius", s.radius, "sampling box half-width");
  probe_cmd->add_option("--escape-last", s.escape_last, "last k of the escape sequence");

  auto* sand_cmd = app.add_subcommand("sandwich", "sampled check of the two inclusions outside the box");
  common(sand_cmd);
  sand_cmd->add_option("--samples", s.samples, "samples per inclusion");
  sand_cmd->add_option("--seed", s.seed, "random seed");
  sand_cmd->add_option("--radius", s.radius, "sampling box half-width");
  sand_cmd->add_option("--tolerance", s.tolerance, "UNCERTAIN band for the shifted-region test");

  auto* cloud_cmd = app.add_subcommand("cloud", "boundary point cloud on a grid");
  common(cloud_cmd);
  cloud_cmd->add_option("--which", s.cloud_region, "sdoubleprime or stilde")
      ->check(CLI::IsMember({"sdoubleprime", "stilde"}));
  cloud_cmd->add_option("--grid", s.grid, "cells per axis")->check(CLI::Range(1, 1000));
  cloud_cmd->add_option("--radius", s.radius, "grid half-width");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  try {
    detail::Outcome outcome;
    if (*validate_cmd) {
      outcome = detail::run_validate(s);
    } else if (*tower_cmd) {
      outcome = detail::run_tower(s);
    } else if (*gens_cmd) {
      outcome = detail::run_generators(s);
    } else if (*member_cmd) {
      outcome = detail::run_member(s);
    } else if (*cond_cmd) {
      outcome = detail::run_cond(s, cond_axis->count() > 0);
    } else if (*pull_cmd) {
      outcome = detail::run_pullback(s);
    } else if (*probe_cmd) {
      outcome = detail::run_probe(s);
    } else if (*sand_cmd) {
      outcome = detail::run_sandwich(s);
    } else {
      outcome = detail::run_cloud(s);
    }
    const auto format = parse_format(s.format);
    if (s.out.empty()) {
      emit_report(outcome.report, format, out);
    } else {
      emit_report(outcome.report, format, s.out);
    }
    return outcome.exit_code;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const SamplingFailure& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const std::logic_error& e) {
    err << "internal check failed: " << e.what() << '\n';
    return kExitViolated;
  }
}

/// Same as above with the arguments after the program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"kuroda"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace kuroda

#endif  // KURODA_CLI_HPP
