#ifndef KURODA_REPORT_HPP
#define KURODA_REPORT_HPP

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "kuroda/blowup.hpp"
#include "kuroda/config.hpp"
#include "kuroda/expression.hpp"
#include "kuroda/membership.hpp"
#include "kuroda/regions.hpp"

// Machine-readable reports.  Every subcommand produces one Report: a JSON
// document (rationals as "p/q" strings) and one table.  The text format
// prints the document's scalar fields and the table with aligned columns;
// the CSV format prints the table alone.

namespace kuroda {

using Json = nlohmann::ordered_json;

enum class ReportFormat { json, text, csv };

inline ReportFormat parse_format(const std::string& name) {
  if (name == "json") return ReportFormat::json;
  if (name == "text") return ReportFormat::text;
  if (name == "csv") return ReportFormat::csv;
  throw InputError("unknown format '" + name + "' (expected json, text or csv)");
}

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct Report {
  std::string kind;
  Json doc = Json::object();
  Table table;
};

namespace detail {

inline std::string format_double(double v) {
  std::ostringstream s;
  s.precision(17);
  s << v;
  return s.str();
}

inline std::string csv_field(const std::string& v) {
  if (v.find_first_of(",\"\n") == std::string::npos) return v;
  std::string out = "\"";
  for (char c : v) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

inline bool is_flat(const Json& v) {
  if (v.is_primitive()) return true;
  if (!v.is_array()) return false;
  return std::all_of(v.begin(), v.end(), [](const Json& e) { return e.is_primitive(); });
}

}  // namespace detail

inline Json to_json(const Rational& q) { return to_string(q); }

inline Json to_json(const Point3& p) { return Json::array({p[0], p[1], p[2]}); }

inline void write_csv(const Table& t, std::ostream& out) {
  for (std::size_t c = 0; c < t.header.size(); ++c) out << (c ? "," : "") << detail::csv_field(t.header[c]);
  out << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << detail::csv_field(row[c]);
    out << '\n';
  }
}

inline void write_text_table(const Table& t, std::ostream& out) {
  std::vector<std::size_t> width(t.header.size(), 0);
  for (std::size_t c = 0; c < t.header.size(); ++c) width[c] = t.header[c].size();
  for (const auto& row : t.rows)
    for (std::size_t c = 0; c < row.size() && c < width.size(); ++c) width[c] = std::max(width[c], row[c].size());
  const auto line = [&](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c) s += "  ";
      s += cells[c];
      if (c + 1 < cells.size()) s.append(width[c] - cells[c].size(), ' ');
    }
    out << s << '\n';
  };
  line(t.header);
  for (const auto& row : t.rows) line(row);
}

inline void write_text(const Report& r, std::ostream& out) {
  out << r.kind << '\n';
  std::size_t key_width = 0;
  for (const auto& [k, v] : r.doc.items())
    if (detail::is_flat(v)) key_width = std::max(key_width, k.size());
  for (const auto& [k, v] : r.doc.items()) {
    if (!detail::is_flat(v)) continue;
    std::string value;
    if (v.is_array()) {
      value = "[";
      for (std::size_t i = 0; i < v.size(); ++i) value += (i ? ", " : "") + detail::scalar_text(v[i]);
      value += "]";
    } else {
      value = detail::scalar_text(v);
    }
    out << "  " << k << std::string(key_width - k.size(), ' ') << " : " << value << '\n';
  }
  if (!r.table.header.empty()) {
    out << '\n';
    write_text_table(r.table, out);
  }
}

inline void emit_report(const Report& r, ReportFormat format, std::ostream& out) {
  switch (format) {
    case ReportFormat::json: out << r.doc.dump(2) << '\n'; break;
    case ReportFormat::text: write_text(r, out); break;
    case ReportFormat::csv: write_csv(r.table, out); break;
  }
}

inline void emit_report(const Report& r, ReportFormat format, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write report to '" + path + "'");
  emit_report(r, format, out);
  if (!out) throw InputError("failed writing report to '" + path + "'");
}

// ---------------------------------------------------------------------------
// Builders
// ---------------------------------------------------------------------------

inline Report validation_report(const KurodaConfig& cfg, const ValidationReport& v) {
  Report r{"validate", Json::object(), {{"i", "j", "diagonal_product", "cross_product", "holds"}, {}}};
  r.doc["config"] = config_to_json(cfg);
  r.doc["sign_pattern_ok"] = v.sign_pattern_ok;
  r.doc["sign_violations"] = v.sign_violations;
  r.doc["eq1_value"] = v.eq1_value ? Json(to_string(*v.eq1_value)) : Json(nullptr);
  r.doc["valid"] = v.valid;
  if (v.d) {
    r.doc["d"] = *v.d;
    const auto constants = derive_constants(cfg);
    Json q = Json::array();
    for (const auto& x : constants.q) q.push_back(to_string(x));
    r.doc["Q"] = q;
  }
  Json pairs = Json::array();
  for (const auto& pc : v.pair_checks) {
    pairs.push_back({{"i", pc.i},
                     {"j", pc.j},
                     {"diagonal_product", pc.diagonal_product},
                     {"cross_product", pc.cross_product},
                     {"holds", pc.holds}});
    r.table.rows.push_back({std::to_string(pc.i), std::to_string(pc.j), std::to_string(pc.diagonal_product),
                            std::to_string(pc.cross_product), pc.holds ? "true" : "false"});
  }
  r.doc["pair_checks"] = pairs;
  r.doc["pair_consequence_holds"] = v.pair_consequence_holds;
  return r;
}

inline Report tower_report(const EuclidTower& tower, const CensusReport& census) {
  Report r{"tower", Json::object(), {{"axis", "n", "in_z1", "in_z2", "label"}, {}}};
  Json axes = Json::array();
  std::vector<int> totals;
  bool all_equal = true;
  for (Axis a : kAllAxes) {
    const auto& t = tower[a];
    Json blocks = Json::array();
    for (const auto& b : t.blocks) blocks.push_back(Json::array({b.first, b.last}));
    axes.push_back({{"axis", a.label()},
                    {"Q", to_string(t.q_value)},
                    {"q", t.q},
                    {"M", t.block_count},
                    {"N", t.total},
                    {"blocks", blocks},
                    {"J1", t.j1},
                    {"J2", t.j2},
                    {"z1_equals_z2", census.z1_equals_z2[a.index()]}});
    totals.push_back(t.total);
    all_equal = all_equal && census.z1_equals_z2[a.index()];
  }
  r.doc["N"] = totals;
  r.doc["z1_equals_z2"] = all_equal;
  r.doc["axes"] = axes;
  Json entries = Json::array();
  for (const auto& e : census.entries) {
    entries.push_back({{"label", e.label}, {"axis", e.axis}, {"n", e.n}, {"in_z1", e.in_z1}, {"in_z2", e.in_z2}});
    r.table.rows.push_back({e.axis == 0 ? "" : std::to_string(e.axis), e.axis == 0 ? "" : std::to_string(e.n),
                            e.in_z1 ? "true" : "false", e.in_z2 ? "true" : "false", e.label});
  }
  r.doc["census"] = entries;
  return r;
}

inline Report generators_report(const GeneratorList& list) {
  Report r{"generators", Json::object(), {{"n1", "n2", "n3", "n4", "degree"}, {}}};
  r.doc["degree_bound"] = list.degree_bound;
  r.doc["count"] = list.generators.size();
  r.doc["complete_up_to"] = list.complete_up_to;
  r.doc["growing_at_bound"] = list.growing_at_bound;
  Json gens = Json::array();
  for (const auto& g : list.generators) {
    gens.push_back(g.n);
    r.table.rows.push_back({std::to_string(g.n[0]), std::to_string(g.n[1]), std::to_string(g.n[2]),
                            std::to_string(g.n[3]), std::to_string(g.degree())});
  }
  r.doc["generators"] = gens;
  return r;
}

inline Report membership_report(const SparsePolynomial& f, const StarReport& star, const OracleReport& oracle) {
  Report r{"member", Json::object(), {{"route", "axis", "exponents"}, {}}};
  r.doc["polynomial"] = format_polynomial(f);
  r.doc["in_r_star"] = star.holds;
  r.doc["in_r_oracle"] = oracle.holds;
  r.doc["agree"] = star.holds == oracle.holds;
  Json violations = Json::array();
  for (const auto& v : star.violations) {
    violations.push_back({{"axis", v.axis.label()}, {"triple", v.triple}});
    r.table.rows.push_back({"star", std::to_string(v.axis.label()),
                            std::to_string(v.triple[0]) + " " + std::to_string(v.triple[1]) + " " +
                                std::to_string(v.triple[2])});
  }
  Json offending = Json::array();
  for (const auto& m : oracle.offending) {
    offending.push_back(m.n);
    r.table.rows.push_back({"oracle", "", std::to_string(m.n[0]) + " " + std::to_string(m.n[1]) + " " +
                                              std::to_string(m.n[2]) + " " + std::to_string(m.n[3])});
  }
  r.doc["star_violations"] = violations;
  r.doc["oracle_offending"] = offending;
  return r;
}

inline Json cond_json(const CondVerdict& v) {
  return {{"cond1", v.cond1}, {"cond2", v.cond2}, {"cond3", v.cond3}, {"agree", v.agree()}};
}

inline Report trace_report(const std::string& kind, const TowerTrace& trace, const PoleProfile& poles,
                           const AxisTower& tower) {
  Report r{kind, Json::object(), {{"n", "k", "r1", "r3", "pole"}, {}}};
  Json steps = Json::array();
  for (int n = 0; n <= tower.total; ++n) {
    const auto& t = trace.triples[n];
    const int k = tower.block_index(n);
    steps.push_back({{"n", n}, {"k", k}, {"r1", t.r1}, {"r2", t.r2}, {"r3", t.r3}, {"pole", static_cast<bool>(poles.pole_at[n])}});
    r.table.rows.push_back({std::to_string(n), std::to_string(k), std::to_string(t.r1), std::to_string(t.r3),
                            poles.pole_at[n] ? "true" : "false"});
  }
  r.doc["axis"] = trace.axis.label();
  r.doc["pole_indices"] = poles.pole_indices();
  r.doc["trace"] = steps;
  return r;
}

inline Json region_pullback_json(const RegionPullbackReport& rp) {
  Json terms = Json::array();
  for (const auto& t : rp.terms)
    terms.push_back({{"start", Json::array({t.start.r1, t.start.r2, t.start.r3})}, {"poles", t.poles.pole_indices()}});
  return {{"axis", rp.axis.label()},
          {"terms", terms},
          {"pole_indices", rp.pole_indices},
          {"z2_indices", rp.z2_indices},
          {"poles_cover_z2", rp.poles_cover_z2},
          {"poles_equal_z2", rp.poles_equal_z2}};
}

inline Report probe_report(const SparsePolynomial& f, const RegionSpec& spec, const SampleSet& samples,
                           const ProbeReport& p) {
  Report r{"probe", Json::object(), {{"k", "value"}, {}}};
  r.doc["polynomial"] = format_polynomial(f);
  r.doc["region"] = region_name(spec.kind);
  r.doc["lambda"] = spec.lambda;
  r.doc["seed"] = p.seed;
  r.doc["radius"] = samples.radius;
  r.doc["samples"] = p.sample_count;
  r.doc["attempts"] = samples.attempts;
  r.doc["acceptance_rate"] = samples.acceptance_rate();
  r.doc["pole_skips"] = p.pole_skips;
  r.doc["uncertain"] = p.uncertain_count;
  r.doc["max_abs_value"] = p.max_abs_value;
  r.doc["argmax"] = Json::array({p.argmax[0], p.argmax[1], p.argmax[2], p.argmax[3]});
  r.doc["monomial_bound"] = p.monomial_bound ? Json(*p.monomial_bound) : Json(nullptr);
  r.doc["bound_ok"] = p.bound_ok;
  r.doc["monotone_tail"] = p.monotone_tail;
  r.doc["divergence"] = p.divergence;
  r.doc["divergence_threshold"] = p.divergence_threshold;
  Json esc = Json::array();
  for (const auto& e : p.escape) {
    esc.push_back({{"k", e.k}, {"value", e.value}});
    r.table.rows.push_back({std::to_string(e.k), detail::format_double(e.value)});
  }
  r.doc["escape"] = esc;
  return r;
}

inline Report sandwich_report(const SandwichReport& s) {
  Report r{"sandwich", Json::object(), {{"inclusion", "x", "y", "z"}, {}}};
  r.doc["seed"] = s.seed;
  r.doc["requested"] = s.requested;
  r.doc["radius"] = s.radius;
  r.doc["inner_checked"] = s.inner_checked;
  r.doc["inner_violations"] = s.inner_violations;
  r.doc["outer_checked"] = s.outer_checked;
  r.doc["outer_violations"] = s.outer_violations;
  r.doc["uncertain"] = s.uncertain_count;
  r.doc["uncertain_fraction"] = s.uncertain_fraction();
  Json ex = Json::array();
  for (const auto& v : s.examples) {
    ex.push_back({{"inclusion", v.inclusion}, {"point", to_json(v.point)}});
    r.table.rows.push_back({v.inclusion, detail::format_double(v.point[0]), detail::format_double(v.point[1]),
                            detail::format_double(v.point[2])});
  }
  r.doc["violations"] = ex;
  return r;
}

inline Report cloud_report(const CloudReport& c) {
  Report r{"cloud", Json::object(), {{"x", "y", "z", "margin"}, {}}};
  r.doc["region"] = c.which == CloudRegion::s_tilde ? "STilde3" : "SDoublePrime3";
  r.doc["grid"] = c.grid;
  r.doc["radius"] = c.radius;
  r.doc["band"] = c.band;
  r.doc["points"] = c.points.size();
  r.doc["octant_counts"] = c.octant_counts;
  r.doc["dominant_counts"] = c.dominant_counts;
  for (const auto& cp : c.points)
    r.table.rows.push_back({detail::format_double(cp.p[0]), detail::format_double(cp.p[1]),
                            detail::format_double(cp.p[2]), detail::format_double(cp.margin)});
  return r;
}

}  // namespace kuroda

#endif  // KURODA_REPORT_HPP
