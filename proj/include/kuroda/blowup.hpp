#ifndef KURODA_BLOWUP_HPP
#define KURODA_BLOWUP_HPP

#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "kuroda/config.hpp"
#include "kuroda/membership.hpp"
#include "kuroda/polynomial.hpp"

// Exponent calculus of the blowup tower over the points p_1, p_2, p_3.
//
// Varieties, charts and centers exist here only as labels.  A chart monomial
// alpha^{r2} beta^{r3} gamma^{-r1} on chart A_n is recorded by the triple
// (r1, r2, r3); the pullback to A_{n+1} is an integer-linear step whose kind
// depends on the parity of the block containing n+1.

namespace kuroda {

/// Chart monomial alpha^{r2} beta^{r3} gamma^{-r1}; r1 is the negated gamma exponent.
struct ChartTriple {
  std::int64_t r1 = 0;
  std::int64_t r2 = 0;
  std::int64_t r3 = 0;

  friend ChartTriple operator+(const ChartTriple& a, const ChartTriple& b) {
    return {a.r1 + b.r1, a.r2 + b.r2, a.r3 + b.r3};
  }
  friend bool operator==(const ChartTriple&, const ChartTriple&) = default;
  friend auto operator<=>(const ChartTriple&, const ChartTriple&) = default;
};

inline int block_index(int n, const AxisTower& tower) { return tower.block_index(n); }
inline int prev_block_max(int n, const AxisTower& tower) { return tower.prev_block_max(n); }

struct TowerTrace {
  Axis axis;
  std::vector<ChartTriple> triples;  // index n = 0..N
};

/// One pullback step from A_n to A_{n+1}.
inline ChartTriple pullback_step(const ChartTriple& t, int next_block) {
  if (next_block % 2 == 1) return {t.r1 - t.r3, t.r2, t.r3};  // beta -> beta gamma
  return {t.r1, t.r2, t.r3 - t.r1};                           // gamma -> beta gamma
}

inline TowerTrace pullback_trace(const ChartTriple& start, const AxisTower& tower) {
  TowerTrace trace{tower.axis, {start}};
  trace.triples.reserve(tower.total + 1);
  for (int n = 0; n < tower.total; ++n)
    trace.triples.push_back(pullback_step(trace.triples.back(), tower.block_index(n + 1)));
  return trace;
}

struct BlockFormulaResult {
  bool holds = true;
  std::vector<ChartTriple> block_ends;  // aggregated triple at nu(1..M)
};

/// Compares the stepwise trace with the aggregated per-block formula
///   m odd:  r1 <- r1 - q_m r3,   m even: r3 <- r3 - q_m r1
/// evaluated from nu(m-1) to nu(m).
inline BlockFormulaResult block_formula_check(const ChartTriple& start, const AxisTower& tower) {
  const auto trace = pullback_trace(start, tower);
  BlockFormulaResult result;
  ChartTriple t = start;
  for (int m = 1; m <= tower.block_count; ++m) {
    const std::int64_t qm = tower.q[m - 1];
    if (m % 2 == 1) {
      t.r1 -= qm * t.r3;
    } else {
      t.r3 -= qm * t.r1;
    }
    result.block_ends.push_back(t);
    if (trace.triples[tower.block_end(m)] != t) result.holds = false;
  }
  return result;
}

struct PoleProfile {
  Axis axis;
  std::vector<bool> pole_at;  // E_{i,n}, n = 0..N
  std::vector<bool> in_z1;
  std::vector<bool> in_z2;
  // Non-exceptional boundary labels, carried for the census only.
  bool boundary_b_in_z1 = true;
  bool boundary_b_in_z2 = true;
  bool sentinel_pole = false;  // E_{i,-1} never receives pole flags

  std::vector<int> pole_indices() const {
    std::vector<int> out;
    for (std::size_t n = 0; n < pole_at.size(); ++n)
      if (pole_at[n]) out.push_back(static_cast<int>(n));
    return out;
  }
};

/// E_{i,n} is a pole iff r1^{(n)} > 0 (k(n) odd) or r3^{(n)} < 0 (k(n) even).
inline bool pole_at_index(const ChartTriple& t, int block) { return block % 2 == 1 ? t.r1 > 0 : t.r3 < 0; }

inline PoleProfile pole_profile(const TowerTrace& trace, const AxisTower& tower) {
  if (static_cast<int>(trace.triples.size()) != tower.total + 1)
    throw std::invalid_argument("trace length does not match tower");
  PoleProfile p{tower.axis, {}, {}, {}};
  for (int n = 0; n <= tower.total; ++n) {
    p.pole_at.push_back(pole_at_index(trace.triples[n], tower.block_index(n)));
    p.in_z1.push_back(tower.in_j1(n));
    p.in_z2.push_back(tower.in_j2(n));
  }
  return p;
}

// ---------------------------------------------------------------------------
// The three conditions
// ---------------------------------------------------------------------------

struct CondVerdict {
  bool cond1 = false;  // delta_{i,i} r1 <= d_i r3 on the support
  bool cond2 = false;  // every pole divisor E_{i,n} lies in Z_1
  bool cond3 = false;  // every pole divisor E_{i,n} lies in Z_2

  bool agree() const { return cond1 == cond2 && cond2 == cond3; }
  bool get(int which) const {
    switch (which) {
      case 1: return cond1;
      case 2: return cond2;
      case 3: return cond3;
      default: throw InputError("condition must be 1, 2 or 3");
    }
  }
};

inline bool poles_within(const PoleProfile& p, const std::vector<bool>& allowed) {
  for (std::size_t n = 0; n < p.pole_at.size(); ++n)
    if (p.pole_at[n] && !allowed[n]) return false;
  return true;
}

inline CondVerdict cond_for_triple(const ChartTriple& t, Axis axis, const KurodaConfig& cfg,
                                   const EuclidTower& tower) {
  const auto constants = derive_constants(cfg);
  const auto& at = tower[axis];
  const auto profile = pole_profile(pullback_trace(t, at), at);
  CondVerdict v;
  v.cond1 = star_inequality({t.r1, t.r2, t.r3}, axis, cfg, constants);
  v.cond2 = poles_within(profile, profile.in_z1);
  v.cond3 = poles_within(profile, profile.in_z2);
  return v;
}

inline bool cond(const ChartTriple& t, Axis axis, int which, const KurodaConfig& cfg) {
  return cond_for_triple(t, axis, cfg, euclid_tower(cfg)).get(which);
}

/// Pole profile of a polynomial on one axis: union over its support terms.
/// Distinct support triples stay distinct along the trace, so no pole can be
/// cancelled; a collision raises std::logic_error.
inline PoleProfile polynomial_pole_profile(const SparsePolynomial& f, Axis axis, const AxisTower& tower) {
  const auto support = axis_support(f, axis);
  PoleProfile merged{axis, std::vector<bool>(tower.total + 1, false), {}, {}};
  for (int n = 0; n <= tower.total; ++n) {
    merged.in_z1.push_back(tower.in_j1(n));
    merged.in_z2.push_back(tower.in_j2(n));
  }
  std::vector<TowerTrace> traces;
  for (const auto& r : support) traces.push_back(pullback_trace({r[0], r[1], r[2]}, tower));
  for (int n = 0; n <= tower.total; ++n) {
    std::set<ChartTriple> seen;
    for (const auto& tr : traces) {
      if (!seen.insert(tr.triples[n]).second)
        throw std::logic_error("distinct support triples collided at tower index " + std::to_string(n));
      if (pole_at_index(tr.triples[n], tower.block_index(n))) merged.pole_at[n] = true;
    }
  }
  return merged;
}

inline CondVerdict cond_for_polynomial(const SparsePolynomial& f, Axis axis, const KurodaConfig& cfg,
                                       const EuclidTower& tower) {
  const auto constants = derive_constants(cfg);
  CondVerdict v;
  v.cond1 = true;
  for (const auto& r : axis_support(f, axis)) v.cond1 = v.cond1 && star_inequality(r, axis, cfg, constants);
  const auto profile = polynomial_pole_profile(f, axis, tower[axis]);
  v.cond2 = poles_within(profile, profile.in_z1);
  v.cond3 = poles_within(profile, profile.in_z2);
  return v;
}

inline bool cond(const SparsePolynomial& f, Axis axis, int which, const KurodaConfig& cfg) {
  return cond_for_polynomial(f, axis, cfg, euclid_tower(cfg)).get(which);
}

// ---------------------------------------------------------------------------
// Boundary census
// ---------------------------------------------------------------------------

struct CensusEntry {
  std::string label;  // "B", "E_{1,-1}", "E_{1,0}", ...
  int axis = 0;       // 1-based; 0 for B
  int n = 0;          // tower index; -1 for the sentinel
  bool in_z1 = false;
  bool in_z2 = false;
};

struct CensusReport {
  std::vector<CensusEntry> entries;
  std::array<bool, 3> z1_equals_z2{};
  std::array<std::vector<int>, 3> z1_indices;
  std::array<std::vector<int>, 3> z2_indices;
};

inline std::string divisor_label(Axis axis, int n) {
  return "E_{" + std::to_string(axis.label()) + "," + std::to_string(n) + "}";
}

inline CensusReport boundary_census(const KurodaConfig& cfg) {
  const auto tower = euclid_tower(cfg);
  CensusReport report;
  report.entries.push_back({"B", 0, 0, true, true});
  for (Axis a : kAllAxes) {
    const auto& at = tower[a];
    report.entries.push_back({divisor_label(a, -1), a.label(), -1, false, false});
    for (int n = 0; n <= at.total; ++n)
      report.entries.push_back({divisor_label(a, n), a.label(), n, at.in_j1(n), at.in_j2(n)});
    report.z1_indices[a.index()] = at.j1;
    report.z2_indices[a.index()] = at.j2;
    report.z1_equals_z2[a.index()] = at.j1 == at.j2;
  }
  return report;
}

// ---------------------------------------------------------------------------
// Pullback of the (A_i) region inequality
// ---------------------------------------------------------------------------

struct RegionPullbackTerm {
  ChartTriple start;
  TowerTrace trace;
  PoleProfile poles;
};

struct RegionPullbackReport {
  Axis axis;
  std::vector<RegionPullbackTerm> terms;
  std::vector<int> pole_indices;  // union over the terms
  std::vector<int> z2_indices;    // J_{2,i}
  bool poles_cover_z2 = false;    // every Z_2 tower divisor carries a pole
  bool poles_equal_z2 = false;
};

/// The left-hand side of (A_i) pulled back to A_0 is a difference of the chart
/// monomials with triples (2 d_i, 0, 2 delta_{i,i}) and (0, 0, 2 delta_{i,i});
/// the lambda factors are nonzero constants and are dropped.
inline RegionPullbackReport region_inequality_pullback(Axis axis, const KurodaConfig& cfg) {
  const auto constants = derive_constants(cfg);
  const auto tower = euclid_tower(cfg);
  const auto& at = tower[axis];
  const int i = axis.index();
  const std::int64_t two_delta = 2 * cfg.delta[i][i];
  const std::array<ChartTriple, 2> starts = {ChartTriple{2 * constants.d[i], 0, two_delta},
                                             ChartTriple{0, 0, two_delta}};
  RegionPullbackReport report{axis, {}, {}, at.j2, false, false};
  std::vector<bool> any(at.total + 1, false);
  for (const auto& s : starts) {
    auto trace = pullback_trace(s, at);
    auto poles = pole_profile(trace, at);
    for (int n = 0; n <= at.total; ++n) any[n] = any[n] || poles.pole_at[n];
    report.terms.push_back({s, std::move(trace), std::move(poles)});
  }
  for (int n = 0; n <= at.total; ++n) {
    if (report.terms[0].trace.triples[n] == report.terms[1].trace.triples[n])
      throw std::logic_error("region inequality terms collided along the tower");
    if (any[n]) report.pole_indices.push_back(n);
  }
  report.poles_cover_z2 = true;
  for (int n : at.j2) report.poles_cover_z2 = report.poles_cover_z2 && any[n];
  report.poles_equal_z2 = report.pole_indices == at.j2;
  return report;
}

}  // namespace kuroda

#endif  // KURODA_BLOWUP_HPP
