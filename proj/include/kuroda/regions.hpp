#ifndef KURODA_REGIONS_HPP
#define KURODA_REGIONS_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <limits>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "kuroda/config.hpp"
#include "kuroda/membership.hpp"
#include "kuroda/polynomial.hpp"

// Floating-point semialgebraic layer.  Everything here is sampled evidence in
// double precision; no routine certifies boundedness or membership.

namespace kuroda {

enum class RegionKind { s_prime, s_double_prime, s, s_tilde };

inline const char* region_name(RegionKind k) {
  switch (k) {
    case RegionKind::s_prime: return "SPrime4";
    case RegionKind::s_double_prime: return "SDoublePrime3";
    case RegionKind::s: return "S3";
    case RegionKind::s_tilde: return "STilde3";
  }
  return "?";
}

constexpr int region_dimension(RegionKind k) { return k == RegionKind::s_prime ? 4 : 3; }

/// Right-hand sides of (A1), (B1), (A2), (B2), (A3), (B3), in that order.
using TildeRhs = std::array<double, 6>;
inline constexpr TildeRhs kDefaultTildeRhs = {1.0, 4.0, 1.0, 4.0, 1.0, 4.0};

struct RegionSpec {
  RegionKind kind = RegionKind::s_tilde;
  double lambda = 1.0;
  std::optional<TildeRhs> rhs_overrides;

  void check() const {
    if (!(lambda > 0.0)) throw InputError("region scale lambda must be positive");
  }
  /// Overrides keep B(S~) = R only when the (A)-type right-hand sides stay positive.
  bool overrides_preserve_ring() const {
    if (!rhs_overrides) return true;
    return (*rhs_overrides)[0] > 0 && (*rhs_overrides)[2] > 0 && (*rhs_overrides)[4] > 0;
  }
};

enum class Verdict { in, out, uncertain };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::in: return "IN";
    case Verdict::out: return "OUT";
    case Verdict::uncertain: return "UNCERTAIN";
  }
  return "?";
}

using Point3 = std::array<double, 3>;
using Point4 = std::array<double, 4>;

// ---------------------------------------------------------------------------
// Predicates
// ---------------------------------------------------------------------------

/// min over ordered pairs i != j of 1 - |y_i^{delta_{j,i}} y_j^{delta_{i,i}}|,
/// evaluated on unscaled coordinates.  Positive iff the point lies in S''.
inline double star_margin(std::span<const double> y, const KurodaConfig& cfg) {
  double margin = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      const double term = std::pow(std::abs(y[i]), static_cast<double>(cfg.delta[j][i])) *
                          std::pow(std::abs(y[j]), static_cast<double>(cfg.delta[i][i]));
      const double m = std::isnan(term) ? -std::numeric_limits<double>::infinity() : 1.0 - term;
      margin = std::min(margin, m);
    }
  }
  return margin;
}

inline bool in_s_prime(const Point4& p, double lambda, const KurodaConfig& cfg) {
  const Point4 q = {p[0] / lambda, p[1] / lambda, p[2] / lambda, p[3] / lambda};
  return std::abs(q[3]) < 1.0 && star_margin(q, cfg) > 0.0;
}

inline bool in_s_double_prime(const Point3& p, double lambda, const KurodaConfig& cfg) {
  const Point3 q = {p[0] / lambda, p[1] / lambda, p[2] / lambda};
  return star_margin(q, cfg) > 0.0;
}

/// Left-hand sides of (A1), (B1), (A2), (B2), (A3), (B3) at the scaled point q.
inline std::array<double, 6> tilde_lhs(const Point3& q, const KurodaConfig& cfg) {
  std::array<double, 6> out{};
  for (int i = 0; i < 3; ++i) {
    const int j = i == 0 ? 1 : 0;
    const int k = i == 2 ? 1 : 2;
    const double diff = q[j] - q[k];
    const double sum = q[j] + q[k];
    out[2 * i] = (std::pow(q[i], 2.0 * static_cast<double>(detail::min_other_column(cfg, i))) - 1.0) *
                 std::pow(diff, 2.0 * static_cast<double>(cfg.delta[i][i]));
    out[2 * i + 1] = (q[i] * q[i] - 1.0) * (sum * sum - 4.0);
  }
  return out;
}

inline bool in_s_tilde(const Point3& p, double lambda, const KurodaConfig& cfg,
                       const std::optional<TildeRhs>& overrides = std::nullopt) {
  const Point3 q = {p[0] / lambda, p[1] / lambda, p[2] / lambda};
  const auto lhs = tilde_lhs(q, cfg);
  const TildeRhs rhs = overrides.value_or(kDefaultTildeRhs);
  for (int c = 0; c < 6; ++c)
    if (!(lhs[c] < rhs[c])) return false;
  return true;
}

struct SMembership {
  Verdict verdict = Verdict::out;
  double best_margin = -std::numeric_limits<double>::infinity();
  double best_shift = 0.0;
};

/// Semi-decision of p in lambda S = lambda S'' + lambda J: searches a in
/// (-lambda, lambda) with p - (a,a,a) in lambda S''.  A 1024-point grid plus
/// the coordinate-zeroing shifts a = p_j are scanned, then the best grid
/// points are refined twice.  UNCERTAIN when the best margin is within
/// `tolerance` of zero.
inline SMembership in_s(const Point3& p, double lambda, const KurodaConfig& cfg, double tolerance = 1e-6) {
  constexpr int kGrid = 1024;
  constexpr int kRefine = 32;
  constexpr int kSeeds = 4;
  const double lo = -lambda;
  const double step = 2.0 * lambda / kGrid;
  const double inner = lambda * (1.0 - 1e-12);

  const auto margin_at = [&](double a) {
    const Point3 q = {(p[0] - a) / lambda, (p[1] - a) / lambda, (p[2] - a) / lambda};
    return star_margin(q, cfg);
  };

  SMembership best;
  const auto consider = [&](double a) {
    if (!(std::abs(a) < inner)) return;
    const double m = margin_at(a);
    if (m > best.best_margin) {
      best.best_margin = m;
      best.best_shift = a;
    }
  };

  std::vector<std::pair<double, double>> grid;  // (margin, shift)
  grid.reserve(kGrid);
  for (int t = 0; t < kGrid; ++t) {
    const double a = lo + (t + 0.5) * step;
    grid.emplace_back(margin_at(a), a);
    consider(a);
  }
  for (int j = 0; j < 3; ++j) consider(p[j]);

  const int seeds = std::min<int>(kSeeds, static_cast<int>(grid.size()));
  std::partial_sort(grid.begin(), grid.begin() + seeds, grid.end(),
                    [](const auto& x, const auto& y) { return x.first > y.first; });
  for (int s = 0; s < seeds; ++s) {
    double centre = grid[s].second;
    double half = step;
    for (int round = 0; round < 2; ++round) {
      double local_best = -std::numeric_limits<double>::infinity();
      double local_arg = centre;
      for (int t = 0; t <= kRefine; ++t) {
        const double a = centre - half + 2.0 * half * t / kRefine;
        if (!(std::abs(a) < inner)) continue;
        const double m = margin_at(a);
        consider(a);
        if (m > local_best) {
          local_best = m;
          local_arg = a;
        }
      }
      centre = local_arg;
      half /= kRefine / 2;
    }
  }

  if (best.best_margin > tolerance) {
    best.verdict = Verdict::in;
  } else if (best.best_margin < -tolerance) {
    best.verdict = Verdict::out;
  } else {
    best.verdict = Verdict::uncertain;
  }
  return best;
}

/// C: points with some coordinate of absolute value > 2.
inline bool in_exclusion_region(const Point3& p) {
  return std::abs(p[0]) > 2.0 || std::abs(p[1]) > 2.0 || std::abs(p[2]) > 2.0;
}

// ---------------------------------------------------------------------------
// Escape sequence
// ---------------------------------------------------------------------------

struct EscapePoint {
  std::int64_t k = 0;
  Point4 y{};   // a_k
  Point3 pi{};  // (y1 - y4, y2 - y4, y3 - y4)
};

/// a_k = (k^{delta_{1,1}}, 1/(k^{delta_{2,1}} log k), 1/(k^{delta_{3,1}} log log k), 1/log log log k)
/// with base-2 logarithms; `dominant` relabels which coordinate carries k^{delta_{i,i}}.
inline EscapePoint escape_point(std::int64_t k, const KurodaConfig& cfg, Axis dominant = Axis::from_index(0)) {
  if (k < 16) throw InputError("escape sequence requires k >= 16");
  const double kd = static_cast<double>(k);
  const double l1 = std::log2(kd);
  const double l2 = std::log2(l1);
  const double l3 = std::log2(l2);
  const int i = dominant.index();
  const int j = i == 0 ? 1 : 0;
  const int m = i == 2 ? 1 : 2;

  EscapePoint e;
  e.k = k;
  e.y[i] = std::pow(kd, static_cast<double>(cfg.delta[i][i]));
  e.y[j] = 1.0 / (std::pow(kd, static_cast<double>(cfg.delta[j][i])) * l1);
  e.y[m] = 1.0 / (std::pow(kd, static_cast<double>(cfg.delta[m][i])) * l2);
  e.y[3] = 1.0 / l3;
  for (int c = 0; c < 3; ++c) e.pi[c] = e.y[c] - e.y[3];
  return e;
}

/// Every integer k in [first, last].
inline std::vector<std::int64_t> escape_schedule(std::int64_t first, std::int64_t last) {
  std::vector<std::int64_t> ks;
  for (std::int64_t k = first; k <= last; ++k) ks.push_back(k);
  return ks;
}

// ---------------------------------------------------------------------------
// Sampling
// ---------------------------------------------------------------------------

class SamplingFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SampleSet {
  RegionSpec spec;
  int dimension = 3;
  std::uint64_t seed = 0;
  double radius = 0.0;
  double tube_radius = 0.0;
  std::vector<Point4> points;  // 3-D regions leave the fourth slot at zero
  std::uint64_t attempts = 0;
  std::uint64_t box_accepted = 0;
  std::uint64_t tube_accepted = 0;
  std::uint64_t uncertain = 0;  // S only: UNCERTAIN candidates that were dropped

  double acceptance_rate() const {
    return attempts == 0 ? 0.0 : static_cast<double>(points.size()) / static_cast<double>(attempts);
  }
};

namespace detail {

/// Candidate draw: box stratum or a ray tube around one coordinate axis.
/// Tube coordinates transverse to the ray are uniform or log-uniform in
/// [-tube, tube]; S and S~ candidates get a common diagonal shift in
/// (-lambda, lambda) so the tubes follow their shifted arms.
inline Point4 draw_candidate(const RegionSpec& spec, double radius, std::mt19937_64& rng, bool& from_box) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const auto symmetric = [&](double r) { return (2.0 * unit(rng) - 1.0) * r; };
  const int dim = region_dimension(spec.kind);
  const double tube = 0.5 * spec.lambda;
  Point4 p{};
  from_box = unit(rng) < 0.5;
  if (from_box) {
    for (int c = 0; c < dim; ++c) p[c] = symmetric(radius);
    return p;
  }
  const int axis = static_cast<int>(unit(rng) * 3.0) % 3;
  for (int c = 0; c < 3; ++c) {
    if (c == axis) {
      p[c] = symmetric(radius);
    } else if (unit(rng) < 0.5) {
      p[c] = symmetric(tube);
    } else {
      const double mag = tube * std::pow(10.0, -12.0 * unit(rng));
      p[c] = unit(rng) < 0.5 ? -mag : mag;
    }
  }
  if (spec.kind == RegionKind::s || spec.kind == RegionKind::s_tilde) {
    const double shift = symmetric(spec.lambda);
    for (int c = 0; c < 3; ++c) p[c] += shift;
  }
  if (dim == 4) p[3] = symmetric(spec.lambda);
  return p;
}

inline Point3 head3(const Point4& p) { return {p[0], p[1], p[2]}; }

}  // namespace detail

/// Region membership for samplers: S counts only IN verdicts.
inline Verdict region_verdict(const RegionSpec& spec, const Point4& p, const KurodaConfig& cfg,
                              double tolerance = 1e-6) {
  switch (spec.kind) {
    case RegionKind::s_prime: return in_s_prime(p, spec.lambda, cfg) ? Verdict::in : Verdict::out;
    case RegionKind::s_double_prime:
      return in_s_double_prime(detail::head3(p), spec.lambda, cfg) ? Verdict::in : Verdict::out;
    case RegionKind::s: return in_s(detail::head3(p), spec.lambda, cfg, tolerance).verdict;
    case RegionKind::s_tilde:
      return in_s_tilde(detail::head3(p), spec.lambda, cfg, spec.rhs_overrides) ? Verdict::in : Verdict::out;
  }
  return Verdict::out;
}

/// Stratified rejection sampling of a region; deterministic per seed.
/// Throws SamplingFailure when the attempt cap is reached with no sample.
inline SampleSet sample_region(const RegionSpec& spec, std::size_t count, std::uint64_t seed, double radius,
                               const KurodaConfig& cfg, std::uint64_t max_attempts = 0) {
  spec.check();
  if (!(radius > 0.0)) throw InputError("sampling radius must be positive");
  SampleSet set;
  set.spec = spec;
  set.dimension = region_dimension(spec.kind);
  set.seed = seed;
  set.radius = radius;
  set.tube_radius = 0.5 * spec.lambda;
  if (count == 0) return set;
  const std::uint64_t cap = max_attempts != 0 ? max_attempts : std::max<std::uint64_t>(100000, 2000 * count);

  std::mt19937_64 rng(seed);
  set.points.reserve(count);
  while (set.points.size() < count && set.attempts < cap) {
    ++set.attempts;
    bool from_box = false;
    const Point4 p = detail::draw_candidate(spec, radius, rng, from_box);
    const Verdict v = region_verdict(spec, p, cfg);
    if (v == Verdict::uncertain) ++set.uncertain;
    if (v != Verdict::in) continue;
    set.points.push_back(p);
    ++(from_box ? set.box_accepted : set.tube_accepted);
  }
  if (set.points.empty())
    throw SamplingFailure(std::string("no accepted samples for ") + region_name(spec.kind) + " after " +
                          std::to_string(set.attempts) + " attempts");
  return set;
}

// ---------------------------------------------------------------------------
// Boundedness probe
// ---------------------------------------------------------------------------

struct EscapeValue {
  std::int64_t k = 0;
  double value = 0.0;
};

struct ProbeReport {
  std::uint64_t seed = 0;
  std::size_t sample_count = 0;
  std::size_t pole_skips = 0;
  std::uint64_t uncertain_count = 0;
  double max_abs_value = 0.0;
  Point4 argmax{};
  std::optional<double> monomial_bound;  // lambda^n |c| for a single y-monomial in M
  bool bound_ok = true;
  std::vector<EscapeValue> escape;
  bool monotone_tail = false;
  bool divergence = false;
  double divergence_threshold = 0.0;
};

/// True when the last half of `values` is strictly increasing.
inline bool monotone_increasing_tail(const std::vector<EscapeValue>& values) {
  if (values.size() < 2) return false;
  const std::size_t start = values.size() / 2;
  for (std::size_t i = std::max<std::size_t>(start, 1); i < values.size(); ++i)
    if (!(values[i].value > values[i - 1].value)) return false;
  return true;
}

inline ProbeReport boundedness_probe(const SparsePolynomial& f, const SampleSet& samples,
                                     const std::vector<std::int64_t>& escape_ks, const KurodaConfig& cfg,
                                     double divergence_threshold = 1e3) {
  const bool y_system = f.system() == VarSystem::y4;
  if (y_system != (samples.dimension == 4) || (!y_system && f.system() != VarSystem::pi3))
    throw InputError("polynomial variable system does not match the sampled region");

  ProbeReport report;
  report.seed = samples.seed;
  report.sample_count = samples.points.size();
  report.uncertain_count = samples.uncertain;
  report.divergence_threshold = divergence_threshold;
  const int n = arity(f.system());
  for (const auto& p : samples.points) {
    const auto v = evaluate_numeric(f, std::span<const double>(p.data(), n));
    if (!v) {
      ++report.pole_skips;
      continue;
    }
    if (std::abs(*v) >= report.max_abs_value) {
      report.max_abs_value = std::abs(*v);
      report.argmax = p;
    }
  }

  if (y_system && f.size() == 1) {
    const auto& [e, c] = *f.terms().begin();
    const MonoidElement m{e};
    if (monoid_member(m, cfg)) {
      report.monomial_bound =
          std::pow(samples.spec.lambda, static_cast<double>(m.degree())) * std::abs(to_double(c));
      report.bound_ok = report.max_abs_value <= *report.monomial_bound + 1e-9;
    }
  }

  for (auto k : escape_ks) {
    const auto e = escape_point(k, cfg);
    const auto v = y_system ? evaluate_numeric(f, e.y) : evaluate_numeric(f, e.pi);
    if (v) report.escape.push_back({k, std::abs(*v)});
  }
  report.monotone_tail = monotone_increasing_tail(report.escape);
  report.divergence = report.monotone_tail && !report.escape.empty() &&
                      report.escape.back().value > divergence_threshold;
  return report;
}

// ---------------------------------------------------------------------------
// Sandwich (1/2 S) cap C  subset  S~ cap C  subset  (2 S) cap C
// ---------------------------------------------------------------------------

struct SandwichViolation {
  Point3 point{};
  std::string inclusion;  // "inner" or "outer"
};

struct SandwichReport {
  std::uint64_t seed = 0;
  std::size_t requested = 0;
  std::size_t inner_checked = 0;
  std::size_t inner_violations = 0;
  std::size_t outer_checked = 0;
  std::size_t outer_violations = 0;
  std::size_t uncertain_count = 0;
  std::vector<SandwichViolation> examples;  // first few violations
  double radius = 0.0;

  std::size_t violations() const { return inner_violations + outer_violations; }
  double uncertain_fraction() const {
    return outer_checked == 0 ? 0.0 : static_cast<double>(uncertain_count) / static_cast<double>(outer_checked);
  }
};

/// Draws `count` points of (1/2 S) cap C (built as b + a(1,1,1) with b in
/// (1/2)S'' and |a| < 1/2) and checks them against S~; draws `count` points
/// of S~ cap C and checks them against 2S with the tri-state in_s.
inline SandwichReport sandwich_check(const KurodaConfig& cfg, std::size_t count, std::uint64_t seed,
                                     double radius = 10.0, double tolerance = 1e-6) {
  SandwichReport report;
  report.seed = seed;
  report.requested = count;
  report.radius = radius;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> half_shift(-0.5, 0.5);
  const std::uint64_t cap = std::max<std::uint64_t>(100000, 5000 * count);
  constexpr std::size_t kMaxExamples = 8;

  const RegionSpec half_star{RegionKind::s_double_prime, 0.5, std::nullopt};
  for (std::uint64_t attempts = 0; report.inner_checked < count && attempts < cap; ++attempts) {
    bool from_box = false;
    const Point4 cand = detail::draw_candidate(half_star, radius, rng, from_box);
    const Point3 b = detail::head3(cand);
    if (!in_s_double_prime(b, 0.5, cfg)) continue;
    const double a = half_shift(rng);
    const Point3 p = {b[0] + a, b[1] + a, b[2] + a};
    if (!in_exclusion_region(p)) continue;
    ++report.inner_checked;
    if (!in_s_tilde(p, 1.0, cfg)) {
      ++report.inner_violations;
      if (report.examples.size() < kMaxExamples) report.examples.push_back({p, "inner"});
    }
  }

  const RegionSpec tilde{RegionKind::s_tilde, 1.0, std::nullopt};
  for (std::uint64_t attempts = 0; report.outer_checked < count && attempts < cap; ++attempts) {
    bool from_box = false;
    const Point3 p = detail::head3(detail::draw_candidate(tilde, radius, rng, from_box));
    if (!in_exclusion_region(p) || !in_s_tilde(p, 1.0, cfg)) continue;
    ++report.outer_checked;
    const auto m = in_s(p, 2.0, cfg, tolerance);
    if (m.verdict == Verdict::uncertain) {
      ++report.uncertain_count;
    } else if (m.verdict == Verdict::out) {
      ++report.outer_violations;
      if (report.examples.size() < kMaxExamples) report.examples.push_back({p, "outer"});
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Boundary point clouds
// ---------------------------------------------------------------------------

enum class CloudRegion { s_double_prime, s_tilde };

struct CloudPoint {
  Point3 p{};
  double margin = 0.0;  // first-order signed distance to the boundary, positive inside
};

struct CloudReport {
  CloudRegion which = CloudRegion::s_double_prime;
  int grid = 0;
  double radius = 0.0;
  double band = 0.0;
  std::vector<CloudPoint> points;
  std::array<std::size_t, 8> octant_counts{};    // sign pattern of (x, y, z)
  std::array<std::size_t, 3> dominant_counts{};  // argmax_i |p_i|
};

namespace detail {

/// Smooth constraint functions g_c(p) < rhs_c describing the region.
inline std::vector<double> cloud_constraints(CloudRegion which, const Point3& p, const KurodaConfig& cfg) {
  std::vector<double> g;
  if (which == CloudRegion::s_tilde) {
    for (double v : tilde_lhs(p, cfg)) g.push_back(v);
    return g;
  }
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      const double t = std::pow(p[i], static_cast<double>(cfg.delta[j][i])) *
                       std::pow(p[j], static_cast<double>(cfg.delta[i][i]));
      g.push_back(t * t);
    }
  return g;
}

inline std::vector<double> cloud_rhs(CloudRegion which) {
  if (which == CloudRegion::s_tilde) return {kDefaultTildeRhs.begin(), kDefaultTildeRhs.end()};
  return std::vector<double>(6, 1.0);
}

inline double signed_distance(CloudRegion which, const Point3& p, const KurodaConfig& cfg) {
  const auto g = cloud_constraints(which, p, cfg);
  const auto rhs = cloud_rhs(which);
  std::vector<std::array<double, 3>> grad(g.size());
  for (int c = 0; c < 3; ++c) {
    const double h = 1e-6 * std::max(1.0, std::abs(p[c]));
    Point3 up = p;
    Point3 down = p;
    up[c] += h;
    down[c] -= h;
    const auto gu = cloud_constraints(which, up, cfg);
    const auto gd = cloud_constraints(which, down, cfg);
    for (std::size_t k = 0; k < g.size(); ++k) grad[k][c] = (gu[k] - gd[k]) / (2.0 * h);
  }
  double margin = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < g.size(); ++k) {
    const double norm = std::sqrt(grad[k][0] * grad[k][0] + grad[k][1] * grad[k][1] + grad[k][2] * grad[k][2]);
    const double slack = rhs[k] - g[k];
    double d;
    if (norm > 0.0) {
      d = slack / norm;
    } else {
      d = slack > 0 ? std::numeric_limits<double>::infinity() : -std::numeric_limits<double>::infinity();
    }
    margin = std::min(margin, d);
  }
  return margin;
}

}  // namespace detail

/// Evaluates the defining constraints on a grid of cell centres over
/// [-radius, radius]^3 and keeps points whose signed distance estimate is
/// within `band` of the boundary (default band: one grid cell).
inline CloudReport surface_cloud(const KurodaConfig& cfg, CloudRegion which, int grid, double radius,
                                 std::optional<double> band = std::nullopt) {
  if (grid < 1) throw InputError("grid must be >= 1");
  if (!(radius > 0.0)) throw InputError("cloud radius must be positive");
  CloudReport report;
  report.which = which;
  report.grid = grid;
  report.radius = radius;
  const double h = 2.0 * radius / grid;
  report.band = band.value_or(h);
  for (int a = 0; a < grid; ++a)
    for (int b = 0; b < grid; ++b)
      for (int c = 0; c < grid; ++c) {
        const Point3 p = {-radius + (a + 0.5) * h, -radius + (b + 0.5) * h, -radius + (c + 0.5) * h};
        const double m = detail::signed_distance(which, p, cfg);
        if (!(std::abs(m) < report.band)) continue;
        report.points.push_back({p, m});
        const int octant = (p[0] < 0 ? 1 : 0) | (p[1] < 0 ? 2 : 0) | (p[2] < 0 ? 4 : 0);
        ++report.octant_counts[octant];
        int dom = 0;
        for (int k = 1; k < 3; ++k)
          if (std::abs(p[k]) > std::abs(p[dom])) dom = k;
        ++report.dominant_counts[dom];
      }
  return report;
}

inline void write_cloud_csv(const CloudReport& cloud, std::ostream& out) {
  out << "x,y,z,margin\n";
  out.precision(17);
  for (const auto& cp : cloud.points) out << cp.p[0] << ',' << cp.p[1] << ',' << cp.p[2] << ',' << cp.margin << '\n';
}

inline CloudReport export_surface_cloud(const KurodaConfig& cfg, CloudRegion which, int grid, double radius,
                                        const std::string& path, std::optional<double> band = std::nullopt) {
  auto cloud = surface_cloud(cfg, which, grid, radius, band);
  std::ofstream out(path);
  if (!out) throw InputError("cannot write cloud to '" + path + "'");
  write_cloud_csv(cloud, out);
  if (!out) throw InputError("failed writing cloud to '" + path + "'");
  return cloud;
}

inline void write_samples_csv(const SampleSet& set, std::ostream& out) {
  out << (set.dimension == 4 ? "y1,y2,y3,y4\n" : "p1,p2,p3\n");
  out.precision(17);
  for (const auto& p : set.points) {
    for (int c = 0; c < set.dimension; ++c) out << (c ? "," : "") << p[c];
    out << '\n';
  }
}

}  // namespace kuroda

#endif  // KURODA_REGIONS_HPP
