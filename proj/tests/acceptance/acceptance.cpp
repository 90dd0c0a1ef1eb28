// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "kuroda.hpp"
#include "support/random_poly.hpp"

using namespace kuroda;

namespace {

constexpr double kMonomialSlack = 1e-9;
constexpr std::size_t kMonomialSamples = 100000;
constexpr std::int64_t kEscapeFirst = 16;
constexpr std::int64_t kEscapeLast = 10000;
constexpr double kEscapeFinalMin = 9e3;
constexpr std::size_t kSandwichSamples = 10000;
constexpr double kSandwichTolerance = 1e-6;
constexpr double kSandwichUncertainMax = 0.02;
constexpr int kCondSweep = 60;
constexpr std::size_t kRandomPolynomials = 1000;

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;
  std::function<Outcome()> check;
};

SparsePolynomial P(int i) { return SparsePolynomial::variable(VarSystem::pi3, i - 1); }

std::string join(const std::vector<int>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

Outcome concrete_tower() {
  const auto tower = euclid_tower(concrete_example());
  bool ok = true;
  std::ostringstream d;
  for (Axis a : kAllAxes) {
    const auto& t = tower[a];
    ok = ok && t.block_count == 1 && t.total == 3 && t.j1 == t.j2;
    d << "axis" << a.label() << ": M=" << t.block_count << " N=" << t.total << " Z1" << (t.j1 == t.j2 ? "=" : "!=")
      << "Z2; ";
  }
  return {ok, d.str()};
}

Outcome eq1_value_check() {
  const auto v = validate(concrete_example());
  bool ok = v.valid && v.eq1_value && *v.eq1_value == make_rational(3, 4);
  std::ostringstream d;
  d << "eq1=" << (v.eq1_value ? to_string(*v.eq1_value) : "n/a") << "; pairs:";
  for (const auto& pc : v.pair_checks) {
    ok = ok && pc.holds && pc.diagonal_product == 1 && pc.cross_product == 9;
    d << " " << pc.diagonal_product << "<" << pc.cross_product;
  }
  ok = ok && v.pair_checks.size() == 3;
  return {ok, d.str()};
}

Outcome monoid_equivalence() {
  std::size_t checked = 0;
  std::size_t mismatches = 0;
  const auto vectors = vectors_up_to_degree(12);
  for (const auto& cfg : {concrete_example(), seven_halves_example()})
    for (const auto& v : vectors) {
      ++checked;
      if (monoid_member(v, cfg) != monoid_member_oracle(v, cfg)) ++mismatches;
    }
  std::ostringstream d;
  d << vectors.size() << " vectors x 2 configs, mismatches=" << mismatches;
  return {vectors.size() == 1820 && mismatches == 0, d.str()};
}

Outcome ring_equivalence() {
  std::size_t mismatches = 0;
  std::size_t members = 0;
  std::mt19937_64 rng(20240401);
  const auto cfg = concrete_example();
  for (std::size_t t = 0; t < kRandomPolynomials; ++t) {
    const auto f = test_support::random_pi_polynomial(rng);
    const bool star = in_r_star(f, cfg);
    if (star != in_r_oracle(f, cfg)) ++mismatches;
    if (star) ++members;
  }
  const std::vector<std::pair<SparsePolynomial, bool>> fixtures = {
      {SparsePolynomial::constant(VarSystem::pi3, make_rational(1)), true},
      {P(1), false},
      {P(1) * P(2) * P(3), false},
      {(P(1) - P(2)) * (P(2) - P(3)) * (P(3) - P(1)), true},
  };
  // Uniform random polynomials almost never lie in R; add draws from its graded pieces.
  const test_support::RingSampler sampler(cfg, 6);
  std::size_t ring_draws = 0;
  for (std::size_t t = 0; t < kRandomPolynomials; ++t) {
    auto f = sampler.draw(rng);
    if (t % 2) f += test_support::random_pi_polynomial(rng, 2, 6);
    if (in_r_star(f, cfg) != in_r_oracle(f, cfg)) ++mismatches;
    if (in_r_oracle(f, cfg)) ++ring_draws;
  }
  std::size_t fixture_errors = 0;
  for (const auto& [f, expected] : fixtures)
    if (in_r_star(f, cfg) != expected || in_r_oracle(f, cfg) != expected) ++fixture_errors;
  std::ostringstream d;
  d << kRandomPolynomials << " random (" << members << " in R) + " << kRandomPolynomials << " ring-based ("
    << ring_draws << " in R), mismatches=" << mismatches
    << ", fixture errors=" << fixture_errors;
  return {mismatches == 0 && fixture_errors == 0, d.str()};
}

struct SweepStats {
  std::size_t triples = 0;
  std::size_t disagreements = 0;
  std::size_t negative_intermediate = 0;
  std::size_t block_failures = 0;
};

const SweepStats& cond_sweep() {
  static const SweepStats stats = [] {
    SweepStats s;
    for (const auto& cfg : {concrete_example(), seven_halves_example()}) {
      const auto tower = euclid_tower(cfg);
      for (Axis a : kAllAxes) {
        const auto& at = tower[a];
        for (std::int64_t r1 = 0; r1 <= kCondSweep; ++r1)
          for (std::int64_t r2 = 0; r2 <= 1; ++r2)
            for (std::int64_t r3 = 0; r3 <= kCondSweep; ++r3) {
              const ChartTriple t{r1, r2, r3};
              ++s.triples;
              const auto v = cond_for_triple(t, a, cfg, tower);
              if (!v.agree()) ++s.disagreements;
              if (v.cond1)
                for (const auto& step : pullback_trace(t, at).triples)
                  if (step.r3 < 0) {
                    ++s.negative_intermediate;
                    break;
                  }
              if (!block_formula_check(t, at).holds) ++s.block_failures;
            }
      }
    }
    return s;
  }();
  return stats;
}

Outcome condition_equivalence() {
  const auto& s = cond_sweep();
  std::ostringstream d;
  d << s.triples << " triples, disagreements=" << s.disagreements
    << ", negative r3 under Cond1=" << s.negative_intermediate;
  return {s.disagreements == 0 && s.negative_intermediate == 0, d.str()};
}

Outcome block_formula() {
  const auto& s = cond_sweep();
  std::ostringstream d;
  d << s.triples << " triples, failures=" << s.block_failures;
  return {s.block_failures == 0, d.str()};
}

Outcome region_pole_criterion() {
  const auto concrete = region_inequality_pullback(Axis::from_label(1), concrete_example());
  const auto seven = region_inequality_pullback(Axis::from_label(1), seven_halves_example());
  const bool ok = concrete.pole_indices == std::vector<int>{0, 1, 2} && concrete.poles_equal_z2 &&
                  seven.pole_indices == std::vector<int>{0, 1, 2, 3} && seven.poles_equal_z2;
  std::ostringstream d;
  d << "concrete poles " << join(concrete.pole_indices) << " vs Z2 " << join(concrete.z2_indices)
    << "; 7/2 poles " << join(seven.pole_indices) << " vs J2 " << join(seven.z2_indices);
  return {ok, d.str()};
}

Outcome monomial_bound() {
  const auto cfg = concrete_example();
  const auto gens = enumerate_t_generators(cfg, 8).generators;
  std::size_t failures = 0;
  double worst_ratio = 0.0;
  std::ostringstream d;
  const std::vector<double> lambdas = {0.5, 1.0, 2.0};
  for (std::size_t li = 0; li < lambdas.size(); ++li) {
    const double lambda = lambdas[li];
    const RegionSpec spec{RegionKind::s_prime, lambda, std::nullopt};
    const auto samples = sample_region(spec, kMonomialSamples, 1000 + li, 10.0 * lambda, cfg);
    if (samples.points.size() != kMonomialSamples) ++failures;
    for (const auto& g : gens) {
      const auto report = boundedness_probe(SparsePolynomial::monomial(VarSystem::y4, g.n), samples, {}, cfg);
      const double bound = std::pow(lambda, static_cast<double>(g.degree()));
      if (!(report.max_abs_value <= bound + kMonomialSlack)) ++failures;
      worst_ratio = std::max(worst_ratio, report.max_abs_value / bound);
    }
  }
  d << gens.size() << " generators x 3 scales x " << kMonomialSamples << " samples, failures=" << failures
    << ", max sup/lambda^n=" << worst_ratio;
  return {failures == 0, d.str()};
}

Outcome escape_divergence() {
  const auto cfg = concrete_example();
  bool monotone = true;
  double prev = -1.0;
  std::vector<std::int64_t> outside;
  double last = 0.0;
  for (std::int64_t k = kEscapeFirst; k <= kEscapeLast; ++k) {
    const auto e = escape_point(k, cfg);
    const double v = std::abs(e.pi[0]);
    if (!(v > prev)) monotone = false;
    prev = v;
    last = v;
    if (!in_s_prime(e.y, 1.0, cfg)) outside.push_back(k);
  }
  std::ostringstream d;
  d << "monotone=" << (monotone ? "yes" : "no") << ", |P1(a_" << kEscapeLast << ")|=" << last
    << ", k outside S'=" << outside.size();
  if (!outside.empty()) d << " (first k=" << outside.front() << ", last k=" << outside.back() << ")";
  return {monotone && last > kEscapeFinalMin && outside.empty(), d.str()};
}

Outcome sandwich() {
  const auto r = sandwich_check(concrete_example(), kSandwichSamples, 77, 10.0, kSandwichTolerance);
  const double uncertain = static_cast<double>(r.uncertain_count) / static_cast<double>(kSandwichSamples);
  std::ostringstream d;
  d << "inner " << r.inner_checked << " checked/" << r.inner_violations << " violations, outer " << r.outer_checked
    << " checked/" << r.outer_violations << " violations, uncertain=" << r.uncertain_count;
  const bool ok = r.inner_checked == kSandwichSamples && r.outer_checked == kSandwichSamples &&
                  r.violations() == 0 && uncertain < kSandwichUncertainMax;
  return {ok, d.str()};
}

Outcome generator_growth() {
  const auto cfg = concrete_example();
  const auto d1 = enumerate_t_generators(cfg, 1).generators;
  const auto d2 = enumerate_t_generators(cfg, 2).generators;
  std::vector<std::size_t> counts;
  bool fixtures = true;
  for (std::int64_t bound : {4, 6, 8}) {
    const auto gens = enumerate_t_generators(cfg, bound).generators;
    counts.push_back(gens.size());
    for (const auto& g : d2) fixtures = fixtures && std::find(gens.begin(), gens.end(), g) != gens.end();
  }
  const bool fixture_values = d1 == std::vector<MonoidElement>{MonoidElement{{0, 0, 0, 1}}} && d2.size() == 4;
  const bool increasing = counts[0] < counts[1] && counts[1] < counts[2];
  std::ostringstream d;
  d << "counts D=4,6,8: " << counts[0] << "," << counts[1] << "," << counts[2]
    << "; D=1/D=2 fixtures present=" << (fixtures && fixture_values ? "yes" : "no");
  return {increasing && fixtures && fixture_values, d.str()};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "concrete tower M=1, N=3, Z1=Z2", 1.0, concrete_tower},
      {2, "validity sum 3/4 and pair inequalities", 1.0, eq1_value_check},
      {3, "monoid membership equals x-exponent oracle", 60.0, monoid_equivalence},
      {4, "star condition equals y-expansion oracle", 60.0, ring_equivalence},
      {5, "Cond1 = Cond2 = Cond3 on sweep", 60.0, condition_equivalence},
      {6, "block formula matches stepwise trace", 60.0, block_formula},
      {7, "region inequality poles equal Z2 divisors", 1.0, region_pole_criterion},
      {8, "monomial bound lambda^n on lambda S'", 120.0, monomial_bound},
      {9, "escape sequence divergence inside S'", 10.0, escape_divergence},
      {10, "sandwich inclusions outside the box", 120.0, sandwich},
      {11, "generator counts strictly increase", 60.0, generator_growth},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_budget = seconds <= c.budget_seconds;
    const bool pass = o.pass && in_budget;
    if (!pass) ++failures;
    std::printf("[%s] criterion %2d: %s -- %s (%.2fs, budget %.0fs%s)\n", pass ? "PASS" : "FAIL", c.id,
                c.name.c_str(), o.detail.c_str(), seconds, c.budget_seconds, in_budget ? "" : ", over budget");
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
