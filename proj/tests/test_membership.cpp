#include <gtest/gtest.h>

#include <random>
#include <set>

#include "kuroda/expression.hpp"
#include "kuroda/membership.hpp"
#include "support/random_poly.hpp"

using namespace kuroda;

namespace {

SparsePolynomial P(int i) { return SparsePolynomial::variable(VarSystem::pi3, i - 1); }
SparsePolynomial one() { return SparsePolynomial::constant(VarSystem::pi3, make_rational(1)); }
SparsePolynomial vandermonde() { return (P(1) - P(2)) * (P(2) - P(3)) * (P(3) - P(1)); }

std::vector<MonoidElement> elems(std::initializer_list<std::array<std::int64_t, 4>> list) {
  std::vector<MonoidElement> out;
  for (const auto& n : list) out.push_back(MonoidElement{n});
  return out;
}

}  // namespace

TEST(Monoid, VectorCountUpToDegree) {
  EXPECT_EQ(vectors_up_to_degree(12).size(), 1820u);
  EXPECT_EQ(vectors_up_to_degree(0).size(), 1u);
  const auto v = vectors_up_to_degree(3);
  for (std::size_t i = 1; i < v.size(); ++i) EXPECT_TRUE(degree_lex_less(v[i - 1], v[i]));
}

TEST(Monoid, SimpleMembers) {
  const auto cfg = concrete_example();
  EXPECT_TRUE(monoid_member(MonoidElement{{0, 0, 0, 1}}, cfg));
  EXPECT_TRUE(monoid_member(MonoidElement{{0, 0, 0, 0}}, cfg));
  EXPECT_FALSE(monoid_member(MonoidElement{{1, 0, 0, 0}}, cfg));
  EXPECT_TRUE(monoid_member(MonoidElement{{1, 1, 0, 0}}, cfg));
  EXPECT_FALSE(monoid_member(MonoidElement{{-1, 1, 1, 0}}, cfg));
}

TEST(Monoid, OracleAgreesOnFixtures) {
  for (const auto& cfg : {concrete_example(), seven_halves_example()}) {
    for (const auto& v : vectors_up_to_degree(12)) EXPECT_EQ(monoid_member(v, cfg), monoid_member_oracle(v, cfg));
  }
}

TEST(Monoid, OracleAgreesOnRandomConfigs) {
  std::mt19937_64 rng(21);
  const auto vectors = vectors_up_to_degree(7);
  for (int t = 0; t < 40; ++t) {
    const auto cfg = test_support::random_valid_config(rng);
    for (const auto& v : vectors) ASSERT_EQ(monoid_member(v, cfg), monoid_member_oracle(v, cfg));
  }
}

TEST(Monoid, ClosedUnderAddition) {
  const auto cfg = seven_halves_example();
  std::vector<MonoidElement> members;
  for (const auto& v : vectors_up_to_degree(5))
    if (monoid_member(v, cfg)) members.push_back(v);
  for (const auto& a : members)
    for (const auto& b : members) EXPECT_TRUE(monoid_member(a + b, cfg));
}

TEST(Generators, SmallBounds) {
  const auto cfg = concrete_example();
  EXPECT_TRUE(enumerate_t_generators(cfg, 0).generators.empty());
  EXPECT_EQ(enumerate_t_generators(cfg, 1).generators, elems({{0, 0, 0, 1}}));
  EXPECT_EQ(enumerate_t_generators(cfg, 2).generators,
            elems({{0, 0, 0, 1}, {0, 1, 1, 0}, {1, 0, 1, 0}, {1, 1, 0, 0}}));
}

TEST(Generators, ConcreteCountsStabilise) {
  const auto cfg = concrete_example();
  const auto d4 = enumerate_t_generators(cfg, 4);
  const auto d6 = enumerate_t_generators(cfg, 6);
  EXPECT_EQ(d4.generators.size(), 17u);
  EXPECT_EQ(d6.generators, d4.generators);
  EXPECT_TRUE(d4.growing_at_bound);
  EXPECT_FALSE(d6.growing_at_bound);
  for (const auto& g : d6.generators) EXPECT_LE(g.degree(), 4);
}

TEST(Generators, GenerateEveryMember) {
  for (const auto& cfg : {concrete_example(), seven_halves_example()}) {
    const auto gens = enumerate_t_generators(cfg, 7).generators;
    for (const auto& v : vectors_up_to_degree(7)) {
      if (!monoid_member(v, cfg)) continue;
      EXPECT_TRUE(generated_by(v, gens));
    }
  }
}

TEST(Generators, AreIndecomposable) {
  const auto cfg = seven_halves_example();
  const auto gens = enumerate_t_generators(cfg, 6).generators;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    std::vector<MonoidElement> others = gens;
    others.erase(others.begin() + static_cast<std::ptrdiff_t>(i));
    EXPECT_FALSE(generated_by(gens[i], others));
    EXPECT_TRUE(monoid_member(gens[i], cfg));
  }
}

TEST(Ring, Fixtures) {
  const auto cfg = concrete_example();
  EXPECT_TRUE(in_r_star(one(), cfg));
  EXPECT_FALSE(in_r_star(P(1), cfg));
  EXPECT_FALSE(in_r_star(P(1) * P(2) * P(3), cfg));
  EXPECT_TRUE(in_r_star(vandermonde(), cfg));
  EXPECT_TRUE(in_r_oracle(one(), cfg));
  EXPECT_FALSE(in_r_oracle(P(1), cfg));
  EXPECT_FALSE(in_r_oracle(P(1) * P(2) * P(3), cfg));
  EXPECT_TRUE(in_r_oracle(vandermonde(), cfg));
}

TEST(Ring, StarReportsEveryViolation) {
  const auto cfg = concrete_example();
  const auto r = in_r_star_report(P(1), cfg);
  ASSERT_EQ(r.violations.size(), 1u);
  EXPECT_EQ(r.violations[0].axis, Axis::from_label(1));
  EXPECT_EQ(r.violations[0].triple, (std::array<std::int64_t, 3>{1, 0, 0}));
  const auto all = in_r_star_report(P(1) * P(2) * P(3), cfg);
  std::set<int> axes;
  for (const auto& v : all.violations) axes.insert(v.axis.label());
  EXPECT_EQ(axes, (std::set<int>{1, 2, 3}));
  EXPECT_FALSE(in_r_oracle_report(P(1), cfg).offending.empty());
}

TEST(Ring, StarMatchesOracleOnRandomPolynomials) {
  std::mt19937_64 rng(31);
  for (const auto& cfg : {concrete_example(), seven_halves_example()}) {
    for (int t = 0; t < 300; ++t) {
      const auto f = test_support::random_pi_polynomial(rng);
      ASSERT_EQ(in_r_star(f, cfg), in_r_oracle(f, cfg)) << format_polynomial(f);
    }
  }
}

TEST(Ring, StarMatchesOracleOnRandomConfigs) {
  std::mt19937_64 rng(37);
  for (int c = 0; c < 20; ++c) {
    const auto cfg = test_support::random_valid_config(rng);
    for (int t = 0; t < 50; ++t) {
      const auto f = test_support::random_pi_polynomial(rng, 6, 5);
      ASSERT_EQ(in_r_star(f, cfg), in_r_oracle(f, cfg)) << format_polynomial(f);
    }
  }
}

TEST(Ring, GradedDimensions) {
  const std::vector<std::size_t> expected = {1, 0, 0, 1, 3, 3, 4, 6, 9};
  for (const auto& cfg : {concrete_example(), seven_halves_example()}) {
    for (std::int64_t d = 0; d <= 8; ++d) {
      const auto basis = graded_ring_basis(cfg, d);
      EXPECT_EQ(basis.size(), expected[d]) << "degree " << d;
      for (const auto& b : basis) {
        EXPECT_TRUE(in_r_oracle(b, cfg));
        EXPECT_TRUE(in_r_star(b, cfg));
      }
    }
  }
}

TEST(Ring, VandermondeSpansDegreeThree) {
  const auto basis = graded_ring_basis(concrete_example(), 3);
  ASSERT_EQ(basis.size(), 1u);
  const auto v = vandermonde();
  const auto& b = basis[0];
  const auto lead = b.terms().begin()->first;
  EXPECT_EQ(b * v.coefficient(lead), v * b.coefficient(lead));
}

TEST(Ring, RingSamplesAreMembersAndPerturbationsAreNot) {
  const auto cfg = concrete_example();
  const test_support::RingSampler sampler(cfg, 6);
  std::mt19937_64 rng(41);
  for (int t = 0; t < 200; ++t) {
    const auto f = sampler.draw(rng);
    EXPECT_TRUE(in_r_oracle(f, cfg));
    EXPECT_TRUE(in_r_star(f, cfg));
    const auto g = f + P(1) * P(1);
    EXPECT_EQ(in_r_star(g, cfg), in_r_oracle(g, cfg));
    EXPECT_FALSE(in_r_oracle(g, cfg));
  }
}

TEST(Ring, ClosedUnderSumAndProduct) {
  const auto cfg = seven_halves_example();
  const test_support::RingSampler sampler(cfg, 5);
  std::mt19937_64 rng(43);
  for (int t = 0; t < 100; ++t) {
    const auto f = sampler.draw(rng);
    const auto g = sampler.draw(rng);
    EXPECT_TRUE(in_r_oracle(f + g, cfg));
    EXPECT_TRUE(in_r_oracle(f * g, cfg));
    EXPECT_TRUE(in_r_star(f * g, cfg));
  }
}
