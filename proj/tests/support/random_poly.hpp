#ifndef KURODA_TESTS_RANDOM_POLY_HPP
#define KURODA_TESTS_RANDOM_POLY_HPP

#include <random>
#include <vector>

#include "kuroda/membership.hpp"
#include "kuroda/polynomial.hpp"

namespace kuroda::test_support {

/// Random Pi-polynomial: 1..8 terms, total degree <= 6, numerators in
/// [-5,5] minus 0, denominators in {1,2,3}.
inline SparsePolynomial random_pi_polynomial(std::mt19937_64& rng, int max_terms = 8, int max_degree = 6) {
  std::uniform_int_distribution<int> term_count(1, max_terms);
  std::uniform_int_distribution<int> exponent(0, max_degree);
  std::uniform_int_distribution<int> numerator(1, 5);
  std::uniform_int_distribution<int> denominator(1, 3);
  std::bernoulli_distribution negative(0.5);
  SparsePolynomial f(VarSystem::pi3);
  const int terms = term_count(rng);
  for (int t = 0; t < terms; ++t) {
    Exponents e{};
    int left = max_degree;
    for (int i = 0; i < 3; ++i) {
      const int v = std::min(exponent(rng), left);
      e[i] = v;
      left -= v;
    }
    const int num = numerator(rng) * (negative(rng) ? -1 : 1);
    f.add_term(e, make_rational(num, denominator(rng)));
  }
  return f;
}

/// Random element of R: a combination of graded basis vectors, optionally
/// perturbed by one extra monomial.
class RingSampler {
 public:
  RingSampler(const KurodaConfig& cfg, int max_degree) {
    for (int d = 0; d <= max_degree; ++d)
      for (auto& b : graded_ring_basis(cfg, d)) basis_.push_back(std::move(b));
  }

  SparsePolynomial draw(std::mt19937_64& rng) const {
    std::uniform_int_distribution<std::size_t> pick(0, basis_.size() - 1);
    std::uniform_int_distribution<int> count(1, 4);
    std::uniform_int_distribution<int> coeff(-5, 5);
    SparsePolynomial f(VarSystem::pi3);
    const int n = count(rng);
    for (int k = 0; k < n; ++k) {
      const int c = coeff(rng);
      f += basis_[pick(rng)] * make_rational(c == 0 ? 1 : c, 1);
    }
    return f;
  }

  const std::vector<SparsePolynomial>& basis() const { return basis_; }

 private:
  std::vector<SparsePolynomial> basis_;
};

/// Random configuration with a valid sign pattern; may or may not satisfy
/// the validity inequality.
inline KurodaConfig random_config(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> diag(1, 4);
  std::uniform_int_distribution<std::int64_t> off(1, 12);
  std::uniform_int_distribution<std::int64_t> last(0, 3);
  std::uniform_int_distribution<std::int64_t> gamma(1, 3);
  KurodaConfig cfg;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) cfg.delta[i][j] = i == j ? diag(rng) : off(rng);
    cfg.delta[i][3] = last(rng);
  }
  cfg.gamma = gamma(rng);
  return cfg;
}

inline KurodaConfig random_valid_config(std::mt19937_64& rng) {
  while (true) {
    auto cfg = random_config(rng);
    if (is_valid(cfg)) return cfg;
  }
}

}  // namespace kuroda::test_support

#endif  // KURODA_TESTS_RANDOM_POLY_HPP
