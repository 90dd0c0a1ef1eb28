#ifndef KURODA_MEMBERSHIP_HPP
#define KURODA_MEMBERSHIP_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <set>
#include <vector>

#include "kuroda/config.hpp"
#include "kuroda/polynomial.hpp"

namespace kuroda {

/// Exponent vector n of a y-monomial y^n; entries are non-negative.
struct MonoidElement {
  std::array<std::int64_t, 4> n{};

  std::int64_t degree() const { return n[0] + n[1] + n[2] + n[3]; }
  ExponentVector as_exponents() const { return ExponentVector(VarSystem::y4, n); }

  friend MonoidElement operator+(const MonoidElement& a, const MonoidElement& b) {
    MonoidElement out;
    for (int i = 0; i < 4; ++i) out.n[i] = a.n[i] + b.n[i];
    return out;
  }
  friend bool operator==(const MonoidElement&, const MonoidElement&) = default;
  friend auto operator<=>(const MonoidElement&, const MonoidElement&) = default;
};

/// Sort key: total degree, then lexicographic.
inline bool degree_lex_less(const MonoidElement& a, const MonoidElement& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a.n < b.n;
}

/// delta_{i,i} n_i <= delta_{j,i} n_j + delta_{k,i} n_k for every {i,j,k} = {1,2,3}.
inline bool monoid_member(const MonoidElement& e, const KurodaConfig& cfg) {
  for (int i = 0; i < 4; ++i)
    if (e.n[i] < 0) return false;
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3;
    const int k = (i + 2) % 3;
    if (cfg.delta[i][i] * e.n[i] > cfg.delta[j][i] * e.n[j] + cfg.delta[k][i] * e.n[k]) return false;
  }
  return true;
}

/// Independent route: y^n is a polynomial in x iff its x-exponents are all >= 0.
inline bool monoid_member_oracle(const MonoidElement& e, const KurodaConfig& cfg) {
  for (int i = 0; i < 4; ++i)
    if (e.n[i] < 0) return false;
  const auto x = expand_y_to_x(e.as_exponents(), cfg);
  for (int j = 0; j < 4; ++j)
    if (x[j] < 0) return false;
  return true;
}

/// All vectors of Z_{>=0}^4 with total degree <= bound, in degree-lex order.
inline std::vector<MonoidElement> vectors_up_to_degree(std::int64_t bound) {
  std::vector<MonoidElement> out;
  for (std::int64_t a = 0; a <= bound; ++a)
    for (std::int64_t b = 0; a + b <= bound; ++b)
      for (std::int64_t c = 0; a + b + c <= bound; ++c)
        for (std::int64_t d = 0; a + b + c + d <= bound; ++d) out.push_back(MonoidElement{{a, b, c, d}});
  std::sort(out.begin(), out.end(), degree_lex_less);
  return out;
}

struct GeneratorList {
  std::int64_t degree_bound = 0;
  std::vector<MonoidElement> generators;  // degree-lex order
  std::int64_t complete_up_to = 0;
  /// True when a minimal generator of degree exactly `degree_bound` exists,
  /// i.e. the bound may be cutting the list short.
  bool growing_at_bound = false;
};

namespace detail {

/// Exhaustive search for a split n = a + b with a, b nonzero members of M.
template <class IsMember>
bool decomposable(const MonoidElement& n, IsMember&& is_member) {
  MonoidElement a;
  for (a.n[0] = 0; a.n[0] <= n.n[0]; ++a.n[0])
    for (a.n[1] = 0; a.n[1] <= n.n[1]; ++a.n[1])
      for (a.n[2] = 0; a.n[2] <= n.n[2]; ++a.n[2])
        for (a.n[3] = 0; a.n[3] <= n.n[3]; ++a.n[3]) {
          if (a.degree() == 0 || a == n) continue;
          MonoidElement b;
          for (int i = 0; i < 4; ++i) b.n[i] = n.n[i] - a.n[i];
          if (is_member(a) && is_member(b)) return true;
        }
  return false;
}

}  // namespace detail

/// Minimal generators (indecomposable nonzero elements) of M with degree <= bound.
inline GeneratorList enumerate_t_generators(const KurodaConfig& cfg, std::int64_t degree_bound) {
  GeneratorList list;
  list.degree_bound = degree_bound;
  list.complete_up_to = std::max<std::int64_t>(degree_bound, 0);
  if (degree_bound < 1) return list;

  std::set<MonoidElement> members;
  for (const auto& v : vectors_up_to_degree(degree_bound))
    if (v.degree() > 0 && monoid_member(v, cfg)) members.insert(v);
  const auto in_m = [&](const MonoidElement& v) { return members.count(v) > 0; };

  for (const auto& v : vectors_up_to_degree(degree_bound)) {
    if (!in_m(v)) continue;
    if (!detail::decomposable(v, in_m)) list.generators.push_back(v);
  }
  list.growing_at_bound = std::any_of(list.generators.begin(), list.generators.end(),
                                      [&](const MonoidElement& g) { return g.degree() == degree_bound; });
  return list;
}

namespace detail {

inline bool generated_by(const MonoidElement& n, const std::vector<MonoidElement>& generators,
                         std::set<MonoidElement>& failed) {
  if (n.degree() == 0) return true;
  if (failed.count(n)) return false;
  for (const auto& g : generators) {
    MonoidElement rest;
    bool fits = g.degree() > 0;
    for (int i = 0; i < 4 && fits; ++i) {
      rest.n[i] = n.n[i] - g.n[i];
      fits = rest.n[i] >= 0;
    }
    if (fits && generated_by(rest, generators, failed)) return true;
  }
  failed.insert(n);
  return false;
}

}  // namespace detail

/// True if `n` is a non-negative integer combination of `generators`.
inline bool generated_by(const MonoidElement& n, const std::vector<MonoidElement>& generators) {
  std::set<MonoidElement> failed;
  return detail::generated_by(n, generators, failed);
}

// ---------------------------------------------------------------------------
// Membership in R
// ---------------------------------------------------------------------------

struct StarViolation {
  Axis axis;
  std::array<std::int64_t, 3> triple{};
};

struct StarReport {
  bool holds = true;
  std::vector<StarViolation> violations;  // every violated triple on every axis
};

/// delta_{i,i} r1 <= d_i r3 for one support triple of axis i.
inline bool star_inequality(const std::array<std::int64_t, 3>& r, Axis axis, const KurodaConfig& cfg,
                            const DerivedConstants& constants) {
  const int i = axis.index();
  return cfg.delta[i][i] * r[0] <= constants.d[i] * r[2];
}

/// Combinatorial membership test over the three axis supports m_i(f).
inline StarReport in_r_star_report(const SparsePolynomial& f, const KurodaConfig& cfg) {
  const auto constants = derive_constants(cfg);
  StarReport report;
  for (Axis a : kAllAxes) {
    for (const auto& r : axis_support(f, a)) {
      if (!star_inequality(r, a, cfg, constants)) {
        report.holds = false;
        report.violations.push_back({a, r});
      }
    }
  }
  return report;
}

inline bool in_r_star(const SparsePolynomial& f, const KurodaConfig& cfg) { return in_r_star_report(f, cfg).holds; }

struct OracleReport {
  bool holds = true;
  std::vector<MonoidElement> offending;  // y-monomials of f whose x-exponents go negative
};

/// Brute-force route: expand f in y and test every monomial against the x-exponent oracle.
inline OracleReport in_r_oracle_report(const SparsePolynomial& f, const KurodaConfig& cfg) {
  OracleReport report;
  const auto expanded = expand_pi_to_y(f);
  for (const auto& [e, c] : expanded.terms()) {
    const MonoidElement m{e};
    if (!monoid_member_oracle(m, cfg)) {
      report.holds = false;
      report.offending.push_back(m);
    }
  }
  return report;
}

inline bool in_r_oracle(const SparsePolynomial& f, const KurodaConfig& cfg) { return in_r_oracle_report(f, cfg).holds; }

// ---------------------------------------------------------------------------
// Homogeneous pieces of R
// ---------------------------------------------------------------------------

namespace detail {

/// Reduced row echelon form in place; returns pivot columns.
inline std::vector<std::size_t> rref(std::vector<std::vector<Rational>>& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[sel], m[row]);
    const Rational inv = 1 / m[row][col];
    for (auto& v : m[row]) v *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      const Rational factor = m[r][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= factor * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace detail

/// Basis of the degree-`degree` homogeneous part of R = K[x] cap K[Pi], found
/// as the kernel of the map "coefficients of y-monomials outside M".
inline std::vector<SparsePolynomial> graded_ring_basis(const KurodaConfig& cfg, std::int64_t degree) {
  std::vector<Exponents> pi_monomials;
  for (std::int64_t a = degree; a >= 0; --a)
    for (std::int64_t b = degree - a; b >= 0; --b) pi_monomials.push_back({a, b, degree - a - b, 0});

  std::vector<SparsePolynomial> expansions;
  std::set<Exponents> bad;
  for (const auto& e : pi_monomials) {
    expansions.push_back(expand_pi_to_y(SparsePolynomial::monomial(VarSystem::pi3, e)));
    for (const auto& [ye, c] : expansions.back().terms())
      if (!monoid_member_oracle(MonoidElement{ye}, cfg)) bad.insert(ye);
  }

  const std::size_t cols = pi_monomials.size();
  std::vector<std::vector<Rational>> matrix;
  for (const auto& ye : bad) {
    std::vector<Rational> row(cols);
    for (std::size_t c = 0; c < cols; ++c) row[c] = expansions[c].coefficient(ye);
    matrix.push_back(std::move(row));
  }
  const auto pivots = detail::rref(matrix, cols);

  std::vector<SparsePolynomial> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    SparsePolynomial v(VarSystem::pi3);
    v.add_term(pi_monomials[free], Rational(1));
    for (std::size_t r = 0; r < pivots.size(); ++r) v.add_term(pi_monomials[pivots[r]], -matrix[r][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace kuroda

#endif  // KURODA_MEMBERSHIP_HPP
