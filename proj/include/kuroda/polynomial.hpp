#ifndef KURODA_POLYNOMIAL_HPP
#define KURODA_POLYNOMIAL_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "kuroda/config.hpp"
#include "kuroda/rational.hpp"

namespace kuroda {

/// Variable systems:
///   x4     x_1..x_4 (Laurent exponents allowed)
///   y4     y_1..y_4 with y_i = x^{delta_i}, y_4 = x_4^gamma
///   pi3    Pi_1..Pi_3 with Pi_i = y_i - y_4
///   axis3  the per-axis basis (Pi_i, Pi_j, Pi_j - Pi_k)
///   chart3 chart monomials alpha^{r2} beta^{r3} gamma^{-r1} (Laurent)
enum class VarSystem { x4, y4, pi3, axis3, chart3 };

constexpr int arity(VarSystem s) { return (s == VarSystem::x4 || s == VarSystem::y4) ? 4 : 3; }
constexpr bool allows_negative(VarSystem s) { return s == VarSystem::x4 || s == VarSystem::chart3; }

inline const char* system_name(VarSystem s) {
  switch (s) {
    case VarSystem::x4: return "X4";
    case VarSystem::y4: return "Y4";
    case VarSystem::pi3: return "PI3";
    case VarSystem::axis3: return "AXIS3";
    case VarSystem::chart3: return "CHART3";
  }
  return "?";
}

/// Exponent tuple; slots beyond the system arity stay zero so that the
/// lexicographic order on the array is the canonical term order.
using Exponents = std::array<std::int64_t, 4>;

struct ExponentVector {
  VarSystem system = VarSystem::y4;
  Exponents exponents{};

  ExponentVector() = default;
  ExponentVector(VarSystem s, const Exponents& e) : system(s), exponents(e) { check(); }

  std::int64_t operator[](int i) const { return exponents[i]; }
  std::int64_t total_degree() const {
    std::int64_t sum = 0;
    for (int i = 0; i < arity(system); ++i) sum += exponents[i];
    return sum;
  }
  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;

 private:
  void check() const {
    for (int i = 0; i < 4; ++i) {
      if (i >= arity(system) && exponents[i] != 0)
        throw std::invalid_argument(std::string("exponent slot beyond arity of ") + system_name(system));
      if (exponents[i] < 0 && !allows_negative(system))
        throw std::invalid_argument(std::string("negative exponent in ") + system_name(system));
    }
  }
};

class SystemMismatch : public std::invalid_argument {
 public:
  SystemMismatch(VarSystem a, VarSystem b)
      : std::invalid_argument(std::string("variable system mismatch: ") + system_name(a) + " vs " + system_name(b)) {}
};

/// Sparse (Laurent) polynomial with exact rational coefficients.  Zero
/// coefficients are never stored, so equal polynomials have equal term maps.
class SparsePolynomial {
 public:
  using TermMap = std::map<Exponents, Rational>;

  explicit SparsePolynomial(VarSystem system = VarSystem::pi3) : system_(system) {}

  static SparsePolynomial constant(VarSystem system, const Rational& c) {
    SparsePolynomial p(system);
    p.add_term(Exponents{}, c);
    return p;
  }
  static SparsePolynomial variable(VarSystem system, int index) {
    if (index < 0 || index >= arity(system)) throw std::invalid_argument("variable index out of range");
    Exponents e{};
    e[index] = 1;
    return monomial(system, e, Rational(1));
  }
  static SparsePolynomial monomial(VarSystem system, const Exponents& e, const Rational& c = Rational(1)) {
    SparsePolynomial p(system);
    p.add_term(ExponentVector(system, e).exponents, c);
    return p;
  }

  VarSystem system() const { return system_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{}); }

  Rational coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// Highest total degree among the terms; -1 for the zero polynomial.
  std::int64_t degree() const {
    std::int64_t best = -1;
    for (const auto& [e, c] : terms_) best = std::max(best, ExponentVector(system_, e).total_degree());
    return best;
  }

  void add_term(const Exponents& e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  SparsePolynomial& operator+=(const SparsePolynomial& o) {
    require_same(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  SparsePolynomial& operator-=(const SparsePolynomial& o) {
    require_same(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  SparsePolynomial& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend SparsePolynomial operator+(SparsePolynomial a, const SparsePolynomial& b) { return a += b; }
  friend SparsePolynomial operator-(SparsePolynomial a, const SparsePolynomial& b) { return a -= b; }
  friend SparsePolynomial operator-(SparsePolynomial a) {
    for (auto& [e, c] : a.terms_) c = -c;
    return a;
  }
  friend SparsePolynomial operator*(SparsePolynomial a, const Rational& s) { return a *= s; }
  friend SparsePolynomial operator*(const Rational& s, SparsePolynomial a) { return a *= s; }

  friend SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b) {
    a.require_same(b);
    SparsePolynomial out(a.system_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e{};
        for (int i = 0; i < 4; ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, ca * cb);
      }
    }
    return out;
  }
  SparsePolynomial& operator*=(const SparsePolynomial& o) { return *this = *this * o; }

  friend bool operator==(const SparsePolynomial& a, const SparsePolynomial& b) {
    return a.system_ == b.system_ && a.terms_ == b.terms_;
  }

 private:
  void require_same(const SparsePolynomial& o) const {
    if (system_ != o.system_) throw SystemMismatch(system_, o.system_);
  }

  VarSystem system_;
  TermMap terms_;
};

inline SparsePolynomial add(const SparsePolynomial& p, const SparsePolynomial& q) { return p + q; }
inline SparsePolynomial mul(const SparsePolynomial& p, const SparsePolynomial& q) { return p * q; }

/// p^k by repeated squaring; pow(p, 0) is the constant 1.
inline SparsePolynomial pow(const SparsePolynomial& p, std::int64_t k) {
  if (k < 0) throw std::invalid_argument("negative power");
  SparsePolynomial result = SparsePolynomial::constant(p.system(), Rational(1));
  SparsePolynomial base = p;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

/// Replaces variable i of f by images[i] (all images in one target system).
/// Only non-negative exponents can be substituted.
inline SparsePolynomial substitute(const SparsePolynomial& f, std::span<const SparsePolynomial> images,
                                   VarSystem target) {
  const int n = arity(f.system());
  if (static_cast<int>(images.size()) != n) throw std::invalid_argument("substitute: wrong number of images");
  for (const auto& img : images)
    if (img.system() != target) throw SystemMismatch(img.system(), target);

  std::vector<std::vector<SparsePolynomial>> powers(n);
  for (int i = 0; i < n; ++i) powers[i].push_back(SparsePolynomial::constant(target, Rational(1)));
  auto power_of = [&](int i, std::int64_t k) -> const SparsePolynomial& {
    if (k < 0) throw std::invalid_argument("substitute: negative exponent");
    auto& cache = powers[i];
    while (static_cast<std::int64_t>(cache.size()) <= k) cache.push_back(cache.back() * images[i]);
    return cache[k];
  };

  SparsePolynomial out(target);
  for (const auto& [e, c] : f.terms()) {
    SparsePolynomial term = SparsePolynomial::constant(target, c);
    for (int i = 0; i < n; ++i)
      if (e[i] != 0) term *= power_of(i, e[i]);
    out += term;
  }
  return out;
}

/// Pi_i -> y_i - y_4.
inline SparsePolynomial expand_pi_to_y(const SparsePolynomial& f) {
  if (f.system() != VarSystem::pi3) throw SystemMismatch(f.system(), VarSystem::pi3);
  const auto y4 = SparsePolynomial::variable(VarSystem::y4, 3);
  const std::array<SparsePolynomial, 3> images = {
      SparsePolynomial::variable(VarSystem::y4, 0) - y4,
      SparsePolynomial::variable(VarSystem::y4, 1) - y4,
      SparsePolynomial::variable(VarSystem::y4, 2) - y4,
  };
  return substitute(f, images, VarSystem::y4);
}

/// Exponent vector of y^n written in the x variables:
/// n_1 delta_1 + n_2 delta_2 + n_3 delta_3 + n_4 gamma e_4 (diagonal signs applied).
inline ExponentVector expand_y_to_x(const ExponentVector& n, const KurodaConfig& cfg) {
  if (n.system != VarSystem::y4) throw SystemMismatch(n.system, VarSystem::y4);
  Exponents x{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 4; ++j) x[j] += n[i] * cfg.signed_entry(i, j);
  x[3] += n[3] * cfg.gamma;
  return ExponentVector(VarSystem::x4, x);
}

// ---------------------------------------------------------------------------
// Per-axis coordinates
// ---------------------------------------------------------------------------

/// The ordered basis (Pi_lead, Pi_partner, Pi_partner - Pi_other) for an axis:
/// axis 1 -> (Pi1, Pi2, Pi2 - Pi3), axis 2 -> (Pi2, Pi1, Pi1 - Pi3),
/// axis 3 -> (Pi3, Pi1, Pi1 - Pi2).
struct AxisBasis {
  Axis axis;
  int lead = 0;
  int partner = 0;
  int other = 0;

  static AxisBasis of(Axis a) {
    switch (a.index()) {
      case 0: return AxisBasis{a, 0, 1, 2};
      case 1: return AxisBasis{a, 1, 0, 2};
      default: return AxisBasis{a, 2, 0, 1};
    }
  }

  /// Basis elements as Pi-polynomials (u_1, u_2, u_3).
  std::array<SparsePolynomial, 3> elements() const {
    const auto p = [](int i) { return SparsePolynomial::variable(VarSystem::pi3, i); };
    return {p(lead), p(partner), p(partner) - p(other)};
  }
};

/// Rewrites f in the axis basis.  The support of the result is m_i(f); the
/// exponent order is (r1, r2, r3) for the three basis elements.
inline SparsePolynomial reexpress_for_axis(const SparsePolynomial& f, Axis axis) {
  if (f.system() != VarSystem::pi3) throw SystemMismatch(f.system(), VarSystem::pi3);
  const auto basis = AxisBasis::of(axis);
  const auto u = [](int i) { return SparsePolynomial::variable(VarSystem::axis3, i); };
  // Pi_lead = u1, Pi_partner = u2, Pi_other = u2 - u3.
  std::array<SparsePolynomial, 3> images{SparsePolynomial(VarSystem::axis3), SparsePolynomial(VarSystem::axis3),
                                         SparsePolynomial(VarSystem::axis3)};
  images[basis.lead] = u(0);
  images[basis.partner] = u(1);
  images[basis.other] = u(1) - u(2);
  return substitute(f, images, VarSystem::axis3);
}

/// Inverse of reexpress_for_axis.
inline SparsePolynomial axis_to_pi(const SparsePolynomial& g, Axis axis) {
  if (g.system() != VarSystem::axis3) throw SystemMismatch(g.system(), VarSystem::axis3);
  const auto elems = AxisBasis::of(axis).elements();
  return substitute(g, elems, VarSystem::pi3);
}

/// m_i(f) as a list of (r1, r2, r3) triples in canonical order.
inline std::vector<std::array<std::int64_t, 3>> axis_support(const SparsePolynomial& f, Axis axis) {
  std::vector<std::array<std::int64_t, 3>> out;
  const auto g = reexpress_for_axis(f, axis);
  for (const auto& [e, c] : g.terms()) out.push_back({e[0], e[1], e[2]});
  return out;
}

// ---------------------------------------------------------------------------
// Floating evaluation
// ---------------------------------------------------------------------------

/// Value of a single monomial; nullopt when a zero coordinate carries a
/// negative exponent (pole at the point).
inline std::optional<double> evaluate_monomial(const Exponents& e, std::span<const double> point, int n) {
  double value = 1.0;
  for (int i = 0; i < n; ++i) {
    if (e[i] == 0) continue;
    if (e[i] < 0 && point[i] == 0.0) return std::nullopt;
    value *= std::pow(point[i], static_cast<double>(e[i]));
  }
  return value;
}

/// Double-precision evaluation of f at `point`; nullopt signals a pole at the point.
inline std::optional<double> evaluate_numeric(const SparsePolynomial& f, std::span<const double> point) {
  const int n = arity(f.system());
  if (static_cast<int>(point.size()) != n) throw std::invalid_argument("evaluate_numeric: point arity mismatch");
  double sum = 0.0;
  for (const auto& [e, c] : f.terms()) {
    const auto m = evaluate_monomial(e, point, n);
    if (!m) return std::nullopt;
    sum += to_double(c) * *m;
  }
  return sum;
}

}  // namespace kuroda

#endif  // KURODA_POLYNOMIAL_HPP
