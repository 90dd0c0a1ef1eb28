#ifndef KURODA_CONFIG_HPP
#define KURODA_CONFIG_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "kuroda/rational.hpp"

namespace kuroda {

/// One of the three distinguished coordinate directions.  Stored 0-based;
/// reports and the command line use the 1-based label.
class Axis {
 public:
  constexpr Axis() = default;
  static constexpr Axis from_index(int index) {
    if (index < 0 || index > 2) throw InputError("axis index out of range");
    return Axis(index);
  }
  static constexpr Axis from_label(int label) {
    if (label < 1 || label > 3) throw InputError("axis must be 1, 2 or 3");
    return Axis(label - 1);
  }
  constexpr int index() const { return index_; }
  constexpr int label() const { return index_ + 1; }
  friend constexpr bool operator==(Axis, Axis) = default;

 private:
  constexpr explicit Axis(int index) : index_(index) {}
  int index_ = 0;
};

inline constexpr std::array<Axis, 3> kAllAxes = {Axis::from_index(0), Axis::from_index(1), Axis::from_index(2)};

/// The data (delta_1, delta_2, delta_3, gamma) of a Kuroda-type configuration.
///
/// `delta[i][j]` holds magnitudes: the diagonal entry of row i is the positive
/// number whose negation appears in delta_i.  `signed_entry` restores the sign.
struct KurodaConfig {
  std::array<std::array<std::int64_t, 4>, 3> delta{};
  std::int64_t gamma = 1;

  /// Builds a configuration from rows written with the negative diagonal
  /// entries, e.g. {{-1,3,3,0},{3,-1,3,0},{3,3,-1,0}}.
  static KurodaConfig from_signed_rows(const std::array<std::array<std::int64_t, 4>, 3>& rows,
                                       std::int64_t gamma) {
    KurodaConfig cfg;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 4; ++j) cfg.delta[i][j] = (i == j) ? -rows[i][j] : rows[i][j];
    }
    cfg.gamma = gamma;
    return cfg;
  }

  std::int64_t entry(int i, int j) const { return delta[i][j]; }
  std::int64_t signed_entry(int i, int j) const { return i == j ? -delta[i][j] : delta[i][j]; }
  std::array<std::array<std::int64_t, 4>, 3> signed_rows() const {
    std::array<std::array<std::int64_t, 4>, 3> rows{};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 4; ++j) rows[i][j] = signed_entry(i, j);
    return rows;
  }

  friend bool operator==(const KurodaConfig&, const KurodaConfig&) = default;
};

/// delta_i = (-1,3,3,0) up to permutation, gamma = 1.
inline KurodaConfig concrete_example() {
  return KurodaConfig::from_signed_rows({{{-1, 3, 3, 0}, {3, -1, 3, 0}, {3, 3, -1, 0}}}, 1);
}

/// Same shape with (-2,7,7,0); every Q_i equals 7/2.
inline KurodaConfig seven_halves_example() {
  return KurodaConfig::from_signed_rows({{{-2, 7, 7, 0}, {7, -2, 7, 0}, {7, 7, -2, 0}}}, 1);
}

struct DerivedConstants {
  std::array<std::int64_t, 3> d{};  // d_i = min_{j != i} delta_{j,i}
  std::array<Rational, 3> q;        // Q_i = d_i / delta_{i,i}
};

struct PairCheck {
  int i = 0;  // 1-based
  int j = 0;
  std::int64_t diagonal_product = 0;  // delta_{i,i} delta_{j,j}
  std::int64_t cross_product = 0;     // delta_{i,j} delta_{j,i}
  bool holds = false;
};

struct ValidationReport {
  bool sign_pattern_ok = false;
  std::vector<std::string> sign_violations;
  std::optional<Rational> eq1_value;
  bool valid = false;
  std::optional<std::array<std::int64_t, 3>> d;
  std::vector<PairCheck> pair_checks;
  bool pair_consequence_holds = false;
};

namespace detail {

inline std::int64_t min_other_column(const KurodaConfig& cfg, int i) {
  std::int64_t best = 0;
  bool first = true;
  for (int j = 0; j < 3; ++j) {
    if (j == i) continue;
    if (first || cfg.delta[j][i] < best) best = cfg.delta[j][i];
    first = false;
  }
  return best;
}

}  // namespace detail

inline std::vector<std::string> sign_pattern_violations(const KurodaConfig& cfg) {
  std::vector<std::string> out;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 4; ++j) {
      const auto v = cfg.delta[i][j];
      const std::string where = "delta_" + std::to_string(i + 1) + "," + std::to_string(j + 1);
      if (i == j && v < 1) {
        out.push_back(where + " must appear as a negative entry (magnitude >= 1)");
      } else if (j < 3 && i != j && v < 1) {
        out.push_back(where + " must be >= 1");
      } else if (j == 3 && v < 0) {
        out.push_back(where + " must be >= 0");
      }
    }
  }
  if (cfg.gamma < 1) out.push_back("gamma must be >= 1");
  return out;
}

inline bool sign_pattern_ok(const KurodaConfig& cfg) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 4; ++j) {
      const auto v = cfg.delta[i][j];
      if ((j < 3 && v < 1) || (j == 3 && v < 0)) return false;
    }
  return cfg.gamma >= 1;
}

/// Exact d_i and Q_i.  Requires a valid sign pattern.
inline DerivedConstants derive_constants(const KurodaConfig& cfg) {
  if (!sign_pattern_ok(cfg)) throw InputError("configuration violates the sign pattern");
  DerivedConstants out;
  for (int i = 0; i < 3; ++i) {
    out.d[i] = detail::min_other_column(cfg, i);
    out.q[i] = make_rational(out.d[i], cfg.delta[i][i]);
  }
  return out;
}

/// Left-hand side of the non-finite-generation condition:
/// sum_i delta_{i,i} / (delta_{i,i} + d_i).
inline Rational eq1_value(const KurodaConfig& cfg) {
  Rational sum = 0;
  for (int i = 0; i < 3; ++i) {
    const auto di = detail::min_other_column(cfg, i);
    sum += make_rational(cfg.delta[i][i], cfg.delta[i][i] + di);
  }
  return sum;
}

inline ValidationReport validate(const KurodaConfig& cfg) {
  ValidationReport report;
  report.sign_violations = sign_pattern_violations(cfg);
  report.sign_pattern_ok = report.sign_violations.empty();
  if (!report.sign_pattern_ok) return report;

  report.eq1_value = eq1_value(cfg);
  report.valid = *report.eq1_value < 1;
  report.d = derive_constants(cfg).d;

  report.pair_consequence_holds = true;
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      PairCheck pc;
      pc.i = i + 1;
      pc.j = j + 1;
      pc.diagonal_product = cfg.delta[i][i] * cfg.delta[j][j];
      pc.cross_product = cfg.delta[i][j] * cfg.delta[j][i];
      pc.holds = pc.diagonal_product < pc.cross_product;
      report.pair_consequence_holds = report.pair_consequence_holds && pc.holds;
      report.pair_checks.push_back(pc);
    }
  }
  return report;
}

inline bool is_valid(const KurodaConfig& cfg) { return validate(cfg).valid; }

// ---------------------------------------------------------------------------
// Continued-fraction tower data
// ---------------------------------------------------------------------------

/// Inclusive index range [first, last].
struct Block {
  int first = 0;
  int last = 0;
  int size() const { return last - first + 1; }
  bool contains(int n) const { return first <= n && n <= last; }
  friend bool operator==(const Block&, const Block&) = default;
};

/// Per-axis data of the blowup tower: the partial quotients q_{i,m} of Q_i,
/// the block partition I_{i,1..M} of {0,...,N} and the index sets J_1, J_2.
struct AxisTower {
  Axis axis;
  Rational q_value;
  std::vector<std::int64_t> q;  // q_{i,1..M}
  int block_count = 0;          // M_i
  int total = 0;                // N_i
  std::vector<Block> blocks;    // I_{i,1..M}, blocks[m-1]
  std::vector<int> j1;          // {0,...,N-1}
  std::vector<int> j2;          // odd-m blocks minus {N}

  /// k(n): the 1-based block containing n; k(-1) = 0 via the sentinel I_{i,0} = {-1}.
  int block_index(int n) const {
    if (n == -1) return 0;
    if (n < 0 || n > total) throw InputError("tower index " + std::to_string(n) + " out of range");
    for (std::size_t m = 0; m < blocks.size(); ++m)
      if (blocks[m].contains(n)) return static_cast<int>(m) + 1;
    throw std::logic_error("blocks do not cover the tower");
  }

  /// l_n = max I_{i,k(n)-1}, defined for 0 <= n <= N-1.
  int prev_block_max(int n) const {
    if (n < 0 || n > total - 1) throw InputError("l_n requires 0 <= n <= N-1");
    const int k = block_index(n);
    return k == 1 ? -1 : blocks[k - 2].last;
  }

  /// nu(m) = max I_{i,m} for m >= 1, nu(0) = -1.
  int block_end(int m) const {
    if (m == 0) return -1;
    if (m < 1 || m > block_count) throw InputError("block number out of range");
    return blocks[m - 1].last;
  }

  bool in_j1(int n) const { return std::binary_search(j1.begin(), j1.end(), n); }
  bool in_j2(int n) const { return std::binary_search(j2.begin(), j2.end(), n); }
};

struct EuclidTower {
  std::array<AxisTower, 3> axes;
  const AxisTower& operator[](Axis a) const { return axes[a.index()]; }
};

/// Partial quotients of a positive rational: [q_1; q_2, ..., q_M].
inline std::vector<std::int64_t> continued_fraction(const Rational& value) {
  if (value <= 0) throw InputError("continued fraction requires a positive rational");
  std::vector<std::int64_t> terms;
  Integer num = boost::multiprecision::numerator(value);
  Integer den = boost::multiprecision::denominator(value);
  while (den != 0) {
    const Integer whole = num / den;
    terms.push_back(whole.convert_to<std::int64_t>());
    Integer rem = num - whole * den;
    num = std::move(den);
    den = std::move(rem);
  }
  return terms;
}

/// Evaluates q_1 + 1/(q_2 + 1/(... + 1/q_M)).
inline Rational evaluate_continued_fraction(const std::vector<std::int64_t>& terms) {
  if (terms.empty()) throw InputError("empty continued fraction");
  Rational acc = Rational(Integer(terms.back()));
  for (auto it = terms.rbegin() + 1; it != terms.rend(); ++it) acc = Rational(Integer(*it)) + 1 / acc;
  return acc;
}

inline AxisTower axis_tower(Axis axis, const Rational& q_value) {
  AxisTower t;
  t.axis = axis;
  t.q_value = q_value;
  t.q = continued_fraction(q_value);
  t.block_count = static_cast<int>(t.q.size());
  int next = 0;
  for (int m = 0; m < t.block_count; ++m) {
    const int size = static_cast<int>(t.q[m]) + (m == 0 ? 1 : 0);
    t.blocks.push_back(Block{next, next + size - 1});
    next += size;
  }
  t.total = next - 1;
  for (int n = 0; n < t.total; ++n) t.j1.push_back(n);
  for (int m = 0; m < t.block_count; m += 2) {  // m is 0-based, so odd 1-based blocks
    for (int n = t.blocks[m].first; n <= t.blocks[m].last; ++n)
      if (n != t.total) t.j2.push_back(n);
  }
  return t;
}

inline EuclidTower euclid_tower(const KurodaConfig& cfg) {
  const auto constants = derive_constants(cfg);
  EuclidTower tower;
  for (Axis a : kAllAxes) tower.axes[a.index()] = axis_tower(a, constants.q[a.index()]);
  return tower;
}

// ---------------------------------------------------------------------------
// JSON config files
// ---------------------------------------------------------------------------

/// Parses {"delta": [[..4 ints..] x3], "gamma": int}, diagonal entries negative.
inline KurodaConfig config_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw InputError("config must be a JSON object");
  if (!doc.contains("delta") || !doc.contains("gamma")) throw InputError("config needs \"delta\" and \"gamma\"");
  const auto& rows = doc.at("delta");
  if (!rows.is_array() || rows.size() != 3) throw InputError("\"delta\" must be an array of three rows");
  std::array<std::array<std::int64_t, 4>, 3> signed_rows{};
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& row = rows[i];
    if (!row.is_array() || row.size() != 4) throw InputError("each delta row must have four integers");
    for (std::size_t j = 0; j < 4; ++j) {
      if (!row[j].is_number_integer()) throw InputError("delta entries must be integers");
      signed_rows[i][j] = row[j].get<std::int64_t>();
    }
  }
  if (!doc.at("gamma").is_number_integer()) throw InputError("\"gamma\" must be an integer");
  return KurodaConfig::from_signed_rows(signed_rows, doc.at("gamma").get<std::int64_t>());
}

inline nlohmann::json config_to_json(const KurodaConfig& cfg) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : cfg.signed_rows()) rows.push_back(row);
  return {{"delta", rows}, {"gamma", cfg.gamma}};
}

inline KurodaConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open config file '" + path + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("config '" + path + "' is not valid JSON: " + e.what());
  }
  return config_from_json(doc);
}

}  // namespace kuroda

#endif  // KURODA_CONFIG_HPP
