#ifndef PENCIL_CONSTRUCT_CURVE_MAP_HPP
#define PENCIL_CONSTRUCT_CURVE_MAP_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pencil/errors.hpp"
#include "pencil/exactalg/poly.hpp"

namespace pencil {

inline const std::vector<std::string> &source_vars() {
  static const std::vector<std::string> v{"S0", "S1"};
  return v;
}
inline const std::vector<std::string> &conic_vars() {
  static const std::vector<std::string> v{"T0", "T1"};
  return v;
}
inline const std::vector<std::string> &base_vars() {
  static const std::vector<std::string> v{"U0", "U1"};
  return v;
}

/// Coordinates X_{+,0..2}, X_{-,0..2} of V = V_+ (+) V_-.
inline const std::vector<std::string> &target_labels() {
  static const std::vector<std::string> v{"X+0", "X+1", "X+2",
                                          "X-0", "X-1", "X-2"};
  return v;
}

/// Eigenvalue of the involution on each coordinate of V.
inline const std::vector<int> &involution_signs() {
  static const std::vector<int> v{1, 1, 1, -1, -1, -1};
  return v;
}

/// Map P^1 -> P^k given by forms in two variables. Construction checks the
/// shape only; homogeneity is diagnosed by the checkers so that misprinted
/// vectors can still be loaded and reported on.
class ProjectiveCurveMap {
public:
  ProjectiveCurveMap(std::vector<RationalPoly> entries,
                     std::vector<std::string> labels)
      : entries_(std::move(entries)), labels_(std::move(labels)) {
    if (entries_.empty() || entries_.size() != labels_.size())
      throw BadInput("curve map needs one label per entry");
    bool all_zero = true;
    for (const auto &e : entries_) {
      if (e.vars().size() != 2 || e.vars() != entries_.front().vars())
        throw BadInput("curve map entries must share two source variables");
      all_zero = all_zero && e.is_zero();
    }
    if (all_zero)
      throw BadInput("curve map entries are all zero");
  }

  const std::vector<RationalPoly> &entries() const { return entries_; }
  const std::vector<std::string> &labels() const { return labels_; }
  const std::vector<std::string> &source() const { return entries_.front().vars(); }
  std::size_t size() const { return entries_.size(); }

  /// Shared total degree of all nonzero entries, if any.
  std::optional<std::uint32_t> common_degree() const {
    std::optional<std::uint32_t> d;
    for (const auto &e : entries_) {
      if (e.is_zero())
        continue;
      auto h = e.homogeneous_degree();
      if (!h || (d && *d != *h))
        return std::nullopt;
      d = h;
    }
    return d;
  }

  std::uint32_t require_common_degree() const {
    auto d = common_degree();
    if (!d)
      throw NotHomogeneous("curve map entries are not homogeneous of one degree");
    return *d;
  }

  /// Coordinates of the image of [s0, s1].
  std::vector<Cyclotomic> evaluate(const std::array<Cyclotomic, 2> &point) const {
    std::vector<Cyclotomic> out;
    for (const auto &e : entries_)
      out.push_back(to_cyclotomic(e).evaluate({point[0], point[1]}));
    return out;
  }

private:
  std::vector<RationalPoly> entries_;
  std::vector<std::string> labels_;
};

inline ProjectiveCurveMap parse_curve_map(const std::vector<std::string> &texts,
                                          std::vector<std::string> labels,
                                          const std::vector<std::string> &vars =
                                              source_vars()) {
  std::vector<RationalPoly> entries;
  for (const auto &t : texts)
    entries.push_back(parse_poly(t, vars));
  return ProjectiveCurveMap(std::move(entries), std::move(labels));
}

/// mu_m acting on source variables with `source_weights` (default: weight 1
/// on S1 only) and on target coordinates with `target_weights`.
struct WeightedTorusAction {
  int modulus = 6;
  std::vector<int> target_weights;
  std::array<int, 2> source_weights{0, 1};
};

struct EntryDiagnostic {
  std::size_t index = 0;
  std::string label;
  std::string polynomial;
  std::optional<std::uint32_t> degree;
  std::vector<int> residues; ///< distinct (term weight - target weight) mod m
};

struct EquivarianceResult {
  bool equivariant = false;
  std::optional<int> offset;
  std::string failure; ///< "", "NotHomogeneous", "WeightMismatch" or "DimensionMismatch"
  std::vector<EntryDiagnostic> entries;
};

inline int mod_positive(long long v, int m) {
  long long r = v % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

/// Equivariant iff one residue c satisfies weight(term) = w(entry) + c mod m
/// for every term of every entry, and all entries share one degree.
inline EquivarianceResult check_weighted_equivariance(const ProjectiveCurveMap &m,
                                                      const WeightedTorusAction &a) {
  EquivarianceResult r;
  if (a.modulus < 1)
    throw BadInput("torus action modulus must be positive");
  if (a.target_weights.size() != m.size()) {
    r.failure = "DimensionMismatch";
    return r;
  }
  std::set<int> all;
  std::set<std::uint32_t> degrees;
  bool homogeneous = true;
  for (std::size_t i = 0; i < m.size(); ++i) {
    const auto &p = m.entries()[i];
    EntryDiagnostic d;
    d.index = i;
    d.label = m.labels()[i];
    d.polynomial = p.str();
    d.degree = p.homogeneous_degree();
    if (!p.is_zero()) {
      if (d.degree)
        degrees.insert(*d.degree);
      else
        homogeneous = false;
    }
    std::set<int> res;
    for (const auto &[e, c] : p.terms()) {
      long long w = static_cast<long long>(e[0]) * a.source_weights[0] +
                    static_cast<long long>(e[1]) * a.source_weights[1];
      res.insert(mod_positive(w - a.target_weights[i], a.modulus));
    }
    d.residues.assign(res.begin(), res.end());
    all.insert(res.begin(), res.end());
    r.entries.push_back(std::move(d));
  }
  if (!homogeneous || degrees.size() > 1) {
    r.failure = "NotHomogeneous";
    return r;
  }
  if (all.size() != 1) {
    r.failure = "WeightMismatch";
    return r;
  }
  r.equivariant = true;
  r.offset = *all.begin();
  return r;
}

/// Lift of the involution of D: S1 -> -S1 in every entry.
inline ProjectiveCurveMap involution_conjugate(const ProjectiveCurveMap &m) {
  std::vector<RationalPoly> out;
  for (const auto &e : m.entries())
    out.push_back(e.scale_variable(1, Rational(-1)));
  return ProjectiveCurveMap(std::move(out), m.labels());
}

/// Composes with the involution of the target: coordinate i times signs[i].
inline ProjectiveCurveMap apply_target_signs(const ProjectiveCurveMap &m,
                                             const std::vector<int> &signs) {
  if (signs.size() != m.size())
    throw BadInput("sign vector length does not match the map");
  std::vector<RationalPoly> out;
  for (std::size_t i = 0; i < m.size(); ++i)
    out.push_back(Rational(signs[i]) * m.entries()[i]);
  return ProjectiveCurveMap(std::move(out), m.labels());
}

/// Drops entries equal to the one before them, with their labels.
inline std::vector<RationalPoly>
drop_repeated_entries(const std::vector<RationalPoly> &entries) {
  std::vector<RationalPoly> out;
  for (const auto &e : entries)
    if (out.empty() || !(out.back() == e))
      out.push_back(e);
  return out;
}

/// Degree after cancelling the common factor of all entries.
inline std::uint32_t normalized_map_degree(const ProjectiveCurveMap &m) {
  const auto n = m.require_common_degree();
  auto g = binary_form_gcd(m.entries());
  return n - *g.homogeneous_degree();
}

} // namespace pencil

#endif // PENCIL_CONSTRUCT_CURVE_MAP_HPP
