#ifndef PENCIL_STRATA_HPP
#define PENCIL_STRATA_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pencil/errors.hpp"
#include "pencil/perm/orbits.hpp"
#include "pencil/semigroup.hpp"

namespace pencil {

/// A stratum of the degenerate fibre whose components are permuted by
/// monodromy. The divisor is the size of the single orbit.
struct StratumClass {
  std::string name;
  GroupAction action;
  std::int64_t divisor = 0;
};

/// Builds a stratum and fills its divisor; throws NotTransitive otherwise.
inline StratumClass analyze_stratum(std::string name, GroupAction action) {
  auto orbits = orbit_decomposition(action);
  if (!orbits.transitive())
    throw NotTransitive("stratum " + name + " splits into " +
                        std::to_string(orbits.orbits.size()) + " orbits");
  auto size = static_cast<std::int64_t>(orbits.orbits.front().size());
  return {std::move(name), std::move(action), size};
}

struct RealizedDegree {
  std::int64_t degree = 0;
  std::string provenance;
};

struct PencilModel {
  std::vector<StratumClass> strata;
  std::vector<RealizedDegree> realized;
  std::int64_t quotient_factor = 1;

  std::vector<std::int64_t> divisors() const {
    std::vector<std::int64_t> out;
    for (const auto &s : strata)
      out.push_back(s.divisor);
    return out;
  }

  /// Every realized degree must lie in the semigroup of the divisors.
  void validate() const {
    if (strata.empty())
      return;
    NumericalSemigroup s(divisors());
    for (const auto &r : realized)
      if (r.degree < 1 || !semigroup_contains(s, r.degree))
        throw BadInput("realized degree " + std::to_string(r.degree) +
                       " is not a combination of the stratum divisors");
  }
};

/// Hypersurface pencil: stratum X^i for i = 1..min(d, n) with S_d acting on
/// i-subsets of the fibre; a general line section realizes degree d.
inline PencilModel hypersurface_pencil_model(std::int64_t d, std::int64_t n) {
  if (d < 1 || n < 1)
    throw BadInput("hypersurface model needs d >= 1 and n >= 1");
  PencilModel m;
  for (std::int64_t i = 1; i <= std::min(d, n); ++i)
    m.strata.push_back(analyze_stratum(
        "X^" + std::to_string(i),
        induced_subset_action(static_cast<std::size_t>(d),
                              static_cast<std::size_t>(i))));
  m.realized.push_back({d, "intersection with a general line"});
  m.validate();
  return m;
}

inline PencilModel quotient_by_cover(const PencilModel &m, std::int64_t k) {
  if (k < 1)
    throw BadInput("cover degree must be positive");
  PencilModel out = m;
  for (auto &s : out.strata) {
    if (s.divisor % k != 0)
      throw NotDivisible("stratum " + s.name + " divisor " +
                         std::to_string(s.divisor) + " is not divisible by " +
                         std::to_string(k));
    s.divisor /= k;
  }
  out.quotient_factor *= k;
  return out;
}

/// K3-level model: strata Y^3, Y^4, Y^5 acted on by the wreath product.
inline PencilModel enriques_k3_model() {
  PencilModel m;
  m.strata.push_back(analyze_stratum("Y^3", cube_strata_action(0)));
  m.strata.push_back(analyze_stratum("Y^4", cube_strata_action(1)));
  m.strata.push_back(analyze_stratum("Y^5", cube_strata_action(2)));
  return m;
}

/// Enriques-level model: the K3 model divided by the double cover, plus the
/// multi-sections coming from the cube's vertices and faces.
inline PencilModel enriques_pencil_model() {
  PencilModel m = quotient_by_cover(enriques_k3_model(), 2);
  m.realized.push_back({4, "8 cube vertices (stratum Y^3) modulo the involution"});
  m.realized.push_back({3, "6 cube faces (stratum Y^5) modulo the involution"});
  m.validate();
  return m;
}

/// Divisibility bounds on minimal degree M and index I. The lower index
/// bound divides I; I divides the upper one.
struct IndexReport {
  std::vector<std::int64_t> divisors;
  std::vector<std::int64_t> realized;
  std::int64_t min_degree_lower = 0;
  std::int64_t min_degree_upper = 0;
  std::int64_t index_divisor_lower = 0;
  std::int64_t index_upper = 0;
  std::optional<std::int64_t> exact_min;
  std::optional<std::int64_t> exact_index;
};

inline IndexReport index_and_degree_report(const PencilModel &m) {
  if (m.strata.empty() || m.realized.empty())
    throw EmptyModel("model needs at least one stratum and one realized degree");
  IndexReport r;
  r.divisors = m.divisors();
  for (const auto &x : m.realized)
    r.realized.push_back(x.degree);
  r.min_degree_lower = *std::min_element(r.divisors.begin(), r.divisors.end());
  r.min_degree_upper = *std::min_element(r.realized.begin(), r.realized.end());
  for (auto x : r.divisors)
    r.index_divisor_lower = gcd_int(r.index_divisor_lower, x);
  for (auto x : r.realized)
    r.index_upper = gcd_int(r.index_upper, x);
  if (r.min_degree_lower == r.min_degree_upper)
    r.exact_min = r.min_degree_lower;
  if (r.index_divisor_lower == r.index_upper)
    r.exact_index = r.index_upper;
  return r;
}

} // namespace pencil

#endif // PENCIL_STRATA_HPP
