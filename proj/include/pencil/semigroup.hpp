#ifndef PENCIL_SEMIGROUP_HPP
#define PENCIL_SEMIGROUP_HPP

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "pencil/errors.hpp"
#include "pencil/exactalg/rational.hpp"

namespace pencil {

/// Additive submonoid of the nonnegative integers given by generators. The
/// generator multiset is kept as given for reporting.
class NumericalSemigroup {
public:
  explicit NumericalSemigroup(std::vector<std::int64_t> generators)
      : generators_(std::move(generators)) {
    if (generators_.empty())
      throw BadInput("semigroup needs at least one generator");
    for (auto g : generators_)
      if (g < 1)
        throw BadInput("semigroup generators must be positive");
  }

  const std::vector<std::int64_t> &generators() const { return generators_; }

  /// Sorted generators without repeats.
  std::vector<std::int64_t> distinct_generators() const {
    auto g = generators_;
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
    return g;
  }

  std::int64_t gcd() const {
    std::int64_t g = 0;
    for (auto x : generators_)
      g = gcd_int(g, x);
    return g;
  }

  std::int64_t min_positive() const {
    return *std::min_element(generators_.begin(), generators_.end());
  }

private:
  std::vector<std::int64_t> generators_;
};

/// S_{d,n}: generated by C(d, i) for i = 1, ..., min(d, n).
inline NumericalSemigroup sdn_generators(std::int64_t d, std::int64_t n) {
  if (d < 1 || n < 1)
    throw BadInput("S_{d,n} needs d >= 1 and n >= 1");
  std::vector<std::int64_t> gens;
  for (std::int64_t i = 1; i <= std::min(d, n); ++i)
    gens.push_back(binomial(d, i));
  return NumericalSemigroup(std::move(gens));
}

/// Membership by a coin-change reachability table after dividing out the
/// generator gcd.
inline bool semigroup_contains(const NumericalSemigroup &s, std::int64_t x) {
  if (x < 0)
    throw BadInput("semigroup membership query must be nonnegative");
  if (x == 0)
    return true;
  const std::int64_t g = s.gcd();
  if (x % g != 0)
    return false;
  const std::int64_t target = x / g;
  std::vector<std::int64_t> coins;
  for (auto c : s.distinct_generators())
    coins.push_back(c / g);
  std::vector<bool> reachable(static_cast<std::size_t>(target) + 1, false);
  reachable[0] = true;
  for (std::int64_t v = 1; v <= target; ++v)
    for (auto c : coins) {
      if (c > v)
        break;
      if (reachable[static_cast<std::size_t>(v - c)]) {
        reachable[static_cast<std::size_t>(v)] = true;
        break;
      }
    }
  return reachable[static_cast<std::size_t>(target)];
}

/// (smallest positive member, gcd of generators).
inline std::pair<std::int64_t, std::int64_t>
semigroup_min_and_gcd(const NumericalSemigroup &s) {
  return {s.min_positive(), s.gcd()};
}

} // namespace pencil

#endif // PENCIL_SEMIGROUP_HPP
