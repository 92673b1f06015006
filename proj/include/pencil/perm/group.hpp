#ifndef PENCIL_PERM_GROUP_HPP
#define PENCIL_PERM_GROUP_HPP

#include <cstddef>
#include <deque>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "pencil/errors.hpp"
#include "pencil/perm/permutation.hpp"

namespace pencil {

inline constexpr std::size_t kDefaultEnumerationCap = 1'000'000;

/// Permutation group given by generators. Elements are only materialized on
/// request, through `enumerate_group`.
class PermGroup {
public:
  PermGroup(std::size_t degree, std::vector<Permutation> generators,
            std::string name = {})
      : degree_(degree), generators_(std::move(generators)),
        name_(std::move(name)) {
    for (const auto &g : generators_)
      if (g.degree() != degree_)
        throw BadInput("generator " + g.str() + " does not have degree " +
                       std::to_string(degree_));
  }

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation> &generators() const { return generators_; }
  const std::string &name() const { return name_; }

private:
  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::string name_;
};

/// Breadth-first closure of the generators starting from the identity.
/// Elements come out in discovery order. Throws CapExceeded as soon as more
/// than `cap` elements are found.
inline std::vector<Permutation>
enumerate_group(const PermGroup &g, std::size_t cap = kDefaultEnumerationCap) {
  std::vector<Permutation> elements{Permutation::identity(g.degree())};
  std::set<Permutation> seen{elements.front()};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto &gen : g.generators()) {
      Permutation next = gen * elements[head];
      if (seen.insert(next).second) {
        if (elements.size() >= cap)
          throw CapExceeded("group " + g.name() + " has more than " +
                            std::to_string(cap) + " elements");
        elements.push_back(std::move(next));
      }
    }
  }
  return elements;
}

struct SymmetricKind {
  std::size_t d;
};
struct WreathKind {};
using GroupKind = std::variant<SymmetricKind, WreathKind>;

/// Point (p, q) of the wreath action, p in {1,2,3}, q in {1,2}.
inline Permutation::Point wreath_point(unsigned p, unsigned q) {
  return static_cast<Permutation::Point>(2 * (p - 1) + (q - 1));
}

/// symmetric(d): generators (0 1) and (0 1 ... d-1).
/// wreath_3_2: (S_2)^3 x| S_3 on the six points (p, q); generators are the
/// three in-block swaps, the block transposition 1<->2 and the block 3-cycle.
inline PermGroup standard_group(const GroupKind &kind) {
  if (const auto *s = std::get_if<SymmetricKind>(&kind)) {
    if (s->d < 1)
      throw BadInput("symmetric group needs d >= 1");
    const std::size_t d = s->d;
    std::vector<Permutation> gens;
    if (d >= 2) {
      gens.push_back(Permutation::from_cycles(d, {{0, 1}}));
      if (d >= 3) {
        std::vector<Permutation::Point> cycle(d);
        for (std::size_t i = 0; i < d; ++i)
          cycle[i] = static_cast<Permutation::Point>(i);
        gens.push_back(Permutation::from_cycles(d, {cycle}));
      }
    }
    return PermGroup(d, std::move(gens), "S" + std::to_string(d));
  }
  std::vector<Permutation> gens;
  for (unsigned p = 1; p <= 3; ++p)
    gens.push_back(Permutation::from_cycles(6, {{wreath_point(p, 1), wreath_point(p, 2)}}));
  gens.push_back(Permutation::from_cycles(
      6, {{wreath_point(1, 1), wreath_point(2, 1)},
          {wreath_point(1, 2), wreath_point(2, 2)}}));
  gens.push_back(Permutation::from_cycles(
      6, {{wreath_point(1, 1), wreath_point(2, 1), wreath_point(3, 1)},
          {wreath_point(1, 2), wreath_point(2, 2), wreath_point(3, 2)}}));
  return PermGroup(6, std::move(gens), "W3,2");
}

inline PermGroup symmetric_group(std::size_t d) {
  return standard_group(SymmetricKind{d});
}
inline PermGroup wreath_3_2() { return standard_group(WreathKind{}); }

} // namespace pencil

#endif // PENCIL_PERM_GROUP_HPP
