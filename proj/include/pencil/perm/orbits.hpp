#ifndef PENCIL_PERM_ORBITS_HPP
#define PENCIL_PERM_ORBITS_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "pencil/perm/action.hpp"

namespace pencil {

/// Disjoint orbits, each sorted ascending, ordered by smallest point.
struct OrbitDecomposition {
  std::vector<std::vector<std::size_t>> orbits;

  bool transitive() const { return orbits.size() == 1; }

  std::vector<std::size_t> sizes() const {
    std::vector<std::size_t> s;
    for (const auto &o : orbits)
      s.push_back(o.size());
    return s;
  }
};

namespace detail {

class UnionFind {
public:
  explicit UnionFind(std::size_t n) : parent_(n), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b)
      return;
    if (rank_[a] < rank_[b])
      std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b])
      ++rank_[a];
  }

private:
  std::vector<std::size_t> parent_;
  std::vector<unsigned> rank_;
};

} // namespace detail

/// Orbits of the generated group: union every point with its image under
/// every generator.
inline OrbitDecomposition orbit_decomposition(const GroupAction &a) {
  detail::UnionFind uf(a.size());
  for (const auto &row : a.generator_images())
    for (std::size_t i = 0; i < row.size(); ++i)
      uf.unite(i, row[i]);
  std::map<std::size_t, std::vector<std::size_t>> by_root;
  for (std::size_t i = 0; i < a.size(); ++i)
    by_root[uf.find(i)].push_back(i);
  OrbitDecomposition out;
  for (auto &[root, members] : by_root)
    out.orbits.push_back(std::move(members));
  std::sort(out.orbits.begin(), out.orbits.end());
  return out;
}

/// Orbits rendered with point labels, each orbit's labels sorted.
inline std::vector<std::vector<std::string>>
orbit_labels(const GroupAction &a, const OrbitDecomposition &d) {
  std::vector<std::vector<std::string>> out;
  for (const auto &orbit : d.orbits) {
    std::vector<std::string> labels;
    for (auto i : orbit)
      labels.push_back(a.labels()[i]);
    std::sort(labels.begin(), labels.end());
    out.push_back(std::move(labels));
  }
  return out;
}

} // namespace pencil

#endif // PENCIL_PERM_ORBITS_HPP
