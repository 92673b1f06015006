#ifndef PENCIL_PERM_ACTION_HPP
#define PENCIL_PERM_ACTION_HPP

#include <algorithm>
#include <array>
#include <map>
#include <string>
#include <vector>

#include "pencil/errors.hpp"
#include "pencil/perm/group.hpp"

namespace pencil {

/// Action of a generated group on a labelled finite set. Row g of
/// generator_images gives the image index of every point under generator g.
class GroupAction {
public:
  GroupAction(PermGroup group, std::vector<std::string> labels,
              std::vector<std::vector<std::size_t>> generator_images)
      : group_(std::move(group)), labels_(std::move(labels)),
        images_(std::move(generator_images)) {
    if (images_.size() != group_.generators().size())
      throw BadInput("action needs one image row per generator");
    for (const auto &row : images_) {
      if (row.size() != labels_.size())
        throw BadInput("action image row has wrong length");
      std::vector<std::size_t> inverse(row.size(), row.size());
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (row[i] >= row.size() || inverse[row[i]] != row.size())
          throw BadInput("action image row is not a bijection");
        inverse[row[i]] = i;
      }
      for (std::size_t i = 0; i < row.size(); ++i)
        if (inverse[row[i]] != i)
          throw BadInput("generator composed with its inverse is not trivial");
    }
  }

  const PermGroup &group() const { return group_; }
  const std::vector<std::string> &labels() const { return labels_; }
  const std::vector<std::vector<std::size_t>> &generator_images() const {
    return images_;
  }
  std::size_t size() const { return labels_.size(); }

private:
  PermGroup group_;
  std::vector<std::string> labels_;
  std::vector<std::vector<std::size_t>> images_;
};

namespace detail {

inline std::string subset_label(const std::vector<Permutation::Point> &s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i)
    out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

} // namespace detail

/// Action of S_d on the i-element subsets of {0, ..., d-1}, subsets listed
/// in lexicographic order.
inline GroupAction induced_subset_action(std::size_t d, std::size_t i) {
  if (d < 1 || i < 1 || i > d)
    throw BadIndex("subset size " + std::to_string(i) +
                   " outside 1.." + std::to_string(d));
  PermGroup group = symmetric_group(d);
  std::vector<std::vector<Permutation::Point>> subsets;
  std::vector<bool> mask(d, false);
  std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(i), true);
  do {
    std::vector<Permutation::Point> s;
    for (std::size_t k = 0; k < d; ++k)
      if (mask[k])
        s.push_back(static_cast<Permutation::Point>(k));
    subsets.push_back(std::move(s));
  } while (std::prev_permutation(mask.begin(), mask.end()));

  std::map<std::vector<Permutation::Point>, std::size_t> index;
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < subsets.size(); ++k) {
    index.emplace(subsets[k], k);
    labels.push_back(detail::subset_label(subsets[k]));
  }
  std::vector<std::vector<std::size_t>> images;
  for (const auto &gen : group.generators()) {
    std::vector<std::size_t> row;
    row.reserve(subsets.size());
    for (const auto &s : subsets) {
      std::vector<Permutation::Point> t;
      for (auto x : s)
        t.push_back(gen(x));
      std::sort(t.begin(), t.end());
      row.push_back(index.at(t));
    }
    images.push_back(std::move(row));
  }
  return GroupAction(std::move(group), std::move(labels), std::move(images));
}

/// Pattern (q1, q2, q3) over {1, 2, *}; 0 encodes '*'.
using CubePattern = std::array<unsigned, 3>;

inline std::string cube_pattern_label(const CubePattern &p) {
  std::string s = "(";
  for (std::size_t k = 0; k < 3; ++k)
    s += (k ? "," : "") + (p[k] == 0 ? std::string("*") : std::to_string(p[k]));
  return s + ")";
}

/// Image of a pattern under a permutation of the six points (p, q): slot p
/// with value q moves to the slot/value of the image point; a '*' in slot p
/// moves to the image block.
inline CubePattern apply_to_pattern(const Permutation &w, const CubePattern &pat) {
  CubePattern out{};
  for (unsigned p = 1; p <= 3; ++p) {
    const unsigned q = pat[p - 1] == 0 ? 1 : pat[p - 1];
    const auto image = w(wreath_point(p, q));
    const unsigned np = image / 2 + 1, nq = image % 2 + 1;
    out[np - 1] = pat[p - 1] == 0 ? 0 : nq;
  }
  return out;
}

/// Action of the wreath product on the components of the cube strata: the
/// patterns with exactly `wildcards` stars (8, 12 and 6 points for 0, 1, 2).
inline GroupAction cube_strata_action(int wildcards) {
  if (wildcards < 0 || wildcards > 2)
    throw BadIndex("wildcard count must be 0, 1 or 2, got " +
                   std::to_string(wildcards));
  PermGroup group = wreath_3_2();
  std::vector<CubePattern> patterns;
  for (unsigned a = 0; a <= 2; ++a)
    for (unsigned b = 0; b <= 2; ++b)
      for (unsigned c = 0; c <= 2; ++c) {
        CubePattern p{a, b, c};
        if (std::count(p.begin(), p.end(), 0u) == wildcards)
          patterns.push_back(p);
      }
  std::map<CubePattern, std::size_t> index;
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < patterns.size(); ++k) {
    index.emplace(patterns[k], k);
    labels.push_back(cube_pattern_label(patterns[k]));
  }
  std::vector<std::vector<std::size_t>> images;
  for (const auto &gen : group.generators()) {
    std::vector<std::size_t> row;
    for (const auto &p : patterns)
      row.push_back(index.at(apply_to_pattern(gen, p)));
    images.push_back(std::move(row));
  }
  return GroupAction(std::move(group), std::move(labels), std::move(images));
}

} // namespace pencil

#endif // PENCIL_PERM_ACTION_HPP
