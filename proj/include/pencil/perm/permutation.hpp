#ifndef PENCIL_PERM_PERMUTATION_HPP
#define PENCIL_PERM_PERMUTATION_HPP

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "pencil/errors.hpp"

namespace pencil {

/// Bijection of {0, ..., k-1}; images()[i] is where i goes.
class Permutation {
public:
  using Point = std::uint32_t;

  Permutation() = default;

  explicit Permutation(std::vector<Point> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (auto x : images_) {
      if (x >= images_.size() || seen[x])
        throw BadInput("permutation images are not a bijection");
      seen[x] = true;
    }
  }

  Permutation(std::initializer_list<Point> images)
      : Permutation(std::vector<Point>(images)) {}

  static Permutation identity(std::size_t k) {
    std::vector<Point> v(k);
    for (std::size_t i = 0; i < k; ++i)
      v[i] = static_cast<Point>(i);
    return Permutation(std::move(v));
  }

  /// Product of disjoint or overlapping cycles, applied right to left.
  static Permutation from_cycles(std::size_t k,
                                 const std::vector<std::vector<Point>> &cycles) {
    Permutation result = identity(k);
    for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
      Permutation c = identity(k);
      for (std::size_t i = 0; i < it->size(); ++i) {
        auto from = (*it)[i], to = (*it)[(i + 1) % it->size()];
        if (from >= k || to >= k)
          throw BadInput("cycle entry out of range");
        c.images_[from] = to;
      }
      result = c * result;
    }
    return Permutation(result.images_);
  }

  std::size_t degree() const { return images_.size(); }
  const std::vector<Point> &images() const { return images_; }
  Point operator()(Point i) const { return images_.at(i); }

  bool is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i)
        return false;
    return true;
  }

  /// (a * b)(i) = a(b(i)).
  friend Permutation operator*(const Permutation &a, const Permutation &b) {
    if (a.degree() != b.degree())
      throw BadInput("composing permutations of different degree");
    Permutation r;
    r.images_.resize(a.degree());
    for (std::size_t i = 0; i < b.degree(); ++i)
      r.images_[i] = a.images_[b.images_[i]];
    return r;
  }

  Permutation inverse() const {
    Permutation r;
    r.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
      r.images_[images_[i]] = static_cast<Point>(i);
    return r;
  }

  friend bool operator==(const Permutation &, const Permutation &) = default;
  friend auto operator<=>(const Permutation &, const Permutation &) = default;

  std::string str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < images_.size(); ++i)
      s += (i ? "," : "") + std::to_string(images_[i]);
    return s + "]";
  }

private:
  std::vector<Point> images_;
};

} // namespace pencil

#endif // PENCIL_PERM_PERMUTATION_HPP
