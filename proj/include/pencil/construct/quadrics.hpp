#ifndef PENCIL_CONSTRUCT_QUADRICS_HPP
#define PENCIL_CONSTRUCT_QUADRICS_HPP

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pencil/construct/curve_map.hpp"
#include "pencil/errors.hpp"
#include "pencil/exactalg/matrix.hpp"

namespace pencil {

/// Symmetric family of quadrics sum_{a<=b} c_ab(T) X_a X_b on the target.
class QuadricFamily {
public:
  QuadricFamily(std::vector<std::string> labels, std::vector<int> signs)
      : labels_(std::move(labels)), signs_(std::move(signs)) {}

  void set(std::size_t a, std::size_t b, RationalPoly c) {
    coeffs_.insert_or_assign(key(a, b), std::move(c));
  }

  /// Coefficient of X_a X_b; symmetric in (a, b), zero when unset.
  RationalPoly coefficient(std::size_t a, std::size_t b) const {
    auto it = coeffs_.find(key(a, b));
    return it == coeffs_.end() ? RationalPoly(conic_vars()) : it->second;
  }

  bool within_block(std::size_t a, std::size_t b) const {
    return signs_.at(a) == signs_.at(b);
  }

  const std::vector<std::string> &labels() const { return labels_; }
  const std::map<std::pair<std::size_t, std::size_t>, RationalPoly> &
  coefficients() const {
    return coeffs_;
  }

private:
  static std::pair<std::size_t, std::size_t> key(std::size_t a, std::size_t b) {
    return a <= b ? std::pair{a, b} : std::pair{b, a};
  }

  std::vector<std::string> labels_;
  std::vector<int> signs_;
  std::map<std::pair<std::size_t, std::size_t>, RationalPoly> coeffs_;
};

/// Within-block pairs (a <= b) in block order: all pairs of the +1 block,
/// then all pairs of the -1 block.
inline std::vector<std::pair<std::size_t, std::size_t>>
within_block_pairs(const std::vector<int> &signs) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (int block : {1, -1})
    for (std::size_t a = 0; a < signs.size(); ++a)
      for (std::size_t b = a; b < signs.size(); ++b)
        if (signs[a] == block && signs[b] == block)
          out.emplace_back(a, b);
  return out;
}

/// Expands L_s(X) * L_{iota s}(X) with L_s(X) = sum_e j_e(S) X_e, checks that
/// every coefficient mixing the two eigenspaces vanishes, and rewrites the
/// remaining coefficients in T = S^2.
inline QuadricFamily paired_quadric_descend(const ProjectiveCurveMap &j,
                                            const std::vector<int> &signs =
                                                involution_signs()) {
  if (signs.size() != j.size())
    throw BadInput("sign vector length does not match the map");
  j.require_common_degree();
  const ProjectiveCurveMap conj = involution_conjugate(j);
  QuadricFamily family(j.labels(), signs);
  for (std::size_t a = 0; a < j.size(); ++a)
    for (std::size_t b = a; b < j.size(); ++b) {
      RationalPoly c = j.entries()[a] * conj.entries()[b];
      if (a != b)
        c = c + j.entries()[b] * conj.entries()[a];
      if (signs[a] != signs[b]) {
        if (!c.is_zero())
          throw MixedTermNonzero("coefficient of " + j.labels()[a] + "*" +
                                 j.labels()[b] + " is " + c.str());
        continue;
      }
      family.set(a, b, c.descend_powers(2, conic_vars()));
    }
  return family;
}

struct PullbackRow {
  std::string left, right;
  RationalPoly image;
};

struct PullbackTable {
  std::vector<PullbackRow> rows;
  std::vector<std::string> basis; ///< canonical text of T0^n, ..., T1^n
  std::size_t rank = 0;
};

/// Images of the within-block quadratic monomials X_a X_b under the map
/// j'_a(S) j'_b(S) written in T = S^2, with the rank of their coefficient
/// matrix over the degree-n binary monomials.
inline PullbackTable quadratic_pullback_table(const ProjectiveCurveMap &jprime,
                                              const std::vector<int> &signs =
                                                  involution_signs()) {
  if (signs.size() != jprime.size())
    throw BadInput("sign vector length does not match the map");
  const auto degree = jprime.require_common_degree();
  PullbackTable table;
  for (auto [a, b] : within_block_pairs(signs)) {
    RationalPoly product = jprime.entries()[a] * jprime.entries()[b];
    table.rows.push_back({jprime.labels()[a], jprime.labels()[b],
                          product.descend_powers(2, conic_vars())});
  }
  std::vector<Exponents> monomials;
  for (std::uint32_t k = 0; k <= degree; ++k) {
    monomials.push_back({degree - k, k});
    table.basis.push_back(RationalPoly::monomial(conic_vars(), monomials.back()).str());
  }
  ExactMatrix<Rational> m(table.rows.size(), monomials.size());
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto &img = table.rows[r].image;
    for (const auto &[e, c] : img.terms()) {
      auto it = std::find(monomials.begin(), monomials.end(), e);
      if (it == monomials.end())
        throw NotHomogeneous("pullback row " + img.str() + " leaves degree " +
                             std::to_string(degree));
      m(r, static_cast<std::size_t>(it - monomials.begin())) = c;
    }
  }
  table.rank = exact_matrix_rank(m);
  return table;
}

} // namespace pencil

#endif // PENCIL_CONSTRUCT_QUADRICS_HPP
