#ifndef PENCIL_CONSTRUCT_NORM_HPP
#define PENCIL_CONSTRUCT_NORM_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <vector>

#include "pencil/construct/curve_map.hpp"
#include "pencil/errors.hpp"
#include "pencil/exactalg/poly.hpp"

namespace pencil {

/// The self-map [T0, T1] -> [T0^d, T1^d] of the projective line.
struct MonomialCover {
  std::uint32_t degree = 1;

  explicit MonomialCover(std::uint32_t d) : degree(d) {
    if (d < 1)
      throw BadInput("cover degree must be at least 1");
  }

  MonomialCover then(const MonomialCover &next) const {
    return MonomialCover(degree * next.degree);
  }

  std::array<Cyclotomic, 2> apply(const std::array<Cyclotomic, 2> &p) const {
    std::array<Cyclotomic, 2> out{Cyclotomic(1), Cyclotomic(1)};
    for (std::uint32_t k = 0; k < degree; ++k) {
      out[0] *= p[0];
      out[1] *= p[1];
    }
    return out;
  }
};

/// Norm of a binary form along the cover of degree d: the product of
/// p(zeta_d^k T0, T1) over the deck group, rewritten in U0 = T0^d, U1 = T1^d.
inline RationalPoly monomial_norm(const RationalPoly &p, std::uint32_t d) {
  if (d < 1)
    throw BadInput("cover degree must be at least 1");
  if (p.vars().size() != 2)
    throw BadInput("monomial_norm expects a binary form");
  if (!p.homogeneous_degree())
    throw NotHomogeneous("monomial_norm input " + p.str());
  const CyclotomicPoly pc = to_cyclotomic(p);
  const Cyclotomic zeta = Cyclotomic::zeta(static_cast<int>(d));
  CyclotomicPoly product = CyclotomicPoly::constant(p.vars(), Cyclotomic(1));
  Cyclotomic root(1);
  for (std::uint32_t k = 0; k < d; ++k) {
    product = product * pc.scale_variable(0, root);
    root *= zeta;
  }
  if (!product.exponents_divisible_by(d))
    throw InternalNonRational("norm of " + p.str() +
                              " has exponents not divisible by the degree");
  return to_rational(product).descend_powers(d, base_vars());
}

/// Splitting type of f_* O(m) for the degree-d monomial cover: monomials
/// T0^a T1^(m-a) grouped by a mod d, class r giving twist floor((m-r)/d).
inline std::vector<std::int64_t> pushforward_splitting_type(std::int64_t d,
                                                            std::int64_t m) {
  if (d < 1 || m < 0)
    throw BadInput("splitting type needs d >= 1 and m >= 0");
  std::vector<std::int64_t> twists;
  for (std::int64_t r = 0; r <= std::min(d - 1, m); ++r)
    twists.push_back((m - r) / d);
  return twists;
}

} // namespace pencil

#endif // PENCIL_CONSTRUCT_NORM_HPP
