#ifndef PENCIL_WITNESS_HPP
#define PENCIL_WITNESS_HPP

#include <cstdint>
#include <limits>
#include <optional>
#include <string>

#include "pencil/errors.hpp"
#include "pencil/semigroup.hpp"

namespace pencil {

/// Numerical data of the witness-family counterexample on P^1 x P^1 with
/// bidegree (a, b): n = 4ab, d = n - 1.
struct WitnessReport {
  std::int64_t a = 0, b = 0;
  std::int64_t n = 0, d = 0;
  std::int64_t min_degree_claim = 0;
  std::int64_t span_bound = 0;
  bool basepoint_ok = false;
  std::optional<std::int64_t> a_prime, b_prime, e;
  std::optional<bool> no_section_ok;
};

namespace detail {
inline void require_positive(std::int64_t v, const char *name) {
  if (v < 1)
    throw BadInput(std::string(name) + " must be a positive integer, got " +
                   std::to_string(v));
}
} // namespace detail

inline WitnessReport witness_parameters(std::int64_t a, std::int64_t b) {
  detail::require_positive(a, "a");
  detail::require_positive(b, "b");
  WitnessReport r;
  r.a = a;
  r.b = b;
  r.n = 4 * a * b;
  r.d = r.n - 1;
  r.min_degree_claim = r.d;
  return r;
}

struct SpanResult {
  std::int64_t span_bound = 0;
  bool basepoint_ok = false;
};

/// Projective dimension bound n - b - (a-1)(b-1) of the span of a divisor in
/// |O(a,b)|; at most n hypersurfaces in P^n always share a point.
inline SpanResult span_and_basepoint(std::int64_t a, std::int64_t b) {
  auto w = witness_parameters(a, b);
  SpanResult s;
  s.span_bound = w.n - b - (a - 1) * (b - 1);
  s.basepoint_ok = s.span_bound + 1 <= w.n;
  return s;
}

/// Smallest 4ab with a >= a', b >= b' and 4ab > e + 1; ties go to smaller a.
inline WitnessReport choose_ab_and_certify(std::int64_t a_prime,
                                           std::int64_t b_prime,
                                           std::int64_t e) {
  detail::require_positive(a_prime, "a'");
  detail::require_positive(b_prime, "b'");
  detail::require_positive(e, "e");
  std::int64_t best_a = 0, best_b = 0;
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  // The product is at least 4 a b', so larger a cannot improve once 4 a b'
  // reaches the best product.
  for (std::int64_t a = a_prime; 4 * a * b_prime < best; ++a) {
    std::int64_t b = std::max(b_prime, (e + 1) / (4 * a) + 1);
    std::int64_t product = 4 * a * b;
    if (product < best) {
      best = product;
      best_a = a;
      best_b = b;
    }
  }
  WitnessReport r = witness_parameters(best_a, best_b);
  auto span = span_and_basepoint(best_a, best_b);
  r.span_bound = span.span_bound;
  r.basepoint_ok = span.basepoint_ok;
  r.a_prime = a_prime;
  r.b_prime = b_prime;
  r.e = e;
  r.no_section_ok = e < r.n - 1;
  return r;
}

/// Semigroup generated by C(d, i), 1 <= i <= d - 1: the strata of a degree d
/// hypersurface pencil that miss the full-intersection stratum.
inline NumericalSemigroup proper_strata_semigroup(std::int64_t d) {
  if (d < 2)
    throw BadInput("need d >= 2 for proper strata");
  std::vector<std::int64_t> gens;
  for (std::int64_t i = 1; i <= d - 1; ++i)
    gens.push_back(binomial(d, i));
  return NumericalSemigroup(std::move(gens));
}

} // namespace pencil

#endif // PENCIL_WITNESS_HPP
