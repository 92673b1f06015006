#ifndef PENCIL_CONSTRUCT_DUAL_POINT_HPP
#define PENCIL_CONSTRUCT_DUAL_POINT_HPP

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pencil/construct/curve_map.hpp"
#include "pencil/construct/norm.hpp"
#include "pencil/errors.hpp"
#include "pencil/exactalg/matrix.hpp"

namespace pencil {

using LinePoint = std::array<Cyclotomic, 2>;

/// a and b are nonzero and every 2x2 minor of the pair vanishes.
inline bool projectively_equal(const std::vector<Cyclotomic> &a,
                               const std::vector<Cyclotomic> &b) {
  if (a.size() != b.size())
    return false;
  auto nonzero = [](const std::vector<Cyclotomic> &v) {
    for (const auto &x : v)
      if (!x.is_zero())
        return true;
    return false;
  };
  if (!nonzero(a) || !nonzero(b))
    return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = i + 1; k < a.size(); ++k)
      if (!(a[i] * b[k] == a[k] * b[i]))
        return false;
  return true;
}

/// The point of P(V) lying on the hyperplanes sum_e j_e(p) X_e = 0 for the
/// given points p; needs exactly one fewer point than coordinates, with the
/// hyperplanes independent.
inline std::vector<Cyclotomic> dual_point_on_fiber(const ProjectiveCurveMap &j,
                                                   const std::vector<LinePoint> &points) {
  if (points.size() + 1 != j.size())
    throw BadInput("dual point needs " + std::to_string(j.size() - 1) +
                   " points, got " + std::to_string(points.size()));
  std::vector<std::vector<Cyclotomic>> rows;
  for (const auto &p : points)
    rows.push_back(j.evaluate(p));
  auto m = ExactMatrix<Cyclotomic>::from_rows(rows);
  auto rank = exact_matrix_rank(m);
  if (rank != points.size())
    throw DegenerateFiber("hyperplane matrix has rank " + std::to_string(rank) +
                          ", expected " + std::to_string(points.size()));
  return exact_matrix_nullspace(m).front();
}

struct FiberPointCheck {
  Rational sample;
  std::size_t fiber_index = 0;
  std::size_t excluded_index = 0; ///< the g-partner left out of the five
  bool match = false;
  std::vector<Cyclotomic> derived;
  std::vector<Cyclotomic> candidate;
};

struct JprimeComparison {
  std::vector<FiberPointCheck> checks;

  bool all_match() const {
    for (const auto &c : checks)
      if (!c.match)
        return false;
    return !checks.empty();
  }
  std::size_t matches() const {
    std::size_t n = 0;
    for (const auto &c : checks)
      n += c.match ? 1 : 0;
    return n;
  }
};

inline const std::vector<Rational> &default_jprime_samples() {
  static const std::vector<Rational> v{1, 2, 3, 5, 7};
  return v;
}

/// Fibre of the degree-6 cover over the image of [t, 1]: the points
/// [zeta_6^k t, 1], k = 0..5.
inline std::vector<LinePoint> sextic_fiber(const Rational &t) {
  const Cyclotomic zeta = Cyclotomic::zeta(6);
  std::vector<LinePoint> fiber;
  Cyclotomic root(1);
  for (int k = 0; k < 6; ++k) {
    fiber.push_back({root * Cyclotomic(t), Cyclotomic(1)});
    root *= zeta;
  }
  return fiber;
}

/// For every sample t and every point s of its fibre, intersects the
/// hyperplanes of s and of the four fibre points outside s's g-fibre, then
/// compares the resulting point with the candidate evaluated at s.
inline JprimeComparison derive_jprime_and_compare(const ProjectiveCurveMap &j,
                                                  const ProjectiveCurveMap &candidate,
                                                  const std::vector<Rational> &samples =
                                                      default_jprime_samples()) {
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (samples[i].is_zero())
      throw SampleZero("sample t = 0 lies over the totally ramified fibre");
    for (std::size_t k = 0; k < i; ++k)
      if (samples[k] == samples[i])
        throw BadInput("samples must be pairwise distinct");
  }
  if (candidate.size() != j.size())
    throw BadInput("candidate has " + std::to_string(candidate.size()) +
                   " coordinates, expected " + std::to_string(j.size()));
  const MonomialCover cover = MonomialCover(2).then(MonomialCover(3));
  JprimeComparison out;
  for (const auto &t : samples) {
    const auto fiber = sextic_fiber(t);
    const auto base = cover.apply(fiber.front());
    for (const auto &p : fiber) {
      auto img = cover.apply(p);
      if (!projectively_equal({img[0], img[1]}, {base[0], base[1]}))
        throw std::logic_error("sextic fibre does not lie over one point");
    }
    for (std::size_t s = 0; s < fiber.size(); ++s) {
      const LinePoint partner{fiber[s][0], -fiber[s][1]};
      std::optional<std::size_t> excluded;
      for (std::size_t m = 0; m < fiber.size(); ++m)
        if (m != s && projectively_equal({fiber[m][0], fiber[m][1]},
                                         {partner[0], partner[1]}))
          excluded = m;
      if (!excluded)
        throw std::logic_error("g-partner missing from the fibre");
      std::vector<LinePoint> five;
      for (std::size_t m = 0; m < fiber.size(); ++m)
        if (m != *excluded)
          five.push_back(fiber[m]);
      FiberPointCheck check;
      check.sample = t;
      check.fiber_index = s;
      check.excluded_index = *excluded;
      check.derived = dual_point_on_fiber(j, five);
      check.candidate = candidate.evaluate(fiber[s]);
      check.match = projectively_equal(check.derived, check.candidate);
      out.checks.push_back(std::move(check));
    }
  }
  return out;
}

} // namespace pencil

#endif // PENCIL_CONSTRUCT_DUAL_POINT_HPP
