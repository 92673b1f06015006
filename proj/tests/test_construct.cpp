#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pencil/construct/dual_point.hpp"
#include "pencil/construct/fixtures.hpp"
#include "pencil/construct/norm.hpp"
#include "pencil/construct/quadrics.hpp"

using namespace pencil;

namespace {

std::vector<std::uint32_t> s0_exponents(const ProjectiveCurveMap &m) {
  std::vector<std::uint32_t> out;
  for (const auto &e : m.entries())
    out.push_back(e.terms().begin()->first[0]);
  return out;
}

} // namespace

TEST(CurveMap, ParseAndDegree) {
  auto j = fixtures::load(fixtures::corrected_j());
  EXPECT_EQ(j.common_degree(), std::optional<std::uint32_t>(5));
  EXPECT_EQ(normalized_map_degree(j), 5u);
  auto printed = fixtures::load(fixtures::printed_j());
  EXPECT_FALSE(printed.common_degree());
  EXPECT_THROW(printed.require_common_degree(), NotHomogeneous);
  // A common factor S0 drops the degree by one.
  auto padded = parse_curve_map({"S0^2", "S0*S1"}, {"a", "b"});
  EXPECT_EQ(normalized_map_degree(padded), 1u);
}

TEST(CurveMap, Equivariance) {
  auto j = fixtures::load(fixtures::corrected_j());
  auto ok = check_weighted_equivariance(j, {6, fixtures::j_weights()});
  EXPECT_TRUE(ok.equivariant);
  EXPECT_EQ(ok.offset, std::optional<int>(0));
  auto jp = fixtures::load(fixtures::corrected_jprime());
  auto dual = check_weighted_equivariance(jp, {6, fixtures::jprime_weights()});
  EXPECT_TRUE(dual.equivariant);
  EXPECT_EQ(dual.offset, std::optional<int>(5));
  auto printed = check_weighted_equivariance(fixtures::load(fixtures::printed_j()),
                                             {6, fixtures::j_weights()});
  EXPECT_FALSE(printed.equivariant);
  EXPECT_EQ(printed.failure, "NotHomogeneous");
  auto wrong = check_weighted_equivariance(j, {6, {0, 1, 2, 3, 4, 5}});
  EXPECT_EQ(wrong.failure, "WeightMismatch");
  auto short_weights = check_weighted_equivariance(j, {6, {0, 1}});
  EXPECT_EQ(short_weights.failure, "DimensionMismatch");
}

TEST(CurveMap, InvolutionSigns) {
  auto j = fixtures::load(fixtures::corrected_j());
  EXPECT_EQ(involution_conjugate(j).entries(),
            apply_target_signs(j, involution_signs()).entries());
  // On j' the involution acts by the opposite signs, the same point of P(V).
  auto jp = fixtures::load(fixtures::corrected_jprime());
  EXPECT_EQ(involution_conjugate(jp).entries(),
            apply_target_signs(jp, {-1, -1, -1, 1, 1, 1}).entries());
}

TEST(Norm, CubeCoverOfLinearForm) {
  auto p = parse_poly("T0 + T1", conic_vars());
  EXPECT_EQ(monomial_norm(p, 3).str(), "1/1*U0^1 + 1/1*U1^1");
  // Quadratic cover: (T0 + T1)(-T0 + T1) = T1^2 - T0^2.
  EXPECT_EQ(monomial_norm(p, 2).str(), "-1/1*U0^1 + 1/1*U1^1");
  EXPECT_THROW(monomial_norm(parse_poly("T0^2 + T1", conic_vars()), 2), NotHomogeneous);
}

TEST(Norm, RandomFormsAgainstResultant) {
  std::mt19937 rng(314159);
  const Rational samples[] = {Rational(2), Rational(-3, 5), Rational(7, 2)};
  for (int trial = 0; trial < 60; ++trial) {
    std::uint32_t d = 1 + rng() % 4;
    auto p = oracle::random_form(rng, rng() % 5, conic_vars());
    auto q = oracle::random_form(rng, rng() % 5, conic_vars());
    auto np = monomial_norm(p, d);
    EXPECT_EQ(np.homogeneous_degree(), p.homogeneous_degree());
    EXPECT_EQ(monomial_norm(p * q, d), np * monomial_norm(q, d));
    for (const auto &u : samples)
      EXPECT_EQ(np.evaluate({u, Rational(1)}), oracle::norm_at(p, d, u))
          << p.str() << " d=" << d;
  }
}

TEST(Norm, SplittingType) {
  EXPECT_EQ(pushforward_splitting_type(3, 5), (std::vector<std::int64_t>{1, 1, 1}));
  EXPECT_EQ(pushforward_splitting_type(2, 4), (std::vector<std::int64_t>{2, 1}));
  for (int d = 1; d <= 6; ++d)
    for (int m = 0; m <= 12; ++m) {
      std::int64_t total = 0;
      for (auto t : pushforward_splitting_type(d, m))
        total += t + 1;
      EXPECT_EQ(total, m + 1);
    }
}

TEST(Norm, CoverComposition) {
  auto cover = MonomialCover(2).then(MonomialCover(3));
  EXPECT_EQ(cover.degree, 6u);
  auto img = cover.apply({Cyclotomic::zeta(6), Cyclotomic(1)});
  EXPECT_EQ(img[0], Cyclotomic(1));
}

TEST(Quadrics, PairedDescend) {
  auto j = fixtures::load(fixtures::corrected_j());
  auto family = paired_quadric_descend(j);
  EXPECT_EQ(family.coefficients().size(), 12u);
  EXPECT_EQ(family.coefficient(0, 0).str(), "1/1*T0^5");
  EXPECT_EQ(family.coefficient(5, 5).str(), "-1/1*T1^5");
  EXPECT_TRUE(family.coefficient(0, 3).is_zero());
  for (const auto &[key, c] : family.coefficients()) {
    EXPECT_TRUE(family.within_block(key.first, key.second));
    EXPECT_EQ(c.homogeneous_degree(), std::optional<std::uint32_t>(5));
  }
  // Mixing the eigenspaces makes the cross terms survive.
  auto mixed = parse_curve_map({"S0^5", "S0^4*S1", "S0^3*S1^2", "S0^2*S1^3",
                                "S0*S1^4", "S1^5"},
                               target_labels());
  EXPECT_THROW(paired_quadric_descend(mixed), MixedTermNonzero);
}

TEST(Quadrics, PullbackTableMatchesPrinted) {
  auto table = quadratic_pullback_table(fixtures::load(fixtures::corrected_jprime()));
  const auto &expected = fixtures::printed_pullback_table();
  ASSERT_EQ(table.rows.size(), expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    EXPECT_EQ(table.rows[i].left, expected[i].left);
    EXPECT_EQ(table.rows[i].right, expected[i].right);
    EXPECT_EQ(table.rows[i].image.str(), expected[i].image);
  }
  EXPECT_EQ(table.rank, 6u);
  EXPECT_EQ(table.basis.front(), "1/1*T0^5");
  EXPECT_EQ(table.basis.back(), "1/1*T1^5");
}

TEST(DualPoint, ClosedFormOracle) {
  auto j = fixtures::load(fixtures::corrected_j());
  const auto exps = s0_exponents(j);
  for (int t = 1; t <= 4; ++t) {
    auto fiber = sextic_fiber(Rational(t));
    for (std::size_t s = 0; s < fiber.size(); ++s) {
      std::vector<LinePoint> five;
      for (std::size_t m = 0; m < fiber.size(); ++m)
        if (m != (s + 3) % 6)
          five.push_back(fiber[m]);
      auto derived = dual_point_on_fiber(j, five);
      auto expected = oracle::closed_form_dual_point<Cyclotomic>(exps, fiber[s][0]);
      EXPECT_TRUE(projectively_equal(derived, expected)) << "t=" << t << " s=" << s;
    }
  }
}

TEST(DualPoint, CorrectedJprimeMatches) {
  auto j = fixtures::load(fixtures::corrected_j());
  auto cmp = derive_jprime_and_compare(j, fixtures::load(fixtures::corrected_jprime()));
  EXPECT_EQ(cmp.checks.size(), 30u);
  EXPECT_TRUE(cmp.all_match());
  for (const auto &c : cmp.checks)
    EXPECT_EQ(c.excluded_index, (c.fiber_index + 3) % 6);
}

TEST(DualPoint, PrintedJprimeIsTheInvolutionPartner) {
  auto j = fixtures::load(fixtures::corrected_j());
  std::vector<RationalPoly> raw;
  for (const auto &t : fixtures::printed_jprime().entries)
    raw.push_back(parse_poly(t, source_vars()));
  auto dedup = drop_repeated_entries(raw);
  ASSERT_EQ(dedup.size(), 6u);
  ProjectiveCurveMap printed(dedup, target_labels());
  EXPECT_EQ(derive_jprime_and_compare(j, printed).matches(), 0u);
  EXPECT_TRUE(derive_jprime_and_compare(j, apply_target_signs(printed, involution_signs()))
                  .all_match());
}

TEST(DualPoint, Errors) {
  auto j = fixtures::load(fixtures::corrected_j());
  auto jp = fixtures::load(fixtures::corrected_jprime());
  EXPECT_THROW(derive_jprime_and_compare(j, jp, {Rational(0)}), SampleZero);
  EXPECT_THROW(derive_jprime_and_compare(j, jp, {Rational(2), Rational(2)}), BadInput);
  auto fiber = sextic_fiber(Rational(1));
  std::vector<LinePoint> repeated(5, fiber.front());
  EXPECT_THROW(dual_point_on_fiber(j, repeated), DegenerateFiber);
}
