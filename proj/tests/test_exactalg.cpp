#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pencil/exactalg/cyclotomic.hpp"
#include "pencil/exactalg/matrix.hpp"
#include "pencil/exactalg/poly.hpp"
#include "pencil/exactalg/rational.hpp"

using namespace pencil;

TEST(Rational, TextRoundTrip) {
  EXPECT_EQ(to_string(Rational(3)), "3/1");
  EXPECT_EQ(to_string(Rational(-6, 4)), "-3/2");
  EXPECT_EQ(parse_rational("-3/2"), Rational(-3, 2));
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_EQ(parse_rational(" 4/8 "), Rational(1, 2));
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("abc"), ParseError);
}

TEST(Rational, Binomial) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(8, 0), 1);
  EXPECT_EQ(binomial(8, 8), 1);
  EXPECT_EQ(binomial(3, 4), 0);
  for (int n = 1; n <= 20; ++n)
    for (int k = 1; k < n; ++k)
      EXPECT_EQ(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST(Cyclotomic, SixthRootRelations) {
  const Cyclotomic z = Cyclotomic::zeta(6);
  EXPECT_EQ(z * z, z - Cyclotomic(1));
  EXPECT_EQ(z * z * z, Cyclotomic(-1));
  Cyclotomic p(1);
  for (int k = 0; k < 6; ++k)
    p *= z;
  EXPECT_EQ(p, Cyclotomic(1));
  EXPECT_TRUE(p.is_rational());
  EXPECT_EQ(p.rational_value(), Rational(1));
  EXPECT_THROW(z.rational_value(), InternalNonRational);
}

TEST(Cyclotomic, PolynomialsAndPhi) {
  EXPECT_EQ(cyclotomic_polynomial(6), (qpoly::Poly{1, -1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(4), (qpoly::Poly{1, 0, 1}));
  EXPECT_EQ(cyclotomic_polynomial(3), (qpoly::Poly{1, 1, 1}));
  for (int n = 1; n <= 30; ++n)
    EXPECT_EQ(qpoly::degree(cyclotomic_polynomial(n)), euler_phi(n)) << n;
}

TEST(Cyclotomic, MixedConductorsEmbed) {
  const Cyclotomic i = Cyclotomic::zeta(4);
  const Cyclotomic w = Cyclotomic::zeta(3);
  const Cyclotomic prod = i * w;
  EXPECT_EQ(prod.conductor(), 12);
  EXPECT_EQ(i * i, Cyclotomic(-1));
  // zeta_12^3 = i and zeta_12^4 = omega.
  const Cyclotomic z12 = Cyclotomic::zeta(12);
  EXPECT_EQ(z12 * z12 * z12, i);
  EXPECT_EQ(z12 * z12 * z12 * z12, w);
  EXPECT_EQ(Cyclotomic::zeta(6), -(w * w));
}

TEST(Cyclotomic, RandomRingAxioms) {
  std::mt19937 rng(20260);
  std::uniform_int_distribution<int> c(-5, 5);
  const int conductors[] = {3, 4, 6, 12};
  auto random_value = [&] {
    int n = conductors[rng() % 4];
    qpoly::Poly coeffs;
    for (int k = 0; k < n; ++k)
      coeffs.push_back(Rational(c(rng), 1 + (rng() % 3)));
    return Cyclotomic::from_coefficients(n, coeffs);
  };
  for (int trial = 0; trial < 200; ++trial) {
    auto a = random_value(), b = random_value(), d = random_value();
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * d, a * (b * d));
    EXPECT_EQ(a * (b + d), a * b + a * d);
    EXPECT_EQ(a - a, Cyclotomic(0));
    if (!a.is_zero()) {
      EXPECT_EQ(a * a.inverse(), Cyclotomic(1));
      EXPECT_EQ((b / a) * a, b);
    }
  }
}

TEST(Poly, CanonicalTextAndParse) {
  const std::vector<std::string> v{"S0", "S1"};
  auto p = parse_poly("S1^2 + 2*S0^2 - 1/2*S0*S1", v);
  EXPECT_EQ(p.str(), "2/1*S0^2 + -1/2*S0^1*S1^1 + 1/1*S1^2");
  EXPECT_EQ(parse_poly(p.str(), v), p);
  EXPECT_EQ(RationalPoly(v).str(), "0");
  EXPECT_EQ(parse_poly("0", v).str(), "0");
  EXPECT_THROW(parse_poly("S2^3", v), ParseError);
}

TEST(Poly, HomogeneityAndDescent) {
  const std::vector<std::string> v{"S0", "S1"};
  auto p = parse_poly("1/1*S0^4 + 3/1*S0^2*S1^2", v);
  EXPECT_EQ(p.homogeneous_degree(), std::optional<std::uint32_t>(4));
  EXPECT_EQ(p.descend_powers(2, {"T0", "T1"}).str(), "1/1*T0^2 + 3/1*T0^1*T1^1");
  EXPECT_THROW(parse_poly("S0^3*S1", v).descend_powers(2, {"T0", "T1"}), NotDescendable);
  EXPECT_THROW(parse_poly("S0^3 + S1", v).as_homogeneous(), NotHomogeneous);
  EXPECT_FALSE(parse_poly("S0^3 + S1", v).homogeneous_degree());
}

TEST(Poly, RandomRingProperties) {
  std::mt19937 rng(7);
  const std::vector<std::string> v{"T0", "T1"};
  for (int trial = 0; trial < 100; ++trial) {
    auto a = oracle::random_form(rng, rng() % 4, v);
    auto b = oracle::random_form(rng, rng() % 4, v);
    auto c = oracle::random_form(rng, rng() % 4, v);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a - a).str(), "0");
    EXPECT_EQ(*(a * b).homogeneous_degree(),
              *a.homogeneous_degree() + *b.homogeneous_degree());
    const std::vector<Rational> pt{Rational(2, 3), Rational(-5, 7)};
    EXPECT_EQ((a * b).evaluate(pt), a.evaluate(pt) * b.evaluate(pt));
    EXPECT_EQ(a.pow(3), a * a * a);
  }
}

TEST(Poly, NormalizedAndGcd) {
  const std::vector<std::string> v{"x", "y"};
  EXPECT_EQ(parse_poly("-2/3*x^2 + 4/3*y^2", v).normalized().str(), "1/1*x^2 + -2/1*y^2");
  auto f = parse_poly("x^2 - y^2", v);
  auto g = parse_poly("x^2*y + x*y^2", v);
  EXPECT_EQ(binary_form_gcd<Rational>({f, g}).str(), "1/1*x^1 + 1/1*y^1");
  auto h = parse_poly("x^3*y^2", v);
  auto k = parse_poly("x*y^4", v);
  EXPECT_EQ(binary_form_gcd<Rational>({h, k}).str(), "1/1*x^1*y^2");
}

TEST(Matrix, RankAndNullspaceProperty) {
  std::mt19937 rng(42);
  std::uniform_int_distribution<int> entry(-2, 2);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 6;
    ExactMatrix<Rational> m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c)
        m(r, c) = (rng() % 3 == 0) ? Rational(0) : Rational(entry(rng));
    auto rank = exact_matrix_rank(m);
    auto null = exact_matrix_nullspace(m);
    EXPECT_EQ(rank + null.size(), cols);
    for (const auto &v : null)
      for (std::size_t r = 0; r < rows; ++r) {
        Rational s = 0;
        for (std::size_t c = 0; c < cols; ++c)
          s += m(r, c) * v[c];
        EXPECT_EQ(s, 0);
      }
    if (rows == cols) {
      EXPECT_EQ(rank == rows, oracle::determinant([&] {
                                std::vector<std::vector<Rational>> d(rows);
                                for (std::size_t r = 0; r < rows; ++r)
                                  for (std::size_t c = 0; c < cols; ++c)
                                    d[r].push_back(m(r, c));
                                return d;
                              }()) != 0);
    }
  }
}

TEST(Matrix, CyclotomicRank) {
  const Cyclotomic z = Cyclotomic::zeta(6);
  auto m = ExactMatrix<Cyclotomic>::from_rows({{Cyclotomic(1), z}, {z, z * z}});
  EXPECT_EQ(exact_matrix_rank(m), 1u);
  EXPECT_EQ(exact_matrix_rank(ExactMatrix<Cyclotomic>::identity(3)), 3u);
}

TEST(Matrix, VandermondeGeneralPosition) {
  using P = LineParam<Rational>;
  std::vector<P> pts{P::at(0), P::at(1), P::at(2), P::at(3), P::at(4), P::infinity()};
  EXPECT_TRUE(vandermonde_general_position<Rational>(5, pts));
  pts.back() = P::at(2);
  EXPECT_FALSE(vandermonde_general_position<Rational>(5, pts));
  pts.push_back(P::at(9));
  EXPECT_THROW(vandermonde_general_position<Rational>(5, pts), TooManyPoints);
  std::vector<P> twice_infinity{P::infinity(), P::infinity()};
  EXPECT_FALSE(vandermonde_general_position<Rational>(3, twice_infinity));
}
