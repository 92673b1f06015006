#ifndef PENCIL_EXACTALG_RATIONAL_HPP
#define PENCIL_EXACTALG_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

#include "pencil/errors.hpp"

namespace pencil {

using BigInt = boost::multiprecision::number<
    boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;

/// Arbitrary precision rational. The backend keeps the fraction reduced with
/// a positive denominator after every operation.
using Rational = boost::multiprecision::number<
    boost::multiprecision::cpp_rational_backend,
    boost::multiprecision::et_off>;

inline BigInt numerator_of(const Rational &q) {
  return BigInt(boost::multiprecision::numerator(q));
}

inline BigInt denominator_of(const Rational &q) {
  return BigInt(boost::multiprecision::denominator(q));
}

inline bool is_zero(const Rational &q) { return q.is_zero(); }

/// Canonical "p/q" text, denominator always written.
inline std::string to_string(const Rational &q) {
  return numerator_of(q).str() + "/" + denominator_of(q).str();
}

/// Accepts "p/q" or a bare integer "p", with surrounding spaces.
inline Rational parse_rational(std::string_view text) {
  while (!text.empty() && text.front() == ' ')
    text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ')
    text.remove_suffix(1);
  auto parse_int = [&](std::string_view s) {
    if (s.empty())
      throw ParseError("empty integer in '" + std::string(text) + "'");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size())
      throw ParseError("bad integer in '" + std::string(text) + "'");
    for (std::size_t i = start; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9')
        throw ParseError("bad integer in '" + std::string(text) + "'");
    return BigInt(std::string(s[0] == '+' ? s.substr(1) : s));
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos)
    return Rational(parse_int(text));
  BigInt num = parse_int(text.substr(0, slash));
  BigInt den = parse_int(text.substr(slash + 1));
  if (den.is_zero())
    throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

inline std::int64_t gcd_int(std::int64_t a, std::int64_t b) {
  if (a < 0)
    a = -a;
  if (b < 0)
    b = -b;
  while (b != 0) {
    auto t = a % b;
    a = b;
    b = t;
  }
  return a;
}

/// Binomial coefficient C(n, k); 0 when k is out of range.
inline std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n)
    return 0;
  if (k > n - k)
    k = n - k;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i)
    r = r * (n - k + i) / i;
  return r;
}

} // namespace pencil

#endif // PENCIL_EXACTALG_RATIONAL_HPP
