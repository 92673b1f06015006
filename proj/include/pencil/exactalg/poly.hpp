#ifndef PENCIL_EXACTALG_POLY_HPP
#define PENCIL_EXACTALG_POLY_HPP

#include <algorithm>
#include <cctype>
#include <concepts>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pencil/errors.hpp"
#include "pencil/exactalg/cyclotomic.hpp"
#include "pencil/exactalg/rational.hpp"

namespace pencil {

using Exponents = std::vector<std::uint32_t>;

inline std::uint32_t total_degree(const Exponents &e) {
  return std::accumulate(e.begin(), e.end(), std::uint32_t{0});
}

/// Graded lexicographic order: total degree first, then lexicographic with
/// the first variable most significant.
struct GrlexLess {
  bool operator()(const Exponents &a, const Exponents &b) const {
    auto da = total_degree(a), db = total_degree(b);
    if (da != db)
      return da < db;
    return a < b;
  }
};

/// Sparse multivariate polynomial over an exact field `Scalar` (Rational or
/// Cyclotomic). No zero coefficient is ever stored. Binary operations require
/// identical variable lists.
template <class Scalar> class SparsePoly {
public:
  using Terms = std::map<Exponents, Scalar, GrlexLess>;

  SparsePoly() = default;
  explicit SparsePoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  SparsePoly(std::vector<std::string> vars, const Terms &terms)
      : vars_(std::move(vars)) {
    for (const auto &[e, c] : terms)
      add_term(e, c);
  }

  static SparsePoly constant(std::vector<std::string> vars, const Scalar &c) {
    SparsePoly p(std::move(vars));
    p.add_term(Exponents(p.vars_.size(), 0), c);
    return p;
  }

  static SparsePoly monomial(std::vector<std::string> vars, Exponents e,
                             const Scalar &c = Scalar(1)) {
    SparsePoly p(std::move(vars));
    p.add_term(std::move(e), c);
    return p;
  }

  static SparsePoly variable(std::vector<std::string> vars, std::size_t i) {
    Exponents e(vars.size(), 0);
    e.at(i) = 1;
    return monomial(std::move(vars), std::move(e));
  }

  /// Validated homogeneous form: throws NotHomogeneous on mixed degrees.
  SparsePoly as_homogeneous() const {
    if (!homogeneous_degree())
      throw NotHomogeneous("polynomial " + str() + " has mixed total degrees");
    SparsePoly r = *this;
    r.homogeneous_flag_ = true;
    return r;
  }

  bool homogeneous_flag() const { return homogeneous_flag_; }

  const std::vector<std::string> &vars() const { return vars_; }
  const Terms &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Common total degree of all terms; nullopt for zero or mixed degrees.
  std::optional<std::uint32_t> homogeneous_degree() const {
    if (terms_.empty())
      return std::nullopt;
    auto d = total_degree(terms_.begin()->first);
    for (const auto &[e, c] : terms_)
      if (total_degree(e) != d)
        return std::nullopt;
    return d;
  }

  /// Largest total degree; -1 for the zero polynomial.
  int total_degree_max() const {
    return terms_.empty() ? -1
                          : static_cast<int>(total_degree(terms_.rbegin()->first));
  }

  std::vector<std::uint32_t> total_degrees() const {
    std::vector<std::uint32_t> out;
    for (const auto &[e, c] : terms_)
      out.push_back(total_degree(e));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  /// Scalar attached to a monomial, zero when absent.
  Scalar coefficient(const Exponents &e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  void add_term(Exponents e, const Scalar &c) {
    if (e.size() != vars_.size())
      throw BadInput("exponent vector length " + std::to_string(e.size()) +
                     " does not match " + std::to_string(vars_.size()) +
                     " variables");
    if (is_zero_scalar(c))
      return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(std::move(e), c);
      return;
    }
    it->second += c;
    if (is_zero_scalar(it->second))
      terms_.erase(it);
  }

  SparsePoly operator-() const {
    SparsePoly r = *this;
    for (auto &[e, c] : r.terms_)
      c = -c;
    return r;
  }

  friend SparsePoly operator+(const SparsePoly &a, const SparsePoly &b) {
    a.check_compatible(b);
    SparsePoly r = a;
    for (const auto &[e, c] : b.terms_)
      r.add_term(e, c);
    r.homogeneous_flag_ = a.homogeneous_flag_ && b.homogeneous_flag_ &&
                          r.homogeneous_degree().has_value();
    return r;
  }
  friend SparsePoly operator-(const SparsePoly &a, const SparsePoly &b) {
    return a + (-b);
  }
  friend SparsePoly operator*(const SparsePoly &a, const SparsePoly &b) {
    a.check_compatible(b);
    SparsePoly r(a.vars_);
    for (const auto &[ea, ca] : a.terms_)
      for (const auto &[eb, cb] : b.terms_) {
        Exponents e(ea.size());
        for (std::size_t i = 0; i < e.size(); ++i)
          e[i] = ea[i] + eb[i];
        r.add_term(std::move(e), ca * cb);
      }
    r.homogeneous_flag_ =
        a.homogeneous_flag_ && b.homogeneous_flag_ && !r.is_zero();
    return r;
  }
  friend SparsePoly operator*(const Scalar &s, const SparsePoly &p) {
    SparsePoly r(p.vars_);
    for (const auto &[e, c] : p.terms_)
      r.add_term(e, s * c);
    r.homogeneous_flag_ = p.homogeneous_flag_ && !r.is_zero();
    return r;
  }

  SparsePoly pow(unsigned k) const {
    SparsePoly r = constant(vars_, Scalar(1));
    for (unsigned i = 0; i < k; ++i)
      r = r * *this;
    return r;
  }

  /// Exact term-by-term equality; the homogeneous flag is not compared.
  friend bool operator==(const SparsePoly &a, const SparsePoly &b) {
    if (a.vars_ != b.vars_ || a.terms_.size() != b.terms_.size())
      return false;
    auto ib = b.terms_.begin();
    for (auto ia = a.terms_.begin(); ia != a.terms_.end(); ++ia, ++ib)
      if (ia->first != ib->first || !(ia->second == ib->second))
        return false;
    return true;
  }

  /// Replaces variable i by `factor * variable i`.
  SparsePoly scale_variable(std::size_t i, const Scalar &factor) const {
    SparsePoly r(vars_);
    for (const auto &[e, c] : terms_) {
      Scalar f(1);
      for (std::uint32_t k = 0; k < e.at(i); ++k)
        f *= factor;
      r.add_term(e, c * f);
    }
    r.homogeneous_flag_ = homogeneous_flag_;
    return r;
  }

  Scalar evaluate(const std::vector<Scalar> &point) const {
    if (point.size() != vars_.size())
      throw BadInput("evaluation point has wrong dimension");
    Scalar total(0);
    for (const auto &[e, c] : terms_) {
      Scalar t = c;
      for (std::size_t i = 0; i < e.size(); ++i)
        for (std::uint32_t k = 0; k < e[i]; ++k)
          t *= point[i];
      total += t;
    }
    return total;
  }

  /// True iff every exponent is a multiple of k.
  bool exponents_divisible_by(std::uint32_t k) const {
    for (const auto &[e, c] : terms_)
      for (auto x : e)
        if (x % k != 0)
          return false;
    return true;
  }

  /// Substitutes new_var_i = var_i^k: every exponent is divided by k.
  /// Throws NotDescendable when some exponent is not a multiple of k.
  SparsePoly descend_powers(std::uint32_t k,
                            std::vector<std::string> new_vars) const {
    if (new_vars.size() != vars_.size())
      throw BadInput("descend_powers: variable count mismatch");
    SparsePoly r(std::move(new_vars));
    for (const auto &[e, c] : terms_) {
      Exponents ne(e.size());
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] % k != 0)
          throw NotDescendable("term of " + str() + " has exponent " +
                               std::to_string(e[i]) + " not divisible by " +
                               std::to_string(k));
        ne[i] = e[i] / k;
      }
      r.add_term(std::move(ne), c);
    }
    r.homogeneous_flag_ = homogeneous_flag_;
    return r;
  }

  /// Same terms over a different variable naming.
  SparsePoly rename(std::vector<std::string> new_vars) const {
    if (new_vars.size() != vars_.size())
      throw BadInput("rename: variable count mismatch");
    SparsePoly r = *this;
    r.vars_ = std::move(new_vars);
    return r;
  }

  template <class Other, class F> SparsePoly<Other> map_coefficients(F f) const {
    SparsePoly<Other> r(vars_);
    for (const auto &[e, c] : terms_)
      r.add_term(e, f(c));
    return homogeneous_flag_ && !r.is_zero() ? r.as_homogeneous() : r;
  }

  /// Canonical text: terms in descending grlex order joined by " + ", each
  /// "p/q" or "p/q*v^e*...". Zero exponents are omitted; "0" is zero.
  std::string str() const {
    if (terms_.empty())
      return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      if (!s.empty())
        s += " + ";
      s += scalar_text(it->second);
      for (std::size_t i = 0; i < vars_.size(); ++i)
        if (it->first[i] > 0)
          s += "*" + vars_[i] + "^" + std::to_string(it->first[i]);
    }
    return s;
  }

  /// Rescales so that the coefficients are coprime integers with a positive
  /// leading (grlex-largest) coefficient. Only meaningful over Rational.
  SparsePoly normalized() const
    requires std::same_as<Scalar, Rational>
  {
    if (terms_.empty())
      return *this;
    BigInt g = 0, l = 1;
    for (const auto &[e, c] : terms_) {
      g = boost::multiprecision::gcd(g, numerator_of(c));
      l = boost::multiprecision::lcm(l, denominator_of(c));
    }
    Rational factor(l, g);
    if (terms_.rbegin()->second < 0)
      factor = -factor;
    SparsePoly r = factor * *this;
    r.homogeneous_flag_ = homogeneous_flag_;
    return r;
  }

private:
  static bool is_zero_scalar(const Scalar &c) { return pencil::is_zero(c); }
  static std::string scalar_text(const Scalar &c) { return pencil::to_string(c); }

  void check_compatible(const SparsePoly &o) const {
    if (vars_ != o.vars_)
      throw BadInput("polynomials over different variable lists");
  }

  std::vector<std::string> vars_;
  Terms terms_;
  bool homogeneous_flag_ = false;
};

using RationalPoly = SparsePoly<Rational>;
using CyclotomicPoly = SparsePoly<Cyclotomic>;

inline CyclotomicPoly to_cyclotomic(const RationalPoly &p) {
  return p.map_coefficients<Cyclotomic>(
      [](const Rational &c) { return Cyclotomic(c); });
}

/// Inverse of to_cyclotomic; throws InternalNonRational on an irrational
/// coefficient.
inline RationalPoly to_rational(const CyclotomicPoly &p) {
  return p.map_coefficients<Rational>(
      [](const Cyclotomic &c) { return c.rational_value(); });
}

/// Parses the canonical text form over the given variables. Also accepts
/// arbitrary spaces, "-" between terms, a missing coefficient, a bare integer
/// coefficient and "v" for "v^1".
inline RationalPoly parse_poly(std::string_view raw,
                               const std::vector<std::string> &vars) {
  std::string compact;
  for (char ch : raw)
    if (!std::isspace(static_cast<unsigned char>(ch)))
      compact += ch;
  const std::string_view text = compact;
  RationalPoly p(vars);
  if (text == "0")
    return p;
  if (text.empty())
    throw ParseError("empty polynomial text");
  // A sign starts a new term unless it follows an operator.
  std::vector<std::string_view> terms;
  std::size_t start = 0;
  for (std::size_t i = 1; i <= text.size(); ++i) {
    bool boundary = i == text.size();
    if (!boundary && (text[i] == '+' || text[i] == '-'))
      boundary = std::string_view("+-/*^").find(text[i - 1]) == std::string_view::npos;
    if (!boundary)
      continue;
    terms.push_back(text.substr(start, i - start));
    start = (i < text.size() && text[i] == '+') ? i + 1 : i;
  }
  if (!text.empty() && text.front() == '+')
    terms.front().remove_prefix(1);
  for (auto term : terms) {
    if (term.empty())
      throw ParseError("empty term in '" + std::string(text) + "'");
    Rational coeff(1);
    bool negate = false;
    if (term.front() == '-' &&
        (term.size() < 2 || !(term[1] >= '0' && term[1] <= '9'))) {
      negate = true;
      term.remove_prefix(1);
    }
    Exponents e(vars.size(), 0);
    bool first = true;
    std::size_t s = 0;
    while (s <= term.size()) {
      auto star = term.find('*', s);
      auto factor = term.substr(s, star == std::string_view::npos
                                       ? std::string_view::npos
                                       : star - s);
      if (factor.empty())
        throw ParseError("empty factor in '" + std::string(term) + "'");
      bool numeric = (factor[0] >= '0' && factor[0] <= '9') || factor[0] == '-';
      if (first && numeric) {
        coeff = parse_rational(factor);
      } else {
        auto caret = factor.find('^');
        auto name = factor.substr(0, caret);
        auto idx = std::find(vars.begin(), vars.end(), name);
        if (idx == vars.end())
          throw ParseError("unknown variable '" + std::string(name) + "'");
        std::uint32_t exp = 1;
        if (caret != std::string_view::npos) {
          auto digits = factor.substr(caret + 1);
          if (digits.empty() ||
              !std::all_of(digits.begin(), digits.end(),
                           [](char ch) { return ch >= '0' && ch <= '9'; }))
            throw ParseError("bad exponent in '" + std::string(factor) + "'");
          exp = static_cast<std::uint32_t>(std::stoul(std::string(digits)));
        }
        e[idx - vars.begin()] += exp;
      }
      first = false;
      if (star == std::string_view::npos)
        break;
      s = star + 1;
    }
    p.add_term(std::move(e), negate ? -coeff : coeff);
  }
  return p;
}

namespace detail {

/// Univariate polynomial over a field, lowest degree first, trimmed.
template <class Scalar> using Dense = std::vector<Scalar>;

template <class Scalar> void trim_dense(Dense<Scalar> &p) {
  while (!p.empty() && pencil::is_zero(p.back()))
    p.pop_back();
}

template <class Scalar>
Dense<Scalar> dense_remainder(Dense<Scalar> a, const Dense<Scalar> &b) {
  trim_dense(a);
  while (a.size() >= b.size() && !a.empty()) {
    Scalar c = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t j = 0; j < b.size(); ++j)
      a[shift + j] -= c * b[j];
    trim_dense(a);
  }
  return a;
}

template <class Scalar>
Dense<Scalar> dense_gcd(Dense<Scalar> a, Dense<Scalar> b) {
  trim_dense(a);
  trim_dense(b);
  while (!b.empty()) {
    auto r = dense_remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Scalar lead = a.back();
    for (auto &c : a)
      c /= lead;
  }
  return a;
}

} // namespace detail

/// Monic gcd of a list of binary forms in two variables (x, y). Each nonzero
/// form F is split as y^k * F(x, 1) homogenized; the y-power and the
/// univariate parts are combined separately. Zero forms are ignored.
template <class Scalar>
SparsePoly<Scalar> binary_form_gcd(const std::vector<SparsePoly<Scalar>> &forms) {
  if (forms.empty())
    throw BadInput("binary_form_gcd of an empty list");
  const auto &vars = forms.front().vars();
  if (vars.size() != 2)
    throw BadInput("binary_form_gcd requires two variables");
  std::optional<std::uint32_t> y_power;
  std::optional<detail::Dense<Scalar>> g;
  for (const auto &f : forms) {
    if (f.is_zero())
      continue;
    auto n = f.homogeneous_degree();
    if (!n)
      throw NotHomogeneous("binary_form_gcd input " + f.str());
    detail::Dense<Scalar> dehom(*n + 1, Scalar(0));
    for (const auto &[e, c] : f.terms())
      dehom[e[0]] += c;
    detail::trim_dense(dehom);
    std::uint32_t k = *n - static_cast<std::uint32_t>(dehom.size() - 1);
    y_power = y_power ? std::min(*y_power, k) : k;
    g = g ? detail::dense_gcd(*g, dehom) : detail::dense_gcd(dehom, {});
  }
  if (!g)
    return SparsePoly<Scalar>(vars);
  SparsePoly<Scalar> out(vars);
  for (std::size_t i = 0; i < g->size(); ++i) {
    std::uint32_t xi = static_cast<std::uint32_t>(i);
    std::uint32_t yi = static_cast<std::uint32_t>(g->size() - 1 - i) + *y_power;
    out.add_term({xi, yi}, (*g)[i]);
  }
  return out;
}

} // namespace pencil

#endif // PENCIL_EXACTALG_POLY_HPP
