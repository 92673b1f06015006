#ifndef PENCIL_EXACTALG_CYCLOTOMIC_HPP
#define PENCIL_EXACTALG_CYCLOTOMIC_HPP

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "pencil/errors.hpp"
#include "pencil/exactalg/rational.hpp"

namespace pencil {

namespace qpoly {

/// Dense univariate polynomial over Q, lowest degree first, no trailing zeros.
using Poly = std::vector<Rational>;

inline void trim(Poly &p) {
  while (!p.empty() && p.back().is_zero())
    p.pop_back();
}

inline int degree(const Poly &p) { return static_cast<int>(p.size()) - 1; }

inline Poly sub(const Poly &a, const Poly &b) {
  Poly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i)
    r[i] -= b[i];
  trim(r);
  return r;
}

inline Poly mul(const Poly &a, const Poly &b) {
  if (a.empty() || b.empty())
    return {};
  Poly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero())
      continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

/// Euclidean division; returns {quotient, remainder}.
inline std::pair<Poly, Poly> divmod(Poly a, const Poly &b) {
  if (b.empty())
    throw std::domain_error("polynomial division by zero");
  trim(a);
  if (a.size() < b.size())
    return {{}, a};
  Poly q(a.size() - b.size() + 1);
  const Rational &lead = b.back();
  for (int k = degree(a) - degree(b); k >= 0; --k) {
    Rational c = a[k + b.size() - 1] / lead;
    q[k] = c;
    if (c.is_zero())
      continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      a[k + j] -= c * b[j];
  }
  trim(a);
  trim(q);
  return {q, a};
}

/// Returns s with s*a = 1 mod m, for a coprime to m.
inline Poly inverse_mod(const Poly &a, const Poly &m) {
  // Extended Euclid keeping only the Bezout coefficient of a.
  Poly r0 = m, r1 = a, s0 = {}, s1 = {Rational(1)};
  trim(r1);
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1);
    Poly s = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.size() != 1)
    throw std::domain_error("element is not invertible modulo the polynomial");
  Rational c = r0[0];
  for (auto &x : s0)
    x /= c;
  return divmod(s0, m).second;
}

} // namespace qpoly

/// The n-th cyclotomic polynomial, from x^n - 1 = prod_{e | n} Phi_e(x).
inline const qpoly::Poly &cyclotomic_polynomial(int n) {
  if (n < 1)
    throw BadInput("cyclotomic conductor must be positive, got " +
                   std::to_string(n));
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<qpoly::Poly>> cache;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end())
      return *it->second;
  }
  qpoly::Poly p(n + 1);
  p[0] = -1;
  p[n] = 1;
  for (int e = 1; e < n; ++e)
    if (n % e == 0)
      p = qpoly::divmod(p, cyclotomic_polynomial(e)).first;
  std::lock_guard<std::mutex> lock(mutex);
  auto &slot = cache[n];
  if (!slot)
    slot = std::make_unique<qpoly::Poly>(std::move(p));
  return *slot;
}

inline int euler_phi(int n) {
  return qpoly::degree(cyclotomic_polynomial(n));
}

/// Element of Q(zeta_d) = Q[x]/(Phi_d), stored as its reduced representative
/// in the power basis 1, x, ..., x^(phi(d)-1). Values of different conductors
/// combine in Q(zeta_lcm).
class Cyclotomic {
public:
  Cyclotomic() : conductor_(1), coeffs_(1) {}
  Cyclotomic(const Rational &q) : conductor_(1), coeffs_{q} {}
  Cyclotomic(int q) : Cyclotomic(Rational(q)) {}

  /// Builds the reduction of sum coeffs[i] x^i; any length is accepted.
  static Cyclotomic from_coefficients(int conductor, qpoly::Poly coeffs) {
    Cyclotomic c;
    c.conductor_ = conductor;
    c.coeffs_ = reduce(std::move(coeffs), conductor);
    return c;
  }

  /// The primitive root exp(2 pi i / d), i.e. the class of x.
  static Cyclotomic zeta(int conductor) {
    return from_coefficients(conductor, {Rational(0), Rational(1)});
  }

  int conductor() const { return conductor_; }
  const qpoly::Poly &coefficients() const { return coeffs_; }

  bool is_zero() const {
    for (const auto &c : coeffs_)
      if (!c.is_zero())
        return false;
    return true;
  }

  bool is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
      if (!coeffs_[i].is_zero())
        return false;
    return true;
  }

  Rational rational_value() const {
    if (!is_rational())
      throw InternalNonRational("value " + str() + " is not rational");
    return coeffs_[0];
  }

  /// Re-expresses this value in Q(zeta_target); conductor must divide target.
  Cyclotomic embed(int target) const {
    if (target % conductor_ != 0)
      throw BadInput("cannot embed conductor " + std::to_string(conductor_) +
                     " into " + std::to_string(target));
    if (target == conductor_)
      return *this;
    int step = target / conductor_;
    qpoly::Poly lifted(step * (coeffs_.size() - 1) + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      lifted[i * step] = coeffs_[i];
    return from_coefficients(target, std::move(lifted));
  }

  Cyclotomic operator-() const {
    Cyclotomic r = *this;
    for (auto &c : r.coeffs_)
      c = -c;
    return r;
  }

  friend Cyclotomic operator+(const Cyclotomic &a, const Cyclotomic &b) {
    auto [x, y] = common(a, b);
    for (std::size_t i = 0; i < x.coeffs_.size(); ++i)
      x.coeffs_[i] += y.coeffs_[i];
    return x;
  }
  friend Cyclotomic operator-(const Cyclotomic &a, const Cyclotomic &b) {
    return a + (-b);
  }
  friend Cyclotomic operator*(const Cyclotomic &a, const Cyclotomic &b) {
    auto [x, y] = common(a, b);
    return from_coefficients(x.conductor_, qpoly::mul(x.coeffs_, y.coeffs_));
  }
  friend Cyclotomic operator/(const Cyclotomic &a, const Cyclotomic &b) {
    return a * b.inverse();
  }
  Cyclotomic &operator+=(const Cyclotomic &o) { return *this = *this + o; }
  Cyclotomic &operator-=(const Cyclotomic &o) { return *this = *this - o; }
  Cyclotomic &operator*=(const Cyclotomic &o) { return *this = *this * o; }
  Cyclotomic &operator/=(const Cyclotomic &o) { return *this = *this / o; }

  Cyclotomic inverse() const {
    if (is_zero())
      throw std::domain_error("division by zero in cyclotomic field");
    qpoly::Poly a = coeffs_;
    qpoly::trim(a);
    return from_coefficients(
        conductor_, qpoly::inverse_mod(a, cyclotomic_polynomial(conductor_)));
  }

  friend bool operator==(const Cyclotomic &a, const Cyclotomic &b) {
    auto [x, y] = common(a, b);
    return x.coeffs_ == y.coeffs_;
  }

  /// "[c0,c1,...]@d" with each c in "p/q" form.
  std::string str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (i)
        s += ",";
      s += to_string(coeffs_[i]);
    }
    return s + "]@" + std::to_string(conductor_);
  }

private:
  static qpoly::Poly reduce(qpoly::Poly p, int conductor) {
    const auto &phi = cyclotomic_polynomial(conductor);
    qpoly::trim(p);
    if (!p.empty())
      p = qpoly::divmod(std::move(p), phi).second;
    p.resize(qpoly::degree(phi));
    return p;
  }

  static std::pair<Cyclotomic, Cyclotomic> common(const Cyclotomic &a,
                                                  const Cyclotomic &b) {
    int l = std::lcm(a.conductor_, b.conductor_);
    return {a.embed(l), b.embed(l)};
  }

  int conductor_;
  qpoly::Poly coeffs_;
};

inline bool is_zero(const Cyclotomic &c) { return c.is_zero(); }
inline std::string to_string(const Cyclotomic &c) { return c.str(); }

} // namespace pencil

#endif // PENCIL_EXACTALG_CYCLOTOMIC_HPP
