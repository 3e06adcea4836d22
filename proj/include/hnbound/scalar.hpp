// SPDX-License-Identifier: Apache-2.0
//
// Exact rationals and certified real intervals behind one value type.
//
// Rational mode is GMP's mpq_class and never rounds. Interval mode stores two
// doubles [lo, hi]; every arithmetic result is widened outward by one ulp on
// each side, and transcendental endpoints (ln, exp, lnGamma, pi) come from
// MPFR with directed rounding, so the enclosure always contains the true
// value.
#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <string>
#include <variant>

namespace hnb {

using Rational = mpq_class;
using Integer = mpz_class;

/// p / q in canonical form.
inline Rational frac(const Integer& p, const Integer& q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

/// Parses "p/q", "p" or a decimal-free integer string; canonicalizes.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

class Interval {
 public:
  Interval() = default;
  Interval(double lo, double hi);

  static Interval point(double x);
  /// Tightest double enclosure of an exact rational.
  static Interval from_rational(const Rational& q);

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  double width() const { return hi_ - lo_; }
  double mid() const { return 0.5 * (lo_ + hi_); }
  bool contains(double x) const { return lo_ <= x && x <= hi_; }
  bool is_point() const { return lo_ == hi_; }

  Interval operator-() const { return Interval(-hi_, -lo_); }
  Interval& operator+=(const Interval& o);
  Interval& operator-=(const Interval& o);
  Interval& operator*=(const Interval& o);
  Interval& operator/=(const Interval& o);

  friend Interval operator+(Interval a, const Interval& b) { return a += b; }
  friend Interval operator-(Interval a, const Interval& b) { return a -= b; }
  friend Interval operator*(Interval a, const Interval& b) { return a *= b; }
  friend Interval operator/(Interval a, const Interval& b) { return a /= b; }

 private:
  double lo_ = 0.0;
  double hi_ = 0.0;
};

Interval pi_interval();
/// ln of a positive rational, endpoints correctly rounded outward.
Interval ln(const Rational& q);
Interval ln(const Interval& x);
Interval exp(const Interval& x);
Interval sqrt(const Interval& x);
Interval abs(const Interval& x);
Interval max(const Interval& a, const Interval& b);
/// ln Gamma(x) for an exact argument x >= 1/2 (half-integers and integers in practice).
Interval lgamma(const Rational& x);
/// ln(n!) for n >= 0.
Interval ln_factorial(long n);

class Scalar {
 public:
  Scalar() : value_(Rational(0)) {}
  Scalar(long v) : value_(Rational(v)) {}
  Scalar(int v) : value_(Rational(v)) {}
  Scalar(Rational q) : value_(std::move(q)) { std::get<Rational>(value_).canonicalize(); }
  Scalar(Interval x) : value_(x) {}

  bool is_exact() const { return std::holds_alternative<Rational>(value_); }
  /// Throws InvalidArgument in interval mode.
  const Rational& exact() const;
  Interval enclosure() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  std::string to_string() const;

 private:
  std::variant<Rational, Interval> value_;
};

/// Certified three-way comparison. nullopt when interval enclosures overlap
/// and the order cannot be decided. Two intervals compare equal only when
/// both are the same point.
std::optional<std::strong_ordering> compare(const Scalar& a, const Scalar& b);

/// Like compare, but throws Undecided instead of returning nullopt.
std::strong_ordering compare_or_throw(const Scalar& a, const Scalar& b);

/// True only when a <= b is certified.
bool certainly_le(const Scalar& a, const Scalar& b);
bool certainly_lt(const Scalar& a, const Scalar& b);
bool exactly_equal(const Scalar& a, const Scalar& b);

/// Rigorous max/abs in both modes.
Scalar max(const Scalar& a, const Scalar& b);
Scalar abs(const Scalar& a);

/// Lower endpoint of the enclosure (the value itself, rounded down, in rational mode).
double lower(const Scalar& s);
double upper(const Scalar& s);

}  // namespace hnb
