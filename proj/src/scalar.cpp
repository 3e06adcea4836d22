// SPDX-License-Identifier: Apache-2.0
#include "hnbound/scalar.hpp"

#include <mpfr.h>

#include <cctype>
#include <cmath>
#include <cstdio>
#include <limits>

#include "hnbound/errors.hpp"

namespace hnb {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double next_down(double x) { return std::nextafter(x, -kInf); }
double next_up(double x) { return std::nextafter(x, kInf); }

void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) throw InvalidArgument(std::string("non-finite interval endpoint in ") + what);
}

// Directed-rounding primitives built from error-free transformations: the
// sign of the exact rounding error decides whether the rounded result already
// bounds the true value from the requested side.
double add_down(double a, double b) {
  double s = a + b;
  double bb = s - a;
  double err = (a - (s - bb)) + (b - bb);
  return err < 0 ? next_down(s) : s;
}
double add_up(double a, double b) {
  double s = a + b;
  double bb = s - a;
  double err = (a - (s - bb)) + (b - bb);
  return err > 0 ? next_up(s) : s;
}
double mul_down(double a, double b) {
  double p = a * b;
  double err = std::fma(a, b, -p);
  return err < 0 ? next_down(p) : p;
}
double mul_up(double a, double b) {
  double p = a * b;
  double err = std::fma(a, b, -p);
  return err > 0 ? next_up(p) : p;
}
// a/b = q + r/b with r = a - q*b computed exactly by fma.
double div_down(double a, double b) {
  double q = a / b;
  double r = std::fma(-q, b, a);
  bool below = (r > 0) != (b > 0);  // true value < q
  return (r != 0 && below) ? next_down(q) : q;
}
double div_up(double a, double b) {
  double q = a / b;
  double r = std::fma(-q, b, a);
  bool above = (r > 0) == (b > 0);
  return (r != 0 && above) ? next_up(q) : q;
}
double sqrt_down(double x) {
  double s = std::sqrt(x);
  double r = std::fma(-s, s, x);
  return r < 0 ? next_down(s) : s;
}
double sqrt_up(double x) {
  double s = std::sqrt(x);
  double r = std::fma(-s, s, x);
  return r > 0 ? next_up(s) : s;
}

class Mpfr {
 public:
  Mpfr() { mpfr_init2(v_, 53); }
  ~Mpfr() { mpfr_clear(v_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

double rational_to_double(const Rational& q, mpfr_rnd_t rnd) {
  Mpfr x;
  mpfr_set_q(x.get(), q.get_mpq_t(), rnd);
  return mpfr_get_d(x.get(), rnd);
}

using UnaryMpfr = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);

double apply(UnaryMpfr f, double x, mpfr_rnd_t rnd) {
  Mpfr in, out;
  mpfr_set_d(in.get(), x, MPFR_RNDN);  // exact: 53-bit input
  f(out.get(), in.get(), rnd);
  return mpfr_get_d(out.get(), rnd);
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string t;
  for (char c : text)
    if (c != ' ') t.push_back(c);
  if (t.empty()) throw InvalidArgument("empty rational literal");
  if (t[0] == '+') t.erase(0, 1);
  for (char c : t) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-'))
      throw InvalidArgument("malformed rational literal '" + text + "'");
  }
  Rational q;
  if (q.set_str(t, 10) != 0) throw InvalidArgument("malformed rational literal '" + text + "'");
  if (q.get_den() == 0) throw InvalidArgument("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

Interval::Interval(double lo, double hi) : lo_(lo), hi_(hi) {
  require_finite(lo, "Interval");
  require_finite(hi, "Interval");
  if (lo > hi) throw InvalidArgument("interval with lo > hi");
}

Interval Interval::point(double x) { return Interval(x, x); }

Interval Interval::from_rational(const Rational& q) {
  return Interval(rational_to_double(q, MPFR_RNDD), rational_to_double(q, MPFR_RNDU));
}

Interval& Interval::operator+=(const Interval& o) {
  *this = Interval(add_down(lo_, o.lo_), add_up(hi_, o.hi_));
  return *this;
}

Interval& Interval::operator-=(const Interval& o) {
  *this = Interval(add_down(lo_, -o.hi_), add_up(hi_, -o.lo_));
  return *this;
}

Interval& Interval::operator*=(const Interval& o) {
  const double a[2] = {lo_, hi_};
  const double b[2] = {o.lo_, o.hi_};
  double lo = kInf, hi = -kInf;
  for (double x : a)
    for (double y : b) {
      lo = std::min(lo, mul_down(x, y));
      hi = std::max(hi, mul_up(x, y));
    }
  *this = Interval(lo, hi);
  return *this;
}

Interval& Interval::operator/=(const Interval& o) {
  if (o.lo_ <= 0 && o.hi_ >= 0) throw InvalidArgument("interval division by an enclosure of zero");
  const double a[2] = {lo_, hi_};
  const double b[2] = {o.lo_, o.hi_};
  double lo = kInf, hi = -kInf;
  for (double x : a)
    for (double y : b) {
      lo = std::min(lo, div_down(x, y));
      hi = std::max(hi, div_up(x, y));
    }
  *this = Interval(lo, hi);
  return *this;
}

Interval pi_interval() {
  Mpfr x;
  mpfr_const_pi(x.get(), MPFR_RNDD);
  double lo = mpfr_get_d(x.get(), MPFR_RNDD);
  mpfr_const_pi(x.get(), MPFR_RNDU);
  double hi = mpfr_get_d(x.get(), MPFR_RNDU);
  return Interval(lo, hi);
}

Interval ln(const Rational& q) {
  if (q <= 0) throw InvalidArgument("ln of a non-positive rational");
  Mpfr x, y;
  mpfr_set_q(x.get(), q.get_mpq_t(), MPFR_RNDD);
  mpfr_log(y.get(), x.get(), MPFR_RNDD);
  double lo = mpfr_get_d(y.get(), MPFR_RNDD);
  mpfr_set_q(x.get(), q.get_mpq_t(), MPFR_RNDU);
  mpfr_log(y.get(), x.get(), MPFR_RNDU);
  double hi = mpfr_get_d(y.get(), MPFR_RNDU);
  return Interval(lo, hi);
}

Interval ln(const Interval& x) {
  if (x.lo() <= 0) throw InvalidArgument("ln of an interval reaching zero");
  return Interval(apply(mpfr_log, x.lo(), MPFR_RNDD), apply(mpfr_log, x.hi(), MPFR_RNDU));
}

Interval exp(const Interval& x) {
  return Interval(apply(mpfr_exp, x.lo(), MPFR_RNDD), apply(mpfr_exp, x.hi(), MPFR_RNDU));
}

Interval sqrt(const Interval& x) {
  if (x.hi() < 0) throw InvalidArgument("sqrt of a negative interval");
  return Interval(x.lo() <= 0 ? 0.0 : sqrt_down(x.lo()), sqrt_up(x.hi()));
}

Interval abs(const Interval& x) {
  if (x.lo() >= 0) return x;
  if (x.hi() <= 0) return -x;
  return Interval(0.0, std::max(-x.lo(), x.hi()));
}

Interval max(const Interval& a, const Interval& b) {
  return Interval(std::max(a.lo(), b.lo()), std::max(a.hi(), b.hi()));
}

Interval lgamma(const Rational& x) {
  if (x < frac(1, 2)) throw InvalidArgument("lgamma enclosure requires x >= 1/2");
  Interval enc = Interval::from_rational(x);
  auto lg = [](double v, mpfr_rnd_t rnd) {
    Mpfr in, out;
    mpfr_set_d(in.get(), v, MPFR_RNDN);
    mpfr_lngamma(out.get(), in.get(), rnd);
    return mpfr_get_d(out.get(), rnd);
  };
  if (enc.is_point()) return Interval(lg(enc.lo(), MPFR_RNDD), lg(enc.hi(), MPFR_RNDU));
  // lnGamma increases on [2, inf); below that only exact dyadic arguments are supported.
  if (enc.lo() < 2) throw InvalidArgument("lgamma of a non-dyadic argument below 2");
  return Interval(lg(enc.lo(), MPFR_RNDD), lg(enc.hi(), MPFR_RNDU));
}

Interval ln_factorial(long n) {
  if (n < 0) throw InvalidArgument("factorial of a negative integer");
  if (n <= 1) return Interval::point(0.0);
  return lgamma(Rational(n + 1));
}

const Rational& Scalar::exact() const {
  if (!is_exact()) throw InvalidArgument("exact rational required, got interval " + to_string());
  return std::get<Rational>(value_);
}

Interval Scalar::enclosure() const {
  if (is_exact()) return Interval::from_rational(std::get<Rational>(value_));
  return std::get<Interval>(value_);
}

Scalar Scalar::operator-() const {
  if (is_exact()) return Scalar(Rational(-std::get<Rational>(value_)));
  return Scalar(-std::get<Interval>(value_));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (is_exact() && o.is_exact())
    std::get<Rational>(value_) += std::get<Rational>(o.value_);
  else
    value_ = enclosure() + o.enclosure();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  if (is_exact() && o.is_exact())
    std::get<Rational>(value_) -= std::get<Rational>(o.value_);
  else
    value_ = enclosure() - o.enclosure();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_exact() && o.is_exact())
    std::get<Rational>(value_) *= std::get<Rational>(o.value_);
  else
    value_ = enclosure() * o.enclosure();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (is_exact() && o.is_exact()) {
    if (std::get<Rational>(o.value_) == 0) throw InvalidArgument("division by zero");
    std::get<Rational>(value_) /= std::get<Rational>(o.value_);
  } else {
    value_ = enclosure() / o.enclosure();
  }
  return *this;
}

std::string Scalar::to_string() const {
  if (is_exact()) return hnb::to_string(std::get<Rational>(value_));
  const Interval& x = std::get<Interval>(value_);
  return "[" + format_double(x.lo()) + ", " + format_double(x.hi()) + "]";
}

std::optional<std::strong_ordering> compare(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) {
    int c = cmp(a.exact(), b.exact());
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
  Interval x = a.enclosure(), y = b.enclosure();
  if (x.hi() < y.lo()) return std::strong_ordering::less;
  if (x.lo() > y.hi()) return std::strong_ordering::greater;
  if (x.is_point() && y.is_point() && x.lo() == y.lo()) return std::strong_ordering::equal;
  return std::nullopt;
}

std::strong_ordering compare_or_throw(const Scalar& a, const Scalar& b) {
  auto c = compare(a, b);
  if (!c) throw Undecided("cannot order " + a.to_string() + " and " + b.to_string());
  return *c;
}

bool certainly_le(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) return a.exact() <= b.exact();
  return a.enclosure().hi() <= b.enclosure().lo();
}

bool certainly_lt(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) return a.exact() < b.exact();
  return a.enclosure().hi() < b.enclosure().lo();
}

bool exactly_equal(const Scalar& a, const Scalar& b) {
  auto c = compare(a, b);
  return c && *c == std::strong_ordering::equal;
}

Scalar max(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) return a.exact() >= b.exact() ? a : b;
  return Scalar(max(a.enclosure(), b.enclosure()));
}

Scalar abs(const Scalar& a) {
  if (a.is_exact()) {
    Rational r = a.exact();
    if (r < 0) r = -r;
    return Scalar(std::move(r));
  }
  return Scalar(abs(a.enclosure()));
}

double lower(const Scalar& s) {
  return s.is_exact() ? rational_to_double(s.exact(), MPFR_RNDD) : s.enclosure().lo();
}

double upper(const Scalar& s) {
  return s.is_exact() ? rational_to_double(s.exact(), MPFR_RNDU) : s.enclosure().hi();
}

}  // namespace hnb
