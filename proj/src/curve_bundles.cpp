// SPDX-License-Identifier: Apache-2.0
#include "hnbound/curve_bundles.hpp"

#include <algorithm>
#include <functional>

#include "hnbound/errors.hpp"

namespace hnb {

SplitBundle::SplitBundle(std::vector<long> twists) : twists_(std::move(twists)) {
  if (twists_.empty()) throw InvalidArgument("split bundle needs at least one summand");
  std::sort(twists_.begin(), twists_.end(), std::greater<>());
}

long SplitBundle::degree() const {
  long d = 0;
  for (long a : twists_) d += a;
  return d;
}

SplitBundle SplitBundle::dual() const {
  std::vector<long> t;
  t.reserve(twists_.size());
  for (long a : twists_) t.push_back(-a);
  return SplitBundle(std::move(t));
}

SplitBundle SplitBundle::twisted(long c) const {
  std::vector<long> t = twists_;
  for (long& a : t) a += c;
  return SplitBundle(std::move(t));
}

CurveContext::CurveContext(long g) : genus(g) {
  if (g < 0) throw InvalidArgument("genus must be nonnegative");
}

long h0(const SplitBundle& b) {
  long total = 0;
  for (long a : b.twists()) total += std::max(a + 1, 0L);
  return total;
}

HNType hn_type(const SplitBundle& b) {
  std::vector<HNSegment> segs;
  for (long a : b.twists()) segs.push_back({1, Scalar(a)});
  return HNType::make(std::move(segs));
}

SplitBundle tensor(const SplitBundle& a, const SplitBundle& b) {
  std::vector<long> t;
  t.reserve(a.twists().size() * b.twists().size());
  for (long x : a.twists())
    for (long y : b.twists()) t.push_back(x + y);
  return SplitBundle(std::move(t));
}

std::vector<Scalar> minima(const SplitBundle& b) {
  std::vector<Scalar> out;
  out.reserve(b.twists().size());
  for (long a : b.twists()) out.emplace_back(a);
  return out;
}

std::pair<Scalar, Scalar> h0_interval(const HNType& h, const CurveContext& ctx) {
  if (!h.is_exact()) throw InvalidArgument("h0_interval requires exact slopes");
  const Rational g = ctx.genus;
  const Rational r = h.rank();
  const Rational deg = h.degree().exact();
  const Rational dplus = deg_plus(h).exact();
  const auto [mu_max_s, mu_min_s] = slope_extremes(h);
  const Rational& mu_max = mu_max_s.exact();
  const Rational& mu_min = mu_min_s.exact();

  const Rational spread = r * std::max(Rational(ctx.genus - 1), Rational(1));
  Rational lo = std::max(Rational(0), Rational(dplus - spread));
  Rational hi = dplus + spread;

  auto intersect = [&](const Rational& a, const Rational& b) {
    lo = std::max(lo, a);
    hi = std::min(hi, b);
  };
  if (mu_max < 0) intersect(0, 0);
  if (mu_min > 2 * g - 2) {
    Rational exact_value = deg + r * (1 - g);
    intersect(exact_value, exact_value);
  }
  if (mu_min > 0) {
    Rational gap = r * g - r;
    if (gap < 0) gap = -gap;
    intersect(deg - gap, deg + gap);
  }
  return {Scalar(lo), Scalar(hi)};
}

}  // namespace hnb
