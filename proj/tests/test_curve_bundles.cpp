// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <algorithm>
#include <random>

#include "hnbound/curve_bundles.hpp"
#include "hnbound/errors.hpp"

using namespace hnb;

namespace {

SplitBundle random_bundle(std::mt19937_64& rng, int max_rank = 10, long span = 10) {
  std::uniform_int_distribution<int> rank(1, max_rank);
  std::uniform_int_distribution<long> twist(-span, span);
  std::vector<long> t(rank(rng));
  for (auto& x : t) x = twist(rng);
  return SplitBundle(t);
}

HNType hn(std::vector<std::pair<long, long>> segs) {
  std::vector<HNSegment> s;
  for (auto& [r, q] : segs) s.push_back({r, Scalar(q)});
  return HNType::make(std::move(s));
}

}  // namespace

TEST_CASE("h0 examples") {
  CHECK(h0(SplitBundle({2, 0, -3})) == 4);
  CHECK(h0(SplitBundle({-1})) == 0);
  CHECK(h0(SplitBundle({0, 0})) == 2);
  CHECK_THROWS_AS(SplitBundle({}), InvalidArgument);
}

TEST_CASE("hn_type of a split bundle") {
  CHECK(hn_type(SplitBundle({2, 2, -3})) == hn({{2, 2}, {1, -3}}));
  CHECK(hn_type(SplitBundle({0})) == hn({{1, 0}}));
  CHECK(exactly_equal(deg_plus(hn_type(SplitBundle({2, 0, -3}))), Scalar(2)));
}

TEST_CASE("tensor and minima examples") {
  CHECK(tensor(SplitBundle({1, -1}), SplitBundle({2})) == SplitBundle({3, 1}));
  CHECK(tensor(SplitBundle({0}), SplitBundle({0})) == SplitBundle({0}));
  auto m = minima(SplitBundle({0, -3, 2}));
  REQUIRE(m.size() == 3);
  CHECK(exactly_equal(m[0], Scalar(2)));
  CHECK(exactly_equal(m[1], Scalar(0)));
  CHECK(exactly_equal(m[2], Scalar(-3)));
}

TEST_CASE("h0_interval cases") {
  auto [a_lo, a_hi] = h0_interval(hn({{2, -1}}), CurveContext(5));
  CHECK(exactly_equal(a_lo, Scalar(0)));
  CHECK(exactly_equal(a_hi, Scalar(0)));
  auto [b_lo, b_hi] = h0_interval(hn({{2, 3}}), CurveContext(0));
  CHECK(exactly_equal(b_lo, Scalar(8)));
  CHECK(exactly_equal(b_hi, Scalar(8)));
  auto [c_lo, c_hi] = h0_interval(hn({{1, 5}, {1, -2}}), CurveContext(2));
  CHECK(exactly_equal(c_lo, Scalar(3)));
  CHECK(exactly_equal(c_hi, Scalar(7)));
  CHECK_THROWS_AS(CurveContext(-1), InvalidArgument);
}

TEST_CASE("exactness on P^1 over random split bundles") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 1000; ++i) {
    SplitBundle b = random_bundle(rng);
    HNType h = hn_type(b);
    const long h0b = h0(b);
    auto [lo, hi] = h0_interval(h, CurveContext(0));
    CHECK(certainly_le(lo, Scalar(h0b)));
    CHECK(certainly_le(Scalar(h0b), hi));
    const long nonneg = std::count_if(b.twists().begin(), b.twists().end(), [](long a) { return a >= 0; });
    CHECK(Rational(h0b) - deg_plus(h).exact() == nonneg);
    // Serre duality with omega = O(-2).
    CHECK(h0b - h0(b.dual().twisted(-2)) == b.degree() + b.rank());
    // minima
    auto m = minima(b);
    CHECK(exactly_equal(m[0], slope_extremes(h).first));
    Scalar pos = 0;
    for (auto& x : m) pos += max(x, Scalar(0));
    CHECK(exactly_equal(pos, deg_plus(h)));
    std::vector<long> shuffled = b.twists();
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    auto m2 = minima(SplitBundle(shuffled));
    for (std::size_t k = 0; k < m.size(); ++k) CHECK(exactly_equal(m[k], m2[k]));
    auto shifted = minima(tensor(b, SplitBundle({3})));
    for (std::size_t k = 0; k < m.size(); ++k) CHECK(exactly_equal(shifted[k], m[k] + Scalar(3)));
  }
}

TEST_CASE("trivial bundles have h0 equal to rank") {
  for (int r = 1; r <= 10; ++r) CHECK(h0(SplitBundle(std::vector<long>(r, 0))) == r);
}

TEST_CASE("tensor commutes with hn_type") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 500; ++i) {
    SplitBundle a = random_bundle(rng, 5), b = random_bundle(rng, 5);
    CHECK(hn_type(tensor(a, b)) == tensor(hn_type(a), hn_type(b)));
  }
}

TEST_CASE("h0_interval is well ordered for any genus") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 300; ++i) {
    HNType h = hn_type(random_bundle(rng));
    for (long g = 0; g <= 4; ++g) {
      auto [lo, hi] = h0_interval(h, CurveContext(g));
      CHECK(certainly_le(Scalar(0), lo));
      CHECK(certainly_le(lo, hi));
    }
  }
}
