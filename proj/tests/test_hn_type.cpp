// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "hnbound/errors.hpp"
#include "hnbound/hn_type.hpp"

using namespace hnb;

namespace {

HNType hn(std::vector<std::pair<long, Rational>> segs) {
  std::vector<HNSegment> s;
  for (auto& [r, q] : segs) s.push_back({r, Scalar(q)});
  return HNType::make(std::move(s));
}

HNType random_type(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count(1, 5), rank(1, 4);
  std::uniform_int_distribution<long> num(-30, 30), den(1, 6);
  std::vector<Rational> slopes;
  const int k = count(rng);
  for (int i = 0; i < k; ++i) slopes.emplace_back(num(rng), den(rng));
  for (auto& q : slopes) q.canonicalize();
  std::sort(slopes.begin(), slopes.end(), std::greater<>());
  slopes.erase(std::unique(slopes.begin(), slopes.end()), slopes.end());
  std::vector<HNSegment> segs;
  for (auto& q : slopes) segs.push_back({rank(rng), Scalar(q)});
  return HNType::make(std::move(segs));
}

// Slope list with multiplicity, as a plain multiset.
std::map<Rational, long> expand(const HNType& h) {
  std::map<Rational, long> m;
  for (const auto& s : h.segments()) m[s.slope.exact()] += s.rank;
  return m;
}

// Pairwise sums by a double loop over individual rank-one pieces.
std::map<Rational, long> naive_tensor(const HNType& a, const HNType& b) {
  std::vector<Rational> xs, ys;
  for (const auto& s : a.segments())
    for (long i = 0; i < s.rank; ++i) xs.push_back(s.slope.exact());
  for (const auto& s : b.segments())
    for (long i = 0; i < s.rank; ++i) ys.push_back(s.slope.exact());
  std::map<Rational, long> m;
  for (const auto& x : xs)
    for (const auto& y : ys) m[Rational(x + y)] += 1;
  return m;
}

}  // namespace

TEST_CASE("make validates and merges") {
  HNType h = hn({{2, 3}, {1, -1}});
  CHECK(h.size() == 2);
  CHECK(h.rank() == 3);
  HNType merged = hn({{1, 2}, {1, 2}});
  REQUIRE(merged.size() == 1);
  CHECK(merged.segments()[0].rank == 2);
  CHECK_THROWS_AS(hn({{1, 0}, {1, 1}}), InvalidArgument);
  CHECK_THROWS_AS(HNType::make({}), InvalidArgument);
  CHECK_THROWS_AS(hn({{0, 1}}), InvalidArgument);
  CHECK_THROWS_AS(HNType::make({{1, Scalar(Interval(0.0, 2.0))}, {1, Scalar(1)}}), Undecided);
}

TEST_CASE("polygon breakpoints") {
  Polygon p = polygon(hn({{2, 3}, {1, -1}}));
  REQUIRE(p.breakpoints.size() == 3);
  CHECK(exactly_equal(p.breakpoints[1].first, Scalar(2)));
  CHECK(exactly_equal(p.breakpoints[1].second, Scalar(6)));
  CHECK(exactly_equal(p.breakpoints[2].second, Scalar(5)));
  Polygon flat = polygon(hn({{1, 0}}));
  CHECK(exactly_equal(flat.breakpoints[1].second, Scalar(0)));
  Polygon ss = polygon(hn({{3, 1}}));
  CHECK(exactly_equal(ss.breakpoints[1].second, Scalar(3)));
}

TEST_CASE("deg_plus") {
  CHECK(exactly_equal(deg_plus(hn({{2, 3}, {1, -1}})), Scalar(6)));
  CHECK(exactly_equal(deg_plus(hn({{1, -2}})), Scalar(0)));
  CHECK(exactly_equal(deg_plus(hn({{1, 5}, {2, 0}, {1, -1}})), Scalar(5)));
}

TEST_CASE("slope extremes and dual") {
  auto [mx, mn] = slope_extremes(hn({{2, 3}, {1, -1}}));
  CHECK(exactly_equal(mx, Scalar(3)));
  CHECK(exactly_equal(mn, Scalar(-1)));
  auto [a, b] = slope_extremes(hn({{1, 0}, {1, -5}}));
  CHECK(exactly_equal(a, Scalar(0)));
  CHECK(exactly_equal(b, Scalar(-5)));
  CHECK(dual(hn({{2, 3}, {1, -1}})) == hn({{1, 1}, {2, -3}}));
  CHECK(dual(hn({{3, 0}})) == hn({{3, 0}}));
}

TEST_CASE("tensor examples") {
  CHECK(tensor(hn({{1, 1}, {1, -1}}), hn({{1, 2}})) == hn({{1, 3}, {1, 1}}));
  CHECK(tensor(hn({{1, 1}, {1, 0}}), hn({{1, 1}, {1, 0}})) == hn({{1, 2}, {2, 1}, {1, 0}}));
}

TEST_CASE("filtration rank is closed at the slope") {
  HNType h = hn({{2, 3}, {1, -1}});
  CHECK(filtration_rank(h, Scalar(0)) == 2);
  CHECK(filtration_rank(h, Scalar(3)) == 2);
  CHECK(filtration_rank(h, Scalar(4)) == 0);
  CHECK(filtration_rank(h, Scalar(-1)) == 3);
}

TEST_CASE("positive rank integral examples") {
  CHECK(exactly_equal(positive_rank_integral(hn({{2, 3}, {1, -1}})), Scalar(6)));
  CHECK(exactly_equal(positive_rank_integral(hn({{1, -2}})), Scalar(0)));
}

TEST_CASE("slope measure") {
  SlopeMeasure m = slope_measure(hn({{2, 3}, {1, -1}}));
  REQUIRE(m.atoms.size() == 2);
  CHECK(m.atoms[0].mass == frac(2, 3));
  CHECK(m.atoms[1].mass == frac(1, 3));
  CHECK(slope_measure(hn({{3, 1}})).atoms[0].mass == 1);
}

TEST_CASE("property sweep over random types") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 600; ++i) {
    HNType h = random_type(rng), g = random_type(rng);
    const Scalar dp = deg_plus(h);
    // integral identity
    CHECK(exactly_equal(positive_rank_integral(h), dp));
    // merge normalization is idempotent
    CHECK(HNType::make(h.segments()) == h);
    // polygon: concave, ends at (rank, degree), max equals deg_plus
    Polygon p = polygon(h);
    CHECK(exactly_equal(p.max_value(), dp));
    for (std::size_t k = 2; k < p.breakpoints.size(); ++k) {
      Rational s1 = (p.breakpoints[k - 1].second.exact() - p.breakpoints[k - 2].second.exact()) /
                    (p.breakpoints[k - 1].first.exact() - p.breakpoints[k - 2].first.exact());
      Rational s2 = (p.breakpoints[k].second.exact() - p.breakpoints[k - 1].second.exact()) /
                    (p.breakpoints[k].first.exact() - p.breakpoints[k - 1].first.exact());
      CHECK(s1 > s2);
    }
    CHECK(exactly_equal(p.breakpoints.back().second, h.degree()));
    // duality
    CHECK(exactly_equal(slope_extremes(h).first + slope_extremes(dual(h)).second, Scalar(0)));
    CHECK(dual(dual(h)) == h);
    // slope measure
    SlopeMeasure m = slope_measure(h);
    CHECK(m.total_mass() == 1);
    Rational weighted = 0;
    for (const auto& a : m.atoms)
      if (a.slope.exact() > 0) weighted += a.slope.exact() * a.mass;
    CHECK(weighted * h.rank() == dp.exact());
    // tensor: naive oracle, rank and degree multiplicativity, mu_max additivity
    HNType t = tensor(h, g);
    CHECK(expand(t) == naive_tensor(h, g));
    CHECK(t.rank() == h.rank() * g.rank());
    CHECK(exactly_equal(t.degree(),
                        Scalar(h.rank()) * g.degree() + Scalar(g.rank()) * h.degree()));
    CHECK(exactly_equal(slope_extremes(t).first,
                        slope_extremes(h).first + slope_extremes(g).first));
  }
}
