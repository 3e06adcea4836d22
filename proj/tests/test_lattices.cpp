// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <random>

#include "hnbound/errors.hpp"
#include "hnbound/lattices.hpp"

using namespace hnb;

namespace {

RationalMatrix diag(std::vector<Rational> d) {
  RationalMatrix m(d.size(), RationalVector(d.size(), Rational(0)));
  for (std::size_t i = 0; i < d.size(); ++i) m[i][i] = d[i];
  return m;
}

Rational qform(const RationalMatrix& g, const std::vector<long>& x) {
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) s += g[i][j] * x[i] * x[j];
  return s;
}

// Coefficient box that provably contains every x with Q(x) <= bound:
// |x_i| <= sqrt(bound * (G^-1)_ii).
long box_radius(const RationalMatrix& g, const Rational& bound) {
  auto inv = *inverse(g);
  double r = 0;
  for (std::size_t i = 0; i < g.size(); ++i) r = std::max(r, std::sqrt(Rational(bound * inv[i][i]).get_d()));
  return static_cast<long>(std::floor(r)) + 1;
}

void for_box(int r, long n, const auto& fn) {
  std::vector<long> x(r, -n);
  while (true) {
    fn(x);
    int i = 0;
    while (i < r && x[i] == n) x[i++] = -n;
    if (i == r) return;
    ++x[i];
  }
}

bool contains(const Scalar& s, double v) { return s.enclosure().contains(v); }

}  // namespace

TEST_CASE("lattice validation") {
  CHECK_THROWS_AS(EuclideanLattice(RationalMatrix{}), InvalidArgument);
  CHECK_THROWS_AS(EuclideanLattice({{1, 2}, {3, 1}}), InvalidArgument);
  CHECK_THROWS_AS(EuclideanLattice({{1, 2}, {2, 1}}), InvalidArgument);
  CHECK_THROWS_AS(EuclideanLattice({{0, 0}, {0, 1}}), InvalidArgument);
  CHECK(EuclideanLattice({{2, 1}, {1, 2}}).determinant() == 3);
}

TEST_CASE("h0_hat examples") {
  H0Hat a = h0_hat(EuclideanLattice(diag({1, 1})));
  CHECK(a.count == 5);
  CHECK(contains(a.value, std::log(5.0)));
  H0Hat b = h0_hat(EuclideanLattice(diag({4, 4})));
  CHECK(b.count == 1);
  CHECK(contains(b.value, 0.0));
  H0Hat c = h0_hat(EuclideanLattice(diag({frac(1, 4)})));
  CHECK(c.count == 5);
  RationalMatrix big = diag(std::vector<Rational>(9, Rational(1)));
  CHECK_THROWS_AS(h0_hat(EuclideanLattice(big)), InvalidArgument);
}

TEST_CASE("successive minima examples") {
  SuccessiveMinima m = successive_minima(EuclideanLattice(diag({1, 4})));
  CHECK(m.squared == std::vector<Rational>{1, 4});
  CHECK(contains(m.lambda[0], 0.0));
  CHECK(contains(m.lambda[1], -std::log(2.0)));
  SuccessiveMinima id = successive_minima(EuclideanLattice(diag({1, 1, 1})));
  for (auto& l : id.lambda) CHECK(exactly_equal(l, Scalar(0)));
}

TEST_CASE("rank-2 minima against a brute-force box sweep") {
  std::mt19937_64 rng(123);
  for (int trial = 0; trial < 150; ++trial) {
    RationalMatrix g = random_integer_gram(2, rng);
    EuclideanLattice l(g);
    const Rational bound = std::max(g[0][0], g[1][1]);
    const long n = box_radius(g, bound);
    std::vector<std::pair<Rational, std::vector<long>>> vs;
    for_box(2, n, [&](const std::vector<long>& x) {
      if (x[0] == 0 && x[1] == 0) return;
      vs.emplace_back(qform(g, x), x);
    });
    Rational m1 = vs[0].first;
    for (auto& v : vs) m1 = std::min(m1, v.first);
    bool have = false;
    Rational m2;
    for (auto& a : vs)
      for (auto& b : vs) {
        if (a.second[0] * b.second[1] - a.second[1] * b.second[0] == 0) continue;
        Rational m = std::max(a.first, b.first);
        if (!have || m < m2) m2 = m, have = true;
      }
    SuccessiveMinima got = successive_minima(l);
    CHECK(got.squared[0] == m1);
    CHECK(got.squared[1] == m2);
  }
}

TEST_CASE("h0 counts against a brute-force box sweep") {
  std::mt19937_64 rng(321);
  for (int trial = 0; trial < 60; ++trial) {
    const int r = 2 + trial % 2;
    RationalMatrix g = random_integer_gram(r, rng);
    // Shrink so that some nonzero vectors have norm <= 1.
    Rational c(1, 1 + trial % 9);
    for (auto& row : g)
      for (auto& v : row) v *= c;
    EuclideanLattice l(g);
    const long n = box_radius(g, 1);
    std::uint64_t count = 0;
    for_box(r, n, [&](const std::vector<long>& x) { count += qform(g, x) <= 1; });
    CHECK(h0_hat(l).count == count);
  }
}

TEST_CASE("LLL keeps the lattice and reduces") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 60; ++trial) {
    const int r = 2 + trial % 4;
    RationalMatrix g = random_integer_gram(r, rng);
    RationalMatrix red = lll_reduce(g);
    CHECK(determinant(red) == determinant(g));
    CHECK(is_symmetric(red));
    EuclideanLattice a(g), b(red);
    CHECK(h0_hat(a.scaled(frac(1, 20))).count == h0_hat(b.scaled(frac(1, 20))).count);
  }
}

TEST_CASE("euler characteristic and degree") {
  CHECK(contains(euler_char(EuclideanLattice(diag({1, 1}))), std::log(M_PI)));
  CHECK(contains(euler_char(EuclideanLattice(diag({1, 4}))), std::log(M_PI / 2)));
  for (long r = 1; r <= 6; ++r) {
    EuclideanLattice l(diag(std::vector<Rational>(r, Rational(9))));
    Interval expect = ln_ball_volume(r) - Interval::point(static_cast<double>(r)) * ln(Rational(3));
    Interval got = euler_char(l).enclosure();
    CHECK(got.lo() <= expect.hi());
    CHECK(expect.lo() <= got.hi());
    CHECK(got.width() <= 1e-9);
  }
  CHECK(exactly_equal(arakelov_degree(EuclideanLattice(diag({1, 1, 1}))), Scalar(0)));
  CHECK(contains(arakelov_degree(EuclideanLattice(diag({1, 4}))), -std::log(2.0)));
  EuclideanLattice l({{2, 1}, {1, 3}});
  Interval scaled = arakelov_degree(l.scaled(4)).enclosure();
  Interval expect = arakelov_degree(l).enclosure() - Interval::point(2.0) * ln(Rational(2));
  CHECK(std::abs(scaled.mid() - expect.mid()) < 1e-12);
}

TEST_CASE("orthogonal HN types") {
  HNType a = orthogonal_hn(EuclideanLattice(diag({1, 4})));
  REQUIRE(a.size() == 2);
  CHECK(exactly_equal(a.segments()[0].slope, Scalar(0)));
  CHECK(contains(a.segments()[1].slope, -std::log(2.0)));
  HNType b = orthogonal_hn(EuclideanLattice(diag({1, 1, 1})));
  REQUIRE(b.size() == 1);
  CHECK(b.segments()[0].rank == 3);
  CHECK(contains(deg_plus(orthogonal_hn(EuclideanLattice(diag({frac(1, 4), 4})))), std::log(2.0)));
  CHECK_THROWS_AS(orthogonal_hn(EuclideanLattice({{2, 1}, {1, 2}})), InvalidArgument);
}

TEST_CASE("rank-2 maximal slope") {
  CHECK(contains(rank2_mu_max(EuclideanLattice(diag({1, 4}))), 0.0));
  CHECK(contains(rank2_mu_max(EuclideanLattice(diag({1, 1}))), 0.0));
  CHECK(contains(rank2_mu_max(EuclideanLattice(diag({frac(1, 4), frac(1, 4)}))), std::log(2.0)));
  CHECK_THROWS_AS(rank2_mu_max(EuclideanLattice(diag({1, 1, 1}))), InvalidArgument);
}

TEST_CASE("diagonal minima equal the orthogonal slopes") {
  const Rational entries[] = {frac(1, 4), Rational(1), Rational(4), frac(9, 2)};
  for (int code = 0; code < 64; ++code) {
    std::vector<Rational> d{entries[code % 4], entries[code / 4 % 4], entries[code / 16]};
    EuclideanLattice l(diag(d));
    SuccessiveMinima m = successive_minima(l);
    std::vector<Scalar> slopes;
    HNType hn = orthogonal_hn(l);
    for (auto& s : hn.segments())
      for (long k = 0; k < s.rank; ++k) slopes.push_back(s.slope);
    REQUIRE(slopes.size() == m.lambda.size());
    for (std::size_t i = 0; i < slopes.size(); ++i)
      CHECK(std::abs(slopes[i].enclosure().mid() - m.lambda[i].enclosure().mid()) < 1e-12);
  }
}

TEST_CASE("scaling the Gram up never increases the count") {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 40; ++trial) {
    EuclideanLattice l = EuclideanLattice(random_integer_gram(3, rng)).scaled(frac(1, 10));
    std::uint64_t prev = h0_hat(l).count;
    for (Rational c : {frac(5, 4), Rational(2), Rational(4), Rational(9)}) {
      std::uint64_t now = h0_hat(l.scaled(c)).count;
      CHECK(now <= prev);
    }
  }
}

TEST_CASE("Gillet-Soule constant") {
  const NumberFieldData q = NumberFieldData::rationals();
  Interval c1 = gillet_soule_constant(q, 1).enclosure();
  CHECK(c1.contains(std::log(3.0)));
  CHECK(c1.width() < 1e-12);
  CHECK(gillet_soule_constant(q, 2).enclosure().contains(2 * std::log(6.0) - std::log(M_PI)));
  // The ratio to n ln n / 2 tends to 1 slowly: C = (n ln n)/2 + O(n).
  auto ratio = [&](long n) {
    return gillet_soule_constant(q, n).enclosure().mid() / (0.5 * n * std::log(static_cast<double>(n)));
  };
  CHECK(ratio(10000) == doctest::Approx(1.0811).epsilon(1e-3));
  CHECK(ratio(10000000) < 1.05);
  CHECK(ratio(10000000) > 1.0);
  CHECK(gillet_soule_constant(q, 10000).enclosure().width() <= 1e-9);
  // A quadratic imaginary field: r1 = 0, r2 = 1.
  NumberFieldData k(2, 0, 1, Integer(3));
  Interval ck = gillet_soule_constant(k, 1).enclosure();
  double expect = 2 * std::log(3.0) + std::log(2.0) + 0.5 * std::log(3.0) -
                  (std::log(M_PI) + std::log(2.0)) + std::log(2.0);
  CHECK(ck.contains(expect));
  CHECK_THROWS_AS(NumberFieldData(2, 1, 1, Integer(1)), InvalidArgument);
  CHECK_THROWS_AS(NumberFieldData(1, 1, 0, Integer(0)), InvalidArgument);
}
