// SPDX-License-Identifier: Apache-2.0
#include "hnbound/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <set>

#include "hnbound/errors.hpp"
#include "hnbound/kernels.hpp"
#include "hnbound/towers.hpp"

namespace hnb {

namespace {

using Context = std::vector<std::pair<std::string, std::string>>;

Rational factorial(long n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(f);
}

Interval r_ln_r(long r) { return Interval::point(static_cast<double>(r)) * ln(Rational(r)); }

std::string family_name(const char* prefix, const FiberedSeries& f) {
  return std::string(prefix) + "/a=" + std::to_string(f.a()) + ",b=" + std::to_string(f.b()) +
         ",e=" + std::to_string(f.e());
}

Context family_context(const FiberedSeries& f) {
  return {{"a", std::to_string(f.a())}, {"b", std::to_string(f.b())}, {"e", std::to_string(f.e())}};
}

void require_nef(const FiberedSeries& f) {
  if (!f.nef()) throw InvalidArgument("Hirzebruch checks require a >= e b");
}

Scalar sum_positive(const std::vector<Scalar>& xs) {
  Scalar s = 0;
  for (const auto& x : xs) s += max(x, Scalar(0));
  return s;
}

// 1/2 ln q for a positive rational q; exact zero at q = 1.
Scalar half_ln(const Rational& q) {
  return q == 1 ? Scalar(0) : Scalar(Interval::point(0.5) * ln(q));
}

// Product of the entries below 1.
Rational product_below_one(const std::vector<Rational>& xs) {
  Rational p = 1;
  for (const auto& x : xs)
    if (x < 1) p *= x;
  return p;
}

CheckReport report_with_margin(std::string name, Scalar lhs, Scalar rhs, Scalar margin,
                               Context context) {
  CheckReport r;
  r.name = std::move(name);
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  r.margin = std::move(margin);
  r.pass = r.margin.is_exact() ? r.margin.exact() >= 0 : lower(r.margin) >= 0.0;
  r.context = std::move(context);
  return r;
}

}  // namespace

CheckReport make_report(std::string name, Scalar lhs, Scalar rhs, Context context) {
  CheckReport r;
  r.name = std::move(name);
  r.margin = rhs - lhs;
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  r.pass = lower(r.margin) >= 0.0;
  if (r.margin.is_exact()) r.pass = r.margin.exact() >= 0;
  r.context = std::move(context);
  return r;
}

Scalar geometric_hs_bound(const Scalar& vol, long dim, const Scalar& eps) {
  if (dim < 1) throw InvalidArgument("dimension must be >= 1");
  if (lower(vol) < 0 && !(vol.is_exact() && vol.exact() >= 0))
    throw InvalidArgument("volume must be nonnegative");
  if (lower(eps) < 0 && !(eps.is_exact() && eps.exact() >= 0))
    throw InvalidArgument("epsilon must be nonnegative");
  return vol / Scalar(factorial(dim)) + eps;
}

namespace {

// h0(E_1), the bound, and the epsilon term for the P^1-over-P^1 tower.
struct ToricTerms {
  long lhs;
  Rational vol;
  Rational eps;
  Scalar rhs;
};

ToricTerms toric_terms(const FiberedSeries& f) {
  require_nef(f);
  ToricTerms t;
  t.lhs = h0(pushforward(f, 1));
  t.vol = normalized_volume(trapezoid_points(f));
  t.eps = epsilon(Tower({0, 0}), TowerData{{Rational(f.a()), 0}, {0, Rational(f.b())}});
  t.rhs = geometric_hs_bound(Scalar(t.vol), 2, Scalar(t.eps));
  return t;
}

}  // namespace

CheckReport check_toric_family(const FiberedSeries& f) {
  ToricTerms t = toric_terms(f);
  Context ctx = family_context(f);
  ctx.emplace_back("volume", to_string(t.vol));
  ctx.emplace_back("epsilon", to_string(t.eps));
  ctx.emplace_back("expected_margin", to_string(frac(f.e() * f.b(), 2)));
  return make_report(family_name("toric_family", f), Scalar(t.lhs), t.rhs, std::move(ctx));
}

CheckReport check_toric_margin_law(const FiberedSeries& f) {
  ToricTerms t = toric_terms(f);
  Rational margin = t.rhs.exact() - Rational(t.lhs);
  Rational expected = frac(f.e() * f.b(), 2);
  Rational gap = margin - expected;
  if (gap < 0) gap = -gap;
  Context ctx = family_context(f);
  ctx.emplace_back("margin", to_string(margin));
  ctx.emplace_back("expected_margin", to_string(expected));
  return make_report(family_name("toric_margin_law", f), Scalar(gap), Scalar(0), std::move(ctx));
}

CheckReport check_filtered(const FiberedSeries& f) {
  require_nef(f);
  // rank F^t E_1 is a step function that only changes at the twists.
  SplitBundle e1 = pushforward(f, 1);
  std::set<Rational> cuts{Rational(0)};
  for (long a : e1.twists())
    if (a > 0) cuts.insert(Rational(a));
  Rational lhs = 0;
  for (auto it = cuts.begin(); std::next(it) != cuts.end(); ++it) {
    const Rational& lo = *it;
    const Rational& hi = *std::next(it);
    lhs += Rational(filtered_rank(f, (lo + hi) / 2, 1)) * (hi - lo);
  }
  // Fiber level of the tower is a single P^1, whose epsilon is 1.
  Rational fiber_eps = epsilon(Tower({0}), TowerData{{0}, {0}});
  Rational rhs = filtered_volume_integral(f) / factorial(1) + mu_max_asy(f) * fiber_eps;
  Scalar dplus = deg_plus(hn_type(e1));
  Context ctx = family_context(f);
  ctx.emplace_back("deg_plus", dplus.to_string());
  ctx.emplace_back("lhs_equals_deg_plus", exactly_equal(dplus, Scalar(lhs)) ? "true" : "false");
  return make_report(family_name("filtered", f), Scalar(lhs), Scalar(rhs), std::move(ctx));
}

namespace {

Context lattice_context(const EuclideanLattice& l) {
  return {{"rank", std::to_string(l.rank())}, {"det", to_string(l.determinant())}};
}

}  // namespace

CheckReport h0_minima_bound(const EuclideanLattice& l) {
  const long r = l.rank();
  H0Hat h = h0_hat(l);
  SuccessiveMinima m = successive_minima(l);
  Scalar rhs = sum_positive(m.lambda) +
               Scalar(Interval::point(static_cast<double>(r)) * ln(Rational(2)) +
                      ln(Rational(2) * factorial(r)));
  Context ctx = lattice_context(l);
  ctx.emplace_back("count", std::to_string(h.count));
  return make_report("h0_minima_bound", h.value, rhs, std::move(ctx));
}

CheckReport blichfeldt(const EuclideanLattice& l) {
  const long r = l.rank();
  H0Hat h = h0_hat(l);
  Interval chi = euler_char(l).enclosure();
  Interval rhs = ln(exp(ln_factorial(r) + chi) + Interval::point(static_cast<double>(r)));
  Context ctx = lattice_context(l);
  ctx.emplace_back("count", std::to_string(h.count));
  return make_report("blichfeldt", h.value, Scalar(rhs), std::move(ctx));
}

CheckReport minkowski(const EuclideanLattice& l) {
  const long r = l.rank();
  SuccessiveMinima m = successive_minima(l);
  Scalar x = euler_char(l);
  for (const auto& lam : m.lambda) x -= lam;
  Interval half_band = Interval::point(0.5) * ln_factorial(r);
  Interval centre = Interval::point(static_cast<double>(r)) * ln(Rational(2)) - half_band;
  Scalar lhs = abs(x - Scalar(centre));
  Context ctx = lattice_context(l);
  ctx.emplace_back("chi_minus_sum_lambda", x.to_string());
  return make_report("minkowski", lhs, Scalar(half_band), std::move(ctx));
}

CheckReport gillet_soule_comparison(const EuclideanLattice& l) {
  const long r = l.rank();
  H0Hat h = h0_hat(l);
  Scalar dplus = deg_plus(orthogonal_hn(l));
  Scalar lhs = abs(h.value - dplus);
  // r ln|Delta| vanishes over Q.
  Scalar rhs = gillet_soule_constant(NumberFieldData::rationals(), r);
  Context ctx = lattice_context(l);
  ctx.emplace_back("count", std::to_string(h.count));
  ctx.emplace_back("deg_plus", dplus.to_string());
  if (r != 1) return make_report("gillet_soule", lhs, rhs, std::move(ctx));
  // Rank 1: lhs = 1/2 |ln x| with x = count^2 min(g, 1), rhs = ln 3.
  const Rational g = l.gram()[0][0];
  Rational x = Rational(Integer(std::to_string(h.count)));
  x *= x;
  if (g < 1) x *= g;
  Scalar margin = half_ln(x >= 1 ? Rational(9 / x) : Rational(9 * x));
  return report_with_margin("gillet_soule", lhs, rhs, margin, std::move(ctx));
}

CheckReport truncated_siegel(const EuclideanLattice& l) {
  const long r = l.rank();
  HNType hn = orthogonal_hn(l);
  std::vector<Scalar> slopes;
  for (const auto& s : hn.segments())
    for (long k = 0; k < s.rank; ++k) slopes.push_back(s.slope);
  SuccessiveMinima m = successive_minima(l);
  Scalar lhs = sum_positive(slopes);
  Scalar slack = Scalar(Interval::point(0.5) * r_ln_r(r));
  if (r == 1) slack = Scalar(0);
  Scalar rhs = sum_positive(m.lambda) + slack;
  // Every term is 1/2 ln of a rational, so the margin is 1/2 ln(q) with q exact.
  std::vector<Rational> diagonal;
  for (int i = 0; i < r; ++i) diagonal.push_back(l.gram()[i][i]);
  Rational q = product_below_one(diagonal) / product_below_one(m.squared);
  for (long i = 0; i < r; ++i) q *= r;
  Context ctx = lattice_context(l);
  ctx.emplace_back("slack", slack.to_string());
  return report_with_margin("truncated_siegel", lhs, rhs, half_ln(q), std::move(ctx));
}

Scalar arithmetic_error_F(long n, long degK, const Scalar& mu_asy, const Scalar& eps, long r_n,
                          long d) {
  if (n < 1 || r_n < 1 || degK < 1 || d < 1)
    throw InvalidArgument("arithmetic_error_F requires n, degK, r_n, d >= 1");
  Integer nd1;
  mpz_ui_pow_ui(nd1.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(d - 1));
  Scalar main = Scalar(n) * mu_asy * Scalar(Rational(nd1)) * eps;
  Scalar log_term = r_n == 1 ? Scalar(0) : Scalar(r_ln_r(r_n));
  return Scalar(degK) * (main + log_term);
}

Scalar arithmetic_error_G(long n, const Scalar& mu_asy, const Scalar& eps, long R_n, long d) {
  if (n < 1 || R_n < 1 || d < 1) throw InvalidArgument("arithmetic_error_G requires n, R_n, d >= 1");
  Integer nd;
  mpz_ui_pow_ui(nd.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(d));
  Interval logs = Interval::point(static_cast<double>(R_n + 1)) * ln(Rational(2));
  if (R_n > 1) logs += r_ln_r(R_n);
  return Scalar(Rational(nd)) * mu_asy * eps + Scalar(logs);
}

int IntPolynomial::degree() const {
  for (int k = static_cast<int>(coefficients.size()) - 1; k >= 0; --k)
    if (coefficients[k] != 0) return k;
  return -1;
}

namespace {

struct Sandwich {
  double lo, hi;  // max |a_k| and sum |a_k|
};

Sandwich coefficient_sandwich(const IntPolynomial& p) {
  long mx = 0, sum = 0;
  for (long a : p.coefficients) {
    mx = std::max(mx, std::labs(a));
    sum += std::labs(a);
  }
  return {static_cast<double>(mx), static_cast<double>(sum)};
}

// Enclosure of the sup norm from one grid, intersected with the sandwich.
Interval grid_enclosure(const std::vector<long>& coeffs, int deg, int n, const Sandwich& s) {
  auto grid = kernels::CircleGrid::get(n);
  kernels::GridBounds g = kernels::evaluate_circle_grid(coeffs, *grid);
  const Interval d2 = Interval::point(0.5 * deg * static_cast<double>(deg));
  const Interval denom = Interval::point(1.0) - d2 * grid->step() * grid->step();
  double lo = std::sqrt(std::max(0.0, g.max_lower));
  lo = std::nextafter(lo, 0.0);
  double hi = s.hi;
  if (denom.lo() > 0.0) {
    Interval t_sup = Interval::point(g.cell_upper) / Interval(denom.lo(), denom.lo());
    hi = std::min(hi, sqrt(Interval(0.0, t_sup.hi())).hi());
  }
  lo = std::max(lo, s.lo);
  return Interval(std::min(lo, hi), hi);
}

}  // namespace

Interval circle_sup_norm(const IntPolynomial& p, double precision) {
  if (!(precision > 0.0)) throw InvalidArgument("precision must be positive");
  const int deg = p.degree();
  if (deg > kMaxSupNormDegree) throw InvalidArgument("degree must be <= 64");
  const Sandwich s = coefficient_sandwich(p);
  if (s.hi - s.lo <= precision) return Interval(s.lo, s.hi);
  std::vector<long> coeffs(p.coefficients.begin(), p.coefficients.begin() + deg + 1);
  for (int n = 2 * (deg + 1); n <= kMaxCircleGrid; n *= 2) {
    Interval e = grid_enclosure(coeffs, deg, n, s);
    if (e.width() <= precision) return e;
  }
  throw BudgetExceeded("circle_sup_norm: precision not reached within the grid budget");
}

P1zResult p1z_h0(int n) {
  if (n < 0 || n > kMaxP1zDegree) throw InvalidArgument("p1z_h0 requires 0 <= n <= 6");
  const int r = n + 1;
  long total = 1;
  for (int i = 0; i < r; ++i) total *= 3;
  P1zResult out;
  RationalMatrix accepted;
  std::vector<long> coeffs(r);
  for (long code = 0; code < total; ++code) {
    long c = code, l1 = 0;
    for (int i = 0; i < r; ++i) {
      coeffs[i] = c % 3 - 1;
      c /= 3;
      l1 += std::labs(coeffs[i]);
    }
    if (l1 <= 1) {
      // |p| <= sum |a_k| <= 1.
      ++out.count;
      if (l1 == 1) accepted.emplace_back(coeffs.begin(), coeffs.end());
      continue;
    }
    // By discrete Parseval on N >= n + 1 roots of unity, max_j |p(w_j)|^2 >=
    // sum a_k^2 >= 2, so some grid point certifies |p| > 1.
    bool rejected = false;
    for (int grid = 2 * r; grid <= kMaxCircleGrid && !rejected; grid *= 2) {
      auto g = kernels::evaluate_circle_grid(coeffs, *kernels::CircleGrid::get(grid));
      rejected = g.max_lower > 1.0;
    }
    if (!rejected) throw Undecided("p1z_h0: unresolved boundary polynomial");
  }
  // Every nonzero integer polynomial has norm >= max |a_k| >= 1, and the
  // accepted monomials have norm exactly 1 and span Z^{n+1}: all minima are 1.
  if (matrix_rank(accepted) != r) throw Undecided("p1z_h0: accepted set does not span");
  Scalar lhs = Scalar(ln(Rational(static_cast<long>(out.count))));
  Scalar rhs = Scalar(Interval::point(static_cast<double>(r)) * ln(Rational(2)) +
                      ln(Rational(2) * factorial(r)));
  Context ctx{{"n", std::to_string(n)},
              {"count", std::to_string(out.count)},
              {"pattern_2n_plus_3", std::to_string(2 * n + 3)},
              {"lambda", "0 (all " + std::to_string(r) + " minima)"}};
  out.report = make_report("p1z_h0/n=" + std::to_string(n), lhs, rhs, std::move(ctx));
  return out;
}

}  // namespace hnb
