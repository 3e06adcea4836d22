// SPDX-License-Identifier: Apache-2.0
#include <mpfr.h>
#include <omp.h>

#include <map>
#include <mutex>

#include "hnbound/errors.hpp"
#include "hnbound/kernels.hpp"
#include "hnbound/parallel.hpp"

namespace hnb::kernels {

namespace {

constexpr mpfr_prec_t kAnglePrec = 128;

// cos/sin at 2*pi*j/n evaluated at 128 bits. The computed angle and the
// computed cosine each sit within 2^-120 of the true values, so widening by
// 2^-119 before rounding outward to double keeps a rigorous enclosure.
void trig_enclosure(long j, long n, Interval& c_out, Interval& s_out) {
  mpfr_t pi, theta, c, s, lo, hi;
  mpfr_inits2(kAnglePrec, pi, theta, c, s, lo, hi, static_cast<mpfr_ptr>(nullptr));
  mpfr_const_pi(pi, MPFR_RNDN);
  mpfr_mul_si(theta, pi, 2 * j, MPFR_RNDN);
  mpfr_div_si(theta, theta, n, MPFR_RNDN);
  mpfr_sin_cos(s, c, theta, MPFR_RNDN);
  auto enclose = [&](mpfr_t v) {
    mpfr_set(lo, v, MPFR_RNDN);
    mpfr_set(hi, v, MPFR_RNDN);
    mpfr_sub_d(lo, lo, 0x1p-119, MPFR_RNDD);
    mpfr_add_d(hi, hi, 0x1p-119, MPFR_RNDU);
    double l = std::max(-1.0, mpfr_get_d(lo, MPFR_RNDD));
    double h = std::min(1.0, mpfr_get_d(hi, MPFR_RNDU));
    return Interval(l, h);
  };
  c_out = enclose(c);
  s_out = enclose(s);
  mpfr_clears(pi, theta, c, s, lo, hi, static_cast<mpfr_ptr>(nullptr));
}

struct Complex {
  Interval re, im;
};

Complex mul(const Complex& a, const Complex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

// T_j and T'_j * h contribution at a single grid point.
void point_bounds(const std::vector<long>& coeffs, const CircleGrid& grid, int j, double& lower,
                  double& cell) {
  const Complex z{grid.cos(j), grid.sin(j)};
  const int n = static_cast<int>(coeffs.size()) - 1;
  Complex p{Interval::point(static_cast<double>(coeffs[n])), Interval::point(0.0)};
  Complex d{Interval::point(0.0), Interval::point(0.0)};
  for (int k = n - 1; k >= 0; --k) {
    Complex dz = mul(d, z);
    d = {dz.re + p.re, dz.im + p.im};
    Complex pz = mul(p, z);
    p = {pz.re + Interval::point(static_cast<double>(coeffs[k])), pz.im};
  }
  Interval t = p.re * p.re + p.im * p.im;
  // dT/dtheta = 2 Re(conj(p) * i z p'(z))
  Complex zd = mul(z, d);
  Complex izd{-zd.im, zd.re};
  Interval dt = Interval::point(2.0) * (p.re * izd.re + p.im * izd.im);
  Interval first_order = t + dt * grid.step();
  lower = t.lo();
  cell = std::max(t.hi(), first_order.hi());
}

void check_coeffs(const std::vector<long>& coeffs) {
  if (coeffs.empty()) throw InvalidArgument("polynomial needs at least one coefficient");
}

}  // namespace

CircleGrid::CircleGrid(int n) : n_(n), cos_(n), sin_(n) {
  if (n < 1) throw InvalidArgument("circle grid needs n >= 1");
  for (int j = 0; j < n; ++j) trig_enclosure(j, n, cos_[j], sin_[j]);
  step_ = pi_interval() * Interval::point(2.0) / Interval::point(static_cast<double>(n));
}

std::shared_ptr<const CircleGrid> CircleGrid::get(int n) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const CircleGrid>> cache;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  auto grid = std::make_shared<const CircleGrid>(n);
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(n, std::move(grid)).first->second;
}

GridBounds evaluate_circle_grid_serial(const std::vector<long>& coeffs, const CircleGrid& grid) {
  check_coeffs(coeffs);
  GridBounds out;
  for (int j = 0; j < grid.size(); ++j) {
    double lo, cell;
    point_bounds(coeffs, grid, j, lo, cell);
    out.max_lower = std::max(out.max_lower, lo);
    out.cell_upper = std::max(out.cell_upper, cell);
  }
  return out;
}

GridBounds evaluate_circle_grid(const std::vector<long>& coeffs, const CircleGrid& grid) {
  check_coeffs(coeffs);
  double max_lower = 0.0, cell_upper = 0.0;
  const int n = grid.size();
#pragma omp parallel for schedule(static) reduction(max : max_lower, cell_upper) \
    num_threads(thread_count())
  for (int j = 0; j < n; ++j) {
    double lo, cell;
    point_bounds(coeffs, grid, j, lo, cell);
    max_lower = std::max(max_lower, lo);
    cell_upper = std::max(cell_upper, cell);
  }
  return {max_lower, cell_upper};
}

}  // namespace hnb::kernels
