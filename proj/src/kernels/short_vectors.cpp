// SPDX-License-Identifier: Apache-2.0
#include <omp.h>

#include <atomic>
#include <cmath>

#include "hnbound/errors.hpp"
#include "hnbound/kernels.hpp"
#include "hnbound/parallel.hpp"

namespace hnb::kernels {

QuadraticForm decompose(const std::vector<std::vector<Rational>>& gram) {
  const int r = static_cast<int>(gram.size());
  if (r < 1) throw InvalidArgument("empty Gram matrix");
  std::vector<std::vector<Rational>> q = gram;
  for (const auto& row : q)
    if (static_cast<int>(row.size()) != r) throw InvalidArgument("Gram matrix is not square");
  for (int i = 0; i < r; ++i) {
    if (q[i][i] <= 0) throw InvalidArgument("Gram matrix is not positive definite");
    for (int j = i + 1; j < r; ++j) {
      q[j][i] = q[i][j];
      q[i][j] /= q[i][i];
    }
    for (int k = i + 1; k < r; ++k)
      for (int l = k; l < r; ++l) q[k][l] -= q[k][i] * q[i][l];
  }
  QuadraticForm out;
  out.rank = r;
  out.diag.resize(r);
  out.mu.assign(r, std::vector<Rational>(r, Rational(0)));
  for (int i = 0; i < r; ++i) {
    out.diag[i] = q[i][i];
    for (int j = i + 1; j < r; ++j) out.mu[i][j] = q[i][j];
  }
  return out;
}

std::pair<long, long> integer_range(const Rational& center, const Rational& radius_sq) {
  if (radius_sq < 0) return {1, 0};
  auto ok = [&](long k) {
    Rational d = Rational(k) - center;
    return d * d <= radius_sq;
  };
  const double c = center.get_d();
  const double s = std::sqrt(std::max(0.0, radius_sq.get_d()));
  long lo = static_cast<long>(std::floor(c - s));
  long hi = static_cast<long>(std::ceil(c + s));
  while (ok(lo - 1)) --lo;
  while (ok(hi + 1)) ++hi;
  while (lo <= hi && !ok(lo)) ++lo;
  while (hi >= lo && !ok(hi)) --hi;
  return {lo, hi};
}

namespace {

// Depth-first enumeration below a fixed top coordinate. Visit receives the
// full coordinate vector and its exact norm.
class Enumerator {
 public:
  Enumerator(const QuadraticForm& q, const Rational& bound)
      : q_(q), bound_(bound), x_(q.rank, 0), center_(q.rank), remaining_(q.rank) {}

  template <class Visit>
  void run_from_top(long top, Visit& visit) {
    const int r = q_.rank;
    x_[r - 1] = top;
    Rational partial = q_.diag[r - 1] * Rational(top) * Rational(top);
    if (partial > bound_) return;
    if (r == 1) {
      visit(x_, partial);
      return;
    }
    level(r - 2, partial, visit);
  }

 private:
  template <class Visit>
  void level(int i, const Rational& partial, Visit& visit) {
    Rational& c = center_[i];
    c = 0;
    for (int j = i + 1; j < q_.rank; ++j) c -= q_.mu[i][j] * x_[j];
    remaining_[i] = (bound_ - partial) / q_.diag[i];
    auto [lo, hi] = integer_range(c, remaining_[i]);
    for (long k = lo; k <= hi; ++k) {
      x_[i] = k;
      Rational d = Rational(k) - c;
      Rational next = partial + q_.diag[i] * d * d;
      if (next > bound_) continue;
      if (i == 0)
        visit(x_, next);
      else
        level(i - 1, next, visit);
    }
    x_[i] = 0;
  }

  const QuadraticForm& q_;
  const Rational& bound_;
  std::vector<long> x_;
  std::vector<Rational> center_;
  std::vector<Rational> remaining_;
};

std::pair<long, long> top_range(const QuadraticForm& q, const Rational& bound) {
  return integer_range(Rational(0), bound / q.diag[q.rank - 1]);
}

bool canonical_sign(const std::vector<long>& x) {
  for (long v : x)
    if (v != 0) return v > 0;
  return false;  // zero vector
}

[[noreturn]] void budget_error(std::uint64_t budget) {
  throw BudgetExceeded("short-vector enumeration exceeded budget of " + std::to_string(budget) +
                       " vectors");
}

}  // namespace

std::uint64_t count_short_vectors_serial(const QuadraticForm& q, const Rational& bound,
                                         std::uint64_t budget) {
  if (bound < 0) return 0;
  std::uint64_t count = 0;
  auto visit = [&](const std::vector<long>&, const Rational&) {
    if (++count > budget) budget_error(budget);
  };
  auto [lo, hi] = top_range(q, bound);
  Enumerator e(q, bound);
  for (long t = lo; t <= hi; ++t) e.run_from_top(t, visit);
  return count;
}

std::uint64_t count_short_vectors(const QuadraticForm& q, const Rational& bound,
                                  std::uint64_t budget) {
  if (bound < 0) return 0;
  auto [lo, hi] = top_range(q, bound);
  std::atomic<std::uint64_t> total{0};
  std::atomic<bool> overflow{false};
#pragma omp parallel num_threads(thread_count())
  {
    Enumerator e(q, bound);
    std::uint64_t local = 0;
    auto visit = [&](const std::vector<long>&, const Rational&) { ++local; };
#pragma omp for schedule(dynamic)
    for (long t = lo; t <= hi; ++t) {
      if (overflow.load(std::memory_order_relaxed)) continue;
      local = 0;
      e.run_from_top(t, visit);
      if (total.fetch_add(local) + local > budget) overflow.store(true);
    }
  }
  if (overflow.load()) budget_error(budget);
  return total.load();
}

std::vector<ShortVector> list_short_vectors_serial(const QuadraticForm& q, const Rational& bound,
                                                   std::uint64_t budget) {
  std::vector<ShortVector> out;
  if (bound < 0) return out;
  std::uint64_t seen = 0;
  auto visit = [&](const std::vector<long>& x, const Rational& norm) {
    if (++seen > budget) budget_error(budget);
    if (canonical_sign(x)) out.push_back({x, norm});
  };
  auto [lo, hi] = top_range(q, bound);
  Enumerator e(q, bound);
  for (long t = lo; t <= hi; ++t) e.run_from_top(t, visit);
  return out;
}

std::vector<ShortVector> list_short_vectors(const QuadraticForm& q, const Rational& bound,
                                            std::uint64_t budget) {
  std::vector<ShortVector> out;
  if (bound < 0) return out;
  auto [lo, hi] = top_range(q, bound);
  const long slabs = hi - lo + 1;
  std::vector<std::vector<ShortVector>> per_slab(static_cast<std::size_t>(slabs));
  std::atomic<std::uint64_t> seen{0};
  std::atomic<bool> overflow{false};
#pragma omp parallel num_threads(thread_count())
  {
    Enumerator e(q, bound);
#pragma omp for schedule(dynamic)
    for (long s = 0; s < slabs; ++s) {
      if (overflow.load(std::memory_order_relaxed)) continue;
      auto& bucket = per_slab[static_cast<std::size_t>(s)];
      std::uint64_t local = 0;
      auto visit = [&](const std::vector<long>& x, const Rational& norm) {
        ++local;
        if (canonical_sign(x)) bucket.push_back({x, norm});
      };
      e.run_from_top(lo + s, visit);
      if (seen.fetch_add(local) + local > budget) overflow.store(true);
    }
  }
  if (overflow.load()) budget_error(budget);
  for (auto& bucket : per_slab)
    for (auto& v : bucket) out.push_back(std::move(v));
  return out;
}

}  // namespace hnb::kernels
