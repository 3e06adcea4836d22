// SPDX-License-Identifier: Apache-2.0
//
// Graded linear series with closed-form data: lattice-polytope (toric)
// series, and the P^1-fibered total series of O(a f + b s) on the Hirzebruch
// surface F_e (e = 0 is P^1 x P^1).
#pragma once

#include <cstdint>
#include <vector>

#include "hnbound/curve_bundles.hpp"
#include "hnbound/rational_matrix.hpp"

namespace hnb {

/// Halfspace normal . x <= offset with a primitive integer normal.
struct Facet {
  std::vector<long long> normal;
  Rational offset;
};

/// Series V_n = lattice points of n * P for a full-dimensional rational polytope P.
class ToricSeries {
 public:
  /// Convex hull of `points`; redundant and repeated points are dropped.
  explicit ToricSeries(std::vector<RationalVector> points);

  int dimension() const { return dim_; }
  const std::vector<RationalVector>& vertices() const { return vertices_; }
  const std::vector<Facet>& facets() const { return facets_; }

 private:
  int dim_ = 0;
  std::vector<RationalVector> vertices_;
  std::vector<Facet> facets_;
};

/// Number of lattice points in n * P (n >= 0), by bounding-box enumeration.
std::uint64_t toric_rank(const ToricSeries& t, long n);
std::uint64_t toric_rank_serial(const ToricSeries& t, long n);

/// d! * vol(P), from a pulling triangulation.
Rational toric_volume(const ToricSeries& t);

/// d! * vol(conv(points)) in the ambient dimension; zero when the points
/// span a lower-dimensional affine subspace.
Rational normalized_volume(const std::vector<RationalVector>& points);

class FiberedSeries {
 public:
  /// Requires a >= 0, b >= 1, e >= 0; a >= e b is checked where needed.
  FiberedSeries(long a, long b, long e);

  long a() const { return a_; }
  long b() const { return b_; }
  long e() const { return e_; }
  /// a >= e b: every pushforward twist is nonnegative.
  bool nef() const { return a_ >= e_ * b_; }

  friend bool operator==(const FiberedSeries&, const FiberedSeries&) = default;

 private:
  long a_, b_, e_;
};

/// E_n = {n a - e j : j = 0..n b}.
SplitBundle pushforward(const FiberedSeries& f, long n);

/// lim mu_max(E_n) / n.
Rational mu_max_asy(const FiberedSeries& f);

/// rank of F^{n t} E_n: #{j in [0, n b] : n a - e j >= n t}.
long filtered_rank(const FiberedSeries& f, const Rational& t, long n);

/// lim filtered_rank(f, t, n) / n for t >= 0.
Rational filtered_volume(const FiberedSeries& f, const Rational& t);

/// Integral of filtered_volume over [0, +inf), exact.
Rational filtered_volume_integral(const FiberedSeries& f);

/// Vertices of {0 <= y <= b, 0 <= x <= a - e y}; requires nef.
std::vector<RationalVector> trapezoid_points(const FiberedSeries& f);
/// The polytope whose toric series matches the total series; requires nef and a >= 1.
ToricSeries associated_trapezoid(const FiberedSeries& f);

}  // namespace hnb
