// SPDX-License-Identifier: Apache-2.0
//
// Enumeration kernels. Each OpenMP kernel has a serial reference with the
// same contract; tests check that both return identical exact results and
// bench/bench_kernels.cpp compares their throughput.
#pragma once

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "hnbound/scalar.hpp"

namespace hnb::kernels {

// ---------------------------------------------------------------------------
// Lattice points of an integral H-polytope {x in Z^d : normal_k . x <= offset_k}
// restricted to a bounding box.

struct IntHalfspaces {
  int dim = 0;
  std::vector<std::vector<long long>> normals;
  std::vector<long long> offsets;
  std::vector<long long> box_lo;
  std::vector<long long> box_hi;
};

std::uint64_t count_lattice_points(const IntHalfspaces& p);
std::uint64_t count_lattice_points_serial(const IntHalfspaces& p);

// ---------------------------------------------------------------------------
// Short vectors of a positive definite quadratic form (Fincke-Pohst).

/// Q(x) = sum_i diag[i] * (x_i + sum_{j>i} mu[i][j] x_j)^2, exact.
struct QuadraticForm {
  int rank = 0;
  std::vector<Rational> diag;
  std::vector<std::vector<Rational>> mu;
};

/// Completes squares on a symmetric positive definite rational Gram matrix.
QuadraticForm decompose(const std::vector<std::vector<Rational>>& gram);

/// All integers k with (k - center)^2 <= radius_sq, as [lo, hi]; lo > hi when empty.
std::pair<long, long> integer_range(const Rational& center, const Rational& radius_sq);

struct ShortVector {
  std::vector<long> coords;
  Rational norm;  // Q(coords), exact
};

/// Number of x in Z^r (zero included) with Q(x) <= bound. Throws
/// BudgetExceeded past `budget` vectors.
std::uint64_t count_short_vectors(const QuadraticForm& q, const Rational& bound,
                                  std::uint64_t budget);
std::uint64_t count_short_vectors_serial(const QuadraticForm& q, const Rational& bound,
                                         std::uint64_t budget);

/// Nonzero x with Q(x) <= bound, one per +-pair (first nonzero coordinate
/// positive), in a deterministic order.
std::vector<ShortVector> list_short_vectors(const QuadraticForm& q, const Rational& bound,
                                            std::uint64_t budget);
std::vector<ShortVector> list_short_vectors_serial(const QuadraticForm& q, const Rational& bound,
                                                   std::uint64_t budget);

// ---------------------------------------------------------------------------
// Uniform grids on the unit circle for certified sup norms.

/// Enclosures of cos and sin at 2*pi*j/N, j = 0..N-1.
class CircleGrid {
 public:
  explicit CircleGrid(int n);
  /// Shared, lazily built grid for size n.
  static std::shared_ptr<const CircleGrid> get(int n);

  int size() const { return n_; }
  const Interval& cos(int j) const { return cos_[j]; }
  const Interval& sin(int j) const { return sin_[j]; }
  /// Enclosure of the grid step 2*pi/N.
  const Interval& step() const { return step_; }

 private:
  int n_;
  std::vector<Interval> cos_, sin_;
  Interval step_;
};

/// Per-grid bounds for T(theta) = |p(e^{i theta})|^2.
struct GridBounds {
  double max_lower = 0.0;  // certified lower bound of max_j T(theta_j)
  /// Upper bound of max_j max(T_j, T_j + T'_j * h) over all cells, which
  /// together with |T''| <= n^2 |T| bounds sup T.
  double cell_upper = 0.0;
};

GridBounds evaluate_circle_grid(const std::vector<long>& coeffs, const CircleGrid& grid);
GridBounds evaluate_circle_grid_serial(const std::vector<long>& coeffs, const CircleGrid& grid);

}  // namespace hnb::kernels
