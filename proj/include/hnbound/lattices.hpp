// SPDX-License-Identifier: Apache-2.0
//
// Euclidean lattices Z^r with a rational Gram matrix: exact short-vector
// counts, successive minima, Euler characteristic, Arakelov degree, HN data
// for orthogonal and rank-2 lattices, and the Gillet-Soule constant.
#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "hnbound/hn_type.hpp"
#include "hnbound/kernels.hpp"
#include "hnbound/rational_matrix.hpp"

namespace hnb {

/// Enumeration-backed operations accept rank <= 8.
inline constexpr int kMaxEnumerationRank = 8;
inline constexpr std::uint64_t kDefaultBudget = 50'000'000;

class EuclideanLattice {
 public:
  /// Requires a symmetric matrix with every leading principal minor > 0.
  explicit EuclideanLattice(RationalMatrix gram);

  int rank() const { return static_cast<int>(gram_.size()); }
  const RationalMatrix& gram() const { return gram_; }
  const Rational& determinant() const { return det_; }
  bool is_diagonal() const;
  const kernels::QuadraticForm& form() const { return form_; }

  /// Lattice with Gram c * gram.
  EuclideanLattice scaled(const Rational& c) const;

 private:
  RationalMatrix gram_;
  Rational det_;
  kernels::QuadraticForm form_;
};

struct H0Hat {
  std::uint64_t count = 0;  // #{x : |x| <= 1}, zero included
  Scalar value;             // ln(count)
};

H0Hat h0_hat(const EuclideanLattice& l, std::uint64_t budget = kDefaultBudget);

struct SuccessiveMinima {
  std::vector<Rational> squared;  // |v_i|^2, nondecreasing
  std::vector<Scalar> lambda;     // -ln |v_i|, nonincreasing
};

SuccessiveMinima successive_minima(const EuclideanLattice& l,
                                   std::uint64_t budget = kDefaultBudget);

/// Exact LLL (delta = 3/4) on the Gram matrix; returns the reduced Gram. Used
/// only to shorten enumeration radii.
RationalMatrix lll_reduce(const RationalMatrix& gram);

/// ln vol(unit ball in R^r) = (r/2) ln pi - lnGamma(r/2 + 1).
Interval ln_ball_volume(long r);

Scalar euler_char(const EuclideanLattice& l);
Scalar arakelov_degree(const EuclideanLattice& l);

/// Slopes -1/2 ln g_ii, decreasing, equal entries merged. Diagonal Gram only.
HNType orthogonal_hn(const EuclideanLattice& l);

/// max(lambda_1, deg / 2). Rank 2 only.
Scalar rank2_mu_max(const EuclideanLattice& l);

struct NumberFieldData {
  long degree;
  long r1;
  long r2;
  Integer abs_discriminant;
  NumberFieldData(long d, long real, long complex, Integer disc);
  static NumberFieldData rationals() { return {1, 1, 0, Integer(1)}; }
};

Scalar gillet_soule_constant(const NumberFieldData& k, long n);

/// B^T B for a random nonsingular integer B with entries in [-3, 3].
RationalMatrix random_integer_gram(int rank, std::mt19937_64& rng);

}  // namespace hnb
