// SPDX-License-Identifier: Apache-2.0
//
// Assembled inequalities and their verification reports: the geometric
// Hilbert-Samuel bound on Hirzebruch surfaces, its filtered form, the
// geometry-of-numbers chain on lattices, the arithmetic error functions F and
// G, and the integer-polynomial testbed on P^1 over Z.
#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hnbound/graded_systems.hpp"
#include "hnbound/lattices.hpp"

namespace hnb {

struct CheckReport {
  std::string name;
  Scalar lhs;
  Scalar rhs;
  Scalar margin;  // rhs - lhs
  bool pass = false;
  std::vector<std::pair<std::string, std::string>> context;
};

/// Builds a report for lhs <= rhs; pass iff the lower end of rhs - lhs is >= 0.
CheckReport make_report(std::string name, Scalar lhs, Scalar rhs,
                        std::vector<std::pair<std::string, std::string>> context = {});

/// vol / dim! + eps, for vol >= 0 and eps >= 0.
Scalar geometric_hs_bound(const Scalar& vol, long dim, const Scalar& eps);

/// h0(E_1) against the geometric bound for the tower P^1 over P^1; requires a >= e b.
CheckReport check_toric_family(const FiberedSeries& f);
/// The margin of check_toric_family compared with e b / 2; passes iff they are equal.
CheckReport check_toric_margin_law(const FiberedSeries& f);

/// Integral of rank F^t E_1 against the filtered bound; requires a >= e b.
CheckReport check_filtered(const FiberedSeries& f);

CheckReport h0_minima_bound(const EuclideanLattice& l);
CheckReport blichfeldt(const EuclideanLattice& l);
/// r ln 2 - ln r! <= chi - sum lambda_i <= r ln 2, as |x - centre| <= (ln r!) / 2.
CheckReport minkowski(const EuclideanLattice& l);
/// |h0_hat - deg_plus| <= C(Q, r) on a diagonal lattice.
CheckReport gillet_soule_comparison(const EuclideanLattice& l);
/// sum max(mu_i, 0) <= sum max(Lambda_i, 0) + (r ln r) / 2 on a diagonal lattice,
/// where the absolute minima equal the successive minima.
CheckReport truncated_siegel(const EuclideanLattice& l);

/// degK * (n * mu * n^(d-1) * eps + r_n ln r_n).
Scalar arithmetic_error_F(long n, long degK, const Scalar& mu_asy, const Scalar& eps, long r_n,
                          long d);
/// n^d * mu * eps + (R_n + 1) ln 2 + R_n ln R_n.
Scalar arithmetic_error_G(long n, const Scalar& mu_asy, const Scalar& eps, long R_n, long d);

/// Integer polynomial a_0 + a_1 x + ... + a_n x^n.
struct IntPolynomial {
  std::vector<long> coefficients;
  /// Index of the highest nonzero coefficient; -1 for the zero polynomial.
  int degree() const;
};

inline constexpr int kMaxSupNormDegree = 64;
inline constexpr int kMaxCircleGrid = 1 << 16;

/// Certified enclosure of max_{|z|=1} |p(z)| with width <= precision.
/// Throws BudgetExceeded when the grid limit is hit first.
Interval circle_sup_norm(const IntPolynomial& p, double precision);

struct P1zResult {
  std::uint64_t count = 0;
  CheckReport report;
};

inline constexpr int kMaxP1zDegree = 6;

/// Integer polynomials of degree <= n with sup norm <= 1 on the unit circle.
P1zResult p1z_h0(int n);

}  // namespace hnb
