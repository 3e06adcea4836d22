// SPDX-License-Identifier: Apache-2.0
//
// Towers of fibrations over curves, described by their genus vector, and the
// recursive error terms epsilon (characteristic zero) and epsilon-tilde
// (positive characteristic).
#pragma once

#include <vector>

#include "hnbound/scalar.hpp"

namespace hnb {

/// Genera (g_0, ..., g_d); level i has dimension d + 1 - i.
struct Tower {
  std::vector<long> genera;
  explicit Tower(std::vector<long> g);
  int depth() const { return static_cast<int>(genera.size()) - 1; }  // d
};

/// Per-level slope and volume data. Entries never read by the recursion
/// (mu_d and vol_0) may be anything; JSON null loads as zero.
struct TowerData {
  std::vector<Rational> mu;
  std::vector<Rational> vol;
};

/// l(g) = intercept + slope * g.
struct AffineFunction {
  Rational intercept = 1;
  Rational slope = 1;
  Rational operator()(long g) const { return intercept + slope * g; }
};

/// The default l(g) = g + 1.
inline AffineFunction default_ell() { return {1, 1}; }

Rational epsilon(const Tower& t, const TowerData& data);
Rational epsilon_tilde(const Tower& t, const TowerData& data, const AffineFunction& ell);

/// mu_i -> p mu_i, vol_i -> p^(d + 1 - i) vol_i; requires p >= 1.
TowerData rescale(const TowerData& data, long p);

/// True when some mu_i with i < d is negative: the recursion still evaluates
/// but no bound is asserted for such data.
bool negative_mu_flag(const Tower& t, const TowerData& data);

}  // namespace hnb
