// SPDX-License-Identifier: Apache-2.0
//
// Split vector bundles O(a_1) + ... + O(a_r) on the projective line, with
// exact cohomology, plus h^0 bounds for curves of arbitrary genus that use
// only HN data.
#pragma once

#include <utility>
#include <vector>

#include "hnbound/hn_type.hpp"

namespace hnb {

class SplitBundle {
 public:
  /// Twists in any order; stored sorted decreasingly.
  explicit SplitBundle(std::vector<long> twists);

  const std::vector<long>& twists() const { return twists_; }
  long rank() const { return static_cast<long>(twists_.size()); }
  long degree() const;

  SplitBundle dual() const;
  /// E (x) O(c).
  SplitBundle twisted(long c) const;

  friend bool operator==(const SplitBundle&, const SplitBundle&) = default;

 private:
  std::vector<long> twists_;
};

struct CurveContext {
  long genus = 0;
  explicit CurveContext(long g);
};

/// Sum of max(a_i + 1, 0).
long h0(const SplitBundle& b);
HNType hn_type(const SplitBundle& b);
SplitBundle tensor(const SplitBundle& a, const SplitBundle& b);
/// Function-field successive minima; for split bundles these are the twists, largest first.
std::vector<Scalar> minima(const SplitBundle& b);

/// Tightest interval for h^0 of any bundle with HN type h on a genus-g curve,
/// intersecting the positive-degree bound with the three vanishing /
/// Riemann-Roch cases. Exact types only.
std::pair<Scalar, Scalar> h0_interval(const HNType& h, const CurveContext& ctx);

}  // namespace hnb
