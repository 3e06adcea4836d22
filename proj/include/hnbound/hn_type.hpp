// SPDX-License-Identifier: Apache-2.0
//
// Harder-Narasimhan types: the (rank, slope) data of an HN flag, with the
// polygon, positive degree, R-filtration ranks and slope measure derived from
// it. All functions are pure.
#pragma once

#include <utility>
#include <vector>

#include "hnbound/scalar.hpp"

namespace hnb {

struct HNSegment {
  long rank = 0;
  Scalar slope;
};

/// Nonempty list of segments with strictly decreasing slopes.
class HNType {
 public:
  /// Validated constructor. Adjacent equal-slope segments are merged; the
  /// remaining slopes must be (certifiably) strictly decreasing.
  static HNType make(std::vector<HNSegment> segments);

  const std::vector<HNSegment>& segments() const { return segments_; }
  std::size_t size() const { return segments_.size(); }
  long rank() const;
  /// Sum of rank_i * slope_i.
  Scalar degree() const;
  bool is_exact() const;

 private:
  explicit HNType(std::vector<HNSegment> s) : segments_(std::move(s)) {}
  std::vector<HNSegment> segments_;
};

bool operator==(const HNType& a, const HNType& b);

struct Polygon {
  std::vector<std::pair<Scalar, Scalar>> breakpoints;  // starts at (0, 0)
  Scalar max_value() const;
};

struct SlopeAtom {
  Scalar slope;
  Rational mass;
};

struct SlopeMeasure {
  std::vector<SlopeAtom> atoms;
  Rational total_mass() const;
};

Polygon polygon(const HNType& h);

/// Sum over nonnegative-slope segments of rank * slope; zero when every slope is negative.
Scalar deg_plus(const HNType& h);

/// (mu_max, mu_min).
std::pair<Scalar, Scalar> slope_extremes(const HNType& h);

HNType dual(const HNType& h);

/// Tensor product in characteristic zero: slopes add pairwise. Exact types only.
HNType tensor(const HNType& a, const HNType& b);

/// rank F^t, with F^t = E_i for slope_i >= t > slope_{i+1}.
long filtration_rank(const HNType& h, const Scalar& t);

/// Integral of rank F^t over t in [0, +inf), evaluated piecewise between slopes.
Scalar positive_rank_integral(const HNType& h);

SlopeMeasure slope_measure(const HNType& h);

}  // namespace hnb
