// SPDX-License-Identifier: Apache-2.0
#include "hnbound/hn_type.hpp"

#include <algorithm>

#include "hnbound/errors.hpp"

namespace hnb {

HNType HNType::make(std::vector<HNSegment> segments) {
  if (segments.empty()) throw InvalidArgument("HN type needs at least one segment");
  std::vector<HNSegment> merged;
  merged.reserve(segments.size());
  for (auto& seg : segments) {
    if (seg.rank < 1) throw InvalidArgument("HN segment rank must be >= 1");
    if (!merged.empty()) {
      auto c = compare(merged.back().slope, seg.slope);
      if (!c) {
        throw Undecided("HN slopes " + merged.back().slope.to_string() + " and " +
                        seg.slope.to_string() + " cannot be ordered");
      }
      if (*c == std::strong_ordering::equal) {
        merged.back().rank += seg.rank;
        continue;
      }
      if (*c == std::strong_ordering::less) {
        throw InvalidArgument("HN slopes must be strictly decreasing: " +
                              merged.back().slope.to_string() + " before " + seg.slope.to_string());
      }
    }
    merged.push_back(std::move(seg));
  }
  return HNType(std::move(merged));
}

long HNType::rank() const {
  long r = 0;
  for (const auto& s : segments_) r += s.rank;
  return r;
}

Scalar HNType::degree() const {
  Scalar d;
  for (const auto& s : segments_) d += Scalar(s.rank) * s.slope;
  return d;
}

bool HNType::is_exact() const {
  return std::all_of(segments_.begin(), segments_.end(),
                     [](const HNSegment& s) { return s.slope.is_exact(); });
}

bool operator==(const HNType& a, const HNType& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.segments()[i].rank != b.segments()[i].rank) return false;
    if (!exactly_equal(a.segments()[i].slope, b.segments()[i].slope)) return false;
  }
  return true;
}

Scalar Polygon::max_value() const {
  Scalar m = breakpoints.front().second;
  for (const auto& [x, y] : breakpoints) m = max(m, y);
  return m;
}

Rational SlopeMeasure::total_mass() const {
  Rational t = 0;
  for (const auto& a : atoms) t += a.mass;
  return t;
}

Polygon polygon(const HNType& h) {
  Polygon p;
  p.breakpoints.emplace_back(Scalar(0), Scalar(0));
  Scalar x, y;
  for (const auto& seg : h.segments()) {
    x += Scalar(seg.rank);
    y += Scalar(seg.rank) * seg.slope;
    p.breakpoints.emplace_back(x, y);
  }
  return p;
}

Scalar deg_plus(const HNType& h) {
  Scalar total;
  for (const auto& seg : h.segments()) total += Scalar(seg.rank) * max(seg.slope, Scalar(0));
  return total;
}

std::pair<Scalar, Scalar> slope_extremes(const HNType& h) {
  return {h.segments().front().slope, h.segments().back().slope};
}

HNType dual(const HNType& h) {
  std::vector<HNSegment> out;
  out.reserve(h.size());
  for (auto it = h.segments().rbegin(); it != h.segments().rend(); ++it)
    out.push_back({it->rank, -it->slope});
  return HNType::make(std::move(out));
}

HNType tensor(const HNType& a, const HNType& b) {
  if (!a.is_exact() || !b.is_exact()) throw InvalidArgument("tensor requires exact slopes");
  std::vector<std::pair<Rational, long>> pieces;
  pieces.reserve(a.size() * b.size());
  for (const auto& x : a.segments())
    for (const auto& y : b.segments())
      pieces.emplace_back(x.slope.exact() + y.slope.exact(), x.rank * y.rank);
  std::stable_sort(pieces.begin(), pieces.end(),
                   [](const auto& p, const auto& q) { return p.first > q.first; });
  std::vector<HNSegment> segs;
  segs.reserve(pieces.size());
  for (auto& [slope, rank] : pieces) segs.push_back({rank, Scalar(slope)});
  return HNType::make(std::move(segs));
}

long filtration_rank(const HNType& h, const Scalar& t) {
  long r = 0;
  for (const auto& seg : h.segments()) {
    if (compare_or_throw(seg.slope, t) == std::strong_ordering::less) break;
    r += seg.rank;
  }
  return r;
}

Scalar positive_rank_integral(const HNType& h) {
  // On (slope_{i+1}, slope_i] the filtration has rank R_i = rank(E_i); only
  // the part of that interval inside [0, +inf) contributes.
  const auto& segs = h.segments();
  Scalar total;
  long cumulative = 0;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    cumulative += segs[i].rank;
    Scalar floor_t = i + 1 < segs.size() ? max(segs[i + 1].slope, Scalar(0)) : Scalar(0);
    Scalar length = max(segs[i].slope - floor_t, Scalar(0));
    total += Scalar(cumulative) * length;
  }
  return total;
}

SlopeMeasure slope_measure(const HNType& h) {
  SlopeMeasure m;
  const long r = h.rank();
  for (const auto& seg : h.segments()) m.atoms.push_back({seg.slope, frac(seg.rank, r)});
  for (auto& a : m.atoms) a.mass.canonicalize();
  return m;
}

}  // namespace hnb
