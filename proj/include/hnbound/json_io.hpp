// SPDX-License-Identifier: Apache-2.0
//
// JSON and CSV forms of the domain types. Exact values travel as "p/q"
// strings, intervals as {"lo": x, "hi": y}. Malformed input raises
// InvalidArgument with a message naming the offending field.
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hnbound/bounds.hpp"
#include "hnbound/towers.hpp"

namespace hnb::io {

using nlohmann::json;

Rational rational_from_json(const json& j, const std::string& field);
Scalar scalar_from_json(const json& j, const std::string& field);
json to_json(const Scalar& s);

/// [[rank, "slope"], ...]
HNType hn_from_json(const json& j);
json to_json(const HNType& h);
json to_json(const Polygon& p);

/// Integer twists; written sorted decreasingly.
SplitBundle bundle_from_json(const json& j);
json to_json(const SplitBundle& b);

/// List of vertex arrays.
std::vector<RationalVector> points_from_json(const json& j);
json to_json(const ToricSeries& t);

/// {"a": .., "b": .., "e": ..}
FiberedSeries fibered_from_json(const json& j);

struct TowerInput {
  Tower tower;
  TowerData data;
};
/// {"genera": [...], "mu": [...], "vol": [...]}; null entries read as 0.
TowerInput tower_from_json(const json& j);

/// Square array of rationals.
RationalMatrix gram_from_json(const json& j);

json to_json(const CheckReport& r);
json reports_to_json(const std::vector<CheckReport>& reports);
std::string reports_to_csv(const std::vector<CheckReport>& reports);

}  // namespace hnb::io
