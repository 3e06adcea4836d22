// SPDX-License-Identifier: Apache-2.0
#include "hnbound/json_io.hpp"

#include "hnbound/errors.hpp"

namespace hnb::io {

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw InvalidArgument(field + ": " + what);
}

long integer_from_json(const json& j, const std::string& field) {
  if (!j.is_number_integer()) fail(field, "expected an integer");
  return j.get<long>();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Rational rational_from_json(const json& j, const std::string& field) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) fail(field, "expected a \"p/q\" string or an integer");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::exception& e) {
    fail(field, e.what());
  }
}

Scalar scalar_from_json(const json& j, const std::string& field) {
  if (j.is_object()) {
    if (!j.contains("lo") || !j.contains("hi") || !j["lo"].is_number() || !j["hi"].is_number())
      fail(field, "interval needs numeric \"lo\" and \"hi\"");
    try {
      return Scalar(Interval(j["lo"].get<double>(), j["hi"].get<double>()));
    } catch (const std::exception& e) {
      fail(field, e.what());
    }
  }
  return Scalar(rational_from_json(j, field));
}

json to_json(const Scalar& s) {
  if (s.is_exact()) return to_string(s.exact());
  Interval x = s.enclosure();
  return json{{"lo", x.lo()}, {"hi", x.hi()}};
}

HNType hn_from_json(const json& j) {
  if (!j.is_array() || j.empty()) fail("hn", "expected a nonempty array of [rank, slope] pairs");
  std::vector<HNSegment> segs;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string field = "hn[" + std::to_string(i) + "]";
    if (!j[i].is_array() || j[i].size() != 2) fail(field, "expected [rank, slope]");
    segs.push_back({integer_from_json(j[i][0], field + ".rank"),
                    scalar_from_json(j[i][1], field + ".slope")});
  }
  return HNType::make(std::move(segs));
}

json to_json(const HNType& h) {
  json out = json::array();
  for (const auto& s : h.segments()) out.push_back(json::array({s.rank, to_json(s.slope)}));
  return out;
}

json to_json(const Polygon& p) {
  json out = json::array();
  for (const auto& [x, y] : p.breakpoints) out.push_back(json::array({to_json(x), to_json(y)}));
  return out;
}

SplitBundle bundle_from_json(const json& j) {
  if (!j.is_array() || j.empty()) fail("bundle", "expected a nonempty array of integer twists");
  std::vector<long> twists;
  for (std::size_t i = 0; i < j.size(); ++i)
    twists.push_back(integer_from_json(j[i], "bundle[" + std::to_string(i) + "]"));
  return SplitBundle(std::move(twists));
}

json to_json(const SplitBundle& b) { return json(b.twists()); }

std::vector<RationalVector> points_from_json(const json& j) {
  if (!j.is_array() || j.empty()) fail("polytope", "expected a nonempty array of vertices");
  std::vector<RationalVector> pts;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string field = "polytope[" + std::to_string(i) + "]";
    if (!j[i].is_array() || j[i].empty()) fail(field, "expected a coordinate array");
    RationalVector v;
    for (std::size_t k = 0; k < j[i].size(); ++k)
      v.push_back(rational_from_json(j[i][k], field + "[" + std::to_string(k) + "]"));
    pts.push_back(std::move(v));
  }
  return pts;
}

json to_json(const ToricSeries& t) {
  json out = json::array();
  for (const auto& v : t.vertices()) {
    json row = json::array();
    for (const auto& q : v) row.push_back(to_string(q));
    out.push_back(std::move(row));
  }
  return out;
}

FiberedSeries fibered_from_json(const json& j) {
  if (!j.is_object()) fail("fibered", "expected {\"a\", \"b\", \"e\"}");
  for (const char* k : {"a", "b", "e"})
    if (!j.contains(k)) fail(std::string("fibered.") + k, "missing");
  return FiberedSeries(integer_from_json(j["a"], "fibered.a"), integer_from_json(j["b"], "fibered.b"),
                       integer_from_json(j["e"], "fibered.e"));
}

TowerInput tower_from_json(const json& j) {
  if (!j.is_object()) fail("tower", "expected {\"genera\", \"mu\", \"vol\"}");
  if (!j.contains("genera") || !j["genera"].is_array()) fail("tower.genera", "expected an array");
  std::vector<long> genera;
  for (std::size_t i = 0; i < j["genera"].size(); ++i)
    genera.push_back(integer_from_json(j["genera"][i], "tower.genera[" + std::to_string(i) + "]"));
  Tower tower(std::move(genera));
  auto vec = [&](const char* key) {
    std::vector<Rational> out;
    const std::string field = std::string("tower.") + key;
    if (!j.contains(key)) {
      out.assign(tower.genera.size(), Rational(0));
      return out;
    }
    if (!j[key].is_array()) fail(field, "expected an array");
    for (std::size_t i = 0; i < j[key].size(); ++i) {
      const json& x = j[key][i];
      out.push_back(x.is_null() ? Rational(0)
                                : rational_from_json(x, field + "[" + std::to_string(i) + "]"));
    }
    if (out.size() != tower.genera.size()) fail(field, "length does not match genera");
    return out;
  };
  TowerData data{vec("mu"), vec("vol")};
  return {std::move(tower), std::move(data)};
}

RationalMatrix gram_from_json(const json& j) {
  if (!j.is_array() || j.empty()) fail("gram", "expected a nonempty square array");
  RationalMatrix m;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array() || j[i].size() != j.size()) fail("gram", "matrix is not square");
    RationalVector row;
    for (std::size_t k = 0; k < j[i].size(); ++k)
      row.push_back(rational_from_json(j[i][k], "gram[" + std::to_string(i) + "][" +
                                                    std::to_string(k) + "]"));
    m.push_back(std::move(row));
  }
  return m;
}

json to_json(const CheckReport& r) {
  json ctx = json::object();
  for (const auto& [k, v] : r.context) ctx[k] = v;
  return json{{"name", r.name},     {"lhs", to_json(r.lhs)}, {"rhs", to_json(r.rhs)},
              {"margin", to_json(r.margin)}, {"pass", r.pass},         {"context", ctx}};
}

json reports_to_json(const std::vector<CheckReport>& reports) {
  json out = json::array();
  for (const auto& r : reports) out.push_back(to_json(r));
  return out;
}

std::string reports_to_csv(const std::vector<CheckReport>& reports) {
  std::string out = "name,lhs,rhs,margin,pass\n";
  for (const auto& r : reports) {
    out += csv_field(r.name) + "," + csv_field(r.lhs.to_string()) + "," +
           csv_field(r.rhs.to_string()) + "," + csv_field(r.margin.to_string()) + "," +
           (r.pass ? "true" : "false") + "\n";
  }
  return out;
}

}  // namespace hnb::io
