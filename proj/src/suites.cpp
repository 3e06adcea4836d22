// SPDX-License-Identifier: Apache-2.0
#include "hnbound/suites.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdio>
#include <exception>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

#include "hnbound/json_io.hpp"
#include "hnbound/parallel.hpp"

namespace hnb::cli {

namespace {

[[noreturn]] void config_fail(const std::string& what) { throw ConfigError(what); }

struct IntParam {
  long lo, hi, fallback;
};

// Integer parameters per suite: {min, max, default}.
const std::map<Suite, std::map<std::string, IntParam>>& schemas() {
  static const std::map<Suite, std::map<std::string, IntParam>> s = {
      {Suite::geometric,
       {{"a_min", {1, 1000, 1}}, {"a_max", {1, 1000, 6}}, {"b_min", {1, 1000, 1}},
        {"b_max", {1, 1000, 6}}, {"e_min", {0, 100, 0}}, {"e_max", {0, 100, 2}}}},
      {Suite::filtered,
       {{"a_min", {1, 1000, 1}}, {"a_max", {1, 1000, 6}}, {"b_min", {1, 1000, 1}},
        {"b_max", {1, 1000, 6}}, {"e_min", {0, 100, 0}}, {"e_max", {0, 100, 2}}}},
      {Suite::lattice, {{"rank", {2, kMaxEnumerationRank, 2}}, {"trials", {1, 99999, 200}}}},
      {Suite::arithmetic, {{"max_rank", {1, 4, 4}}, {"p1z_max", {0, kMaxP1zDegree, 4}}}},
      {Suite::epsilon,
       {{"trials", {1, 99999, 500}}, {"max_depth", {0, 6, 3}}, {"p_max", {1, 10, 5}}}},
      {Suite::polygon, {}},
  };
  return s;
}

const std::map<std::string, Suite>& suite_names() {
  static const std::map<std::string, Suite> m = {
      {"geometric", Suite::geometric}, {"filtered", Suite::filtered},
      {"lattice", Suite::lattice},     {"arithmetic", Suite::arithmetic},
      {"epsilon", Suite::epsilon},     {"polygon", Suite::polygon}};
  return m;
}

long param(const ExperimentConfig& c, const std::string& key) {
  return c.parameters.at(key).get<long>();
}

std::string pad(long i) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%05ld", i);
  return buf;
}

using Task = std::function<std::vector<CheckReport>()>;

std::vector<CheckReport> run_tasks(const std::vector<Task>& tasks) {
  const long n = static_cast<long>(tasks.size());
  std::vector<std::vector<CheckReport>> results(n);
  std::vector<std::exception_ptr> errors(n);
#pragma omp parallel for schedule(dynamic) num_threads(thread_count())
  for (long i = 0; i < n; ++i) {
    try {
      results[i] = tasks[i]();
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<CheckReport> out;
  for (auto& r : results)
    for (auto& x : r) out.push_back(std::move(x));
  std::stable_sort(out.begin(), out.end(),
                   [](const CheckReport& a, const CheckReport& b) { return a.name < b.name; });
  return out;
}

CheckReport renamed(CheckReport r, std::string name) {
  r.name = std::move(name);
  return r;
}

std::vector<FiberedSeries> hirzebruch_grid(const ExperimentConfig& c) {
  std::vector<FiberedSeries> grid;
  for (long e = param(c, "e_min"); e <= param(c, "e_max"); ++e)
    for (long a = param(c, "a_min"); a <= param(c, "a_max"); ++a)
      for (long b = param(c, "b_min"); b <= param(c, "b_max"); ++b)
        if (a >= e * b) grid.emplace_back(a, b, e);
  return grid;
}

std::vector<Task> geometric_tasks(const ExperimentConfig& c) {
  std::vector<Task> tasks;
  for (const auto& f : hirzebruch_grid(c))
    tasks.push_back([f] { return std::vector{check_toric_family(f), check_toric_margin_law(f)}; });
  return tasks;
}

std::vector<Task> filtered_tasks(const ExperimentConfig& c) {
  std::vector<Task> tasks;
  for (const auto& f : hirzebruch_grid(c)) tasks.push_back([f] { return std::vector{check_filtered(f)}; });
  return tasks;
}

std::vector<Task> lattice_tasks(const ExperimentConfig& c) {
  std::mt19937_64 rng(c.seed);
  const int rank = static_cast<int>(param(c, "rank"));
  std::vector<Task> tasks;
  for (long t = 0; t < param(c, "trials"); ++t) {
    RationalMatrix g = random_integer_gram(rank, rng);
    tasks.push_back([g = std::move(g), t] {
      EuclideanLattice l(g);
      const std::string p = "lattice/" + pad(t) + "/";
      return std::vector{renamed(blichfeldt(l), p + "blichfeldt"),
                         renamed(h0_minima_bound(l), p + "h0_minima_bound"),
                         renamed(minkowski(l), p + "minkowski")};
    });
  }
  return tasks;
}

// Every diagonal Gram with entries in {1/4, 1, 4}, up to the given rank.
std::vector<RationalMatrix> diagonal_grams(int max_rank) {
  const Rational entries[] = {frac(1, 4), Rational(1), Rational(4)};
  std::vector<RationalMatrix> out;
  for (int r = 1; r <= max_rank; ++r) {
    long total = 1;
    for (int i = 0; i < r; ++i) total *= 3;
    for (long code = 0; code < total; ++code) {
      RationalMatrix g(r, RationalVector(r, Rational(0)));
      long x = code;
      for (int i = 0; i < r; ++i, x /= 3) g[i][i] = entries[x % 3];
      out.push_back(std::move(g));
    }
  }
  return out;
}

std::string diag_label(const RationalMatrix& g) {
  std::string s;
  for (std::size_t i = 0; i < g.size(); ++i) s += (i ? "," : "") + to_string(g[i][i]);
  return s;
}

std::vector<Task> arithmetic_tasks(const ExperimentConfig& c) {
  std::vector<Task> tasks;
  for (auto& g : diagonal_grams(static_cast<int>(param(c, "max_rank"))))
    tasks.push_back([g] {
      EuclideanLattice l(g);
      const std::string p = "diagonal/r=" + std::to_string(l.rank()) + "/" + diag_label(g) + "/";
      return std::vector{renamed(gillet_soule_comparison(l), p + "gillet_soule"),
                         renamed(truncated_siegel(l), p + "truncated_siegel")};
    });
  for (int n = 0; n <= param(c, "p1z_max"); ++n)
    tasks.push_back([n] { return std::vector{p1z_h0(n).report}; });
  return tasks;
}

Rational random_rational(std::mt19937_64& rng, long num_max) {
  std::uniform_int_distribution<long> num(0, num_max), den(1, 4);
  long p = num(rng), q = den(rng);
  return frac(p, q);
}

std::vector<Task> epsilon_tasks(const ExperimentConfig& c) {
  std::mt19937_64 rng(c.seed);
  std::vector<Task> tasks;
  std::uniform_int_distribution<long> genus(0, 5);
  for (long t = 0; t < param(c, "trials"); ++t) {
    const long d = std::uniform_int_distribution<long>(0, param(c, "max_depth"))(rng);
    std::vector<long> genera(d + 1);
    for (auto& g : genera) g = genus(rng);
    TowerData data;
    for (long i = 0; i <= d; ++i) {
      data.mu.push_back(random_rational(rng, 20));
      data.vol.push_back(random_rational(rng, 20));
    }
    const long p = std::uniform_int_distribution<long>(1, param(c, "p_max"))(rng);
    // One coordinate bumped upward for the monotonicity check.
    const long which = std::uniform_int_distribution<long>(0, 3 * d + 2)(rng);
    const Rational bump = random_rational(rng, 8) + frac(1, 4);
    tasks.push_back([=] {
      Tower tower(genera);
      const std::string pre = "epsilon/" + pad(t) + "/";
      const Rational eps = epsilon(tower, data);
      Integer pd;
      mpz_ui_pow_ui(pd.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(d));
      CheckReport rescaled = make_report(pre + "rescale", Scalar(epsilon(tower, rescale(data, p))),
                                         Scalar(Rational(pd) * eps), {{"p", std::to_string(p)}});
      Rational gap = epsilon_tilde(tower, data, AffineFunction{0, 0}) - eps;
      if (gap < 0) gap = -gap;
      CheckReport tilde = make_report(pre + "tilde_zero_ell", Scalar(gap), Scalar(0));
      std::vector<long> g2 = genera;
      TowerData d2 = data;
      std::string moved;
      if (which <= d) {
        d2.mu[which] += bump;
        moved = "mu[" + std::to_string(which) + "]";
      } else if (which <= 2 * d + 1) {
        d2.vol[which - d - 1] += bump;
        moved = "vol[" + std::to_string(which - d - 1) + "]";
      } else {
        const long i = (which - 2 * d - 2) % (d + 1);
        g2[i] += 1;
        moved = "genus[" + std::to_string(i) + "]";
      }
      CheckReport mono = make_report(pre + "monotone", Scalar(eps), Scalar(epsilon(Tower(g2), d2)),
                                     {{"coordinate", moved}});
      return std::vector{std::move(mono), std::move(rescaled), std::move(tilde)};
    });
  }
  return tasks;
}

std::vector<Task> polygon_tasks(const ExperimentConfig& c) {
  HNType h = io::hn_from_json(c.parameters.at("hn"));
  if (!h.is_exact()) config_fail("polygon.hn: slopes must be exact rationals");
  return {[h] {
    Scalar dplus = deg_plus(h);
    auto [mu_max, mu_min] = slope_extremes(h);
    std::vector<std::pair<std::string, std::string>> ctx{
        {"deg_plus", dplus.to_string()},
        {"mu_max", mu_max.to_string()},
        {"mu_min", mu_min.to_string()},
        {"polygon", io::to_json(polygon(h)).dump()}};
    Rational g1 = positive_rank_integral(h).exact() - dplus.exact();
    Rational g2 = polygon(h).max_value().exact() - dplus.exact();
    return std::vector{make_report("polygon/deg_plus_integral", Scalar(abs(g1)), Scalar(0), ctx),
                       make_report("polygon/deg_plus_polygon_max", Scalar(abs(g2)), Scalar(0), ctx)};
  }};
}

}  // namespace

const char* suite_name(Suite s) {
  for (const auto& [name, v] : suite_names())
    if (v == s) return name.c_str();
  return "?";
}

bool is_randomized(Suite s) { return s == Suite::lattice || s == Suite::epsilon; }

ExperimentConfig parse_config(const json& j) {
  if (!j.is_object()) config_fail("config must be a JSON object");
  if (!j.contains("suite") || !j["suite"].is_string()) config_fail("suite: required string");
  auto it = suite_names().find(j["suite"].get<std::string>());
  if (it == suite_names().end())
    config_fail("suite: unknown value \"" + j["suite"].get<std::string>() +
                "\" (expected geometric, filtered, lattice, arithmetic, epsilon or polygon)");
  ExperimentConfig c;
  c.suite = it->second;

  json params = json::object();
  if (j.contains("parameters")) {
    if (!j["parameters"].is_object()) config_fail("parameters: expected an object");
    params = j["parameters"];
  }
  for (const auto& [k, v] : j.items()) {
    if (k == "suite" || k == "parameters") continue;
    if (k == "seed") {
      if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
        config_fail("seed: expected a nonnegative 64-bit integer");
      c.seed = v.get<std::uint64_t>();
      continue;
    }
    if (k == "output") {
      if (!v.is_object()) config_fail("output: expected {\"path\": .., \"format\": \"json\"|\"csv\"}");
      for (const auto& [ok, ov] : v.items()) {
        if (ok == "path") {
          if (!ov.is_string()) config_fail("output.path: expected a string");
          c.output_path = ov.get<std::string>();
        } else if (ok == "format") {
          if (ov == "json")
            c.format = Format::json;
          else if (ov == "csv")
            c.format = Format::csv;
          else
            config_fail("output.format: expected \"json\" or \"csv\"");
        } else {
          config_fail("output." + ok + ": unknown key");
        }
      }
      continue;
    }
    if (params.contains(k)) config_fail(k + ": given both at top level and in parameters");
    params[k] = v;
  }

  const auto& schema = schemas().at(c.suite);
  for (const auto& [k, v] : params.items()) {
    if (c.suite == Suite::polygon && k == "hn") continue;
    auto s = schema.find(k);
    if (s == schema.end()) config_fail(k + ": unknown parameter for suite " + suite_name(c.suite));
    if (!v.is_number_integer()) config_fail(k + ": expected an integer");
    const long x = v.get<long>();
    if (x < s->second.lo || x > s->second.hi)
      config_fail(k + ": must be in [" + std::to_string(s->second.lo) + ", " +
                  std::to_string(s->second.hi) + "]");
  }
  for (const auto& [k, s] : schema)
    if (!params.contains(k)) params[k] = s.fallback;
  if (c.suite == Suite::geometric || c.suite == Suite::filtered) {
    for (const char* v : {"a", "b", "e"})
      if (params[std::string(v) + "_min"].get<long>() > params[std::string(v) + "_max"].get<long>())
        config_fail(std::string(v) + "_min: must not exceed " + v + "_max");
  }
  if (c.suite == Suite::polygon) {
    if (!params.contains("hn")) config_fail("hn: required for suite polygon");
    try {
      HNType h = io::hn_from_json(params["hn"]);
      if (!h.is_exact()) config_fail("hn: slopes must be exact rationals");
    } catch (const ConfigError&) {
      throw;
    } catch (const std::exception& e) {
      config_fail(e.what());
    }
  }
  c.parameters = std::move(params);
  return c;
}

std::vector<CheckReport> run_suite(const ExperimentConfig& c) {
  switch (c.suite) {
    case Suite::geometric: return run_tasks(geometric_tasks(c));
    case Suite::filtered: return run_tasks(filtered_tasks(c));
    case Suite::lattice: return run_tasks(lattice_tasks(c));
    case Suite::arithmetic: return run_tasks(arithmetic_tasks(c));
    case Suite::epsilon: return run_tasks(epsilon_tasks(c));
    case Suite::polygon: return run_tasks(polygon_tasks(c));
  }
  return {};
}

int run(const json& config, std::ostream& out, std::ostream& err) {
  ExperimentConfig c;
  try {
    c = parse_config(config);
  } catch (const std::exception& e) {
    err << "invalid config: " << e.what() << "\n";
    return 2;
  }
  if (is_randomized(c.suite)) out << "seed: " << c.seed << "\n";
  std::vector<CheckReport> reports;
  try {
    reports = run_suite(c);
  } catch (const std::exception& e) {
    err << "suite " << suite_name(c.suite) << " failed: " << e.what() << "\n";
    return 1;
  }
  if (c.output_path) {
    std::ofstream f(*c.output_path, std::ios::binary);
    if (!f) {
      err << "cannot write " << *c.output_path << "\n";
      return 1;
    }
    if (c.format == Format::json)
      f << io::reports_to_json(reports).dump(2) << "\n";
    else
      f << io::reports_to_csv(reports);
  }
  const auto passed = std::count_if(reports.begin(), reports.end(), [](auto& r) { return r.pass; });
  for (const auto& r : reports)
    if (!r.pass) err << "FAIL " << r.name << ": margin " << r.margin.to_string() << "\n";
  out << passed << "/" << reports.size() << "\n";
  return passed == static_cast<long>(reports.size()) ? 0 : 1;
}

int run(const std::string& config_path, std::ostream& out, std::ostream& err) {
  std::ifstream f(config_path);
  if (!f) {
    err << "invalid config: cannot read " << config_path << "\n";
    return 2;
  }
  json j;
  try {
    j = json::parse(f);
  } catch (const std::exception& e) {
    err << "invalid config: " << e.what() << "\n";
    return 2;
  }
  return run(j, out, err);
}

json polygon_summary(const json& hn) {
  HNType h = io::hn_from_json(hn);
  auto [mu_max, mu_min] = slope_extremes(h);
  json out{{"hn", io::to_json(h)},
           {"rank", h.rank()},
           {"degree", io::to_json(h.degree())},
           {"deg_plus", io::to_json(deg_plus(h))},
           {"mu_max", io::to_json(mu_max)},
           {"mu_min", io::to_json(mu_min)},
           {"polygon", io::to_json(polygon(h))},
           {"positive_rank_integral", io::to_json(positive_rank_integral(h))},
           {"dual", io::to_json(dual(h))}};
  return out;
}

json epsilon_summary(const json& tower) {
  io::TowerInput t = io::tower_from_json(tower);
  AffineFunction ell = default_ell();
  if (tower.contains("ell")) {
    const json& e = tower["ell"];
    if (!e.is_object() || !e.contains("intercept") || !e.contains("slope"))
      throw InvalidArgument("ell: expected {\"intercept\", \"slope\"}");
    ell = {io::rational_from_json(e["intercept"], "ell.intercept"),
           io::rational_from_json(e["slope"], "ell.slope")};
  }
  return json{{"genera", t.tower.genera},
              {"epsilon", to_string(epsilon(t.tower, t.data))},
              {"epsilon_tilde", to_string(epsilon_tilde(t.tower, t.data, ell))},
              {"ell", {{"intercept", to_string(ell.intercept)}, {"slope", to_string(ell.slope)}}},
              {"negative_mu_flag", negative_mu_flag(t.tower, t.data)}};
}

json lattice_summary(const json& gram) {
  EuclideanLattice l(io::gram_from_json(gram));
  H0Hat h = h0_hat(l);
  SuccessiveMinima m = successive_minima(l);
  json sq = json::array(), lam = json::array();
  for (const auto& q : m.squared) sq.push_back(to_string(q));
  for (const auto& x : m.lambda) lam.push_back(io::to_json(x));
  json out{{"rank", l.rank()},
           {"det", to_string(l.determinant())},
           {"count", h.count},
           {"h0_hat", io::to_json(h.value)},
           {"minima_squared", sq},
           {"lambda", lam},
           {"euler_char", io::to_json(euler_char(l))},
           {"arakelov_degree", io::to_json(arakelov_degree(l))},
           {"reports", io::reports_to_json({blichfeldt(l), h0_minima_bound(l), minkowski(l)})}};
  if (l.is_diagonal()) out["orthogonal_hn"] = io::to_json(orthogonal_hn(l));
  if (l.rank() == 2) out["rank2_mu_max"] = io::to_json(rank2_mu_max(l));
  return out;
}

json p1z_summary(int degree) {
  P1zResult r = p1z_h0(degree);
  return json{{"degree", degree},
              {"count", r.count},
              {"h0_hat", io::to_json(r.report.lhs)},
              {"report", io::to_json(r.report)}};
}

}  // namespace hnb::cli
