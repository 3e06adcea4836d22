// SPDX-License-Identifier: Apache-2.0
//
// hnbound run <config.json>
// hnbound polygon --hn <json>
// hnbound epsilon --tower <json>
// hnbound lattice --gram <json>
// hnbound p1z --degree <n>
#include <CLI11.hpp>

#include <iostream>

#include "hnbound/suites.hpp"

namespace {

// Runs a subcommand body; invalid input exits 2, other failures 1.
template <class Fn>
int guarded(Fn fn) {
  try {
    std::cout << fn().dump(2) << "\n";
    return 0;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const hnb::InvalidArgument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Harder-Narasimhan bound verification suites"};
  app.require_subcommand(1);

  std::string config_path, hn, tower, gram;
  int degree = 0;

  auto* run = app.add_subcommand("run", "Run the suite described by a config file");
  run->add_option("config", config_path, "Experiment config (JSON)")->required();

  auto* poly = app.add_subcommand("polygon", "HN polygon, deg+ and extreme slopes");
  poly->add_option("--hn", hn, "HN type as [[rank, \"p/q\"], ...]")->required();

  auto* eps = app.add_subcommand("epsilon", "Error terms of a tower");
  eps->add_option("--tower", tower, "{\"genera\": [...], \"mu\": [...], \"vol\": [...]}")->required();

  auto* lat = app.add_subcommand("lattice", "Counts, minima and checks for a Gram matrix");
  lat->add_option("--gram", gram, "Gram matrix as a JSON array of rows")->required();

  auto* p1z = app.add_subcommand("p1z", "Integer polynomials of sup norm <= 1");
  p1z->add_option("--degree", degree, "Degree bound n (0..6)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  using nlohmann::json;
  if (*run) return hnb::cli::run(config_path, std::cout, std::cerr);
  if (*poly) return guarded([&] { return hnb::cli::polygon_summary(json::parse(hn)); });
  if (*eps) return guarded([&] { return hnb::cli::epsilon_summary(json::parse(tower)); });
  if (*lat) return guarded([&] { return hnb::cli::lattice_summary(json::parse(gram)); });
  if (*p1z) return guarded([&] { return hnb::cli::p1z_summary(degree); });
  return 2;
}
