// SPDX-License-Identifier: Apache-2.0
//
// Experiment configs and the verification suites behind the command-line
// tool. Suites run their checks in parallel and return reports sorted by
// name, so output is identical for any thread count.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hnbound/bounds.hpp"
#include "hnbound/errors.hpp"

namespace hnb::cli {

using nlohmann::json;

enum class Suite { geometric, filtered, lattice, arithmetic, epsilon, polygon };
enum class Format { json, csv };

struct ExperimentConfig {
  Suite suite = Suite::geometric;
  json parameters = json::object();  // validated against the suite schema
  std::uint64_t seed = 0;
  std::optional<std::string> output_path;
  Format format = Format::json;
};

/// Thrown for schema violations; the CLI maps it to exit status 2.
class ConfigError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

ExperimentConfig parse_config(const json& j);
bool is_randomized(Suite s);
const char* suite_name(Suite s);

/// Reports sorted by name.
std::vector<CheckReport> run_suite(const ExperimentConfig& config);

/// Runs a config file end to end: prints the seed for randomized suites and
/// the "<passed>/<total>" summary to `out`, writes the report file, and
/// returns 0 when every check passes, 1 when one fails or errors, 2 for an
/// invalid config.
int run(const std::string& config_path, std::ostream& out, std::ostream& err);
int run(const json& config, std::ostream& out, std::ostream& err);

/// Direct subcommands; each returns a JSON document.
json polygon_summary(const json& hn);
json epsilon_summary(const json& tower);
json lattice_summary(const json& gram);
json p1z_summary(int degree);

}  // namespace hnb::cli
