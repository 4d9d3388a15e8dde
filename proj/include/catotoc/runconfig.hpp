#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "catotoc/bases.hpp"
#include "catotoc/otoc.hpp"

namespace catotoc {

// One resolved run configuration, filled from a key=value config file and/or
// command-line flags (flags win).  `presets` holds one name for verify/run
// and one or more for sweep; a custom scenario (no preset) is assembled from
// the map/center fields instead.
struct RunConfig {
  std::vector<std::string> presets;

  std::optional<std::string> map1;  // "hyperbolic" | "elliptic"
  std::optional<std::string> map2;
  std::optional<double> k;
  std::optional<double> kc;
  std::optional<double> q1, p1, q2, p2;
  std::optional<int> observed;  // 1 | 2

  BasisKind basis = BasisKind::translation;
  int n = 64;
  int t_max = 40;
  std::vector<int> t0;
  double fraction = 0.8;

  std::string out_dir;
  bool emit_csv = true;
  bool emit_json = true;
  bool emit_svg = false;
  int threads = 0;  // 0 = leave library defaults alone
};

// Flat key=value file; '#' comments and blank lines allowed.  Errors carry
// file:line context and throw config_error.
RunConfig parse_config_file(const std::filesystem::path& path);
void apply_config_line(RunConfig& cfg, const std::string& key,
                       const std::string& value, const std::string& where);

// Resolve the scenario: preset fields first (if a preset is named), explicit
// overrides on top.
Scenario scenario_from_config(const RunConfig& cfg, const std::string& preset);

// Subcommand drivers.  Return the process exit code: 0 success, 1 config
// error, 2 numerical-consistency failure.  Diagnostics go to stderr.
int cmd_verify(const RunConfig& cfg);
int cmd_run(const RunConfig& cfg);
int cmd_sweep(const RunConfig& cfg);

}  // namespace catotoc
