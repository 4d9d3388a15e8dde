#include "catotoc/runconfig.hpp"

#include <cctype>
#include <fstream>
#include <string>
#include <vector>

namespace catotoc {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const std::size_t comma = s.find(',', start);
    const std::string item = trim(s.substr(start, comma - start));
    if (!item.empty()) out.push_back(item);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

int parse_int(const std::string& value, const std::string& where) {
  try {
    std::size_t idx = 0;
    const int v = std::stoi(value, &idx);
    if (idx != value.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw config_error(where + ": expected an integer, got '" + value + "'");
  }
}

double parse_real(const std::string& value, const std::string& where) {
  try {
    std::size_t idx = 0;
    const double v = std::stod(value, &idx);
    if (idx != value.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw config_error(where + ": expected a real number, got '" + value + "'");
  }
}

bool parse_bool(const std::string& value, const std::string& where) {
  if (value == "true" || value == "1" || value == "on" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "off" || value == "no") return false;
  throw config_error(where + ": expected a boolean, got '" + value + "'");
}

std::string check_map_name(const std::string& value, const std::string& where) {
  if (value != "hyperbolic" && value != "elliptic") {
    throw config_error(where + ": expected 'hyperbolic' or 'elliptic', got '" + value + "'");
  }
  return value;
}

CatMapSpec map_from_name(const std::string& name, double k) {
  return name == "hyperbolic" ? hyperbolic_map(k) : elliptic_map(k);
}

}  // namespace

void apply_config_line(RunConfig& cfg, const std::string& key, const std::string& value,
                       const std::string& where) {
  if (key == "preset") {
    for (const std::string& p : split_list(value)) cfg.presets.push_back(p);
  } else if (key == "basis") {
    try {
      cfg.basis = basis_kind_from_string(value);
    } catch (const config_error& e) {
      throw config_error(where + ": " + e.what());
    }
  } else if (key == "n") {
    cfg.n = parse_int(value, where);
  } else if (key == "tmax") {
    cfg.t_max = parse_int(value, where);
  } else if (key == "t0") {
    cfg.t0.clear();
    for (const std::string& item : split_list(value)) cfg.t0.push_back(parse_int(item, where));
  } else if (key == "fraction") {
    cfg.fraction = parse_real(value, where);
  } else if (key == "out") {
    cfg.out_dir = value;
  } else if (key == "csv") {
    cfg.emit_csv = parse_bool(value, where);
  } else if (key == "json") {
    cfg.emit_json = parse_bool(value, where);
  } else if (key == "svg") {
    cfg.emit_svg = parse_bool(value, where);
  } else if (key == "threads") {
    cfg.threads = parse_int(value, where);
  } else if (key == "map1") {
    cfg.map1 = check_map_name(value, where);
  } else if (key == "map2") {
    cfg.map2 = check_map_name(value, where);
  } else if (key == "K") {
    cfg.k = parse_real(value, where);
  } else if (key == "Kc") {
    cfg.kc = parse_real(value, where);
  } else if (key == "q1") {
    cfg.q1 = parse_real(value, where);
  } else if (key == "p1") {
    cfg.p1 = parse_real(value, where);
  } else if (key == "q2") {
    cfg.q2 = parse_real(value, where);
  } else if (key == "p2") {
    cfg.p2 = parse_real(value, where);
  } else if (key == "observed") {
    const int v = parse_int(value, where);
    if (v != 1 && v != 2) throw config_error(where + ": observed must be 1 or 2");
    cfg.observed = v;
  } else {
    throw config_error(where + ": unknown key '" + key + "'");
  }
}

RunConfig parse_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw config_error("cannot open config file '" + path.string() + "'");
  }
  RunConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string stripped = trim(line);
    if (stripped.empty()) continue;
    const std::string where = path.string() + ":" + std::to_string(lineno);
    const std::size_t eq = stripped.find('=');
    if (eq == std::string::npos) {
      throw config_error(where + ": expected key=value, got '" + stripped + "'");
    }
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (key.empty()) throw config_error(where + ": empty key");
    apply_config_line(cfg, key, value, where);
  }
  return cfg;
}

Scenario scenario_from_config(const RunConfig& cfg, const std::string& preset) {
  Scenario sc;
  if (!preset.empty()) {
    sc = make_preset(preset, cfg.n, cfg.basis, cfg.t_max);
  } else {
    if (!cfg.map1 || !cfg.map2) {
      throw config_error("custom scenario needs map1 and map2 (or use --preset)");
    }
    const TorusSpace space = make_space(cfg.n);
    sc.name = "custom";
    sc.space = BipartiteSpace{space, space};
    sc.coupled = CoupledMapSpec{map_from_name(*cfg.map1, cfg.k.value_or(0.25)),
                                map_from_name(*cfg.map2, cfg.k.value_or(0.25)),
                                cfg.kc.value_or(0.5)};
    sc.initial = ClassicalState2{{0.5, 0.5}, {0.5, 0.5}};
    sc.basis_kind = cfg.basis;
    sc.t_max = cfg.t_max;
  }
  // Explicit fields override the preset defaults.
  if (cfg.k) {
    sc.coupled.map1.k = *cfg.k;
    sc.coupled.map2.k = *cfg.k;
  }
  if (cfg.map1) sc.coupled.map1 = map_from_name(*cfg.map1, sc.coupled.map1.k);
  if (cfg.map2) sc.coupled.map2 = map_from_name(*cfg.map2, sc.coupled.map2.k);
  if (cfg.kc) sc.coupled.kc = *cfg.kc;
  if (cfg.q1) sc.initial.dof1.q = *cfg.q1;
  if (cfg.p1) sc.initial.dof1.p = *cfg.p1;
  if (cfg.q2) sc.initial.dof2.q = *cfg.q2;
  if (cfg.p2) sc.initial.dof2.p = *cfg.p2;
  if (cfg.observed) {
    sc.observed = *cfg.observed == 1 ? Subsystem::first : Subsystem::second;
  }
  return sc;
}

}  // namespace catotoc
