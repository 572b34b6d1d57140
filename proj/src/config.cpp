#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "qcs/errors.hpp"
#include "qcs/harness.hpp"
#include "qcs/signals.hpp"

namespace qcs {

std::string to_string(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::DecayVsM: return "decay_vs_m";
    case ExperimentKind::ErrorVsDelta: return "error_vs_delta";
    case ExperimentKind::NoDither: return "no_dither";
    case ExperimentKind::Diagnose: return "diagnose";
  }
  return "?";
}

ExperimentKind experiment_kind_from_string(const std::string& s) {
  if (s == "decay_vs_m") return ExperimentKind::DecayVsM;
  if (s == "error_vs_delta") return ExperimentKind::ErrorVsDelta;
  if (s == "no_dither") return ExperimentKind::NoDither;
  if (s == "diagnose") return ExperimentKind::Diagnose;
  throw ConfigError("unknown experiment: " + s);
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) parts.push_back(trim(cur));
  return parts;
}

long parse_long(const std::string& key, const std::string& v) {
  try {
    size_t pos = 0;
    const long x = std::stol(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw ConfigError("key '" + key + "': expected an integer, got '" + v + "'");
  }
}

double parse_double(const std::string& key, const std::string& v) {
  try {
    size_t pos = 0;
    const double x = std::stod(v, &pos);
    if (pos != v.size() || !std::isfinite(x)) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw ConfigError("key '" + key + "': expected a number, got '" + v + "'");
  }
}

std::uint64_t parse_u64(const std::string& key, const std::string& v) {
  try {
    size_t pos = 0;
    const unsigned long long x = std::stoull(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return static_cast<std::uint64_t>(x);
  } catch (const std::exception&) {
    throw ConfigError("key '" + key + "': expected an unsigned integer, got '" + v + "'");
  }
}

// "geometric(lo, hi, points)" or an explicit comma list; geometric grids are
// rounded to integers and deduplicated, endpoints kept exact
std::vector<int> parse_m_grid(const std::string& v) {
  std::vector<int> ms;
  if (v.rfind("geometric(", 0) == 0 && v.back() == ')') {
    const auto args = split(v.substr(10, v.size() - 11), ',');
    if (args.size() != 3) throw ConfigError("m_grid: geometric(min, max, points)");
    const long lo = parse_long("m_grid", args[0]);
    const long hi = parse_long("m_grid", args[1]);
    const long pts = parse_long("m_grid", args[2]);
    if (lo < 1 || hi < lo || pts < 2)
      throw ConfigError("m_grid: need 1 <= min <= max and points >= 2");
    for (long i = 0; i < pts; ++i) {
      const double t = static_cast<double>(i) / static_cast<double>(pts - 1);
      const double v2 = std::exp(std::log(static_cast<double>(lo)) * (1.0 - t) +
                                 std::log(static_cast<double>(hi)) * t);
      ms.push_back(static_cast<int>(std::lround(v2)));
    }
    ms.front() = static_cast<int>(lo);
    ms.back() = static_cast<int>(hi);
  } else {
    for (const auto& part : split(v, ',')) ms.push_back(static_cast<int>(parse_long("m_grid", part)));
  }
  std::sort(ms.begin(), ms.end());
  ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
  if (ms.empty()) throw ConfigError("m_grid: empty");
  return ms;
}

}  // namespace

ExperimentConfig parse_config(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(lineno) + ": expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    if (key.empty() || val.empty())
      throw ConfigError("line " + std::to_string(lineno) + ": empty key or value");
    if (kv.count(key)) throw ConfigError("duplicate key '" + key + "'");
    kv[key] = val;
  }

  static const std::vector<std::string> known{
      "experiment", "set",    "sensing", "n",       "k",      "n1",       "n2",
      "r",          "delta",  "delta_list", "m",    "m_grid", "trials",
      "base_seed",  "dithering", "output"};
  for (const auto& [key, val] : kv) {
    (void)val;
    if (std::find(known.begin(), known.end(), key) == known.end())
      throw ConfigError("unknown key '" + key + "'");
  }
  auto has = [&kv](const std::string& k) { return kv.count(k) != 0; };
  auto get = [&kv](const std::string& k) { return kv.at(k); };

  ExperimentConfig cfg;
  if (has("experiment")) cfg.experiment = experiment_kind_from_string(get("experiment"));
  if (cfg.experiment == ExperimentKind::Diagnose)
    throw ConfigError("experiment 'diagnose' runs through the diagnose subcommand");

  if (!has("set")) throw ConfigError("missing key 'set'");
  cfg.set.kind = set_kind_from_string(get("set"));
  if (cfg.set.kind == SetKind::LowRank) {
    for (const char* k : {"n1", "n2", "r"})
      if (!has(k)) throw ConfigError(std::string("lowrank set: missing key '") + k + "'");
    if (has("n") || has("k"))
      throw ConfigError("lowrank set: use n1/n2/r, not n/k");
    cfg.set.n1 = static_cast<int>(parse_long("n1", get("n1")));
    cfg.set.n2 = static_cast<int>(parse_long("n2", get("n2")));
    cfg.set.r = static_cast<int>(parse_long("r", get("r")));
    if (cfg.set.n1 < 1 || cfg.set.n2 < 1 || cfg.set.r < 1 ||
        cfg.set.r > std::min(cfg.set.n1, cfg.set.n2))
      throw ConfigError("lowrank set: need 1 <= r <= min(n1, n2)");
    cfg.set.n = cfg.set.n1 * cfg.set.n2;
  } else {
    for (const char* k : {"n", "k"})
      if (!has(k)) throw ConfigError(std::string("vector set: missing key '") + k + "'");
    if (has("n1") || has("n2") || has("r"))
      throw ConfigError("vector set: n1/n2/r only apply to lowrank");
    cfg.set.n = static_cast<int>(parse_long("n", get("n")));
    cfg.set.k = static_cast<int>(parse_long("k", get("k")));
    if (cfg.set.n < 1 || cfg.set.k < 1 || cfg.set.k > cfg.set.n)
      throw ConfigError("need 1 <= k <= n");
    if (cfg.set.kind == SetKind::Compressible) {
      try {
        compressible_alpha(cfg.set.n, cfg.set.k);
      } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
      }
    }
  }

  if (has("sensing")) cfg.sensing = sensing_kind_from_string(get("sensing"));

  if (has("delta") && has("delta_list"))
    throw ConfigError("give either 'delta' or 'delta_list', not both");
  if (has("delta_list")) {
    for (const auto& part : split(get("delta_list"), ','))
      cfg.delta_list.push_back(parse_double("delta_list", part));
  } else if (has("delta")) {
    cfg.delta_list.push_back(parse_double("delta", get("delta")));
  } else {
    throw ConfigError("missing key 'delta' or 'delta_list'");
  }
  for (double d : cfg.delta_list)
    if (!(d > 0.0)) throw ConfigError("delta values must be positive");

  if (has("m") && has("m_grid"))
    throw ConfigError("give either 'm' or 'm_grid', not both");
  if (has("m_grid")) {
    cfg.m_values = parse_m_grid(get("m_grid"));
  } else if (has("m")) {
    cfg.m_values.push_back(static_cast<int>(parse_long("m", get("m"))));
  } else {
    throw ConfigError("missing key 'm' or 'm_grid'");
  }
  for (int m : cfg.m_values)
    if (m < 1 || m > cfg.set.n)
      throw ConfigError("m values must satisfy 1 <= m <= n (n = " +
                        std::to_string(cfg.set.n) + ")");

  if (has("trials")) cfg.trials = static_cast<int>(parse_long("trials", get("trials")));
  if (cfg.trials < 1) throw ConfigError("trials must be >= 1");
  if (has("base_seed")) cfg.base_seed = parse_u64("base_seed", get("base_seed"));

  if (has("dithering")) {
    const std::string v = get("dithering");
    if (v == "on")
      cfg.dithered = true;
    else if (v == "off")
      cfg.dithered = false;
    else
      throw ConfigError("dithering must be 'on' or 'off'");
  }
  if (cfg.experiment == ExperimentKind::NoDither) {
    if (has("dithering") && cfg.dithered)
      throw ConfigError("experiment no_dither conflicts with dithering = on");
    cfg.dithered = false;
  }

  if (has("output")) cfg.output = get("output");
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

}  // namespace qcs
