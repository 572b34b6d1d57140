#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "qcs/errors.hpp"
#include "qcs/harness.hpp"

namespace qcs {

namespace {
constexpr const char* kHeader =
    "experiment_id,set,sensing,n,k_or_r,m,delta,dithered,trial_index,seed,error";
}

std::string format_g9(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

void write_csv(std::ostream& out, const std::vector<TrialRecord>& records) {
  out << kHeader << '\n';
  for (const auto& r : records) {
    out << r.experiment_id << ',' << r.set << ',' << r.sensing << ',' << r.n << ','
        << r.k_or_r << ',' << r.m << ',' << format_g9(r.delta) << ','
        << (r.dithered ? 1 : 0) << ',' << r.trial_index << ',' << r.seed << ','
        << format_g9(r.error) << '\n';
  }
}

std::string csv_string(const std::vector<TrialRecord>& records) {
  std::ostringstream out;
  write_csv(out, records);
  return out.str();
}

void write_csv_file(const std::string& path, const std::vector<TrialRecord>& records) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot open output file: " + path);
  write_csv(out, records);
  if (!out) throw ConfigError("write failed: " + path);
}

std::vector<TrialRecord> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ConfigError("csv: empty input");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kHeader)
    throw ConfigError("csv: unexpected header '" + line + "'");
  std::vector<TrialRecord> records;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::string cur;
    std::istringstream ls(line);
    while (std::getline(ls, cur, ',')) f.push_back(cur);
    if (f.size() != 11)
      throw ConfigError("csv line " + std::to_string(lineno) + ": expected 11 fields");
    try {
      TrialRecord r;
      r.experiment_id = f[0];
      r.set = f[1];
      r.sensing = f[2];
      r.n = std::stoi(f[3]);
      r.k_or_r = std::stoi(f[4]);
      r.m = std::stoi(f[5]);
      r.delta = std::stod(f[6]);
      r.dithered = std::stoi(f[7]) != 0;
      r.trial_index = std::stoi(f[8]);
      r.seed = std::stoull(f[9]);
      r.error = std::stod(f[10]);
      records.push_back(std::move(r));
    } catch (const std::exception&) {
      throw ConfigError("csv line " + std::to_string(lineno) + ": parse failure");
    }
  }
  return records;
}

std::vector<TrialRecord> read_csv_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open csv file: " + path);
  return read_csv(in);
}

}  // namespace qcs
