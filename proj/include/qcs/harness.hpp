#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "qcs/sensing.hpp"
#include "qcs/signals.hpp"

namespace qcs {

enum class ExperimentKind { DecayVsM, ErrorVsDelta, NoDither, Diagnose };

std::string to_string(ExperimentKind kind);
ExperimentKind experiment_kind_from_string(const std::string& s);

struct ExperimentConfig {
  ExperimentKind experiment = ExperimentKind::DecayVsM;
  SetTag set;              // carries n, k / n1, n2, r
  SensingKind sensing = SensingKind::Gaussian;
  std::vector<int> m_values;
  std::vector<double> delta_list;
  int trials = 1;
  std::uint64_t base_seed = 1;
  bool dithered = true;
  std::string output = "results.csv";
};

// Flat "key = value" text. '#' starts a comment; keys are checked, values
// validated up front so a bad file never reaches the compute loop.
ExperimentConfig parse_config(const std::string& text);
ExperimentConfig load_config(const std::string& path);

// One reconstruction trial; fields reproduce it exactly given the code
// version (seed is the trial's derived child seed).
struct TrialRecord {
  std::string experiment_id;
  std::string set;
  std::string sensing;
  int n = 0;
  int k_or_r = 0;
  int m = 0;
  double delta = 0.0;
  bool dithered = true;
  int trial_index = 0;
  std::uint64_t seed = 0;
  double error = 0.0;
};

// Runs every (m, delta, trial) cell. Output order is (m, delta, trial)
// lexicographic no matter how many worker threads execute the cells.
std::vector<TrialRecord> run_experiment(const ExperimentConfig& cfg, int threads = 1);

// fixed column order; errors and deltas carry 9 significant digits
void write_csv(std::ostream& out, const std::vector<TrialRecord>& records);
std::string csv_string(const std::vector<TrialRecord>& records);
void write_csv_file(const std::string& path, const std::vector<TrialRecord>& records);
std::vector<TrialRecord> read_csv(std::istream& in);
std::vector<TrialRecord> read_csv_file(const std::string& path);

// "%.9g" formatting used across CSV emitters
std::string format_g9(double v);

}  // namespace qcs
