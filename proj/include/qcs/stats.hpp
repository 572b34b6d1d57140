#pragma once

#include <string>
#include <vector>

#include "qcs/harness.hpp"

namespace qcs {

// exact sample median: middle order statistic, average of the two central
// ones for even counts
double median(std::vector<double> v);

struct SlopeFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
  int points = 0;
  bool degenerate = false;  // fewer than 3 usable (positive) aggregates
};

// OLS on (log x, log y); callers pass aggregated per-x errors
SlopeFit ols_loglog(const std::vector<double>& x, const std::vector<double>& y);

// column accessor for grouping: set, sensing, delta, dithered, n, k_or_r,
// m, experiment_id
std::string record_field(const TrialRecord& rec, const std::string& column);

struct AggregateRow {
  std::vector<std::string> key;  // values of the group-by columns, in order
  double x = 0.0;                // m or delta
  double median_error = 0.0;
  double mean_error = 0.0;
  int trials = 0;
};

// per-group, per-x medians and means; both the slope fit and the plot
// sidecar run through here so they can never disagree
std::vector<AggregateRow> aggregate(const std::vector<TrialRecord>& records,
                                    const std::vector<std::string>& group_by,
                                    bool x_is_delta = false);

struct GroupSlopes {
  std::vector<std::string> key;
  SlopeFit median_fit;
  SlopeFit mean_fit;
};

// log-log slope of error vs m (or vs delta) per group; needs >= 3 distinct
// x values in at least one group
std::vector<GroupSlopes> fit_loglog_slopes(const std::vector<TrialRecord>& records,
                                           const std::vector<std::string>& group_by,
                                           bool x_is_delta = false);

inline const std::vector<std::string>& default_group_by() {
  static const std::vector<std::string> cols{"set", "sensing", "delta", "dithered"};
  return cols;
}

}  // namespace qcs
