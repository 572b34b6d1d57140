#include "qcs/stats.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace qcs {

double median(std::vector<double> v) {
  if (v.empty()) throw std::invalid_argument("median: empty sample");
  std::sort(v.begin(), v.end());
  const size_t n = v.size();
  return (n % 2 == 1) ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

SlopeFit ols_loglog(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) throw std::invalid_argument("ols_loglog: length mismatch");
  std::vector<double> lx, ly;
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i] > 0.0 && y[i] > 0.0) {
      lx.push_back(std::log(x[i]));
      ly.push_back(std::log(y[i]));
    }
  }
  SlopeFit fit;
  fit.points = static_cast<int>(lx.size());
  if (lx.size() < 3) {
    fit.degenerate = true;
    return fit;
  }
  const double n = static_cast<double>(lx.size());
  double mx = 0.0, my = 0.0;
  for (size_t i = 0; i < lx.size(); ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (size_t i = 0; i < lx.size(); ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
    syy += (ly[i] - my) * (ly[i] - my);
  }
  if (sxx <= 0.0) {
    fit.degenerate = true;
    return fit;
  }
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  const double ssres = syy - sxy * sxy / sxx;
  fit.r2 = (syy <= 1e-300) ? 1.0 : 1.0 - ssres / syy;
  return fit;
}

std::string record_field(const TrialRecord& rec, const std::string& column) {
  if (column == "set") return rec.set;
  if (column == "sensing") return rec.sensing;
  if (column == "delta") return format_g9(rec.delta);
  if (column == "dithered") return rec.dithered ? "1" : "0";
  if (column == "n") return std::to_string(rec.n);
  if (column == "k_or_r") return std::to_string(rec.k_or_r);
  if (column == "m") return std::to_string(rec.m);
  if (column == "experiment_id") return rec.experiment_id;
  throw std::invalid_argument("record_field: unknown column '" + column + "'");
}

std::vector<AggregateRow> aggregate(const std::vector<TrialRecord>& records,
                                    const std::vector<std::string>& group_by,
                                    bool x_is_delta) {
  std::map<std::pair<std::vector<std::string>, double>, std::vector<double>> cells;
  for (const auto& rec : records) {
    std::vector<std::string> key;
    key.reserve(group_by.size());
    for (const auto& col : group_by) key.push_back(record_field(rec, col));
    const double x = x_is_delta ? rec.delta : static_cast<double>(rec.m);
    cells[{std::move(key), x}].push_back(rec.error);
  }
  std::vector<AggregateRow> rows;
  rows.reserve(cells.size());
  for (auto& [kx, errs] : cells) {
    AggregateRow row;
    row.key = kx.first;
    row.x = kx.second;
    row.median_error = median(errs);
    double sum = 0.0;
    for (double e : errs) sum += e;
    row.mean_error = sum / static_cast<double>(errs.size());
    row.trials = static_cast<int>(errs.size());
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<GroupSlopes> fit_loglog_slopes(const std::vector<TrialRecord>& records,
                                           const std::vector<std::string>& group_by,
                                           bool x_is_delta) {
  const auto rows = aggregate(records, group_by, x_is_delta);
  std::map<std::vector<std::string>, std::vector<const AggregateRow*>> groups;
  for (const auto& row : rows) groups[row.key].push_back(&row);
  size_t widest = 0;
  for (const auto& [key, grp] : groups) widest = std::max(widest, grp.size());
  if (widest < 3)
    throw std::invalid_argument(
        "fit_loglog_slopes: need at least 3 distinct x values in some group");
  std::vector<GroupSlopes> out;
  for (const auto& [key, grp] : groups) {
    std::vector<double> xs, med, mean;
    for (const auto* row : grp) {
      xs.push_back(row->x);
      med.push_back(row->median_error);
      mean.push_back(row->mean_error);
    }
    GroupSlopes gs;
    gs.key = key;
    gs.median_fit = ols_loglog(xs, med);
    gs.mean_fit = ols_loglog(xs, mean);
    out.push_back(std::move(gs));
  }
  return out;
}

}  // namespace qcs
