#pragma once

#include <string>
#include <vector>

#include "qcs/harness.hpp"

namespace qcs {

struct PlotStyle {
  // "m", "delta", or "auto" (m when several m values are present)
  std::string x_axis = "auto";
};

// Self-contained SVG: log-log median-error curves (one per delta / dithering
// state), reference decay guides for error-vs-m layouts, and a sidecar
// "<out stem>.data.csv" holding exactly the aggregates that were drawn.
void emit_plot(const std::vector<TrialRecord>& records, const PlotStyle& style,
               const std::string& out_path);

}  // namespace qcs
