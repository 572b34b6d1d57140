#include "qcs/plot.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "qcs/errors.hpp"
#include "qcs/stats.hpp"

namespace qcs {

namespace {

constexpr double kW = 760, kH = 540;
constexpr double kL = 80, kR = 30, kT = 44, kB = 62;

const char* kColors[] = {"#1f77b4", "#ff7f0e", "#e377c2", "#2ca02c",
                         "#d62728", "#9467bd", "#8c564b", "#17becf"};
constexpr int kNumColors = 8;

struct Curve {
  std::string label;
  std::vector<double> x, y;  // medians, sorted by x
};

double lg(double v) { return std::log10(v); }

std::string fmt(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

// tick positions 1/2/5 per decade inside [lo, hi]
std::vector<double> log_ticks(double lo, double hi) {
  std::vector<double> ticks;
  const int e0 = static_cast<int>(std::floor(std::log10(lo))) - 1;
  const int e1 = static_cast<int>(std::ceil(std::log10(hi))) + 1;
  for (int e = e0; e <= e1; ++e)
    for (double b : {1.0, 2.0, 5.0}) {
      const double v = b * std::pow(10.0, e);
      if (v >= lo * 0.999 && v <= hi * 1.001) ticks.push_back(v);
    }
  return ticks;
}

void draw_marker(std::ostringstream& svg, int shape, double px, double py,
                 const char* color) {
  const double r = 4.0;
  switch (shape % 4) {
    case 0:  // circle
      svg << "<circle cx='" << px << "' cy='" << py << "' r='" << r
          << "' fill='" << color << "'/>\n";
      break;
    case 1:  // diamond
      svg << "<path d='M" << px << ' ' << py - r * 1.2 << " L" << px + r * 1.2 << ' '
          << py << " L" << px << ' ' << py + r * 1.2 << " L" << px - r * 1.2 << ' '
          << py << " Z' fill='" << color << "'/>\n";
      break;
    case 2:  // triangle
      svg << "<path d='M" << px << ' ' << py - r * 1.25 << " L" << px + r * 1.15 << ' '
          << py + r * 0.9 << " L" << px - r * 1.15 << ' ' << py + r * 0.9
          << " Z' fill='" << color << "'/>\n";
      break;
    default:  // square
      svg << "<rect x='" << px - r << "' y='" << py - r << "' width='" << 2 * r
          << "' height='" << 2 * r << "' fill='" << color << "'/>\n";
      break;
  }
}

std::string sidecar_path(const std::string& out_path) {
  const auto slash = out_path.find_last_of('/');
  const auto dot = out_path.find_last_of('.');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
    return out_path + ".data.csv";
  return out_path.substr(0, dot) + ".data.csv";
}

}  // namespace

void emit_plot(const std::vector<TrialRecord>& records, const PlotStyle& style,
               const std::string& out_path) {
  if (records.empty()) throw ConfigError("emit_plot: no records");

  std::set<int> distinct_m;
  for (const auto& r : records) distinct_m.insert(r.m);
  std::string x_axis = style.x_axis;
  if (x_axis == "auto") x_axis = distinct_m.size() > 1 ? "m" : "delta";
  if (x_axis != "m" && x_axis != "delta")
    throw ConfigError("emit_plot: x axis must be m, delta, or auto");
  const bool by_delta = x_axis == "delta";

  const auto& group_by = default_group_by();
  auto rows = aggregate(records, group_by, by_delta);
  std::sort(rows.begin(), rows.end(), [](const AggregateRow& a, const AggregateRow& b) {
    return a.key != b.key ? a.key < b.key : a.x < b.x;
  });

  // which key columns actually vary decides labels vs title
  std::vector<std::set<std::string>> seen(group_by.size());
  for (const auto& row : rows)
    for (size_t c = 0; c < group_by.size(); ++c) seen[c].insert(row.key[c]);
  auto label_of = [&](const std::vector<std::string>& key) {
    std::string label;
    for (size_t c = 0; c < group_by.size(); ++c) {
      if (seen[c].size() < 2) continue;
      if (by_delta && group_by[c] == "delta") continue;
      if (!label.empty()) label += ", ";
      if (group_by[c] == "delta")
        label += "delta=" + key[c];
      else if (group_by[c] == "dithered")
        label += key[c] == "1" ? "dithered" : "no dither";
      else
        label += key[c];
    }
    return label.empty() ? "median" : label;
  };

  std::map<std::vector<std::string>, Curve> curves;
  for (const auto& row : rows) {
    Curve& c = curves[row.key];
    if (c.label.empty()) c.label = label_of(row.key);
    c.x.push_back(row.x);
    c.y.push_back(row.median_error);
  }

  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  for (const auto& [key, c] : curves)
    for (size_t i = 0; i < c.x.size(); ++i) {
      if (c.x[i] > 0) xmin = std::min(xmin, c.x[i]), xmax = std::max(xmax, c.x[i]);
      if (c.y[i] > 0) ymin = std::min(ymin, c.y[i]), ymax = std::max(ymax, c.y[i]);
    }
  if (!(xmin <= xmax) || !(ymin <= ymax))
    throw ConfigError("emit_plot: no positive data to place on log axes");
  // pad in log space; degenerate spans get half a decade each way
  auto pad = [](double& lo, double& hi) {
    double a = lg(lo), b = lg(hi);
    const double p = (b - a) < 1e-12 ? 0.5 : 0.06 * (b - a);
    lo = std::pow(10.0, a - p);
    hi = std::pow(10.0, b + p);
  };
  pad(xmin, xmax);
  pad(ymin, ymax);

  auto px = [&](double v) {
    return kL + (lg(v) - lg(xmin)) / (lg(xmax) - lg(xmin)) * (kW - kL - kR);
  };
  auto py = [&](double v) {
    return kH - kB - (lg(v) - lg(ymin)) / (lg(ymax) - lg(ymin)) * (kH - kT - kB);
  };

  std::string title;
  for (size_t c = 0; c < group_by.size(); ++c)
    if (seen[c].size() == 1) {
      if (!title.empty()) title += ", ";
      if (group_by[c] == "delta")
        title += "delta=" + *seen[c].begin();
      else if (group_by[c] == "dithered")
        title += *seen[c].begin() == "1" ? "dithered" : "no dither";
      else
        title += *seen[c].begin();
    }
  title += std::string(title.empty() ? "" : " - ") + "median error vs " + x_axis;

  std::ostringstream svg;
  svg << "<svg xmlns='http://www.w3.org/2000/svg' viewBox='0 0 " << kW << ' ' << kH
      << "' font-family='Helvetica,Arial,sans-serif' font-size='13'>\n";
  svg << "<rect width='" << kW << "' height='" << kH << "' fill='white'/>\n";
  svg << "<text x='" << kW / 2 << "' y='24' text-anchor='middle' font-size='15'>"
      << title << "</text>\n";

  for (double t : log_ticks(xmin, xmax)) {
    const double p = px(t);
    svg << "<line x1='" << p << "' y1='" << kT << "' x2='" << p << "' y2='"
        << kH - kB << "' stroke='#e6e6e6'/>\n";
    svg << "<text x='" << p << "' y='" << kH - kB + 18
        << "' text-anchor='middle' fill='#444'>" << fmt(t) << "</text>\n";
  }
  for (double t : log_ticks(ymin, ymax)) {
    const double p = py(t);
    svg << "<line x1='" << kL << "' y1='" << p << "' x2='" << kW - kR << "' y2='" << p
        << "' stroke='#e6e6e6'/>\n";
    svg << "<text x='" << kL - 8 << "' y='" << p + 4
        << "' text-anchor='end' fill='#444'>" << fmt(t) << "</text>\n";
  }
  svg << "<rect x='" << kL << "' y='" << kT << "' width='" << kW - kL - kR
      << "' height='" << kH - kT - kB << "' fill='none' stroke='#333'/>\n";
  svg << "<text x='" << (kL + kW - kR) / 2 << "' y='" << kH - 16
      << "' text-anchor='middle'>"
      << (by_delta ? "quantization step delta" : "measurements m") << "</text>\n";
  svg << "<text x='22' y='" << (kT + kH - kB) / 2
      << "' text-anchor='middle' transform='rotate(-90 22 " << (kT + kH - kB) / 2
      << ")'>median reconstruction error</text>\n";

  // reference decay guides, only meaningful against a growing m axis
  if (!by_delta && distinct_m.size() > 1) {
    double anchor_y = -1e300;
    for (const auto& [key, c] : curves)
      for (size_t i = 0; i < c.x.size(); ++i)
        if (c.x[i] <= *distinct_m.begin() + 0.5) anchor_y = std::max(anchor_y, c.y[i]);
    if (anchor_y > 0) {
      const double x0 = *distinct_m.begin(), x1 = *distinct_m.rbegin();
      for (double slope : {-0.5, -1.0}) {
        const double y0 = anchor_y * 1.35;
        const double y1 = y0 * std::pow(x1 / x0, slope);
        svg << "<line x1='" << px(x0) << "' y1='" << py(y0) << "' x2='" << px(x1)
            << "' y2='" << py(y1)
            << "' stroke='#888' stroke-dasharray='6 4' class='guide'/>\n";
        svg << "<text x='" << px(x1) - 4 << "' y='" << py(y1) - 6
            << "' text-anchor='end' fill='#666' font-size='12'>m^" << slope
            << "</text>\n";
      }
    }
  }

  int ci = 0;
  for (const auto& [key, c] : curves) {
    const char* color = kColors[ci % kNumColors];
    if (c.x.size() > 1) {
      svg << "<polyline fill='none' stroke='" << color << "' stroke-width='1.8' points='";
      for (size_t i = 0; i < c.x.size(); ++i)
        svg << px(c.x[i]) << ',' << py(c.y[i]) << ' ';
      svg << "' class='curve'/>\n";
    }
    for (size_t i = 0; i < c.x.size(); ++i) draw_marker(svg, ci, px(c.x[i]), py(c.y[i]), color);
    ++ci;
  }

  const double lx = kW - kR - 190, ly0 = kT + 12;
  svg << "<rect x='" << lx - 10 << "' y='" << ly0 - 14 << "' width='196' height='"
      << 22.0 * static_cast<double>(curves.size()) + 8 << "' fill='white' opacity='0.85' stroke='#999'/>\n";
  ci = 0;
  for (const auto& [key, c] : curves) {
    const double ly = ly0 + 22.0 * ci;
    draw_marker(svg, ci, lx + 4, ly - 4, kColors[ci % kNumColors]);
    svg << "<text x='" << lx + 16 << "' y='" << ly << "'>" << c.label << "</text>\n";
    ++ci;
  }
  svg << "</svg>\n";

  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw ConfigError("cannot open plot output: " + out_path);
  out << svg.str();
  if (!out) throw ConfigError("write failed: " + out_path);

  std::ofstream side(sidecar_path(out_path), std::ios::binary);
  if (!side) throw ConfigError("cannot open plot sidecar: " + sidecar_path(out_path));
  side << "set,sensing,delta,dithered," << (by_delta ? "delta" : "m")
       << ",median_error,mean_error,trials\n";
  for (const auto& row : rows) {
    for (const auto& part : row.key) side << part << ',';
    side << format_g9(row.x) << ',' << format_g9(row.median_error) << ','
         << format_g9(row.mean_error) << ',' << row.trials << '\n';
  }
  if (!side) throw ConfigError("write failed: " + sidecar_path(out_path));
}

}  // namespace qcs
