// qcs: quantized compressive sensing lab
//   run       execute a trial grid from a config file, write a CSV
//   slope     log-log decay fits over a result CSV
//   plot      SVG figure + aggregate sidecar from a result CSV
//   diagnose  sampled distortion / dither / mean-width probes

#include <cmath>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qcs/diagnostics.hpp"
#include "qcs/errors.hpp"
#include "qcs/harness.hpp"
#include "qcs/plot.hpp"
#include "qcs/stats.hpp"

namespace {

struct RunArgs {
  std::string config;
  std::string out;
  int threads = 1;
};

struct SlopeArgs {
  std::string in;
  std::string group_by = "set,sensing,delta,dithered";
  std::string x = "m";
};

struct PlotArgs {
  std::string in;
  std::string out;
  std::string x = "auto";
};

struct DiagArgs {
  std::string sensing = "gaussian";
  int n = 512, m = 256, k = 4;
  int n1 = 0, n2 = 0, r = 0;
  double a = 0.0, delta = 1.0;
  long samples = 1000, pairs = 1000;
  std::uint64_t seed = 1, op_seed = 0;
  bool no_dither = false, fresh_dither = false;
};

std::vector<std::string> split_cols(const std::string& s) {
  std::vector<std::string> cols;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      if (!cur.empty()) cols.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  if (!cur.empty()) cols.push_back(cur);
  return cols;
}

int cmd_run(const RunArgs& args) {
  qcs::ExperimentConfig cfg = qcs::load_config(args.config);
  if (!args.out.empty()) cfg.output = args.out;
  const auto records = qcs::run_experiment(cfg, args.threads);
  qcs::write_csv_file(cfg.output, records);
  std::cout << records.size() << " trials -> " << cfg.output << "\n";
  return 0;
}

int cmd_slope(const SlopeArgs& args) {
  const auto records = qcs::read_csv_file(args.in);
  const auto cols = split_cols(args.group_by);
  if (cols.empty()) throw qcs::ConfigError("slope: empty group-by");
  if (args.x != "m" && args.x != "delta")
    throw qcs::ConfigError("slope: --x must be m or delta");
  const auto fits = qcs::fit_loglog_slopes(records, cols, args.x == "delta");

  for (const auto& col : cols) std::cout << std::setw(13) << std::left << col;
  std::cout << std::right << std::setw(7) << "points" << std::setw(11) << "slope"
            << std::setw(11) << "intercept" << std::setw(9) << "r2" << std::setw(12)
            << "slope_mean" << std::setw(9) << "r2_mean" << "\n";
  for (const auto& fit : fits) {
    for (const auto& part : fit.key) std::cout << std::setw(13) << std::left << part;
    std::cout << std::right << std::setw(7) << fit.median_fit.points;
    if (fit.median_fit.degenerate) {
      std::cout << std::setw(11) << "n/a" << std::setw(11) << "n/a" << std::setw(9)
                << "n/a";
    } else {
      std::cout << std::fixed << std::setprecision(4) << std::setw(11)
                << fit.median_fit.slope << std::setw(11) << fit.median_fit.intercept
                << std::setw(9) << fit.median_fit.r2;
    }
    if (fit.mean_fit.degenerate)
      std::cout << std::setw(12) << "n/a" << std::setw(9) << "n/a";
    else
      std::cout << std::fixed << std::setprecision(4) << std::setw(12)
                << fit.mean_fit.slope << std::setw(9) << fit.mean_fit.r2;
    std::cout.unsetf(std::ios::fixed);
    std::cout << "\n";
  }
  return 0;
}

int cmd_plot(const PlotArgs& args) {
  const auto records = qcs::read_csv_file(args.in);
  qcs::emit_plot(records, qcs::PlotStyle{args.x}, args.out);
  std::cout << "wrote " << args.out << "\n";
  return 0;
}

qcs::SensingOperator diag_operator(const DiagArgs& d) {
  const auto kind = qcs::sensing_kind_from_string(d.sensing);
  const std::uint64_t op_seed =
      d.op_seed ? d.op_seed : qcs::derive_seed(d.seed, {0xa11ce});
  return qcs::make_operator(kind, d.m, d.n, op_seed);
}

int cmd_diag_rip(const DiagArgs& d) {
  const bool matrix_set = d.n1 > 0 || d.n2 > 0 || d.r > 0;
  DiagArgs dd = d;
  qcs::UnitSampler sampler;
  std::string tag;
  if (matrix_set) {
    if (d.n1 < 1 || d.n2 < 1 || d.r < 1)
      throw qcs::ConfigError("rip: give all of --n1 --n2 --r");
    dd.n = d.n1 * d.n2;
    sampler = qcs::lowrank_unit_sampler(d.n1, d.n2, d.r);
    tag = "lowrank r=" + std::to_string(d.r);
  } else {
    sampler = qcs::sparse_unit_sampler(d.n, d.k);
    tag = "sparse k=" + std::to_string(d.k);
  }
  const auto op = diag_operator(dd);
  qcs::Rng rng(dd.seed);
  const auto rep = qcs::rip_distortion_estimate(op, sampler, dd.samples, rng, tag);
  std::cout << "rip max distortion = " << qcs::format_g9(rep.max_distortion)
            << "  (sampler: " << rep.sampler_tag << ", samples=" << rep.samples
            << ", " << dd.sensing << " m=" << dd.m << " n=" << dd.n
            << ", sampled lower bound on the set-wide constant)\n";
  return 0;
}

int cmd_diag_lpd(const DiagArgs& d) {
  const auto op = diag_operator(d);
  qcs::Rng rng(d.seed);
  const qcs::QuantizerConfig qc{
      d.delta, d.no_dither ? qcs::Dithering::None : qcs::Dithering::Uniform};
  const auto sampler = qcs::independent_pairs(qcs::sparse_unit_sampler(d.n, d.k));
  const auto rep =
      qcs::lpd_distortion_estimate(op, qc, sampler, d.pairs, d.fresh_dither, rng,
                                   "sparse k=" + std::to_string(d.k));
  std::cout << "lpd max distortion = " << qcs::format_g9(rep.max_distortion)
            << "  (sampler: " << rep.sampler_tag << ", pairs=" << rep.samples
            << ", delta=" << qcs::format_g9(rep.delta)
            << (rep.dithered ? ", dithered" : ", no dither")
            << (rep.fresh_dither ? ", fresh dither per pair" : ", shared dither")
            << ", sampled lower bound on the set-wide constant)\n";
  return 0;
}

int cmd_diag_dither(const DiagArgs& d) {
  qcs::Rng rng(d.seed);
  const double mean = qcs::dither_expectation_check(d.a, d.delta, d.samples, rng);
  const double band = 2.0 * d.delta / std::sqrt(static_cast<double>(d.samples));
  std::cout << "empirical mean of quantize(a + dither) = " << qcs::format_g9(mean)
            << "  (a=" << qcs::format_g9(d.a) << ", |mean - a|="
            << qcs::format_g9(std::abs(mean - d.a)) << ", 4-sigma band="
            << qcs::format_g9(band) << ", "
            << (std::abs(mean - d.a) <= band ? "within" : "OUTSIDE") << ")\n";
  return 0;
}

int cmd_diag_width(const DiagArgs& d) {
  qcs::Rng rng(d.seed);
  const double w = qcs::mean_width_sparse(d.n, d.k, d.samples, rng);
  std::cout << "sparse mean width ~ " << qcs::format_g9(w) << "  (n=" << d.n
            << ", k=" << d.k << ", samples=" << d.samples
            << ", squared=" << qcs::format_g9(w * w) << ")\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantized compressive sensing lab"};
  app.require_subcommand(1);

  RunArgs run_args;
  auto* run = app.add_subcommand("run", "run a configured experiment grid");
  run->add_option("--config", run_args.config, "config file path")->required();
  run->add_option("--out", run_args.out, "override the config's output csv");
  run->add_option("--threads", run_args.threads, "worker threads")
      ->check(CLI::PositiveNumber);

  SlopeArgs slope_args;
  auto* slope = app.add_subcommand("slope", "fit log-log decay slopes");
  slope->add_option("--in", slope_args.in, "input csv")->required();
  slope->add_option("--group-by", slope_args.group_by, "comma-separated key columns");
  slope->add_option("--x", slope_args.x, "x axis: m or delta");

  PlotArgs plot_args;
  auto* plot = app.add_subcommand("plot", "render an SVG + aggregate sidecar");
  plot->add_option("--in", plot_args.in, "input csv")->required();
  plot->add_option("--out", plot_args.out, "output svg path")->required();
  plot->add_option("--x", plot_args.x, "x axis: m, delta, or auto");

  auto* diag = app.add_subcommand("diagnose", "sampled estimator probes");
  diag->require_subcommand(1);
  DiagArgs d;
  auto add_common = [&d](CLI::App* sub, bool with_op) {
    sub->add_option("--seed", d.seed, "sampler seed");
    sub->add_option("--samples", d.samples, "sample count")->check(CLI::PositiveNumber);
    if (with_op) {
      sub->add_option("--sensing", d.sensing, "gaussian|bernoulli|pdct|sors");
      sub->add_option("--n", d.n, "ambient dimension");
      sub->add_option("--m", d.m, "measurements");
      sub->add_option("--k", d.k, "sparsity of the sampler");
      sub->add_option("--op-seed", d.op_seed, "operator seed (default: derived)");
    }
  };
  auto* rip = diag->add_subcommand("rip", "norm distortion over a structured sampler");
  add_common(rip, true);
  rip->add_option("--n1", d.n1, "rows (low-rank sampler)");
  rip->add_option("--n2", d.n2, "cols (low-rank sampler)");
  rip->add_option("--r", d.r, "rank (low-rank sampler)");
  auto* lpd = diag->add_subcommand("lpd", "quantized correlation distortion over pairs");
  add_common(lpd, true);
  lpd->add_option("--delta", d.delta, "quantization step");
  lpd->add_option("--pairs", d.pairs, "pair count")->check(CLI::PositiveNumber);
  lpd->add_flag("--no-dither", d.no_dither, "disable dithering");
  lpd->add_flag("--fresh-dither", d.fresh_dither, "redraw the dither per pair");
  auto* dither = diag->add_subcommand("dither", "unbiasedness of dithered quantization");
  add_common(dither, false);
  dither->add_option("--a", d.a, "probe value");
  dither->add_option("--delta", d.delta, "quantization step");
  auto* width = diag->add_subcommand("width", "Monte-Carlo sparse mean width");
  add_common(width, false);
  width->add_option("--n", d.n, "ambient dimension");
  width->add_option("--k", d.k, "sparsity");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*run) return cmd_run(run_args);
    if (*slope) return cmd_slope(slope_args);
    if (*plot) return cmd_plot(plot_args);
    if (*rip) return cmd_diag_rip(d);
    if (*lpd) return cmd_diag_lpd(d);
    if (*dither) return cmd_diag_dither(d);
    if (*width) return cmd_diag_width(d);
  } catch (const qcs::NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  } catch (const qcs::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
