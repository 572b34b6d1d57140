// Acceptance gate. Each criterion prints exactly one PASS/FAIL line with the
// measured values next to the thresholds it is judged against; the process
// exit code is the number of failed criteria. Every criterion is
// self-contained (baselines are recomputed, never shared), so
// `--only N` reproduces any line in isolation.

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qcs/dct.hpp"
#include "qcs/diagnostics.hpp"
#include "qcs/errors.hpp"
#include "qcs/harness.hpp"
#include "qcs/pbp.hpp"
#include "qcs/projectors.hpp"
#include "qcs/quantizer.hpp"
#include "qcs/rng.hpp"
#include "qcs/sensing.hpp"
#include "qcs/signals.hpp"
#include "qcs/stats.hpp"
#include "support/oracles.hpp"

namespace {

using qcs::derive_seed;
using qcs::Rng;
using qcs::TrialRecord;

// ---- thresholds, all in one place ------------------------------------------
constexpr double kSparseSlopeLo = -0.85;     // sparse decay band
constexpr double kSparseSlopeHi = -0.50;
constexpr double kSparseR2Min = 0.9;
constexpr double kSparseBudgetSec = 300.0;
constexpr double kConvexSlopeLo = -0.65;     // compressible and low-rank band
constexpr double kConvexSlopeHi = -0.35;
constexpr double kStepRatioLo = 1.4;         // err(2 d)/err(d) for d in {4,8,16}
constexpr double kStepRatioHi = 2.6;
constexpr double kFloorRatioLo = 0.5;        // err(1/8) within 2x of err(1/4)
constexpr double kFloorRatioHi = 2.0;
constexpr double kParityWindow = 0.15;       // ensemble slope vs gaussian slope
constexpr double kUndithFloorSlopeMin = -0.15;  // undithered pdct upper-half slope
constexpr double kDitheredUpperSlopeMax = -0.4;
constexpr double kBernoulliSlopeGap = 0.15;  // undithered minus dithered
constexpr double kOracleTol = 1e-6;          // projector oracle agreement
constexpr double kIdemTol = 1e-9;
constexpr double kNonexpTol = 1e-9;
constexpr double kHtOracleTol = 1e-10;
constexpr double kAdjointTol = 1e-10;        // relative to |u| |v|
constexpr double kDenseMatchTol = 1e-10;
constexpr double kDctTol = 1e-12;
constexpr int kBoundHoldMin = 90;            // out of 100 audited trials
constexpr int kUnbiasedPairs = 20;
constexpr long kUnbiasedSamples = 1000000;

struct Check {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, ...) {
  char buf[512];
  va_list args;
  va_start(args, f);
  std::vsnprintf(buf, sizeof(buf), f, args);
  va_end(args);
  return std::string(buf);
}

std::vector<TrialRecord> run_text(const std::string& text) {
  return qcs::run_experiment(qcs::parse_config(text), 1);
}

// config text for the shared vector decay protocol: n=512, k=4, delta=1,
// 12-point geometric m-grid from 112 to 512
std::string decay_text(const std::string& set, const std::string& sensing,
                       std::uint64_t seed, bool dithered) {
  std::ostringstream os;
  os << "experiment = " << (dithered ? "decay_vs_m" : "no_dither") << "\n"
     << "set = " << set << "\n"
     << "sensing = " << sensing << "\n"
     << "n = 512\nk = 4\ndelta = 1\n"
     << "m_grid = geometric(112,512,12)\n"
     << "trials = 100\n"
     << "base_seed = " << seed << "\n";
  return os.str();
}

qcs::SlopeFit median_decay_fit(const std::vector<TrialRecord>& recs) {
  const auto groups = qcs::fit_loglog_slopes(recs, qcs::default_group_by());
  if (groups.size() != 1) throw std::runtime_error("expected one record group");
  return groups[0].median_fit;
}

// slope restricted to records whose m lies in the given set
qcs::SlopeFit median_decay_fit_over(const std::vector<TrialRecord>& recs,
                                    const std::set<int>& keep_m) {
  std::vector<TrialRecord> sub;
  for (const auto& r : recs)
    if (keep_m.count(r.m)) sub.push_back(r);
  return median_decay_fit(sub);
}

// per-delta median errors from a quantizer step sweep
std::map<double, double> medians_by_delta(const std::vector<TrialRecord>& recs) {
  std::map<double, double> out;
  for (const auto& row : qcs::aggregate(recs, qcs::default_group_by(), true))
    out[row.x] = row.median_error;
  return out;
}

// ---- criteria ---------------------------------------------------------------

Check sparse_decay() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto recs = run_text(decay_text("sparse", "gaussian", 101, true));
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const auto fit = median_decay_fit(recs);
  Check c;
  c.pass = fit.slope >= kSparseSlopeLo && fit.slope <= kSparseSlopeHi &&
           fit.r2 >= kSparseR2Min && secs <= kSparseBudgetSec;
  c.detail = fmt("sparse decay: slope=%.3f (need [%.2f, %.2f]), r2=%.3f (need >= %.2f), "
                 "run %.1fs (budget %.0fs)",
                 fit.slope, kSparseSlopeLo, kSparseSlopeHi, fit.r2, kSparseR2Min, secs,
                 kSparseBudgetSec);
  return c;
}

Check compressible_decay() {
  const auto recs = run_text(decay_text("compressible", "gaussian", 102, true));
  const auto fit = median_decay_fit(recs);
  Check c;
  c.pass = fit.slope >= kConvexSlopeLo && fit.slope <= kConvexSlopeHi;
  c.detail = fmt("compressible decay: slope=%.3f (need [%.2f, %.2f]), r2=%.3f", fit.slope,
                 kConvexSlopeLo, kConvexSlopeHi, fit.r2);
  return c;
}

Check lowrank_decay() {
  const auto recs = run_text(
      "experiment = decay_vs_m\nset = lowrank\nsensing = gaussian\n"
      "n1 = 32\nn2 = 32\nr = 2\ndelta = 1\n"
      "m_grid = geometric(128,1024,12)\ntrials = 25\nbase_seed = 103\n");
  const auto fit = median_decay_fit(recs);
  Check c;
  c.pass = fit.slope >= kConvexSlopeLo && fit.slope <= kConvexSlopeHi;
  c.detail = fmt("low-rank decay (32x32, r=2): slope=%.3f (need [%.2f, %.2f]), r2=%.3f",
                 fit.slope, kConvexSlopeLo, kConvexSlopeHi, fit.r2);
  return c;
}

Check step_sweep() {
  const char* base =
      "experiment = error_vs_delta\nsensing = gaussian\nn = 512\nk = 4\nm = 256\n"
      "delta_list = 0.125,0.25,0.5,1,2,4,8,16,32\ntrials = 100\n";
  Check c;
  c.pass = true;
  std::string note;
  for (const std::string set : {"sparse", "compressible"}) {
    const auto recs = run_text(std::string(base) + "set = " + set + "\nbase_seed = 104\n");
    const auto med = medians_by_delta(recs);
    bool monotone = true;
    for (double d = 1.0; d < 32.0; d *= 2.0)
      if (med.at(2.0 * d) < med.at(d)) monotone = false;
    double worst_lo = 1e300, worst_hi = 0.0;
    for (double d : {4.0, 8.0, 16.0}) {
      const double ratio = med.at(2.0 * d) / med.at(d);
      worst_lo = std::min(worst_lo, ratio);
      worst_hi = std::max(worst_hi, ratio);
    }
    const double floor_ratio = med.at(0.125) / med.at(0.25);
    const bool ratios_ok = worst_lo >= kStepRatioLo && worst_hi <= kStepRatioHi;
    const bool floor_ok = floor_ratio >= kFloorRatioLo && floor_ratio <= kFloorRatioHi;
    c.pass = c.pass && monotone && ratios_ok && floor_ok;
    note += fmt("%s[monotone(d>=1)=%s, doubling ratios %.2f..%.2f (need [%.1f, %.1f]), "
                "floor err(1/8)/err(1/4)=%.2f (need [%.1f, %.1f])] ",
                set.c_str(), monotone ? "yes" : "NO", worst_lo, worst_hi, kStepRatioLo,
                kStepRatioHi, floor_ratio, kFloorRatioLo, kFloorRatioHi);
  }
  c.detail = "step sweep at m=256: " + note;
  return c;
}

Check ensemble_parity() {
  const double g = median_decay_fit(run_text(decay_text("sparse", "gaussian", 101, true))).slope;
  const double b = median_decay_fit(run_text(decay_text("sparse", "bernoulli", 105, true))).slope;
  const double p = median_decay_fit(run_text(decay_text("sparse", "pdct", 106, true))).slope;
  Check c;
  c.pass = std::abs(b - g) <= kParityWindow && std::abs(p - g) <= kParityWindow;
  c.detail = fmt("ensemble parity: gaussian slope=%.3f, bernoulli=%.3f (|diff|=%.3f), "
                 "pdct=%.3f (|diff|=%.3f), window %.2f",
                 g, b, std::abs(b - g), p, std::abs(p - g), kParityWindow);
  return c;
}

Check dithering_necessity() {
  // upper half of the m-grid, where the undithered pdct error flattens out
  const auto grid = qcs::parse_config(decay_text("sparse", "pdct", 1, true)).m_values;
  const std::set<int> upper(grid.begin() + static_cast<long>(grid.size() / 2), grid.end());

  const auto pdct_on = run_text(decay_text("sparse", "pdct", 107, true));
  const auto pdct_off = run_text(decay_text("sparse", "pdct", 107, false));
  const double pdct_on_up = median_decay_fit_over(pdct_on, upper).slope;
  const double pdct_off_up = median_decay_fit_over(pdct_off, upper).slope;

  const double bern_on = median_decay_fit(run_text(decay_text("sparse", "bernoulli", 108, true))).slope;
  const double bern_off = median_decay_fit(run_text(decay_text("sparse", "bernoulli", 108, false))).slope;

  Check c;
  c.pass = pdct_off_up >= kUndithFloorSlopeMin && pdct_on_up <= kDitheredUpperSlopeMax &&
           bern_off >= bern_on + kBernoulliSlopeGap;
  c.detail = fmt("dithering necessity: pdct upper-half slope undithered=%.3f (need >= %.2f) "
                 "vs dithered=%.3f (need <= %.2f); bernoulli slope undithered=%.3f vs "
                 "dithered=%.3f (need gap >= %.2f, got %.3f)",
                 pdct_off_up, kUndithFloorSlopeMin, pdct_on_up, kDitheredUpperSlopeMax,
                 bern_off, bern_on, kBernoulliSlopeGap, bern_off - bern_on);
  return c;
}

Check dither_unbiasedness() {
  Rng rng(109);
  double worst_ratio = 0.0, worst_dev = 0.0, worst_band = 0.0;
  for (int i = 0; i < kUnbiasedPairs; ++i) {
    const double a = rng.uniform(-8.0, 8.0);
    const double delta = std::exp2(rng.uniform(-2.0, 2.0));
    const double mean = qcs::dither_expectation_check(a, delta, kUnbiasedSamples, rng);
    const double dev = std::abs(mean - a);
    const double band = 2.0 * delta / std::sqrt(static_cast<double>(kUnbiasedSamples));
    if (dev / band > worst_ratio) {
      worst_ratio = dev / band;
      worst_dev = dev;
      worst_band = band;
    }
  }
  Check c;
  c.pass = worst_ratio <= 1.0;
  c.detail = fmt("dither unbiasedness: worst |mean - a| = %.3g vs band 2 delta/sqrt(N) = %.3g "
                 "over %d pairs, N=%ld",
                 worst_dev, worst_band, kUnbiasedPairs, kUnbiasedSamples);
  return c;
}

Eigen::VectorXd random_vec(int n, Rng& rng, double scale) {
  Eigen::VectorXd x(n);
  for (int i = 0; i < n; ++i) x[i] = scale * rng.normal();
  return x;
}

Check projector_oracles() {
  Rng rng(110);
  // hard thresholding vs exhaustive support search
  double ht_worst = 0.0;
  for (int n = 4; n <= 10; ++n)
    for (int k = 1; k <= 3; ++k)
      for (int rep = 0; rep < 5; ++rep) {
        const Eigen::VectorXd z = random_vec(n, rng, 2.0);
        const double got = (z - qcs::hard_threshold(z, k)).norm();
        ht_worst = std::max(ht_worst, std::abs(got - oracle::best_ksupport_distance(z, k)));
      }
  // l1 ball vs dual bisection
  double l1_worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const int n = 2 + static_cast<int>(rng.below(5));
    const double tau = 0.4 + 2.0 * rng.uniform01();
    const Eigen::VectorXd z = random_vec(n, rng, i % 2 ? 0.7 : 5.0);
    l1_worst = std::max(l1_worst, (qcs::l1ball_project(z, tau) -
                                   oracle::l1ball_bisection(z, tau)).lpNorm<Eigen::Infinity>());
  }
  // l1-l2 intersection vs stationarity-condition solve
  double ck_worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const int n = 3 + static_cast<int>(rng.below(4));
    const int k = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n > 4 ? 4 : n)));
    const Eigen::VectorXd z = random_vec(n, rng, i % 3 == 0 ? 10.0 : (i % 3 == 1 ? 1.0 : 0.5));
    ck_worst = std::max(ck_worst, (qcs::compressible_project(z, k) -
                                   oracle::ck_project_kkt(z, k)).lpNorm<Eigen::Infinity>());
  }
  // idempotence of every projector
  double idem_worst = 0.0;
  for (int rep = 0; rep < 25; ++rep) {
    const Eigen::VectorXd z = random_vec(10, rng, 3.0);
    const Eigen::VectorXd h = qcs::hard_threshold(z, 3);
    idem_worst = std::max(idem_worst,
                          (qcs::hard_threshold(h, 3) - h).lpNorm<Eigen::Infinity>());
    const Eigen::VectorXd l1 = qcs::l1ball_project(z, 1.5);
    idem_worst = std::max(idem_worst,
                          (qcs::l1ball_project(l1, 1.5) - l1).lpNorm<Eigen::Infinity>());
    const Eigen::VectorXd l2 = qcs::l2ball_project(z, 1.0);
    idem_worst = std::max(idem_worst,
                          (qcs::l2ball_project(l2, 1.0) - l2).lpNorm<Eigen::Infinity>());
    const Eigen::VectorXd ck = qcs::compressible_project(z, 2);
    idem_worst = std::max(idem_worst,
                          (qcs::compressible_project(ck, 2) - ck).lpNorm<Eigen::Infinity>());
    const Eigen::MatrixXd Z = Eigen::MatrixXd::NullaryExpr(
        6, 5, [&rng](Eigen::Index, Eigen::Index) { return rng.normal(); });
    const Eigen::MatrixXd P = qcs::lowrank_project(Z, 2);
    idem_worst = std::max(idem_worst, (qcs::lowrank_project(P, 2) - P).norm());
  }
  // nonexpansiveness of the convex projectors
  double nonexp_worst = -1e300;
  for (int rep = 0; rep < 1000; ++rep) {
    const Eigen::VectorXd a = random_vec(8, rng, 2.0);
    const Eigen::VectorXd b = random_vec(8, rng, 2.0);
    const double gap = (a - b).norm();
    nonexp_worst = std::max(nonexp_worst,
                            (qcs::l1ball_project(a, 1.3) - qcs::l1ball_project(b, 1.3)).norm() - gap);
    nonexp_worst = std::max(nonexp_worst,
                            (qcs::l2ball_project(a, 1.0) - qcs::l2ball_project(b, 1.0)).norm() - gap);
    nonexp_worst = std::max(nonexp_worst,
                            (qcs::compressible_project(a, 2) - qcs::compressible_project(b, 2)).norm() - gap);
  }
  Check c;
  c.pass = ht_worst <= kHtOracleTol && l1_worst <= kOracleTol && ck_worst <= kOracleTol &&
           idem_worst <= kIdemTol && nonexp_worst <= kNonexpTol;
  c.detail = fmt("projector oracles: hard-threshold dist gap %.2g (tol %.0e), l1 diff %.2g, "
                 "l1xl2 diff %.2g (tol %.0e), idempotence drift %.2g (tol %.0e), "
                 "nonexpansive excess %.2g (tol %.0e)",
                 ht_worst, kHtOracleTol, l1_worst, ck_worst, kOracleTol, idem_worst, kIdemTol,
                 nonexp_worst, kNonexpTol);
  return c;
}

Check operator_suite() {
  Rng rng(111);
  // adjoint identity, relative to |u| |v|
  double adj_worst = 0.0;
  for (const auto kind : {qcs::SensingKind::Gaussian, qcs::SensingKind::Bernoulli,
                          qcs::SensingKind::PartialDct, qcs::SensingKind::Sors}) {
    const auto op = qcs::make_operator(kind, 48, 96, derive_seed(111, {static_cast<std::uint64_t>(kind)}));
    for (int i = 0; i < 100; ++i) {
      const Eigen::VectorXd u = random_vec(96, rng, 1.0);
      const Eigen::VectorXd v = random_vec(48, rng, 1.0);
      const double lhs = op.apply(u).dot(v);
      const double rhs = u.dot(op.adjoint(v));
      adj_worst = std::max(adj_worst, std::abs(lhs - rhs) / (u.norm() * v.norm()));
    }
  }
  // fast subsampled transform vs materialized dense matrix
  double dense_worst = 0.0;
  for (const int n : {16, 33, 64}) {
    const int m = n / 2;
    const auto op = qcs::make_operator(qcs::SensingKind::PartialDct, m, n,
                                       derive_seed(112, {static_cast<std::uint64_t>(n)}));
    const Eigen::MatrixXd D = oracle::dct_matrix(n);
    Eigen::MatrixXd M(m, n);
    for (int i = 0; i < m; ++i) M.row(i) = std::sqrt(static_cast<double>(n)) * D.row(op.rows[static_cast<size_t>(i)]);
    for (int rep = 0; rep < 20; ++rep) {
      const Eigen::VectorXd x = random_vec(n, rng, 1.0);
      const Eigen::VectorXd y = random_vec(m, rng, 1.0);
      dense_worst = std::max(dense_worst, (op.apply(x) - M * x).lpNorm<Eigen::Infinity>());
      dense_worst = std::max(dense_worst,
                             (op.adjoint(y) - M.transpose() * y).lpNorm<Eigen::Infinity>());
    }
  }
  // transform orthonormality and round trip
  double gram_worst = 0.0;
  for (const int n : {8, 32, 64}) {
    Eigen::MatrixXd C(n, n);
    for (int i = 0; i < n; ++i) {
      Eigen::VectorXd e = Eigen::VectorXd::Zero(n);
      e[i] = 1.0;
      C.col(i) = qcs::dct2_orthonormal(e);
    }
    gram_worst = std::max(gram_worst, (C.transpose() * C - Eigen::MatrixXd::Identity(n, n))
                                          .lpNorm<Eigen::Infinity>());
  }
  double trip_worst = 0.0;
  for (const int n : {512, 1000}) {
    const Eigen::VectorXd x = random_vec(n, rng, 1.0);
    trip_worst = std::max(trip_worst,
                          (qcs::idct2_orthonormal(qcs::dct2_orthonormal(x)) - x).norm() / x.norm());
  }
  Check c;
  c.pass = adj_worst <= kAdjointTol && dense_worst <= kDenseMatchTol &&
           gram_worst <= kDctTol && trip_worst <= kDctTol;
  c.detail = fmt("operator suite: adjoint identity %.2g (tol %.0e), dense-transform match "
                 "%.2g (tol %.0e), orthonormality %.2g / round trip %.2g (tol %.0e)",
                 adj_worst, kAdjointTol, dense_worst, kDenseMatchTol, gram_worst, trip_worst,
                 kDctTol);
  return c;
}

Check bound_audit() {
  const int n = 512, k = 4, m = 256;
  const qcs::SetTag tag{qcs::SetKind::Sparse, n, k, 0, 0, 0};
  const qcs::Projector proj = qcs::projector_for(tag);
  const qcs::QuantizerConfig qc{1.0, qcs::Dithering::Uniform};
  int holds = 0;
  double worst_margin = 1e300;
  for (int t = 0; t < 100; ++t) {
    const std::uint64_t child = derive_seed(113, {static_cast<std::uint64_t>(t)});
    const auto op = qcs::make_operator(qcs::SensingKind::Gaussian, m, n, derive_seed(child, {1}));
    Rng sig_rng(derive_seed(child, {2}));
    qcs::Signal x = qcs::gen_sparse(n, k, sig_rng);
    x.values /= x.values.norm();  // the error bound assumes a unit-ball signal
    const qcs::Measurements ms = qcs::sense(op, x.values, qc, derive_seed(child, {3}));
    const qcs::Reconstruction rec = qcs::pbp_reconstruct(op, ms, proj);

    Rng rip_rng(derive_seed(child, {4}));
    const auto rip = qcs::rip_distortion_estimate(op, qcs::sparse_unit_sampler(n, 2 * k), 400,
                                                  rip_rng, "sparse-2k");
    std::set<int> support;
    for (int i = 0; i < n; ++i)
      if (x.values[i] != 0.0 || rec.estimate[i] != 0.0) support.insert(i);
    Rng lpd_rng(derive_seed(child, {5}));
    const auto lpd = qcs::lpd_distortion_fixed_dither(
        op, qc, qcs::fixed_u_subspace_sampler(x.values, {support.begin(), support.end()}), 400,
        ms.dither, lpd_rng, "residual-support");
    const auto audit = qcs::pbp_bound_audit(op, ms, x, proj, rip.max_distortion,
                                            lpd.max_distortion);
    holds += audit.holds ? 1 : 0;
    worst_margin = std::min(worst_margin, audit.margin);
  }
  Check c;
  c.pass = holds >= kBoundHoldMin;
  c.detail = fmt("error bound audit: 2(eps+nu) held in %d/100 trials (need >= %d), worst "
                 "margin %.3f; eps/nu are sampled maxima, lower bounds on the true distortions",
                 holds, kBoundHoldMin, worst_margin);
  return c;
}

Check reproducibility() {
  const std::string text =
      "experiment = decay_vs_m\nset = sparse\nsensing = gaussian\nn = 128\nk = 3\n"
      "delta = 1\nm_grid = geometric(32,128,4)\ntrials = 5\nbase_seed = 114\n";
  const auto cfg = qcs::parse_config(text);
  const std::string one = qcs::csv_string(qcs::run_experiment(cfg, 1));
  const std::string one_again = qcs::csv_string(qcs::run_experiment(cfg, 1));
  const std::string two = qcs::csv_string(qcs::run_experiment(cfg, 2));
  const std::string eight = qcs::csv_string(qcs::run_experiment(cfg, 8));
  Check c;
  c.pass = one == one_again && one == two && one == eight;
  c.detail = fmt("reproducibility: csv bytes identical across reruns and 1/2/8 threads: %s "
                 "(%zu bytes)",
                 c.pass ? "yes" : "NO", one.size());
  return c;
}

struct Criterion {
  int id;
  std::function<Check()> run;
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: %s [--only N]   (N in 1..11)\n", argv[0]);
      return 64;
    }
  }
  const std::vector<Criterion> criteria = {
      {1, sparse_decay},        {2, compressible_decay}, {3, lowrank_decay},
      {4, step_sweep},          {5, ensemble_parity},    {6, dithering_necessity},
      {7, dither_unbiasedness}, {8, projector_oracles},  {9, operator_suite},
      {10, bound_audit},        {11, reproducibility},
  };
  int failures = 0;
  for (const auto& crit : criteria) {
    if (only != 0 && crit.id != only) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Check c;
    try {
      c = crit.run();
    } catch (const std::exception& e) {
      c.pass = false;
      c.detail = std::string("threw: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s %2d  %s  [%.1fs]\n", c.pass ? "PASS" : "FAIL", crit.id, c.detail.c_str(),
                secs);
    std::fflush(stdout);
    failures += c.pass ? 0 : 1;
  }
  return failures;
}
