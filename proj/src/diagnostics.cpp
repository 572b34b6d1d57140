#include "qcs/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace qcs {

UnitSampler sparse_unit_sampler(int n, int k) {
  if (n < 1 || k < 1 || k > n)
    throw std::invalid_argument("sparse_unit_sampler: need 1 <= k <= n");
  return [n, k](Rng& rng) {
    Eigen::VectorXd u = Eigen::VectorXd::Zero(n);
    for (int idx : sample_without_replacement(n, k, rng)) u[idx] = rng.normal();
    const double nrm = u.norm();
    if (nrm > 0.0) u /= nrm;
    return u;
  };
}

UnitSampler lowrank_unit_sampler(int n1, int n2, int r) {
  if (n1 < 1 || n2 < 1 || r < 1 || r > std::min(n1, n2))
    throw std::invalid_argument("lowrank_unit_sampler: need 1 <= r <= min(n1, n2)");
  return [n1, n2, r](Rng& rng) {
    Eigen::MatrixXd B(n1, r), C(n2, r);
    for (int j = 0; j < r; ++j)
      for (int i = 0; i < n1; ++i) B(i, j) = rng.normal();
    for (int j = 0; j < r; ++j)
      for (int i = 0; i < n2; ++i) C(i, j) = rng.normal();
    Eigen::MatrixXd X = B * C.transpose();
    X /= X.norm();
    return vec(X);
  };
}

PairSampler independent_pairs(UnitSampler s) {
  return [s](Rng& rng) {
    Eigen::VectorXd u = s(rng);
    Eigen::VectorXd v = s(rng);
    return std::make_pair(std::move(u), std::move(v));
  };
}

PairSampler fixed_u_subspace_sampler(const Eigen::VectorXd& u, std::vector<int> support) {
  if (support.empty()) throw std::invalid_argument("fixed_u_subspace_sampler: empty support");
  return [u, support](Rng& rng) {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(u.size());
    for (int idx : support) v[idx] = rng.normal();
    const double nrm = v.norm();
    if (nrm > 0.0) v /= nrm;
    return std::make_pair(u, v);
  };
}

DistortionReport rip_distortion_estimate(const SensingOperator& op,
                                         const UnitSampler& sampler, long samples,
                                         Rng& rng, const std::string& sampler_tag) {
  if (samples < 1) throw std::invalid_argument("rip_distortion_estimate: need samples >= 1");
  double worst = 0.0;
  for (long s = 0; s < samples; ++s) {
    const Eigen::VectorXd u = sampler(rng);
    const double d = std::abs(op.apply(u).squaredNorm() / static_cast<double>(op.m) -
                              u.squaredNorm());
    worst = std::max(worst, d);
  }
  DistortionReport rep;
  rep.kind = "rip";
  rep.max_distortion = worst;
  rep.samples = samples;
  rep.sampler_tag = sampler_tag;
  return rep;
}

namespace {

DistortionReport lpd_common(const SensingOperator& op, const QuantizerConfig& cfg,
                            const PairSampler& sampler, long pairs,
                            const Eigen::VectorXd* shared_dither, bool fresh, Rng& rng,
                            const std::string& sampler_tag) {
  if (pairs < 1) throw std::invalid_argument("lpd_distortion_estimate: need pairs >= 1");
  Eigen::VectorXd dither;
  if (!fresh) {
    if (shared_dither) {
      dither = *shared_dither;
    } else if (cfg.dithering == Dithering::Uniform) {
      dither = draw_dither(op.m, cfg.delta, rng);
    } else {
      dither = Eigen::VectorXd::Zero(op.m);
    }
  }
  double worst = 0.0;
  for (long s = 0; s < pairs; ++s) {
    const auto [u, v] = sampler(rng);
    if (fresh) {
      dither = cfg.dithering == Dithering::Uniform ? draw_dither(op.m, cfg.delta, rng)
                                                   : Eigen::VectorXd::Zero(op.m);
    }
    const Eigen::VectorXd wu = op.apply(u);
    const Eigen::VectorXd wv = op.apply(v);
    const Eigen::VectorXd au = quantize(wu + dither, cfg.delta);
    const double d = std::abs(au.dot(wv) - wu.dot(wv)) / static_cast<double>(op.m);
    worst = std::max(worst, d);
  }
  DistortionReport rep;
  rep.kind = "lpd";
  rep.max_distortion = worst;
  rep.samples = pairs;
  rep.sampler_tag = sampler_tag;
  rep.delta = cfg.delta;
  rep.dithered = cfg.dithering == Dithering::Uniform;
  rep.fresh_dither = fresh;
  return rep;
}

}  // namespace

DistortionReport lpd_distortion_estimate(const SensingOperator& op,
                                         const QuantizerConfig& cfg,
                                         const PairSampler& sampler, long pairs,
                                         bool fresh_dither_per_pair, Rng& rng,
                                         const std::string& sampler_tag) {
  return lpd_common(op, cfg, sampler, pairs, nullptr, fresh_dither_per_pair, rng,
                    sampler_tag);
}

DistortionReport lpd_distortion_fixed_dither(const SensingOperator& op,
                                             const QuantizerConfig& cfg,
                                             const PairSampler& sampler, long pairs,
                                             const Eigen::VectorXd& dither, Rng& rng,
                                             const std::string& sampler_tag) {
  return lpd_common(op, cfg, sampler, pairs, &dither, false, rng, sampler_tag);
}

BoundAudit pbp_bound_audit(const SensingOperator& op, const Measurements& ms,
                           const Signal& x, const Projector& proj, double eps_hat,
                           double nu_hat) {
  const Reconstruction rec = pbp_reconstruct(op, ms, proj);
  BoundAudit audit;
  audit.error = (x.values - rec.estimate).norm();
  audit.eps_hat = eps_hat;
  audit.nu_hat = nu_hat;
  audit.convex = proj.convex();
  audit.bound = audit.convex ? std::sqrt(4.0 * eps_hat + 2.0 * nu_hat)
                             : 2.0 * (eps_hat + nu_hat);
  audit.holds = audit.error <= audit.bound;
  audit.margin = audit.bound - audit.error;
  return audit;
}

double mean_width_sparse(int n, int k, long samples, Rng& rng) {
  if (n < 1 || k < 1 || k > n)
    throw std::invalid_argument("mean_width_sparse: need 1 <= k <= n");
  if (samples < 1) throw std::invalid_argument("mean_width_sparse: need samples >= 1");
  std::vector<double> mag(static_cast<size_t>(n));
  long double acc = 0.0L;
  for (long s = 0; s < samples; ++s) {
    for (int i = 0; i < n; ++i) mag[static_cast<size_t>(i)] = std::abs(rng.normal());
    if (k < n)
      std::nth_element(mag.begin(), mag.begin() + (k - 1), mag.end(),
                       std::greater<double>());
    double ss = 0.0;
    for (int i = 0; i < k; ++i) ss += mag[static_cast<size_t>(i)] * mag[static_cast<size_t>(i)];
    acc += std::sqrt(ss);
  }
  return static_cast<double>(acc / static_cast<long double>(samples));
}

}  // namespace qcs
