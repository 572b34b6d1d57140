#pragma once

#include <functional>
#include <string>
#include <utility>

#include <Eigen/Dense>

#include "qcs/pbp.hpp"
#include "qcs/projectors.hpp"
#include "qcs/quantizer.hpp"
#include "qcs/rng.hpp"
#include "qcs/sensing.hpp"
#include "qcs/signals.hpp"

namespace qcs {

// Sampled estimates of worst-case distortions. These are maxima over finitely
// many draws, hence lower bounds on the true set-wide suprema; reports carry
// that caveat in the kind tag.
struct DistortionReport {
  std::string kind;  // "rip" | "lpd"
  double max_distortion = 0.0;
  long samples = 0;
  std::string sampler_tag;
  double delta = 0.0;
  bool dithered = false;
  bool fresh_dither = false;
};

using UnitSampler = std::function<Eigen::VectorXd(Rng&)>;
using PairSampler = std::function<std::pair<Eigen::VectorXd, Eigen::VectorXd>(Rng&)>;

// unit-norm k-sparse vectors, support uniform, normal amplitudes
UnitSampler sparse_unit_sampler(int n, int k);
// unit Frobenius norm, rank <= r, vectorized column-major
UnitSampler lowrank_unit_sampler(int n1, int n2, int r);
// independent draws from one sampler
PairSampler independent_pairs(UnitSampler s);
// pairs (u, v) with u fixed and v unit-norm supported on a fixed index set;
// what the reconstruction-bound audit probes (directions around the residual)
PairSampler fixed_u_subspace_sampler(const Eigen::VectorXd& u, std::vector<int> support);

// max over samples of |(1/m)||Phi u||^2 - ||u||^2|
DistortionReport rip_distortion_estimate(const SensingOperator& op,
                                         const UnitSampler& sampler, long samples,
                                         Rng& rng, const std::string& sampler_tag = "");

// max over pairs of (1/m) |<A(u), Phi v> - <Phi u, Phi v>| with
// A(u) = quantize(Phi u + dither). fresh_dither_per_pair redraws the dither
// for every pair; otherwise one realization is shared by all pairs.
DistortionReport lpd_distortion_estimate(const SensingOperator& op,
                                         const QuantizerConfig& cfg,
                                         const PairSampler& sampler, long pairs,
                                         bool fresh_dither_per_pair, Rng& rng,
                                         const std::string& sampler_tag = "");

// same probe against one externally supplied dither realization (the audit
// reuses the dither of the very trial it checks)
DistortionReport lpd_distortion_fixed_dither(const SensingOperator& op,
                                             const QuantizerConfig& cfg,
                                             const PairSampler& sampler, long pairs,
                                             const Eigen::VectorXd& dither, Rng& rng,
                                             const std::string& sampler_tag = "");

struct BoundAudit {
  double error = 0.0;
  double eps_hat = 0.0;
  double nu_hat = 0.0;
  double bound = 0.0;
  bool convex = false;
  bool holds = false;
  double margin = 0.0;  // bound - error; negative when violated
};

// Checks one finished acquisition against the reconstruction error bound
// 2 (eps + nu) for structured cones, sqrt(4 eps + 2 nu) for convex sets,
// with the caller's sampled estimates standing in for the true distortions.
BoundAudit pbp_bound_audit(const SensingOperator& op, const Measurements& ms,
                           const Signal& x, const Projector& proj, double eps_hat,
                           double nu_hat);

// Monte-Carlo Gaussian mean width of the unit-norm k-sparse set: mean of
// ||k largest magnitudes of g||_2 over iid standard normal g.
double mean_width_sparse(int n, int k, long samples, Rng& rng);

}  // namespace qcs
