#include "qcs/quantizer.hpp"

#include <cmath>
#include <stdexcept>

namespace qcs {

double quantize(double u, double delta) {
  if (!(delta > 0.0)) throw std::invalid_argument("quantize: delta must be positive");
  const double t = u / delta;
  const double r = std::nearbyint(t);
  return delta * ((std::abs(t - r) <= 1e-12) ? r : std::floor(t));
}

Eigen::VectorXd quantize(const Eigen::VectorXd& u, double delta) {
  Eigen::VectorXd q(u.size());
  for (Eigen::Index i = 0; i < u.size(); ++i) q[i] = quantize(u[i], delta);
  return q;
}

Eigen::VectorXd draw_dither(int m, double delta, Rng& rng) {
  if (m < 0) throw std::invalid_argument("draw_dither: negative length");
  if (!(delta > 0.0)) throw std::invalid_argument("draw_dither: delta must be positive");
  Eigen::VectorXd d(m);
  for (int i = 0; i < m; ++i) d[i] = delta * rng.uniform01();
  return d;
}

Measurements sense(const SensingOperator& op, const Eigen::VectorXd& x,
                   const QuantizerConfig& cfg, std::uint64_t dither_seed) {
  Eigen::VectorXd w = op.apply(x);
  Measurements ms;
  ms.config = cfg;
  ms.operator_seed = op.seed;
  ms.dither_seed = dither_seed;
  if (cfg.dithering == Dithering::Uniform) {
    Rng rng(dither_seed);
    ms.dither = draw_dither(op.m, cfg.delta, rng);
  } else {
    ms.dither = Eigen::VectorXd::Zero(op.m);
  }
  ms.y = quantize(w + ms.dither, cfg.delta);
  return ms;
}

double dither_expectation_check(double a, double delta, long num_samples, Rng& rng) {
  if (num_samples < 1)
    throw std::invalid_argument("dither_expectation_check: need at least one sample");
  long double acc = 0.0L;
  for (long i = 0; i < num_samples; ++i)
    acc += quantize(a + delta * rng.uniform01(), delta);
  return static_cast<double>(acc / static_cast<long double>(num_samples));
}

}  // namespace qcs
