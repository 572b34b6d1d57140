#include "qcs/pbp.hpp"

#include <stdexcept>

namespace qcs {

Eigen::VectorXd back_project(const SensingOperator& op, const Eigen::VectorXd& y) {
  return op.adjoint(y) / static_cast<double>(op.m);
}

Reconstruction pbp_reconstruct(const SensingOperator& op, const Measurements& ms,
                               const Projector& proj) {
  Reconstruction rec;
  rec.back_projection = back_project(op, ms.y);
  rec.estimate = proj(rec.back_projection);
  rec.iterations = 1;
  rec.step = 1.0;
  return rec;
}

Reconstruction qiht(const SensingOperator& op, const Measurements& ms,
                    const Projector& proj, double mu, int iterations) {
  if (iterations < 1) throw std::invalid_argument("qiht: need at least one iteration");
  Eigen::VectorXd x = Eigen::VectorXd::Zero(op.n);
  Reconstruction rec;
  for (int t = 0; t < iterations; ++t) {
    const Eigen::VectorXd resampled =
        quantize(op.apply(x) + ms.dither, ms.config.delta);
    // same scaling expression as back_project so one step at mu = 1 agrees
    // with pbp_reconstruct to the last bit
    rec.back_projection =
        x + mu * (op.adjoint(ms.y - resampled) / static_cast<double>(op.m));
    x = proj(rec.back_projection);
  }
  rec.estimate = x;
  rec.iterations = iterations;
  rec.step = mu;
  return rec;
}

}  // namespace qcs
