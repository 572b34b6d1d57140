#pragma once

#include <Eigen/Dense>

#include "qcs/projectors.hpp"
#include "qcs/quantizer.hpp"
#include "qcs/sensing.hpp"

namespace qcs {

// (1/m) Phi^T y
Eigen::VectorXd back_project(const SensingOperator& op, const Eigen::VectorXd& y);

struct Reconstruction {
  Eigen::VectorXd estimate;
  Eigen::VectorXd back_projection;  // pre-projection iterate, kept for audits
  int iterations = 1;
  double step = 1.0;
};

// Projected back projection: project (1/m) Phi^T y onto the signal set.
Reconstruction pbp_reconstruct(const SensingOperator& op, const Measurements& ms,
                               const Projector& proj);

// Iterative refinement: x <- P( x + (mu/m) Phi^T (y - A(x)) ) where A re-runs
// the acquisition on the candidate with the stored dither. One iteration at
// mu = 1 reproduces pbp_reconstruct exactly (A(0) = 0 since the dither lives
// in [0, delta)). No error guarantee is claimed for more iterations; kept as
// an experimental refinement outside the validated surface.
Reconstruction qiht(const SensingOperator& op, const Measurements& ms,
                    const Projector& proj, double mu = 1.0, int iterations = 10);

}  // namespace qcs
