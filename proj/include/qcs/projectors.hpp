#pragma once

#include <Eigen/Dense>

#include "qcs/signals.hpp"

namespace qcs {

// Euclidean projection onto { at most k nonzeros }: keep the k largest
// magnitudes, zero the rest. Magnitude ties resolve to the lowest index.
Eigen::VectorXd hard_threshold(const Eigen::VectorXd& z, int k);

// Best rank-r approximation in Frobenius norm (truncated SVD).
Eigen::MatrixXd lowrank_project(const Eigen::MatrixXd& Z, int r);

// Exact projection onto { ||x||_1 <= tau } by sorting and soft-thresholding.
Eigen::VectorXd l1ball_project(const Eigen::VectorXd& z, double tau);

// Projection onto { ||x||_2 <= radius }: rescale or leave alone.
Eigen::VectorXd l2ball_project(const Eigen::VectorXd& z, double radius);

// Projection onto { ||x||_1 <= sqrt(k) } intersected with the unit l2 ball.
// Single-ball cases are dispatched exactly; with both constraints active the
// dual threshold is solved in closed form on the identified support and the
// result certified against the optimality conditions. Inputs the certificate
// rejects fall back to Dykstra's alternating projections, which stop once the
// full iterate state moves less than tol and throw NumericalError when
// max_iter sweeps are not enough.
Eigen::VectorXd compressible_project(const Eigen::VectorXd& z, int k,
                                     double tol = 1e-10, int max_iter = 1000);

// Single sweep l2(l1(z)): cheap surrogate for compressible_project, kept
// separate so the gap between the two is measurable.
Eigen::VectorXd compressible_project_onestep(const Eigen::VectorXd& z, int k);

// Projection dispatch on a set tag; what pbp_reconstruct and the harness use.
struct Projector {
  SetTag tag;
  double tol = 1e-10;
  int max_iter = 1000;

  // convex target set? (drives which reconstruction error bound applies)
  bool convex() const { return tag.kind == SetKind::Compressible; }

  Eigen::VectorXd operator()(const Eigen::VectorXd& z) const;
};

Projector projector_for(const SetTag& tag);

}  // namespace qcs
