#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qcs/rng.hpp"

namespace qcs {

// Measurement ensembles. Rows are calibrated so that (1/m)||Phi u||^2
// concentrates around ||u||^2: Gaussian/Bernoulli entries are unit-variance,
// subsampled transforms carry a sqrt(n) row scaling baked in at construction.
enum class SensingKind { Gaussian, Bernoulli, PartialDct, Sors };

SensingKind sensing_kind_from_string(const std::string& s);
std::string to_string(SensingKind kind);

struct SensingOperator {
  SensingKind kind = SensingKind::Gaussian;
  int m = 0;
  int n = 0;
  std::uint64_t seed = 0;

  Eigen::MatrixXd dense;   // Gaussian / Bernoulli
  std::vector<int> rows;   // PartialDct / Sors: row subset, in draw order
  Eigen::VectorXd signs;   // Sors: pre-transform sign flips

  // y = Phi x, length m
  Eigen::VectorXd apply(const Eigen::VectorXd& x) const;
  // Phi^T y, length n (exact transpose of apply)
  Eigen::VectorXd adjoint(const Eigen::VectorXd& y) const;
};

// Draws a fresh operator. Same (kind, m, n, seed) reproduces it bit for bit.
// Subsampled kinds require m <= n; the row subset comes from a Fisher-Yates
// pass without replacement.
SensingOperator make_operator(SensingKind kind, int m, int n, std::uint64_t seed);

}  // namespace qcs
