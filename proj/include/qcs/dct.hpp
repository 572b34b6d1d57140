#pragma once

#include <Eigen/Dense>

namespace qcs {

// Orthonormal DCT-II: X_j = s_j * sum_i x_i cos(pi (2i+1) j / (2n)) with
// s_0 = sqrt(1/n), s_j = sqrt(2/n) for j >= 1. The transform is orthogonal,
// so the inverse is the transpose. Power-of-two n takes an FFT-based
// O(n log n) path; anything else is evaluated directly in O(n^2).
Eigen::VectorXd dct2_orthonormal(const Eigen::VectorXd& x);
Eigen::VectorXd idct2_orthonormal(const Eigen::VectorXd& y);

}  // namespace qcs
