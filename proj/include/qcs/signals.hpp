#pragma once

#include <string>

#include <Eigen/Dense>

#include "qcs/rng.hpp"

namespace qcs {

enum class SetKind { Sparse, Compressible, LowRank };

std::string to_string(SetKind kind);
SetKind set_kind_from_string(const std::string& s);

// Which structured set a signal (or a projector) lives on. Vector sets use
// n and k; the low-rank set uses matrix shape n1 x n2 (n = n1*n2) and rank r.
struct SetTag {
  SetKind kind = SetKind::Sparse;
  int n = 0;
  int k = 0;
  int n1 = 0;
  int n2 = 0;
  int r = 0;

  int k_or_r() const { return kind == SetKind::LowRank ? r : k; }
};

struct Signal {
  Eigen::VectorXd values;
  SetTag tag;
};

// Exactly k nonzeros, support uniform without replacement, amplitudes iid
// standard normal. Not normalized.
Signal gen_sparse(int n, int k, Rng& rng);

// Unit-norm member of { ||u||_1 <= sqrt(k), ||u||_2 <= 1 }: deterministic
// magnitudes i^(-alpha) with alpha picked so ||x||_1/||x||_2 hits sqrt(k)
// when attainable, iid signs, then a random permutation of positions.
Signal gen_compressible(int n, int k, Rng& rng);

// The exponent used by gen_compressible. Bisection on (1, 2]; throws when no
// exponent in that range satisfies the l1/l2 budget (k too small for n).
double compressible_alpha(int n, int k);

// vec of B C^T (B: n1 x r, C: n2 x r, iid normal) normalized to unit
// Frobenius norm. Column-major vectorization throughout.
Signal gen_lowrank(int n1, int n2, int r, Rng& rng);

// column-major reshape / flatten; Frobenius norm of the matrix equals the
// l2 norm of the vector, so reconstruction errors can be measured either way
Eigen::MatrixXd reshape(const Eigen::VectorXd& v, int n1, int n2);
Eigen::VectorXd vec(const Eigen::MatrixXd& X);

}  // namespace qcs
