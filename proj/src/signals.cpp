#include "qcs/signals.hpp"

#include <cmath>
#include <stdexcept>

#include "qcs/errors.hpp"

namespace qcs {

std::string to_string(SetKind kind) {
  switch (kind) {
    case SetKind::Sparse: return "sparse";
    case SetKind::Compressible: return "compressible";
    case SetKind::LowRank: return "lowrank";
  }
  return "?";
}

SetKind set_kind_from_string(const std::string& s) {
  if (s == "sparse") return SetKind::Sparse;
  if (s == "compressible") return SetKind::Compressible;
  if (s == "lowrank") return SetKind::LowRank;
  throw ConfigError("unknown signal set: " + s);
}

Signal gen_sparse(int n, int k, Rng& rng) {
  if (n < 1 || k < 1 || k > n)
    throw std::invalid_argument("gen_sparse: need 1 <= k <= n");
  Signal s;
  s.tag = SetTag{SetKind::Sparse, n, k, 0, 0, 0};
  s.values = Eigen::VectorXd::Zero(n);
  // draw order is pinned: support first, then amplitudes
  std::vector<int> support = sample_without_replacement(n, k, rng);
  for (int idx : support) s.values[idx] = rng.normal();
  return s;
}

namespace {

// ||x||_1 / ||x||_2 for magnitudes i^(-alpha), i = 1..n
double decay_ratio(int n, double alpha) {
  double s1 = 0.0, s2 = 0.0;
  for (int i = 1; i <= n; ++i) {
    const double v = std::pow(static_cast<double>(i), -alpha);
    s1 += v;
    s2 += v * v;
  }
  return s1 / std::sqrt(s2);
}

}  // namespace

double compressible_alpha(int n, int k) {
  if (n < 1 || k < 1 || k > n)
    throw std::invalid_argument("compressible_alpha: need 1 <= k <= n");
  const double target = std::sqrt(static_cast<double>(k));
  if (decay_ratio(n, 2.0) > target + 1e-12)
    throw std::invalid_argument(
        "compressible_alpha: l1/l2 budget sqrt(k) unreachable for any "
        "exponent in (1, 2]; increase k or shrink n");
  // ratio is decreasing in alpha. Invariant: ratio(hi) <= target; when even
  // alpha -> 1+ stays below target the loop collapses hi onto 1 and the
  // budget holds strictly (equality unattainable, accepted).
  double lo = 1.0, hi = 2.0;
  for (int it = 0; it < 60; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (decay_ratio(n, mid) > target)
      lo = mid;
    else
      hi = mid;
  }
  return hi;
}

Signal gen_compressible(int n, int k, Rng& rng) {
  const double alpha = compressible_alpha(n, k);
  Eigen::VectorXd mags(n);
  for (int i = 0; i < n; ++i)
    mags[i] = std::pow(static_cast<double>(i + 1), -alpha);
  // draw order is pinned: signs first, then the position permutation
  Eigen::VectorXd signs(n);
  for (int i = 0; i < n; ++i) signs[i] = rng.sign();
  std::vector<int> perm = sample_without_replacement(n, n, rng);
  Signal s;
  s.tag = SetTag{SetKind::Compressible, n, k, 0, 0, 0};
  s.values.resize(n);
  for (int i = 0; i < n; ++i) s.values[perm[static_cast<size_t>(i)]] = signs[i] * mags[i];
  s.values /= s.values.norm();
  return s;
}

Signal gen_lowrank(int n1, int n2, int r, Rng& rng) {
  if (n1 < 1 || n2 < 1 || r < 1 || r > std::min(n1, n2))
    throw std::invalid_argument("gen_lowrank: need 1 <= r <= min(n1, n2)");
  Eigen::MatrixXd B(n1, r), C(n2, r);
  for (int j = 0; j < r; ++j)
    for (int i = 0; i < n1; ++i) B(i, j) = rng.normal();
  for (int j = 0; j < r; ++j)
    for (int i = 0; i < n2; ++i) C(i, j) = rng.normal();
  Eigen::MatrixXd X = B * C.transpose();
  X /= X.norm();
  Signal s;
  s.tag = SetTag{SetKind::LowRank, n1 * n2, 0, n1, n2, r};
  s.values = vec(X);
  return s;
}

Eigen::MatrixXd reshape(const Eigen::VectorXd& v, int n1, int n2) {
  if (v.size() != static_cast<Eigen::Index>(n1) * n2)
    throw std::invalid_argument("reshape: size mismatch");
  return Eigen::Map<const Eigen::MatrixXd>(v.data(), n1, n2);
}

Eigen::VectorXd vec(const Eigen::MatrixXd& X) {
  return Eigen::Map<const Eigen::VectorXd>(X.data(), X.size());
}

}  // namespace qcs
