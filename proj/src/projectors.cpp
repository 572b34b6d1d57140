#include "qcs/projectors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include <Eigen/SVD>

#include "qcs/errors.hpp"

namespace qcs {

Eigen::VectorXd hard_threshold(const Eigen::VectorXd& z, int k) {
  const int n = static_cast<int>(z.size());
  if (k < 0 || k > n) throw std::invalid_argument("hard_threshold: need 0 <= k <= n");
  if (k == 0) return Eigen::VectorXd::Zero(n);
  if (k == n) return z;
  std::vector<int> ids(static_cast<size_t>(n));
  std::iota(ids.begin(), ids.end(), 0);
  // strict weak order: larger magnitude wins, ties go to the lower index,
  // so the selected support is unique whatever the partition does
  auto better = [&z](int a, int b) {
    const double fa = std::abs(z[a]), fb = std::abs(z[b]);
    return fa > fb || (fa == fb && a < b);
  };
  std::nth_element(ids.begin(), ids.begin() + (k - 1), ids.end(), better);
  Eigen::VectorXd out = Eigen::VectorXd::Zero(n);
  for (int i = 0; i < k; ++i) out[ids[static_cast<size_t>(i)]] = z[ids[static_cast<size_t>(i)]];
  return out;
}

Eigen::MatrixXd lowrank_project(const Eigen::MatrixXd& Z, int r) {
  const int rank_cap = static_cast<int>(std::min(Z.rows(), Z.cols()));
  if (r < 1) throw std::invalid_argument("lowrank_project: need r >= 1");
  if (r >= rank_cap) return Z;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(Z, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(Z.rows(), Z.cols());
  for (int i = 0; i < r; ++i)
    out.noalias() += sv[i] * svd.matrixU().col(i) * svd.matrixV().col(i).transpose();
  return out;
}

Eigen::VectorXd l1ball_project(const Eigen::VectorXd& z, double tau) {
  if (!(tau >= 0.0)) throw std::invalid_argument("l1ball_project: radius must be >= 0");
  const Eigen::Index n = z.size();
  if (tau == 0.0) return Eigen::VectorXd::Zero(n);
  if (z.lpNorm<1>() <= tau) return z;
  std::vector<double> mag(static_cast<size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) mag[static_cast<size_t>(i)] = std::abs(z[i]);
  std::sort(mag.begin(), mag.end(), std::greater<double>());
  double css = 0.0, theta = 0.0;
  for (size_t j = 0; j < mag.size(); ++j) {
    css += mag[j];
    const double cand = (css - tau) / static_cast<double>(j + 1);
    if (mag[j] > cand)
      theta = cand;
    else
      break;
  }
  Eigen::VectorXd out(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double v = std::abs(z[i]) - theta;
    out[i] = v > 0.0 ? (z[i] > 0.0 ? v : -v) : 0.0;
  }
  return out;
}

Eigen::VectorXd l2ball_project(const Eigen::VectorXd& z, double radius) {
  if (!(radius >= 0.0)) throw std::invalid_argument("l2ball_project: radius must be >= 0");
  const double nrm = z.norm();
  if (nrm <= radius) return z;
  return z * (radius / nrm);
}

namespace {

// Solves the projection when both ball constraints are active. The projection
// then has the form soft(z, lam) / ||soft(z, lam)|| with
// ||soft(z, lam)||_1 = tau * ||soft(z, lam)||_2, and the norm ratio decreases
// in lam. Between consecutive sorted magnitudes the surviving support is
// fixed and the condition is one quadratic in lam, so walking the segments
// locates the unique crossing exactly. The root is polished by Newton steps
// on the soft values directly (the prefix-sum quadratic cancels badly when
// nearly degenerate) and accepted only if the multiplier signs come out
// right, so a returned vector is the projection up to roundoff, not a guess.
class BothBallsActive {
 public:
  BothBallsActive(const Eigen::VectorXd& z, double tau, int k)
      : z_(z), tau_(tau), k_(static_cast<double>(k)) {
    const size_t n = static_cast<size_t>(z.size());
    mag_.resize(n);
    for (size_t i = 0; i < n; ++i) mag_[i] = std::abs(z[static_cast<Eigen::Index>(i)]);
    std::sort(mag_.begin(), mag_.end(), std::greater<double>());
    sum1_.assign(n + 1, 0.0);
    sum2_.assign(n + 1, 0.0);
    for (size_t i = 0; i < n; ++i) {
      sum1_[i + 1] = sum1_[i] + mag_[i];
      sum2_[i + 1] = sum2_[i] + mag_[i] * mag_[i];
    }
  }

  std::optional<Eigen::VectorXd> solve() const {
    const int n = static_cast<int>(mag_.size());
    for (int s = 1; s <= n; ++s) {
      const double hi = mag_[static_cast<size_t>(s - 1)];
      const double lo = s < n ? mag_[static_cast<size_t>(s)] : 0.0;
      if (!(hi > lo)) continue;                        // tied magnitudes, empty segment
      if (f(lo, s) < 0.0 || f(hi, s) > 0.0) continue;  // crossing is elsewhere
      if (auto out = candidate(lambda_in(s, lo, hi))) return out;
    }
    return std::nullopt;
  }

 private:
  // ||soft||_1^2 - k ||soft||_2^2 for lam in the segment with support size s;
  // same sign as (norm ratio - tau)
  double f(double lam, int s) const {
    const double p1 = sum1_[static_cast<size_t>(s)];
    const double p2 = sum2_[static_cast<size_t>(s)];
    const double l1 = p1 - s * lam;
    const double l22 = p2 - 2.0 * lam * p1 + s * lam * lam;
    return l1 * l1 - k_ * l22;
  }

  double lambda_in(int s, double lo, double hi) const {
    const double p1 = sum1_[static_cast<size_t>(s)];
    const double p2 = sum2_[static_cast<size_t>(s)];
    const double sd = static_cast<double>(s);
    const double a = sd * (sd - k_);
    const double b = -2.0 * p1 * (sd - k_);
    const double c = p1 * p1 - k_ * p2;
    double lam = lo;
    if (a == 0.0) {
      if (b != 0.0) lam = -c / b;
    } else {
      const double root = std::sqrt(std::max(b * b - 4.0 * a * c, 0.0));
      const double h = -0.5 * (b + std::copysign(root, b));
      const double r1 = h / a;
      const double r2 = h != 0.0 ? c / h : r1;
      lam = (r1 >= lo && r1 <= hi) ? r1 : r2;
    }
    lam = std::clamp(lam, lo, hi);
    for (int round = 0; round < 3; ++round) {
      double l1 = 0.0, l22 = 0.0;
      int live = 0;
      for (const double m : mag_) {
        const double v = m - lam;
        if (v <= 0.0) break;
        l1 += v;
        l22 += v * v;
        ++live;
      }
      if (l22 == 0.0) break;
      const double nrm = std::sqrt(l22);
      const double g = l1 - tau_ * nrm;
      const double gp = tau_ * l1 / nrm - static_cast<double>(live);
      if (gp == 0.0) break;
      lam = std::clamp(lam - g / gp, lo, hi);
    }
    return lam;
  }

  std::optional<Eigen::VectorXd> candidate(double lam) const {
    if (!(lam >= 0.0)) return std::nullopt;
    Eigen::VectorXd sv(z_.size());
    for (Eigen::Index i = 0; i < z_.size(); ++i) {
      const double v = std::abs(z_[i]) - lam;
      sv[i] = v > 0.0 ? (z_[i] > 0.0 ? v : -v) : 0.0;
    }
    const double nrm = sv.norm();
    if (nrm < 1.0 - 1e-12) return std::nullopt;  // l2 constraint would be slack
    Eigen::VectorXd x = sv / std::max(nrm, 1.0);
    const double l1 = x.lpNorm<1>();
    if (std::abs(l1 - tau_) > 1e-9) return std::nullopt;
    if (l1 > tau_) x *= tau_ / l1;
    return x;
  }

  const Eigen::VectorXd& z_;
  double tau_;
  double k_;
  std::vector<double> mag_;
  std::vector<double> sum1_;
  std::vector<double> sum2_;
};

}  // namespace

Eigen::VectorXd compressible_project(const Eigen::VectorXd& z, int k,
                                     double tol, int max_iter) {
  if (k < 1) throw std::invalid_argument("compressible_project: need k >= 1");
  if (max_iter < 1) throw std::invalid_argument("compressible_project: need max_iter >= 1");
  const double tau = std::sqrt(static_cast<double>(k));
  // single-constraint cases are exact: a one-ball projection already inside
  // the other ball is the intersection projection
  if (z.lpNorm<1>() <= tau && z.norm() <= 1.0) return z;
  if (z.norm() > 1.0) {
    const Eigen::VectorXd w = z / z.norm();
    if (w.lpNorm<1>() <= tau) return w;
  }
  {
    const Eigen::VectorXd w = l1ball_project(z, tau);
    if (w.norm() <= 1.0) return w;
  }
  if (auto exact = BothBallsActive(z, tau, k).solve()) return *exact;

  // fallback: Dykstra with increments p (l1 side) and q (l2 side); the first
  // sweep from x = z is exactly l2ball_project(l1ball_project(z, tau), 1).
  // The step test covers the whole (x, p, q) state: the x move alone goes
  // quiet while the increments still carry the iterate toward the projection.
  Eigen::VectorXd x = z;
  Eigen::VectorXd p = Eigen::VectorXd::Zero(z.size());
  Eigen::VectorXd q = Eigen::VectorXd::Zero(z.size());
  double shift = 0.0;
  for (int it = 0; it < max_iter; ++it) {
    const Eigen::VectorXd y = l1ball_project(x + p, tau);
    const Eigen::VectorXd xn = l2ball_project(y + q, 1.0);
    shift = std::sqrt((xn - x).squaredNorm() + (x - y).squaredNorm() +
                      (y - xn).squaredNorm());
    p += x - y;
    q += y - xn;
    x = xn;
    if (shift < tol) return x;
  }
  throw NumericalError("compressible_project: no convergence after " +
                       std::to_string(max_iter) + " sweeps (last step " +
                       std::to_string(shift) + ")");
}

Eigen::VectorXd compressible_project_onestep(const Eigen::VectorXd& z, int k) {
  if (k < 1) throw std::invalid_argument("compressible_project_onestep: need k >= 1");
  return l2ball_project(l1ball_project(z, std::sqrt(static_cast<double>(k))), 1.0);
}

Eigen::VectorXd Projector::operator()(const Eigen::VectorXd& z) const {
  switch (tag.kind) {
    case SetKind::Sparse:
      return hard_threshold(z, tag.k);
    case SetKind::Compressible:
      return compressible_project(z, tag.k, tol, max_iter);
    case SetKind::LowRank:
      return vec(lowrank_project(reshape(z, tag.n1, tag.n2), tag.r));
  }
  throw std::logic_error("Projector: bad set kind");
}

Projector projector_for(const SetTag& tag) { return Projector{tag, 1e-10, 1000}; }

}  // namespace qcs
