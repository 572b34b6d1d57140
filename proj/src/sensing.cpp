#include "qcs/sensing.hpp"

#include <cmath>
#include <stdexcept>

#include "qcs/dct.hpp"
#include "qcs/errors.hpp"

namespace qcs {

SensingKind sensing_kind_from_string(const std::string& s) {
  if (s == "gaussian") return SensingKind::Gaussian;
  if (s == "bernoulli") return SensingKind::Bernoulli;
  if (s == "pdct") return SensingKind::PartialDct;
  if (s == "sors") return SensingKind::Sors;
  throw ConfigError("unknown sensing kind: " + s);
}

std::string to_string(SensingKind kind) {
  switch (kind) {
    case SensingKind::Gaussian: return "gaussian";
    case SensingKind::Bernoulli: return "bernoulli";
    case SensingKind::PartialDct: return "pdct";
    case SensingKind::Sors: return "sors";
  }
  return "?";
}

SensingOperator make_operator(SensingKind kind, int m, int n, std::uint64_t seed) {
  if (m < 1 || n < 1) throw std::invalid_argument("make_operator: m and n must be positive");
  const bool subsampled = kind == SensingKind::PartialDct || kind == SensingKind::Sors;
  if (subsampled && m > n)
    throw std::invalid_argument("make_operator: subsampled kinds need m <= n");

  SensingOperator op;
  op.kind = kind;
  op.m = m;
  op.n = n;
  op.seed = seed;
  Rng rng(seed);
  switch (kind) {
    case SensingKind::Gaussian:
      op.dense.resize(m, n);
      for (int j = 0; j < n; ++j)
        for (int i = 0; i < m; ++i) op.dense(i, j) = rng.normal();
      break;
    case SensingKind::Bernoulli:
      op.dense.resize(m, n);
      for (int j = 0; j < n; ++j)
        for (int i = 0; i < m; ++i) op.dense(i, j) = rng.sign();
      break;
    case SensingKind::PartialDct:
      op.rows = sample_without_replacement(n, m, rng);
      break;
    case SensingKind::Sors:
      op.rows = sample_without_replacement(n, m, rng);
      op.signs.resize(n);
      for (int i = 0; i < n; ++i) op.signs[i] = rng.sign();
      break;
  }
  return op;
}

Eigen::VectorXd SensingOperator::apply(const Eigen::VectorXd& x) const {
  if (x.size() != n) throw std::invalid_argument("apply: length mismatch");
  switch (kind) {
    case SensingKind::Gaussian:
    case SensingKind::Bernoulli:
      return dense * x;
    case SensingKind::PartialDct:
    case SensingKind::Sors: {
      const double root_n = std::sqrt(static_cast<double>(n));
      Eigen::VectorXd t =
          dct2_orthonormal(kind == SensingKind::Sors ? signs.cwiseProduct(x).eval() : x);
      Eigen::VectorXd y(m);
      for (int i = 0; i < m; ++i) y[i] = root_n * t[rows[static_cast<size_t>(i)]];
      return y;
    }
  }
  throw std::logic_error("apply: bad kind");
}

Eigen::VectorXd SensingOperator::adjoint(const Eigen::VectorXd& y) const {
  if (y.size() != m) throw std::invalid_argument("adjoint: length mismatch");
  switch (kind) {
    case SensingKind::Gaussian:
    case SensingKind::Bernoulli:
      return dense.transpose() * y;
    case SensingKind::PartialDct:
    case SensingKind::Sors: {
      const double root_n = std::sqrt(static_cast<double>(n));
      Eigen::VectorXd t = Eigen::VectorXd::Zero(n);
      for (int i = 0; i < m; ++i) t[rows[static_cast<size_t>(i)]] = root_n * y[i];
      Eigen::VectorXd u = idct2_orthonormal(t);
      if (kind == SensingKind::Sors) u = signs.cwiseProduct(u).eval();
      return u;
    }
  }
  throw std::logic_error("adjoint: bad kind");
}

}  // namespace qcs
