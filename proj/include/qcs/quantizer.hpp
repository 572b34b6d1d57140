#pragma once

#include <cstdint>

#include <Eigen/Dense>

#include "qcs/rng.hpp"
#include "qcs/sensing.hpp"

namespace qcs {

enum class Dithering { Uniform, None };

struct QuantizerConfig {
  double delta = 1.0;
  Dithering dithering = Dithering::Uniform;
};

// Everything a reconstruction or audit needs to replay the acquisition:
// quantized measurements, the dither realization (zero when disabled), and
// the seeds behind operator and dither.
struct Measurements {
  Eigen::VectorXd y;
  Eigen::VectorXd dither;
  QuantizerConfig config;
  std::uint64_t operator_seed = 0;
  std::uint64_t dither_seed = 0;
};

// delta * floor(u / delta), toward -inf. Values within 1e-12 * delta of a
// lattice point snap to it first so boundary inputs do not fall a full cell.
double quantize(double u, double delta);
Eigen::VectorXd quantize(const Eigen::VectorXd& u, double delta);

// iid uniform on [0, delta)
Eigen::VectorXd draw_dither(int m, double delta, Rng& rng);

// y = quantize(Phi x + dither). The dither stream is seeded here so the
// acquisition is reproducible from (operator seed, dither seed) alone.
Measurements sense(const SensingOperator& op, const Eigen::VectorXd& x,
                   const QuantizerConfig& cfg, std::uint64_t dither_seed);

// mean over num_samples fresh dithers of quantize(a + xi, delta); dithered
// quantization is unbiased, so this should sit within a few delta/sqrt(N)
// of a itself
double dither_expectation_check(double a, double delta, long num_samples, Rng& rng);

}  // namespace qcs
