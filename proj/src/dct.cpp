#include "qcs/dct.hpp"

#include <complex>
#include <stdexcept>
#include <vector>

namespace qcs {
namespace {

constexpr double kPi = 3.14159265358979323846;

bool is_pow2(Eigen::Index n) { return n > 0 && (n & (n - 1)) == 0; }

// iterative radix-2 FFT; twiddles come from std::polar per index so the error
// stays at the rounding level instead of accumulating along a recurrence
void fft_pow2(std::vector<std::complex<double>>& a, bool inverse) {
  const int n = static_cast<int>(a.size());
  for (int i = 1, j = 0; i < n; ++i) {
    int bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j |= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  std::vector<std::complex<double>> tw(n / 2);
  for (int len = 2; len <= n; len <<= 1) {
    const double ang = (inverse ? 2.0 : -2.0) * kPi / len;
    const int half = len / 2;
    for (int k = 0; k < half; ++k) tw[k] = std::polar(1.0, ang * k);
    for (int i = 0; i < n; i += len) {
      for (int k = 0; k < half; ++k) {
        auto u = a[i + k];
        auto v = a[i + k + half] * tw[k];
        a[i + k] = u + v;
        a[i + k + half] = u - v;
      }
    }
  }
  if (inverse) {
    for (auto& z : a) z /= static_cast<double>(n);
  }
}

}  // namespace

Eigen::VectorXd dct2_orthonormal(const Eigen::VectorXd& x) {
  const Eigen::Index n = x.size();
  if (n < 1) throw std::invalid_argument("dct2_orthonormal: empty input");
  if (n == 1) return x;
  const double s0 = std::sqrt(1.0 / static_cast<double>(n));
  const double s = std::sqrt(2.0 / static_cast<double>(n));
  Eigen::VectorXd out(n);
  if (is_pow2(n)) {
    // even-index entries first, odd-index entries mirrored to the back
    std::vector<std::complex<double>> v(static_cast<size_t>(n));
    for (Eigen::Index i = 0; 2 * i < n; ++i) v[static_cast<size_t>(i)] = x[2 * i];
    for (Eigen::Index i = 0; 2 * i + 1 < n; ++i)
      v[static_cast<size_t>(n - 1 - i)] = x[2 * i + 1];
    fft_pow2(v, false);
    for (Eigen::Index j = 0; j < n; ++j) {
      const double ang = kPi * static_cast<double>(j) / (2.0 * static_cast<double>(n));
      const auto& V = v[static_cast<size_t>(j)];
      const double c = std::cos(ang) * V.real() + std::sin(ang) * V.imag();
      out[j] = (j == 0 ? s0 : s) * c;
    }
  } else {
    for (Eigen::Index j = 0; j < n; ++j) {
      double acc = 0.0;
      for (Eigen::Index i = 0; i < n; ++i)
        acc += x[i] * std::cos(kPi * (2.0 * static_cast<double>(i) + 1.0) *
                               static_cast<double>(j) / (2.0 * static_cast<double>(n)));
      out[j] = (j == 0 ? s0 : s) * acc;
    }
  }
  return out;
}

Eigen::VectorXd idct2_orthonormal(const Eigen::VectorXd& y) {
  const Eigen::Index n = y.size();
  if (n < 1) throw std::invalid_argument("idct2_orthonormal: empty input");
  if (n == 1) return y;
  const double s0 = std::sqrt(1.0 / static_cast<double>(n));
  const double s = std::sqrt(2.0 / static_cast<double>(n));
  Eigen::VectorXd out(n);
  if (is_pow2(n)) {
    // reverse of the forward packing: rebuild the spectrum, inverse FFT,
    // then unshuffle even/odd positions
    std::vector<std::complex<double>> v(static_cast<size_t>(n));
    for (Eigen::Index j = 0; j < n; ++j) {
      const double cj = y[j] / (j == 0 ? s0 : s);
      const double cnj = (j == 0) ? 0.0 : -y[n - j] / s;
      const double ang = kPi * static_cast<double>(j) / (2.0 * static_cast<double>(n));
      v[static_cast<size_t>(j)] =
          std::polar(1.0, ang) * std::complex<double>(cj, cnj);
    }
    fft_pow2(v, true);
    for (Eigen::Index i = 0; 2 * i < n; ++i)
      out[2 * i] = v[static_cast<size_t>(i)].real();
    for (Eigen::Index i = 0; 2 * i + 1 < n; ++i)
      out[2 * i + 1] = v[static_cast<size_t>(n - 1 - i)].real();
  } else {
    for (Eigen::Index i = 0; i < n; ++i) {
      double acc = 0.0;
      for (Eigen::Index j = 0; j < n; ++j)
        acc += (j == 0 ? s0 : s) * y[j] *
               std::cos(kPi * (2.0 * static_cast<double>(i) + 1.0) *
                        static_cast<double>(j) / (2.0 * static_cast<double>(n)));
      out[i] = acc;
    }
  }
  return out;
}

}  // namespace qcs
