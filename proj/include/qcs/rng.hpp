#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <random>
#include <vector>

namespace qcs {

// splitmix64 avalanche step; the workhorse behind seed derivation.
inline std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Child seed from a base seed and an ordered tag tuple. Non-commutative so
// (m, delta_index, trial) and any permutation of it land on different streams.
inline std::uint64_t derive_seed(std::uint64_t base,
                                 std::initializer_list<std::uint64_t> tags) {
  std::uint64_t s = splitmix64(base);
  for (std::uint64_t t : tags) s = splitmix64(s ^ (t + 0xd1b54a32d192ed03ULL));
  return s;
}

// Deterministic sample source. mt19937_64 supplies the bits (its seeding and
// output are pinned by the standard); the uniform/normal mappings live here
// because std::*_distribution output is implementation-defined and would break
// bit-reproducibility across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t bits() { return eng_(); }

  // [0, 1) with 53-bit resolution
  double uniform01() { return static_cast<double>(bits() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // standard normal, Box-Muller; the spare keeps draw count even-odd stable
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = uniform01();
    while (u1 == 0.0) u1 = uniform01();
    double u2 = uniform01();
    double r = std::sqrt(-2.0 * std::log(u1));
    double t = 6.28318530717958647692 * u2;
    spare_ = r * std::sin(t);
    has_spare_ = true;
    return r * std::cos(t);
  }

  double sign() { return (bits() >> 63) ? 1.0 : -1.0; }

  // uniform on {0, ..., n-1}; rejection keeps it exactly uniform
  std::uint64_t below(std::uint64_t n) {
    std::uint64_t t = (-n) % n;
    for (;;) {
      std::uint64_t r = bits();
      if (r >= t) return r % n;
    }
  }

 private:
  std::mt19937_64 eng_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

// First m entries of a Fisher-Yates pass over {0, ..., n-1}.
inline std::vector<int> sample_without_replacement(int n, int m, Rng& rng) {
  std::vector<int> ids(n);
  std::iota(ids.begin(), ids.end(), 0);
  for (int i = 0; i < m; ++i) {
    int j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - i)));
    std::swap(ids[i], ids[j]);
  }
  ids.resize(m);
  return ids;
}

}  // namespace qcs
