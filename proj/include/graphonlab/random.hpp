#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace graphonlab {

/// Seeded generator with platform-independent variates.
///
/// The standard distributions are implementation-defined, so reports would
/// differ between standard libraries; uniform and exponential draws are
/// derived directly from the 64-bit engine output instead.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [0, bound).
  std::uint64_t below(std::uint64_t bound) { return bound == 0 ? 0 : engine_() % bound; }

  /// Standard exponential; Gamma(1) for flat Dirichlet draws.
  double exponential() { return -std::log1p(-uniform()); }

  /// Flat Dirichlet sample of the given length (strictly positive entries).
  std::vector<double> dirichlet(std::size_t length) {
    std::vector<double> x(length);
    double total = 0.0;
    for (auto& v : x) {
      v = exponential() + 1e-300;
      total += v;
    }
    for (auto& v : x) v /= total;
    return x;
  }

  /// Seed for an independent child stream (multistarts, trials).
  std::uint64_t split() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// Deterministic per-index seed derivation (splitmix64 finalizer).
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace graphonlab
