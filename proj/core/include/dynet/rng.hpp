#pragma once

#include <cstdint>
#include <random>
#include <span>

namespace dynet {

/// Seeded PRNG with hand-rolled distributions so that a seed produces the
/// same stream on every platform (std::uniform_int_distribution makes no
/// such promise).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(splitmix(seed)) {}

  /// Independent stream for one trial of a sweep.
  static Rng for_trial(std::uint64_t base_seed, std::uint64_t trial) {
    return Rng(splitmix(base_seed + 0x9e3779b97f4a7c15ULL * (trial + 1)));
  }

  std::uint64_t next() { return eng_(); }

  /// Uniform in [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n) {
    // rejection sampling to kill modulo bias
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x;
    do {
      x = eng_();
    } while (x >= limit);
    return x % n;
  }

  /// Uniform in [0, 1).
  double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return unit() < p; }

  /// Index into cumulative (non-normalized, nondecreasing) weights.
  std::size_t pick_cumulative(std::span<const double> cum) {
    double x = unit() * cum.back();
    std::size_t lo = 0, hi = cum.size() - 1;
    while (lo < hi) {
      std::size_t mid = (lo + hi) / 2;
      if (cum[mid] > x)
        hi = mid;
      else
        lo = mid + 1;
    }
    return lo;
  }

 private:
  static std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  std::mt19937_64 eng_;
};

}  // namespace dynet
