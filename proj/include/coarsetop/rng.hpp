#pragma once

#include <cstdint>

namespace coarsetop {

/// SplitMix64. Used everywhere randomness is needed so that reports are
/// byte-identical across runs and platforms (std:: distributions are not).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound) via 128-bit multiply (no modulo bias worth
  /// caring about at these bounds).
  std::uint64_t below(std::uint64_t bound) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * bound) >> 64);
  }

  /// Uniform integer in [lo, hi], inclusive.
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(
                    below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  /// Uniform double in [0, 1).
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Derive an independent stream for a sub-task; keeps per-cell work
  /// order-independent and reproducible.
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t a,
                              std::uint64_t b = 0) {
    SplitMix64 g(seed ^ (0x632be59bd9b4e019ULL + a * 0x9e3779b97f4a7c15ULL +
                         b * 0xd1b54a32d192ed03ULL));
    return g.next();
  }

 private:
  std::uint64_t state_;
};

}  // namespace coarsetop
