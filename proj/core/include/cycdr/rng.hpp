#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>

namespace cycdr {

/// Counter-based pseudo-random stream.
///
/// Every draw is a pure function of (key, counter):
///   out(i) = mix64(key + (i+1) * GOLDEN)
/// i.e. the splitmix64 finalizer applied to a Weyl sequence. Streams are
/// cheap value types; copying a stream replays it from the copied position.
///
/// `substream(purpose, index)` derives an independent child stream from the
/// parent's state and a label, without advancing the parent. This lets one
/// 64-bit seed be carved into reproducible, non-overlapping streams per
/// (purpose, index) pair regardless of how many values any stream consumes.
///
/// Determinism: `next_u64`, `next_double` and `uniform` use only 64-bit
/// integer arithmetic and IEEE-754 +,-,* and are bit-reproducible across
/// conforming platforms. `normal` (Box-Muller) calls libm and is exactly
/// reproducible on a given platform only.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : key_(seed), counter_(0) {}

  std::uint64_t next_u64() { return mix64(key_ + ++counter_ * kGolden); }

  /// Uniform on [0, 1) with 53 bits of precision.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform on the closed interval [lo, hi].
  double uniform(double lo, double hi) {
    // u spans [0, 1] inclusive: 53-bit draw scaled by 1/(2^53 - 1).
    const double u = static_cast<double>(next_u64() >> 11) / 9007199254740991.0;
    const double v = lo + (hi - lo) * u;
    return v < lo ? lo : (v > hi ? hi : v);
  }

  /// Standard Gaussian draw (Box-Muller), consuming exactly two counters.
  double normal() {
    const double u1 = static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;  // (0, 1]
    const double u2 = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;        // [0, 1)
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.141592653589793238462643383279502884 * u2);
  }

  /// Derive a named child stream. The child key folds together the parent
  /// key, the parent position, an FNV-1a hash of `purpose`, and `index`;
  /// the parent is not advanced.
  RandomStream substream(std::string_view purpose, std::uint64_t index) const {
    std::uint64_t h = 0xCBF29CE484222325ull;
    for (unsigned char c : purpose) {
      h = (h ^ c) * 0x100000001B3ull;
    }
    std::uint64_t k = mix64(key_ ^ h);
    k = mix64(k + mix64(counter_ + 0x6B79636472ull));
    k = mix64(k + (index + 1) * kGolden);
    return RandomStream(k);
  }

  /// Draw one value and derive an independent child stream from it.
  /// Advances this stream by one counter.
  RandomStream split() { return RandomStream(mix64(next_u64())); }

 private:
  static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

  static std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  std::uint64_t key_;
  std::uint64_t counter_;
};

}  // namespace cycdr
