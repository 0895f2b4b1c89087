#pragma once

// Counter-based random numbers (Philox 4x64, 10 rounds).  Every draw is a
// pure function of (seed, stream, index), so realization streams are
// independent of how many run and in what order, and experiment reruns are
// bitwise reproducible under any threading schedule.

#include <array>
#include <cstdint>

namespace bandlim::rng {

using u64 = std::uint64_t;

namespace detail {
inline void mulhilo(u64 a, u64 b, u64& hi, u64& lo) {
  const unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  hi = static_cast<u64>(p >> 64);
  lo = static_cast<u64>(p);
}
}  // namespace detail

/// One Philox4x64-10 block: 256-bit counter, 128-bit key -> 256 bits out.
inline std::array<u64, 4> philox4x64(std::array<u64, 4> x,
                                     std::array<u64, 2> k) {
  constexpr u64 M0 = 0xD2E7470EE14C6C93ULL, M1 = 0xCA5A826395121157ULL;
  constexpr u64 W0 = 0x9E3779B97F4A7C15ULL, W1 = 0xBB67AE8584CAA73BULL;
  for (int r = 0; r < 10; ++r) {
    u64 hi0, lo0, hi1, lo1;
    detail::mulhilo(M0, x[0], hi0, lo0);
    detail::mulhilo(M1, x[2], hi1, lo1);
    x = {hi1 ^ x[1] ^ k[0], lo1, hi0 ^ x[3] ^ k[1], lo0};
    k[0] += W0;
    k[1] += W1;
  }
  return x;
}

/// A splittable stream of i.i.d. draws keyed by (seed, stream, domain).
/// draw(i) never touches shared state; concurrent use is free.
class SampleStream {
 public:
  SampleStream(u64 seed, u64 stream = 0, u64 domain = 0)
      : seed_(seed), stream_(stream), domain_(domain) {}

  u64 raw(u64 index) const {
    return philox4x64({index, stream_, domain_, 0}, {seed_, kKeyTag})[0];
  }

  /// Uniform in [0, 1), 53-bit mantissa.
  double uniform01(u64 index) const {
    return static_cast<double>(raw(index) >> 11) * 0x1.0p-53;
  }

  /// Uniform in [-alpha, alpha].
  double uniform_symmetric(double alpha, u64 index) const {
    return alpha * (2.0 * uniform01(index) - 1.0);
  }

 private:
  static constexpr u64 kKeyTag = 0x62616E646C696D00ULL;
  u64 seed_, stream_, domain_;
};

}  // namespace bandlim::rng
