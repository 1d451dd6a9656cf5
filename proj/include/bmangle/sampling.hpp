#pragma once

#include <cstdint>
#include <cmath>

namespace bm {

// SplitMix64 finalizer.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Counter-based stream of uniform draws keyed by (seed, stream).
// The value of draw k depends only on (seed, stream, k), so samples can be
// generated in any order or on any worker and still be identical.
class SampleStream {
 public:
  SampleStream(std::uint64_t seed, std::uint64_t stream)
      : key_(mix64(seed ^ mix64(stream ^ 0x6A09E667F3BCC909ull))) {}

  std::uint64_t next_u64() { return mix64(key_ + 0xD6E8FEB86659FD93ull * ++n_); }

  // [0, 1) with 53 random bits
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // log-uniform over [lo, hi], 0 < lo <= hi
  double log_uniform(double lo, double hi) {
    return std::exp(uniform(std::log(lo), std::log(hi)));
  }

  bool coin() { return (next_u64() & 1ull) != 0; }

  // log-uniform magnitude with a random sign
  double signed_log_uniform(double lo, double hi) {
    double m = log_uniform(lo, hi);
    return coin() ? m : -m;
  }

 private:
  std::uint64_t key_;
  std::uint64_t n_ = 0;
};

}  // namespace bm
