#pragma once

// Counter-based random streams. Philox4x32-10 keyed by a hash of
// (seed, label); any (seed, label, index) triple names an independent stream,
// so parallel work draws identical numbers regardless of scheduling.

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <string_view>

namespace logmaj {

using Philox4x32 = std::array<std::uint32_t, 4>;
using PhiloxKey = std::array<std::uint32_t, 2>;

constexpr Philox4x32 philox4x32_10(Philox4x32 ctr, PhiloxKey key) {
  constexpr std::uint32_t m0 = 0xD2511F53u, m1 = 0xCD9E8D57u;
  constexpr std::uint32_t w0 = 0x9E3779B9u, w1 = 0xBB67AE85u;
  for (int round = 0; round < 10; ++round) {
    const std::uint64_t p0 = std::uint64_t(m0) * ctr[0];
    const std::uint64_t p1 = std::uint64_t(m1) * ctr[2];
    ctr = {std::uint32_t(p1 >> 32) ^ ctr[1] ^ key[0], std::uint32_t(p1),
           std::uint32_t(p0 >> 32) ^ ctr[3] ^ key[1], std::uint32_t(p0)};
    key[0] += w0;
    key[1] += w1;
  }
  return ctr;
}

constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

constexpr std::uint64_t fnv1a(std::string_view s, std::uint64_t h = 0xcbf29ce484222325ull) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

/// A value-type random stream. Copying a Stream forks it.
class Stream {
 public:
  Stream(std::uint64_t seed, std::string_view label, std::uint64_t index = 0) {
    const std::uint64_t k = splitmix64(seed ^ splitmix64(fnv1a(label)));
    key_ = {std::uint32_t(k), std::uint32_t(k >> 32)};
    index_ = index;
  }

  /// Child stream: same key, label and index folded together.
  Stream child(std::string_view label, std::uint64_t index) const {
    const std::uint64_t k = (std::uint64_t(key_[1]) << 32) | key_[0];
    return Stream(splitmix64(k ^ splitmix64(index_ + 0x632BE59BD9B4E019ull)), label, index);
  }

  std::uint32_t next_u32() {
    if (used_ == 4) refill();
    return block_[used_++];
  }

  std::uint64_t next_u64() {
    const std::uint64_t hi = next_u32();
    return (hi << 32) | next_u32();
  }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return double(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal, Box-Muller.
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double rad = std::sqrt(-2.0 * std::log(u1));
    const double ang = 2.0 * std::numbers::pi * u2;
    spare_ = rad * std::sin(ang);
    has_spare_ = true;
    return rad * std::cos(ang);
  }

  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) {
    // Rejection keeps the draw exactly uniform.
    const std::uint64_t limit = ~std::uint64_t(0) - (~std::uint64_t(0) % n);
    std::uint64_t v;
    do v = next_u64();
    while (v >= limit);
    return v % n;
  }

 private:
  void refill() {
    block_ = philox4x32_10({std::uint32_t(counter_), std::uint32_t(counter_ >> 32), std::uint32_t(index_),
                            std::uint32_t(index_ >> 32)},
                           key_);
    ++counter_;
    used_ = 0;
  }

  PhiloxKey key_{};
  std::uint64_t index_ = 0;
  std::uint64_t counter_ = 0;
  Philox4x32 block_{};
  int used_ = 4;
  double spare_ = 0;
  bool has_spare_ = false;
};

}  // namespace logmaj
