#pragma once

#include <array>
#include <cmath>
#include <cstdint>

#include "krmiss/errors.hpp"

namespace krmiss {

// Philox4x32-10 counter-based generator (Salmon et al., SC 2011).
// A (key, counter) pair maps to a 128-bit block through a fixed bijection,
// so streams are random-access and replications can be generated in any
// order, on any thread, with identical output.
class Philox4x32 {
 public:
  using Block = std::array<std::uint32_t, 4>;

  static Block block(std::uint64_t key, const Block& counter) {
    std::uint32_t k0 = static_cast<std::uint32_t>(key);
    std::uint32_t k1 = static_cast<std::uint32_t>(key >> 32);
    Block c = counter;
    for (int round = 0; round < 10; ++round) {
      if (round > 0) {
        k0 += 0x9E3779B9u;
        k1 += 0xBB67AE85u;
      }
      const std::uint64_t p0 = std::uint64_t{0xD2511F53u} * c[0];
      const std::uint64_t p1 = std::uint64_t{0xCD9E8D57u} * c[2];
      c = {static_cast<std::uint32_t>(p1 >> 32) ^ c[1] ^ k0,
           static_cast<std::uint32_t>(p1),
           static_cast<std::uint32_t>(p0 >> 32) ^ c[3] ^ k1,
           static_cast<std::uint32_t>(p0)};
    }
    return c;
  }
};

// A lazily-consumed stream of variates drawn from one (seed, stream) pair.
// The stream id occupies the top half of the 128-bit Philox counter and the
// block index the bottom half, so distinct stream ids never overlap.
class RandomStream {
 public:
  RandomStream(std::uint64_t seed, std::uint64_t stream)
      : key_(seed), stream_(stream) {}

  std::uint32_t next_u32() {
    if (pos_ == 4) {
      buf_ = Philox4x32::block(
          key_, {static_cast<std::uint32_t>(block_),
                 static_cast<std::uint32_t>(block_ >> 32),
                 static_cast<std::uint32_t>(stream_),
                 static_cast<std::uint32_t>(stream_ >> 32)});
      ++block_;
      pos_ = 0;
    }
    return buf_[pos_++];
  }

  std::uint64_t next_u64() {
    const std::uint64_t hi = next_u32();
    return (hi << 32) | next_u32();
  }

  // Uniform on [0, 1) with 53 random bits.
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform on (0, 1]; safe to feed into log().
  double uniform_pos() {
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Standard normal via Box-Muller; the paired variate is cached.
  double normal() {
    if (have_cached_) {
      have_cached_ = false;
      return cached_;
    }
    const double u1 = uniform_pos();
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 6.283185307179586477 * u2;
    cached_ = radius * std::sin(angle);
    have_cached_ = true;
    return radius * std::cos(angle);
  }

  // Gamma(shape, 1) for integer shape, as a sum of exponentials.
  double gamma_int(int shape) {
    if (shape <= 0) throw BadArgument("gamma shape must be positive");
    double log_prod = 0.0;
    for (int i = 0; i < shape; ++i) log_prod += std::log(uniform_pos());
    return -log_prod;
  }

  // Beta(a, b) for integer parameters via the ratio-of-Gammas construction.
  double beta_int(int a, int b) {
    const double ga = gamma_int(a);
    const double gb = gamma_int(b);
    return ga / (ga + gb);
  }

  // Unbiased integer on [0, n) by rejection.
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) throw BadArgument("below(0)");
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t draw;
    do {
      draw = next_u64();
    } while (draw >= limit);
    return draw % n;
  }

 private:
  std::uint64_t key_;
  std::uint64_t stream_;
  std::uint64_t block_ = 0;
  Philox4x32::Block buf_{};
  int pos_ = 4;
  double cached_ = 0.0;
  bool have_cached_ = false;
};

// Derives a 64-bit sub-seed for one unit of work (one replication, one test
// set) from a master seed, without any sequential state.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  return RandomStream(master, stream).next_u64();
}

}  // namespace krmiss
