// Copyright 2026 rASD Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#ifndef RASD_COMMON_RNG_H_
#define RASD_COMMON_RNG_H_

#include <array>
#include <cmath>
#include <cstdint>

namespace rasd {

// splitmix64, used to expand seeds into xoshiro state and to derive
// independent child seeds. Stable across platforms, unlike the
// distributions in <random>.
inline uint64_t SplitMix64(uint64_t& state) {
  uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// xoshiro256** with explicit, reproducible real-valued draws.
class Rng {
 public:
  explicit Rng(uint64_t seed) { Seed(seed); }

  void Seed(uint64_t seed) {
    uint64_t sm = seed;
    for (auto& s : s_) s = SplitMix64(sm);
    has_gauss_ = false;
  }

  uint64_t NextU64() {
    const uint64_t result = Rotl(s_[1] * 5, 7) * 9;
    const uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = Rotl(s_[3], 45);
    return result;
  }

  // Uniform in [0, 1).
  double Uniform() { return (NextU64() >> 11) * 0x1.0p-53; }

  double Uniform(double lo, double hi) { return lo + (hi - lo) * Uniform(); }

  // Integer in [0, n), n > 0.
  uint64_t Below(uint64_t n) { return NextU64() % n; }

  // Standard normal via Box-Muller (deterministic draw order).
  double Gauss() {
    if (has_gauss_) {
      has_gauss_ = false;
      return gauss_;
    }
    double u1 = 0.0;
    do {
      u1 = Uniform();
    } while (u1 <= 0.0);
    const double u2 = Uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586476925286766559 * u2;
    gauss_ = r * std::sin(a);
    has_gauss_ = true;
    return r * std::cos(a);
  }

  bool Bernoulli(double p) { return Uniform() < p; }

  // Derives an independent stream, e.g. per (epoch, index) work item.
  static uint64_t DeriveSeed(uint64_t base, uint64_t a, uint64_t b = 0) {
    uint64_t s = base;
    uint64_t h = SplitMix64(s);
    s = h ^ (a + 0x9e3779b97f4a7c15ULL);
    h = SplitMix64(s);
    s = h ^ (b + 0xc2b2ae3d27d4eb4fULL);
    return SplitMix64(s);
  }

  std::array<uint64_t, 4> state() const { return s_; }
  void set_state(const std::array<uint64_t, 4>& s) {
    s_ = s;
    has_gauss_ = false;
  }

 private:
  static uint64_t Rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

  std::array<uint64_t, 4> s_{};
  double gauss_ = 0.0;
  bool has_gauss_ = false;
};

}  // namespace rasd

#endif  // RASD_COMMON_RNG_H_
