#pragma once

#include <cstdint>

namespace matgrowth {

inline constexpr const char* rng_algorithm_name = "xoshiro256++/splitmix64";

struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t s) : state(s) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
};

class Xoshiro256pp {
 public:
  // Stream for one trial: the trial index perturbs the user seed, then
  // SplitMix64 expands it into the 256-bit state. Trials are reproducible
  // in isolation, so threading cannot change any result.
  static Xoshiro256pp for_trial(std::uint64_t seed, std::uint64_t trial) {
    SplitMix64 sm(seed ^ (0x9E3779B97F4A7C15ULL * (trial + 1)));
    Xoshiro256pp g;
    for (auto& w : g.s_) w = sm.next();
    return g;
  }

  std::uint64_t next() {
    std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // Fair coin from the top bit.
  bool next_bit() { return (next() >> 63) != 0; }

 private:
  Xoshiro256pp() = default;
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }
  std::uint64_t s_[4] = {};
};

}  // namespace matgrowth
