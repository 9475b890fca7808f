#pragma once
#include <cstdint>
#include <string>

namespace cubicrank {

// Deterministic, platform-independent randomness.  Everything that samples
// derives its stream from a single 64-bit seed plus a stage name, so that
// replays are byte-identical regardless of how work is parallelized.

inline uint64_t splitmix64(uint64_t& s) {
  uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline uint64_t fnv1a64(const std::string& s) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) { h ^= c; h *= 0x100000001b3ULL; }
  return h;
}

class Rng {
 public:
  explicit Rng(uint64_t seed) {
    uint64_t s = seed;
    for (auto& w : st_) w = splitmix64(s);
  }
  // named sub-stream: independent generator for one pipeline stage
  Rng(uint64_t seed, const std::string& stream) : Rng(seed ^ fnv1a64(stream)) {}
  // indexed sub-stream (per trial / per restart)
  Rng(uint64_t seed, const std::string& stream, uint64_t index)
      : Rng((seed ^ fnv1a64(stream)) + 0x9e3779b97f4a7c15ULL * (index + 1)) {}

  uint64_t next() {  // xoshiro256**
    auto rotl = [](uint64_t x, int k) { return (x << k) | (x >> (64 - k)); };
    uint64_t r = rotl(st_[1] * 5, 7) * 9;
    uint64_t t = st_[1] << 17;
    st_[2] ^= st_[0]; st_[3] ^= st_[1]; st_[1] ^= st_[2]; st_[0] ^= st_[3];
    st_[2] ^= t; st_[3] = rotl(st_[3], 45);
    return r;
  }

  // uniform in [0, n) without modulo bias
  uint64_t below(uint64_t n) {
    uint64_t lim = UINT64_MAX - UINT64_MAX % n;
    uint64_t v;
    do { v = next(); } while (v >= lim);
    return v % n;
  }

  // uniform integer in [lo, hi]
  long long int_in(long long lo, long long hi) {
    return lo + (long long)below((uint64_t)(hi - lo + 1));
  }

  double real01() { return (next() >> 11) * 0x1.0p-53; }

 private:
  uint64_t st_[4];
};

}  // namespace cubicrank
