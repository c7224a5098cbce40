#pragma once

#include <cstdint>

namespace qmccop {

// SplitMix64: a 64-bit counter-based generator (Steele, Lea & Flood 2014).
// output(i) is a pure function of seed + i*gamma, so streams can be split
// and replayed; used as the seeded pseudo-random baseline and for all
// randomization shift vectors.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform on [0,1) with 53 random bits
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // uniform integer in {0,...,m-1}, m small (digit draws)
  std::uint32_t next_below(std::uint32_t m) {
    return static_cast<std::uint32_t>(next_u64() % m);
  }

 private:
  std::uint64_t state_;
};

// Deterministic seed derivation: distinct (a,b) pairs give independent
// streams for a fixed master seed.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b = 0) {
  SplitMix64 g(master ^ (0x9e3779b97f4a7c15ULL * (a + 1)) ^ (0xd1b54a32d192ed03ULL * (b + 1)));
  g.next_u64();
  return g.next_u64();
}

}  // namespace qmccop
