#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>

namespace prunerl {

// splitmix64 step; used both as a generator and to mix seeds.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Derives an independent stream seed from a root seed and a tag path, e.g.
// mix_seed(seed, {kRolloutStream, step, prompt_idx, g}). Every random choice
// in the library flows from one root seed through this.
inline std::uint64_t mix_seed(std::uint64_t root, std::initializer_list<std::uint64_t> tags) {
  std::uint64_t s = root;
  for (std::uint64_t t : tags) {
    s ^= t + 0x9e3779b97f4a7c15ull + (s << 6) + (s >> 2);
    splitmix64(s);
  }
  return splitmix64(s);
}

// Stream tags for mix_seed. Keep values stable: serialized runs depend on
// them for exact replay.
enum StreamTag : std::uint64_t {
  kInstanceStream = 1,
  kStyleStream = 2,
  kWarmstartStream = 3,
  kRolloutStream = 4,
  kEvalStream = 5,
  kInitStream = 6,
  kBudgetStream = 7,
};

// Deterministic RNG with implementation-independent draw methods, so output
// files do not depend on the standard library's distribution internals.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {
    // Warm up so nearby seeds decorrelate.
    splitmix64(state_);
    splitmix64(state_);
  }

  std::uint64_t next_u64() { return splitmix64(state_); }

  // Uniform in [0, n). Rejection-free multiply-shift (Lemire); bias is
  // negligible for n << 2^64 and the result is fully deterministic.
  std::uint64_t below(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
  }

  int range(int lo, int hi_inclusive) {
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi_inclusive - lo + 1)));
  }

  // Uniform in [0, 1) with 53 random bits.
  double real() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Standard normal via Box-Muller (no cached spare; keeps replay simple).
  double normal() {
    double u1 = real();
    double u2 = real();
    if (u1 < 1e-300) u1 = 1e-300;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
  }

private:
  std::uint64_t state_;
};

}  // namespace prunerl
