#ifndef MALIGN_RNG_HPP
#define MALIGN_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace malign {

// Deterministic random source. The engine is the standard-specified
// mt19937_64; all variate transforms are hand-rolled below so that a
// given seed produces the same stream on every build of this library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  // Unbiased draw from [0, bound) by rejection.
  std::uint64_t uniform_u64(std::uint64_t bound) {
    std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      std::uint64_t r = eng_();
      if (r >= threshold) return r % bound;
    }
  }

  // Uniform double in [0, 1) with 53 random bits.
  double uniform_double() {
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }

  // Standard normal via Box-Muller, one spare cached.
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    // u1 in (0, 1] so the log is finite.
    double u1 = static_cast<double>((eng_() >> 11) + 1) * 0x1.0p-53;
    double u2 = uniform_double();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
  }

 private:
  std::mt19937_64 eng_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

// splitmix64 finalizer.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// Derives an independent stream seed from (seed, stream). Used wherever
// a parent seed fans out into per-trial or per-component seeds.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  return splitmix64(seed ^ splitmix64(stream + 1));
}

// Uniformly random k-subset of {0, .., total-1}, returned sorted.
// Selection sampling: each t is taken with probability needed/(total-t).
inline std::vector<std::size_t> sample_combination(std::size_t total,
                                                   std::size_t k, Rng& rng) {
  std::vector<std::size_t> out;
  out.reserve(k);
  std::size_t needed = k;
  for (std::size_t t = 0; t < total && needed > 0; ++t) {
    if (rng.uniform_u64(total - t) < needed) {
      out.push_back(t);
      --needed;
    }
  }
  return out;
}

}  // namespace malign

#endif  // MALIGN_RNG_HPP
