#pragma once

#include <cstdint>
#include <random>

namespace weilrep {

/// Seeded generator with a fixed contract so every run is replayable:
///  - the engine is std::mt19937_64, seeded with splitmix64(seed);
///  - stream(i) of a base seed s is Rng(splitmix64(s + 0x9E3779B97F4A7C15 * (i + 1)));
///  - uniform(n) uses rejection sampling on raw 64-bit draws (no
///    implementation-defined std distributions), so values are identical
///    across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(splitmix64(seed)) {}

  static std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
  }

  /// Independent per-trial stream derived from the base seed only.
  static Rng stream(std::uint64_t base_seed, std::uint64_t index) {
    return Rng(splitmix64(base_seed + 0x9E3779B97F4A7C15ULL * (index + 1)));
  }

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, n), n > 0.
  std::uint64_t uniform(std::uint64_t n) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % n;
  }

  int uniform_int(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(uniform(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace weilrep
