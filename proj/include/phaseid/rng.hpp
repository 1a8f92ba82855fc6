#ifndef PHASEID_RNG_HPP
#define PHASEID_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace phaseid {

// Every random quantity in the project is derived from std::mt19937_64 (the
// 64-bit Mersenne Twister, whose output stream is fixed by the C++ standard)
// through the documented recipes below, so a dataset is reproducible from
// (generator id, seed) alone. Bump the id if any recipe changes.
inline constexpr const char* kGeneratorId = "phaseid.mt19937_64.v1";

/// SplitMix64 finalizer; used to derive independent stream seeds.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Seed for the `stream`-th substream of a run seeded with `seed`.
inline std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t stream) {
  return mix64(seed ^ mix64(stream));
}

/// Seedable random source with a documented draw discipline.
///
/// Recipes (x denotes the next raw 64-bit engine word):
///   uniform01:            (x >> 11) * 2^-53, in [0, 1)
///   uniform(lo, hi):      lo + (hi - lo) * uniform01()
///   uniform_int(lo, hi):  rejection sampling on raw words (unbiased)
///   gaussian(m, s):       Box-Muller, cosine branch only, two uniform01 draws
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Uniform integer in [lo, hi], inclusive. Draws words until one falls in
  /// the largest prefix of [0, 2^64) that is a multiple of the span.
  std::uint64_t uniform_int(std::uint64_t lo, std::uint64_t hi) {
    std::uint64_t span = hi - lo + 1;
    if (span == 0) return next_u64();  // full 64-bit range
    std::uint64_t reject_below = (0 - span) % span;  // 2^64 mod span
    std::uint64_t x = next_u64();
    while (reject_below != 0 && x >= (0 - reject_below)) x = next_u64();
    return lo + x % span;
  }

  /// z = sqrt(-2 ln(1 - u1)) * cos(2 pi u2); the sine branch is discarded so
  /// every gaussian costs exactly two engine words.
  double gaussian(double mean, double std_dev) {
    double u1 = uniform01();
    double u2 = uniform01();
    double r = std::sqrt(-2.0 * std::log(1.0 - u1));
    return mean + std_dev * r * std::cos(2.0 * M_PI * u2);
  }

 private:
  std::mt19937_64 engine_;
};

/// In-place Fisher-Yates: for i = n-1 .. 1, swap a[i] with a[uniform_int(0, i)].
template <typename T>
void shuffle(std::vector<T>& items, Rng& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(rng.uniform_int(0, i - 1));
    std::swap(items[i - 1], items[j]);
  }
}

}  // namespace phaseid

#endif
