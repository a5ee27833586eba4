#ifndef QAPSEARCH_RNG_H_
#define QAPSEARCH_RNG_H_

#include <cstdint>
#include <limits>

namespace qapsearch {

// SplitMix64 (Steele, Lea, Flood 2014). State advance rule:
//   state += 0x9E3779B97F4A7C15, output = Mix64(state).
// Satisfies UniformRandomBitGenerator so it plugs into <random> if needed,
// but all library sampling goes through UniformInt for build-independent
// streams.
class Rng {
 public:
  using result_type = std::uint64_t;

  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

  explicit Rng(std::uint64_t state = 0) : state_(state) {}

  std::uint64_t Next() {
    state_ += kGamma;
    return Mix64(state_);
  }
  result_type operator()() { return Next(); }

  std::uint64_t state() const { return state_; }

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  // Bijective 64-bit finalizer.
  static constexpr std::uint64_t Mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  friend bool operator==(const Rng&, const Rng&) = default;

 private:
  std::uint64_t state_;
};

// Unbiased draw from [0, bound) by Lemire's multiply-and-reject method.
// bound must be positive.
std::uint64_t UniformBelow(Rng& rng, std::uint64_t bound);

// Unbiased draw from the closed interval [low, high].
std::int64_t UniformInt(Rng& rng, std::int64_t low, std::int64_t high);

// Generator state for start `start_index` of a multi-start run. Injective in
// start_index for a fixed master seed.
Rng DeriveSeed(std::uint64_t master_seed, std::uint64_t start_index);

}  // namespace qapsearch

#endif  // QAPSEARCH_RNG_H_
