#include "qapsearch/rng.h"

#include "qapsearch/error.h"

namespace qapsearch {

namespace {
__extension__ using U128 = unsigned __int128;
}  // namespace

std::uint64_t UniformBelow(Rng& rng, std::uint64_t bound) {
  if (bound == 0) throw DomainError("UniformBelow needs a positive bound");
  // Lemire, "Fast random integer generation in an interval" (2019).
  U128 product =
      static_cast<U128>(rng.Next()) * bound;
  auto low = static_cast<std::uint64_t>(product);
  if (low < bound) {
    const std::uint64_t threshold = -bound % bound;
    while (low < threshold) {
      product = static_cast<U128>(rng.Next()) * bound;
      low = static_cast<std::uint64_t>(product);
    }
  }
  return static_cast<std::uint64_t>(product >> 64);
}

std::int64_t UniformInt(Rng& rng, std::int64_t low, std::int64_t high) {
  if (low > high) throw DomainError("UniformInt with low > high");
  const auto span = static_cast<std::uint64_t>(high) -
                    static_cast<std::uint64_t>(low) + 1;
  if (span == 0) return static_cast<std::int64_t>(rng.Next());  // full range
  return low + static_cast<std::int64_t>(UniformBelow(rng, span));
}

Rng DeriveSeed(std::uint64_t master_seed, std::uint64_t start_index) {
  // Mix64 is a bijection, so distinct indices give distinct states; the
  // master seed enters through an independent mix so that neighbouring
  // master seeds do not produce shifted copies of the same stream.
  return Rng(Rng::Mix64(master_seed ^ 0x6A09E667F3BCC909ULL) ^
             Rng::Mix64(start_index + 1));
}

}  // namespace qapsearch
