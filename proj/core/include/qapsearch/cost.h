#ifndef QAPSEARCH_COST_H_
#define QAPSEARCH_COST_H_

#include <cstdint>

#include "qapsearch/instance.h"
#include "qapsearch/permutation.h"

namespace qapsearch {

// Cost z = sum_i sum_j flow(p_i, p_j) * distance(i, j). O(n^2), exact.
// Throws DomainError on size mismatch.
std::int64_t FullCost(const Instance& inst, const Permutation& p);

// Cost change cost(swap(p, m)) - cost(p) of exchanging locations m.i and
// m.j, in O(n). Uses the asymmetric pairwise-exchange formula plus the
// diagonal term, so instances with non-zero diagonals stay exact.
std::int64_t DeltaCost(const Instance& inst, const Permutation& p,
                       const Move& m);

// Unchecked O(n) kernel behind DeltaCost; the caller guarantees sizes and
// 0 <= i < j < n.
std::int64_t DeltaCostUnchecked(const Instance& inst,
                                std::span<const int> units, int i, int j);

struct ExhaustiveResult {
  Permutation best;
  std::int64_t cost = 0;
};

// Largest n the exhaustive oracle accepts.
inline constexpr int kExhaustiveMaxSize = 10;

// Enumerates all n! permutations in lexicographic order and returns the
// first one of minimum cost. Throws DomainError for n > 10.
ExhaustiveResult ExhaustiveSolve(const Instance& inst);

}  // namespace qapsearch

#endif  // QAPSEARCH_COST_H_
