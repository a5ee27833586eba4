#ifndef QAPSEARCH_NEIGHBORHOOD_H_
#define QAPSEARCH_NEIGHBORHOOD_H_

#include <cstdint>
#include <span>
#include <vector>

#include "qapsearch/instance.h"
#include "qapsearch/permutation.h"

namespace qapsearch {

// Fills deltas[k] with DeltaCost of moves[k] for every move of the
// neighborhood. With `parallel`, the moves are evaluated as independent
// tasks on the TBB scheduler; the output is identical either way.
void EvaluateNeighborhood(const Instance& inst, const Permutation& p,
                          std::span<const Move> moves,
                          std::span<std::int64_t> deltas, bool parallel);

// Index of the minimum delta, lowest index on ties. Because moves are in
// lexicographic order this is the lexicographic tie-break.
std::size_t ArgMinDelta(std::span<const std::int64_t> deltas);

// Cached move list and delta buffer for repeated sweeps of one size.
class Neighborhood {
 public:
  explicit Neighborhood(int n);

  std::span<const Move> moves() const { return moves_; }
  std::span<const std::int64_t> deltas() const { return deltas_; }

  void Evaluate(const Instance& inst, const Permutation& p, bool parallel) {
    EvaluateNeighborhood(inst, p, moves_, deltas_, parallel);
  }

 private:
  std::vector<Move> moves_;
  std::vector<std::int64_t> deltas_;
};

}  // namespace qapsearch

#endif  // QAPSEARCH_NEIGHBORHOOD_H_
