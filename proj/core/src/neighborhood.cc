#include "qapsearch/neighborhood.h"

#include <tbb/blocked_range.h>
#include <tbb/parallel_for.h>

#include "qapsearch/cost.h"
#include "qapsearch/error.h"

namespace qapsearch {

void EvaluateNeighborhood(const Instance& inst, const Permutation& p,
                          std::span<const Move> moves,
                          std::span<std::int64_t> deltas, bool parallel) {
  if (p.size() != inst.size() || deltas.size() != moves.size()) {
    throw DomainError("neighborhood buffers do not match the instance");
  }
  const auto units = p.units();
  if (!parallel) {
    for (std::size_t k = 0; k < moves.size(); ++k) {
      deltas[k] = DeltaCostUnchecked(inst, units, moves[k].i, moves[k].j);
    }
    return;
  }
  // Each task writes only its own slots, so the buffer contents match the
  // sequential loop exactly.
  tbb::parallel_for(
      tbb::blocked_range<std::size_t>(0, moves.size(), 64),
      [&](const tbb::blocked_range<std::size_t>& range) {
        for (std::size_t k = range.begin(); k != range.end(); ++k) {
          deltas[k] = DeltaCostUnchecked(inst, units, moves[k].i, moves[k].j);
        }
      });
}

std::size_t ArgMinDelta(std::span<const std::int64_t> deltas) {
  std::size_t best = 0;
  for (std::size_t k = 1; k < deltas.size(); ++k) {
    if (deltas[k] < deltas[best]) best = k;
  }
  return best;
}

Neighborhood::Neighborhood(int n)
    : moves_(EnumerateMoves(n)), deltas_(moves_.size(), 0) {}

}  // namespace qapsearch
