#ifndef QAPSEARCH_TWO_OPT_H_
#define QAPSEARCH_TWO_OPT_H_

#include <cstdint>

#include "qapsearch/instance.h"
#include "qapsearch/instance_io.h"
#include "qapsearch/neighborhood.h"
#include "qapsearch/permutation.h"
#include "qapsearch/rng.h"

namespace qapsearch {

// Best-neighbor descent state. current may be worse than best after a
// non-improving move; best is the cheapest solution visited so far.
struct TwoOptState {
  Permutation current;
  std::int64_t current_cost = 0;
  Permutation best;
  std::int64_t best_cost = 0;
  std::int64_t iteration = 1;

  static TwoOptState Start(const Instance& inst, Permutation initial);
};

struct TwoOptStepResult {
  Move move;
  std::int64_t delta = 0;
};

// One sweep: evaluates every pairwise exchange, applies the minimum-delta
// move (lowest move on ties) unconditionally, and updates best on strict
// improvement. `scratch` must be sized for inst.size().
TwoOptStepResult TwoOptStep(const Instance& inst, TwoOptState& state,
                            Neighborhood& scratch, bool parallel = false);

// Default sweep budget: 4n.
constexpr std::int64_t DefaultTwoOptIterations(int n) { return 4LL * n; }

struct TwoOptOptions {
  std::int64_t iterations = 0;  // <= 0 selects DefaultTwoOptIterations(n)
  bool parallel_neighborhood = false;
};

// Random start drawn from `rng`, then exactly `iterations` sweeps. Returns
// the best solution found.
SolutionRecord RunTwoOpt(const Instance& inst, Rng rng,
                         const TwoOptOptions& options);

}  // namespace qapsearch

#endif  // QAPSEARCH_TWO_OPT_H_
