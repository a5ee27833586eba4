#include "qapsearch/two_opt.h"

#include <utility>

#include "qapsearch/cost.h"

namespace qapsearch {

TwoOptState TwoOptState::Start(const Instance& inst, Permutation initial) {
  TwoOptState state;
  state.current_cost = FullCost(inst, initial);
  state.best_cost = state.current_cost;
  state.best = initial;
  state.current = std::move(initial);
  return state;
}

TwoOptStepResult TwoOptStep(const Instance& inst, TwoOptState& state,
                            Neighborhood& scratch, bool parallel) {
  scratch.Evaluate(inst, state.current, parallel);
  const std::size_t k = ArgMinDelta(scratch.deltas());
  const Move move = scratch.moves()[k];
  const std::int64_t delta = scratch.deltas()[k];

  // Accepted even when delta >= 0.
  state.current.Swap(move.i, move.j);
  state.current_cost += delta;
  if (state.current_cost < state.best_cost) {
    state.best_cost = state.current_cost;
    state.best = state.current;
  }
  ++state.iteration;
  return {move, delta};
}

SolutionRecord RunTwoOpt(const Instance& inst, Rng rng,
                         const TwoOptOptions& options) {
  const int n = inst.size();
  const std::uint64_t seed = rng.state();
  const std::int64_t iterations = options.iterations > 0
                                      ? options.iterations
                                      : DefaultTwoOptIterations(n);
  TwoOptState state = TwoOptState::Start(inst, RandomPermutation(n, rng));
  Neighborhood scratch(n);
  for (std::int64_t k = 0; k < iterations; ++k) {
    TwoOptStep(inst, state, scratch, options.parallel_neighborhood);
  }
  SolutionRecord record;
  record.instance_name = inst.name();
  record.permutation = std::move(state.best);
  record.cost = state.best_cost;
  record.metadata.algorithm = "2opt";
  record.metadata.seed = seed;
  return record;
}

}  // namespace qapsearch
