#include "qapsearch/tabu.h"

#include <charconv>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>

#include "qapsearch/cost.h"
#include "qapsearch/error.h"

namespace qapsearch {

TenureInterval::TenureInterval(int low, int high) : low_(low), high_(high) {
  if (low < 1 || high < low) {
    throw DomainError("tenure interval [" + std::to_string(low) + ", " +
                      std::to_string(high) + "] needs 1 <= low <= high");
  }
}

TenureInterval TenureInterval::Parse(std::string_view text) {
  const auto colon = text.find(':');
  auto parse_int = [&](std::string_view part) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(),
                                     value);
    if (ec != std::errc() || ptr != part.data() + part.size() ||
        part.empty()) {
      throw DomainError("tenure must look like LO:HI, got '" +
                        std::string(text) + "'");
    }
    return value;
  };
  if (colon == std::string_view::npos) {
    throw DomainError("tenure must look like LO:HI, got '" +
                      std::string(text) + "'");
  }
  return TenureInterval(parse_int(text.substr(0, colon)),
                        parse_int(text.substr(colon + 1)));
}

TenureInterval TenureBounds(int n) {
  if (n < 2) throw DomainError("tenure bounds need n >= 2");
  // floor(0.1n) and ceil(0.33n) in exact integer arithmetic.
  const int low = std::max(1, n / 10);
  const int high = std::max(low, (33 * n + 99) / 100);
  return TenureInterval(low, high);
}

int SampleTenure(const TenureInterval& interval, Rng& rng) {
  return static_cast<int>(UniformInt(rng, interval.low(), interval.high()));
}

bool IsAdmissible(RecencyView recency, const Move& m,
                  std::int64_t candidate_cost, std::int64_t best_cost,
                  std::int64_t iteration) {
  return recency.expiry(m) <= iteration || candidate_cost < best_cost;
}

bool IsAdmissible(const TabuMatrix& tabu, const Move& m,
                  std::int64_t candidate_cost, std::int64_t best_cost,
                  std::int64_t iteration) {
  return IsAdmissible(tabu.recency(), m, candidate_cost, best_cost, iteration);
}

std::optional<std::size_t> SelectAdmissibleMove(
    std::span<const Move> moves, std::span<const std::int64_t> deltas,
    RecencyView recency, std::int64_t current_cost, std::int64_t best_cost,
    std::int64_t iteration) {
  // Rejecting inadmissible candidates in ascending-delta order and taking
  // the first survivor is the same as taking the minimum over survivors.
  std::optional<std::size_t> chosen;
  for (std::size_t k = 0; k < moves.size(); ++k) {
    if (chosen && deltas[k] >= deltas[*chosen]) continue;
    if (IsAdmissible(recency, moves[k], current_cost + deltas[k], best_cost,
                     iteration)) {
      chosen = k;
    }
  }
  return chosen;
}

TabuState TabuState::Start(const Instance& inst, Permutation initial,
                           TenureInterval tenure) {
  TabuState state;
  state.current_cost = FullCost(inst, initial);
  state.best_cost = state.current_cost;
  state.best = initial;
  state.current = std::move(initial);
  state.tabu = TabuMatrix(inst.size());
  state.tenure = tenure;
  return state;
}

std::optional<TrailEntry> TabuStep(const Instance& inst, TabuState& state,
                                   Rng& rng, Neighborhood& scratch,
                                   bool parallel) {
  scratch.Evaluate(inst, state.current, parallel);
  const auto chosen = SelectAdmissibleMove(
      scratch.moves(), scratch.deltas(), state.tabu.recency(),
      state.current_cost, state.best_cost, state.iteration);
  if (!chosen) {
    state.stopped_early = true;
    return std::nullopt;
  }

  TrailEntry entry;
  entry.iteration = state.iteration;
  entry.move = scratch.moves()[*chosen];
  entry.delta = scratch.deltas()[*chosen];
  entry.tabu = state.tabu.expiry(entry.move) > state.iteration;
  entry.aspirated = entry.tabu;  // a selected tabu move is always aspirated

  state.current.Swap(entry.move.i, entry.move.j);
  state.current_cost += entry.delta;
  entry.tenure = SampleTenure(state.tenure, rng);
  state.tabu.Record(entry.move, state.iteration + entry.tenure);
  if (state.current_cost < state.best_cost) {
    state.best_cost = state.current_cost;
    state.best = state.current;
  }
  ++state.iteration;
  return entry;
}

TabuRun RunTabu(const Instance& inst, Rng rng, const TabuOptions& options) {
  const int n = inst.size();
  const std::uint64_t seed = rng.state();
  const std::int64_t iterations = options.iterations > 0
                                      ? options.iterations
                                      : DefaultTabuIterations(n);
  const TenureInterval tenure = options.tenure.value_or(TenureBounds(n));

  TabuRun run;
  run.initial = RandomPermutation(n, rng);
  TabuState state = TabuState::Start(inst, run.initial, tenure);
  run.initial_cost = state.current_cost;
  run.tenure = tenure;
  if (options.record_trail) {
    run.trail.reserve(static_cast<std::size_t>(iterations));
  }

  Neighborhood scratch(n);
  for (std::int64_t k = 0; k < iterations; ++k) {
    auto entry =
        TabuStep(inst, state, rng, scratch, options.parallel_neighborhood);
    if (!entry) break;
    ++run.iterations_run;
    if (options.record_trail) run.trail.push_back(*entry);
  }

  run.record.instance_name = inst.name();
  run.record.permutation = std::move(state.best);
  run.record.cost = state.best_cost;
  run.record.metadata.algorithm = "tabu";
  run.record.metadata.seed = seed;
  run.memory = std::move(state.tabu);
  run.stopped_early = state.stopped_early;
  return run;
}

void WriteTrailCsv(std::span<const TrailEntry> trail, std::ostream& out) {
  std::ostringstream text;
  text << "iter,i,j,delta,tabu_flag,aspirated_flag,tenure_drawn\n";
  for (const TrailEntry& e : trail) {
    text << e.iteration << ',' << e.move.i + 1 << ',' << e.move.j + 1 << ','
         << e.delta << ',' << (e.tabu ? 1 : 0) << ','
         << (e.aspirated ? 1 : 0) << ',' << e.tenure << '\n';
  }
  out << text.str();
}

}  // namespace qapsearch
