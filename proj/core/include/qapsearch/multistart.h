#ifndef QAPSEARCH_MULTISTART_H_
#define QAPSEARCH_MULTISTART_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qapsearch/instance.h"
#include "qapsearch/instance_io.h"
#include "qapsearch/tabu.h"

namespace qapsearch {

enum class Algorithm { kTwoOpt, kTabu };

// "2opt" / "tabu".
std::string_view AlgorithmName(Algorithm algorithm);
std::optional<Algorithm> ParseAlgorithm(std::string_view text);

// Start-count presets.
inline constexpr std::int64_t kFullStarts = 6144;
inline constexpr std::int64_t kDeskStarts = 256;
inline constexpr std::int64_t kDeskLargeStarts = 1024;

struct SearchConfig {
  Algorithm algorithm = Algorithm::kTabu;
  std::int64_t n_starts = kFullStarts;
  std::int64_t iterations = 0;  // <= 0: 4n for 2opt, 8n for tabu
  std::optional<TenureInterval> tenure;  // tabu only; default TenureBounds(n)
  std::uint64_t master_seed = 0;
  int workers = 0;  // <= 0: hardware concurrency
  bool parallel_neighborhood = false;
  // Keep every start's audit trail and final memory (tabu only).
  bool collect_trails = false;
};

// Throws DomainError unless n_starts >= 1.
void ValidateConfig(const SearchConfig& cfg);

// Iteration budget after applying the per-algorithm default.
std::int64_t EffectiveIterations(const SearchConfig& cfg, int n);

// 16 hex digits identifying everything that determines the result: the
// algorithm, start count, iterations, tenure and master seed for size n.
// Worker count and neighborhood parallelism are excluded.
std::string ConfigDigest(const SearchConfig& cfg, int n);

// Runs the single search for `start_index` exactly as RunMultiStart does.
SolutionRecord RunStart(const Instance& inst, const SearchConfig& cfg,
                        std::int64_t start_index);

// Re-runs tabu start `start_index` with its audit trail recorded.
TabuRun ReplayTabuStart(const Instance& inst, const SearchConfig& cfg,
                        std::int64_t start_index);

struct MultiStartResult {
  SolutionRecord best;
  std::int64_t best_start = 0;
  std::vector<std::int64_t> per_start_costs;
  double wall_time_s = 0.0;
  std::string config_digest;
  // Filled only for tabu with collect_trails.
  std::vector<TabuRun> tabu_runs;
};

// Called from a worker thread after each finished start. An exception
// thrown here aborts the run like a failing search.
using StartCallback = std::function<void(std::int64_t start_index)>;

// Runs n_starts independent searches, start k seeded by
// DeriveSeed(master_seed, k), on a pool of cfg.workers threads. The best
// record is the minimum cost, lowest start index on ties, so the result does
// not depend on worker count or scheduling. If any search throws, partial
// results are dropped and MultiStartError reports how many had finished.
MultiStartResult RunMultiStart(const Instance& inst, const SearchConfig& cfg,
                               const StartCallback& on_start_done = {});

}  // namespace qapsearch

#endif  // QAPSEARCH_MULTISTART_H_
