#include "qapsearch/multistart.h"

#include <tbb/blocked_range.h>
#include <tbb/info.h>
#include <tbb/parallel_for.h>
#include <tbb/task_arena.h>

#include <atomic>
#include <chrono>
#include <cstdio>
#include <string>

#include "qapsearch/error.h"
#include "qapsearch/rng.h"
#include "qapsearch/two_opt.h"

namespace qapsearch {

std::string_view AlgorithmName(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kTwoOpt:
      return "2opt";
    case Algorithm::kTabu:
      return "tabu";
  }
  return "unknown";
}

std::optional<Algorithm> ParseAlgorithm(std::string_view text) {
  if (text == "2opt") return Algorithm::kTwoOpt;
  if (text == "tabu") return Algorithm::kTabu;
  return std::nullopt;
}

void ValidateConfig(const SearchConfig& cfg) {
  if (cfg.n_starts < 1) {
    throw DomainError("n_starts must be at least 1, got " +
                      std::to_string(cfg.n_starts));
  }
}

std::int64_t EffectiveIterations(const SearchConfig& cfg, int n) {
  if (cfg.iterations > 0) return cfg.iterations;
  return cfg.algorithm == Algorithm::kTabu ? DefaultTabuIterations(n)
                                           : DefaultTwoOptIterations(n);
}

std::string ConfigDigest(const SearchConfig& cfg, int n) {
  std::string canonical = "algo=" + std::string(AlgorithmName(cfg.algorithm)) +
                          ";n=" + std::to_string(n) +
                          ";starts=" + std::to_string(cfg.n_starts) +
                          ";iters=" +
                          std::to_string(EffectiveIterations(cfg, n)) +
                          ";seed=" + std::to_string(cfg.master_seed);
  if (cfg.algorithm == Algorithm::kTabu) {
    const TenureInterval tenure = cfg.tenure.value_or(TenureBounds(n));
    canonical += ";tenure=" + std::to_string(tenure.low()) + ":" +
                 std::to_string(tenure.high());
  }
  // FNV-1a, 64 bit.
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : canonical) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  char hex[17];
  std::snprintf(hex, sizeof(hex), "%016llx",
                static_cast<unsigned long long>(hash));
  return hex;
}

namespace {

TabuOptions ToTabuOptions(const SearchConfig& cfg, bool record_trail) {
  TabuOptions options;
  options.iterations = cfg.iterations;
  options.tenure = cfg.tenure;
  options.record_trail = record_trail;
  options.parallel_neighborhood = cfg.parallel_neighborhood;
  return options;
}

SolutionRecord StampMetadata(SolutionRecord record, const SearchConfig& cfg,
                             const std::string& digest) {
  record.metadata.algorithm = std::string(AlgorithmName(cfg.algorithm));
  record.metadata.seed = cfg.master_seed;
  record.metadata.config_digest = digest;
  return record;
}

SolutionRecord RunStartRecord(const Instance& inst, const SearchConfig& cfg,
                              std::int64_t start_index) {
  const Rng rng =
      DeriveSeed(cfg.master_seed, static_cast<std::uint64_t>(start_index));
  if (cfg.algorithm == Algorithm::kTabu) {
    return RunTabu(inst, rng, ToTabuOptions(cfg, false)).record;
  }
  TwoOptOptions options;
  options.iterations = cfg.iterations;
  options.parallel_neighborhood = cfg.parallel_neighborhood;
  return RunTwoOpt(inst, rng, options);
}

}  // namespace

SolutionRecord RunStart(const Instance& inst, const SearchConfig& cfg,
                        std::int64_t start_index) {
  ValidateConfig(cfg);
  if (start_index < 0 || start_index >= cfg.n_starts) {
    throw DomainError("start index " + std::to_string(start_index) +
                      " outside [0, " + std::to_string(cfg.n_starts) + ")");
  }
  return StampMetadata(RunStartRecord(inst, cfg, start_index), cfg,
                       ConfigDigest(cfg, inst.size()));
}

TabuRun ReplayTabuStart(const Instance& inst, const SearchConfig& cfg,
                        std::int64_t start_index) {
  ValidateConfig(cfg);
  if (start_index < 0 || start_index >= cfg.n_starts) {
    throw DomainError("start index " + std::to_string(start_index) +
                      " outside [0, " + std::to_string(cfg.n_starts) + ")");
  }
  const Rng rng =
      DeriveSeed(cfg.master_seed, static_cast<std::uint64_t>(start_index));
  TabuRun run = RunTabu(inst, rng, ToTabuOptions(cfg, true));
  run.record = StampMetadata(std::move(run.record), cfg,
                             ConfigDigest(cfg, inst.size()));
  return run;
}

MultiStartResult RunMultiStart(const Instance& inst, const SearchConfig& cfg,
                               const StartCallback& on_start_done) {
  ValidateConfig(cfg);
  const auto started = std::chrono::steady_clock::now();
  const auto n_starts = static_cast<std::size_t>(cfg.n_starts);
  const bool keep_trails =
      cfg.collect_trails && cfg.algorithm == Algorithm::kTabu;

  std::vector<SolutionRecord> records(n_starts);
  std::vector<TabuRun> tabu_runs(keep_trails ? n_starts : 0);
  std::atomic<std::size_t> completed{0};

  const int workers =
      cfg.workers > 0 ? cfg.workers : tbb::info::default_concurrency();
  tbb::task_arena arena(workers);
  try {
    arena.execute([&] {
      tbb::parallel_for(
          tbb::blocked_range<std::size_t>(0, n_starts, 1),
          [&](const tbb::blocked_range<std::size_t>& range) {
            for (std::size_t k = range.begin(); k != range.end(); ++k) {
              if (keep_trails) {
                const Rng rng = DeriveSeed(cfg.master_seed, k);
                tabu_runs[k] = RunTabu(inst, rng, ToTabuOptions(cfg, true));
                records[k] = tabu_runs[k].record;
              } else {
                records[k] =
                    RunStartRecord(inst, cfg, static_cast<std::int64_t>(k));
              }
              completed.fetch_add(1, std::memory_order_relaxed);
              if (on_start_done) on_start_done(static_cast<std::int64_t>(k));
            }
          });
    });
  } catch (const std::exception& e) {
    throw MultiStartError(std::string("multi-start aborted after ") +
                              std::to_string(completed.load()) + " of " +
                              std::to_string(n_starts) +
                              " searches: " + e.what(),
                          completed.load());
  }

  MultiStartResult result;
  result.config_digest = ConfigDigest(cfg, inst.size());
  result.per_start_costs.reserve(n_starts);
  std::size_t best = 0;
  for (std::size_t k = 0; k < n_starts; ++k) {
    result.per_start_costs.push_back(records[k].cost);
    // Strict comparison: lowest start index wins ties.
    if (records[k].cost < records[best].cost) best = k;
  }
  result.best_start = static_cast<std::int64_t>(best);
  result.best =
      StampMetadata(std::move(records[best]), cfg, result.config_digest);
  result.tabu_runs = std::move(tabu_runs);
  result.wall_time_s = std::chrono::duration<double>(
                           std::chrono::steady_clock::now() - started)
                           .count();
  return result;
}

}  // namespace qapsearch
