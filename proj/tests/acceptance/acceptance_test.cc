// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.
#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <functional>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qapsearch/cost.h"
#include "qapsearch/instance_io.h"
#include "qapsearch/multistart.h"
#include "qapsearch/permutation.h"
#include "qapsearch/report.h"
#include "qapsearch/rng.h"
#include "qapsearch/tabu.h"
#include "qapsearch/tuner.h"
#include "support/oracles.h"
#include "support/trials.h"

namespace qapsearch {
namespace {

using Clock = std::chrono::steady_clock;

constexpr std::uint64_t kMasterSeed = 20240611;
constexpr int kReps = 8;
constexpr std::int64_t kDeskStartsLarge = 1024;
const std::vector<std::string> kTableInstances = {"tai30a", "tai30b"};

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

struct Verdict {
  bool pass = false;
  std::string detail;
};

Verdict Fail(std::string detail) { return {false, std::move(detail)}; }

// 1: O(n) delta against two literal full recomputations.
Verdict DeltaOracle() {
  const auto start = Clock::now();
  Rng rng(kMasterSeed);
  int mismatches = 0;
  std::string first;
  for (int trial = 0; trial < 500; ++trial) {
    const int n = static_cast<int>(UniformInt(rng, 5, 50));
    const Instance inst = RandomInstance("delta", n, rng);
    const Permutation p = RandomPermutation(n, rng);
    const int i = static_cast<int>(UniformInt(rng, 0, n - 2));
    const int j = static_cast<int>(UniformInt(rng, i + 1, n - 1));
    const std::int64_t fast = DeltaCost(inst, p, Move{i, j});
    const std::int64_t slow = testing::RecomputeDelta(inst, p, i, j);
    if (fast != slow && mismatches++ == 0) {
      first = "trial " + std::to_string(trial) + ": " + std::to_string(fast) +
              " vs " + std::to_string(slow);
    }
  }
  const double secs = Seconds(start);
  std::ostringstream d;
  d << "500 triples, " << mismatches << " mismatches, " << secs << " s";
  if (!first.empty()) d << "; first " << first;
  return {mismatches == 0 && secs < 5.0, d.str()};
}

// 2: match rate against brute-force optima on 20 seeded n = 6 instances.
Verdict ExhaustiveQuality() {
  const auto start = Clock::now();
  struct Arm {
    Algorithm algorithm;
    std::int64_t iterations;
    double threshold;
    int hits = 0;
  };
  std::vector<Arm> arms = {{Algorithm::kTabu, 50, 0.9},
                           {Algorithm::kTwoOpt, 20, 0.8}};
  constexpr int kTrials = 20;
  for (int k = 0; k < kTrials; ++k) {
    const Instance inst = testing::TrialInstance(kMasterSeed, 6, k);
    const std::int64_t optimum = testing::BruteForceOptimum(inst).cost;
    for (Arm& arm : arms) {
      SearchConfig cfg;
      cfg.algorithm = arm.algorithm;
      cfg.n_starts = 128;
      cfg.iterations = arm.iterations;
      cfg.master_seed = kMasterSeed + static_cast<std::uint64_t>(k);
      arm.hits += RunMultiStart(inst, cfg).best.cost == optimum;
    }
  }
  const double secs = Seconds(start);
  bool pass = secs < 60.0;
  std::ostringstream d;
  for (const Arm& arm : arms) {
    const double rate = static_cast<double>(arm.hits) / kTrials;
    pass = pass && rate >= arm.threshold;
    d << AlgorithmName(arm.algorithm) << " " << arm.hits << "/" << kTrials
      << " (need " << arm.threshold << "), ";
  }
  d << secs << " s";
  return {pass, d.str()};
}

// Replays a tabu trail from its initial permutation and checks every
// recorded step. Returns an empty string when the trail is consistent.
std::string AuditTrail(const Instance& inst, const TabuRun& run) {
  const int n = inst.size();
  const TenureInterval bounds = TenureBounds(n);
  if (!(run.tenure == bounds)) return "tenure interval differs from bounds";
  TabuMatrix memory(n);
  Permutation current = run.initial;
  std::int64_t current_cost = FullCost(inst, current);
  if (current_cost != run.initial_cost) return "initial cost mismatch";
  std::int64_t best_cost = current_cost;
  std::int64_t expected_iteration = 1;
  for (const TrailEntry& e : run.trail) {
    const std::string at = " at iteration " + std::to_string(e.iteration);
    if (e.iteration != expected_iteration++) return "iteration gap" + at;
    if (e.delta != DeltaCost(inst, current, e.move)) return "delta" + at;
    const std::int64_t candidate = current_cost + e.delta;
    if (!IsAdmissible(memory, e.move, candidate, best_cost, e.iteration)) {
      return "inadmissible move" + at;
    }
    const bool tabu = memory.expiry(e.move) > e.iteration;
    if (e.tabu != tabu) return "tabu flag" + at;
    if (e.aspirated != (tabu && candidate < best_cost)) {
      return "aspiration flag" + at;
    }
    if (e.tenure < bounds.low() || e.tenure > bounds.high()) {
      return "tenure out of bounds" + at;
    }
    memory.Record(e.move, e.iteration + e.tenure);
    current = ApplyMove(std::move(current), e.move);
    current_cost = candidate;
    const std::int64_t next_best = std::min(best_cost, current_cost);
    if (next_best > best_cost) return "best cost increased" + at;
    best_cost = next_best;
  }
  if (!(memory.cells() == run.memory.cells())) {
    return "recency or frequency cells differ from trail";
  }
  if (best_cost != run.record.cost) return "final best cost mismatch";
  if (FullCost(inst, run.record.permutation) != run.record.cost) {
    return "best permutation cost mismatch";
  }
  return {};
}

struct TableRow {
  std::string instance;
  std::int64_t best_known = 0;
  std::int64_t tabu_best = 0;
  std::int64_t two_opt_best = 0;
  std::vector<std::int64_t> rep0_tabu_costs;
  std::vector<std::int64_t> rep0_two_opt_costs;
};

// Shared state: the desk-scale runs feed criteria 3, 4, 6 and 8.
struct DeskRuns {
  std::vector<TableRow> rows;
  std::int64_t audited_runs = 0;
  std::int64_t audited_moves = 0;
  std::string audit_error;
  std::string error;
  double seconds = 0;
};

DeskRuns RunDeskScale() {
  DeskRuns out;
  const auto start = Clock::now();
  try {
    const RegistryLoad registry =
        LoadBestKnown(testing::DataDir() / "qaplib" / "best_known.csv");
    for (const std::string& name : kTableInstances) {
      const Instance inst = LoadInstance(testing::QaplibFile(name));
      TableRow row;
      row.instance = name;
      row.best_known = registry.registry.Find(name).value();
      for (Algorithm algorithm : {Algorithm::kTabu, Algorithm::kTwoOpt}) {
        std::int64_t best = -1;
        for (int rep = 0; rep < kReps; ++rep) {
          SearchConfig cfg;
          cfg.algorithm = algorithm;
          cfg.n_starts = kDeskStartsLarge;
          cfg.iterations = 8LL * inst.size();
          cfg.master_seed = kMasterSeed + static_cast<std::uint64_t>(rep);
          cfg.collect_trails = algorithm == Algorithm::kTabu;
          const MultiStartResult result = RunMultiStart(inst, cfg);
          best = best < 0 ? result.best.cost : std::min(best, result.best.cost);
          if (rep == 0) {
            (algorithm == Algorithm::kTabu ? row.rep0_tabu_costs
                                           : row.rep0_two_opt_costs) =
                result.per_start_costs;
          }
          for (const TabuRun& run : result.tabu_runs) {
            ++out.audited_runs;
            out.audited_moves += static_cast<std::int64_t>(run.trail.size());
            if (out.audit_error.empty()) {
              const std::string problem = AuditTrail(inst, run);
              if (!problem.empty()) {
                out.audit_error = name + " rep " + std::to_string(rep) + ": " +
                                  problem;
              }
            }
          }
          if (algorithm == Algorithm::kTabu &&
              result.tabu_runs.size() !=
                  static_cast<std::size_t>(cfg.n_starts)) {
            out.audit_error = "missing trails for " + name;
          }
        }
        (algorithm == Algorithm::kTabu ? row.tabu_best : row.two_opt_best) =
            best;
      }
      out.rows.push_back(std::move(row));
    }
  } catch (const std::exception& e) {
    out.error = e.what();
  }
  out.seconds = Seconds(start);
  return out;
}

// 3: accuracy of the best of 8 repetitions at N = 1024, 8n iterations.
Verdict TableReproduction(const DeskRuns& desk) {
  if (!desk.error.empty()) return Fail(desk.error);
  bool pass = true;
  std::ostringstream d;
  for (const TableRow& row : desk.rows) {
    const Accuracy tabu = ComputeAccuracy(row.tabu_best, row.best_known);
    const Accuracy two_opt = ComputeAccuracy(row.two_opt_best, row.best_known);
    pass = pass && tabu.value() <= 0.02 && two_opt.value() <= 0.05;
    d << row.instance << " tabu " << tabu.ToString() << " 2opt "
      << two_opt.ToString() << "; ";
  }
  d << "limits 0.02 / 0.05, " << desk.seconds << " s";
  return {pass, d.str()};
}

// 4: mean gap of tabu does not exceed mean gap of 2opt.
Verdict TabuBeatsTwoOpt(const DeskRuns& desk) {
  if (!desk.error.empty()) return Fail(desk.error);
  std::vector<double> tabu_gaps, two_opt_gaps;
  for (const TableRow& row : desk.rows) {
    tabu_gaps.push_back(ComputeAccuracy(row.tabu_best, row.best_known).value());
    two_opt_gaps.push_back(
        ComputeAccuracy(row.two_opt_best, row.best_known).value());
  }
  constexpr int kRandom = 20;
  const std::uint64_t base = kMasterSeed + 20;
  for (int k = 0; k < kRandom; ++k) {
    const Instance inst = testing::TrialInstance(base, 20, k);
    std::int64_t best[2];
    for (Algorithm algorithm : {Algorithm::kTabu, Algorithm::kTwoOpt}) {
      SearchConfig cfg;
      cfg.algorithm = algorithm;
      cfg.n_starts = kDeskStarts;
      cfg.iterations = 8LL * inst.size();
      cfg.master_seed = base + static_cast<std::uint64_t>(k);
      best[algorithm == Algorithm::kTabu ? 0 : 1] =
          RunMultiStart(inst, cfg).best.cost;
    }
    const std::int64_t reference = std::min(best[0], best[1]);
    tabu_gaps.push_back(ComputeAccuracy(best[0], reference).value());
    two_opt_gaps.push_back(ComputeAccuracy(best[1], reference).value());
  }
  auto mean = [](const std::vector<double>& v) {
    return std::accumulate(v.begin(), v.end(), 0.0) /
           static_cast<double>(v.size());
  };
  const double tabu = mean(tabu_gaps);
  const double two_opt = mean(two_opt_gaps);
  std::ostringstream d;
  d << tabu_gaps.size() << " instances, mean gap tabu " << tabu << " 2opt "
    << two_opt;
  return {tabu <= two_opt, d.str()};
}

// 5: worker count does not change any output.
Verdict Determinism() {
  const Instance inst = LoadInstance(testing::QaplibFile("tai30a"));
  bool pass = true;
  std::ostringstream d;
  for (Algorithm algorithm : {Algorithm::kTabu, Algorithm::kTwoOpt}) {
    for (bool parallel_neighborhood : {false, true}) {
      std::optional<MultiStartResult> reference;
      for (int workers : {1, 4, 8}) {
        SearchConfig cfg;
        cfg.algorithm = algorithm;
        cfg.n_starts = 96;
        cfg.iterations = 60;
        cfg.master_seed = kMasterSeed;
        cfg.workers = workers;
        cfg.parallel_neighborhood = parallel_neighborhood;
        MultiStartResult result = RunMultiStart(inst, cfg);
        if (!reference) {
          reference = std::move(result);
          continue;
        }
        const bool same =
            result.best.permutation == reference->best.permutation &&
            result.best.cost == reference->best.cost &&
            result.best_start == reference->best_start &&
            result.per_start_costs == reference->per_start_costs &&
            result.config_digest == reference->config_digest;
        if (!same) {
          pass = false;
          d << AlgorithmName(algorithm) << " workers " << workers
            << (parallel_neighborhood ? " parallel-neighborhood" : "")
            << " differs; ";
        }
      }
    }
  }
  d << "workers {1,4,8} x neighborhood {serial,parallel} x {tabu,2opt}";
  return {pass, d.str()};
}

// 6: every trail from the criterion 3 tabu runs replays consistently.
Verdict TabuInvariants(const DeskRuns& desk) {
  if (!desk.error.empty()) return Fail(desk.error);
  std::ostringstream d;
  d << desk.audited_runs << " trails, " << desk.audited_moves << " moves";
  if (!desk.audit_error.empty()) d << "; " << desk.audit_error;
  const std::int64_t expected =
      static_cast<std::int64_t>(kTableInstances.size()) * kReps *
      kDeskStartsLarge;
  return {desk.audit_error.empty() && desk.audited_runs == expected, d.str()};
}

// 7: enumeration against a literal triple loop over the constraint set.
Verdict LaunchSpace() {
  std::vector<ThreadConfig> brute;
  for (std::int64_t n = 992; n <= 12320; ++n) {
    for (std::int64_t t = 1; t <= 1056; ++t) {
      for (std::int64_t b = 1; t * b <= n; ++b) {
        if (t * b != n) continue;
        const bool ok = n % 32 == 0 && t % 32 == 0 && t >= 32 && t <= 1024 &&
                        n >= 1024 && n <= 12288;
        if (ok) brute.push_back({n, t, b});
      }
    }
  }
  const std::vector<ThreadConfig> enumerated = EnumerateConfigs();
  const bool equal = enumerated == brute;
  const bool has_reference_point =
      std::find(enumerated.begin(), enumerated.end(),
                ThreadConfig{6144, 192, 32}) != enumerated.end();
  std::int64_t invalid = 0;
  for (const ThreadConfig& c : enumerated) {
    invalid += !ValidateThreadConfig(c).valid;
  }
  std::ostringstream d;
  d << enumerated.size() << " configs, brute force " << brute.size()
    << (equal ? " (equal)" : " (differ)") << ", (6144,192,32) "
    << (has_reference_point ? "present" : "missing") << ", " << invalid
    << " invalid";
  return {equal && has_reference_point && invalid == 0, d.str()};
}

// 8: the first 256 starts of a 1024-start run are the 256-start run.
Verdict SubsetDominance(const DeskRuns& desk) {
  if (!desk.error.empty()) return Fail(desk.error);
  bool pass = true;
  std::ostringstream d;
  for (const TableRow& row : desk.rows) {
    const Instance inst = LoadInstance(testing::QaplibFile(row.instance));
    for (Algorithm algorithm : {Algorithm::kTabu, Algorithm::kTwoOpt}) {
      SearchConfig cfg;
      cfg.algorithm = algorithm;
      cfg.n_starts = kDeskStarts;
      cfg.iterations = 8LL * inst.size();
      cfg.master_seed = kMasterSeed;
      const MultiStartResult small = RunMultiStart(inst, cfg);
      const auto& large = algorithm == Algorithm::kTabu
                              ? row.rep0_tabu_costs
                              : row.rep0_two_opt_costs;
      const std::int64_t large_min =
          *std::min_element(large.begin(), large.end());
      const bool prefix = std::equal(small.per_start_costs.begin(),
                                     small.per_start_costs.end(),
                                     large.begin());
      pass = pass && prefix && large_min <= small.best.cost;
      d << row.instance << " " << AlgorithmName(algorithm) << " "
        << large_min << " <= " << small.best.cost
        << (prefix ? "" : " (prefix differs)") << "; ";
    }
  }
  return {pass, d.str()};
}

}  // namespace
}  // namespace qapsearch

int main() {
  using namespace qapsearch;
  std::vector<Verdict> verdicts(8);
  auto guarded = [](const std::function<Verdict()>& f) {
    try {
      return f();
    } catch (const std::exception& e) {
      return Fail(std::string("exception: ") + e.what());
    }
  };
  verdicts[0] = guarded(DeltaOracle);
  verdicts[1] = guarded(ExhaustiveQuality);
  const DeskRuns desk = RunDeskScale();
  verdicts[2] = guarded([&] { return TableReproduction(desk); });
  verdicts[3] = guarded([&] { return TabuBeatsTwoOpt(desk); });
  verdicts[4] = guarded(Determinism);
  verdicts[5] = guarded([&] { return TabuInvariants(desk); });
  verdicts[6] = guarded(LaunchSpace);
  verdicts[7] = guarded([&] { return SubsetDominance(desk); });

  const char* names[] = {"delta oracle equivalence",
                         "exhaustive oracle quality",
                         "desk-scale tai30 accuracy",
                         "tabu gap not above 2opt gap",
                         "determinism across workers",
                         "tabu trail invariants",
                         "launch-space enumeration",
                         "subset dominance N=1024 vs N=256"};
  int failures = 0;
  for (int k = 0; k < 8; ++k) {
    failures += !verdicts[k].pass;
    std::printf("criterion %d %s: %s (%s)\n", k + 1, names[k],
                verdicts[k].pass ? "PASS" : "FAIL",
                verdicts[k].detail.c_str());
  }
  std::fflush(stdout);
  return failures == 0 ? 0 : 1;
}
