#include "cli/commands.h"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "qapsearch/cost.h"
#include "qapsearch/error.h"
#include "qapsearch/instance_io.h"
#include "qapsearch/multistart.h"
#include "qapsearch/report.h"
#include "qapsearch/tabu.h"
#include "qapsearch/tuner.h"

namespace qapsearch::cli {

namespace {

// Flags shared by every subcommand that launches searches.
struct SearchFlags {
  std::vector<std::string> algorithms;
  std::string preset;
  std::int64_t starts = 0;
  std::int64_t iterations = 0;
  std::uint64_t seed = 0;
  int workers = 0;
  std::string tenure;
  bool parallel_neighborhood = false;
};

void AddSearchFlags(CLI::App* app, SearchFlags& flags, bool multi_algo,
                    std::int64_t default_starts) {
  flags.starts = default_starts;
  auto* algo = app->add_option("--algo", flags.algorithms,
                               multi_algo ? "Algorithms (2opt, tabu), comma "
                                            "separated or repeated"
                                          : "Algorithm: 2opt or tabu")
                   ->required()
                   ->check(CLI::IsMember({"2opt", "tabu"}));
  if (multi_algo) {
    algo->delimiter(',');
  } else {
    algo->expected(1);
  }
  app->add_option("--starts", flags.starts, "Independent searches N")
      ->check(CLI::PositiveNumber);
  app->add_option("--preset", flags.preset,
                  "Start-count preset: full (6144), desk (256), "
                  "desk-large (1024)")
      ->check(CLI::IsMember({"full", "desk", "desk-large"}))
      ->excludes("--starts");
  app->add_option("--iters", flags.iterations,
                  "Iterations per search (default 4n for 2opt, 8n for tabu)")
      ->check(CLI::PositiveNumber);
  app->add_option("--seed", flags.seed, "Master seed");
  app->add_option("--workers", flags.workers,
                  std::string("Worker threads (default $") + kWorkersEnv +
                      " or all cores)")
      ->check(CLI::PositiveNumber);
  app->add_option("--tenure", flags.tenure,
                  "Tabu tenure interval LO:HI (default [0.1n, 0.33n])");
  app->add_flag("--parallel-neighborhood", flags.parallel_neighborhood,
                "Evaluate each neighborhood with parallel tasks");
}

// Thrown for flag values CLI11 cannot validate on its own.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int ResolveWorkers(int flag) {
  if (flag > 0) return flag;
  if (const char* env = std::getenv(kWorkersEnv)) {
    const int value = std::atoi(env);
    if (value > 0) return value;
  }
  return 0;
}

SearchConfig ToConfig(const SearchFlags& flags, Algorithm algorithm) {
  SearchConfig cfg;
  cfg.algorithm = algorithm;
  cfg.n_starts = flags.starts;
  if (flags.preset == "full") cfg.n_starts = kFullStarts;
  if (flags.preset == "desk") cfg.n_starts = kDeskStarts;
  if (flags.preset == "desk-large") cfg.n_starts = kDeskLargeStarts;
  cfg.iterations = flags.iterations;
  cfg.master_seed = flags.seed;
  cfg.workers = ResolveWorkers(flags.workers);
  cfg.parallel_neighborhood = flags.parallel_neighborhood;
  if (!flags.tenure.empty()) {
    try {
      cfg.tenure = TenureInterval::Parse(flags.tenure);
    } catch (const DomainError& e) {
      throw UsageError(std::string("--tenure: ") + e.what());
    }
  }
  return cfg;
}

std::vector<Algorithm> Algorithms(const SearchFlags& flags) {
  std::vector<Algorithm> out;
  for (const auto& name : flags.algorithms) {
    const auto algo = ParseAlgorithm(name);
    if (!algo) throw UsageError("unknown algorithm '" + name + "'");
    if (std::find(out.begin(), out.end(), *algo) == out.end()) {
      out.push_back(*algo);
    }
  }
  return out;
}

std::string FormatSeconds(double seconds) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(3) << seconds;
  return s.str();
}

std::ofstream OpenOutput(const std::string& path) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw ParseError("cannot write " + path);
  return file;
}

// Writes `text` to `path`, or to `out` when path is empty.
void Emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file = OpenOutput(path);
  file << text;
  if (!file) throw ParseError("failed writing " + path);
}

BestKnownRegistry LoadRegistry(const std::string& path, std::ostream& err) {
  RegistryLoad load = LoadBestKnown(std::filesystem::path(path));
  for (const auto& w : load.warnings) err << "warning: " << path << ": " << w << '\n';
  return std::move(load.registry);
}

// --- solve ----------------------------------------------------------------

struct SolveFlags {
  std::string instance;
  std::string out;
  std::string trail;
};

int Solve(const SearchFlags& search, const SolveFlags& flags,
          std::ostream& out) {
  const Algorithm algorithm = Algorithms(search).front();
  if (!flags.trail.empty() && algorithm != Algorithm::kTabu) {
    throw UsageError("--trail requires --algo tabu");
  }
  const SearchConfig cfg = ToConfig(search, algorithm);
  const Instance inst = LoadInstance(flags.instance);
  const MultiStartResult result = RunMultiStart(inst, cfg);

  std::ostringstream solution;
  WriteSolution(result.best, inst, solution);
  if (!flags.out.empty()) Emit(solution.str(), flags.out, out);
  if (!flags.trail.empty()) {
    const TabuRun run = ReplayTabuStart(inst, cfg, result.best_start);
    std::ostringstream trail;
    WriteTrailCsv(run.trail, trail);
    Emit(trail.str(), flags.trail, out);
  }

  out << "instance " << inst.name() << '\n'
      << "algorithm " << AlgorithmName(algorithm) << '\n'
      << "cost " << result.best.cost << '\n'
      << "permutation " << result.best.permutation.ToString() << '\n'
      << "best_start " << result.best_start << '\n'
      << "config " << result.config_digest << '\n'
      << "wall_time_s " << FormatSeconds(result.wall_time_s) << '\n';
  return kExitOk;
}

// --- bench ----------------------------------------------------------------

struct BenchFlags {
  std::string suite;
  std::string best_known;
  int reps = 8;
  std::string out;
  bool no_time = false;
};

std::vector<std::filesystem::path> ReadSuite(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open suite " + path);
  const auto base = std::filesystem::path(path).parent_path();
  std::vector<std::filesystem::path> instances;
  std::string line;
  while (std::getline(in, line)) {
    line.erase(0, line.find_first_not_of(" \t\r"));
    line.erase(line.find_last_not_of(" \t\r") + 1);
    if (line.empty() || line.front() == '#') continue;
    std::filesystem::path p(line);
    instances.push_back(p.is_absolute() ? p : base / p);
  }
  return instances;
}

std::string JoinCosts(const std::vector<std::int64_t>& costs) {
  std::string s;
  for (std::size_t k = 0; k < costs.size(); ++k) {
    if (k > 0) s += ';';
    s += std::to_string(costs[k]);
  }
  return s;
}

int Bench(const SearchFlags& search, const BenchFlags& flags,
          std::ostream& out, std::ostream& err) {
  const std::vector<Algorithm> algorithms = Algorithms(search);
  for (Algorithm a : algorithms) ToConfig(search, a);  // validate early
  const BestKnownRegistry registry = LoadRegistry(flags.best_known, err);
  const auto suite = ReadSuite(flags.suite);

  std::ostringstream csv;
  csv << "problem,accuracy,time_s,algorithm,best_cost,best_known,reps,"
         "run_costs\n";
  for (const auto& path : suite) {
    const Instance inst = LoadInstance(path);
    const auto best_known = registry.Find(inst.name());
    for (Algorithm algorithm : algorithms) {
      RunReport report;
      report.instance_name = inst.name();
      report.algorithm = std::string(AlgorithmName(algorithm));
      report.best_known = best_known;
      for (int rep = 0; rep < flags.reps; ++rep) {
        SearchConfig cfg = ToConfig(search, algorithm);
        cfg.master_seed = search.seed + static_cast<std::uint64_t>(rep);
        const MultiStartResult result = RunMultiStart(inst, cfg);
        report.run_costs.push_back(result.best.cost);
        report.wall_times_s.push_back(result.wall_time_s);
        if (rep == 0) report.config_digest = result.config_digest;
      }
      Summarize(report);
      double mean_time = 0;
      for (double t : report.wall_times_s) mean_time += t;
      mean_time /= static_cast<double>(report.wall_times_s.size());

      csv << report.instance_name << ','
          << (report.accuracy ? report.accuracy->ToString() : "no-best-known")
          << ',' << (flags.no_time ? "-" : FormatSeconds(mean_time)) << ','
          << report.algorithm << ',' << report.best_cost << ','
          << (best_known ? std::to_string(*best_known) : "") << ','
          << flags.reps << ',' << JoinCosts(report.run_costs) << '\n';
    }
  }
  Emit(csv.str(), flags.out, out);
  return kExitOk;
}

// --- sweep ----------------------------------------------------------------

struct SweepFlags {
  std::string instance;
  std::string axis;
  std::vector<std::int64_t> values;
  int reps = 8;
  std::string best_known;
  std::string out;
  std::string plan_out;
  bool no_time = false;
};

int Sweep(const SearchFlags& search, const SweepFlags& flags,
          std::ostream& out, std::ostream& err) {
  const Algorithm algorithm = Algorithms(search).front();
  const auto axis = ParseSweepAxis(flags.axis);
  if (!axis) throw UsageError("unknown axis '" + flags.axis + "'");
  SweepPlan plan;
  try {
    plan = MakeSweep(*axis, flags.values, ToConfig(search, algorithm),
                     flags.reps);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }

  std::optional<std::int64_t> best_known;
  const Instance inst = LoadInstance(flags.instance);
  if (!flags.best_known.empty()) {
    best_known = LoadRegistry(flags.best_known, err).Find(inst.name());
  }
  if (!flags.plan_out.empty()) {
    std::ostringstream plan_csv;
    WritePlanCsv(plan, plan_csv);
    Emit(plan_csv.str(), flags.plan_out, out);
  }

  std::ostringstream csv;
  csv << "axis_value,rep,accuracy,best_cost,wall_time\n";
  for (const SweepRun& run : ExpandSweep(plan)) {
    // The seeds axis keeps the minimum over `value` consecutive master seeds.
    const std::int64_t seeds = *axis == SweepAxis::kSeeds ? run.value : 1;
    std::int64_t best_cost = 0;
    double wall_time = 0;
    for (std::int64_t s = 0; s < seeds; ++s) {
      SearchConfig cfg = run.config;
      cfg.master_seed = run.master_seed + static_cast<std::uint64_t>(s);
      const MultiStartResult result = RunMultiStart(inst, cfg);
      best_cost = s == 0 ? result.best.cost
                         : std::min(best_cost, result.best.cost);
      wall_time += result.wall_time_s;
    }
    csv << run.value << ',' << run.repetition << ','
        << (best_known ? ComputeAccuracy(best_cost, *best_known).ToString()
                       : "no-best-known")
        << ',' << best_cost << ','
        << (flags.no_time ? "-" : FormatSeconds(wall_time)) << '\n';
  }
  Emit(csv.str(), flags.out, out);
  return kExitOk;
}

// --- verify ---------------------------------------------------------------

struct VerifyFlags {
  std::string instance;
  int random = 0;
  int n = 0;
  double threshold = -1;
};

int Verify(const SearchFlags& search, const VerifyFlags& flags,
           std::ostream& out) {
  const Algorithm algorithm = Algorithms(search).front();
  const SearchConfig base = ToConfig(search, algorithm);

  std::vector<Instance> instances;
  if (!flags.instance.empty()) {
    instances.push_back(LoadInstance(flags.instance));
  } else {
    if (flags.n > kExhaustiveMaxSize) {
      throw UsageError("--n " + std::to_string(flags.n) +
                       " exceeds the exhaustive oracle limit of " +
                       std::to_string(kExhaustiveMaxSize));
    }
    if (flags.n < 2) throw UsageError("--n must be at least 2");
    for (int k = 0; k < flags.random; ++k) {
      // Entries uniform in [0, 99].
      Rng rng = DeriveSeed(search.seed, static_cast<std::uint64_t>(k));
      instances.push_back(RandomInstance(
          "random-n" + std::to_string(flags.n) + "-" + std::to_string(k),
          flags.n, rng));
    }
  }
  for (const Instance& inst : instances) {
    if (inst.size() > kExhaustiveMaxSize) {
      throw UsageError("instance " + inst.name() + " has n = " +
                       std::to_string(inst.size()) +
                       "; the exhaustive oracle accepts n <= " +
                       std::to_string(kExhaustiveMaxSize));
    }
  }

  int matches = 0;
  out << "instance,optimum,found,match\n";
  for (std::size_t k = 0; k < instances.size(); ++k) {
    const Instance& inst = instances[k];
    SearchConfig cfg = base;
    cfg.master_seed = search.seed + k;
    const std::int64_t optimum = ExhaustiveSolve(inst).cost;
    const std::int64_t found = RunMultiStart(inst, cfg).best.cost;
    matches += found == optimum;
    out << inst.name() << ',' << optimum << ',' << found << ','
        << (found == optimum ? 1 : 0) << '\n';
  }
  const double threshold =
      flags.threshold >= 0 ? flags.threshold
                           : (algorithm == Algorithm::kTabu ? 0.9 : 0.8);
  const double rate =
      static_cast<double>(matches) / static_cast<double>(instances.size());
  out << "match rate " << matches << '/' << instances.size() << " = "
      << std::fixed << std::setprecision(4) << rate << " (threshold "
      << threshold << ")\n";
  return rate >= threshold ? kExitOk : kExitDataError;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Multi-start 2opt and tabu search for the quadratic "
               "assignment problem",
               "qapsearch"};
  app.require_subcommand(1);

  SearchFlags solve_search, bench_search, sweep_search, verify_search;

  SolveFlags solve;
  auto* solve_cmd = app.add_subcommand("solve", "Solve one instance");
  solve_cmd->add_option("--instance", solve.instance, "QAPLIB instance file")
      ->required();
  solve_cmd->add_option("--out", solve.out, "Write the solution file here");
  solve_cmd->add_option("--trail", solve.trail,
                        "Write the winning start's tabu audit trail (CSV)");
  AddSearchFlags(solve_cmd, solve_search, false, kFullStarts);

  BenchFlags bench;
  auto* bench_cmd =
      app.add_subcommand("bench", "Repeated runs over a suite with accuracy");
  bench_cmd->add_option("--suite", bench.suite,
                        "File listing instance paths, one per line")
      ->required();
  bench_cmd->add_option("--best-known", bench.best_known,
                        "CSV of name,best-known-cost")
      ->required();
  bench_cmd->add_option("--reps", bench.reps, "Repetitions per instance")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--out", bench.out, "Write the CSV here");
  bench_cmd->add_flag("--no-time", bench.no_time,
                      "Print '-' for wall time so output is byte-stable");
  AddSearchFlags(bench_cmd, bench_search, true, kFullStarts);

  SweepFlags sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Parameter sensitivity sweep");
  sweep_cmd->add_option("--instance", sweep.instance, "QAPLIB instance file")
      ->required();
  sweep_cmd->add_option("--axis", sweep.axis, "neighborhoods|instances|seeds")
      ->required();
  sweep_cmd->add_option("--values", sweep.values, "Comma-separated values")
      ->required()
      ->delimiter(',');
  sweep_cmd->add_option("--reps", sweep.reps, "Repetitions per value")
      ->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--best-known", sweep.best_known,
                        "CSV of name,best-known-cost");
  sweep_cmd->add_option("--out", sweep.out, "Write the CSV here");
  sweep_cmd->add_option("--plan-out", sweep.plan_out,
                        "Write the expanded sweep plan (CSV) here");
  sweep_cmd->add_flag("--no-time", sweep.no_time,
                      "Print '-' for wall time so output is byte-stable");
  AddSearchFlags(sweep_cmd, sweep_search, false, kDeskStarts);

  VerifyFlags verify;
  auto* verify_cmd = app.add_subcommand(
      "verify", "Compare against the exhaustive optimum (n <= 10)");
  auto* verify_instance = verify_cmd->add_option(
      "--instance", verify.instance, "QAPLIB instance file");
  auto* verify_random = verify_cmd->add_option(
      "--random", verify.random, "Number of random instances");
  verify_random->check(CLI::PositiveNumber);
  verify_cmd->add_option("--n", verify.n, "Size of random instances")
      ->needs(verify_random);
  verify_cmd->add_option("--threshold", verify.threshold,
                         "Required match rate (default 0.9 tabu, 0.8 2opt)")
      ->check(CLI::Range(0.0, 1.0));
  verify_instance->excludes(verify_random);
  AddSearchFlags(verify_cmd, verify_search, false, 128);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
    if (verify_cmd->parsed() && verify.instance.empty() && verify.random == 0) {
      throw CLI::ValidationError("verify needs --instance or --random/--n");
    }
    if (verify_cmd->parsed() && verify.random > 0 && verify.n == 0) {
      throw CLI::ValidationError("--random needs --n");
    }
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n";
    const CLI::App* failed = &app;
    for (const CLI::App* sub : app.get_subcommands()) failed = sub;
    err << failed->help();
    return kExitUsage;
  }

  try {
    if (solve_cmd->parsed()) return Solve(solve_search, solve, out);
    if (bench_cmd->parsed()) return Bench(bench_search, bench, out, err);
    if (sweep_cmd->parsed()) return Sweep(sweep_search, sweep, out, err);
    return Verify(verify_search, verify, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitDataError;
  }
}

}  // namespace qapsearch::cli
