#include "qapsearch/tuner.h"

#include <ostream>
#include <sstream>
#include <string>

#include "qapsearch/error.h"

namespace qapsearch {

ConfigCheck ValidateThreadConfig(const ThreadConfig& c,
                                 const LaunchBounds& bounds) {
  ConfigCheck check;
  auto fail = [&](std::string message) {
    check.valid = false;
    check.violations.push_back(std::move(message));
  };
  const std::string n = std::to_string(c.n_starts);
  const std::string t = std::to_string(c.threads_per_block);
  const std::string warp = std::to_string(bounds.warp);

  if (c.n_starts % bounds.warp != 0) {
    fail("N mod " + warp + " != 0 (N = " + n + ")");
  }
  if (c.threads_per_block % bounds.warp != 0) {
    fail("t mod " + warp + " != 0 (t = " + t + ")");
  }
  if (c.threads_per_block < bounds.min_threads_per_block ||
      c.threads_per_block > bounds.max_threads_per_block) {
    fail("t outside [" + std::to_string(bounds.min_threads_per_block) + ", " +
         std::to_string(bounds.max_threads_per_block) + "] (t = " + t + ")");
  }
  if (c.n_starts < bounds.min_starts || c.n_starts > bounds.max_starts) {
    fail("N outside [" + std::to_string(bounds.min_starts) + ", " +
         std::to_string(bounds.max_starts) + "] (N = " + n + ")");
  }
  if (c.threads_per_block > 0) {
    if (c.n_starts % c.threads_per_block != 0) {
      fail("N mod t != 0 (N = " + n + ", t = " + t + ")");
    } else if (c.blocks != c.n_starts / c.threads_per_block) {
      fail("b != N / t (b = " + std::to_string(c.blocks) + ", N / t = " +
           std::to_string(c.n_starts / c.threads_per_block) + ")");
    }
  }
  return check;
}

std::vector<ThreadConfig> EnumerateConfigs(
    std::optional<std::int64_t> n_starts_filter, const LaunchBounds& bounds) {
  auto round_up = [&](std::int64_t v) {
    return (v + bounds.warp - 1) / bounds.warp * bounds.warp;
  };
  std::vector<ThreadConfig> configs;
  for (std::int64_t n = round_up(bounds.min_starts); n <= bounds.max_starts;
       n += bounds.warp) {
    if (n_starts_filter && *n_starts_filter != n) continue;
    for (std::int64_t t = round_up(bounds.min_threads_per_block);
         t <= bounds.max_threads_per_block; t += bounds.warp) {
      if (n % t == 0) configs.push_back({n, t, n / t});
    }
  }
  return configs;
}

std::string_view SweepAxisName(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::kNeighborhoods:
      return "neighborhoods";
    case SweepAxis::kInstances:
      return "instances";
    case SweepAxis::kSeeds:
      return "seeds";
  }
  return "unknown";
}

std::optional<SweepAxis> ParseSweepAxis(std::string_view text) {
  if (text == "neighborhoods") return SweepAxis::kNeighborhoods;
  if (text == "instances") return SweepAxis::kInstances;
  if (text == "seeds") return SweepAxis::kSeeds;
  return std::nullopt;
}

SweepPlan MakeSweep(SweepAxis axis, std::vector<std::int64_t> values,
                    const SearchConfig& base, int repetitions) {
  const std::string name(SweepAxisName(axis));
  if (values.empty()) throw DomainError(name + " sweep has no values");
  if (repetitions < 1) {
    throw DomainError("sweep repetitions must be at least 1");
  }
  for (std::size_t k = 0; k < values.size(); ++k) {
    const std::int64_t v = values[k];
    if (v < 1) {
      throw DomainError(name + " sweep value " + std::to_string(v) +
                        " is not positive");
    }
    if (k > 0 && v <= values[k - 1]) {
      throw DomainError(name + " sweep values must be strictly increasing");
    }
    if (axis == SweepAxis::kInstances &&
        ((v & (v - 1)) != 0 || v > kMaxSweepInstances)) {
      throw DomainError("instances sweep value " + std::to_string(v) +
                        " must be a power of two no larger than " +
                        std::to_string(kMaxSweepInstances));
    }
  }
  return SweepPlan{axis, std::move(values), base, repetitions};
}

std::vector<SweepRun> ExpandSweep(const SweepPlan& plan) {
  std::vector<SweepRun> runs;
  runs.reserve(plan.values.size() * plan.repetitions);
  for (std::int64_t value : plan.values) {
    const std::uint64_t seeds_per_run =
        plan.axis == SweepAxis::kSeeds ? static_cast<std::uint64_t>(value) : 1;
    for (int rep = 0; rep < plan.repetitions; ++rep) {
      SweepRun run;
      run.value = value;
      run.repetition = rep;
      run.master_seed = plan.base.master_seed +
                        static_cast<std::uint64_t>(rep) * seeds_per_run;
      run.config = plan.base;
      run.config.master_seed = run.master_seed;
      if (plan.axis == SweepAxis::kNeighborhoods) run.config.iterations = value;
      if (plan.axis == SweepAxis::kInstances) run.config.n_starts = value;
      runs.push_back(std::move(run));
    }
  }
  return runs;
}

void WritePlanCsv(const SweepPlan& plan, std::ostream& out) {
  std::ostringstream text;
  text << "axis,value,master_seed,repetition\n";
  for (const SweepRun& run : ExpandSweep(plan)) {
    text << SweepAxisName(plan.axis) << ',' << run.value << ','
         << run.master_seed << ',' << run.repetition << '\n';
  }
  out << text.str();
}

}  // namespace qapsearch
