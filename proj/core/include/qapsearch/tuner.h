#ifndef QAPSEARCH_TUNER_H_
#define QAPSEARCH_TUNER_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qapsearch/multistart.h"

namespace qapsearch {

// Launch geometry of the GPU formulation: n_starts searches split into
// `blocks` blocks of threads_per_block threads. On CPU it only
// parameterizes sweeps.
struct ThreadConfig {
  std::int64_t n_starts = 0;
  std::int64_t threads_per_block = 0;
  std::int64_t blocks = 0;

  friend bool operator==(const ThreadConfig&, const ThreadConfig&) = default;
  friend auto operator<=>(const ThreadConfig&, const ThreadConfig&) = default;
};

// Limits of the launch space. Defaults: warp 32, at most 1024 threads per
// block, 1024 <= N <= 12288.
struct LaunchBounds {
  std::int64_t warp = 32;
  std::int64_t min_threads_per_block = 32;
  std::int64_t max_threads_per_block = 1024;
  std::int64_t min_starts = 1024;
  std::int64_t max_starts = 12288;
};

struct ConfigCheck {
  bool valid = true;
  std::vector<std::string> violations;
};

ConfigCheck ValidateThreadConfig(const ThreadConfig& c,
                                 const LaunchBounds& bounds = {});

// Every valid (N, t, b) ordered by (N, t). With a filter, only that N.
std::vector<ThreadConfig> EnumerateConfigs(
    std::optional<std::int64_t> n_starts_filter = std::nullopt,
    const LaunchBounds& bounds = {});

enum class SweepAxis { kNeighborhoods, kInstances, kSeeds };

std::string_view SweepAxisName(SweepAxis axis);
std::optional<SweepAxis> ParseSweepAxis(std::string_view text);

// Largest start count allowed on the instances axis.
inline constexpr std::int64_t kMaxSweepInstances = 1024;

struct SweepPlan {
  SweepAxis axis = SweepAxis::kNeighborhoods;
  std::vector<std::int64_t> values;
  SearchConfig base;
  int repetitions = 8;
};

// One expanded run of a plan. For the seeds axis the run takes the minimum
// over `value` consecutive master seeds starting at master_seed.
struct SweepRun {
  std::int64_t value = 0;
  int repetition = 0;
  std::uint64_t master_seed = 0;
  SearchConfig config;
};

// Throws DomainError for empty or non-increasing values, non-positive
// values, repetitions < 1, or (instances axis) values that are not powers of
// two or exceed kMaxSweepInstances.
SweepPlan MakeSweep(SweepAxis axis, std::vector<std::int64_t> values,
                    const SearchConfig& base, int repetitions = 8);

// values.size() * repetitions runs, value-major. Repetition r of a value
// starts at master seed base + r * k, where k is the value on the seeds axis
// and 1 otherwise.
std::vector<SweepRun> ExpandSweep(const SweepPlan& plan);

// CSV "axis,value,master_seed,repetition", one row per expanded run.
void WritePlanCsv(const SweepPlan& plan, std::ostream& out);

}  // namespace qapsearch

#endif  // QAPSEARCH_TUNER_H_
