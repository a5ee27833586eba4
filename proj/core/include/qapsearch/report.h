#ifndef QAPSEARCH_REPORT_H_
#define QAPSEARCH_REPORT_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qapsearch {

// Relative gap (found - best_known) / best_known held as an exact fraction.
struct Accuracy {
  std::int64_t numerator = 0;
  std::int64_t denominator = 1;

  double value() const {
    return static_cast<double>(numerator) / static_cast<double>(denominator);
  }
  // Decimal rendering, rounded half away from zero, e.g. "0.01000000".
  std::string ToString(int decimals = 8) const;

  friend bool operator==(const Accuracy&, const Accuracy&) = default;
};

// Throws DomainError for best_known <= 0.
Accuracy ComputeAccuracy(std::int64_t best_cost, std::int64_t best_known);

// Summary of R repeated multi-start runs on one instance. The gap always
// uses the minimum of the per-run costs.
struct RunReport {
  std::string instance_name;
  std::string algorithm;
  std::vector<std::int64_t> run_costs;
  std::vector<double> wall_times_s;
  std::int64_t best_cost = 0;
  std::optional<std::int64_t> best_known;
  std::optional<Accuracy> accuracy;
  std::string config_digest;
};

// Fills best_cost and accuracy from run_costs and best_known. Throws
// DomainError for an empty run list.
void Summarize(RunReport& report);

}  // namespace qapsearch

#endif  // QAPSEARCH_REPORT_H_
