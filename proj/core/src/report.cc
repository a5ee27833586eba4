#include "qapsearch/report.h"

#include <algorithm>
#include <numeric>
#include <string>

#include "qapsearch/error.h"

namespace qapsearch {

namespace {
__extension__ using Wide = __int128;
}  // namespace

std::string Accuracy::ToString(int decimals) const {
  Wide scale = 1;
  for (int k = 0; k < decimals; ++k) scale *= 10;
  const bool negative = (numerator < 0) != (denominator < 0) && numerator != 0;
  const Wide num = numerator < 0 ? -static_cast<Wide>(numerator) : numerator;
  const Wide den =
      denominator < 0 ? -static_cast<Wide>(denominator) : denominator;
  Wide scaled = num * scale / den;
  if (2 * (num * scale % den) >= den) ++scaled;

  const auto whole = static_cast<long long>(scaled / scale);
  std::string fraction = std::to_string(static_cast<long long>(scaled % scale));
  fraction.insert(0, decimals - fraction.size(), '0');
  std::string out = (negative && scaled != 0 ? "-" : "") + std::to_string(whole);
  if (decimals > 0) out += "." + fraction;
  return out;
}

Accuracy ComputeAccuracy(std::int64_t best_cost, std::int64_t best_known) {
  if (best_known <= 0) {
    throw DomainError("best-known cost must be positive, got " +
                      std::to_string(best_known));
  }
  std::int64_t numerator = best_cost - best_known;
  std::int64_t denominator = best_known;
  const std::int64_t g = std::gcd(numerator, denominator);
  if (g > 1) {
    numerator /= g;
    denominator /= g;
  }
  return {numerator, denominator};
}

void Summarize(RunReport& report) {
  if (report.run_costs.empty()) {
    throw DomainError("report for '" + report.instance_name +
                      "' has no runs");
  }
  report.best_cost =
      *std::min_element(report.run_costs.begin(), report.run_costs.end());
  report.accuracy.reset();
  if (report.best_known) {
    report.accuracy = ComputeAccuracy(report.best_cost, *report.best_known);
  }
}

}  // namespace qapsearch
