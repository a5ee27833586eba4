#include "qapsearch/cost.h"

#include <algorithm>
#include <numeric>
#include <string>

#include "qapsearch/error.h"

namespace qapsearch {

namespace {

void CheckSize(const Instance& inst, const Permutation& p) {
  if (p.size() != inst.size()) {
    throw DomainError("permutation of size " + std::to_string(p.size()) +
                      " for instance of size " + std::to_string(inst.size()));
  }
}

std::int64_t CostOf(const Instance& inst, std::span<const int> units) {
  const SquareMatrix& flow = inst.flow();
  const SquareMatrix& dist = inst.distance();
  const int n = inst.size();
  std::int64_t total = 0;
  for (int i = 0; i < n; ++i) {
    const auto flow_row = flow.row(units[i]);
    const auto dist_row = dist.row(i);
    for (int j = 0; j < n; ++j) total += flow_row[units[j]] * dist_row[j];
  }
  return total;
}

}  // namespace

std::int64_t FullCost(const Instance& inst, const Permutation& p) {
  CheckSize(inst, p);
  return CostOf(inst, p.units());
}

std::int64_t DeltaCostUnchecked(const Instance& inst,
                                std::span<const int> units, int i, int j) {
  const SquareMatrix& f = inst.flow();
  const SquareMatrix& d = inst.distance();
  const int n = inst.size();
  const int pi = units[i];
  const int pj = units[j];

  std::int64_t delta = (d(i, i) - d(j, j)) * (f(pj, pj) - f(pi, pi)) +
                       (d(j, i) - d(i, j)) * (f(pi, pj) - f(pj, pi));

  const auto d_row_i = d.row(i);
  const auto d_row_j = d.row(j);
  const auto d_col_i = inst.distance_columns().row(i);
  const auto d_col_j = inst.distance_columns().row(j);
  const auto f_row_i = f.row(pi);
  const auto f_row_j = f.row(pj);
  const auto f_col_i = inst.flow_columns().row(pi);
  const auto f_col_j = inst.flow_columns().row(pj);
  for (int k = 0; k < n; ++k) {
    if (k == i || k == j) continue;
    const int pk = units[k];
    delta += (d_row_j[k] - d_row_i[k]) * (f_row_i[pk] - f_row_j[pk]) +
             (d_col_j[k] - d_col_i[k]) * (f_col_i[pk] - f_col_j[pk]);
  }
  return delta;
}

std::int64_t DeltaCost(const Instance& inst, const Permutation& p,
                       const Move& m) {
  CheckSize(inst, p);
  CheckMove(m, p.size());
  return DeltaCostUnchecked(inst, p.units(), m.i, m.j);
}

ExhaustiveResult ExhaustiveSolve(const Instance& inst) {
  const int n = inst.size();
  if (n > kExhaustiveMaxSize) {
    throw DomainError("exhaustive search refused for n = " +
                      std::to_string(n) + " (limit " +
                      std::to_string(kExhaustiveMaxSize) + ")");
  }
  std::vector<int> units(n);
  std::iota(units.begin(), units.end(), 0);
  std::vector<int> best_units = units;
  std::int64_t best_cost = CostOf(inst, units);
  while (std::next_permutation(units.begin(), units.end())) {
    const std::int64_t cost = CostOf(inst, units);
    // Strict comparison keeps the lexicographically first minimizer.
    if (cost < best_cost) {
      best_cost = cost;
      best_units = units;
    }
  }
  return {Permutation(std::move(best_units)), best_cost};
}

}  // namespace qapsearch
