#include "qapsearch/permutation.h"

#include <numeric>
#include <string>
#include <utility>

#include "qapsearch/error.h"
#include "qapsearch/rng.h"

namespace qapsearch {

Permutation::Permutation(std::vector<int> units) : units_(std::move(units)) {
  std::vector<bool> seen(units_.size(), false);
  for (int u : units_) {
    if (u < 0 || u >= size() || seen[u]) {
      throw DomainError("not a permutation: unit " + std::to_string(u + 1) +
                        " out of range or repeated");
    }
    seen[u] = true;
  }
}

Permutation Permutation::Identity(int n) {
  std::vector<int> units(n);
  std::iota(units.begin(), units.end(), 0);
  return Permutation(std::move(units));
}

Permutation Permutation::FromOneBased(std::span<const int> units) {
  std::vector<int> zero_based(units.begin(), units.end());
  for (int& u : zero_based) --u;
  return Permutation(std::move(zero_based));
}

std::string Permutation::ToString() const {
  std::string out;
  for (std::size_t k = 0; k < units_.size(); ++k) {
    if (k > 0) out += ' ';
    out += std::to_string(units_[k] + 1);
  }
  return out;
}

void CheckMove(const Move& m, int n) {
  if (m.i == m.j) {
    throw DomainError("move exchanges location " + std::to_string(m.i + 1) +
                      " with itself");
  }
  if (m.i < 0 || m.i > m.j || m.j >= n) {
    throw DomainError("move (" + std::to_string(m.i + 1) + "," +
                      std::to_string(m.j + 1) +
                      ") is not canonical for size " + std::to_string(n));
  }
}

Permutation ApplyMove(Permutation p, const Move& m) {
  CheckMove(m, p.size());
  p.Swap(m.i, m.j);
  return p;
}

std::vector<Move> EnumerateMoves(int n) {
  if (n < 2) {
    throw DomainError("neighborhood needs n >= 2, got " + std::to_string(n));
  }
  std::vector<Move> moves;
  moves.reserve(NeighborhoodSize(n));
  for (int i = 0; i < n - 1; ++i) {
    for (int j = i + 1; j < n; ++j) moves.push_back({i, j});
  }
  return moves;
}

Permutation RandomPermutation(int n, Rng& rng) {
  if (n < 2) {
    throw DomainError("permutation size must be at least 2, got " +
                      std::to_string(n));
  }
  std::vector<int> units(n);
  std::iota(units.begin(), units.end(), 0);
  for (int k = n - 1; k > 0; --k) {
    const auto pick = static_cast<int>(UniformBelow(rng, k + 1));
    std::swap(units[k], units[pick]);
  }
  return Permutation(std::move(units));
}

}  // namespace qapsearch
