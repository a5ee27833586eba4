#ifndef QAPSEARCH_PERMUTATION_H_
#define QAPSEARCH_PERMUTATION_H_

#include <compare>
#include <span>
#include <string>
#include <vector>

namespace qapsearch {

class Rng;

// Assignment of units to locations: unit_at(i) is the unit stored at
// location i. Stored 0-based; rendered 1-based by ToString().
class Permutation {
 public:
  Permutation() = default;
  // Throws DomainError unless `units` is a bijection on [0, units.size()).
  explicit Permutation(std::vector<int> units);

  static Permutation Identity(int n);
  // Builds from 1-based unit numbers as they appear in files.
  static Permutation FromOneBased(std::span<const int> units);

  int size() const { return static_cast<int>(units_.size()); }
  int unit_at(int location) const { return units_[location]; }
  std::span<const int> units() const { return units_; }

  // Exchanges the units at two locations; nothing else moves.
  void Swap(int a, int b) { std::swap(units_[a], units_[b]); }

  // "2 1 3" for the 0-based {1, 0, 2}.
  std::string ToString() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> units_;
};

// Pairwise exchange of the contents of locations i and j, with i < j
// (0-based). A move is an unordered pair, so only the canonical order
// exists.
struct Move {
  int i = 0;
  int j = 1;

  friend bool operator==(const Move&, const Move&) = default;
  friend auto operator<=>(const Move&, const Move&) = default;
};

// Throws DomainError unless 0 <= i < j < n.
void CheckMove(const Move& m, int n);

Permutation ApplyMove(Permutation p, const Move& m);

// Number of canonical moves for problem size n: n(n-1)/2.
constexpr std::size_t NeighborhoodSize(int n) {
  return static_cast<std::size_t>(n) * (n - 1) / 2;
}

// All canonical moves in lexicographic order (0,1), (0,2), ..., (n-2,n-1).
std::vector<Move> EnumerateMoves(int n);

// Uniform random permutation by Fisher-Yates; advances rng.
Permutation RandomPermutation(int n, Rng& rng);

}  // namespace qapsearch

#endif  // QAPSEARCH_PERMUTATION_H_
