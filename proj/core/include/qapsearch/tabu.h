#ifndef QAPSEARCH_TABU_H_
#define QAPSEARCH_TABU_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "qapsearch/instance.h"
#include "qapsearch/instance_io.h"
#include "qapsearch/matrix.h"
#include "qapsearch/neighborhood.h"
#include "qapsearch/permutation.h"
#include "qapsearch/rng.h"

namespace qapsearch {

// Closed range [low, high] of tabu tenures, 1 <= low <= high.
class TenureInterval {
 public:
  // Throws DomainError on an empty or non-positive range.
  TenureInterval(int low, int high);

  // "LO:HI", e.g. "3:10".
  static TenureInterval Parse(std::string_view text);

  int low() const { return low_; }
  int high() const { return high_; }

  friend bool operator==(const TenureInterval&,
                         const TenureInterval&) = default;

 private:
  int low_;
  int high_;
};

// [max(1, floor(0.1n)), max(low, ceil(0.33n))], computed in integers.
TenureInterval TenureBounds(int n);

// Uniform tenure in [low, high]; advances rng.
int SampleTenure(const TenureInterval& interval, Rng& rng);

// Read-only window on the recency half of a TabuMatrix. Move selection only
// ever sees this view, never the frequency counts.
class RecencyView {
 public:
  explicit RecencyView(const SquareMatrix& cells) : cells_(&cells) {}

  // Iteration at which move (i, j), i < j, stops being tabu.
  std::int64_t expiry(const Move& m) const { return (*cells_)(m.i, m.j); }

 private:
  const SquareMatrix* cells_;
};

// n x n memory. Upper triangle (i < j): expiry iteration of move (i, j).
// Lower triangle (i > j): how many times (j, i) has been exchanged. The
// diagonal stays zero.
class TabuMatrix {
 public:
  explicit TabuMatrix(int n) : cells_(n) {}

  int size() const { return cells_.size(); }
  std::int64_t expiry(const Move& m) const { return cells_(m.i, m.j); }
  std::int64_t frequency(const Move& m) const { return cells_(m.j, m.i); }
  const SquareMatrix& cells() const { return cells_; }
  RecencyView recency() const { return RecencyView(cells_); }

  // Marks m tabu until `expires_at` and counts one more use of m.
  void Record(const Move& m, std::int64_t expires_at) {
    cells_(m.i, m.j) = expires_at;
    ++cells_(m.j, m.i);
  }

 private:
  SquareMatrix cells_;
};

// A move is admissible when it is not tabu (expiry <= iteration) or when it
// would produce a solution strictly cheaper than the best so far.
bool IsAdmissible(RecencyView recency, const Move& m,
                  std::int64_t candidate_cost, std::int64_t best_cost,
                  std::int64_t iteration);
bool IsAdmissible(const TabuMatrix& tabu, const Move& m,
                  std::int64_t candidate_cost, std::int64_t best_cost,
                  std::int64_t iteration);

// Picks the admissible move of smallest (delta, move) order, the same move
// a scan of candidates sorted by ascending delta would accept first.
// nullopt when every move is tabu and none aspirates.
std::optional<std::size_t> SelectAdmissibleMove(
    std::span<const Move> moves, std::span<const std::int64_t> deltas,
    RecencyView recency, std::int64_t current_cost, std::int64_t best_cost,
    std::int64_t iteration);

struct TabuState {
  Permutation current;
  std::int64_t current_cost = 0;
  Permutation best;
  std::int64_t best_cost = 0;
  std::int64_t iteration = 1;
  TabuMatrix tabu{0};
  TenureInterval tenure{1, 1};
  bool stopped_early = false;

  static TabuState Start(const Instance& inst, Permutation initial,
                         TenureInterval tenure);
};

// One audit trail row per accepted move.
struct TrailEntry {
  std::int64_t iteration = 0;
  Move move;
  std::int64_t delta = 0;
  bool tabu = false;       // move was tabu when selected
  bool aspirated = false;  // tabu status overridden by aspiration
  int tenure = 0;          // t drawn for this move

  friend bool operator==(const TrailEntry&, const TrailEntry&) = default;
};

// One tabu iteration. Returns the accepted move, or nullopt after setting
// state.stopped_early when no move is admissible (state is otherwise
// untouched). Tenure is drawn from rng only after a move is accepted.
std::optional<TrailEntry> TabuStep(const Instance& inst, TabuState& state,
                                   Rng& rng, Neighborhood& scratch,
                                   bool parallel = false);

// Default iteration budget: 8n.
constexpr std::int64_t DefaultTabuIterations(int n) { return 8LL * n; }

struct TabuOptions {
  std::int64_t iterations = 0;  // <= 0 selects DefaultTabuIterations(n)
  std::optional<TenureInterval> tenure;  // default TenureBounds(n)
  bool record_trail = true;
  bool parallel_neighborhood = false;
};

struct TabuRun {
  SolutionRecord record;
  Permutation initial;
  std::int64_t initial_cost = 0;
  TenureInterval tenure{1, 1};
  std::vector<TrailEntry> trail;
  TabuMatrix memory{0};
  bool stopped_early = false;
  std::int64_t iterations_run = 0;
};

// Random start drawn from rng, then TabuStep until the budget is spent or
// the search stops prematurely.
TabuRun RunTabu(const Instance& inst, Rng rng, const TabuOptions& options);

// CSV with header "iter,i,j,delta,tabu_flag,aspirated_flag,tenure_drawn";
// locations are 1-based, flags 0/1.
void WriteTrailCsv(std::span<const TrailEntry> trail, std::ostream& out);

}  // namespace qapsearch

#endif  // QAPSEARCH_TABU_H_
