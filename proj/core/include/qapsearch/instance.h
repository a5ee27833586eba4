#ifndef QAPSEARCH_INSTANCE_H_
#define QAPSEARCH_INSTANCE_H_

#include <string>

#include "qapsearch/matrix.h"

namespace qapsearch {

class Rng;

// A QAP instance: n units with pairwise flows, n locations with pairwise
// distances. Immutable once built; share freely across searches.
class Instance {
 public:
  // Throws DomainError unless n >= 2 and both matrices are n x n with
  // non-negative entries.
  Instance(std::string name, SquareMatrix flow, SquareMatrix distance);

  const std::string& name() const { return name_; }
  int size() const { return flow_.size(); }
  const SquareMatrix& flow() const { return flow_; }
  const SquareMatrix& distance() const { return distance_; }
  // Transposed copies, so column c is the contiguous row c.
  const SquareMatrix& flow_columns() const { return flow_columns_; }
  const SquareMatrix& distance_columns() const { return distance_columns_; }

 private:
  std::string name_;
  SquareMatrix flow_;
  SquareMatrix distance_;
  SquareMatrix flow_columns_;
  SquareMatrix distance_columns_;
};

// Instance with every flow and distance entry (diagonal included) drawn
// uniformly from [0, max_entry].
Instance RandomInstance(std::string name, int n, Rng& rng,
                        std::int64_t max_entry = 99);

}  // namespace qapsearch

#endif  // QAPSEARCH_INSTANCE_H_
