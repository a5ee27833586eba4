#include "qapsearch/instance.h"

#include <string>
#include <utility>

#include "qapsearch/error.h"
#include "qapsearch/rng.h"

namespace qapsearch {

SquareMatrix::SquareMatrix(int n, std::vector<std::int64_t> cells)
    : n_(n), cells_(std::move(cells)) {
  if (n < 0 || cells_.size() != static_cast<std::size_t>(n) * n) {
    throw DomainError("matrix of size " + std::to_string(n) + " needs " +
                      std::to_string(static_cast<std::size_t>(n) * n) +
                      " cells, got " + std::to_string(cells_.size()));
  }
}

bool SquareMatrix::IsSymmetric() const {
  for (int r = 0; r < n_; ++r) {
    for (int c = r + 1; c < n_; ++c) {
      if ((*this)(r, c) != (*this)(c, r)) return false;
    }
  }
  return true;
}

SquareMatrix SquareMatrix::Transposed() const {
  SquareMatrix t(n_);
  for (int r = 0; r < n_; ++r) {
    for (int c = 0; c < n_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

namespace {

void CheckNonNegative(const SquareMatrix& m, const char* role) {
  for (std::int64_t v : m.cells()) {
    if (v < 0) {
      throw DomainError(std::string(role) + " matrix has negative entry " +
                        std::to_string(v));
    }
  }
}

}  // namespace

Instance::Instance(std::string name, SquareMatrix flow, SquareMatrix distance)
    : name_(std::move(name)),
      flow_(std::move(flow)),
      distance_(std::move(distance)),
      flow_columns_(flow_.Transposed()),
      distance_columns_(distance_.Transposed()) {
  if (flow_.size() < 2) {
    throw DomainError("instance size must be at least 2, got " +
                      std::to_string(flow_.size()));
  }
  if (distance_.size() != flow_.size()) {
    throw DomainError("flow is " + std::to_string(flow_.size()) +
                      "x" + std::to_string(flow_.size()) + " but distance is " +
                      std::to_string(distance_.size()) + "x" +
                      std::to_string(distance_.size()));
  }
  CheckNonNegative(flow_, "flow");
  CheckNonNegative(distance_, "distance");
}

Instance RandomInstance(std::string name, int n, Rng& rng,
                        std::int64_t max_entry) {
  if (n < 2) throw DomainError("instance size must be at least 2");
  const auto cells = static_cast<std::size_t>(n) * n;
  std::vector<std::int64_t> flow(cells);
  std::vector<std::int64_t> distance(cells);
  for (auto& v : flow) v = UniformInt(rng, 0, max_entry);
  for (auto& v : distance) v = UniformInt(rng, 0, max_entry);
  return Instance(std::move(name), SquareMatrix(n, std::move(flow)),
                  SquareMatrix(n, std::move(distance)));
}

}  // namespace qapsearch
