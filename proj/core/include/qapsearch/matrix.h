#ifndef QAPSEARCH_MATRIX_H_
#define QAPSEARCH_MATRIX_H_

#include <cstdint>
#include <span>
#include <vector>

namespace qapsearch {

// Dense n x n matrix of 64-bit integers, row-major.
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(int n, std::int64_t fill = 0)
      : n_(n), cells_(static_cast<std::size_t>(n) * n, fill) {}
  SquareMatrix(int n, std::vector<std::int64_t> cells);

  int size() const { return n_; }

  std::int64_t operator()(int row, int col) const {
    return cells_[static_cast<std::size_t>(row) * n_ + col];
  }
  std::int64_t& operator()(int row, int col) {
    return cells_[static_cast<std::size_t>(row) * n_ + col];
  }

  std::span<const std::int64_t> row(int r) const {
    return {cells_.data() + static_cast<std::size_t>(r) * n_,
            static_cast<std::size_t>(n_)};
  }
  std::span<const std::int64_t> cells() const { return cells_; }

  bool IsSymmetric() const;
  SquareMatrix Transposed() const;

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  int n_ = 0;
  std::vector<std::int64_t> cells_;
};

}  // namespace qapsearch

#endif  // QAPSEARCH_MATRIX_H_
