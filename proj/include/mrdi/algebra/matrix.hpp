#pragma once

#include <cstddef>
#include <vector>

#include "mrdi/algebra/ring_elem.hpp"

namespace mrdi::algebra {

// Dense row-major matrix whose entries all live in one interned ring.
class ExactMatrix {
 public:
  // 0x0 matrix over ZZ.
  ExactMatrix() = default;
  // Zero matrix.
  ExactMatrix(Context ring, std::size_t rows, std::size_t cols);
  // Throws ValidationError on a size mismatch and ContextError when an entry
  // lives outside `ring`.
  ExactMatrix(Context ring, std::size_t rows, std::size_t cols, std::vector<RingElem> entries);

  static ExactMatrix identity(Context ring, std::size_t n);

  Context ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const RingElem& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  const std::vector<RingElem>& entries() const { return entries_; }

  void set(std::size_t r, std::size_t c, RingElem value);

  ExactMatrix transpose() const;

  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

 private:
  Context ring_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<RingElem> entries_;
};

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);

}  // namespace mrdi::algebra
