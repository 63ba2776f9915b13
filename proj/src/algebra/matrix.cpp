#include "mrdi/algebra/matrix.hpp"

#include "mrdi/error.hpp"

namespace mrdi::algebra {

ExactMatrix::ExactMatrix(Context ring, std::size_t rows, std::size_t cols)
    : ring_(ring), rows_(rows), cols_(cols), entries_(rows * cols, RingElem::zero(ring)) {}

ExactMatrix::ExactMatrix(Context ring, std::size_t rows, std::size_t cols,
                         std::vector<RingElem> entries)
    : ring_(ring), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) {
    throw ValidationError("matrix has " + std::to_string(entries_.size()) + " entries, expected " +
                          std::to_string(rows) + "x" + std::to_string(cols));
  }
  for (const auto& e : entries_) {
    if (!(e.parent() == ring_)) {
      throw ContextError("matrix entry in " + e.parent().to_string() + " but matrix is over " +
                         ring_.to_string());
    }
  }
}

ExactMatrix ExactMatrix::identity(Context ring, std::size_t n) {
  ExactMatrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m.entries_[i * n + i] = RingElem::one(ring);
  return m;
}

void ExactMatrix::set(std::size_t r, std::size_t c, RingElem value) {
  if (!(value.parent() == ring_)) {
    throw ContextError("matrix entry in " + value.parent().to_string() + " but matrix is over " +
                       ring_.to_string());
  }
  entries_.at(r * cols_ + c) = std::move(value);
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(ring_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t.entries_[c * rows_ + r] = (*this)(r, c);
  }
  return t;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (!(a.ring() == b.ring())) throw ContextError("matrix rings differ");
  if (a.cols() != b.rows()) throw ValidationError("matrix dimensions do not match");
  ExactMatrix out(a.ring(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      RingElem acc = RingElem::zero(a.ring());
      for (std::size_t k = 0; k < a.cols(); ++k) acc += a(i, k) * b(k, j);
      out.set(i, j, std::move(acc));
    }
  }
  return out;
}

}  // namespace mrdi::algebra
