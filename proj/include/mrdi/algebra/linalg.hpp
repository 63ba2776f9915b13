#pragma once

#include <cstddef>
#include <vector>

#include "mrdi/algebra/integers.hpp"
#include "mrdi/algebra/matrix.hpp"

namespace mrdi::algebra {

using RationalVector = std::vector<BigRational>;

// Dense rational matrix used by the row-reduction routines.
struct RationalMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<BigRational> data;

  RationalMatrix() = default;
  RationalMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

  BigRational& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const BigRational& operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;
};

// Entries of a matrix over ZZ or QQ. Throws ContextError for other rings.
RationalMatrix to_rational(const ExactMatrix& m);
ExactMatrix to_exact(const RationalMatrix& m);

// In-place Gauss-Jordan elimination. Returns the pivot columns, strictly
// increasing; the first pivots.size() rows are the nonzero rows.
std::vector<std::size_t> rref_in_place(RationalMatrix& m);

struct RrefResult {
  ExactMatrix rref;
  std::vector<std::size_t> pivots;
};

RrefResult rref_over_q(const ExactMatrix& m);

// Basis of {v : m v = 0}, one vector per free column in increasing column
// order. Each vector is primitive integral with a positive first nonzero
// entry.
std::vector<RationalVector> nullspace(const RationalMatrix& m);
std::vector<RationalVector> nullspace_over_q(const ExactMatrix& m);

// Rescales a nonzero vector to be primitive integral with a positive
// leading entry; the zero vector is returned unchanged.
RationalVector make_primitive(RationalVector v);

std::size_t rank(RationalMatrix m);

}  // namespace mrdi::algebra
