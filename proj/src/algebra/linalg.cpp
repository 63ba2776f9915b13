#include "mrdi/algebra/linalg.hpp"

#include "mrdi/error.hpp"

namespace mrdi::algebra {

RationalMatrix to_rational(const ExactMatrix& m) {
  RationalMatrix out(m.rows(), m.cols());
  const RingKind kind = m.ring().kind();
  if (kind != RingKind::Integers && kind != RingKind::Rationals) {
    throw ContextError("expected a matrix over ZZ or QQ, got " + m.ring().to_string());
  }
  for (std::size_t i = 0; i < m.entries().size(); ++i) {
    const RingElem& e = m.entries()[i];
    out.data[i] = kind == RingKind::Integers ? BigRational(e.as_integer()) : e.as_rational();
  }
  return out;
}

ExactMatrix to_exact(const RationalMatrix& m) {
  std::vector<RingElem> entries;
  entries.reserve(m.data.size());
  for (const auto& q : m.data) entries.push_back(RingElem::rational(q));
  return ExactMatrix(rationals(), m.rows, m.cols, std::move(entries));
}

std::vector<std::size_t> rref_in_place(RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows && sgn(m(pivot, col)) == 0) ++pivot;
    if (pivot == m.rows) continue;
    if (pivot != row) {
      for (std::size_t c = col; c < m.cols; ++c) std::swap(m(pivot, c), m(row, c));
    }
    const BigRational inv = 1 / m(row, col);
    for (std::size_t c = col; c < m.cols; ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows; ++r) {
      if (r == row || sgn(m(r, col)) == 0) continue;
      const BigRational f = m(r, col);
      for (std::size_t c = col; c < m.cols; ++c) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

RrefResult rref_over_q(const ExactMatrix& m) {
  RationalMatrix q = to_rational(m);
  auto pivots = rref_in_place(q);
  return RrefResult{to_exact(q), std::move(pivots)};
}

RationalVector make_primitive(RationalVector v) {
  BigInt den_lcm = 1;
  for (const auto& x : v) {
    if (sgn(x) != 0) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den().get_mpz_t());
  }
  BigInt content = 0;
  int lead_sign = 0;
  for (const auto& x : v) {
    if (sgn(x) == 0) continue;
    BigInt scaled = x.get_num() * (den_lcm / x.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), scaled.get_mpz_t());
    if (lead_sign == 0) lead_sign = sgn(scaled);
  }
  if (lead_sign == 0) return v;
  BigRational factor(den_lcm, content);
  factor.canonicalize();
  if (lead_sign < 0) factor = -factor;
  for (auto& x : v) x *= factor;
  return v;
}

std::vector<RationalVector> nullspace(const RationalMatrix& m) {
  RationalMatrix r = m;
  auto pivots = rref_in_place(r);
  std::vector<bool> is_pivot(m.cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(m.cols);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, free);
    basis.push_back(make_primitive(std::move(v)));
  }
  return basis;
}

std::vector<RationalVector> nullspace_over_q(const ExactMatrix& m) {
  return nullspace(to_rational(m));
}

std::size_t rank(RationalMatrix m) { return rref_in_place(m).size(); }

}  // namespace mrdi::algebra
