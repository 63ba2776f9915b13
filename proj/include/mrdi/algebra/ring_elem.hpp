#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "mrdi/algebra/integers.hpp"
#include "mrdi/algebra/monomial.hpp"
#include "mrdi/algebra/ring.hpp"

namespace mrdi::algebra {

struct Term;

// An element of an interned ring. The representation follows the parent's
// kind: BigInt for ZZ, BigRational for QQ, a residue in [0, p) for GF(p),
// and a sparse term list for polynomial rings.
//
// Polynomial terms are kept in canonical form: sorted by strictly
// decreasing degree-lex monomial, no zero coefficients, coefficients living
// in the parent's base ring. Structural equality is therefore mathematical
// equality. The zero polynomial has no terms.
//
// Binary operations require identical parents and throw ContextError
// otherwise.
class RingElem {
 public:
  // Zero of ZZ.
  RingElem();

  static RingElem zero(Context ring);
  static RingElem one(Context ring);
  // Image of an integer under the canonical map ZZ -> ring.
  static RingElem from_integer(Context ring, const BigInt& n);

  static RingElem integer(BigInt n);
  static RingElem rational(BigRational q);
  static RingElem residue(Context field, std::uint64_t r);
  // Canonicalizes: sorts, merges equal monomials, drops zeros.
  static RingElem polynomial(Context ring, std::vector<Term> terms);
  static RingElem variable(Context ring, std::size_t index);
  static RingElem term(Context ring, Monomial monomial, RingElem coefficient);

  Context parent() const { return parent_; }
  bool is_zero() const;
  bool is_one() const;

  const BigInt& as_integer() const;
  const BigRational& as_rational() const;
  std::uint64_t residue() const;
  std::span<const Term> terms() const;

  // Total degree of a polynomial; -1 for zero.
  std::int64_t degree() const;
  // Coefficient of t^k in a univariate polynomial (zero of the base ring if
  // absent).
  RingElem coefficient(std::uint64_t k) const;

  friend RingElem operator+(const RingElem& a, const RingElem& b);
  friend RingElem operator-(const RingElem& a, const RingElem& b);
  friend RingElem operator*(const RingElem& a, const RingElem& b);
  friend RingElem operator-(const RingElem& a);
  RingElem& operator+=(const RingElem& b) { return *this = *this + b; }
  RingElem& operator-=(const RingElem& b) { return *this = *this - b; }
  RingElem& operator*=(const RingElem& b) { return *this = *this * b; }

  friend bool operator==(const RingElem& a, const RingElem& b);

  std::string to_string() const;

 private:
  using Storage = std::variant<BigInt, BigRational, std::uint64_t, std::vector<Term>>;
  RingElem(Context parent, Storage value);

  const std::vector<Term>& poly_terms() const;

  Context parent_;
  Storage value_;
};

struct Term {
  Monomial monomial;
  RingElem coefficient;

  friend bool operator==(const Term&, const Term&) = default;
};

using Polynomial = RingElem;

// Applies op to (a, b) after checking parents agree.
enum class ArithOp { Add, Sub, Mul, Neg };
RingElem poly_arith(ArithOp op, const RingElem& a, const RingElem& b);

}  // namespace mrdi::algebra
