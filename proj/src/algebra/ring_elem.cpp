#include "mrdi/algebra/ring_elem.hpp"

#include <algorithm>
#include <map>

#include "mrdi/algebra/prime_field.hpp"
#include "mrdi/error.hpp"

namespace mrdi::algebra {
namespace {

void require_same_parent(const RingElem& a, const RingElem& b) {
  if (!(a.parent() == b.parent())) {
    throw ContextError("operands belong to different rings: " + a.parent().to_string() +
                       " vs " + b.parent().to_string());
  }
}

// Merge two canonical term lists; `negate_b` subtracts instead of adding.
std::vector<Term> merge_terms(std::span<const Term> a, std::span<const Term> b, bool negate_b) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].monomial > b[j].monomial)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].monomial > a[i].monomial) {
      out.push_back(negate_b ? Term{b[j].monomial, -b[j].coefficient} : b[j]);
      ++j;
    } else {
      RingElem c = negate_b ? a[i].coefficient - b[j].coefficient
                            : a[i].coefficient + b[j].coefficient;
      if (!c.is_zero()) out.push_back(Term{a[i].monomial, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

RingElem::RingElem() : parent_(), value_(BigInt(0)) {}

RingElem::RingElem(Context parent, Storage value)
    : parent_(parent), value_(std::move(value)) {}

RingElem RingElem::zero(Context ring) {
  switch (ring.kind()) {
    case RingKind::Integers: return RingElem(ring, BigInt(0));
    case RingKind::Rationals: return RingElem(ring, BigRational(0));
    case RingKind::PrimeField: return RingElem(ring, std::uint64_t{0});
    case RingKind::Univariate:
    case RingKind::Multivariate: return RingElem(ring, std::vector<Term>{});
  }
  throw ContextError("unknown ring kind");
}

RingElem RingElem::one(Context ring) { return from_integer(ring, BigInt(1)); }

RingElem RingElem::from_integer(Context ring, const BigInt& n) {
  switch (ring.kind()) {
    case RingKind::Integers: return RingElem(ring, n);
    case RingKind::Rationals: return RingElem(ring, BigRational(n));
    case RingKind::PrimeField: {
      BigInt r;
      mpz_fdiv_r_ui(r.get_mpz_t(), n.get_mpz_t(), ring.modulus());
      return RingElem(ring, static_cast<std::uint64_t>(r.get_ui()));
    }
    case RingKind::Univariate:
    case RingKind::Multivariate: {
      RingElem c = from_integer(ring.base(), n);
      if (c.is_zero()) return zero(ring);
      return RingElem(ring, std::vector<Term>{Term{Monomial::one(ring.arity()), std::move(c)}});
    }
  }
  throw ContextError("unknown ring kind");
}

RingElem RingElem::integer(BigInt n) { return RingElem(integers(), std::move(n)); }

RingElem RingElem::rational(BigRational q) {
  q.canonicalize();
  return RingElem(rationals(), std::move(q));
}

RingElem RingElem::residue(Context field, std::uint64_t r) {
  return RingElem(field, r % field.modulus());
}

RingElem RingElem::polynomial(Context ring, std::vector<Term> terms) {
  if (!ring.is_polynomial_ring()) {
    throw ContextError(ring.to_string() + " is not a polynomial ring");
  }
  const Context base = ring.base();
  for (const auto& t : terms) {
    if (t.monomial.arity() != ring.arity()) {
      throw ContextError("monomial arity " + std::to_string(t.monomial.arity()) +
                         " does not match " + ring.to_string());
    }
    if (!(t.coefficient.parent() == base)) {
      throw ContextError("coefficient in " + t.coefficient.parent().to_string() +
                         " is not in the base ring of " + ring.to_string());
    }
  }
  std::stable_sort(terms.begin(), terms.end(),
                   [](const Term& a, const Term& b) { return a.monomial > b.monomial; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().monomial == t.monomial) {
      out.back().coefficient += t.coefficient;
    } else {
      if (!out.empty() && out.back().coefficient.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coefficient.is_zero()) out.pop_back();
  return RingElem(ring, std::move(out));
}

RingElem RingElem::variable(Context ring, std::size_t index) {
  if (!ring.is_polynomial_ring() || index >= ring.arity()) {
    throw ContextError("no variable " + std::to_string(index) + " in " + ring.to_string());
  }
  return RingElem(ring, std::vector<Term>{
                            Term{Monomial::variable(ring.arity(), index), one(ring.base())}});
}

RingElem RingElem::term(Context ring, Monomial monomial, RingElem coefficient) {
  std::vector<Term> terms;
  terms.push_back(Term{std::move(monomial), std::move(coefficient)});
  return polynomial(ring, std::move(terms));
}

bool RingElem::is_zero() const {
  return std::visit(
      [](const auto& v) -> bool {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, BigInt>) return sgn(v) == 0;
        else if constexpr (std::is_same_v<T, BigRational>) return sgn(v) == 0;
        else if constexpr (std::is_same_v<T, std::uint64_t>) return v == 0;
        else return v.empty();
      },
      value_);
}

bool RingElem::is_one() const { return *this == one(parent_); }

const BigInt& RingElem::as_integer() const {
  if (auto* v = std::get_if<BigInt>(&value_)) return *v;
  throw ContextError(parent_.to_string() + " element is not an integer");
}

const BigRational& RingElem::as_rational() const {
  if (auto* v = std::get_if<BigRational>(&value_)) return *v;
  throw ContextError(parent_.to_string() + " element is not a rational");
}

std::uint64_t RingElem::residue() const {
  if (auto* v = std::get_if<std::uint64_t>(&value_)) return *v;
  throw ContextError(parent_.to_string() + " element is not a prime field residue");
}

const std::vector<Term>& RingElem::poly_terms() const {
  if (auto* v = std::get_if<std::vector<Term>>(&value_)) return *v;
  throw ContextError(parent_.to_string() + " element is not a polynomial");
}

std::span<const Term> RingElem::terms() const { return poly_terms(); }

std::int64_t RingElem::degree() const {
  const auto& t = poly_terms();
  // leading term has the largest total degree under degree-lex
  return t.empty() ? -1 : static_cast<std::int64_t>(t.front().monomial.total_degree());
}

RingElem RingElem::coefficient(std::uint64_t k) const {
  if (parent_.kind() != RingKind::Univariate) {
    throw ContextError(parent_.to_string() + " is not univariate");
  }
  for (const auto& t : poly_terms()) {
    if (t.monomial[0] == k) return t.coefficient;
  }
  return zero(parent_.base());
}

RingElem operator+(const RingElem& a, const RingElem& b) {
  require_same_parent(a, b);
  switch (a.parent_.kind()) {
    case RingKind::Integers:
      return RingElem(a.parent_, BigInt(std::get<BigInt>(a.value_) + std::get<BigInt>(b.value_)));
    case RingKind::Rationals:
      return RingElem(a.parent_,
                      BigRational(std::get<BigRational>(a.value_) + std::get<BigRational>(b.value_)));
    case RingKind::PrimeField:
      return RingElem(a.parent_, add_mod(std::get<std::uint64_t>(a.value_),
                                         std::get<std::uint64_t>(b.value_), a.parent_.modulus()));
    default:
      return RingElem(a.parent_, merge_terms(a.poly_terms(), b.poly_terms(), false));
  }
}

RingElem operator-(const RingElem& a, const RingElem& b) {
  require_same_parent(a, b);
  switch (a.parent_.kind()) {
    case RingKind::Integers:
      return RingElem(a.parent_, BigInt(std::get<BigInt>(a.value_) - std::get<BigInt>(b.value_)));
    case RingKind::Rationals:
      return RingElem(a.parent_,
                      BigRational(std::get<BigRational>(a.value_) - std::get<BigRational>(b.value_)));
    case RingKind::PrimeField:
      return RingElem(a.parent_, sub_mod(std::get<std::uint64_t>(a.value_),
                                         std::get<std::uint64_t>(b.value_), a.parent_.modulus()));
    default:
      return RingElem(a.parent_, merge_terms(a.poly_terms(), b.poly_terms(), true));
  }
}

RingElem operator-(const RingElem& a) { return RingElem::zero(a.parent_) - a; }

RingElem operator*(const RingElem& a, const RingElem& b) {
  require_same_parent(a, b);
  switch (a.parent_.kind()) {
    case RingKind::Integers:
      return RingElem(a.parent_, BigInt(std::get<BigInt>(a.value_) * std::get<BigInt>(b.value_)));
    case RingKind::Rationals:
      return RingElem(a.parent_,
                      BigRational(std::get<BigRational>(a.value_) * std::get<BigRational>(b.value_)));
    case RingKind::PrimeField:
      return RingElem(a.parent_, mul_mod(std::get<std::uint64_t>(a.value_),
                                         std::get<std::uint64_t>(b.value_), a.parent_.modulus()));
    default: {
      const auto& ta = a.poly_terms();
      const auto& tb = b.poly_terms();
      if (ta.empty() || tb.empty()) return RingElem::zero(a.parent_);
      std::map<Monomial, RingElem, std::greater<>> acc;
      for (const auto& x : ta) {
        for (const auto& y : tb) {
          Monomial m = x.monomial * y.monomial;
          RingElem c = x.coefficient * y.coefficient;
          auto [it, inserted] = acc.try_emplace(std::move(m), c);
          if (!inserted) it->second += c;
        }
      }
      std::vector<Term> out;
      out.reserve(acc.size());
      for (auto& [m, c] : acc) {
        if (!c.is_zero()) out.push_back(Term{m, std::move(c)});
      }
      return RingElem(a.parent_, std::move(out));
    }
  }
}

bool operator==(const RingElem& a, const RingElem& b) {
  return a.parent_ == b.parent_ && a.value_ == b.value_;
}

std::string RingElem::to_string() const {
  switch (parent_.kind()) {
    case RingKind::Integers: return to_text(std::get<BigInt>(value_));
    case RingKind::Rationals: return to_text(std::get<BigRational>(value_));
    case RingKind::PrimeField: return std::to_string(std::get<std::uint64_t>(value_));
    default: break;
  }
  const auto& ts = poly_terms();
  if (ts.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const Term& t = ts[i];
    std::string c = t.coefficient.to_string();
    bool compound = t.coefficient.parent().is_polynomial_ring() &&
                    t.coefficient.terms().size() > 1;
    if (compound) c = "(" + c + ")";
    std::string piece;
    if (t.monomial.is_one()) {
      piece = c;
    } else if (t.coefficient.is_one()) {
      piece = t.monomial.to_string(parent_.symbols());
    } else if (!compound && c == "-1") {
      piece = "-" + t.monomial.to_string(parent_.symbols());
    } else {
      piece = c + "*" + t.monomial.to_string(parent_.symbols());
    }
    if (i == 0) {
      out = piece;
    } else if (piece.front() == '-') {
      out += " - " + piece.substr(1);
    } else {
      out += " + " + piece;
    }
  }
  return out;
}

RingElem poly_arith(ArithOp op, const RingElem& a, const RingElem& b) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Neg: return -a;
  }
  throw ValidationError("unknown arithmetic operation");
}

}  // namespace mrdi::algebra
