#include "mrdi/algebra/modular.hpp"

#include <algorithm>
#include <numeric>

#include "mrdi/algebra/prime_field.hpp"
#include "mrdi/error.hpp"

namespace mrdi::algebra {

Context reduce_ring_mod_prime(Context ring, std::uint64_t p) {
  switch (ring.kind()) {
    case RingKind::Integers: return prime_field(p);
    case RingKind::Univariate:
      return polynomial_ring(reduce_ring_mod_prime(ring.base(), p), ring.symbols()[0]);
    case RingKind::Multivariate: {
      auto syms = ring.symbols();
      return multivariate_ring(reduce_ring_mod_prime(ring.base(), p),
                               std::vector<std::string>(syms.begin(), syms.end()));
    }
    default:
      throw ContextError("cannot reduce " + ring.to_string() + " modulo a prime");
  }
}

namespace {

RingElem reduce_into(const RingElem& e, Context target) {
  if (e.parent().kind() == RingKind::Integers) return RingElem::from_integer(target, e.as_integer());
  std::vector<Term> terms;
  terms.reserve(e.terms().size());
  for (const auto& t : e.terms()) {
    RingElem c = reduce_into(t.coefficient, target.base());
    if (!c.is_zero()) terms.push_back(Term{t.monomial, std::move(c)});
  }
  return RingElem::polynomial(target, std::move(terms));
}

}  // namespace

RingElem reduce_mod_prime(const RingElem& e, std::uint64_t p) {
  return reduce_into(e, reduce_ring_mod_prime(e.parent(), p));
}

ExactMatrix reduce_mod_prime(const ExactMatrix& m, std::uint64_t p) {
  Context target = reduce_ring_mod_prime(m.ring(), p);
  std::vector<RingElem> entries;
  entries.reserve(m.entries().size());
  for (const auto& e : m.entries()) entries.push_back(reduce_into(e, target));
  return ExactMatrix(target, m.rows(), m.cols(), std::move(entries));
}

std::uint32_t det_mod_p(std::span<std::uint32_t> a, std::size_t n, std::uint32_t p,
                        const kernels::ModKernels& k) {
  std::uint64_t det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && a[pivot * n + c] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != c) {
      std::swap_ranges(a.begin() + pivot * n + c, a.begin() + pivot * n + n, a.begin() + c * n + c);
      det = det == 0 ? 0 : p - det;
    }
    const std::uint64_t lead = a[c * n + c];
    det = mul_mod(det, lead, p);
    const std::uint64_t inv = inv_mod(lead, p);
    auto pivot_row = a.subspan(c * n + c + 1, n - c - 1);
    for (std::size_t r = c + 1; r < n; ++r) {
      const std::uint64_t f = mul_mod(a[r * n + c], inv, p);
      if (f == 0) continue;
      k.axpy(a.subspan(r * n + c + 1, n - c - 1), pivot_row, static_cast<std::uint32_t>(p - f), p);
    }
  }
  return static_cast<std::uint32_t>(det);
}

std::vector<std::uint32_t> interpolate_mod_p(std::span<const std::uint32_t> xs,
                                             std::span<const std::uint32_t> ys, std::uint32_t p) {
  const std::size_t n = xs.size();
  if (ys.size() != n) throw ValidationError("interpolation needs as many values as points");
  std::vector<std::uint32_t> result(n, 0);
  if (n == 0) return result;
  // master(t) = prod (t - x_i), ascending coefficients, degree n
  std::vector<std::uint64_t> master(n + 1, 0);
  master[0] = 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t d = i + 1; d > 0; --d) {
      master[d] = sub_mod(master[d - 1], mul_mod(master[d], xs[i], p), p);
    }
    master[0] = sub_mod(0, mul_mod(master[0], xs[i], p), p);
  }
  std::vector<std::uint64_t> quotient(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (ys[i] == 0) continue;
    // quotient = master / (t - x_i) by synthetic division from the top
    std::uint64_t carry = master[n];
    for (std::size_t d = n; d-- > 0;) {
      quotient[d] = carry;
      carry = add_mod(master[d], mul_mod(carry, xs[i], p), p);
    }
    std::uint64_t denom = 0;
    for (std::size_t d = n; d-- > 0;) denom = add_mod(mul_mod(denom, xs[i], p), quotient[d], p);
    const std::uint64_t scale = mul_mod(ys[i], inv_mod(denom, p), p);
    for (std::size_t d = 0; d < n; ++d) {
      result[d] = static_cast<std::uint32_t>(add_mod(result[d], mul_mod(scale, quotient[d], p), p));
    }
  }
  return result;
}

RingElem det_univariate_over_prime_field(const ExactMatrix& m, std::uint64_t degree_bound,
                                         const kernels::ModKernels& k) {
  const Context ring = m.ring();
  if (ring.kind() != RingKind::Univariate || ring.base().kind() != RingKind::PrimeField) {
    throw ContextError("expected a matrix over GF(p)[t], got " + ring.to_string());
  }
  if (!m.is_square()) {
    throw ValidationError("determinant of a nonsquare " + std::to_string(m.rows()) + "x" +
                          std::to_string(m.cols()) + " matrix");
  }
  const std::uint64_t p64 = ring.base().modulus();
  if (p64 <= degree_bound) {
    throw ValidationError("insufficient evaluation points: p = " + std::to_string(p64) +
                          " but degree bound is " + std::to_string(degree_bound));
  }
  const auto p = static_cast<std::uint32_t>(p64);
  const std::size_t n = m.rows();
  const std::size_t npoints = degree_bound + 1;

  std::vector<std::uint32_t> points(npoints);
  std::iota(points.begin(), points.end(), 0u);

  // values[pt * n * n + entry]
  std::vector<std::uint32_t> values(npoints * n * n, 0);
  std::vector<std::uint32_t> coeffs;
  std::vector<std::uint32_t> evaluated(npoints);
  for (std::size_t e = 0; e < n * n; ++e) {
    const RingElem& entry = m.entries()[e];
    if (entry.is_zero()) continue;
    coeffs.assign(static_cast<std::size_t>(entry.degree()) + 1, 0);
    for (const auto& t : entry.terms()) {
      coeffs[t.monomial[0]] = static_cast<std::uint32_t>(t.coefficient.residue());
    }
    k.eval(evaluated, points, coeffs, p);
    for (std::size_t pt = 0; pt < npoints; ++pt) values[pt * n * n + e] = evaluated[pt];
  }

  std::vector<std::uint32_t> dets(npoints);
  for (std::size_t pt = 0; pt < npoints; ++pt) {
    dets[pt] = det_mod_p(std::span(values).subspan(pt * n * n, n * n), n, p, k);
  }
  auto poly = interpolate_mod_p(points, dets, p);

  std::vector<Term> terms;
  for (std::size_t d = 0; d < poly.size(); ++d) {
    if (poly[d] == 0) continue;
    terms.push_back(Term{Monomial({static_cast<std::uint32_t>(d)}),
                         RingElem::residue(ring.base(), poly[d])});
  }
  return RingElem::polynomial(ring, std::move(terms));
}

CrtBasis::CrtBasis(std::vector<BigInt> moduli) : moduli_(std::move(moduli)), product_(1) {
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    if (sgn(moduli_[i]) <= 0) throw ValidationError("CRT moduli must be positive");
    for (std::size_t j = 0; j < i; ++j) {
      BigInt g;
      mpz_gcd(g.get_mpz_t(), moduli_[i].get_mpz_t(), moduli_[j].get_mpz_t());
      if (g != 1) {
        throw ValidationError("CRT moduli " + to_text(moduli_[j]) + " and " + to_text(moduli_[i]) +
                              " are not coprime");
      }
    }
    product_ *= moduli_[i];
  }
  cofactors_.reserve(moduli_.size());
  inverses_.reserve(moduli_.size());
  for (const auto& mi : moduli_) {
    BigInt cof = product_ / mi;
    BigInt inv;
    if (mi == 1) {
      inv = 0;
    } else {
      mpz_invert(inv.get_mpz_t(), cof.get_mpz_t(), mi.get_mpz_t());
    }
    cofactors_.push_back(std::move(cof));
    inverses_.push_back(std::move(inv));
  }
}

BigInt CrtBasis::combine_balanced(std::span<const BigInt> residues) const {
  if (residues.size() != moduli_.size()) {
    throw ValidationError("CRT needs one residue per modulus");
  }
  BigInt r = 0;
  BigInt term;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    term = residues[i] * inverses_[i];
    mpz_fdiv_r(term.get_mpz_t(), term.get_mpz_t(), moduli_[i].get_mpz_t());
    r += term * cofactors_[i];
  }
  mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), product_.get_mpz_t());
  if (2 * r > product_) r -= product_;
  return r;
}

BigInt crt_combine_balanced(std::span<const BigInt> residues, std::span<const BigInt> moduli) {
  if (residues.size() != moduli.size()) {
    throw ValidationError("CRT needs one residue per modulus");
  }
  return CrtBasis(std::vector<BigInt>(moduli.begin(), moduli.end())).combine_balanced(residues);
}

}  // namespace mrdi::algebra
