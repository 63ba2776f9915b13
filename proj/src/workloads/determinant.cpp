#include "mrdi/workloads/determinant.hpp"

#include <algorithm>

#include "mrdi/algebra/modular.hpp"
#include "mrdi/error.hpp"
#include "mrdi/format/value.hpp"
#include "mrdi/ipc/pool.hpp"

namespace mrdi::workloads {

using algebra::BigInt;
using algebra::Context;
using algebra::ExactMatrix;
using algebra::RingElem;

namespace {

void require_integer_polynomial_matrix(const ExactMatrix& m) {
  if (!m.is_square()) {
    throw ValidationError("determinant needs a square matrix, got " + std::to_string(m.rows()) +
                          "x" + std::to_string(m.cols()));
  }
  const Context r = m.ring();
  if (r.kind() != algebra::RingKind::Univariate || r.base().kind() != algebra::RingKind::Integers) {
    throw ValidationError("determinant needs a matrix over ZZ[t], got one over " + r.to_string());
  }
}

BigInt l1_norm(const RingElem& e) {
  BigInt s = 0;
  for (const auto& term : e.terms()) s += abs(term.coefficient.as_integer());
  return s;
}

}  // namespace

BigInt coefficient_bound(const ExactMatrix& m) {
  if (!m.is_square()) throw ValidationError("coefficient bound needs a square matrix");
  BigInt bound = 1;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    BigInt row = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) row += l1_norm(m(i, j));
    bound *= row;
  }
  return bound;
}

std::uint64_t degree_bound(const ExactMatrix& m) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::int64_t row = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) row = std::max(row, m(i, j).degree());
    total += static_cast<std::uint64_t>(row);
  }
  return total;
}

std::vector<std::uint32_t> select_primes(const BigInt& bound, std::uint64_t degree_bound,
                                         std::uint64_t start_below) {
  const BigInt target = 2 * bound;
  std::vector<std::uint32_t> primes;
  BigInt product = 1;
  std::uint64_t p = std::min<std::uint64_t>(start_below, algebra::kPrimeModulusLimit);
  while (product <= target) {
    p = algebra::previous_prime(p);
    if (p == 0 || p <= degree_bound) throw Error("ran out of primes above the degree bound");
    primes.push_back(static_cast<std::uint32_t>(p));
    product *= static_cast<unsigned long>(p);
  }
  return primes;
}

RingElem det_mod_prime(const ExactMatrix& m, std::uint32_t p, std::uint64_t degree_bound) {
  return algebra::det_univariate_over_prime_field(algebra::reduce_mod_prime(m, p), degree_bound);
}

namespace {

// Per-prime images of det(m) as dense coefficient vectors of length D + 1.
std::vector<std::vector<std::uint32_t>> images_for(const ExactMatrix& m,
                                                   std::span<const std::uint32_t> primes,
                                                   std::uint64_t D, ipc::WorkerPool* pool) {
  std::vector<RingElem> dets;
  if (pool != nullptr) {
    std::vector<format::ValueTuple> items;
    items.reserve(primes.size());
    for (std::uint32_t p : primes) {
      items.push_back(format::make_tuple(m, RingElem::integer(BigInt(static_cast<unsigned long>(p))),
                                         RingElem::integer(BigInt(static_cast<unsigned long>(D)))));
    }
    for (const format::Value& v : pool->parallel_map("det_mod_p", items)) dets.push_back(v.elem());
  } else {
    for (std::uint32_t p : primes) dets.push_back(det_mod_prime(m, p, D));
  }

  std::vector<std::vector<std::uint32_t>> out;
  out.reserve(dets.size());
  for (std::size_t i = 0; i < dets.size(); ++i) {
    const RingElem& d = dets[i];
    if (d.parent().kind() != algebra::RingKind::Univariate ||
        d.parent().base().modulus() != primes[i]) {
      throw Error("determinant image has parent " + d.parent().to_string());
    }
    std::vector<std::uint32_t> coeffs(D + 1, 0);
    for (const auto& term : d.terms()) {
      const std::uint64_t k = term.monomial[0];
      if (k > D) throw Error("determinant image exceeds the degree bound");
      coeffs[k] = static_cast<std::uint32_t>(term.coefficient.residue());
    }
    out.push_back(std::move(coeffs));
  }
  return out;
}

RingElem lift(Context ring, const std::vector<std::vector<std::uint32_t>>& images,
              std::span<const std::uint32_t> primes, std::uint64_t D) {
  std::vector<BigInt> moduli;
  for (std::uint32_t p : primes) moduli.emplace_back(static_cast<unsigned long>(p));
  algebra::CrtBasis basis(moduli);
  std::vector<algebra::Term> terms;
  std::vector<BigInt> residues(primes.size());
  for (std::uint64_t k = 0; k <= D; ++k) {
    for (std::size_t i = 0; i < primes.size(); ++i) {
      residues[i] = static_cast<unsigned long>(images[i][k]);
    }
    BigInt c = basis.combine_balanced(residues);
    if (c != 0) {
      terms.push_back({algebra::Monomial({static_cast<std::uint32_t>(k)}), RingElem::integer(c)});
    }
  }
  return RingElem::polynomial(ring, std::move(terms));
}

}  // namespace

DetResult modular_determinant_detailed(const ExactMatrix& m, ipc::WorkerPool* pool,
                                       const DetOptions& options) {
  require_integer_polynomial_matrix(m);
  const Context ring = m.ring();
  const BigInt B = coefficient_bound(m);
  if (B == 0) return {RingElem::zero(ring), {}};
  const std::uint64_t D = degree_bound(m);
  const std::vector<std::uint32_t> proven = select_primes(B, D, options.start_below);

  if (!options.heuristic) {
    auto images = images_for(m, proven, D, pool);
    return {lift(ring, images, proven, D), proven};
  }

  // Heuristic: grow the prime set in batches and stop when the lift has
  // been stable across two added primes, or the proven bound is reached.
  const std::size_t batch = pool != nullptr ? std::max<std::size_t>(2, pool->size()) : 2;
  std::vector<std::uint32_t> used;
  std::vector<std::vector<std::uint32_t>> images;
  std::optional<RingElem> last;
  std::size_t stable = 0;
  while (used.size() < proven.size()) {
    const std::size_t take = std::min(batch, proven.size() - used.size());
    std::span<const std::uint32_t> next(proven.data() + used.size(), take);
    auto more = images_for(m, next, D, pool);
    for (std::size_t i = 0; i < take; ++i) {
      used.push_back(next[i]);
      images.push_back(std::move(more[i]));
      RingElem current = lift(ring, images, used, D);
      stable = (last && *last == current) ? stable + 1 : 0;
      last = std::move(current);
      if (stable >= 2) break;
    }
    if (stable >= 2) {
      return {*last, used};
    }
  }
  return {*last, used};
}

RingElem modular_determinant(const ExactMatrix& m, ipc::WorkerPool* pool,
                             const DetOptions& options) {
  return modular_determinant_detailed(m, pool, options).determinant;
}

}  // namespace mrdi::workloads
