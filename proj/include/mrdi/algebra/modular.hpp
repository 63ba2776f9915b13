#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mrdi/algebra/integers.hpp"
#include "mrdi/algebra/matrix.hpp"
#include "mrdi/kernels/mod_kernels.hpp"

namespace mrdi::algebra {

// Ring of the same shape over GF(p): ZZ -> GF(p), ZZ[t] -> GF(p)[t], and so
// on through nested polynomial rings. Throws ValidationError for a nonprime
// or oversized p and ContextError for rings not built on ZZ.
Context reduce_ring_mod_prime(Context ring, std::uint64_t p);
RingElem reduce_mod_prime(const RingElem& e, std::uint64_t p);
// Coefficients replaced by their residues in [0, p); vanishing terms drop.
ExactMatrix reduce_mod_prime(const ExactMatrix& m, std::uint64_t p);

// Determinant of a dense n x n matrix over GF(p) by Gaussian elimination.
// `a` is row-major and is destroyed.
std::uint32_t det_mod_p(std::span<std::uint32_t> a, std::size_t n, std::uint32_t p,
                        const kernels::ModKernels& k = kernels::active());

// Coefficients (ascending degree, length xs.size()) of the unique
// polynomial of degree < xs.size() through the points. xs must be distinct.
std::vector<std::uint32_t> interpolate_mod_p(std::span<const std::uint32_t> xs,
                                             std::span<const std::uint32_t> ys, std::uint32_t p);

// det(m) for a square matrix over GF(p)[t] whose determinant has degree at
// most `degree_bound`: evaluate at t = 0..D, take scalar determinants,
// interpolate. Requires p > D ("insufficient evaluation points" otherwise).
RingElem det_univariate_over_prime_field(const ExactMatrix& m, std::uint64_t degree_bound,
                                         const kernels::ModKernels& k = kernels::active());

// Precomputed CRT data for a fixed list of pairwise coprime moduli.
class CrtBasis {
 public:
  // Throws ValidationError if the moduli are not pairwise coprime or some
  // modulus is < 1.
  explicit CrtBasis(std::vector<BigInt> moduli);

  const BigInt& modulus() const { return product_; }
  const std::vector<BigInt>& moduli() const { return moduli_; }

  // The unique r with r = residues[i] mod moduli[i] and -M/2 < r <= M/2.
  BigInt combine_balanced(std::span<const BigInt> residues) const;

 private:
  std::vector<BigInt> moduli_;
  std::vector<BigInt> cofactors_;  // M / m_i
  std::vector<BigInt> inverses_;   // (M / m_i)^-1 mod m_i
  BigInt product_;
};

BigInt crt_combine_balanced(std::span<const BigInt> residues, std::span<const BigInt> moduli);

}  // namespace mrdi::algebra
