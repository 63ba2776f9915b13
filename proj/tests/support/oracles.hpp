#pragma once

// Reference computations for tests. These deliberately avoid the library's
// linear algebra, CRT and enumeration code: plain GMP rationals, textbook
// algorithms, small inputs only.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <vector>

#include "mrdi/algebra/matrix.hpp"
#include "mrdi/algebra/monomial_map.hpp"
#include "mrdi/workloads/kernel.hpp"

namespace oracle {

// Dense ZZ[t] polynomial, ascending coefficients, no trailing zeros.
using DensePoly = std::vector<mpz_class>;

DensePoly dense_of(const mrdi::algebra::RingElem& p);
mrdi::algebra::RingElem from_dense(mrdi::algebra::Context ring, const DensePoly& d);

// Laplace expansion along the first row.
DensePoly cofactor_det(const std::vector<std::vector<DensePoly>>& m);
mrdi::algebra::RingElem cofactor_det(const mrdi::algebra::ExactMatrix& m);

// Smallest nonnegative x with x = r_i mod m_i by direct search (tiny moduli).
std::int64_t crt_by_search(const std::vector<std::int64_t>& residues,
                           const std::vector<std::int64_t>& moduli);

using Exponents = std::vector<std::uint32_t>;
using QVector = std::vector<mpq_class>;

// All exponent vectors of `n` variables with sum `t`, any order.
std::vector<Exponents> all_monomials(std::size_t n, std::uint32_t t);

// Rank of a list of rational row vectors (fraction-free elimination).
std::size_t rank_of(std::vector<QVector> rows);

// Basis of the solutions v of A v = 0, A given as rows of length `cols`.
std::vector<QVector> solve_nullspace(std::vector<QVector> a, std::size_t cols);

struct BruteKernel {
  // multidegree -> (monomials of that multidegree, kernel basis as
  // coefficient vectors over those monomials)
  std::map<std::vector<std::int64_t>, std::pair<std::vector<Exponents>, std::vector<QVector>>> blocks;
};

// Per-multidegree kernel of a single-term map in exactly total degree t,
// computed by dense evaluation and elimination.
BruteKernel brute_force_kernel(const mrdi::algebra::MonomialMap& phi, std::uint32_t t);

// Coefficient vector of `p` over `monos` (which must cover its support).
QVector coefficients_over(const mrdi::algebra::RingElem& p, const std::vector<Exponents>& monos);

// Compares kernel output with the oracle for every total degree up to d:
// each emitted element maps to zero and is homogeneous of its multidegree,
// no multidegree is emitted that the oracle finds trivial, and per
// multidegree the emitted elements span the oracle's kernel. With
// `minimalize`, lower-degree generators times monomials are added to the
// span first, and without it the emitted count must equal the kernel
// dimension.
bool kernel_matches(const mrdi::algebra::MonomialMap& phi, std::uint32_t d,
                    const mrdi::workloads::KernelComponents& got, bool minimalize);

}  // namespace oracle
