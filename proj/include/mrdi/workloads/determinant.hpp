#pragma once

#include <cstdint>
#include <vector>

#include "mrdi/algebra/integers.hpp"
#include "mrdi/algebra/matrix.hpp"
#include "mrdi/algebra/prime_field.hpp"

namespace mrdi::ipc {
class WorkerPool;
}

namespace mrdi::workloads {

// Determinant of a square matrix over ZZ[t] from its images over many
// GF(p), glued with the balanced Chinese remainder lift.

// Product over rows of the row's summed absolute coefficient values.
// Bounds every coefficient of det(m). Throws ValidationError when m is
// not square.
algebra::BigInt coefficient_bound(const algebra::ExactMatrix& m);

// Sum over rows of the largest entry degree in the row (zero entries
// count as degree 0).
std::uint64_t degree_bound(const algebra::ExactMatrix& m);

// Primes below `start_below` in descending order, skipping primes <= D,
// until their product exceeds 2 * bound.
std::vector<std::uint32_t> select_primes(const algebra::BigInt& bound, std::uint64_t degree_bound,
                                         std::uint64_t start_below = algebra::kPrimeModulusLimit);

struct DetOptions {
  // Stop once two additional primes leave the lifted result unchanged,
  // instead of running to the proven bound.
  bool heuristic = false;
  // Primes are drawn strictly below this value.
  std::uint64_t start_below = algebra::kPrimeModulusLimit;
};

struct DetResult {
  algebra::RingElem determinant;
  std::vector<std::uint32_t> primes;
};

// With a pool, one "det_mod_p" call per prime is dispatched through
// parallel_map; otherwise the primes are processed in this thread. Both
// paths return identical polynomials.
DetResult modular_determinant_detailed(const algebra::ExactMatrix& m, ipc::WorkerPool* pool,
                                       const DetOptions& options = {});

algebra::RingElem modular_determinant(const algebra::ExactMatrix& m,
                                      ipc::WorkerPool* pool = nullptr,
                                      const DetOptions& options = {});

// det(m mod p) over GF(p)[t]; the body of the "det_mod_p" remote function.
algebra::RingElem det_mod_prime(const algebra::ExactMatrix& m, std::uint32_t p,
                                std::uint64_t degree_bound);

}  // namespace mrdi::workloads
