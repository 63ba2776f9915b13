#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "mrdi/algebra/matrix.hpp"
#include "mrdi/algebra/monomial_map.hpp"
#include "mrdi/format/value.hpp"
#include "mrdi/ipc/message.hpp"

namespace gen {

using Rng = std::mt19937_64;

mrdi::algebra::BigInt integer(Rng& rng, unsigned bits);
mrdi::algebra::BigRational rational(Rng& rng, unsigned bits);
std::uint64_t small_prime(Rng& rng);

// Any ring: ZZ, QQ, GF(p), univariate or multivariate over those, and
// univariate over a univariate ring.
mrdi::algebra::Context ring(Rng& rng, int depth = 2);
mrdi::algebra::RingElem element(Rng& rng, mrdi::algebra::Context r, std::size_t max_terms = 5);
mrdi::algebra::RingElem univariate(Rng& rng, mrdi::algebra::Context r, std::uint32_t max_degree);

// Over ZZ[t]: entries of degree <= max_degree, coefficients in
// [-max_coeff, max_coeff].
mrdi::algebra::ExactMatrix zt_matrix(Rng& rng, std::size_t n, std::uint32_t max_degree,
                                     long max_coeff);

// QQ[x1..xn] -> QQ[s1..sk] with single-term images, small exponents and
// coefficients.
mrdi::algebra::MonomialMap monomial_map(Rng& rng, std::size_t n, std::size_t k);

// A serializable value of any registered kind.
mrdi::format::Value value(Rng& rng, int depth = 2);

// A random protocol message with arbitrary (valid UTF-8) text.
mrdi::ipc::Message message(Rng& rng);

}  // namespace gen
