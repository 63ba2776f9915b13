#pragma once

#include <cstdint>

#include "mrdi/algebra/matrix.hpp"
#include "mrdi/algebra/monomial_map.hpp"

namespace mrdi::workloads {

// Seeded bench instances. Generation only uses the raw mt19937_64 stream,
// so a seed gives the same instance on every platform.

// n x n over ZZ[t], every entry of degree exactly `degree` with
// coefficients spread over the full signed 64-bit range.
algebra::ExactMatrix synthetic_det_matrix(std::uint64_t seed, std::size_t n = 16,
                                          std::uint32_t degree = 12);

// QQ[x1..xn] -> QQ[s1..sk], each x_i sent to c * (a degree-2 monomial)
// with c in 1..5.
algebra::MonomialMap synthetic_kernel_map(std::uint64_t seed, std::size_t source_vars = 6,
                                          std::size_t target_vars = 3);

inline constexpr std::uint64_t kDefaultBenchSeed = 20240617;
inline constexpr std::uint32_t kSyntheticKernelDegree = 4;

}  // namespace mrdi::workloads
