#pragma once

#include <cstdint>

namespace mrdi::algebra {

// Prime moduli are kept below 2^31 so that 2p^2 fits in 64 bits and the
// SIMD kernels can hold residues in 32-bit lanes.
inline constexpr std::uint64_t kPrimeModulusLimit = std::uint64_t{1} << 31;

// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n);

// Largest prime strictly below `bound`, or 0 if there is none.
std::uint64_t previous_prime(std::uint64_t bound);

inline std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;
  return s >= p ? s - p : s;
}

inline std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + p - b;
}

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p);

// Inverse of a nonzero residue modulo a prime p.
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);

}  // namespace mrdi::algebra
