#pragma once

// Data-parallel inner loops of the per-prime determinant: row elimination
// and multi-point polynomial evaluation over GF(p) with p < 2^31.
//
// Every kernel exists as a scalar reference and, where the CPU supports it,
// an AVX2 variant. `active()` picks the best variant once at startup; the
// MRDI_SIMD environment variable ("scalar" or "avx2") overrides the choice.
// All variants produce bit-identical results.

#include <cstdint>
#include <span>
#include <string_view>

namespace mrdi::kernels {

struct ModKernels {
  std::string_view name;

  // y[i] = (y[i] + a * x[i]) mod p. Requires x[i], y[i], a < p < 2^31 and
  // x.size() == y.size().
  void (*axpy)(std::span<std::uint32_t> y, std::span<const std::uint32_t> x,
               std::uint32_t a, std::uint32_t p);

  // out[i] = sum_k coeffs[k] * points[i]^k mod p (Horner). Requires every
  // input < p < 2^31 and out.size() == points.size().
  void (*eval)(std::span<std::uint32_t> out, std::span<const std::uint32_t> points,
               std::span<const std::uint32_t> coeffs, std::uint32_t p);
};

const ModKernels& scalar();
// nullptr when the AVX2 variant is not compiled in or the CPU lacks AVX2.
const ModKernels* avx2();
const ModKernels& active();

}  // namespace mrdi::kernels
