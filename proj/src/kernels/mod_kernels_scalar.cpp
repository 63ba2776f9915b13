#include "mrdi/kernels/mod_kernels.hpp"

namespace mrdi::kernels {
namespace {

inline std::uint32_t mulmod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

inline std::uint32_t addmod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  std::uint32_t s = a + b;  // < 2^32 since a, b < 2^31
  return s >= p ? s - p : s;
}

void axpy_scalar(std::span<std::uint32_t> y, std::span<const std::uint32_t> x,
                 std::uint32_t a, std::uint32_t p) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = addmod(y[i], mulmod(a, x[i], p), p);
}

void eval_scalar(std::span<std::uint32_t> out, std::span<const std::uint32_t> points,
                 std::span<const std::uint32_t> coeffs, std::uint32_t p) {
  for (std::size_t i = 0; i < points.size(); ++i) {
    std::uint32_t acc = 0;
    for (std::size_t k = coeffs.size(); k-- > 0;) {
      acc = addmod(mulmod(acc, points[i], p), coeffs[k], p);
    }
    out[i] = acc;
  }
}

}  // namespace

const ModKernels& scalar() {
  static const ModKernels kernels{"scalar", &axpy_scalar, &eval_scalar};
  return kernels;
}

}  // namespace mrdi::kernels
