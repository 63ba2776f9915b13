// Compiled with -mavx2; only reached after a runtime CPU check.
#include <immintrin.h>

#include "mrdi/kernels/mod_kernels.hpp"

namespace mrdi::kernels {
namespace {

// Four lanes of a*b mod p with a, b < p < 2^31.
//
// The quotient is estimated in double precision. a*b < 2^62 is rounded to 53
// bits, so the estimate is off by at most one and the remainder lands in
// [-p, 2p); one conditional add and one conditional subtract fix it up.
inline __m128i mulmod4(__m128i a, __m128i b, __m256d pinv, __m256i p64) {
  __m256d q_d = _mm256_mul_pd(_mm256_mul_pd(_mm256_cvtepi32_pd(a), _mm256_cvtepi32_pd(b)), pinv);
  __m128i q = _mm256_cvttpd_epi32(q_d);
  __m256i prod = _mm256_mul_epu32(_mm256_cvtepu32_epi64(a), _mm256_cvtepu32_epi64(b));
  __m256i qp = _mm256_mul_epu32(_mm256_cvtepu32_epi64(q), p64);
  __m256i r = _mm256_sub_epi64(prod, qp);
  __m256i neg = _mm256_cmpgt_epi64(_mm256_setzero_si256(), r);
  r = _mm256_add_epi64(r, _mm256_and_si256(neg, p64));
  __m256i ge = _mm256_cmpgt_epi64(r, _mm256_sub_epi64(p64, _mm256_set1_epi64x(1)));
  r = _mm256_sub_epi64(r, _mm256_and_si256(ge, p64));
  // gather the low 32 bits of each 64-bit lane
  __m256i packed = _mm256_permutevar8x32_epi32(r, _mm256_setr_epi32(0, 2, 4, 6, 0, 0, 0, 0));
  return _mm256_castsi256_si128(packed);
}

// (a + b) mod p for a, b < p < 2^31: min(s, s - p) as unsigned.
inline __m128i addmod4(__m128i a, __m128i b, __m128i p) {
  __m128i s = _mm_add_epi32(a, b);
  return _mm_min_epu32(s, _mm_sub_epi32(s, p));
}

inline std::uint32_t mulmod1(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

inline std::uint32_t addmod1(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  std::uint32_t s = a + b;
  return s >= p ? s - p : s;
}

void axpy_avx2(std::span<std::uint32_t> y, std::span<const std::uint32_t> x,
               std::uint32_t a, std::uint32_t p) {
  const std::size_t n = y.size();
  const __m256d pinv = _mm256_set1_pd(1.0 / static_cast<double>(p));
  const __m256i p64 = _mm256_set1_epi64x(p);
  const __m128i p32 = _mm_set1_epi32(static_cast<int>(p));
  const __m128i av = _mm_set1_epi32(static_cast<int>(a));
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m128i xv = _mm_loadu_si128(reinterpret_cast<const __m128i*>(x.data() + i));
    __m128i yv = _mm_loadu_si128(reinterpret_cast<const __m128i*>(y.data() + i));
    __m128i prod = mulmod4(av, xv, pinv, p64);
    _mm_storeu_si128(reinterpret_cast<__m128i*>(y.data() + i), addmod4(yv, prod, p32));
  }
  for (; i < n; ++i) y[i] = addmod1(y[i], mulmod1(a, x[i], p), p);
}

void eval_avx2(std::span<std::uint32_t> out, std::span<const std::uint32_t> points,
               std::span<const std::uint32_t> coeffs, std::uint32_t p) {
  const std::size_t n = points.size();
  const __m256d pinv = _mm256_set1_pd(1.0 / static_cast<double>(p));
  const __m256i p64 = _mm256_set1_epi64x(p);
  const __m128i p32 = _mm_set1_epi32(static_cast<int>(p));
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m128i xv = _mm_loadu_si128(reinterpret_cast<const __m128i*>(points.data() + i));
    __m128i acc = _mm_setzero_si128();
    for (std::size_t k = coeffs.size(); k-- > 0;) {
      acc = addmod4(mulmod4(acc, xv, pinv, p64),
                    _mm_set1_epi32(static_cast<int>(coeffs[k])), p32);
    }
    _mm_storeu_si128(reinterpret_cast<__m128i*>(out.data() + i), acc);
  }
  for (; i < n; ++i) {
    std::uint32_t acc = 0;
    for (std::size_t k = coeffs.size(); k-- > 0;) {
      acc = addmod1(mulmod1(acc, points[i], p), coeffs[k], p);
    }
    out[i] = acc;
  }
}

}  // namespace

namespace detail {
const ModKernels& avx2_table() {
  static const ModKernels kernels{"avx2", &axpy_avx2, &eval_avx2};
  return kernels;
}
}  // namespace detail

}  // namespace mrdi::kernels
