#include "mrdi/kernels/mod_kernels.hpp"

#include <cstdlib>
#include <string_view>

namespace mrdi::kernels {

#if defined(MRDI_HAVE_AVX2_TU)
namespace detail {
const ModKernels& avx2_table();
}
#endif

const ModKernels* avx2() {
#if defined(MRDI_HAVE_AVX2_TU)
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? &detail::avx2_table() : nullptr;
#else
  return nullptr;
#endif
}

const ModKernels& active() {
  static const ModKernels* chosen = [] {
    const char* env = std::getenv("MRDI_SIMD");
    std::string_view want = env ? env : "";
    if (want == "scalar") return &scalar();
    if (const ModKernels* k = avx2()) return k;
    return &scalar();
  }();
  return *chosen;
}

}  // namespace mrdi::kernels
