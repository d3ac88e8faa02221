#include "ratwitt/kernels/modp.hpp"

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>

namespace ratwitt::kernels {

// t = y + c*x < 2^51 is exact in a double; q = floor(t/p) may be off by one,
// which the two conditional corrections absorb.
__attribute__((target("avx2,fma"))) void axpy_mod_avx2(std::uint32_t* y, const std::uint32_t* x, std::uint32_t c,
                                                       std::uint32_t p, std::size_t n) {
  const __m256d vc = _mm256_set1_pd(static_cast<double>(c));
  const __m256d vp = _mm256_set1_pd(static_cast<double>(p));
  const __m256d vinv = _mm256_set1_pd(1.0 / static_cast<double>(p));
  const __m256d zero = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d vx = _mm256_cvtepi32_pd(_mm_loadu_si128(reinterpret_cast<const __m128i*>(x + i)));
    __m256d vy = _mm256_cvtepi32_pd(_mm_loadu_si128(reinterpret_cast<const __m128i*>(y + i)));
    __m256d t = _mm256_fmadd_pd(vc, vx, vy);
    __m256d q = _mm256_floor_pd(_mm256_mul_pd(t, vinv));
    __m256d r = _mm256_fnmadd_pd(q, vp, t);
    r = _mm256_add_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, zero, _CMP_LT_OQ), vp));
    r = _mm256_sub_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, vp, _CMP_GE_OQ), vp));
    _mm_storeu_si128(reinterpret_cast<__m128i*>(y + i), _mm256_cvttpd_epi32(r));
  }
  axpy_mod_scalar(y + i, x + i, c, p, n - i);
}

}  // namespace ratwitt::kernels
#endif
