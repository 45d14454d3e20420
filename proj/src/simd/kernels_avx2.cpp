#include "weylpi/simd/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>
#define WEYLPI_HAVE_X86 1
#endif

namespace weylpi::simd::avx2 {

#ifdef WEYLPI_HAVE_X86

namespace {

// x is an exact integer below 2^53; returns x mod p in [0, p).
__attribute__((target("avx2,fma"))) inline __m256d reduce(__m256d x, __m256d vp, __m256d vinv) {
    const __m256d q = _mm256_floor_pd(_mm256_mul_pd(x, vinv));
    __m256d r = _mm256_fnmadd_pd(q, vp, x);
    // floor(x * (1/p)) can be off by one in either direction.
    const __m256d zero = _mm256_setzero_pd();
    r = _mm256_add_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, zero, _CMP_LT_OQ), vp));
    r = _mm256_sub_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, vp, _CMP_GE_OQ), vp));
    return r;
}

}  // namespace

__attribute__((target("avx2,fma"))) void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t c,
                                                  std::uint32_t p, std::size_t n) {
    const __m256d vp = _mm256_set1_pd(static_cast<double>(p));
    const __m256d vinv = _mm256_set1_pd(1.0 / static_cast<double>(p));
    const __m256d vc = _mm256_set1_pd(static_cast<double>(c));
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d d = _mm256_cvtepi32_pd(_mm_loadu_si128(reinterpret_cast<const __m128i*>(dst + i)));
        const __m256d s = _mm256_cvtepi32_pd(_mm_loadu_si128(reinterpret_cast<const __m128i*>(src + i)));
        const __m256d r = reduce(_mm256_fmadd_pd(vc, s, d), vp, vinv);
        _mm_storeu_si128(reinterpret_cast<__m128i*>(dst + i), _mm256_cvttpd_epi32(r));
    }
    scalar::axpy_mod(dst + i, src + i, c, p, n - i);
}

__attribute__((target("avx2,fma"))) void scale_mod(std::uint32_t* v, std::uint32_t c, std::uint32_t p,
                                                   std::size_t n) {
    const __m256d vp = _mm256_set1_pd(static_cast<double>(p));
    const __m256d vinv = _mm256_set1_pd(1.0 / static_cast<double>(p));
    const __m256d vc = _mm256_set1_pd(static_cast<double>(c));
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d a = _mm256_cvtepi32_pd(_mm_loadu_si128(reinterpret_cast<const __m128i*>(v + i)));
        const __m256d r = reduce(_mm256_mul_pd(vc, a), vp, vinv);
        _mm_storeu_si128(reinterpret_cast<__m128i*>(v + i), _mm256_cvttpd_epi32(r));
    }
    scalar::scale_mod(v + i, c, p, n - i);
}

#else

void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t c, std::uint32_t p, std::size_t n) {
    scalar::axpy_mod(dst, src, c, p, n);
}
void scale_mod(std::uint32_t* v, std::uint32_t c, std::uint32_t p, std::size_t n) { scalar::scale_mod(v, c, p, n); }

#endif

}  // namespace weylpi::simd::avx2
