#include "kernels_impl.hpp"

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>

#define AFFECTUS_AVX2 __attribute__((target("avx2,fma")))

namespace affectus::kernels::detail {

namespace {

AFFECTUS_AVX2 inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    __m128d sh = _mm_unpackhi_pd(lo, lo);
    return _mm_cvtsd_f64(_mm_add_sd(lo, sh));
}

}  // namespace

bool avx2_supported() noexcept {
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}

AFFECTUS_AVX2 double dot_avx2(const double* a, const double* b, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), acc1);
    }
    for (; i + 4 <= n; i += 4)
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
    double acc = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) acc += a[i] * b[i];
    return acc;
}

AFFECTUS_AVX2 double sum_avx2(const double* a, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_add_pd(acc0, _mm256_loadu_pd(a + i));
        acc1 = _mm256_add_pd(acc1, _mm256_loadu_pd(a + i + 4));
    }
    for (; i + 4 <= n; i += 4) acc0 = _mm256_add_pd(acc0, _mm256_loadu_pd(a + i));
    double acc = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) acc += a[i];
    return acc;
}

AFFECTUS_AVX2 double sum_squares_avx2(const double* a, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256d x0 = _mm256_loadu_pd(a + i);
        __m256d x1 = _mm256_loadu_pd(a + i + 4);
        acc0 = _mm256_fmadd_pd(x0, x0, acc0);
        acc1 = _mm256_fmadd_pd(x1, x1, acc1);
    }
    for (; i + 4 <= n; i += 4) {
        __m256d x = _mm256_loadu_pd(a + i);
        acc0 = _mm256_fmadd_pd(x, x, acc0);
    }
    double acc = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) acc += a[i] * a[i];
    return acc;
}

AFFECTUS_AVX2 void scale_add_avx2(double* out, const double* in, double alpha, std::size_t n) {
    __m256d va = _mm256_set1_pd(alpha);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d p = _mm256_mul_pd(va, _mm256_loadu_pd(in + i));
        _mm256_storeu_pd(out + i, _mm256_add_pd(_mm256_loadu_pd(out + i), p));
    }
    for (; i < n; ++i) {
        double p = alpha * in[i];
        out[i] = out[i] + p;
    }
}

}  // namespace affectus::kernels::detail

#endif
