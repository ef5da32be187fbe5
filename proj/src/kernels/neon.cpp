#include "kernels_impl.hpp"

#if defined(__aarch64__)
#include <arm_neon.h>

namespace affectus::kernels::detail {

double dot_neon(const double* a, const double* b, std::size_t n) {
    float64x2_t acc0 = vdupq_n_f64(0.0);
    float64x2_t acc1 = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc0 = vfmaq_f64(acc0, vld1q_f64(a + i), vld1q_f64(b + i));
        acc1 = vfmaq_f64(acc1, vld1q_f64(a + i + 2), vld1q_f64(b + i + 2));
    }
    double acc = vaddvq_f64(vaddq_f64(acc0, acc1));
    for (; i < n; ++i) acc += a[i] * b[i];
    return acc;
}

double sum_neon(const double* a, std::size_t n) {
    float64x2_t acc0 = vdupq_n_f64(0.0);
    float64x2_t acc1 = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc0 = vaddq_f64(acc0, vld1q_f64(a + i));
        acc1 = vaddq_f64(acc1, vld1q_f64(a + i + 2));
    }
    double acc = vaddvq_f64(vaddq_f64(acc0, acc1));
    for (; i < n; ++i) acc += a[i];
    return acc;
}

double sum_squares_neon(const double* a, std::size_t n) {
    float64x2_t acc0 = vdupq_n_f64(0.0);
    float64x2_t acc1 = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        float64x2_t x0 = vld1q_f64(a + i);
        float64x2_t x1 = vld1q_f64(a + i + 2);
        acc0 = vfmaq_f64(acc0, x0, x0);
        acc1 = vfmaq_f64(acc1, x1, x1);
    }
    double acc = vaddvq_f64(vaddq_f64(acc0, acc1));
    for (; i < n; ++i) acc += a[i] * a[i];
    return acc;
}

void scale_add_neon(double* out, const double* in, double alpha, std::size_t n) {
    float64x2_t va = vdupq_n_f64(alpha);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        float64x2_t p = vmulq_f64(va, vld1q_f64(in + i));
        vst1q_f64(out + i, vaddq_f64(vld1q_f64(out + i), p));
    }
    for (; i < n; ++i) {
        double p = alpha * in[i];
        out[i] = out[i] + p;
    }
}

}  // namespace affectus::kernels::detail

#endif
