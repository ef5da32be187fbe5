#pragma once

#include <cstddef>

namespace affectus::kernels::detail {

double dot_scalar(const double* a, const double* b, std::size_t n);
double sum_scalar(const double* a, std::size_t n);
double sum_squares_scalar(const double* a, std::size_t n);
void scale_add_scalar(double* out, const double* in, double alpha, std::size_t n);

#if defined(__x86_64__) || defined(__i386__)
bool avx2_supported() noexcept;
double dot_avx2(const double* a, const double* b, std::size_t n);
double sum_avx2(const double* a, std::size_t n);
double sum_squares_avx2(const double* a, std::size_t n);
void scale_add_avx2(double* out, const double* in, double alpha, std::size_t n);
#endif

#if defined(__aarch64__)
double dot_neon(const double* a, const double* b, std::size_t n);
double sum_neon(const double* a, std::size_t n);
double sum_squares_neon(const double* a, std::size_t n);
void scale_add_neon(double* out, const double* in, double alpha, std::size_t n);
#endif

}  // namespace affectus::kernels::detail
