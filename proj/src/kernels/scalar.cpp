#include "kernels_impl.hpp"

namespace affectus::kernels::detail {

double dot_scalar(const double* a, const double* b, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
    return acc;
}

double sum_scalar(const double* a, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += a[i];
    return acc;
}

double sum_squares_scalar(const double* a, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += a[i] * a[i];
    return acc;
}

void scale_add_scalar(double* out, const double* in, double alpha, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        double p = alpha * in[i];
        out[i] = out[i] + p;
    }
}

}  // namespace affectus::kernels::detail
