#pragma once

#include <cstddef>
#include <span>
#include <string_view>

// Dense double-precision reductions used across the library. Each variant
// implements the same contract; the active one is picked once at startup.
namespace affectus::kernels {

struct KernelSet {
    const char* name;
    double (*dot)(const double* a, const double* b, std::size_t n);
    double (*sum)(const double* a, std::size_t n);
    double (*sum_squares)(const double* a, std::size_t n);
    // out[i] += alpha * in[i]; multiply then add, no fused rounding.
    void (*scale_add)(double* out, const double* in, double alpha, std::size_t n);
};

const KernelSet& scalar() noexcept;
// nullptr when the variant is not compiled in or the CPU lacks support.
const KernelSet* avx2() noexcept;
const KernelSet* neon() noexcept;

// Honors AFFECTUS_KERNELS=scalar to force the reference path.
const KernelSet& active() noexcept;

double dot(std::span<const double> a, std::span<const double> b);
double sum(std::span<const double> a) noexcept;
double sum_squares(std::span<const double> a) noexcept;
void scale_add(std::span<double> out, std::span<const double> in, double alpha);

// Trapezoid rule over a uniform grid with spacing dt.
double trapezoid(std::span<const double> samples, double dt) noexcept;

}  // namespace affectus::kernels
