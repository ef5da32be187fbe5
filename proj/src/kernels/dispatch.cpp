#include "affectus/kernels.hpp"

#include <cstdlib>
#include <cstring>

#include "affectus/error.hpp"
#include "kernels_impl.hpp"

namespace affectus::kernels {

namespace {

constexpr KernelSet kScalar{"scalar", detail::dot_scalar, detail::sum_scalar,
                            detail::sum_squares_scalar, detail::scale_add_scalar};

#if defined(__x86_64__) || defined(__i386__)
constexpr KernelSet kAvx2{"avx2", detail::dot_avx2, detail::sum_avx2, detail::sum_squares_avx2,
                          detail::scale_add_avx2};
#endif

#if defined(__aarch64__)
constexpr KernelSet kNeon{"neon", detail::dot_neon, detail::sum_neon, detail::sum_squares_neon,
                          detail::scale_add_neon};
#endif

const KernelSet& select() noexcept {
    const char* forced = std::getenv("AFFECTUS_KERNELS");
    if (forced && std::strcmp(forced, "scalar") == 0) return kScalar;
    if (const KernelSet* k = avx2()) return *k;
    if (const KernelSet* k = neon()) return *k;
    return kScalar;
}

}  // namespace

const KernelSet& scalar() noexcept { return kScalar; }

const KernelSet* avx2() noexcept {
#if defined(__x86_64__) || defined(__i386__)
    static const bool ok = detail::avx2_supported();
    return ok ? &kAvx2 : nullptr;
#else
    return nullptr;
#endif
}

const KernelSet* neon() noexcept {
#if defined(__aarch64__)
    return &kNeon;
#else
    return nullptr;
#endif
}

const KernelSet& active() noexcept {
    static const KernelSet& k = select();
    return k;
}

double dot(std::span<const double> a, std::span<const double> b) {
    require(a.size() == b.size(), "b", "dot: length mismatch");
    return active().dot(a.data(), b.data(), a.size());
}

double sum(std::span<const double> a) noexcept { return active().sum(a.data(), a.size()); }

double sum_squares(std::span<const double> a) noexcept {
    return active().sum_squares(a.data(), a.size());
}

void scale_add(std::span<double> out, std::span<const double> in, double alpha) {
    require(out.size() == in.size(), "in", "scale_add: length mismatch");
    active().scale_add(out.data(), in.data(), alpha, out.size());
}

double trapezoid(std::span<const double> samples, double dt) noexcept {
    std::size_t n = samples.size();
    if (n < 2) return 0.0;
    double inner = active().sum(samples.data() + 1, n - 2);
    return dt * (inner + 0.5 * (samples.front() + samples.back()));
}

}  // namespace affectus::kernels
