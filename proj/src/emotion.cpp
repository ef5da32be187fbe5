#include "affectus/emotion.hpp"

#include <cmath>
#include <numbers>

#include "affectus/error.hpp"
#include "affectus/kernels.hpp"

namespace affectus {

namespace {

void check_theta(double theta, const char* field) {
    require(theta >= 0.0 && theta <= 1.0, field, "memory coefficient must lie in [0, 1]");
}

void check_forgetful(double theta, const char* field) {
    require(theta >= 0.0 && theta < 1.0, field,
            "memory coefficient must lie in [0, 1); use the absolute-memory routines for 1");
}

}  // namespace

EmotionCurve::EmotionCurve(std::vector<double> samples, double dt,
                           std::optional<SineDescriptor> sine, double bound)
    : samples_(std::move(samples)), dt_(dt), sine_(sine) {
    require(!samples_.empty(), "samples", "emotion curve needs at least one sample");
    require(std::isfinite(dt_) && dt_ > 0.0, "dt", "dt must be positive");
    for (double m : samples_) {
        require(std::isfinite(m), "samples", "emotion samples must be finite");
        require(std::abs(m) <= bound, "samples", "emotion sample exceeds the global bound");
    }
    if (sine_) require(sine_->t0 > 0.0, "sine.t0", "sine step length must be positive");
}

std::vector<std::string> EmotionCurve::warnings() const {
    std::vector<std::string> out;
    if (duration() > kMaxStepSeconds) out.emplace_back("step longer than 10 s");
    return out;
}

double geometric_sum(double theta, double n) {
    if (n <= 0.0) return 0.0;
    if (std::isinf(n)) return theta < 1.0 ? 1.0 / (1.0 - theta) : INFINITY;
    if (theta == 1.0) return n;
    // 1 - theta^n computed without cancellation for theta near 1.
    return -std::expm1(n * std::log(theta)) / (1.0 - theta);
}

EmotionCurve sine_emotion(double P, double t0, int n_samples) {
    require(std::isfinite(t0) && t0 > 0.0, "t0", "t0 must be positive");
    require(n_samples >= 3, "n_samples", "need at least three samples");
    std::vector<double> s(static_cast<std::size_t>(n_samples));
    double last = n_samples - 1;
    for (int k = 0; k < n_samples; ++k) s[k] = P * std::sin(std::numbers::pi * k / last);
    s.front() = 0.0;
    s.back() = 0.0;
    return EmotionCurve(std::move(s), t0 / last, SineDescriptor{P, t0});
}

double elementary_education(const EmotionCurve& curve) {
    if (curve.sine()) return 2.0 * curve.sine()->P * curve.sine()->t0 / std::numbers::pi;
    return kernels::trapezoid(curve.samples(), curve.dt());
}

double education_step(double r, double theta, double R_prev) {
    check_theta(theta, "theta");
    return r + theta * R_prev;
}

EducationTrace education_trace(std::span<const double> elementary,
                               std::span<const double> memory, double R0) {
    require(elementary.size() == memory.size(), "memory",
            "elementary and memory sequences differ in length");
    EducationTrace t;
    t.R0 = R0;
    t.elementary.assign(elementary.begin(), elementary.end());
    t.memory.assign(memory.begin(), memory.end());
    t.cumulative.reserve(elementary.size());
    double R = R0;
    for (std::size_t i = 0; i < elementary.size(); ++i) {
        R = education_step(elementary[i], memory[i], R);
        t.cumulative.push_back(R);
    }
    return t;
}

double uniform_education(double q, double theta, int i) {
    check_forgetful(theta, "theta");
    require(i >= 1, "i", "step index must be positive");
    return q * geometric_sum(theta, i);
}

double limiting_education(double q, double theta) {
    check_forgetful(theta, "theta");
    return q / (1.0 - theta);
}

double forgetting_curve(double r0, double theta, int i) {
    check_theta(theta, "theta");
    require(i >= 0, "i", "step index must be non-negative");
    return r0 * std::pow(theta, i);
}

double cycle_education(double q, double theta, std::span<const CycleSpec> cycles) {
    require(!cycles.empty(), "cycles", "at least one cycle is required");
    check_theta(theta, "theta");
    double F = 0.0;
    for (std::size_t n = 0; n < cycles.size(); ++n) {
        const CycleSpec& c = cycles[n];
        require(c.j >= 1, "cycles.j", "active steps must be positive");
        require(c.k >= 0, "cycles.k", "slack steps must be non-negative");
        F = std::pow(theta, c.k) * (q * geometric_sum(theta, c.j) + std::pow(theta, c.j) * F);
    }
    return F;
}

double memory_function(double F, double q) {
    require(q != 0.0, "q", "memory function needs a nonzero emotion");
    return F / q;
}

SatietyIndicator satiety_indicator(double theta, int k1, int j1) {
    require(theta > 0.0 && theta < 1.0, "theta", "theta must lie in (0, 1)");
    require(j1 >= 1, "j1", "j1 must be positive");
    require(k1 >= 0, "k1", "k1 must be non-negative");
    SatietyIndicator s;
    s.G = std::pow(theta, k1) * (1.0 - std::pow(theta, j1));
    if (k1 == 0) {
        s.theta_star = 0.0;
        s.G_max = 1.0;
        s.degenerate = true;
        return s;
    }
    double ratio = static_cast<double>(k1) / (j1 + k1);
    s.theta_star = std::pow(ratio, 1.0 / j1);
    s.G_max = std::pow(ratio, static_cast<double>(k1) / j1) * j1 / (j1 + k1);
    return s;
}

double truncation_error_bound(double q, double theta, int k) {
    check_forgetful(theta, "theta");
    require(k >= 0, "k", "k must be non-negative");
    return q * std::pow(theta, k) / (1.0 - theta);
}

double general_cycle_education(std::span<const GeneralCycle> cycles) {
    double V = 0.0;
    for (const GeneralCycle& c : cycles) {
        require(c.active_r.size() == c.active_thetas.size(), "active_thetas",
                "active emotions and memory coefficients differ in length");
        for (std::size_t i = 0; i < c.active_r.size(); ++i)
            V = education_step(c.active_r[i], c.active_thetas[i], V);
        for (double th : c.slack_thetas) V = education_step(0.0, th, V);
    }
    return V;
}

std::vector<double> derivative(std::span<const double> y, double dt) {
    require(dt > 0.0, "dt", "dt must be positive");
    std::size_t n = y.size();
    std::vector<double> d(n, 0.0);
    if (n < 2) return d;
    if (n == 2) {
        d[0] = d[1] = (y[1] - y[0]) / dt;
        return d;
    }
    d[0] = (4.0 * (y[1] - y[0]) - (y[2] - y[0])) / (2.0 * dt);
    for (std::size_t i = 1; i + 1 < n; ++i) d[i] = (y[i + 1] - y[i - 1]) / (2.0 * dt);
    d[n - 1] = (4.0 * (y[n - 1] - y[n - 2]) - (y[n - 1] - y[n - 3])) / (2.0 * dt);
    return d;
}

std::vector<double> sum_emotion(std::span<const double> r, std::span<const double> theta,
                                double R_prev, double dt) {
    require(r.size() == theta.size(), "theta", "r(t) and theta(t) grids differ");
    std::vector<double> V = derivative(r, dt);
    std::vector<double> dtheta = derivative(theta, dt);
    kernels::scale_add(V, dtheta, R_prev);
    return V;
}

}  // namespace affectus
