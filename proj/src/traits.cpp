#include "affectus/traits.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>

#include "affectus/error.hpp"
#include "affectus/kernels.hpp"

namespace affectus {

namespace {

double grid_dt(std::size_t n, double t) {
    require(std::isfinite(t) && t > 0.0, "t", "t must be positive");
    require(n >= 2, "delta_samples", "need at least two samples");
    return t / static_cast<double>(n - 1);
}

}  // namespace

double ability(std::span<const double> delta_samples, double t) {
    double dt = grid_dt(delta_samples.size(), t);
    double integral = kernels::trapezoid(delta_samples, dt);
    return (delta_samples.back() * t - integral) / (t * t);
}

double ability_bound(double q, std::span<const double> thetas, std::span<const double> j,
                     std::span<const double> a, double t) {
    require(thetas.size() == a.size() && j.size() == a.size(), "a",
            "one memory coefficient and step count per goal component");
    require(t > 0.0, "t", "t must be positive");
    double num = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        require(thetas[i] >= 0.0 && thetas[i] < 1.0, "thetas", "memory coefficients must lie in [0, 1)");
        num += std::abs(a[i]) * geometric_sum(thetas[i], j[i]);
    }
    double aa = kernels::sum_squares(a);
    require(aa > 0.0, "a", "goal must be nonzero");
    return 4.0 * q * num / (t * aa);
}

AbilityReport ability_scopes(std::span<const double> goal,
                             std::span<const std::vector<double>> educations, double t,
                             double epsilon) {
    std::size_t m = goal.size();
    require(m >= 1, "goal", "goal must be non-empty");
    require(educations.size() == m, "educations", "one education trace per goal component");
    if (m > kMaxScopeComponents)
        fail(ErrorCode::resource_limit, "goal", "too many components for subset enumeration");
    std::size_t n = educations.front().size();
    for (const auto& e : educations)
        require(e.size() == n, "educations", "education traces differ in length");
    double dt = grid_dt(n, t);

    // Per-component work and end value; delta_S is linear in the components.
    std::vector<double> end(m), integral(m);
    for (std::size_t i = 0; i < m; ++i) {
        end[i] = educations[i].back();
        integral[i] = kernels::trapezoid(educations[i], dt);
    }

    AbilityReport r;
    r.F = -INFINITY;
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << m); ++mask) {
        double aa = 0.0, e = 0.0, in = 0.0;
        Scope s;
        for (std::size_t i = 0; i < m; ++i) {
            if (!(mask >> i & 1)) continue;
            s.components.push_back(i);
            aa += goal[i] * goal[i];
            e += goal[i] * end[i];
            in += goal[i] * integral[i];
        }
        if (aa == 0.0) continue;
        s.F = (e / aa * t - in / aa) / (t * t);
        r.F = std::max(r.F, s.F);
        r.all.push_back(std::move(s));
    }
    if (r.all.empty()) fail(ErrorCode::invalid_argument, "goal", "goal must be nonzero");
    double tol = epsilon * std::max(1.0, std::abs(r.F));
    for (const Scope& s : r.all)
        if (s.F >= r.F - tol) r.scopes.push_back(s);
    r.p = static_cast<int>(r.scopes.size());
    return r;
}

WorkWillpower work_and_willpower(std::span<const double> delta_samples, double t) {
    double dt = grid_dt(delta_samples.size(), t);
    WorkWillpower w;
    w.X = kernels::trapezoid(delta_samples, dt);
    w.Y = w.X / t;
    return w;
}

double willpower_bound(double q, double theta, std::span<const double> a) {
    require(theta >= 0.0 && theta < 1.0, "theta",
            "willpower is unbounded for absolute memory");
    double aa = kernels::sum_squares(a);
    require(aa > 0.0, "a", "goal must be nonzero");
    double abs_sum = 0.0;
    for (double ai : a) abs_sum += std::abs(ai);
    return 2.0 * q / ((1.0 - theta) * (1.0 - theta)) * abs_sum / aa;
}

double work_bound(double q, double theta, std::span<const double> a, double t) {
    require(t >= 0.0, "t", "t must be non-negative");
    return willpower_bound(q, theta, a) * t;
}

bool danger_check(const DangerProfile& profile) {
    return profile.all_theta_one && profile.tantamount_positive;
}

EfficiencyResult efficiency(const std::function<std::vector<double>(double)>& delta_fn,
                            double theta_actual, double t, double theta_grid_step) {
    require(theta_grid_step > 0.0 && theta_grid_step < 1.0, "theta_grid_step",
            "grid step must lie in (0, 1)");
    require(theta_actual >= 0.0 && theta_actual <= 1.0, "theta_actual",
            "memory coefficient must lie in [0, 1]");
    auto work = [&](double th) {
        std::vector<double> d = delta_fn(th);
        return kernels::trapezoid(d, grid_dt(d.size(), t));
    };
    EfficiencyResult r;
    r.X = work(theta_actual);
    r.rho = std::abs(r.X);
    r.theta_max = theta_actual;
    double signed_max = r.X;
    for (long k = 0;; ++k) {
        double th = k * theta_grid_step;
        if (th >= 1.0) break;
        double w = work(th);
        if (std::abs(w) > r.rho) {
            r.rho = std::abs(w);
            r.theta_max = th;
            signed_max = w;
        }
    }
    if (r.rho == 0.0)
        fail(ErrorCode::undefined_efficiency, "delta_fn", "no memory coefficient yields any work");
    double sign = signed_max > 0.0 ? 1.0 : (signed_max < 0.0 ? -1.0 : 0.0);
    r.mu = std::clamp(r.X * sign / r.rho, -1.0, 1.0);
    return r;
}

Temperament classify_temperament(double N) {
    constexpr double tol = 1e-12;
    if (N >= 0.8 - tol) return Temperament::choleric;
    if (N >= 0.5 - tol) return Temperament::sanguine;
    if (N >= 0.3 - tol) return Temperament::phlegmatic;
    return Temperament::melancholic;
}

TemperamentReport temperament(std::span<const std::vector<EmotionCurve>> robots) {
    require(!robots.empty(), "curves", "no robots given");
    TemperamentReport r;
    for (const auto& curves : robots) {
        require(!curves.empty(), "curves", "each robot needs at least one emotion curve");
        double best = 0.0;
        for (const EmotionCurve& c : curves) {
            if (c.sine()) {
                best = std::max(best, std::abs(c.sine()->P) * std::numbers::pi / c.sine()->t0);
                continue;
            }
            for (double d : derivative(c.samples(), c.dt())) best = std::max(best, std::abs(d));
        }
        r.max_rates.push_back(best);
    }
    double top = *std::max_element(r.max_rates.begin(), r.max_rates.end());
    if (!(top > 0.0))
        fail(ErrorCode::invalid_argument, "curves", "all emotions are constant; temperament undefined");
    for (double s : r.max_rates) r.L_values.push_back(s / top);
    r.group_N = kernels::sum(r.L_values) / static_cast<double>(r.L_values.size());
    r.label = classify_temperament(r.group_N);
    return r;
}

std::vector<double> interpolate_steps(std::span<const double> step_values, double start_value,
                                      std::size_t per_step) {
    require(per_step >= 1, "per_step", "need at least one sample per step");
    std::vector<double> out;
    out.reserve(step_values.size() * per_step + 1);
    out.push_back(start_value);
    double prev = start_value;
    for (double v : step_values) {
        for (std::size_t k = 1; k <= per_step; ++k) {
            double w = static_cast<double>(k) / static_cast<double>(per_step);
            out.push_back(prev + (v - prev) * w);
        }
        prev = v;
    }
    return out;
}

}  // namespace affectus
