#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "affectus/emotion.hpp"

namespace affectus {

struct Scope {
    std::vector<std::size_t> components;
    double F = 0.0;
};

struct AbilityReport {
    double F = 0.0;
    int p = 0;                 // number of scopes at the maximum
    std::vector<Scope> scopes; // the maximal scopes, in enumeration order
    std::vector<Scope> all;    // every non-empty subset
};

struct WorkWillpower {
    double X = 0.0;
    double Y = 0.0;
};

struct DangerProfile {
    bool all_theta_one = false;
    bool tantamount_positive = false;
};

enum class Temperament { melancholic, phlegmatic, sanguine, choleric };

struct TemperamentReport {
    std::vector<double> max_rates;  // max |dM/dt| per robot
    std::vector<double> L_values;
    double group_N = 0.0;
    Temperament label = Temperament::melancholic;
};

struct EfficiencyResult {
    double mu = 0.0;
    double rho = 0.0;
    double theta_max = 0.0;
    double X = 0.0;
};

inline constexpr std::size_t kMaxScopeComponents = 20;

// Samples of delta(tau) cover [0, t] uniformly.
double ability(std::span<const double> delta_samples, double t);
// j_i may be infinite for the long-run limit.
double ability_bound(double q, std::span<const double> thetas, std::span<const double> j,
                     std::span<const double> a, double t);
AbilityReport ability_scopes(std::span<const double> goal,
                             std::span<const std::vector<double>> educations, double t,
                             double epsilon = 1e-9);
WorkWillpower work_and_willpower(std::span<const double> delta_samples, double t);
double willpower_bound(double q, double theta, std::span<const double> a);
double work_bound(double q, double theta, std::span<const double> a, double t);
bool danger_check(const DangerProfile& profile);
// Sweeps a single memory coefficient over {0, step, 2 step, ...} below 1, plus theta_actual.
EfficiencyResult efficiency(const std::function<std::vector<double>(double)>& delta_fn,
                            double theta_actual, double t, double theta_grid_step);
Temperament classify_temperament(double N);
TemperamentReport temperament(std::span<const std::vector<EmotionCurve>> robots);

// Piecewise-linear samples between end-of-step values, per_step samples per step.
std::vector<double> interpolate_steps(std::span<const double> step_values, double start_value,
                                      std::size_t per_step);

}  // namespace affectus
