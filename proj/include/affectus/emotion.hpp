#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace affectus {

// Upper bound on |M(t)| in bit/s.
inline constexpr double kDefaultEmotionBound = 1e6;
// Longest step the model assumes, in seconds.
inline constexpr double kMaxStepSeconds = 10.0;

struct SineDescriptor {
    double P = 0.0;
    double t0 = 1.0;
};

class EmotionCurve {
public:
    EmotionCurve(std::vector<double> samples, double dt,
                 std::optional<SineDescriptor> sine = std::nullopt,
                 double bound = kDefaultEmotionBound);

    const std::vector<double>& samples() const noexcept { return samples_; }
    double dt() const noexcept { return dt_; }
    const std::optional<SineDescriptor>& sine() const noexcept { return sine_; }
    std::size_t size() const noexcept { return samples_.size(); }
    double duration() const noexcept { return dt_ * static_cast<double>(samples_.size() - 1); }
    std::vector<std::string> warnings() const;

private:
    std::vector<double> samples_;
    double dt_;
    std::optional<SineDescriptor> sine_;
};

struct EducationTrace {
    std::vector<double> elementary;
    std::vector<double> memory;
    std::vector<double> cumulative;
    double R0 = 0.0;
};

struct CycleSpec {
    int j = 1;
    int k = 0;
};

struct GeneralCycle {
    std::vector<double> slack_thetas;
    std::vector<double> active_r;
    std::vector<double> active_thetas;
};

struct SatietyIndicator {
    double G = 0.0;
    double theta_star = 0.0;
    double G_max = 0.0;
    // Set when k1 = 0: the maximum sits at the boundary theta = 0.
    bool degenerate = false;
};

// sum_{k<n} theta^k, exact at theta = 1.
double geometric_sum(double theta, double n);

EmotionCurve sine_emotion(double P, double t0, int n_samples);
double elementary_education(const EmotionCurve& curve);
double education_step(double r, double theta, double R_prev);
EducationTrace education_trace(std::span<const double> elementary,
                               std::span<const double> memory, double R0 = 0.0);
double uniform_education(double q, double theta, int i);
double limiting_education(double q, double theta);
double forgetting_curve(double r0, double theta, int i);
double cycle_education(double q, double theta, std::span<const CycleSpec> cycles);
double memory_function(double F, double q);
SatietyIndicator satiety_indicator(double theta, int k1, int j1);
double truncation_error_bound(double q, double theta, int k);
double general_cycle_education(std::span<const GeneralCycle> cycles);

// Central differences inside, second-order one-sided at the ends.
std::vector<double> derivative(std::span<const double> y, double dt);
std::vector<double> sum_emotion(std::span<const double> r, std::span<const double> theta,
                                double R_prev, double dt);

}  // namespace affectus
