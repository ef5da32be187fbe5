#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace affectus {

struct EquivalentProcess {
    double theta = 0.0;
    double q = 0.0;
    double residual = 0.0;
    bool valid = false;
    std::optional<std::vector<int>> step_map;
    std::vector<std::string> warnings;
};

struct GeneralFitOptions {
    double delta = 1e-6;  // theta stays in [0, 1 - delta]
    double q_max = 1e12;
    double coarse_step = 1e-3;
    double tolerance = 1e-12;
};

// Inclusive ranges walked as lo + k * step.
struct MismatchedGrid {
    double q_lo = 0.1;
    double q_hi = 2.9;
    double q_step = 0.1;
    double theta_lo = 0.09;
    double theta_hi = 0.99;
    double theta_step = 0.1;
    int j_max = 100;
};

struct StepTimes {
    double t_prev = 0.0;
    double t = 1.0;
};

struct MemoryLine {
    double a = 0.0;
    double b = 1.0;
};

bool process_valid(double theta, double q);

EquivalentProcess fit_linear(std::span<const double> R);
EquivalentProcess fit_general(std::span<const double> R, const GeneralFitOptions& opt = {});
EquivalentProcess fit_mismatched(std::span<const double> R, const MismatchedGrid& grid = {});
// Objective of the mismatched model for fixed (q, theta, j).
double mismatched_objective(std::span<const double> R, double q, double theta,
                            std::span<const int> j);
double general_objective(std::span<const double> R, double theta, double q);
double limiting_error_bound(double q, double theta, double M_hi, double theta_hi, double M_lo,
                            double theta_lo);
std::vector<MemoryLine> memory_coeff_function(std::span<const double> R,
                                              std::span<const StepTimes> steps);
std::vector<MemoryLine> memory_coeff_function(double theta, std::span<const StepTimes> steps);
double fit_absolute(std::span<const double> R);

}  // namespace affectus
