#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace affectus {

inline constexpr double kDefaultEpsilon = 1e-9;

struct GroupState {
    std::vector<double> educations;
    std::optional<std::vector<double>> emotions;
};

struct Confrontation {
    bool confrontation = false;
    // W_pos / W_rest for the positive-versus-rest split; absent when W_rest = 0.
    std::optional<double> ratio;
    double positive_sum = 0.0;
    double rest_sum = 0.0;
    bool re_education_feasible = false;
};

struct RivalGroup {
    std::vector<std::size_t> side_a;  // positive members
    std::vector<std::size_t> side_b;  // non-positive members
    double imbalance = 0.0;
};

struct ConflictTheta {
    double theta = 0.0;
    bool in_range = false;
};

struct ConflictCondition {
    double lhs = 0.0;
    double rhs = 0.0;
    bool conflict = false;
};

double sum_education(const GroupState& state);
double sum_education(std::span<const double> educations);
bool re_education_feasible(double W_k, double W_p, double epsilon = kDefaultEpsilon);
Confrontation confrontation_check(const GroupState& state, double epsilon);
Confrontation confrontation_check(std::span<const double> educations, double epsilon);
// Every subset holding both signs whose total is within epsilon of zero.
std::vector<RivalGroup> rival_risk_groups(std::span<const double> educations, double epsilon,
                                          std::size_t max_n = 16);
ConflictTheta conflict_theta(double theta1, double q1, double q2);
ConflictCondition conflict_condition(double q1, double theta1, int j, double q2, double theta2,
                                     int i, double epsilon = kDefaultEpsilon);
bool emotional_conflict(const GroupState& state, double epsilon);
std::optional<double> fellowship_value(std::span<const double> educations);
std::optional<int> fellowship_steps(double q, double theta, double R0, double P0);

}  // namespace affectus
