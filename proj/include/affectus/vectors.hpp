#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace affectus {

enum class VectorKind { education, emotion };

struct PsychVector {
    std::vector<double> components;
    VectorKind kind = VectorKind::education;
};

struct Goal {
    std::vector<double> components;
    int steps_budget = 1;
};

struct GoalProgress {
    std::vector<PsychVector> steps;
    std::optional<std::vector<double>> times;
};

enum class Alignment { one_goal, opposite_goals, unstable };

enum class Relationship { concordance, rivalry, borderline, mixed };

struct GoalMetrics {
    double cos_beta = 0.0;   // step k against the goal
    double beta = 0.0;
    double cos_alpha = 0.0;  // state after k steps against the goal
    double alpha = 0.0;
    double chi = 0.0;
    double lambda = 0.0;
    double delta = 0.0;      // at the budget step K
    double cos_psi = 0.0;
    double psi = 0.0;
    std::optional<double> T;
};

struct ScalarGoalMetrics {
    double delta = 0.0;
    double chi = 0.0;
    double lambda = 0.0;
};

struct GoalExtent {
    double delta = 0.0;
    double cos_psi = 0.0;
    std::optional<double> T;
};

struct RelationshipMeasures {
    double gamma = 0.0;
    double phi = 0.0;
    Relationship classification = Relationship::borderline;
};

double norm(std::span<const double> v);
double cos_angle(std::span<const double> a, std::span<const double> b);
double cos_angle(const PsychVector& a, const PsychVector& b);
Alignment classify_alignment(const PsychVector& a, const PsychVector& b, double epsilon = 1e-9);
bool conflict_peak(const PsychVector& a_edu, const PsychVector& b_edu, const PsychVector& a_emo,
                   const PsychVector& b_emo, double epsilon);
// Running sums W_1..W_n of the steps.
std::vector<std::vector<double>> state_vectors(const GoalProgress& progress);
GoalMetrics goal_metrics(const Goal& goal, const GoalProgress& progress, int k);
ScalarGoalMetrics scalar_goal_metrics(double A, double W_K, double R_k, double W_k);
std::vector<std::size_t> goalize_rank(std::span<const GoalExtent> extents);
std::vector<std::size_t> rank_unit_goal(std::span<const std::vector<double>> B);
std::size_t best_goal_row(std::span<const Goal> rows, const GoalProgress& progress);
RelationshipMeasures relationship_measures(const PsychVector& a_edu, const PsychVector& b_edu,
                                           const PsychVector& x_emo, const PsychVector& y_emo,
                                           double epsilon = 1e-9);
bool antipodal_check(std::span<const double> a, std::span<const double> b, double epsilon);

}  // namespace affectus
