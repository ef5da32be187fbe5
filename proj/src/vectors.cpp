#include "affectus/vectors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "affectus/error.hpp"
#include "affectus/kernels.hpp"

namespace affectus {

namespace {

void same_kind(const PsychVector& a, const PsychVector& b) {
    require(a.kind == b.kind, "kind", "vectors of different kinds cannot be compared");
}

double angle(double c) { return std::acos(std::clamp(c, -1.0, 1.0)); }

}  // namespace

double norm(std::span<const double> v) { return std::sqrt(kernels::sum_squares(v)); }

double cos_angle(std::span<const double> a, std::span<const double> b) {
    require(a.size() == b.size(), "b", "vectors differ in dimension");
    require(!a.empty(), "a", "vectors must be non-empty");
    double na = norm(a), nb = norm(b);
    if (na == 0.0 || nb == 0.0) fail(ErrorCode::undefined_angle, "a", "angle with a zero vector");
    return std::clamp(kernels::dot(a, b) / (na * nb), -1.0, 1.0);
}

double cos_angle(const PsychVector& a, const PsychVector& b) {
    same_kind(a, b);
    return cos_angle(a.components, b.components);
}

Alignment classify_alignment(const PsychVector& a, const PsychVector& b, double epsilon) {
    double c = cos_angle(a, b);
    if (std::abs(c) < epsilon) return Alignment::unstable;
    return c > 0.0 ? Alignment::one_goal : Alignment::opposite_goals;
}

bool conflict_peak(const PsychVector& a_edu, const PsychVector& b_edu, const PsychVector& a_emo,
                   const PsychVector& b_emo, double epsilon) {
    double ce = cos_angle(a_edu, b_edu);
    double cm = cos_angle(a_emo, b_emo);
    return ce <= -1.0 + epsilon && cm <= -1.0 + epsilon &&
           std::abs(norm(a_edu.components) - norm(b_edu.components)) < epsilon &&
           std::abs(norm(a_emo.components) - norm(b_emo.components)) < epsilon;
}

std::vector<std::vector<double>> state_vectors(const GoalProgress& progress) {
    std::vector<std::vector<double>> W;
    W.reserve(progress.steps.size());
    for (const PsychVector& R : progress.steps) {
        std::vector<double> w = W.empty() ? std::vector<double>(R.components.size(), 0.0) : W.back();
        require(w.size() == R.components.size(), "steps", "steps differ in dimension");
        kernels::scale_add(w, R.components, 1.0);
        W.push_back(std::move(w));
    }
    return W;
}

GoalMetrics goal_metrics(const Goal& goal, const GoalProgress& progress, int k) {
    const auto& A = goal.components;
    require(!A.empty(), "goal", "goal must be non-empty");
    double AA = kernels::sum_squares(A);
    require(AA > 0.0, "goal", "goal must be nonzero");
    require(goal.steps_budget >= 1, "goal.steps_budget", "step budget must be positive");
    int n = static_cast<int>(progress.steps.size());
    require(k >= 1 && k <= n, "k", "step index out of range");
    for (const auto& s : progress.steps)
        require(s.components.size() == A.size(), "steps", "step and goal differ in dimension");
    if (progress.times)
        require(progress.times->size() == progress.steps.size(), "times",
                "one duration per step is required");

    auto W = state_vectors(progress);
    int K = std::min(goal.steps_budget, n);
    const auto& Rk = progress.steps[k - 1].components;
    const auto& Wk = W[k - 1];
    const auto& WK = W[K - 1];

    GoalMetrics m;
    m.cos_beta = cos_angle(A, Rk);
    m.beta = angle(m.cos_beta);
    m.cos_alpha = cos_angle(A, Wk);
    m.alpha = angle(m.cos_alpha);
    m.chi = kernels::dot(A, Rk) / AA;
    m.lambda = kernels::dot(A, Wk) / AA;
    m.delta = kernels::dot(A, WK) / AA;
    m.cos_psi = cos_angle(A, WK);
    m.psi = angle(m.cos_psi);
    if (progress.times) {
        double T = 0.0;
        for (int i = 0; i < K; ++i) T += (*progress.times)[i];
        m.T = T;
    }
    return m;
}

ScalarGoalMetrics scalar_goal_metrics(double A, double W_K, double R_k, double W_k) {
    require(A != 0.0, "A", "goal must be nonzero");
    return {W_K / A, R_k / A, W_k / A};
}

std::vector<std::size_t> goalize_rank(std::span<const GoalExtent> extents) {
    std::vector<std::size_t> order(extents.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        const GoalExtent& a = extents[i];
        const GoalExtent& b = extents[j];
        if (a.delta != b.delta) return a.delta > b.delta;
        if (a.cos_psi != b.cos_psi) return a.cos_psi > b.cos_psi;
        if (a.T && b.T && *a.T != *b.T) return *a.T < *b.T;
        return false;
    });
    return order;
}

std::vector<std::size_t> rank_unit_goal(std::span<const std::vector<double>> B) {
    std::size_t n = B.size();
    std::vector<double> delta(n), cpsi(n);
    for (std::size_t j = 0; j < n; ++j) {
        require(B[j].size() == B.front().size() && !B[j].empty(), "B",
                "rank vectors differ in dimension");
        double m = static_cast<double>(B[j].size());
        double s = kernels::sum(B[j]);
        double ss = kernels::sum_squares(B[j]);
        delta[j] = s / std::sqrt(m);
        cpsi[j] = ss > 0.0 ? s / (std::sqrt(ss) * std::sqrt(m)) : 0.0;
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        if (delta[i] != delta[j]) return delta[i] < delta[j];
        return cpsi[i] > cpsi[j];
    });
    return order;
}

std::size_t best_goal_row(std::span<const Goal> rows, const GoalProgress& progress) {
    require(!rows.empty(), "goal_matrix", "goal matrix is empty");
    require(!progress.steps.empty(), "steps", "no steps taken");
    auto W = state_vectors(progress);
    std::size_t best = 0;
    double best_delta = -INFINITY;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const auto& A = rows[r].components;
        require(A.size() == W.back().size(), "goal_matrix", "goal row differs in dimension");
        double AA = kernels::sum_squares(A);
        require(AA > 0.0, "goal_matrix", "goal row must be nonzero");
        int K = std::min<int>(std::max(rows[r].steps_budget, 1), static_cast<int>(W.size()));
        double d = kernels::dot(A, W[K - 1]) / AA;
        if (d > best_delta) {
            best_delta = d;
            best = r;
        }
    }
    return best;
}

RelationshipMeasures relationship_measures(const PsychVector& a_edu, const PsychVector& b_edu,
                                           const PsychVector& x_emo, const PsychVector& y_emo,
                                           double epsilon) {
    RelationshipMeasures r;
    r.gamma = cos_angle(a_edu, b_edu);
    r.phi = cos_angle(x_emo, y_emo);
    if (std::abs(r.gamma) < epsilon || std::abs(r.phi) < epsilon)
        r.classification = Relationship::borderline;
    else if (r.gamma * r.phi < 0.0)
        r.classification = Relationship::mixed;
    else
        r.classification = r.gamma > 0.0 ? Relationship::concordance : Relationship::rivalry;
    return r;
}

bool antipodal_check(std::span<const double> a, std::span<const double> b, double epsilon) {
    require(a.size() == b.size(), "b", "vectors differ in dimension");
    if (a.size() < 2 || a.size() > 3)
        fail(ErrorCode::out_of_scope, "a", "antipodal test only holds in two or three dimensions");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::abs(a[i] + b[i]) >= epsilon) return false;
    return true;
}

}  // namespace affectus
