#include "affectus/groups.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "affectus/emotion.hpp"
#include "affectus/error.hpp"

namespace affectus {

double sum_education(std::span<const double> educations) {
    require(!educations.empty(), "educations", "group has no members");
    // Plain loop: simulation logs must not depend on the kernel variant.
    double s = 0.0;
    for (double R : educations) s += R;
    return s;
}

double sum_education(const GroupState& state) { return sum_education(state.educations); }

bool re_education_feasible(double W_k, double W_p, double epsilon) {
    if (W_p == 0.0) return false;
    double Q = W_k / W_p;
    return std::abs(Q + 1.0) > epsilon && std::abs(W_k) > std::abs(W_p) && W_k * W_p < 0.0;
}

Confrontation confrontation_check(std::span<const double> educations, double epsilon) {
    require(epsilon > 0.0, "epsilon", "epsilon must be positive");
    require(!educations.empty(), "educations", "group has no members");
    Confrontation c;
    bool any_large = false;
    for (double R : educations) {
        if (R > 0.0)
            c.positive_sum += R;
        else
            c.rest_sum += R;
        any_large = any_large || std::abs(R) >= epsilon;
    }
    double total = sum_education(educations);
    c.confrontation = std::abs(total) < epsilon && any_large;
    if (c.rest_sum != 0.0) c.ratio = c.positive_sum / c.rest_sum;
    c.re_education_feasible = re_education_feasible(c.positive_sum, c.rest_sum, epsilon);
    return c;
}

Confrontation confrontation_check(const GroupState& state, double epsilon) {
    return confrontation_check(state.educations, epsilon);
}

std::vector<RivalGroup> rival_risk_groups(std::span<const double> educations, double epsilon,
                                          std::size_t max_n) {
    std::size_t n = educations.size();
    require(n >= 2, "educations", "need at least two robots");
    require(epsilon > 0.0, "epsilon", "epsilon must be positive");
    if (n > max_n || n > 30)
        fail(ErrorCode::resource_limit, "educations", "too many robots for exhaustive search");
    std::vector<RivalGroup> out;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        double total = 0.0;
        bool pos = false, neg = false;
        for (std::size_t i = 0; i < n; ++i) {
            if (!(mask >> i & 1)) continue;
            total += educations[i];
            pos = pos || educations[i] > 0.0;
            neg = neg || educations[i] < 0.0;
        }
        if (!pos || !neg || std::abs(total) >= epsilon) continue;
        RivalGroup g;
        for (std::size_t i = 0; i < n; ++i) {
            if (!(mask >> i & 1)) continue;
            (educations[i] > 0.0 ? g.side_a : g.side_b).push_back(i);
        }
        g.imbalance = std::abs(total);
        out.push_back(std::move(g));
    }
    std::stable_sort(out.begin(), out.end(), [](const RivalGroup& a, const RivalGroup& b) {
        return a.imbalance < b.imbalance;
    });
    return out;
}

ConflictTheta conflict_theta(double theta1, double q1, double q2) {
    require(q1 != 0.0, "q1", "q1 must be nonzero");
    require(theta1 >= 0.0 && theta1 < 1.0, "theta1", "theta1 must lie in [0, 1)");
    ConflictTheta c;
    c.theta = 1.0 - (1.0 - theta1) * q2 / q1;
    c.in_range = c.theta >= 0.0 && c.theta < 1.0;
    return c;
}

ConflictCondition conflict_condition(double q1, double theta1, int j, double q2, double theta2,
                                     int i, double epsilon) {
    require(theta1 >= 0.0 && theta1 < 1.0, "theta1", "theta1 must lie in [0, 1)");
    require(theta2 >= 0.0 && theta2 < 1.0, "theta2", "theta2 must lie in [0, 1)");
    require(j >= 1, "j", "j must be positive");
    require(i >= 1, "i", "i must be positive");
    ConflictCondition c;
    c.lhs = q1 * geometric_sum(theta1, j);
    c.rhs = q2 * geometric_sum(theta2, i);
    c.conflict = std::abs(c.lhs - c.rhs) < epsilon;
    return c;
}

bool emotional_conflict(const GroupState& state, double epsilon) {
    if (!state.emotions) fail(ErrorCode::invalid_argument, "emotions", "emotions are required");
    require(!state.emotions->empty(), "emotions", "group has no members");
    double s = 0.0;
    for (double M : *state.emotions) s += M;
    return std::abs(s) < epsilon;
}

std::optional<double> fellowship_value(std::span<const double> educations) {
    if (educations.empty()) return std::nullopt;
    for (double R : educations)
        if (!(R > 0.0)) return std::nullopt;
    return *std::min_element(educations.begin(), educations.end());
}

std::optional<int> fellowship_steps(double q, double theta, double R0, double P0) {
    require(q > 0.0, "q", "q must be positive");
    require(theta >= 0.0 && theta < 1.0, "theta", "theta must lie in [0, 1)");
    double U = q / (1.0 - theta);
    auto direct = [&](int j) { return q * geometric_sum(theta, j) + std::pow(theta, j) * R0; };
    if (direct(1) >= P0) return 1;
    // f moves monotonically from R0 toward U, so beyond step 1 it only helps when R0 < U.
    if (R0 >= U || U <= P0) return std::nullopt;
    if (theta == 0.0) return std::nullopt;
    double est = std::log((U - P0) / (U - R0)) / std::log(theta);
    int j = std::max(1, static_cast<int>(std::ceil(est)) - 2);
    while (direct(j) < P0) {
        ++j;
        if (j > 100000000) return std::nullopt;
    }
    while (j > 1 && direct(j - 1) >= P0) --j;
    return j;
}

}  // namespace affectus
