#include "affectus/partition.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "affectus/error.hpp"

namespace affectus {

std::vector<double> lagrange_targets(std::span<const int> N, double A) {
    std::size_t n = N.size();
    require(n >= 2, "N", "need at least two sub-groups");
    for (int Ni : N) require(Ni >= 1, "N", "group sizes must be positive");

    // Unknowns F_1..F_n, lambda.
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(n + 1, n + 1);
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n + 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            M(i, i) += 2.0 * N[i];
            M(i, j) -= 2.0 * N[j];
        }
        M(i, n) = -1.0;
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
        M(n - 1, i) += 2.0 * N[i];
        M(n - 1, n - 1) -= 2.0 * N[n - 1];
    }
    M(n - 1, n) = 1.0;
    for (std::size_t i = 0; i < n; ++i) M(n, i) = N[i];
    rhs(n) = A;

    Eigen::FullPivLU<Eigen::MatrixXd> lu(M);
    if (!lu.isInvertible())
        fail(ErrorCode::singular_fit, "N", "Lagrange system is singular");
    Eigen::VectorXd x = lu.solve(rhs);
    return std::vector<double>(x.data(), x.data() + n);
}

double tantamount_objective(std::span<const int> N, std::span<const double> F) {
    require(N.size() == F.size(), "F", "sizes and averages differ in length");
    double J = 0.0;
    for (std::size_t i = 0; i < N.size(); ++i)
        for (std::size_t j = i + 1; j < N.size(); ++j) {
            double d = N[i] * F[i] - N[j] * F[j];
            J += d * d;
        }
    return J;
}

double tantamount_objective(const Partition& p) { return tantamount_objective(p.sizes, p.averages); }

Partition make_partition(std::span<const double> educations,
                         std::vector<std::vector<std::size_t>> groups) {
    Partition p;
    for (const auto& g : groups) {
        require(!g.empty(), "groups", "groups must be non-empty");
        double s = 0.0;
        for (std::size_t i : g) {
            require(i < educations.size(), "groups", "robot index out of range");
            s += educations[i];
        }
        p.sizes.push_back(static_cast<int>(g.size()));
        p.averages.push_back(s / static_cast<double>(g.size()));
    }
    p.groups = std::move(groups);
    return p;
}

TantamountResult enumerate_tantamount(std::span<const double> educations, std::span<const int> N) {
    std::size_t n = educations.size();
    require(!N.empty(), "N", "need at least one group");
    for (int Ni : N) require(Ni >= 1, "N", "group sizes must be positive");
    require(static_cast<std::size_t>(std::accumulate(N.begin(), N.end(), 0)) == n, "N",
            "group sizes must add up to the robot count");
    if (n > kMaxEnumeratedRobots)
        fail(ErrorCode::resource_limit, "educations", "too many robots for exhaustive search");

    std::size_t m = N.size();
    // For each group, the nearest earlier group of the same size.
    std::vector<int> twin(m, -1);
    for (std::size_t p = 0; p < m; ++p)
        for (std::size_t q = p; q-- > 0;)
            if (N[q] == N[p]) {
                twin[p] = static_cast<int>(q);
                break;
            }

    std::vector<bool> used(n, false);
    std::vector<std::vector<std::size_t>> groups(m);
    std::vector<double> sums(m, 0.0);
    struct Candidate {
        std::vector<std::vector<std::size_t>> groups;
        double J;
    };
    std::vector<Candidate> all;
    double best = INFINITY;

    auto objective = [&] {
        double J = 0.0;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j) {
                double d = sums[i] - sums[j];
                J += d * d;
            }
        return J;
    };

    std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t p, std::size_t from) {
        if (p == m) {
            double J = objective();
            if (J <= best + 1e-9 * std::max(1.0, best)) {
                best = std::min(best, J);
                all.push_back({groups, J});
            }
            return;
        }
        auto& g = groups[p];
        if (g.size() == static_cast<std::size_t>(N[p])) {
            fill(p + 1, 0);
            return;
        }
        for (std::size_t i = from; i < n; ++i) {
            if (used[i]) continue;
            // Relabelings of equal-size groups are skipped by ordering their minima.
            if (g.empty() && twin[p] >= 0 && i < groups[twin[p]].front()) continue;
            used[i] = true;
            g.push_back(i);
            sums[p] += educations[i];
            fill(p, i + 1);
            sums[p] -= educations[i];
            g.pop_back();
            used[i] = false;
        }
    };
    fill(0, 0);

    TantamountResult r;
    r.J_min = best;
    double tol = 1e-9 * std::max(1.0, best);
    for (auto& c : all)
        if (c.J <= best + tol) r.best_partitions.push_back(make_partition(educations, std::move(c.groups)));
    return r;
}

double closeness(std::span<const double> D, std::span<const double> F) {
    require(D.size() == F.size(), "D", "averages and targets differ in length");
    double V = 0.0;
    for (std::size_t i = 0; i < F.size(); ++i) {
        require(F[i] != 0.0, "F", "targets must be nonzero");
        V = std::max(V, std::abs(D[i] - F[i]) / std::abs(F[i]));
    }
    return V;
}

GoalPairing pair_by_goal_extent(std::span<const double> extents) {
    require(!extents.empty(), "extents", "no goal extents given");
    std::vector<std::size_t> left(extents.size());
    std::iota(left.begin(), left.end(), std::size_t{0});
    GoalPairing out;
    bool to_a = true;
    while (!left.empty()) {
        auto& dst = to_a ? out.group_a : out.group_b;
        if (left.size() == 1) {
            dst.push_back(left.front());
            break;
        }
        auto hi = left.begin();
        for (auto it = left.begin(); it != left.end(); ++it)
            if (extents[*it] > extents[*hi]) hi = it;
        auto lo = left.end();
        for (auto it = left.begin(); it != left.end(); ++it)
            if (it != hi && (lo == left.end() || extents[*it] < extents[*lo])) lo = it;
        dst.push_back(*hi);
        dst.push_back(*lo);
        left.erase(std::max(hi, lo));
        left.erase(std::min(hi, lo));
        to_a = !to_a;
    }
    return out;
}

}  // namespace affectus
