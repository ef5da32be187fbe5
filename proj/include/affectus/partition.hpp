#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace affectus {

struct Partition {
    std::vector<std::vector<std::size_t>> groups;
    std::vector<int> sizes;
    std::vector<double> averages;
};

struct TantamountResult {
    std::vector<Partition> best_partitions;
    double J_min = 0.0;
};

struct GoalPairing {
    std::vector<std::size_t> group_a;
    std::vector<std::size_t> group_b;
};

inline constexpr std::size_t kMaxEnumeratedRobots = 14;

std::vector<double> lagrange_targets(std::span<const int> N, double A);
// J = sum_{i<j} (N_i F_i - N_j F_j)^2 for the given group averages.
double tantamount_objective(std::span<const int> N, std::span<const double> F);
double tantamount_objective(const Partition& p);
Partition make_partition(std::span<const double> educations,
                         std::vector<std::vector<std::size_t>> groups);
TantamountResult enumerate_tantamount(std::span<const double> educations, std::span<const int> N);
double closeness(std::span<const double> D, std::span<const double> F);
GoalPairing pair_by_goal_extent(std::span<const double> extents);

}  // namespace affectus
