#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace affectus {

enum class SelectionRule { first, second };

struct Selection {
    std::optional<std::size_t> winner;  // none means stupor
    std::vector<double> angles;         // angle between V and each padded block
    std::vector<double> moduli;
};

struct AntiStupor {
    bool anti_stupor = true;
    std::optional<std::pair<int, int>> witness;  // lowest (j, q)
    bool exact = false;                          // rational arithmetic was used
};

struct Ratio {
    std::int64_t num = 0;
    std::int64_t den = 1;
};

// Players' education blocks; block i occupies its own slice of V.
using PlayerEducations = std::vector<std::vector<double>>;

std::vector<double> general_vector(const PlayerEducations& players);
Selection select(const PlayerEducations& players, SelectionRule rule, double epsilon = 1e-9);
double critical_angle();
bool stupor_check(double theta1, double theta2, int j, int q, double epsilon = 1e-12);
// x == num/den exactly in double arithmetic with den <= max_den.
std::optional<Ratio> as_small_ratio(double x, std::int64_t max_den = 64);
AntiStupor anti_stupor_search(double theta1, double theta2, int j_max = 200, int q_max = 200,
                              double epsilon = 1e-12);
AntiStupor anti_stupor_search(Ratio theta1, Ratio theta2, int j_max = 200, int q_max = 200);
bool anti_conflict_check(double theta1, double theta2, int j_max = 200, int q_max = 200,
                         double epsilon = 1e-12);
// Independent scan of the onset-of-conflict equality with equal emotions.
bool anti_conflict_eq34_scan(double theta1, double theta2, int j_max = 200, int q_max = 200,
                             double epsilon = 1e-12);
bool orthogonality_check(std::span<const double> a, std::span<const double> b);

}  // namespace affectus
