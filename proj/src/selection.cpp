#include "affectus/selection.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <map>
#include <numbers>

#include "affectus/emotion.hpp"
#include "affectus/error.hpp"
#include "affectus/groups.hpp"
#include "affectus/kernels.hpp"

namespace affectus {

namespace mp = boost::multiprecision;

std::vector<double> general_vector(const PlayerEducations& players) {
    std::vector<double> V;
    for (const auto& b : players) V.insert(V.end(), b.begin(), b.end());
    return V;
}

Selection select(const PlayerEducations& players, SelectionRule rule, double epsilon) {
    require(players.size() >= 2, "players", "need at least two players");
    for (const auto& b : players) require(!b.empty(), "players", "each player needs an education block");
    std::vector<double> V = general_vector(players);
    double nV = std::sqrt(kernels::sum_squares(V));
    if (nV == 0.0) fail(ErrorCode::undefined_selection, "players", "general education vector is zero");

    Selection s;
    std::vector<double> cosines;
    for (const auto& b : players) {
        double m = std::sqrt(kernels::sum_squares(b));
        s.moduli.push_back(m);
        double c = std::min(1.0, m / nV);
        cosines.push_back(c);
        s.angles.push_back(std::acos(c));
    }

    const std::vector<double>& score = rule == SelectionRule::second ? s.moduli : cosines;
    double tol = rule == SelectionRule::second ? epsilon : epsilon / nV;
    std::size_t best = 0;
    for (std::size_t i = 1; i < score.size(); ++i)
        if (score[i] > score[best]) best = i;
    std::size_t ties = 0;
    for (double v : score)
        if (score[best] - v <= tol) ++ties;
    if (ties == 1) s.winner = best;
    return s;
}

double critical_angle() { return std::numbers::pi / 4.0; }

bool stupor_check(double theta1, double theta2, int j, int q, double epsilon) {
    require(theta1 >= 0.0 && theta1 < 1.0, "theta1", "theta1 must lie in [0, 1)");
    require(theta2 >= 0.0 && theta2 < 1.0, "theta2", "theta2 must lie in [0, 1)");
    return std::abs(geometric_sum(theta1, j) - geometric_sum(theta2, q)) < epsilon;
}

std::optional<Ratio> as_small_ratio(double x, std::int64_t max_den) {
    if (!std::isfinite(x)) return std::nullopt;
    for (std::int64_t d = 1; d <= max_den; ++d) {
        double n = std::round(x * static_cast<double>(d));
        if (std::abs(n) > 1e15) return std::nullopt;
        if (n / static_cast<double>(d) == x) return Ratio{static_cast<std::int64_t>(n), d};
    }
    return std::nullopt;
}

namespace {

void check_bounds(int j_max, int q_max) {
    require(j_max >= 2, "j_max", "j_max must be at least 2");
    require(q_max >= 2, "q_max", "q_max must be at least 2");
}

// Partial sums 1 + th + ... + th^{n-1} for n = 2..n_max.
std::vector<mp::cpp_rational> rational_sums(const mp::cpp_rational& th, int n_max) {
    std::vector<mp::cpp_rational> out;
    mp::cpp_rational power = th, sum = 1 + th;
    out.push_back(sum);
    for (int n = 3; n <= n_max; ++n) {
        power *= th;
        sum += power;
        out.push_back(sum);
    }
    return out;
}

}  // namespace

AntiStupor anti_stupor_search(Ratio theta1, Ratio theta2, int j_max, int q_max) {
    check_bounds(j_max, q_max);
    require(theta1.den > 0 && theta2.den > 0, "theta", "denominators must be positive");
    mp::cpp_rational t1(theta1.num, theta1.den), t2(theta2.num, theta2.den);
    require(t1 >= 0 && t1 < 1, "theta1", "theta1 must lie in [0, 1)");
    require(t2 >= 0 && t2 < 1, "theta2", "theta2 must lie in [0, 1)");

    std::map<mp::cpp_rational, int> second;
    auto s2 = rational_sums(t2, q_max);
    for (int q = 2; q <= q_max; ++q) second.emplace(s2[q - 2], q);  // keeps the lowest q
    auto s1 = rational_sums(t1, j_max);

    AntiStupor r;
    r.exact = true;
    for (int j = 2; j <= j_max; ++j) {
        auto it = second.find(s1[j - 2]);
        if (it != second.end()) {
            r.anti_stupor = false;
            r.witness = std::make_pair(j, it->second);
            break;
        }
    }
    return r;
}

AntiStupor anti_stupor_search(double theta1, double theta2, int j_max, int q_max,
                              double epsilon) {
    check_bounds(j_max, q_max);
    require(theta1 >= 0.0 && theta1 < 1.0, "theta1", "theta1 must lie in [0, 1)");
    require(theta2 >= 0.0 && theta2 < 1.0, "theta2", "theta2 must lie in [0, 1)");
    auto r1 = as_small_ratio(theta1);
    auto r2 = as_small_ratio(theta2);
    if (r1 && r2) return anti_stupor_search(*r1, *r2, j_max, q_max);

    std::vector<std::pair<double, int>> second;
    for (int q = 2; q <= q_max; ++q) second.emplace_back(geometric_sum(theta2, q), q);
    std::sort(second.begin(), second.end());

    AntiStupor r;
    for (int j = 2; j <= j_max; ++j) {
        double v = geometric_sum(theta1, j);
        auto lo = std::lower_bound(second.begin(), second.end(), std::make_pair(v - epsilon, 0));
        int best_q = 0;
        for (auto it = lo; it != second.end() && it->first < v + epsilon; ++it)
            if (std::abs(it->first - v) < epsilon && (best_q == 0 || it->second < best_q))
                best_q = it->second;
        if (best_q != 0) {
            r.anti_stupor = false;
            r.witness = std::make_pair(j, best_q);
            break;
        }
    }
    return r;
}

bool anti_conflict_check(double theta1, double theta2, int j_max, int q_max, double epsilon) {
    return anti_stupor_search(theta1, theta2, j_max, q_max, epsilon).anti_stupor;
}

bool anti_conflict_eq34_scan(double theta1, double theta2, int j_max, int q_max,
                             double epsilon) {
    check_bounds(j_max, q_max);
    for (int j = 2; j <= j_max; ++j)
        for (int q = 2; q <= q_max; ++q)
            if (conflict_condition(1.0, theta1, j, 1.0, theta2, q, epsilon).conflict) return false;
    return true;
}

bool orthogonality_check(std::span<const double> a, std::span<const double> b) {
    require(a.size() == b.size(), "b", "vectors differ in dimension");
    double d = kernels::dot(a, b);
    double scale = std::sqrt(kernels::sum_squares(a) * kernels::sum_squares(b));
    return std::abs(d) <= 1e-12 * scale;
}

}  // namespace affectus
