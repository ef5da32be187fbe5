#include "affectus/equivfit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "affectus/emotion.hpp"
#include "affectus/error.hpp"

namespace affectus {

bool process_valid(double theta, double q) {
    return theta >= 0.0 && theta < 1.0 && q >= 0.0 && std::isfinite(q);
}

EquivalentProcess fit_linear(std::span<const double> R) {
    std::size_t n = R.size();
    require(n >= 3, "R", "need at least three educations");
    std::size_t m = n - 1;
    double xm = 0.0, ym = 0.0;
    for (std::size_t i = 1; i < n; ++i) {
        xm += R[i - 1];
        ym += R[i];
    }
    xm /= m;
    ym /= m;
    double sxx = 0.0, sxy = 0.0, scale = 0.0;
    for (std::size_t i = 1; i < n; ++i) {
        double dx = R[i - 1] - xm;
        sxx += dx * dx;
        sxy += dx * (R[i] - ym);
        scale += R[i - 1] * R[i - 1];
    }
    if (!(sxx > 1e-24 * std::max(scale, 1e-300)))
        fail(ErrorCode::singular_fit, "R", "educations are constant; linear fit is singular");
    EquivalentProcess p;
    p.theta = sxy / sxx;
    p.q = ym - p.theta * xm;
    for (std::size_t i = 1; i < n; ++i) {
        double e = R[i] - p.q - p.theta * R[i - 1];
        p.residual += e * e;
    }
    p.valid = process_valid(p.theta, p.q);
    return p;
}

double general_objective(std::span<const double> R, double theta, double q) {
    double J = 0.0;
    for (std::size_t j = 1; j < R.size(); ++j) {
        double e = R[j] - std::pow(theta, j) * R[0] - q * geometric_sum(theta, j);
        J += e * e;
    }
    return J;
}

namespace {

// Best q for a fixed theta, clamped to the box.
double profile_q(std::span<const double> R, double theta, double q_max) {
    double num = 0.0, den = 0.0;
    for (std::size_t j = 1; j < R.size(); ++j) {
        double g = geometric_sum(theta, j);
        num += g * (R[j] - std::pow(theta, j) * R[0]);
        den += g * g;
    }
    double q = den > 0.0 ? num / den : 0.0;
    return std::clamp(q, 0.0, q_max);
}

}  // namespace

EquivalentProcess fit_general(std::span<const double> R, const GeneralFitOptions& opt) {
    std::size_t n = R.size();
    require(n >= 3, "R", "need at least three educations");
    require(opt.delta > 0.0 && opt.delta < 1.0, "delta", "delta must lie in (0, 1)");
    require(opt.coarse_step > 0.0, "coarse_step", "coarse step must be positive");
    EquivalentProcess p;
    if (!(R[0] > 0.0)) p.warnings.emplace_back("R_1 is not positive");
    for (std::size_t i = 1; i < n; ++i) {
        if (R[i] < R[i - 1]) {
            p.warnings.emplace_back("educations are not non-decreasing");
            break;
        }
    }

    double hi = 1.0 - opt.delta;
    auto J = [&](double th) { return general_objective(R, th, profile_q(R, th, opt.q_max)); };

    double best_th = 0.0, best_J = J(0.0);
    auto steps = static_cast<long>(std::floor(hi / opt.coarse_step));
    for (long k = 1; k <= steps + 1; ++k) {
        double th = std::min(hi, k * opt.coarse_step);
        double v = J(th);
        if (v < best_J) {
            best_J = v;
            best_th = th;
        }
    }

    if (best_J > 0.0) {
        double a = std::max(0.0, best_th - opt.coarse_step);
        double b = std::min(hi, best_th + opt.coarse_step);
        const double g = (std::sqrt(5.0) - 1.0) / 2.0;
        double c = b - g * (b - a), d = a + g * (b - a);
        double fc = J(c), fd = J(d);
        while (b - a > opt.tolerance) {
            if (fc < fd) {
                b = d;
                d = c;
                fd = fc;
                c = b - g * (b - a);
                fc = J(c);
            } else {
                a = c;
                c = d;
                fc = fd;
                d = a + g * (b - a);
                fd = J(d);
            }
        }
        double th = 0.5 * (a + b);
        double v = J(th);
        if (v < best_J) {
            best_J = v;
            best_th = th;
        }
    }
    p.theta = best_th;
    p.q = profile_q(R, best_th, opt.q_max);
    p.residual = general_objective(R, p.theta, p.q);
    p.valid = process_valid(p.theta, p.q);
    return p;
}

double mismatched_objective(std::span<const double> R, double q, double theta,
                            std::span<const int> j) {
    require(R.size() == j.size(), "j", "one step index per education is required");
    double J = 0.0;
    for (std::size_t i = 0; i < R.size(); ++i) {
        double e = R[i] - q * geometric_sum(theta, j[i]);
        J += e * e;
    }
    return J;
}

namespace {

long grid_count(double lo, double hi, double step) {
    return static_cast<long>(std::floor((hi - lo) / step + 1e-9)) + 1;
}

}  // namespace

EquivalentProcess fit_mismatched(std::span<const double> R, const MismatchedGrid& grid) {
    std::size_t n = R.size();
    require(n >= 1, "R", "need at least one education");
    require(grid.q_step > 0.0 && grid.theta_step > 0.0, "grid", "grid steps must be positive");
    require(grid.q_hi >= grid.q_lo && grid.theta_hi >= grid.theta_lo, "grid",
            "grid ranges are empty");
    require(grid.theta_lo >= 0.0 && grid.theta_hi <= 1.0, "grid.theta", "theta range outside [0, 1]");
    require(grid.j_max >= static_cast<int>(n), "grid.j_max",
            "j_max must allow strictly increasing steps");

    long nq = grid_count(grid.q_lo, grid.q_hi, grid.q_step);
    long nt = grid_count(grid.theta_lo, grid.theta_hi, grid.theta_step);
    auto m = static_cast<std::size_t>(grid.j_max);

    std::vector<double> S(m + 1), cost(m + 1), prev(m + 1), prefix(m + 1);
    std::vector<std::vector<int>> arg(n, std::vector<int>(m + 1));
    std::vector<int> prefix_arg(m + 1);

    EquivalentProcess best;
    best.residual = std::numeric_limits<double>::infinity();
    std::vector<int> best_j;

    for (long a = 0; a < nq; ++a) {
        double q = grid.q_lo + a * grid.q_step;
        for (long b = 0; b < nt; ++b) {
            double th = grid.theta_lo + b * grid.theta_step;
            for (std::size_t j = 1; j <= m; ++j) S[j] = q * geometric_sum(th, j);
            // cost[j]: best objective over R_0..R_i with j_i = j.
            for (std::size_t j = 1; j <= m; ++j) {
                double e = R[0] - S[j];
                prev[j] = e * e;
            }
            for (std::size_t i = 1; i < n; ++i) {
                prefix[0] = std::numeric_limits<double>::infinity();
                for (std::size_t j = 1; j <= m; ++j) {
                    if (prev[j] < prefix[j - 1] || j == 1) {
                        prefix[j] = prev[j];
                        prefix_arg[j] = static_cast<int>(j);
                    } else {
                        prefix[j] = prefix[j - 1];
                        prefix_arg[j] = prefix_arg[j - 1];
                    }
                }
                cost[1] = std::numeric_limits<double>::infinity();
                for (std::size_t j = 2; j <= m; ++j) {
                    double e = R[i] - S[j];
                    cost[j] = prefix[j - 1] + e * e;
                    arg[i][j] = prefix_arg[j - 1];
                }
                std::swap(prev, cost);
            }
            std::size_t jl = 1;
            for (std::size_t j = 2; j <= m; ++j)
                if (prev[j] < prev[jl]) jl = j;
            if (prev[jl] < best.residual) {
                best.residual = prev[jl];
                best.q = q;
                best.theta = th;
                best_j.assign(n, 0);
                best_j[n - 1] = static_cast<int>(jl);
                for (std::size_t i = n - 1; i > 0; --i) best_j[i - 1] = arg[i][best_j[i]];
            }
        }
    }
    best.step_map = best_j;
    best.residual = mismatched_objective(R, best.q, best.theta, best_j);
    best.valid = process_valid(best.theta, best.q);
    return best;
}

double limiting_error_bound(double q, double theta, double M_hi, double theta_hi, double M_lo,
                            double theta_lo) {
    for (double th : {theta, theta_hi, theta_lo})
        require(th >= 0.0 && th < 1.0, "theta_hi", "memory coefficients must lie in [0, 1)");
    require(M_lo <= M_hi, "M_lo", "lower emotion bound exceeds the upper bound");
    double U = q / (1.0 - theta);
    double up = M_hi / (1.0 - theta_hi) - U;
    double down = U - M_lo / (1.0 - theta_lo);
    return std::max(std::abs(up), std::abs(down));
}

std::vector<MemoryLine> memory_coeff_function(double theta, std::span<const StepTimes> steps) {
    std::vector<MemoryLine> out;
    out.reserve(steps.size());
    for (const StepTimes& s : steps) {
        require(s.t > s.t_prev, "step_times", "step must have positive length");
        out.push_back({(theta - 1.0) / (s.t - s.t_prev), 1.0});
    }
    return out;
}

std::vector<MemoryLine> memory_coeff_function(std::span<const double> R,
                                              std::span<const StepTimes> steps) {
    return memory_coeff_function(fit_linear(R).theta, steps);
}

double fit_absolute(std::span<const double> R) {
    std::size_t n = R.size();
    require(n >= 2, "R", "need at least two educations");
    double num = 0.0, s1 = 0.0, s2 = 0.0;
    for (std::size_t j = 1; j < n; ++j) {
        double w = static_cast<double>(j);
        num += R[j] * w;
        s1 += w;
        s2 += w * w;
    }
    return (num - R[0] * s1) / s2;
}

}  // namespace affectus
