#pragma once

#include <optional>
#include <span>
#include <variant>
#include <vector>

namespace affectus {

struct TantamountSeries {
    double q = 0.0;
};

struct SeriesLimits {
    double lim_P = 0.0;
    double lim_t0 = 0.0;
};

using SeriesDescriptor = std::variant<TantamountSeries, SeriesLimits>;

enum class Divergence { diverges, converges_possible, converges_forced };

struct AbsoluteConflict {
    long i = 0;
    long j = 0;
    double t = 0.0;
};

struct InfoTrace {
    std::vector<double> portions;
    std::vector<double> lambdas;
    std::vector<double> totals;
    double S0 = 0.0;
};

struct LambdaLine {
    double lambda = 0.0;
    double a = 0.0;
    double b = 1.0;
};

double absolute_education(std::span<const double> r);
Divergence divergence_check(const SeriesDescriptor& d);
std::optional<AbsoluteConflict> absolute_conflict(double r0_1, double r0_2, double tau_1,
                                                  double tau_2, long horizon = 10000,
                                                  double epsilon = 1e-9);
int absolute_fellowship_steps(double q, double R0, double P0);
// allow_absolute admits lambda = 1 for the unbounded comparison case.
InfoTrace info_accumulate(std::span<const double> portions, std::span<const double> lambdas,
                          double S0 = 0.0, bool allow_absolute = false);
InfoTrace info_continue(const InfoTrace& trace, std::span<const double> portions,
                        std::span<const double> lambdas, bool allow_absolute = false);
double info_bound(double q, double lambda);
LambdaLine info_lambda_function(double S_prev, double S_next, double s_next, double t_i,
                                double t_next);
InfoTrace generational_transfer(const InfoTrace& trace);

}  // namespace affectus
