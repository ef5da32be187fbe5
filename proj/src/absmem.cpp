#include "affectus/absmem.hpp"

#include <algorithm>
#include <cmath>

#include "affectus/error.hpp"

namespace affectus {

double absolute_education(std::span<const double> r) {
    double s = 0.0;
    for (double x : r) s += x;
    return s;
}

Divergence divergence_check(const SeriesDescriptor& d) {
    if (const auto* t = std::get_if<TantamountSeries>(&d))
        return t->q != 0.0 ? Divergence::diverges : Divergence::converges_forced;
    const auto& s = std::get<SeriesLimits>(d);
    if (s.lim_P != 0.0 && s.lim_t0 != 0.0) return Divergence::diverges;
    return Divergence::converges_possible;
}

namespace {

bool close_rel(double x, double y, double eps) {
    double scale = std::max({std::abs(x), std::abs(y), 1e-300});
    return std::abs(x - y) <= eps * scale;
}

}  // namespace

std::optional<AbsoluteConflict> absolute_conflict(double r0_1, double r0_2, double tau_1,
                                                  double tau_2, long horizon, double epsilon) {
    require(tau_1 > 0.0, "tau_1", "step length must be positive");
    require(tau_2 > 0.0, "tau_2", "step length must be positive");
    require(horizon >= 1, "horizon", "horizon must be positive");
    for (long i = 1; i <= horizon; ++i) {
        double ti = static_cast<double>(i) * tau_1;
        long j = std::lround(ti / tau_2);
        if (j < 1 || j > horizon) continue;
        double tj = static_cast<double>(j) * tau_2;
        if (close_rel(ti, tj, epsilon) && close_rel(i * r0_1, j * r0_2, epsilon))
            return AbsoluteConflict{i, j, ti};
    }
    return std::nullopt;
}

int absolute_fellowship_steps(double q, double R0, double P0) {
    require(q > 0.0, "q", "q must be positive");
    double est = std::ceil((P0 - R0) / q);
    require(est < 2e9, "P0", "fellowship threshold too far away");
    int j = std::max(1, static_cast<int>(est));
    while (j * q + R0 < P0) ++j;
    while (j > 1 && (j - 1) * q + R0 >= P0) --j;
    return j;
}

InfoTrace info_continue(const InfoTrace& trace, std::span<const double> portions,
                        std::span<const double> lambdas, bool allow_absolute) {
    require(portions.size() == lambdas.size(), "lambdas", "one memory coefficient per portion");
    InfoTrace out = trace;
    double S = out.totals.empty() ? out.S0 : out.totals.back();
    for (std::size_t i = 0; i < portions.size(); ++i) {
        double lam = lambdas[i];
        bool ok = lam >= 0.0 && (lam < 1.0 || (allow_absolute && lam == 1.0));
        require(ok, "lambdas", "information memory coefficient must lie in [0, 1)");
        require(portions[i] >= 0.0, "portions", "information portions must be non-negative");
        S = portions[i] + lam * S;
        out.portions.push_back(portions[i]);
        out.lambdas.push_back(lam);
        out.totals.push_back(S);
    }
    return out;
}

InfoTrace info_accumulate(std::span<const double> portions, std::span<const double> lambdas,
                          double S0, bool allow_absolute) {
    require(S0 >= 0.0, "S0", "initial information must be non-negative");
    InfoTrace t;
    t.S0 = S0;
    return info_continue(t, portions, lambdas, allow_absolute);
}

double info_bound(double q, double lambda) {
    require(lambda >= 0.0 && lambda < 1.0, "lambda", "lambda must lie in [0, 1)");
    return q / (1.0 - lambda);
}

LambdaLine info_lambda_function(double S_prev, double S_next, double s_next, double t_i,
                                double t_next) {
    require(S_prev > 0.0, "S_prev", "previous total must be positive");
    require(t_next > t_i, "t_next", "step must have positive length");
    LambdaLine l;
    l.lambda = (S_next - s_next) / S_prev;
    l.a = (l.lambda - 1.0) / (t_next - t_i);
    return l;
}

InfoTrace generational_transfer(const InfoTrace& trace) {
    require(!trace.totals.empty(), "trace", "ancestor trace is empty");
    double S = trace.totals.back();
    InfoTrace t;
    t.portions = {S};
    t.lambdas = {0.0};
    t.totals = {S};
    return t;
}

}  // namespace affectus
