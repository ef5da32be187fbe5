#include "affectus/clinic.hpp"

#include <algorithm>
#include <cmath>

#include "affectus/error.hpp"
#include "affectus/kernels.hpp"

namespace affectus {

namespace {

struct Run {
    std::size_t begin;
    std::size_t end;  // inclusive
};

int sign_of(double v, double eps) { return v > eps ? 1 : (v < -eps ? -1 : 0); }

// True when M changes sign strictly somewhere in [lo, hi].
bool sign_flips(const std::vector<double>& m, std::size_t lo, std::size_t hi, double eps) {
    int seen = 0;
    for (std::size_t k = lo; k <= hi; ++k) {
        int s = sign_of(m[k], eps);
        if (s == 0) continue;
        if (seen != 0 && s != seen) return true;
        seen = s;
    }
    return false;
}

}  // namespace

DiagnosisReport diagnose(const EmotionCurve& curve, double t_star) {
    const auto& m = curve.samples();
    std::size_t n = m.size();
    require(n >= 3, "samples", "diagnosis needs at least three samples");
    double t0 = curve.duration();

    std::vector<double> a(n);
    for (std::size_t k = 0; k < n; ++k) a[k] = std::abs(m[k]);
    double amax = *std::max_element(a.begin(), a.end());
    double eps_b = 1e-9 * amax;
    double eq = 1e-12 * amax;

    std::array<bool, 10> ok{};
    ok[0] = t0 > 0.0;
    ok[1] = t0 <= t_star * (1.0 + 1e-12);
    ok[2] = true;
    ok[3] = a.front() <= eps_b;
    ok[4] = a.back() <= eps_b;
    ok[5] = !sign_flips(m, 0, n - 1, eps_b);

    // Kinks in |M|: a strict sign change whose crossing slope is not negligible.
    double slope_tol = 1e-6 * amax / t0;
    bool kink = false;
    std::size_t last = n;
    for (std::size_t k = 0; k < n; ++k) {
        if (sign_of(m[k], eps_b) == 0) continue;
        if (last != n && sign_of(m[k], eps_b) != sign_of(m[last], eps_b)) {
            double slope = std::abs(m[k] - m[last]) / (curve.dt() * static_cast<double>(k - last));
            if (slope > slope_tol) kink = true;
        }
        last = k;
    }
    ok[6] = !kink;

    // Collapse plateaus of |M|, then look for interior smooth extrema.
    std::vector<Run> runs;
    for (std::size_t k = 0; k < n; ++k) {
        if (!runs.empty() && std::abs(a[k] - a[runs.back().end]) <= eq)
            runs.back().end = k;
        else
            runs.push_back({k, k});
    }
    std::vector<Run> stationary;
    for (std::size_t i = 1; i + 1 < runs.size(); ++i) {
        double here = a[runs[i].begin];
        double left = a[runs[i - 1].end];
        double right = a[runs[i + 1].begin];
        bool is_max = here > left && here > right;
        bool is_min = here < left && here < right;
        if (is_min && sign_flips(m, runs[i - 1].end, runs[i + 1].begin, eps_b)) continue;
        if (is_max || is_min) stationary.push_back(runs[i]);
    }
    ok[7] = stationary.size() == 1;

    Run peak{0, 0};
    if (stationary.size() == 1) {
        peak = stationary.front();
    } else {
        for (const Run& r : runs)
            if (a[r.begin] >= amax - eq) {
                peak = r;
                break;
            }
    }

    bool rising = peak.begin > 0;
    for (std::size_t k = 0; rising && k < peak.begin; ++k) rising = a[k + 1] - a[k] > eq;
    ok[8] = rising;
    bool falling = peak.end + 1 < n;
    for (std::size_t k = peak.end; falling && k + 1 < n; ++k) falling = a[k] - a[k + 1] > eq;
    ok[9] = falling;

    DiagnosisReport r;
    r.satisfied = ok;
    for (int c = 0; c < 10; ++c)
        if (!ok[c]) r.symptoms.push_back(c + 1);
    r.severity = static_cast<int>(r.symptoms.size());
    r.healthy = r.severity == 0;
    return r;
}

bool special_case(std::span<const int> X1, std::span<const int> X2) {
    for (int x : X2)
        if (std::find(X1.begin(), X1.end(), x) == X1.end()) return false;
    return true;
}

namespace {

double weight_sum(std::span<const double> A) {
    double s = 0.0;
    for (double x : A) s += x;
    return s;
}

void check_components(std::span<const double> A, std::span<const EmotionCurve> V) {
    require(!V.empty(), "curves", "ambivalent emotion needs components");
    require(A.size() == V.size(), "goal", "one goal weight per component emotion");
    for (const EmotionCurve& c : V)
        require(std::abs(c.dt() - V.front().dt()) <= 1e-12 * V.front().dt(), "curves",
                "component emotions must share a time grid");
}

// Sum_i A_i V_i(t) at each shared sample.
std::vector<double> weighted_sum(std::span<const double> A, std::span<const EmotionCurve> V) {
    std::size_t n = V.front().size();
    for (const EmotionCurve& c : V) n = std::min(n, c.size());
    std::vector<double> out(n, 0.0);
    for (std::size_t i = 0; i < V.size(); ++i)
        kernels::scale_add(out, std::span<const double>(V[i].samples().data(), n), A[i]);
    return out;
}

EmotionSign sign_label(double v, double eps) {
    if (v > eps) return EmotionSign::positive;
    if (v < -eps) return EmotionSign::negative;
    return EmotionSign::no_sign;
}

}  // namespace

EmotionCurve average_function(std::span<const double> A, std::span<const EmotionCurve> V) {
    check_components(A, V);
    double SA = weight_sum(A);
    if (SA == 0.0) fail(ErrorCode::undefined_average, "goal", "goal weights sum to zero");
    std::vector<double> f = weighted_sum(A, V);
    for (double& x : f) x /= SA;

    std::optional<SineDescriptor> sine;
    bool all_sine = std::all_of(V.begin(), V.end(), [&](const EmotionCurve& c) {
        return c.sine() && c.sine()->t0 == V.front().sine()->t0 && c.size() == V.front().size();
    });
    if (V.front().sine() && all_sine) {
        double P = 0.0;
        for (std::size_t i = 0; i < V.size(); ++i) P += A[i] * V[i].sine()->P;
        sine = SineDescriptor{P / SA, V.front().sine()->t0};
    }
    return EmotionCurve(std::move(f), V.front().dt(), sine, INFINITY);
}

EmotionCurve average_function(const AmbivalentEmotion& amb) {
    return average_function(amb.goal, amb.curves);
}

EmotionSign ambivalent_sign(std::span<const double> A, std::span<const EmotionCurve> V, double t,
                            double epsilon) {
    check_components(A, V);
    double AA = kernels::sum_squares(A);
    require(AA > 0.0, "goal", "goal must be nonzero");
    std::vector<double> s = weighted_sum(A, V);
    require(t >= 0.0, "t", "time must be non-negative");
    auto k = static_cast<std::size_t>(std::llround(t / V.front().dt()));
    require(k < s.size(), "t", "time lies beyond the shortest component");
    return sign_label(s[k] / AA, epsilon);
}

EmotionSign ambivalent_sign(const AmbivalentEmotion& amb, double t, double epsilon) {
    return ambivalent_sign(amb.goal, amb.curves, t, epsilon);
}

AverageEducationStats average_education_stats(const AmbivalentEmotion& amb,
                                              std::span<const double> R,
                                              std::span<const double> r) {
    std::size_t n = amb.curves.size();
    require(R.size() == n && r.size() == n, "R", "one education per component emotion");
    EmotionCurve avg = average_function(amb);
    double SA = weight_sum(amb.goal);

    AverageEducationStats s;
    s.avg_elementary = elementary_education(avg);
    double wR = 0.0;
    for (std::size_t i = 0; i < n; ++i) wR += amb.goal[i] * R[i];
    s.avg_education = wR / SA;
    double best = INFINITY;
    double tol = 1e-12 * std::max(1.0, std::abs(s.avg_elementary));
    for (std::size_t i = 0; i < n; ++i) {
        double d = std::abs(r[i] - s.avg_elementary);
        if (d < best - tol) {
            best = d;
            s.prevailing_index = i;
        }
    }
    s.average_is_emotion = diagnose(avg, avg.duration()).healthy;
    return s;
}

SignTheorems sign_theorems_check(const AmbivalentEmotion& amb, double epsilon) {
    check_components(amb.goal, amb.curves);
    double SA = weight_sum(amb.goal);
    if (SA == 0.0) fail(ErrorCode::undefined_average, "goal", "goal weights sum to zero");
    double AA = kernels::sum_squares(amb.goal);
    std::vector<double> s = weighted_sum(amb.goal, amb.curves);

    SignTheorems out;
    out.consistent = true;
    std::size_t peak = 0;
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (std::abs(s[k]) > std::abs(s[peak])) peak = k;
        EmotionSign avg = sign_label(s[k] / SA, epsilon);
        EmotionSign amb_s = sign_label(s[k] / AA, epsilon);
        if (avg == EmotionSign::no_sign || amb_s == EmotionSign::no_sign) continue;
        bool same = avg == amb_s;
        if (same != (SA > 0.0)) out.consistent = false;
    }
    out.avg_sign = sign_label(s[peak] / SA, epsilon);
    out.amb_sign = sign_label(s[peak] / AA, epsilon);
    return out;
}

}  // namespace affectus
