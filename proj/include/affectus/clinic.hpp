#pragma once

#include <array>
#include <span>
#include <vector>

#include "affectus/emotion.hpp"

namespace affectus {

struct DiagnosisReport {
    std::array<bool, 10> satisfied{};
    int severity = 0;
    std::vector<int> symptoms;  // violated condition numbers, 1-based, ascending
    bool healthy = false;
};

struct AmbivalentEmotion {
    std::vector<EmotionCurve> curves;
    std::vector<double> goal;
};

enum class EmotionSign { positive, negative, no_sign };

struct AverageEducationStats {
    double avg_elementary = 0.0;  // [D]
    double avg_education = 0.0;   // [R]
    std::size_t prevailing_index = 0;
    bool average_is_emotion = false;
};

struct SignTheorems {
    EmotionSign avg_sign = EmotionSign::no_sign;
    EmotionSign amb_sign = EmotionSign::no_sign;
    bool consistent = false;
};

DiagnosisReport diagnose(const EmotionCurve& curve, double t_star);
bool special_case(std::span<const int> X1, std::span<const int> X2);
// Weighted mean sum_i A_i V_i / sum_i A_i over the shortest component.
EmotionCurve average_function(std::span<const double> A, std::span<const EmotionCurve> V);
EmotionCurve average_function(const AmbivalentEmotion& amb);
EmotionSign ambivalent_sign(std::span<const double> A, std::span<const EmotionCurve> V, double t,
                            double epsilon = 1e-9);
EmotionSign ambivalent_sign(const AmbivalentEmotion& amb, double t, double epsilon = 1e-9);
AverageEducationStats average_education_stats(const AmbivalentEmotion& amb,
                                              std::span<const double> R,
                                              std::span<const double> r);
SignTheorems sign_theorems_check(const AmbivalentEmotion& amb, double epsilon = 1e-9);

}  // namespace affectus
