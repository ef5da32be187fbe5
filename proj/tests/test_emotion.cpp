#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "affectus/emotion.hpp"
#include "affectus/error.hpp"
#include "affectus/prng.hpp"

using namespace affectus;

namespace {

double unrolled_uniform(double q, double theta, int i) {
    double R = 0.0;
    for (int k = 0; k < i; ++k) R = q + theta * R;
    return R;
}

}  // namespace

TEST_SUITE("emotion") {

TEST_CASE("sine emotion samples") {
    auto c = sine_emotion(1.0, 1.0, 5);
    REQUIRE(c.size() == 5);
    double h = std::sqrt(2.0) / 2.0;
    std::vector<double> want{0.0, h, 1.0, h, 0.0};
    for (std::size_t k = 0; k < 5; ++k) CHECK(c.samples()[k] == doctest::Approx(want[k]).epsilon(1e-15));
    CHECK(c.samples().front() == 0.0);
    CHECK(c.samples().back() == 0.0);

    auto z = sine_emotion(0.0, 1.0, 3);
    for (double v : z.samples()) CHECK(v == 0.0);

    auto p = sine_emotion(2.0, 10.0, 101);
    CHECK(p.samples()[50] == doctest::Approx(2.0));
    CHECK(p.dt() == doctest::Approx(0.1));
}

TEST_CASE("emotion curve rejects bad input") {
    CHECK_THROWS_AS(EmotionCurve({}, 1.0), Error);
    CHECK_THROWS_AS(EmotionCurve({1.0, 2.0}, 0.0), Error);
    CHECK_THROWS_AS(EmotionCurve({1.0, 2e7}, 1.0), Error);
    CHECK_THROWS_AS(sine_emotion(1.0, -1.0, 5), Error);
}

TEST_CASE("elementary education against closed form") {
    // Integral of P sin(pi t / t0) over [0, t0] is 2 P t0 / pi.
    auto a = sine_emotion(std::numbers::pi / 2.0, 1.0, 10001);
    CHECK(elementary_education(a) == doctest::Approx(1.0).epsilon(1e-6));
    auto b = sine_emotion(1.0, std::numbers::pi, 10001);
    CHECK(elementary_education(b) == doctest::Approx(2.0).epsilon(1e-6));
    CHECK(elementary_education(sine_emotion(0.0, 1.0, 11)) == 0.0);
}

TEST_CASE("education step") {
    CHECK(education_step(1.0, 0.0, 100.0) == 1.0);
    CHECK(education_step(0.0, 1.0, 7.0) == 7.0);
    CHECK(education_step(2.5, 0.5, 1.0) == 3.0);
    CHECK_THROWS_AS(education_step(1.0, 1.5, 0.0), Error);
}

TEST_CASE("education trace") {
    std::vector<double> r{1.0, 2.5, 2.5}, th{0.5, 0.5, 0.5};
    auto t = education_trace(r, th);
    CHECK(t.cumulative == std::vector<double>{1.0, 3.0, 4.0});

    std::vector<double> ones(4, 1.0);
    auto u = education_trace(ones, ones);
    CHECK(u.cumulative == std::vector<double>{1.0, 2.0, 3.0, 4.0});

    std::vector<double> zeros(3, 0.0), any{0.3, 0.7, 0.1};
    CHECK(education_trace(zeros, any).cumulative == zeros);

    std::vector<double> short_th{0.5};
    CHECK_THROWS_AS(education_trace(r, short_th), Error);
}

TEST_CASE("uniform and limiting education") {
    CHECK(uniform_education(1.0, 0.0, 5) == 1.0);
    CHECK(uniform_education(1.0, 0.5, 3) == doctest::Approx(1.75));
    CHECK(limiting_education(2.5, 0.5) == 5.0);
    CHECK(limiting_education(0.0, 0.9) == 0.0);
    CHECK(limiting_education(0.2, 0.99) == doctest::Approx(20.0).epsilon(1e-12));
}

TEST_CASE("uniform education matches the unrolled recursion") {
    Xorshift64Star rng(11);
    for (int trial = 0; trial < 500; ++trial) {
        double q = rng.uniform(-5.0, 5.0);
        double th = rng.uniform(0.0, 0.999);
        for (int i = 1; i <= 50; ++i) {
            double want = unrolled_uniform(q, th, i);
            CHECK(std::abs(uniform_education(q, th, i) - want) <= 1e-12 * std::max(1.0, std::abs(want)));
        }
    }
}

TEST_CASE("geometric sum edge cases") {
    CHECK(geometric_sum(1.0, 7) == 7.0);
    CHECK(geometric_sum(0.5, INFINITY) == 2.0);
    CHECK(geometric_sum(0.0, 4) == 1.0);
    CHECK(geometric_sum(0.5, 0) == 0.0);
}

TEST_CASE("forgetting curve") {
    CHECK(forgetting_curve(8.0, 0.5, 3) == 1.0);
    CHECK(forgetting_curve(5.0, 0.0, 1) == 0.0);
    CHECK(forgetting_curve(5.0, 0.9, 0) == 5.0);
}

TEST_CASE("cycle education agrees with a trace") {
    std::vector<CycleSpec> c1{{1, 0}};
    CHECK(cycle_education(1.0, 0.5, c1) == 1.0);
    std::vector<CycleSpec> c2{{2, 1}};
    CHECK(cycle_education(1.0, 0.5, c2) == doctest::Approx(0.75));
    std::vector<CycleSpec> c3{{3, 2}};
    CHECK(cycle_education(1.0, 0.0, c3) == 0.0);

    Xorshift64Star rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        double q = rng.uniform(0.1, 3.0), th = rng.uniform(0.0, 0.99);
        std::vector<CycleSpec> cyc;
        std::vector<double> r;
        int m = 1 + static_cast<int>(rng.below(4));
        for (int c = 0; c < m; ++c) {
            int j = 1 + static_cast<int>(rng.below(5)), k = static_cast<int>(rng.below(5));
            cyc.push_back({j, k});
            r.insert(r.end(), j, q);
            r.insert(r.end(), k, 0.0);
        }
        std::vector<double> th_v(r.size(), th);
        double want = education_trace(r, th_v).cumulative.back();
        CHECK(cycle_education(q, th, cyc) == doctest::Approx(want).epsilon(1e-12));
    }
}

TEST_CASE("general cycle education") {
    std::vector<GeneralCycle> one{{{0.5}, {1.0, 1.0}, {0.5, 0.5}}};
    CHECK(general_cycle_education(one) == doctest::Approx(0.75));
    std::vector<GeneralCycle> zero{{{0.5, 0.5}, {0.0, 0.0}, {0.7, 0.7}}};
    CHECK(general_cycle_education(zero) == 0.0);
    std::vector<GeneralCycle> two{{{0.0}, {1.0}, {0.5}}, {{0.0}, {2.0}, {0.5}}};
    CHECK(general_cycle_education(two) == 0.0);
}

TEST_CASE("satiety indicator") {
    auto s = satiety_indicator(0.5, 1, 1);
    CHECK(s.G == doctest::Approx(0.25));
    CHECK(s.theta_star == doctest::Approx(0.5));
    CHECK(s.G_max == doctest::Approx(0.25));

    // 1-D scan confirms the maximum for a few (k1, j1).
    for (auto [k1, j1] : {std::pair{1, 1}, {2, 3}, {5, 2}}) {
        auto ref = satiety_indicator(0.5, k1, j1);
        double best = 0.0, arg = 0.0;
        for (double th = 1e-4; th < 1.0; th += 1e-4) {
            double g = std::pow(th, k1) * (1.0 - std::pow(th, j1));
            if (g > best) best = g, arg = th;
        }
        CHECK(ref.G_max == doctest::Approx(best).epsilon(1e-6));
        CHECK(ref.theta_star == doctest::Approx(arg).epsilon(1e-3));
    }
    CHECK(satiety_indicator(1.0 - 1e-12, 3, 2).G < 1e-10);
}

TEST_CASE("forgetful traces stay under the satiety bound") {
    Xorshift64Star rng(21);
    for (int trial = 0; trial < 2000; ++trial) {
        double q = rng.uniform(0.01, 10.0), th = rng.uniform(0.0, 0.95);
        double R = rng.uniform(-q, q) / (1.0 - th);
        for (int i = 0; i < 100; ++i) {
            R = education_step(rng.uniform(-q, q), th, R);
            CHECK(std::abs(R) <= 2.0 * q / (1.0 - th));
        }
    }
}

TEST_CASE("truncation bound dominates the tail") {
    double q = 1.3, th = 0.8;
    for (int k = 1; k < 30; ++k) {
        double tail = limiting_education(q, th) - uniform_education(q, th, k);
        CHECK(tail <= truncation_error_bound(q, th, k) + 1e-12);
    }
}

TEST_CASE("memory function") {
    CHECK(memory_function(3.0, 1.5) == 2.0);
    CHECK_THROWS_AS(memory_function(1.0, 0.0), Error);
}

TEST_CASE("sum emotion reductions") {
    std::size_t n = 101;
    double dt = 0.01;
    std::vector<double> ramp(n), ones(n, 1.0), zeros(n, 0.0), c(n, 0.4);
    for (std::size_t k = 0; k < n; ++k) ramp[k] = k * dt;
    for (double v : sum_emotion(ramp, ones, 3.0, dt)) CHECK(v == doctest::Approx(1.0).epsilon(1e-12));
    for (double v : sum_emotion(zeros, c, 5.0, dt)) CHECK(v == 0.0);

    std::vector<double> sq(n);
    for (std::size_t k = 0; k < n; ++k) sq[k] = ramp[k] * ramp[k];
    auto d = derivative(sq, dt);
    for (std::size_t k = 0; k < n; ++k) CHECK(d[k] == doctest::Approx(2.0 * ramp[k]).epsilon(1e-9));
}

}  // TEST_SUITE
