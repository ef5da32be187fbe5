#include <doctest.h>

#include <cmath>
#include <vector>

#include "affectus/emotion.hpp"
#include "affectus/error.hpp"
#include "affectus/traits.hpp"

using namespace affectus;

namespace {

std::vector<double> grid(double t, std::size_t n, double (*f)(double)) {
    std::vector<double> out(n);
    for (std::size_t k = 0; k < n; ++k) out[k] = f(t * k / (n - 1));
    return out;
}

}  // namespace

TEST_SUITE("traits") {

TEST_CASE("ability examples") {
    std::vector<double> c(11, 3.0);
    CHECK(ability(c, 2.0) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(ability(grid(1.0, 101, [](double x) { return x; }), 1.0) == doctest::Approx(0.5));
    CHECK(ability(grid(1.0, 101, [](double x) { return 1.0 - x; }), 1.0) == doctest::Approx(-0.5));
}

TEST_CASE("ability is the derivative of the running mean") {
    // delta = tau^2 on [0, t]: mean t^2/3, derivative 2t/3.
    double t = 3.0;
    auto d = grid(t, 30001, [](double x) { return x * x; });
    CHECK(ability(d, t) == doctest::Approx(2.0 * t / 3.0).epsilon(1e-6));
}

TEST_CASE("ability of cycle schedules stays under the forgetful bound") {
    for (double th : {0.3, 0.5, 0.8, 0.95})
        for (int j = 1; j <= 3; ++j)
            for (int k = 0; k <= 3; ++k) {
                std::vector<double> R{0.0};
                for (int i = 1; i <= 2000; ++i) R.push_back(education_step((i - 1) % (j + k) < j ? 1.0 : 0.0, th, R.back()));
                std::vector<double> thetas{th}, jinf{INFINITY}, a{1.0};
                for (long t : {10L, 100L, 1000L, 2000L}) {
                    double f = ability(std::span<const double>(R.data(), t + 1), static_cast<double>(t));
                    CHECK(std::abs(f) <= ability_bound(1.0, thetas, jinf, a, static_cast<double>(t)));
                }
            }
}

TEST_CASE("ability need not shrink between decades") {
    // One active step then three slack steps; the transient keeps |F(10)| small.
    std::vector<double> R{0.0};
    for (int i = 1; i <= 100; ++i) R.push_back(education_step((i - 1) % 4 == 0 ? 1.0 : 0.0, 0.5, R.back()));
    double f10 = std::abs(ability(std::span<const double>(R.data(), 11), 10.0));
    double f100 = std::abs(ability(R, 100.0));
    CHECK(f10 < f100);
}

TEST_CASE("ability bound") {
    std::vector<double> th{0.5}, j{INFINITY}, a{2.0};
    CHECK(ability_bound(1.0, th, j, a, 10.0) == doctest::Approx(4.0 * 2.0 * 2.0 / (10.0 * 4.0)));
    std::vector<double> j1{1.0};
    CHECK(ability_bound(1.0, th, j1, a, 10.0) == doctest::Approx(4.0 * 2.0 / (10.0 * 4.0)));
}

TEST_CASE("ability scopes") {
    std::vector<double> g1{1.0};
    std::vector<std::vector<double>> e1{{0.0, 1.0, 2.0}};
    auto r1 = ability_scopes(g1, e1, 2.0);
    CHECK(r1.p == 1);
    CHECK(r1.all.size() == 1);

    // Component 1 grows twice as fast as component 0.
    std::vector<double> g2{1.0, 1.0};
    std::vector<std::vector<double>> e2{{0.0, 1.0, 2.0}, {0.0, 2.0, 4.0}};
    auto r2 = ability_scopes(g2, e2, 2.0);
    REQUIRE(r2.p == 1);
    CHECK(r2.scopes[0].components == std::vector<std::size_t>{1});

    std::vector<double> g3{1.0, 1.0, 1.0};
    std::vector<std::vector<double>> e3(3, std::vector<double>{0.0, 1.0, 2.0});
    CHECK(ability_scopes(g3, e3, 2.0).p == 7);
}

TEST_CASE("work and willpower") {
    auto w = work_and_willpower(grid(2.0, 201, [](double x) { return x; }), 2.0);
    CHECK(w.X == doctest::Approx(2.0));
    CHECK(w.Y == doctest::Approx(1.0));
    std::vector<double> a{1.0, -1.0};
    CHECK(willpower_bound(1.0, 0.5, a) == doctest::Approx(8.0));
    CHECK(work_bound(1.0, 0.5, a, 3.0) == doctest::Approx(24.0));
    CHECK_THROWS_AS(willpower_bound(1.0, 1.0, a), Error);
}

TEST_CASE("danger check") {
    CHECK(danger_check({true, true}));
    CHECK_FALSE(danger_check({true, false}));
    CHECK_FALSE(danger_check({false, true}));
}

TEST_CASE("efficiency") {
    auto flat = [](double c) { return std::vector<double>(11, c); };
    auto up = [&](double th) { return flat(th); };
    auto self = efficiency(up, 0.9, 1.0, 0.1);
    CHECK(std::abs(self.mu) == doctest::Approx(1.0));

    auto half = efficiency(up, 0.45, 1.0, 0.1);
    CHECK(half.mu == doctest::Approx(0.5));

    auto opposite = [&](double th) { return flat(th < 0.5 ? 1.0 - 2.0 * th : -0.1); };
    CHECK(efficiency(opposite, 0.8, 1.0, 0.1).mu < 0.0);

    auto none = [&](double) { return flat(0.0); };
    CHECK_THROWS_AS(efficiency(none, 0.5, 1.0, 0.1), Error);
}

TEST_CASE("efficiency stays in [-1, 1]") {
    for (double ta = 0.0; ta <= 1.0; ta += 0.05) {
        auto f = [](double th) { return std::vector<double>(5, std::sin(7.0 * th)); };
        auto r = efficiency(f, ta, 1.0, 0.03);
        CHECK(r.mu >= -1.0);
        CHECK(r.mu <= 1.0);
    }
}

TEST_CASE("temperament table") {
    CHECK(classify_temperament(0.1) == Temperament::melancholic);
    CHECK(classify_temperament(0.4) == Temperament::phlegmatic);
    CHECK(classify_temperament(0.6) == Temperament::sanguine);
    CHECK(classify_temperament(0.8) == Temperament::choleric);
    CHECK(classify_temperament(1.0) == Temperament::choleric);
}

TEST_CASE("temperament of robots") {
    std::vector<std::vector<EmotionCurve>> one{{sine_emotion(1.0, 1.0, 21)}};
    auto a = temperament(one);
    CHECK(a.L_values == std::vector<double>{1.0});
    CHECK(a.label == Temperament::choleric);

    std::vector<std::vector<EmotionCurve>> two{{sine_emotion(1.0, 1.0, 21)},
                                               {sine_emotion(0.6, 1.0, 21)}};
    auto b = temperament(two);
    CHECK(b.L_values[1] == doctest::Approx(0.6));
    CHECK(b.group_N == doctest::Approx(0.8));
    CHECK(b.label == Temperament::choleric);

    // Sampled curve without a descriptor uses finite differences.
    std::vector<std::vector<EmotionCurve>> raw{{EmotionCurve({0.0, 1.0, 0.0}, 1.0)},
                                               {EmotionCurve({0.0, 0.2, 0.0}, 1.0)}};
    CHECK(temperament(raw).group_N == doctest::Approx(0.6));
}

TEST_CASE("step interpolation") {
    std::vector<double> v{2.0, 4.0};
    auto s = interpolate_steps(v, 0.0, 2);
    CHECK(s == std::vector<double>{0.0, 1.0, 2.0, 3.0, 4.0});
}

}  // TEST_SUITE
