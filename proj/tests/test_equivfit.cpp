#include <doctest.h>

#include <cmath>
#include <vector>

#include "affectus/emotion.hpp"
#include "affectus/equivfit.hpp"
#include "affectus/error.hpp"
#include "affectus/prng.hpp"

using namespace affectus;

namespace {

std::vector<double> forward(double theta, double q, double R1, int n) {
    std::vector<double> R{R1};
    while (static_cast<int>(R.size()) < n) R.push_back(q + theta * R.back());
    return R;
}

}  // namespace

TEST_SUITE("equivfit") {

TEST_CASE("linear fit on the three-point example") {
    std::vector<double> R{1.0, 3.0, 4.0};
    auto p = fit_linear(R);
    CHECK(p.theta == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(p.q == doctest::Approx(2.5).epsilon(1e-12));
    CHECK(p.valid);
    CHECK(limiting_education(p.q, p.theta) == doctest::Approx(5.0).epsilon(1e-12));
}

TEST_CASE("linear fit recovers generated parameters") {
    auto R = forward(0.3, 2.0, 1.0, 10);
    auto p = fit_linear(R);
    CHECK(std::abs(p.theta - 0.3) < 1e-9);
    CHECK(std::abs(p.q - 2.0) < 1e-9);
}

TEST_CASE("linear fit on constant data is singular") {
    std::vector<double> R(5, 2.0);
    try {
        fit_linear(R);
        FAIL("expected singular fit");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::singular_fit);
    }
}

TEST_CASE("general fit") {
    auto R = forward(0.5, 2.5, 1.0, 8);
    auto p = fit_general(R);
    CHECK(std::abs(p.theta - 0.5) < 1e-6);
    CHECK(std::abs(p.q - 2.5) < 1e-6);

    std::vector<double> flat(6, 1.7);
    auto c = fit_general(flat);
    CHECK(c.theta == 0.0);
    CHECK(c.q == doctest::Approx(1.7));
    CHECK(c.residual == doctest::Approx(0.0));

    std::vector<double> ex{1.0, 3.0, 4.0};
    CHECK(fit_general(ex).residual <= fit_linear(ex).residual + 1e-9);

    std::vector<double> down{3.0, 2.0, 1.5};
    CHECK_FALSE(fit_general(down).warnings.empty());
}

TEST_CASE("general fit residual is no worse than a grid scan") {
    Xorshift64Star rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<double> R{rng.uniform(0.5, 2.0)};
        for (int i = 0; i < 5; ++i) R.push_back(R.back() + rng.uniform(0.0, 2.0));
        auto p = fit_general(R);
        double best = INFINITY;
        for (double th = 0.0; th < 1.0; th += 0.01)
            for (double q = 0.0; q < 6.0; q += 0.01) best = std::min(best, general_objective(R, th, q));
        CHECK(p.residual <= best + 1e-9);
    }
}

TEST_CASE("mismatched fit reproduces the grid example") {
    std::vector<double> R{3.0, 6.0, 10.0};
    auto p = fit_mismatched(R);
    CHECK(p.q == doctest::Approx(0.2).epsilon(1e-12));
    CHECK(p.theta == doctest::Approx(0.99).epsilon(1e-12));
    REQUIRE(p.step_map);
    CHECK(*p.step_map == std::vector<int>{16, 35, 69});
    CHECK(std::abs(p.residual - 0.0056) < 5e-4);
    CHECK(p.residual == doctest::Approx(mismatched_objective(R, 0.2, 0.99, *p.step_map)));
}

TEST_CASE("mismatched fit recovers exact data") {
    std::vector<double> R{1.0, 1.5, 1.75};
    MismatchedGrid g{0.5, 2.0, 0.5, 0.1, 0.9, 0.1, 10};
    auto p = fit_mismatched(R, g);
    CHECK(p.q == 1.0);
    CHECK(p.theta == doctest::Approx(0.5));
    CHECK(*p.step_map == std::vector<int>{1, 2, 3});
    CHECK(p.residual < 1e-24);
}

TEST_CASE("mismatched fit matches brute force on a small grid") {
    Xorshift64Star rng(2);
    MismatchedGrid g{0.5, 1.5, 0.5, 0.2, 0.8, 0.3, 8};
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<double> R{rng.uniform(0.5, 1.5)};
        for (int i = 0; i < 2; ++i) R.push_back(R.back() + rng.uniform(0.1, 1.0));
        double best = INFINITY;
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b)
                for (int j1 = 1; j1 <= 8; ++j1)
                    for (int j2 = j1 + 1; j2 <= 8; ++j2)
                        for (int j3 = j2 + 1; j3 <= 8; ++j3) {
                            std::vector<int> j{j1, j2, j3};
                            best = std::min(best, mismatched_objective(R, 0.5 + 0.5 * a, 0.2 + 0.3 * b, j));
                        }
        CHECK(fit_mismatched(R, g).residual == doctest::Approx(best).epsilon(1e-12));
    }
}

TEST_CASE("limiting error bound") {
    CHECK(limiting_error_bound(1.0, 0.5, 1.0, 0.5, 1.0, 0.5) == 0.0);
    // Smaller theta_hi shrinks the gap for a fixed M.
    double prev = INFINITY;
    for (double th_hi = 0.9; th_hi > 0.5; th_hi -= 0.1) {
        double x = limiting_error_bound(1.0, 0.5, 1.2, th_hi, 1.0, 0.5);
        CHECK(x <= prev);
        prev = x;
    }
    CHECK(limiting_error_bound(1.0, 0.5, 1.2, 0.6, 1.0, 0.5) == doctest::Approx(1.0));
}

TEST_CASE("memory coefficient function") {
    std::vector<double> R{1.0, 3.0, 4.0};
    std::vector<StepTimes> unit{{0.0, 1.0}, {1.0, 2.0}};
    for (auto& l : memory_coeff_function(R, unit)) {
        CHECK(l.a == doctest::Approx(-0.5));
        CHECK(l.b == 1.0);
    }
    for (auto& l : memory_coeff_function(1.0, unit)) CHECK(l.a == 0.0);
    std::vector<StepTimes> two{{0.0, 2.0}};
    CHECK(memory_coeff_function(0.5, two)[0].a == doctest::Approx(-0.25));
}

TEST_CASE("absolute fit") {
    std::vector<double> a{1.0, 2.0, 3.0, 4.0}, b(4, 2.0), c{0.0, 5.0};
    CHECK(fit_absolute(a) == doctest::Approx(1.0));
    CHECK(fit_absolute(b) == 0.0);
    CHECK(fit_absolute(c) == 5.0);
}

TEST_CASE("round trips") {
    Xorshift64Star rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        double th = rng.uniform(0.05, 0.95), q = rng.uniform(0.1, 5.0), R1 = rng.uniform(0.1, 5.0);
        auto R = forward(th, q, R1, 12);
        auto lin = fit_linear(R);
        CHECK(std::abs(lin.theta - th) < 1e-9);
        CHECK(std::abs(lin.q - q) < 1e-9);
        auto gen = fit_general(R);
        CHECK(std::abs(gen.theta - th) < 1e-6);
        CHECK(std::abs(gen.q - q) < 1e-6);
        auto A = forward(1.0, q, R1, 12);
        CHECK(std::abs(fit_absolute(A) - q) < 1e-9);
    }
}

}  // TEST_SUITE
