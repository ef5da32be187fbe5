#include <doctest.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include "affectus/error.hpp"
#include "affectus/partition.hpp"
#include "affectus/prng.hpp"

using namespace affectus;

namespace {

// Every labeling of robots into group 0 or 1 with the requested sizes.
double brute_two_groups(const std::vector<double>& e, int n0) {
    std::size_t n = e.size();
    double best = INFINITY;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (std::popcount(mask) != n0) continue;
        double s0 = 0.0, s1 = 0.0;
        for (std::size_t i = 0; i < n; ++i) (mask >> i & 1 ? s0 : s1) += e[i];
        best = std::min(best, (s0 - s1) * (s0 - s1));
    }
    return best;
}

double sum_of(std::span<const double> e, const std::vector<std::size_t>& idx) {
    double s = 0.0;
    for (auto i : idx) s += e[i];
    return s;
}

}  // namespace

TEST_SUITE("partition") {

TEST_CASE("lagrange targets") {
    std::vector<int> a{2, 3};
    auto F = lagrange_targets(a, 12.0);
    CHECK(F[0] == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(F[1] == doctest::Approx(2.0).epsilon(1e-12));

    std::vector<int> b{1, 1};
    for (double f : lagrange_targets(b, 0.0)) CHECK(std::abs(f) < 1e-15);

    std::vector<int> c{1, 2, 3};
    auto G = lagrange_targets(c, 6.0);
    for (std::size_t i = 0; i < 3; ++i) CHECK(c[i] * G[i] == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("lagrange n=2 closed form") {
    Xorshift64Star rng(4);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<int> N{1 + static_cast<int>(rng.below(20)), 1 + static_cast<int>(rng.below(20))};
        double A = rng.uniform(-100.0, 100.0);
        auto F = lagrange_targets(N, A);
        for (int i = 0; i < 2; ++i) {
            double want = A / (2.0 * N[i]);
            CHECK(std::abs(F[i] - want) <= 1e-12 * std::max(1.0, std::abs(want)));
        }
    }
}

TEST_CASE("tantamount enumeration examples") {
    std::vector<double> e{1.0, 1.0, 2.0, 2.0};
    std::vector<int> N{2, 2};
    auto r = enumerate_tantamount(e, N);
    CHECK(r.J_min == 0.0);
    for (const auto& p : r.best_partitions) CHECK(tantamount_objective(p) == 0.0);
    // {0,2}|{1,3} and {0,3}|{1,2}, each listed once.
    CHECK(r.best_partitions.size() == 2);

    std::vector<double> f{1.0, 2.0, 3.0};
    std::vector<int> M{1, 2};
    auto s = enumerate_tantamount(f, M);
    CHECK(s.J_min == 0.0);
    REQUIRE(s.best_partitions.size() == 1);
    CHECK(s.best_partitions[0].groups[0] == std::vector<std::size_t>{2});

    std::vector<double> g(6, 1.5);
    std::vector<int> K{3, 3};
    auto t = enumerate_tantamount(g, K);
    CHECK(t.J_min == 0.0);
    CHECK(t.best_partitions.size() == 10);  // C(6,3) / 2
}

TEST_CASE("tantamount enumeration rejects bad sizes") {
    std::vector<double> e{1.0, 2.0};
    std::vector<int> N{1, 2};
    CHECK_THROWS_AS(enumerate_tantamount(e, N), Error);
    std::vector<double> big(15, 1.0);
    std::vector<int> M{7, 8};
    CHECK_THROWS_AS(enumerate_tantamount(big, M), Error);
}

TEST_CASE("tantamount enumeration matches brute force") {
    Xorshift64Star rng(12);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = 2 + rng.below(7);
        std::vector<double> e(n);
        for (auto& x : e) x = rng.uniform(-5.0, 10.0);
        int n0 = 1 + static_cast<int>(rng.below(n - 1));
        std::vector<int> N{n0, static_cast<int>(n) - n0};
        auto r = enumerate_tantamount(e, N);
        double want = brute_two_groups(e, n0);
        CHECK(r.J_min == doctest::Approx(want).epsilon(1e-12));
        for (const auto& p : r.best_partitions) {
            double d = sum_of(e, p.groups[0]) - sum_of(e, p.groups[1]);
            CHECK(d * d == doctest::Approx(r.J_min).epsilon(1e-9));
        }
    }
}

TEST_CASE("closeness") {
    std::vector<double> D{2.0, 1.0}, F{2.0, -2.0};
    CHECK(closeness(D, F) == doctest::Approx(1.5));
    std::vector<double> Z{0.0, 1.0};
    CHECK_THROWS_AS(closeness(D, Z), Error);
}

TEST_CASE("pairing by goal extent") {
    std::vector<double> a{1.0, 2.0, 3.0, 4.0};
    auto p = pair_by_goal_extent(a);
    CHECK(p.group_a == std::vector<std::size_t>{3, 0});
    CHECK(p.group_b == std::vector<std::size_t>{2, 1});

    std::vector<double> b(4, 5.0);
    auto q = pair_by_goal_extent(b);
    CHECK(q.group_a.size() == 2);
    CHECK(q.group_b.size() == 2);

    std::vector<double> c{1, 2, 3, 4, 5, 6, 7, 8};
    auto r = pair_by_goal_extent(c);
    CHECK(r.group_a == std::vector<std::size_t>{7, 0, 5, 2});
    CHECK(r.group_b == std::vector<std::size_t>{6, 1, 4, 3});
    CHECK(sum_of(c, r.group_a) == 18.0);
    CHECK(sum_of(c, r.group_b) == 18.0);
}

TEST_CASE("pairing keeps sums within the extent range") {
    Xorshift64Star rng(6);
    for (int trial = 0; trial < 500; ++trial) {
        std::size_t n = 4 * (1 + rng.below(4));
        std::vector<double> e(n);
        for (auto& x : e) x = rng.uniform(0.0, 3.0);
        auto p = pair_by_goal_extent(e);
        CHECK(p.group_a.size() + p.group_b.size() == n);
        auto [lo, hi] = std::minmax_element(e.begin(), e.end());
        CHECK(std::abs(sum_of(e, p.group_a) - sum_of(e, p.group_b)) <= *hi - *lo + 1e-12);
    }
}

}  // TEST_SUITE
