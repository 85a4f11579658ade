#include <doctest.h>

#include <cmath>

#include "plap/growth.hpp"
#include "plap/nonlinearity.hpp"
#include "plap/potential.hpp"
#include "plap/rng.hpp"

using namespace plap;

namespace {
const std::vector<int> origin1{0};
}

TEST_CASE("power family point values") {
    auto nl = Nonlinearity::power(4.0);
    CHECK(nl.f(origin1, 2.0) == doctest::Approx(8.0).epsilon(1e-14));
    CHECK(nl.F(origin1, 2.0) == doctest::Approx(4.0).epsilon(1e-14));
    CHECK(nl.f(origin1, -2.0) == doctest::Approx(-8.0).epsilon(1e-14));
    CHECK(nl.f(origin1, 0.0) == 0.0);
    CHECK(nl.F(origin1, 0.0) == 0.0);
}

TEST_CASE("F is the exact primitive of f (finite-difference oracle)") {
    Rng rng(5);
    for (double q : {2.5, 4.0, 6.0}) {
        auto nl = Nonlinearity::power(q, 1.3);
        for (int i = 0; i < 20; ++i) {
            double t = rng.uniform(-3.0, 3.0);
            if (std::abs(t) < 0.1) continue;
            double h = 1e-6;
            double fd = (nl.F(origin1, t + h) - nl.F(origin1, t - h)) / (2 * h);
            CHECK(fd == doctest::Approx(nl.f(origin1, t)).epsilon(1e-6));
        }
        double t = 1.3;
        double h = 1e-6;
        double fd = (nl.F(origin1, t + h) - nl.F(origin1, t - h)) / (2 * h);
        CHECK(fd == doctest::Approx(nl.f(origin1, t)).epsilon(1e-6));
    }
}

TEST_CASE("oddness of the power family") {
    Rng rng(6);
    auto nl = Nonlinearity::power(3.7, 2.0);
    for (int i = 0; i < 100; ++i) {
        double t = rng.uniform(-10.0, 10.0);
        CHECK(nl.f(origin1, -t) == doctest::Approx(-nl.f(origin1, t)).epsilon(1e-14));
    }
}

TEST_CASE("superlinearity f(x,s)s >= pF(x,s) with exact ratio q/p") {
    Rng rng(8);
    for (double q : {3.0, 4.5}) {
        auto nl = Nonlinearity::power(q);
        for (double p : {1.5, 2.0, 2.5}) {
            for (int i = 0; i < 200; ++i) {
                double s = rng.uniform(-10.0, 10.0);
                if (s == 0.0) continue;
                double lhs = nl.f(origin1, s) * s;
                double rhs = p * nl.F(origin1, s);
                CHECK(lhs >= rhs * (1 - 1e-13));
                CHECK(lhs / rhs == doctest::Approx(q / p).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("growth report: boundary exponent q = p* fails S3, q > p* passes") {
    // p = 1.5, N = 2 gives p* = 6
    auto boundary = check_growth_conditions(Nonlinearity::power(6.0), 1.5, 2);
    CHECK(boundary.find("S3")->status == CheckStatus::fail);

    auto above = check_growth_conditions(Nonlinearity::power(6.5), 1.5, 2);
    for (const auto& c : above.conditions) CHECK(c.status == CheckStatus::pass);
    CHECK_FALSE(above.has_failure());
}

TEST_CASE("growth report: q = p makes the S4 ratio constant") {
    auto rep = check_growth_conditions(Nonlinearity::power(2.0), 2.0, 3);
    CHECK(rep.find("S4")->status == CheckStatus::fail);
    CHECK(rep.find("S5")->status == CheckStatus::fail);
}

TEST_CASE("growth report: subcritical q < p* fails the small-t decay check") {
    // q=4 below p*=6: f/|t|^{p*-1} = |t|^{-2} blows up near 0
    auto rep = check_growth_conditions(Nonlinearity::power(4.0), 2.0, 3);
    CHECK(rep.find("S3")->status == CheckStatus::fail);
    CHECK(rep.find("S4")->status == CheckStatus::pass);
    CHECK(rep.find("S5")->status == CheckStatus::pass);
    CHECK(rep.find("S2")->status == CheckStatus::pass);
}

TEST_CASE("growth report: p >= N skips the critical-exponent check") {
    auto rep = check_growth_conditions(Nonlinearity::power(4.0), 2.0, 1);
    CHECK(rep.find("S3")->status == CheckStatus::skip);
    CHECK_FALSE(rep.has_failure());
}

TEST_CASE("periodic potential repeats its cell exactly") {
    // T=2 in 1d: cell {1.0, 1.5}
    Potential V = Potential::periodic(1, 2, {1.0, 1.5});
    for (int x = -6; x <= 6; ++x) {
        std::vector<int> c{x};
        std::vector<int> shifted{x + 2};
        CHECK(V(c) == V(shifted));
    }
    CHECK(V(std::vector<int>{0}) == 1.0);
    CHECK(V(std::vector<int>{1}) == 1.5);
    CHECK(V(std::vector<int>{-1}) == 1.5);
}

TEST_CASE("decaying potential dips stay below the limit") {
    Potential V = Potential::decaying(1.0, {{{2}, -0.5}});
    CHECK(V(std::vector<int>{2}) == 0.5);
    CHECK(V(std::vector<int>{3}) == 1.0);
    CHECK_THROWS_AS(Potential::decaying(1.0, {{{0}, +0.5}}), std::invalid_argument);
}

TEST_CASE("negative part check examples") {
    auto d = make_domain(1, 5, Boundary::dirichlet);

    auto nonneg = negative_part_check(Potential::constant(1.0), *d, 2.0, 4.0, 1.0);
    CHECK(nonneg.norm == 0.0);
    CHECK(nonneg.pass);

    // single dip -0.5, exponent r/(r-p) = 2
    Potential dip = Potential::decaying(0.0, {{{2}, -0.5}});
    auto single = negative_part_check(dip, *d, 2.0, 4.0, 1.0);
    CHECK(single.norm == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(single.pass == (0.5 < 1.0));

    Potential two = Potential::decaying(0.0, {{{1}, -0.3}, {{3}, -0.4}});
    auto both = negative_part_check(two, *d, 2.0, 4.0, 1.0);
    CHECK(both.norm == doctest::Approx(0.5).epsilon(1e-14));

    CHECK_THROWS_AS(negative_part_check(dip, *d, 2.0, 2.0, 1.0), std::invalid_argument);
}

TEST_CASE("periodic weight must be positive") {
    CHECK_THROWS_AS(Nonlinearity::power(4.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(Nonlinearity::power_weighted(4.0, 1, 2, {1.0, -1.0}),
                    std::invalid_argument);
    auto nl = Nonlinearity::power_weighted(4.0, 1, 2, {1.0, 2.0});
    CHECK(nl.weight(std::vector<int>{0}) == 1.0);
    CHECK(nl.weight(std::vector<int>{3}) == 2.0);
    CHECK(nl.max_weight() == 2.0);
}
