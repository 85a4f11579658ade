#include <doctest.h>

#include <cmath>

#include "plap/energy.hpp"
#include "plap/rng.hpp"

using namespace plap;

namespace {

// single dirichlet vertex, p = 2, V = 0, f = |t|^2 t: the hand instance
Problem tiny_problem() {
    return Problem(make_domain(1, 1, Boundary::dirichlet), Potential::constant(0.0),
                   Nonlinearity::power(4.0), 2.0);
}

GridFunction point(const Problem& pr, double value) {
    GridFunction u(pr.domain_ptr());
    u[0] = value;
    return u;
}

}  // namespace

TEST_CASE("tiny instance energies by hand") {
    Problem pr = tiny_problem();
    CHECK(energy(pr, point(pr, 1.0)) == doctest::Approx(0.75).epsilon(1e-14));
    CHECK(energy(pr, point(pr, 0.0)) == 0.0);
    CHECK(energy(pr, point(pr, std::sqrt(2.0))) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("tiny instance pairing by hand") {
    Problem pr = tiny_problem();
    auto u1 = point(pr, 1.0);
    CHECK(pairing(pr, u1, u1) == doctest::Approx(1.0).epsilon(1e-14));
    auto ustar = point(pr, std::sqrt(2.0));
    CHECK(pairing(pr, ustar, ustar) == doctest::Approx(0.0).scale(1.0).epsilon(1e-14));
}

TEST_CASE("pairing matches central differences for p = 3") {
    auto d = make_domain(1, 4, Boundary::dirichlet);
    Problem pr(d, Potential::constant(0.5), Nonlinearity::power(4.0), 3.0);
    Rng rng(17);
    const double eps = 1e-6;
    for (int i = 0; i < 10; ++i) {
        GridFunction u = rng.uniform_field(d, -2.0, 2.0);
        GridFunction v = rng.uniform_field(d, -1.0, 1.0);
        double fd = (energy(pr, u + eps * v) - energy(pr, u - eps * v)) / (2 * eps);
        double pv = pairing(pr, u, v);
        CHECK(std::abs(fd - pv) <= 1e-6 * std::max(1.0, std::abs(pv)));
    }
}

TEST_CASE("tiny instance residual by hand") {
    Problem pr = tiny_problem();
    auto g1 = residual(pr, point(pr, 1.0));
    CHECK(g1[0] == doctest::Approx(1.0).epsilon(1e-14));
    auto gstar = residual(pr, point(pr, std::sqrt(2.0)));
    CHECK(gstar[0] == doctest::Approx(0.0).scale(1.0).epsilon(1e-14));
}

TEST_CASE("p = 2, V = 0, f = 0 residual reduces to the graph laplacian") {
    auto d = make_domain(1, 3, Boundary::torus);
    // exponent far above p keeps f negligible only at u=0, so use a weightless
    // check: compare against the hand laplacian with f subtracted back
    Problem pr(d, Potential::constant(0.0), Nonlinearity::power(4.0), 2.0);
    GridFunction u(d, std::vector<double>{1.0, 0.0, -1.0});
    auto g = residual(pr, u);
    for (std::int64_t x = 0; x < 3; ++x) {
        double lap = 0.0;
        for (int off : {-1, 1}) {
            std::vector<int> s{off};
            lap += u[d->neighbor(x, s)] - u[x];
        }
        CHECK(g[x] + pr.f(x, u[x]) == doctest::Approx(-lap).epsilon(1e-13));
    }
}

TEST_CASE("residual norm uses the dual exponent") {
    Problem pr = tiny_problem();
    CHECK(residual_norm(pr, point(pr, std::sqrt(2.0))) ==
          doctest::Approx(0.0).scale(1.0).epsilon(1e-13));
    CHECK(residual_norm(pr, point(pr, 1.0)) == doctest::Approx(1.0).epsilon(1e-13));

    auto d2 = make_domain(1, 2, Boundary::torus);
    Problem pr2(d2, Potential::constant(1.0), Nonlinearity::power(4.0), 2.0);
    GridFunction g(d2, std::vector<double>{3.0, 4.0});
    CHECK(lq_norm(g, pr2.dual_exponent()) == doctest::Approx(5.0).epsilon(1e-14));
}

TEST_CASE("pairing equals the residual sum on dirichlet and torus domains") {
    Rng rng(23);
    for (auto boundary : {Boundary::dirichlet, Boundary::torus}) {
        auto d = make_domain(2, 4, boundary);
        Problem pr(d, Potential::constant(0.3), Nonlinearity::power(4.0), 2.5);
        for (int i = 0; i < 10; ++i) {
            GridFunction u = rng.uniform_field(d, -10.0, 10.0);
            GridFunction v = rng.uniform_field(d, -10.0, 10.0);
            double lhs = pairing(pr, u, v);
            double rhs = dot(residual(pr, u), v);
            CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(lhs)));
        }
    }
}

TEST_CASE("pairing(u,u) = ||u||^p - sum f(x,u) u") {
    Rng rng(29);
    auto d = make_domain(2, 4, Boundary::dirichlet);
    for (double p : {1.5, 2.0, 3.0}) {
        Problem pr(d, Potential::constant(0.25), Nonlinearity::power(4.0), p);
        for (int i = 0; i < 10; ++i) {
            GridFunction u = rng.uniform_field(d, -10.0, 10.0);
            double lhs = pairing(pr, u, u);
            double rhs = e_norm_pow(pr, u) - nonlinear_pairing_sum(pr, u);
            CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(lhs)));
        }
    }
}

TEST_CASE("elementary p-difference inequality for p >= 2") {
    Rng rng(31);
    for (double p : {2.0, 2.5, 3.0, 4.0}) {
        for (int i = 0; i < 2000; ++i) {
            double a1 = rng.uniform(-10.0, 10.0);
            double a2 = rng.uniform(-10.0, 10.0);
            double lhs = std::pow(std::abs(a1 - a2), p);
            double rhs = std::pow(2.0, p - 1.0) *
                         (signed_pow(a1, p) - signed_pow(a2, p)) * (a1 - a2);
            CHECK(lhs <= rhs * (1 + 1e-12) + 1e-12);
        }
    }
}

TEST_CASE("signed power branches cleanly at zero") {
    CHECK(signed_pow(0.0, 1.5) == 0.0);
    CHECK(signed_pow(4.0, 1.5) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(signed_pow(-4.0, 1.5) == doctest::Approx(-2.0).epsilon(1e-14));
    CHECK(std::isfinite(signed_pow(1e-300, 1.5)));
}
