#include <doctest.h>

#include <cmath>

#include "plap/io.hpp"
#include "plap/norms.hpp"
#include "plap/rng.hpp"

using namespace plap;

TEST_CASE("lq norms of the {3,4} pair") {
    auto d = make_domain(1, 2, Boundary::dirichlet);
    GridFunction u(d, std::vector<double>{3, 4});
    CHECK(lq_norm(u, 2) == doctest::Approx(5.0).epsilon(1e-14));
    CHECK(lq_norm(u, q_infinity) == 4.0);
    CHECK(lq_norm(u, 1) == doctest::Approx(7.0).epsilon(1e-14));
    CHECK_THROWS_AS(lq_norm(u, 0.5), std::invalid_argument);
}

TEST_CASE("dirichlet seminorm of a delta") {
    auto d = make_domain(2, 5, Boundary::dirichlet);
    auto u = GridFunction::delta(d, std::vector<int>{2, 2});
    // four interior unit-difference edges
    CHECK(dirichlet_norm(u, 2) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(dirichlet_norm(u, 3) == doctest::Approx(std::pow(4.0, 1.0 / 3.0)).epsilon(1e-14));
}

TEST_CASE("constant function on a torus has zero seminorm") {
    auto d = make_domain(2, 4, Boundary::torus);
    GridFunction u(d, 2.5);
    CHECK(dirichlet_norm(u, 2) == 0.0);
    CHECK(dirichlet_norm(u, 1.5) == 0.0);
}

TEST_CASE("e-norm of a delta with a point potential") {
    auto d = make_domain(1, 1, Boundary::dirichlet);
    auto u = GridFunction::delta(d, std::vector<int>{0});
    // two ghost edges plus V(0)=3: sqrt(2 + 3)
    CHECK(e_norm(u, Potential::constant(3.0), 2) ==
          doctest::Approx(std::sqrt(5.0)).epsilon(1e-14));
    CHECK(e_norm(u, Potential::constant(0.0), 2) == dirichlet_norm(u, 2));
    GridFunction zero(d, 0.0);
    CHECK(e_norm(zero, Potential::constant(3.0), 2) == 0.0);
}

TEST_CASE("e-norm errors out on a negative p-th power instead of NaN") {
    auto d = make_domain(1, 1, Boundary::dirichlet);
    auto u = GridFunction::delta(d, std::vector<int>{0});
    // 2 + V < 0 for V = -3
    Potential v = Potential::decaying(0.0, {{{0}, -3.0}});
    CHECK(e_norm_pow(u, v, 2) == doctest::Approx(-1.0));
    CHECK_THROWS_AS(e_norm(u, v, 2), std::domain_error);
}

TEST_CASE("lq monotonicity in q on random functions") {
    Rng rng(7);
    auto d = make_domain(2, 6, Boundary::dirichlet);
    for (int i = 0; i < 50; ++i) {
        GridFunction u = rng.uniform_field(d, -10.0, 10.0);
        double q = rng.uniform(1.0, 6.0);
        double r = q + rng.uniform(0.0, 6.0);
        CHECK(lq_norm(u, r) <= lq_norm(u, q) * (1 + 1e-13));
        CHECK(lq_norm(u, q_infinity) <= lq_norm(u, q) * (1 + 1e-13));
    }
}

TEST_CASE("e-norm p-th power splits into seminorm and potential parts") {
    Rng rng(11);
    auto d = make_domain(2, 5, Boundary::dirichlet);
    Potential V = Potential::constant(0.7);
    for (double p : {1.5, 2.0, 3.0}) {
        GridFunction u = rng.uniform_field(d, -5.0, 5.0);
        double vpart = 0.0;
        for (std::int64_t v = 0; v < u.size(); ++v)
            vpart += 0.7 * std::pow(std::abs(u[v]), p);
        double lhs = e_norm_pow(u, V, p);
        double rhs = std::pow(dirichlet_norm(u, p), p) + vpart;
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
}

TEST_CASE("grid csv round-trips exactly") {
    Rng rng(3);
    auto d = make_domain(2, 3, Boundary::dirichlet);
    GridFunction u = rng.uniform_field(d, -1.0, 1.0);
    auto path = std::filesystem::temp_directory_path() / "plap_test_grid.csv";
    write_grid_csv(path, u);
    GridFunction v = read_grid_csv(path, d);
    for (std::int64_t i = 0; i < u.size(); ++i) CHECK(u[i] == v[i]);
    std::filesystem::remove(path);
}
