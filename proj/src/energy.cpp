#include "plap/energy.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace plap {

Problem::Problem(DomainPtr domain, Potential potential, Nonlinearity nonlinearity,
                 double p)
    : domain_(std::move(domain)),
      potential_(std::move(potential)),
      nonlinearity_(std::move(nonlinearity)),
      p_(p),
      q_(nonlinearity_.exponent()) {
    if (!(p_ > 1.0)) throw std::invalid_argument("problem requires p > 1");
    const Domain& d = *domain_;
    v_values_.resize(d.vertex_count());
    a_values_.resize(d.vertex_count());
    min_v_ = std::numeric_limits<double>::infinity();
    for (std::int64_t v = 0; v < d.vertex_count(); ++v) {
        auto c = d.coords_of(v);
        v_values_[v] = potential_(c);
        a_values_[v] = nonlinearity_.weight(c);
        min_v_ = std::min(min_v_, v_values_[v]);
    }
}

namespace {

inline double ghost_aware(const GridFunction& u, std::int64_t idx) {
    return idx == Edge::ghost ? 0.0 : u[idx];
}

}  // namespace

double e_norm_pow(const Problem& pr, const GridFunction& u) {
    const double p = pr.p();
    double acc = 0.0;
    for (const Edge& e : pr.domain().edges()) {
        double diff = ghost_aware(u, e.b) - u[e.a];
        acc += std::pow(std::abs(diff), p);
    }
    for (std::int64_t v = 0; v < u.size(); ++v)
        acc += pr.v_at(v) * std::pow(std::abs(u[v]), p);
    return acc;
}

double e_norm(const Problem& pr, const GridFunction& u) {
    double s = e_norm_pow(pr, u);
    if (s < 0.0)
        throw std::domain_error("E-norm p-th power is negative for this potential");
    return std::pow(s, 1.0 / pr.p());
}

double nonlinear_pairing_sum(const Problem& pr, const GridFunction& u) {
    double acc = 0.0;
    for (std::int64_t v = 0; v < u.size(); ++v) acc += pr.f(v, u[v]) * u[v];
    return acc;
}

double nonlinear_primitive_sum(const Problem& pr, const GridFunction& u) {
    double acc = 0.0;
    for (std::int64_t v = 0; v < u.size(); ++v) acc += pr.F(v, u[v]);
    return acc;
}

double energy(const Problem& pr, const GridFunction& u) {
    return e_norm_pow(pr, u) / pr.p() - nonlinear_primitive_sum(pr, u);
}

double j_pairing(const Problem& pr, const GridFunction& u, const GridFunction& v) {
    const double p = pr.p();
    double acc = 0.0;
    for (const Edge& e : pr.domain().edges()) {
        double du = ghost_aware(u, e.b) - u[e.a];
        double dv = ghost_aware(v, e.b) - v[e.a];
        acc += signed_pow(du, p) * dv;
    }
    for (std::int64_t x = 0; x < u.size(); ++x)
        acc += pr.v_at(x) * signed_pow(u[x], p) * v[x];
    return acc;
}

double pairing(const Problem& pr, const GridFunction& u, const GridFunction& v) {
    double acc = j_pairing(pr, u, v);
    for (std::int64_t x = 0; x < u.size(); ++x) acc -= pr.f(x, u[x]) * v[x];
    return acc;
}

GridFunction residual(const Problem& pr, const GridFunction& u) {
    const double p = pr.p();
    GridFunction g(u.domain_ptr());
    // -Lap_p u scattered from the edge list; ghost neighbours carry value 0
    for (const Edge& e : pr.domain().edges()) {
        double du = ghost_aware(u, e.b) - u[e.a];
        double flux = signed_pow(du, p);
        g[e.a] -= flux;
        if (!e.is_ghost()) g[e.b] += flux;
    }
    for (std::int64_t x = 0; x < u.size(); ++x)
        g[x] += pr.v_at(x) * signed_pow(u[x], p) - pr.f(x, u[x]);
    return g;
}

double residual_norm(const Problem& pr, const GridFunction& u) {
    return lq_norm(residual(pr, u), pr.dual_exponent());
}

}  // namespace plap
