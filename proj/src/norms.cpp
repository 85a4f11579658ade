#include "plap/norms.hpp"

#include <cmath>
#include <stdexcept>

namespace plap {

double lq_norm(const GridFunction& u, double q) {
    if (!(q >= 1.0)) throw std::invalid_argument("lq_norm requires q >= 1");
    if (std::isinf(q)) {
        double sup = 0.0;
        for (double v : u.values()) sup = std::max(sup, std::abs(v));
        return sup;
    }
    double acc = 0.0;
    for (double v : u.values()) acc += std::pow(std::abs(v), q);
    return std::pow(acc, 1.0 / q);
}

namespace {

double edge_pow_sum(const GridFunction& u, double p) {
    double acc = 0.0;
    for (const Edge& e : u.domain().edges()) {
        double diff = (e.is_ghost() ? 0.0 : u[e.b]) - u[e.a];
        acc += std::pow(std::abs(diff), p);
    }
    return acc;
}

}  // namespace

double dirichlet_norm(const GridFunction& u, double p) {
    if (!(p > 1.0)) throw std::invalid_argument("dirichlet_norm requires p > 1");
    return std::pow(edge_pow_sum(u, p), 1.0 / p);
}

double e_norm_pow(const GridFunction& u, const Potential& V, double p) {
    if (!(p > 1.0)) throw std::invalid_argument("e_norm requires p > 1");
    double acc = edge_pow_sum(u, p);
    const Domain& d = u.domain();
    for (std::int64_t v = 0; v < d.vertex_count(); ++v) {
        auto c = d.coords_of(v);
        acc += V(c) * std::pow(std::abs(u[v]), p);
    }
    return acc;
}

double e_norm(const GridFunction& u, const Potential& V, double p) {
    double s = e_norm_pow(u, V, p);
    if (s < 0.0)
        throw std::domain_error(
            "E-norm p-th power is negative: indefinite potential outside the "
            "smallness regime; use e_norm_pow for the signed quantity");
    return std::pow(s, 1.0 / p);
}

}  // namespace plap
