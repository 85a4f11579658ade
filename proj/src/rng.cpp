#include "plap/rng.hpp"

#include <cmath>

namespace plap {

double Rng::log_uniform(double a, double b) {
    return std::exp(uniform(std::log(a), std::log(b)));
}

GridFunction Rng::uniform_field(DomainPtr d, double lo, double hi) {
    GridFunction u(std::move(d));
    for (std::int64_t i = 0; i < u.size(); ++i) u[i] = uniform(lo, hi);
    return u;
}

}  // namespace plap
