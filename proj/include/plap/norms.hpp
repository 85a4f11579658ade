#ifndef PLAP_NORMS_HPP
#define PLAP_NORMS_HPP

#include <limits>

#include "plap/grid_function.hpp"
#include "plap/potential.hpp"

namespace plap {

inline constexpr double q_infinity = std::numeric_limits<double>::infinity();

/// (sum |u|^q)^(1/q), or sup|u| for q = infinity. Requires q >= 1.
double lq_norm(const GridFunction& u, double q);

/// (sum over edges |u(y)-u(x)|^p)^(1/p); each undirected edge enters once and
/// ghost edges contribute |u(x)|^p. Requires p > 1.
double dirichlet_norm(const GridFunction& u, double p);

/// Signed p-th power of the E-norm: sum_edges |grad u|^p + sum_x V(x)|u(x)|^p.
/// Negative only when V has a negative part that dominates.
double e_norm_pow(const GridFunction& u, const Potential& V, double p);

/// E-norm of eq-style (edge seminorm + potential term)^(1/p). Throws when the
/// p-th power is negative (indefinite potential outside the smallness regime).
double e_norm(const GridFunction& u, const Potential& V, double p);

}  // namespace plap

#endif
