#ifndef PLAP_ENERGY_HPP
#define PLAP_ENERGY_HPP

#include "plap/problem.hpp"

namespace plap {

/// Phi(u) = (1/p)(edge p-sum + potential p-sum) - sum_x F(x, u(x)).
double energy(const Problem& pr, const GridFunction& u);

/// <Phi'(u), v>: edge terms + potential terms - nonlinearity terms.
double pairing(const Problem& pr, const GridFunction& u, const GridFunction& v);

/// <J(u), v>: the pairing without the nonlinearity part; on the unit sphere
/// <J(w), w> = ||w||^p = 1 and the tangent space is its kernel.
double j_pairing(const Problem& pr, const GridFunction& u, const GridFunction& v);

/// Pointwise Euler-Lagrange residual
///   g(x) = -Lap_p u(x) + V(x)|u|^{p-2}u(x) - f(x, u(x));
/// g == 0 exactly when u solves the truncated equation. Satisfies
/// pairing(u, v) = sum_x g(x) v(x) for every v.
GridFunction residual(const Problem& pr, const GridFunction& u);

/// l^{p'} norm of the residual with p' = p/(p-1), the finite surrogate for
/// the dual-space norm of Phi'(u).
double residual_norm(const Problem& pr, const GridFunction& u);

/// Signed p-th power of the problem's E-norm using the cached potential.
double e_norm_pow(const Problem& pr, const GridFunction& u);
double e_norm(const Problem& pr, const GridFunction& u);

/// sum_x f(x,u) u(x) and sum_x F(x,u) over the domain.
double nonlinear_pairing_sum(const Problem& pr, const GridFunction& u);
double nonlinear_primitive_sum(const Problem& pr, const GridFunction& u);

}  // namespace plap

#endif
