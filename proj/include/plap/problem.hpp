#ifndef PLAP_PROBLEM_HPP
#define PLAP_PROBLEM_HPP

#include <cmath>

#include "plap/grid_function.hpp"
#include "plap/nonlinearity.hpp"
#include "plap/norms.hpp"
#include "plap/potential.hpp"

namespace plap {

/// |s|^{p-2} s, continuously extended by 0 at s = 0 (avoids 0^negative for
/// 1 < p < 2).
inline double signed_pow(double s, double p) {
    if (s == 0.0) return 0.0;
    return std::copysign(std::pow(std::abs(s), p - 1.0), s);
}

/// The problem triple (domain, V, f) plus the exponent p. Potential and
/// nonlinearity weight are cached per vertex so the energy kernels never
/// touch coordinates.
class Problem {
public:
    Problem(DomainPtr domain, Potential potential, Nonlinearity nonlinearity, double p);

    const Domain& domain() const { return *domain_; }
    const DomainPtr& domain_ptr() const { return domain_; }
    const Potential& potential() const { return potential_; }
    const Nonlinearity& nonlinearity() const { return nonlinearity_; }
    double p() const { return p_; }
    double dual_exponent() const { return p_ / (p_ - 1.0); }

    double v_at(std::int64_t vertex) const { return v_values_[vertex]; }
    double weight_at(std::int64_t vertex) const { return a_values_[vertex]; }

    double f(std::int64_t vertex, double t) const {
        if (t == 0.0) return 0.0;
        return a_values_[vertex] * std::copysign(std::pow(std::abs(t), q_ - 1.0), t);
    }
    double F(std::int64_t vertex, double t) const {
        return a_values_[vertex] * std::pow(std::abs(t), q_) / q_;
    }

    double min_potential() const { return min_v_; }

private:
    DomainPtr domain_;
    Potential potential_;
    Nonlinearity nonlinearity_;
    double p_;
    double q_;
    std::vector<double> v_values_;
    std::vector<double> a_values_;
    double min_v_;
};

}  // namespace plap

#endif
