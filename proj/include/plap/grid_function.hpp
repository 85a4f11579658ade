#ifndef PLAP_GRID_FUNCTION_HPP
#define PLAP_GRID_FUNCTION_HPP

#include <span>
#include <vector>

#include "plap/domain.hpp"

namespace plap {

/// A real-valued function on a domain's vertices, the finite stand-in for an
/// element of the energy space E. Plain value semantics; the domain is shared.
class GridFunction {
public:
    explicit GridFunction(DomainPtr domain, double fill = 0.0);
    GridFunction(DomainPtr domain, std::vector<double> values);

    const Domain& domain() const { return *domain_; }
    const DomainPtr& domain_ptr() const { return domain_; }

    std::int64_t size() const { return static_cast<std::int64_t>(values_.size()); }
    double operator[](std::int64_t i) const { return values_[i]; }
    double& operator[](std::int64_t i) { return values_[i]; }
    std::span<const double> values() const { return values_; }
    std::span<double> values() { return values_; }

    bool all_finite() const;

    GridFunction& operator+=(const GridFunction& other);
    GridFunction& operator-=(const GridFunction& other);
    GridFunction& operator*=(double c);
    friend GridFunction operator+(GridFunction a, const GridFunction& b) { return a += b; }
    friend GridFunction operator-(GridFunction a, const GridFunction& b) { return a -= b; }
    friend GridFunction operator*(double c, GridFunction a) { return a *= c; }
    friend GridFunction operator*(GridFunction a, double c) { return a *= c; }
    GridFunction operator-() const;

    /// Kronecker delta of the given height at one vertex.
    static GridFunction delta(DomainPtr domain, std::span<const int> at, double height = 1.0);

    /// Discrete Gaussian bump exp(-|x-center|^2 / (2 width^2)) of the given
    /// height; the solver's default initial guess uses width = side/8.
    static GridFunction gaussian_bump(DomainPtr domain, std::span<const int> center,
                                      double width, double height = 1.0);

    /// Same-orbit copy v(x) = u(x - k), torus domains only.
    GridFunction translated(std::span<const int> k) const;

private:
    DomainPtr domain_;
    std::vector<double> values_;
};

double dot(const GridFunction& a, const GridFunction& b);

}  // namespace plap

#endif
