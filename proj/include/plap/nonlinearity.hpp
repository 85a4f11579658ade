#ifndef PLAP_NONLINEARITY_HPP
#define PLAP_NONLINEARITY_HPP

#include <optional>
#include <span>
#include <string>

#include "plap/potential.hpp"

namespace plap {

/// The weighted power family f(x,t) = a(x)|t|^{q-2} t with exact primitive
/// F(x,t) = a(x)|t|^q / q, a(x) > 0 constant or T-periodic. Only closed-form
/// primitives ship; everything the solver needs (f, F, oddness, growth
/// behaviour) follows from (q, a).
class Nonlinearity {
public:
    static Nonlinearity power(double q, double weight = 1.0);
    static Nonlinearity power_weighted(double q, int dim, int period,
                                       std::vector<double> cell);

    double exponent() const { return q_; }
    double weight(std::span<const int> x) const;
    double max_weight() const;
    int weight_period() const;
    bool odd_in_t() const { return true; }

    double f(std::span<const int> x, double t) const;
    double F(std::span<const int> x, double t) const;

    std::string describe() const;

private:
    Nonlinearity() = default;
    double q_ = 0.0;
    double const_weight_ = 1.0;
    std::optional<CellTable> weight_table_;
};

}  // namespace plap

#endif
