#include "plap/nonlinearity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace plap {

Nonlinearity Nonlinearity::power(double q, double weight) {
    if (!(q > 1.0)) throw std::invalid_argument("power family requires q > 1");
    if (!(weight > 0.0)) throw std::invalid_argument("weight must be positive");
    Nonlinearity n;
    n.q_ = q;
    n.const_weight_ = weight;
    return n;
}

Nonlinearity Nonlinearity::power_weighted(double q, int dim, int period,
                                          std::vector<double> cell) {
    if (!(q > 1.0)) throw std::invalid_argument("power family requires q > 1");
    for (double a : cell)
        if (!(a > 0.0)) throw std::invalid_argument("weight must be positive");
    Nonlinearity n;
    n.q_ = q;
    n.weight_table_.emplace(dim, period, std::move(cell));
    return n;
}

double Nonlinearity::weight(std::span<const int> x) const {
    return weight_table_ ? weight_table_->at(x) : const_weight_;
}

double Nonlinearity::max_weight() const {
    if (!weight_table_) return const_weight_;
    return *std::max_element(weight_table_->cell().begin(), weight_table_->cell().end());
}

int Nonlinearity::weight_period() const {
    return weight_table_ ? weight_table_->period() : 1;
}

double Nonlinearity::f(std::span<const int> x, double t) const {
    if (t == 0.0) return 0.0;
    return weight(x) * std::copysign(std::pow(std::abs(t), q_ - 1.0), t);
}

double Nonlinearity::F(std::span<const int> x, double t) const {
    return weight(x) * std::pow(std::abs(t), q_) / q_;
}

std::string Nonlinearity::describe() const {
    std::string w = weight_table_ ? ("periodic weight T=" + std::to_string(weight_table_->period()))
                                  : ("weight " + std::to_string(const_weight_));
    return "power q=" + std::to_string(q_) + ", " + w;
}

}  // namespace plap
