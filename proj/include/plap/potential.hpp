#ifndef PLAP_POTENTIAL_HPP
#define PLAP_POTENTIAL_HPP

#include <map>
#include <span>
#include <string>
#include <vector>

#include "plap/domain.hpp"

namespace plap {

/// A table of values on the period cell [0,T)^N, addressed by coordinates
/// mod T. Backs periodic potentials and periodic nonlinearity weights.
class CellTable {
public:
    CellTable(int dim, int period, std::vector<double> cell);

    int period() const { return period_; }
    int dim() const { return dim_; }
    const std::vector<double>& cell() const { return cell_; }
    double at(std::span<const int> x) const;

private:
    int dim_;
    int period_;
    std::vector<double> cell_;
};

/// The potential V(x): constant, T-periodic (cell table), or decaying to a
/// limit V_inf with finitely many tabulated dips V(x) = V_inf + depth(x),
/// depth <= 0.
class Potential {
public:
    enum class Mode { constant, periodic, decaying };

    static Potential constant(double value);
    static Potential periodic(int dim, int period, std::vector<double> cell);
    static Potential decaying(double v_inf,
                              std::vector<std::pair<std::vector<int>, double>> dips);

    Mode mode() const { return mode_; }
    double operator()(std::span<const int> x) const;

    /// Period T for periodic mode, 1 otherwise (constants are T-periodic for
    /// every T).
    int period() const;
    double limit() const;  // V_inf (constant value in constant mode)

    std::string describe() const;

private:
    Potential() = default;
    Mode mode_ = Mode::constant;
    double value_ = 0.0;                      // constant / v_inf
    std::vector<CellTable> table_;            // periodic (0 or 1 entry)
    std::map<std::vector<int>, double> dips_; // decaying
};

/// Smallness report for the negative part of V:
/// norm = ||V_-||_{l^{r/(r-p)}} over the domain, pass iff norm < S_estimate^p.
struct NegativePartCheck {
    double norm = 0.0;
    double threshold = 0.0;
    bool pass = false;
};

NegativePartCheck negative_part_check(const Potential& V, const Domain& d,
                                      double p, double r, double S_estimate);

}  // namespace plap

#endif
