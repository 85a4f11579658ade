#include "plap/potential.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace plap {

namespace {
int mod_period(int c, int T) {
    int m = c % T;
    if (m < 0) m += T;
    return m;
}
}  // namespace

CellTable::CellTable(int dim, int period, std::vector<double> cell)
    : dim_(dim), period_(period), cell_(std::move(cell)) {
    if (dim_ < 1) throw std::invalid_argument("cell table dim must be >= 1");
    if (period_ < 1) throw std::invalid_argument("period must be >= 1");
    std::size_t expect = 1;
    for (int i = 0; i < dim_; ++i) expect *= static_cast<std::size_t>(period_);
    if (cell_.size() != expect)
        throw std::invalid_argument("cell table needs period^dim values");
}

double CellTable::at(std::span<const int> x) const {
    std::size_t idx = 0;
    for (int i = 0; i < dim_; ++i)
        idx = idx * static_cast<std::size_t>(period_) +
              static_cast<std::size_t>(mod_period(x[i], period_));
    return cell_[idx];
}

Potential Potential::constant(double value) {
    Potential p;
    p.mode_ = Mode::constant;
    p.value_ = value;
    return p;
}

Potential Potential::periodic(int dim, int period, std::vector<double> cell) {
    Potential p;
    p.mode_ = Mode::periodic;
    p.table_.emplace_back(dim, period, std::move(cell));
    return p;
}

Potential Potential::decaying(double v_inf,
                              std::vector<std::pair<std::vector<int>, double>> dips) {
    Potential p;
    p.mode_ = Mode::decaying;
    p.value_ = v_inf;
    for (auto& [at, depth] : dips) {
        if (depth > 0.0)
            throw std::invalid_argument("decaying potential requires depth <= 0 (V <= V_inf)");
        p.dips_[at] = depth;
    }
    return p;
}

double Potential::operator()(std::span<const int> x) const {
    switch (mode_) {
        case Mode::constant: return value_;
        case Mode::periodic: return table_.front().at(x);
        case Mode::decaying: {
            auto it = dips_.find(std::vector<int>(x.begin(), x.end()));
            return value_ + (it == dips_.end() ? 0.0 : it->second);
        }
    }
    return value_;
}

int Potential::period() const {
    return mode_ == Mode::periodic ? table_.front().period() : 1;
}

double Potential::limit() const { return value_; }

std::string Potential::describe() const {
    switch (mode_) {
        case Mode::constant: return "constant " + std::to_string(value_);
        case Mode::periodic:
            return "periodic T=" + std::to_string(table_.front().period());
        case Mode::decaying:
            return "decaying to " + std::to_string(value_) + " with " +
                   std::to_string(dips_.size()) + " dip(s)";
    }
    return "";
}

NegativePartCheck negative_part_check(const Potential& V, const Domain& d,
                                      double p, double r, double S_estimate) {
    if (r <= p) throw std::invalid_argument("negative part check requires r > p");
    if (S_estimate <= 0.0) throw std::invalid_argument("S_estimate must be positive");
    const double exponent = r / (r - p);
    double acc = 0.0;
    for (std::int64_t v = 0; v < d.vertex_count(); ++v) {
        auto c = d.coords_of(v);
        double val = V(c);
        if (val < 0.0) acc += std::pow(-val, exponent);
    }
    NegativePartCheck out;
    out.norm = std::pow(acc, 1.0 / exponent);
    out.threshold = std::pow(S_estimate, p);
    out.pass = out.norm < out.threshold;
    return out;
}

}  // namespace plap
