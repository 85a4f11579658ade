#include "plap/grid_function.hpp"

#include <cmath>
#include <stdexcept>

namespace plap {

GridFunction::GridFunction(DomainPtr domain, double fill)
    : domain_(std::move(domain)),
      values_(static_cast<std::size_t>(domain_->vertex_count()), fill) {}

GridFunction::GridFunction(DomainPtr domain, std::vector<double> values)
    : domain_(std::move(domain)), values_(std::move(values)) {
    if (static_cast<std::int64_t>(values_.size()) != domain_->vertex_count())
        throw std::invalid_argument("value array length does not match vertex count");
}

bool GridFunction::all_finite() const {
    for (double v : values_)
        if (!std::isfinite(v)) return false;
    return true;
}

GridFunction& GridFunction::operator+=(const GridFunction& other) {
    if (other.size() != size())
        throw std::invalid_argument("grid functions live on different domains");
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
    return *this;
}

GridFunction& GridFunction::operator-=(const GridFunction& other) {
    if (other.size() != size())
        throw std::invalid_argument("grid functions live on different domains");
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= other.values_[i];
    return *this;
}

GridFunction& GridFunction::operator*=(double c) {
    for (double& v : values_) v *= c;
    return *this;
}

GridFunction GridFunction::operator-() const {
    GridFunction r = *this;
    r *= -1.0;
    return r;
}

GridFunction GridFunction::delta(DomainPtr domain, std::span<const int> at, double height) {
    GridFunction u(domain);
    u[domain->index_of(at)] = height;
    return u;
}

GridFunction GridFunction::gaussian_bump(DomainPtr domain, std::span<const int> center,
                                         double width, double height) {
    if (width <= 0.0) throw std::invalid_argument("bump width must be positive");
    GridFunction u(std::move(domain));
    const Domain& d = u.domain();
    for (std::int64_t v = 0; v < d.vertex_count(); ++v) {
        auto c = d.coords_of(v);
        double r2 = 0.0;
        for (int i = 0; i < d.dim(); ++i) {
            double dx = static_cast<double>(c[i] - center[i]);
            if (d.boundary() == Boundary::torus) {
                // nearest periodic image
                double L = d.side();
                dx = dx - L * std::round(dx / L);
            }
            r2 += dx * dx;
        }
        u[v] = height * std::exp(-r2 / (2.0 * width * width));
    }
    return u;
}

GridFunction GridFunction::translated(std::span<const int> k) const {
    GridFunction v(domain_);
    for (std::int64_t i = 0; i < size(); ++i)
        v[i] = values_[domain_->shifted_source(i, k)];
    return v;
}

double dot(const GridFunction& a, const GridFunction& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("grid functions live on different domains");
    double s = 0.0;
    for (std::int64_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace plap
