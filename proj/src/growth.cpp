#include "plap/growth.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace plap {

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::skip: return "skip";
    }
    return "?";
}

bool GrowthReport::has_failure() const {
    for (const auto& c : conditions)
        if (c.status == CheckStatus::fail) return true;
    return false;
}

std::string GrowthReport::summary() const {
    std::ostringstream os;
    for (const auto& c : conditions)
        os << c.name << ": " << to_string(c.status) << " (" << c.detail << ")\n";
    return os.str();
}

const ConditionCheck* GrowthReport::find(const std::string& name) const {
    for (const auto& c : conditions)
        if (c.name == name) return &c;
    return nullptr;
}

namespace {

std::vector<double> log_grid(double lo, double hi, int points) {
    std::vector<double> g(points);
    double llo = std::log(lo), lhi = std::log(hi);
    for (int i = 0; i < points; ++i)
        g[i] = std::exp(llo + (lhi - llo) * i / (points - 1));
    return g;
}

// every point of the weight's period cell, or just the origin for constant a
std::vector<std::vector<int>> weight_samples(const Nonlinearity& nl, int dim) {
    int T = nl.weight_period();
    std::vector<std::vector<int>> xs;
    std::vector<int> x(dim, 0);
    std::size_t count = 1;
    for (int i = 0; i < dim; ++i) count *= static_cast<std::size_t>(T);
    xs.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        std::size_t r = k;
        for (int i = dim - 1; i >= 0; --i) {
            x[i] = static_cast<int>(r % T);
            r /= T;
        }
        xs.push_back(x);
    }
    return xs;
}

// least-squares slope of log(ratio) against log(t)
double loglog_slope(const std::vector<double>& t, const std::vector<double>& r) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (!(r[i] > 0.0) || !std::isfinite(r[i])) continue;
        double x = std::log(t[i]), y = std::log(r[i]);
        sx += x; sy += y; sxx += x * x; sxy += x * y;
        ++n;
    }
    if (n < 2) return 0.0;
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

}  // namespace

GrowthReport check_growth_conditions(const Nonlinearity& nl, double p, int N,
                                     const GrowthCheckOptions& opt) {
    GrowthReport rep;
    const double q = nl.exponent();
    const bool subcritical_ok = p < static_cast<double>(N);
    rep.critical_exponent =
        subcritical_ok ? N * p / (N - p) : std::numeric_limits<double>::quiet_NaN();

    auto grid = log_grid(opt.t_min, opt.t_max, opt.points);
    auto xs = weight_samples(nl, std::max(1, N));

    // S2: f(x,t) <= a (1 + |t|^{q-1}); a = max weight is exact for the family
    {
        double a = nl.max_weight();
        double worst = 0.0, worst_t = 0.0;
        for (double t : grid) {
            for (const auto& x : xs) {
                double ratio = std::abs(nl.f(x, t)) / (a * (1.0 + std::pow(t, q - 1.0)));
                if (ratio > worst) { worst = ratio; worst_t = t; }
            }
        }
        bool ok = worst <= 1.0 + 1e-12;
        rep.conditions.push_back(
            {"S2", ok ? CheckStatus::pass : CheckStatus::fail,
             "sup f/(a(1+|t|^{q-1})) = " + fmt(worst) + " at t=" + fmt(worst_t) +
                 ", a=" + fmt(a)});
    }

    // S3: f(x,t)/|t|^{p*-1} -> 0 as t -> 0, judged by the fitted small-t slope
    if (!subcritical_ok) {
        rep.conditions.push_back(
            {"S3", CheckStatus::skip,
             "p >= N: critical exponent p* undefined, check skipped"});
    } else {
        const double ps = rep.critical_exponent;
        std::vector<double> ts, rs;
        for (double t : grid) {
            if (t > 1.0) continue;
            double worst = 0.0;
            for (const auto& x : xs)
                worst = std::max(worst, std::abs(nl.f(x, t)) / std::pow(t, ps - 1.0));
            ts.push_back(t);
            rs.push_back(worst);
        }
        double slope = loglog_slope(ts, rs);
        bool ok = slope > 1e-6;
        rep.conditions.push_back(
            {"S3", ok ? CheckStatus::pass : CheckStatus::fail,
             "small-t slope of f/|t|^{p*-1} is " + fmt(slope) +
                 (ok ? " > 0: ratio vanishes" : " <= 0: ratio does not vanish") +
                 ", p*=" + fmt(ps)});
    }

    // S4: f(x,t)/|t|^{p-1} strictly increasing on (0, inf); the family is odd,
    // so the negative half-line follows
    {
        bool ok = true;
        double bad_t = 0.0;
        for (const auto& x : xs) {
            double prev = -std::numeric_limits<double>::infinity();
            for (double t : grid) {
                double ratio = nl.f(x, t) / std::pow(t, p - 1.0);
                if (!(ratio > prev * (1.0 + 1e-12) + 1e-300)) {
                    ok = false;
                    bad_t = t;
                    break;
                }
                prev = ratio;
            }
            if (!ok) break;
        }
        rep.conditions.push_back(
            {"S4", ok ? CheckStatus::pass : CheckStatus::fail,
             ok ? "f/|t|^{p-1} strictly increasing on the sample grid"
                : "f/|t|^{p-1} not strictly increasing at t=" + fmt(bad_t)});
    }

    // S5: F(x,t)/|t|^p -> infinity, judged by the fitted large-t slope
    {
        std::vector<double> ts, rs;
        for (double t : grid) {
            if (t < 1.0) continue;
            double worst = std::numeric_limits<double>::infinity();
            for (const auto& x : xs)
                worst = std::min(worst, nl.F(x, t) / std::pow(t, p));
            ts.push_back(t);
            rs.push_back(worst);
        }
        double slope = loglog_slope(ts, rs);
        bool ok = slope > 1e-6;
        rep.conditions.push_back(
            {"S5", ok ? CheckStatus::pass : CheckStatus::fail,
             "large-t slope of F/|t|^p is " + fmt(slope) +
                 (ok ? " > 0: ratio grows" : " <= 0: ratio does not grow")});
    }

    return rep;
}

}  // namespace plap
