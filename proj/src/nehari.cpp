#include "plap/nehari.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "plap/rng.hpp"

namespace plap {

double fiber(const Problem& pr, const GridFunction& u, double t) {
    return energy(pr, t * u);
}

double fiber_slope(const Problem& pr, const GridFunction& u, double t) {
    if (!(t > 0.0)) throw std::invalid_argument("fibering map is defined for t > 0");
    double acc = std::pow(t, pr.p() - 1.0) * e_norm_pow(pr, u);
    for (std::int64_t x = 0; x < u.size(); ++x) acc -= pr.f(x, t * u[x]) * u[x];
    return acc;
}

namespace {

constexpr double bracket_growth_cap = 1e18;
constexpr double bracket_shrink_cap = 1e-18;

bool is_zero(const GridFunction& u) {
    for (double v : u.values())
        if (v != 0.0) return false;
    return true;
}

}  // namespace

NehariProjection project_nehari(const Problem& pr, const GridFunction& u,
                                double eps_fib) {
    if (is_zero(u))
        throw std::invalid_argument("cannot project the zero function onto the Nehari set");
    const double p = pr.p();
    const double A = e_norm_pow(pr, u);
    if (!(A > 0.0))
        throw FiberDivergence(
            "direction has nonpositive E-energy; the fibering map has no interior maximum");

    // the power family is (q-1)-homogeneous in t > 0, so the nonlinear sum
    // factorizes once and each bisection step is O(1)
    const double q = pr.nonlinearity().exponent();
    double B = 0.0;
    for (std::int64_t x = 0; x < u.size(); ++x)
        B += pr.weight_at(x) * std::pow(std::abs(u[x]), q);

    auto slope = [&](double t) {
        return std::pow(t, p - 1.0) * A - std::pow(t, q - 1.0) * B;
    };

    double lo = 1.0, hi = 1.0;
    double s1 = slope(1.0);
    if (s1 > 0.0) {
        hi = 2.0;
        while (slope(hi) > 0.0) {
            lo = hi;
            hi *= 2.0;
            if (hi > bracket_growth_cap)
                throw FiberDivergence(
                    "fibering slope stayed positive up to t=1e18; "
                    "the fibering map diverges (superlinearity such as q > p is violated)");
        }
    } else if (s1 < 0.0) {
        lo = 0.5;
        while (slope(lo) < 0.0) {
            hi = lo;
            lo *= 0.5;
            if (lo < bracket_shrink_cap)
                throw FiberDivergence(
                    "fibering slope stayed negative down to t=1e-18; "
                    "no Nehari crossing on the ray (hypothesis violation)");
        }
    }

    if (lo != hi) {
        for (int it = 0; it < 200 && (hi - lo) > eps_fib * hi; ++it) {
            double mid = 0.5 * (lo + hi);
            double s = slope(mid);
            if (s > 0.0)
                lo = mid;
            else if (s < 0.0)
                hi = mid;
            else {
                lo = hi = mid;
                break;
            }
        }
    }

    NehariProjection out{0.5 * (lo + hi), GridFunction(u.domain_ptr()), 0.0};
    out.w = out.t * u;
    out.slope_residual = std::abs(out.t * slope(out.t));
    return out;
}

namespace {

GridFunction make_initial(const Problem& pr, const SolverConfig& cfg) {
    const DomainPtr& d = pr.domain_ptr();
    switch (cfg.initial.kind) {
        case InitialGuess::Kind::bump: {
            std::vector<int> center(d->dim(), d->side() / 2);
            double width = std::max(d->side() / 8.0, 0.1);
            return GridFunction::gaussian_bump(d, center, width, cfg.initial.amplitude);
        }
        case InitialGuess::Kind::random: {
            Rng rng(cfg.seed);
            double a = cfg.initial.amplitude;
            return rng.uniform_field(d, -a, a);
        }
        case InitialGuess::Kind::given: {
            if (!cfg.initial.value)
                throw std::invalid_argument("initial guess kind 'given' without a value");
            if (cfg.initial.value->size() != d->vertex_count())
                throw std::invalid_argument("initial guess lives on a different domain");
            return *cfg.initial.value;
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace

SolveResult ground_state(const Problem& pr, const SolverConfig& cfg) {
    if (!cfg.override_hypotheses) {
        GrowthReport rep =
            check_growth_conditions(pr.nonlinearity(), pr.p(), pr.domain().dim());
        if (rep.has_failure())
            throw HypothesisError("hypothesis check failed:\n" + rep.summary());
    }

    const double p = pr.p();
    GridFunction u0 = make_initial(pr, cfg);
    double en0_pow = e_norm_pow(pr, u0);
    if (!std::isfinite(en0_pow))
        throw std::runtime_error("initial guess has non-finite E-energy");
    if (en0_pow < 0.0)
        throw std::runtime_error(
            "initial guess has negative E-energy: the potential is too "
            "indefinite for the sphere reformulation");
    if (en0_pow == 0.0)
        throw std::invalid_argument(
            "initial guess vanishes in the E-norm; nothing to project");
    GridFunction w = u0 * std::pow(en0_pow, -1.0 / p);

    SolveResult res{GridFunction(pr.domain_ptr())};
    NehariProjection proj = project_nehari(pr, w, cfg.eps_fib);
    double phi = energy(pr, proj.w);
    double last_sigma = 0.0;

    for (int it = 0; it < cfg.max_iterations; ++it) {
        if (!std::isfinite(phi))
            throw std::runtime_error("energy is not finite at iteration " +
                                     std::to_string(it) + "; aborting");
        const GridFunction& u = proj.w;
        const double t_w = proj.t;
        GridFunction g = residual(pr, u);
        double rnorm = lq_norm(g, pr.dual_exponent());

        res.trace.push_back({it, phi, rnorm, t_w, last_sigma});
        res.t_history.push_back(t_w);
        res.iterations = it + 1;

        double eps_scaled = cfg.eps_res * std::max(1.0, std::pow(t_w, p - 1.0));
        if (rnorm <= eps_scaled) {
            res.converged = true;
            res.message = "residual below tolerance";
            break;
        }

        // remove the J-normal component; <J(w), w> = 1 on the unit sphere
        double jww = j_pairing(pr, w, w);
        double jwg = j_pairing(pr, w, g);
        GridFunction ghat = g - (jwg / jww) * w;
        double m = t_w * dot(g, ghat);
        if (!(m > 0.0) || !std::isfinite(m)) {
            res.message = "stationary on the sphere (no descent direction)";
            break;
        }

        // near the minimum the Armijo decrease c sigma m drops below the
        // floating-point resolution of Phi; in that noise-limited regime the
        // test carries no information, so demand contraction of the residual
        // itself instead
        double fp_slack =
            8.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(phi));
        double sigma = cfg.step.initial;
        bool accepted = false;
        while (sigma >= 1e-18) {
            GridFunction cand = w - sigma * ghat;
            double den_pow = e_norm_pow(pr, cand);
            if (den_pow > 0.0 && std::isfinite(den_pow)) {
                GridFunction wn = cand * std::pow(den_pow, -1.0 / p);
                try {
                    NehariProjection pn = project_nehari(pr, wn, cfg.eps_fib);
                    double phin = energy(pr, pn.w);
                    bool measurable = cfg.step.armijo_c * sigma * m > fp_slack;
                    bool ok = std::isfinite(phin) &&
                              phin <= phi - cfg.step.armijo_c * sigma * m + fp_slack;
                    if (ok && !measurable) {
                        // strict step-proportional contraction: rejects the
                        // overshoots that cause limit cycles but keeps the
                        // slow modes moving
                        double required =
                            1.0 - 0.05 * std::min(1.0, sigma / cfg.step.initial);
                        ok = lq_norm(residual(pr, pn.w), pr.dual_exponent()) <=
                             required * rnorm;
                    }
                    if (ok) {
                        w = std::move(wn);
                        proj = std::move(pn);
                        phi = phin;
                        last_sigma = sigma;
                        accepted = true;
                        break;
                    }
                } catch (const FiberDivergence&) {
                    // candidate left the admissible cone; shorten the step
                }
            }
            sigma *= cfg.step.backtrack;
        }
        if (!accepted) {
            res.message = "line search stalled before reaching the residual tolerance";
            break;
        }
    }

    if (!res.converged && res.message.empty())
        res.message = "iteration cap reached";
    res.minimizer = proj.w;
    res.energy = phi;
    res.fibering_t = proj.t;
    res.residual_norm = residual_norm(pr, proj.w);
    return res;
}

SobolevResult sobolev_constant(double p, double q, DomainPtr domain,
                               const SolverConfig& cfg) {
    if (!(q > p))
        throw std::invalid_argument("sobolev constant requires q > p");
    Problem pr(domain, Potential::constant(0.0), Nonlinearity::power(q), p);

    SobolevResult out(domain);
    const int N = domain->dim();
    if (!(p < static_cast<double>(N))) {
        out.flagged = true;
        out.flag_reason = "p >= N: outside the 1 < p < N regime; computed on the truncation anyway";
    } else {
        double ps = N * p / (N - p);
        if (!(q > ps)) {
            out.flagged = true;
            out.flag_reason = "q <= p*: at or below the critical exponent; computed anyway";
        }
    }

    SolverConfig inner = cfg;
    inner.override_hypotheses = true;  // the flag above records the regime
    out.solve = ground_state(pr, inner);

    double en = e_norm(pr, out.solve.minimizer);
    out.S = std::pow(en, (q - p) / q);
    double nq = lq_norm(out.solve.minimizer, q);
    out.extremal = out.solve.minimizer * (1.0 / nq);
    return out;
}

QuotientResult sobolev_quotient_descent(double p, double q, DomainPtr domain,
                                        int n_starts, std::uint64_t seed,
                                        int max_iterations) {
    if (!(q > p)) throw std::invalid_argument("quotient descent requires q > p");
    const Domain& d = *domain;

    auto edge_pow = [&](const GridFunction& u) {
        double acc = 0.0;
        for (const Edge& e : d.edges()) {
            double du = (e.is_ghost() ? 0.0 : u[e.b]) - u[e.a];
            acc += std::pow(std::abs(du), p);
        }
        return acc;
    };
    auto neg_laplacian = [&](const GridFunction& u) {
        GridFunction out(u.domain_ptr());
        for (const Edge& e : d.edges()) {
            double du = (e.is_ghost() ? 0.0 : u[e.b]) - u[e.a];
            double flux = signed_pow(du, p);
            out[e.a] -= flux;
            if (!e.is_ghost()) out[e.b] += flux;
        }
        return out;
    };
    // G(u) = (1/p) log sum_e |grad u|^p - (1/q) log sum_x |u|^q, scale free
    auto log_quotient = [&](const GridFunction& u, double& Dp, double& Nq) {
        Dp = edge_pow(u);
        Nq = 0.0;
        for (double v : u.values()) Nq += std::pow(std::abs(v), q);
        if (!(Dp > 0.0) || !(Nq > 0.0)) return std::numeric_limits<double>::infinity();
        return std::log(Dp) / p - std::log(Nq) / q;
    };

    QuotientResult best(domain);
    best.S = std::numeric_limits<double>::infinity();
    for (int s = 0; s < n_starts; ++s) {
        Rng rng(seed + static_cast<std::uint64_t>(s));
        // the quotient landscape has one basin per condensation site; bump
        // starts at varied cells explore them, the first one centered
        double width = std::max(d.side() / 8.0, 0.1);
        std::vector<int> center(d.dim(), d.side() / 2);
        if (s > 0)
            for (int a = 0; a < d.dim(); ++a)
                center[a] = static_cast<int>(rng.index(d.side()));
        GridFunction u = GridFunction::gaussian_bump(domain, center, width);
        if (s > 0) {
            GridFunction noise = rng.uniform_field(domain, -0.05, 0.05);
            u += noise;
        }
        double Dp = 0.0, Nq = 0.0;
        double G = log_quotient(u, Dp, Nq);
        if (std::isinf(G)) continue;

        auto gradient = [&](const GridFunction& v, double Dpv, double Nqv, double& norm2) {
            GridFunction grad = neg_laplacian(v);
            norm2 = 0.0;
            for (std::int64_t i = 0; i < v.size(); ++i) {
                grad[i] = grad[i] / Dpv - signed_pow(v[i], q) / Nqv;
                norm2 += grad[i] * grad[i];
            }
            return grad;
        };

        int it = 0;
        for (; it < max_iterations; ++it) {
            double g2 = 0.0;
            GridFunction grad = gradient(u, Dp, Nq, g2);
            if (g2 <= 1e-24) break;

            // same noise-floor handling as the sphere solver: once the Armijo
            // decrease is below the fp resolution of G, demand contraction of
            // the gradient norm instead
            double fp_slack =
                8.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(G));
            double sigma = 1.0;
            bool accepted = false;
            while (sigma >= 1e-18) {
                GridFunction cand = u - sigma * grad;
                double Dpc = 0.0, Nqc = 0.0;
                double Gc = log_quotient(cand, Dpc, Nqc);
                bool measurable = 1e-4 * sigma * g2 > fp_slack;
                bool ok = Gc <= G - 1e-4 * sigma * g2 + fp_slack;
                if (ok && !measurable) {
                    double g2c = 0.0;
                    gradient(cand, Dpc, Nqc, g2c);
                    ok = g2c <= (1.0 - 0.05 * std::min(1.0, sigma)) * g2;
                }
                if (ok) {
                    // renormalize to ||u||_q = 1 to keep magnitudes tame
                    double scale = std::pow(Nqc, -1.0 / q);
                    u = cand * scale;
                    G = log_quotient(u, Dp, Nq);
                    accepted = true;
                    break;
                }
                sigma *= 0.5;
            }
            if (!accepted) break;
        }
        best.iterations += it;
        double S_here = std::exp(G);
        if (S_here < best.S) {
            best.S = S_here;
            double scale = std::pow(Nq, -1.0 / q);
            best.minimizer = u * scale;
        }
    }
    if (std::isinf(best.S))
        throw std::runtime_error("quotient descent failed from every start");
    return best;
}

}  // namespace plap
