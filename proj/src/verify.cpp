#include "plap/verify.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

#include "plap/rng.hpp"

namespace plap {

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os << std::setprecision(9) << v;
    return os.str();
}

GridFunction random_values(Rng& rng, DomainPtr d, double lo = -10.0, double hi = 10.0) {
    return rng.uniform_field(std::move(d), lo, hi);
}

}  // namespace

bool VerifyReport::all_pass() const {
    for (const auto& c : checks)
        if (c.status == CheckStatus::fail) return false;
    return true;
}

std::string VerifyReport::table() const {
    std::size_t width = 0;
    for (const auto& c : checks) width = std::max(width, c.name.size());
    std::ostringstream os;
    os << "verification suite (seed " << seed << ")\n";
    for (const auto& c : checks) {
        os << "  " << std::left << std::setw(static_cast<int>(width) + 2) << c.name
           << to_string(c.status) << "  " << c.witness << "\n";
    }
    return os.str();
}

VerifyReport run_suite(const Problem& pr, std::uint64_t seed,
                       const VerifyTolerances& tol, const SolverConfig& solver_cfg) {
    VerifyReport rep;
    rep.seed = seed;
    DomainPtr d = pr.domain_ptr();
    const double p = pr.p();

    // prologue: the standing hypotheses, so violating configurations are
    // visible at the top of the report
    GrowthReport growth =
        check_growth_conditions(pr.nonlinearity(), p, pr.domain().dim());
    {
        std::string detail;
        CheckStatus st = CheckStatus::pass;
        for (const auto& c : growth.conditions) {
            if (c.status == CheckStatus::fail) {
                st = CheckStatus::fail;
                detail += c.name + " fails: " + c.detail + "; ";
            }
        }
        if (detail.empty()) detail = "S2-S5 sampled checks hold";
        rep.checks.push_back({"hypotheses_s2_s5",
                              "growth/monotonicity conditions on f and F", st, 0.0,
                              detail});
    }

    // 1: l^q monotonicity in q
    {
        Rng rng(seed + 1);
        double worst = 0.0;
        std::string witness = "no violation over 200 functions";
        CheckStatus st = CheckStatus::pass;
        for (int i = 0; i < 200; ++i) {
            GridFunction u = random_values(rng, d);
            double q = rng.uniform(1.0, 8.0);
            double r = q + rng.uniform(0.0, 8.0);
            double nq = lq_norm(u, q), nr = lq_norm(u, r);
            double slack = (nq - nr) / std::max(1.0, nq);
            if (slack < worst) worst = slack;
            if (slack < -tol.lq_monotonicity) {
                st = CheckStatus::fail;
                witness = "||u||_" + fmt(r) + " > ||u||_" + fmt(q) + " by " + fmt(-slack);
                break;
            }
            double ninf = lq_norm(u, q_infinity);
            if ((nq - ninf) / std::max(1.0, nq) < -tol.lq_monotonicity) {
                st = CheckStatus::fail;
                witness = "sup norm exceeds ||.||_" + fmt(q);
                break;
            }
        }
        if (st == CheckStatus::pass)
            witness = "min normalized slack " + fmt(worst) + " over 200 functions";
        rep.checks.push_back({"lq_monotonicity", "||u||_r <= ||u||_q for r >= q >= 1",
                              st, tol.lq_monotonicity, witness});
    }

    // 2: elementary p-difference inequality, p >= 2 only
    {
        VerifyCheck c{"p_difference_inequality",
                      "|a1-a2|^p <= 2^{p-1}(|a1|^{p-2}a1 - |a2|^{p-2}a2)(a1-a2)",
                      CheckStatus::pass, tol.p_inequality, ""};
        if (p < 2.0) {
            c.status = CheckStatus::skip;
            c.witness = "skipped: requires p >= 2 (p = " + fmt(p) + ")";
        } else {
            Rng rng(seed + 2);
            double worst = 0.0;
            for (int i = 0; i < 10000; ++i) {
                double a1 = rng.uniform(-10.0, 10.0), a2 = rng.uniform(-10.0, 10.0);
                double lhs = std::pow(std::abs(a1 - a2), p);
                double rhs = std::pow(2.0, p - 1.0) *
                             (signed_pow(a1, p) - signed_pow(a2, p)) * (a1 - a2);
                double slack = (rhs - lhs) / std::max(1.0, std::abs(rhs));
                if (slack < worst) worst = slack;
                if (slack < -tol.p_inequality) {
                    c.status = CheckStatus::fail;
                    c.witness = "violated at a1=" + fmt(a1) + ", a2=" + fmt(a2);
                    break;
                }
            }
            if (c.status == CheckStatus::pass)
                c.witness = "min normalized slack " + fmt(worst) + " over 10000 pairs";
        }
        rep.checks.push_back(std::move(c));
    }

    // 3: f(x,s) s >= p F(x,s); exact ratio q/p for the power family
    {
        Rng rng(seed + 3);
        VerifyCheck c{"superlinearity_fs_pF", "f(x,s) s >= p F(x,s)",
                      CheckStatus::pass, tol.super_linearity, ""};
        double q = pr.nonlinearity().exponent();
        double worst = std::numeric_limits<double>::infinity();
        for (int i = 0; i < 10000; ++i) {
            std::int64_t x = rng.index(pr.domain().vertex_count());
            double s = rng.uniform(-10.0, 10.0);
            double lhs = pr.f(x, s) * s, rhs = p * pr.F(x, s);
            double slack = (lhs - rhs) / std::max(1.0, std::abs(lhs));
            if (slack < worst) worst = slack;
            if (slack < -tol.super_linearity) {
                c.status = CheckStatus::fail;
                c.witness = "violated at s=" + fmt(s);
                break;
            }
            if (s != 0.0 && rhs != 0.0) {
                double ratio = lhs / rhs;
                if (std::abs(ratio - q / p) > 1e-9 * (q / p)) {
                    c.status = CheckStatus::fail;
                    c.witness = "power-family ratio fs/(pF) = " + fmt(ratio) +
                                " differs from q/p = " + fmt(q / p);
                    break;
                }
            }
        }
        if (c.status == CheckStatus::pass)
            c.witness = "min normalized slack " + fmt(worst) +
                        " over 10000 samples; ratio q/p = " + fmt(q / p) + " exact";
        rep.checks.push_back(std::move(c));
    }

    // 4: fibering inequality with equality only at t = 1
    {
        Rng rng(seed + 4);
        VerifyCheck c{"fibering_inequality",
                      "Phi(u) >= Phi(tu) + ((1-t^p)/p) <Phi'(u), u>, equality iff t=1",
                      CheckStatus::pass, tol.fibering, ""};
        double worst = std::numeric_limits<double>::infinity();
        for (int i = 0; i < 1000; ++i) {
            GridFunction u = random_values(rng, d);
            double t = rng.log_uniform(1e-3, 1e3);
            double lhs = energy(pr, u);
            double rhs = energy(pr, t * u) +
                         (1.0 - std::pow(t, p)) / p * pairing(pr, u, u);
            double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
            double slack = (lhs - rhs) / scale;
            if (slack < worst) worst = slack;
            if (slack < -tol.fibering) {
                c.status = CheckStatus::fail;
                c.witness = "violated at t=" + fmt(t) + " with slack " + fmt(slack);
                break;
            }
            if (slack <= tol.fibering && std::abs(t - 1.0) > 1e-6) {
                c.status = CheckStatus::fail;
                c.witness = "equality reached at t=" + fmt(t) + " != 1";
                break;
            }
        }
        if (c.status == CheckStatus::pass)
            c.witness = "min normalized slack " + fmt(worst) + " over 1000 pairs";
        rep.checks.push_back(std::move(c));
    }

    // 5: pairing against central finite differences of the energy
    {
        Rng rng(seed + 5);
        VerifyCheck c{"gradient_pairing_fd",
                      "<Phi'(u), v> matches (Phi(u+eps v) - Phi(u-eps v)) / 2 eps",
                      CheckStatus::pass, tol.gradient_fd, ""};
        const double eps = 1e-6;
        double worst = 0.0;
        std::vector<double> exponents{2.0, 3.0};
        if (p != 2.0 && p != 3.0) exponents.push_back(p);
        for (double pe : exponents) {
            Problem prt(d, pr.potential(), pr.nonlinearity(), pe);
            for (int i = 0; i < 10 && c.status == CheckStatus::pass; ++i) {
                GridFunction u = random_values(rng, d);
                if (pe < 2.0) {
                    // keep |u| and edge differences away from 0 where the
                    // second derivative blows up
                    for (std::int64_t j = 0; j < u.size(); ++j) {
                        double sign = u[j] >= 0.0 ? 1.0 : -1.0;
                        u[j] = sign * (1.0 + std::abs(u[j]));
                        u[j] += 0.37 * static_cast<double>(j % 7);
                    }
                }
                GridFunction v = random_values(rng, d, -1.0, 1.0);
                double fd = (energy(prt, u + eps * v) - energy(prt, u - eps * v)) / (2 * eps);
                double pv = pairing(prt, u, v);
                double rel = std::abs(fd - pv) / std::max(1.0, std::abs(pv));
                if (rel > worst) worst = rel;
                if (rel > tol.gradient_fd) {
                    c.status = CheckStatus::fail;
                    c.witness = "relative error " + fmt(rel) + " at p=" + fmt(pe);
                }
            }
        }
        if (c.status == CheckStatus::pass)
            c.witness = "worst relative error " + fmt(worst) + " over p in {2,3" +
                        (exponents.size() > 2 ? "," + fmt(p) : std::string()) + "}";
        rep.checks.push_back(std::move(c));
    }

    // 6: pairing equals the residual sum (discrete integration by parts)
    {
        Rng rng(seed + 6);
        VerifyCheck c{"pairing_residual_consistency",
                      "<Phi'(u), v> = sum_x residual(u)(x) v(x)",
                      CheckStatus::pass, tol.pairing_residual, ""};
        double worst = 0.0;
        for (int i = 0; i < 25; ++i) {
            GridFunction u = random_values(rng, d);
            GridFunction v = random_values(rng, d);
            double lhs = pairing(pr, u, v);
            double rhs = dot(residual(pr, u), v);
            double rel = std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs));
            if (rel > worst) worst = rel;
            if (rel > tol.pairing_residual) {
                c.status = CheckStatus::fail;
                c.witness = "relative mismatch " + fmt(rel);
                break;
            }
        }
        if (c.status == CheckStatus::pass)
            c.witness = "worst relative mismatch " + fmt(worst) + " over 25 pairs";
        rep.checks.push_back(std::move(c));
    }

    // 7-9 need a converged ground state
    SolverConfig scfg = solver_cfg;
    scfg.seed = seed;
    scfg.override_hypotheses = true;  // report, do not refuse
    std::string solver_failure;
    SolveResult gs{GridFunction(d)};
    try {
        gs = ground_state(pr, scfg);
        if (!gs.converged)
            solver_failure = "solver did not converge: " + gs.message;
    } catch (const FiberDivergence& e) {
        solver_failure = std::string("fibering projection diverged: ") + e.what();
    } catch (const std::exception& e) {
        solver_failure = e.what();
    }

    {
        VerifyCheck c{"ground_state_sign",
                      "the computed ground state is strictly one-signed",
                      CheckStatus::pass, 0.0, ""};
        if (!solver_failure.empty()) {
            c.status = CheckStatus::fail;
            c.witness = solver_failure;
        } else {
            bool pos = true, neg = true;
            for (double v : gs.minimizer.values()) {
                pos = pos && v > 0.0;
                neg = neg && v < 0.0;
            }
            if (pos || neg) {
                c.witness = std::string("strictly ") + (pos ? "positive" : "negative") +
                            " on all " + std::to_string(gs.minimizer.size()) + " vertices";
            } else {
                c.status = CheckStatus::fail;
                c.witness = "sign change or zero value on the interior";
            }
        }
        rep.checks.push_back(std::move(c));
    }

    {
        VerifyCheck c{"nehari_energy_identity",
                      "Phi(u*) = (1/p) sum f(x,u*) u* - sum F(x,u*) on the Nehari set",
                      CheckStatus::pass, tol.energy_identity, ""};
        if (!solver_failure.empty()) {
            c.status = CheckStatus::fail;
            c.witness = solver_failure;
        } else {
            double rhs = nonlinear_pairing_sum(pr, gs.minimizer) / p -
                         nonlinear_primitive_sum(pr, gs.minimizer);
            double rel = std::abs(gs.energy - rhs) / std::max(1e-300, std::abs(gs.energy));
            if (rel > tol.energy_identity) {
                c.status = CheckStatus::fail;
                c.witness = "relative gap " + fmt(rel);
            } else {
                c.witness = "relative gap " + fmt(rel);
            }
        }
        rep.checks.push_back(std::move(c));
    }

    {
        VerifyCheck c{"energy_lower_bounds",
                      "Phi(u*) > 0 and ||u*||_E >= (p Phi(u*))^{1/p}",
                      CheckStatus::pass, tol.lower_bound, ""};
        if (!solver_failure.empty()) {
            c.status = CheckStatus::fail;
            c.witness = solver_failure;
        } else {
            double en = e_norm(pr, gs.minimizer);
            double bound = std::pow(p * gs.energy, 1.0 / p);
            if (!(gs.energy > 0.0)) {
                c.status = CheckStatus::fail;
                c.witness = "Phi(u*) = " + fmt(gs.energy) + " is not positive";
            } else if (en < bound - tol.lower_bound) {
                c.status = CheckStatus::fail;
                c.witness = "||u*|| = " + fmt(en) + " below (p Phi*)^{1/p} = " + fmt(bound);
            } else {
                c.witness = "Phi* = " + fmt(gs.energy) + ", ||u*|| = " + fmt(en) +
                            " >= " + fmt(bound);
            }
        }
        rep.checks.push_back(std::move(c));
    }

    return rep;
}

}  // namespace plap
