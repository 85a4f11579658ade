#ifndef PLAP_NEHARI_HPP
#define PLAP_NEHARI_HPP

#include <optional>
#include <string>
#include <vector>

#include "plap/energy.hpp"
#include "plap/growth.hpp"

namespace plap {

/// psi_u(t) = Phi(t u), the fibering map along the ray through u.
double fiber(const Problem& pr, const GridFunction& u, double t);

/// d/dt psi_u(t) = <Phi'(t u), u>.
double fiber_slope(const Problem& pr, const GridFunction& u, double t);

struct NehariProjection {
    double t = 0.0;         // the unique maximizer t_u of the fibering map
    GridFunction w;         // t_u * u, on the Nehari set
    double slope_residual;  // |<Phi'(w), w>| after bisection
};

/// Thrown when the fibering map has no interior maximum within the bracket
/// bound (the slope never turns negative), which signals a hypothesis
/// violation such as q <= p.
class FiberDivergence : public std::runtime_error {
public:
    explicit FiberDivergence(const std::string& what) : std::runtime_error(what) {}
};

/// Unique positive scaling onto the Nehari set, by bracket expansion (double
/// t until the slope turns negative) followed by bisection; eps_fib is the
/// relative bracket tolerance.
NehariProjection project_nehari(const Problem& pr, const GridFunction& u,
                                double eps_fib = 1e-12);

struct StepRule {
    double initial = 1.0;
    double backtrack = 0.5;
    double armijo_c = 1e-4;
};

struct InitialGuess {
    enum class Kind { bump, random, given };
    Kind kind = Kind::bump;
    double amplitude = 1.0;
    std::optional<GridFunction> value;  // for Kind::given
};

struct SolverConfig {
    int max_iterations = 20000;
    double eps_res = 1e-8;   // residual tolerance, scaled by max(1, ||u||^{p-1})
    double eps_fib = 1e-12;  // fibering bisection tolerance (relative)
    InitialGuess initial;
    StepRule step;
    std::uint64_t seed = 12345;
    bool override_hypotheses = false;
};

struct TraceRow {
    int iteration;
    double energy;
    double residual;
    double fibering_t;
    double step_size;
};

struct SolveResult {
    explicit SolveResult(GridFunction u) : minimizer(std::move(u)) {}
    GridFunction minimizer;
    double energy = 0.0;
    double residual_norm = 0.0;
    double fibering_t = 1.0;
    std::vector<double> t_history;
    std::vector<TraceRow> trace;
    int iterations = 0;
    bool converged = false;
    std::string message;
};

/// Ground-state search: descend Psi(w) = Phi(t_w w) over the unit E-sphere.
/// Each iteration projects onto the Nehari set, takes the Euler-Lagrange
/// residual as ascent direction, removes its J-normal component, and
/// retracts with Armijo backtracking. Energy never increases across
/// accepted steps.
SolveResult ground_state(const Problem& pr, const SolverConfig& cfg);

struct SobolevResult {
    explicit SobolevResult(DomainPtr d)
        : extremal(d), solve(GridFunction(std::move(d))) {}
    double S = 0.0;             // best-constant estimate inf ||u||_D / ||u||_q
    GridFunction extremal;      // ground state scaled to unit l^q norm
    bool flagged = false;       // outside the 1 < p < N, q > p* regime
    std::string flag_reason;
    SolveResult solve;
};

/// Best discrete Sobolev constant on the domain via the pure-power ground
/// state: S = ||w||^{(q-p)/q} for the V = 0 ground state w.
SobolevResult sobolev_constant(double p, double q, DomainPtr domain,
                               const SolverConfig& cfg);

struct QuotientResult {
    explicit QuotientResult(DomainPtr d) : minimizer(std::move(d)) {}
    double S = 0.0;
    GridFunction minimizer;
    int iterations = 0;
};

/// Independent estimate of the same constant: direct descent on the Rayleigh
/// quotient ||u||_{D^{1,p}} / ||u||_q from several random starts. Shares no
/// code path with the Nehari route.
QuotientResult sobolev_quotient_descent(double p, double q, DomainPtr domain,
                                        int n_starts, std::uint64_t seed,
                                        int max_iterations = 5000);

}  // namespace plap

#endif
