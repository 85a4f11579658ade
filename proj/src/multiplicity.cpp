#include "plap/multiplicity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>

#include "plap/parallel.hpp"
#include "plap/rng.hpp"

namespace plap {

namespace {

// all shift vectors kT, k in {0,...,side/T - 1}^N
std::vector<std::vector<int>> orbit_shifts(const Domain& d, int period) {
    int reps = d.side() / period;
    std::vector<std::vector<int>> shifts;
    std::vector<int> k(d.dim(), 0);
    std::size_t total = 1;
    for (int i = 0; i < d.dim(); ++i) total *= static_cast<std::size_t>(reps);
    shifts.reserve(total);
    for (std::size_t n = 0; n < total; ++n) {
        std::size_t r = n;
        for (int i = d.dim() - 1; i >= 0; --i) {
            k[i] = static_cast<int>(r % reps) * period;
            r /= reps;
        }
        shifts.push_back(k);
    }
    return shifts;
}

}  // namespace

double orbit_distance(const Problem& pr, const GridFunction& u,
                      const GridFunction& v, int period) {
    const Domain& d = pr.domain();
    if (d.boundary() != Boundary::torus)
        throw std::invalid_argument("orbit distance requires a torus domain");
    if (period < 1 || d.side() % period != 0)
        throw std::invalid_argument("orbit period must divide the domain side");

    double best = std::numeric_limits<double>::infinity();
    for (const auto& k : orbit_shifts(d, period)) {
        GridFunction shifted = u.translated(k);
        best = std::min(best, e_norm(pr, shifted - v));
    }
    return best;
}

OrbitSet find_distinct(const Problem& pr, const SolverConfig& cfg,
                       const DistinctOptions& opt) {
    const Domain& d = pr.domain();
    if (d.boundary() != Boundary::torus)
        throw std::invalid_argument("distinct-orbit search requires a torus domain");
    if (opt.period < 1 || d.side() % opt.period != 0)
        throw std::invalid_argument("orbit period must divide the domain side");
    if (opt.n_starts < 1) throw std::invalid_argument("need at least one start");

    // start pattern: the centered bump and its translates by random period
    // multiples; the mixed pattern also cycles in random fields, bumps at
    // arbitrary cells, and sign-flipped bumps for a wider sweep
    auto make_start = [&](int i) -> GridFunction {
        DomainPtr dp = pr.domain_ptr();
        double width = std::max(d.side() / 8.0, 0.1);
        std::vector<int> center(d.dim(), d.side() / 2);
        if (i == 0) return GridFunction::gaussian_bump(dp, center, width);
        Rng rng(cfg.seed + static_cast<std::uint64_t>(1000 + i));
        if (opt.starts == DistinctOptions::Starts::mixed) {
            for (int a = 0; a < d.dim(); ++a)
                center[a] = static_cast<int>(rng.index(d.side()));
            switch (i % 3) {
                case 0: return rng.uniform_field(dp, -1.0, 1.0);
                case 1: return GridFunction::gaussian_bump(dp, center, width);
                default: return -GridFunction::gaussian_bump(dp, center, width);
            }
        }
        int reps = d.side() / opt.period;
        for (int a = 0; a < d.dim(); ++a) {
            int shift = static_cast<int>(rng.index(reps)) * opt.period;
            center[a] = (center[a] + shift) % d.side();
        }
        return GridFunction::gaussian_bump(dp, center, width);
    };

    std::vector<std::optional<SolveResult>> outcomes(opt.n_starts);
    auto run_one = [&](int i) {
        SolverConfig local = cfg;
        local.seed = cfg.seed + static_cast<std::uint64_t>(i);
        local.initial.kind = InitialGuess::Kind::given;
        local.initial.value = make_start(i);
        try {
            SolveResult r = ground_state(pr, local);
            if (r.converged) outcomes[i] = std::move(r);
        } catch (const std::exception&) {
            // divergent or degenerate start; recorded as non-convergent
        }
    };

    // starts are independent; run them concurrently, dedup sequentially
    parallel_indices(opt.n_starts, run_one);

    OrbitSet set;
    set.period = opt.period;
    set.starts_attempted = opt.n_starts;

    std::vector<SolveResult> reps;
    for (auto& o : outcomes) {
        if (!o) continue;
        ++set.starts_converged;
        double delta = opt.delta_orb > 0.0
                           ? opt.delta_orb
                           : 1e-4 * e_norm(pr, o->minimizer);
        bool merged = false;
        for (const auto& r : reps) {
            if (orbit_distance(pr, o->minimizer, r.minimizer, opt.period) <= delta) {
                merged = true;
                break;
            }
        }
        if (!merged) reps.push_back(std::move(*o));
        set.delta_orb = delta;  // last candidate's dedup radius, reported
    }

    if (opt.sign_companions && pr.nonlinearity().odd_in_t()) {
        std::size_t base = reps.size();
        for (std::size_t i = 0; i < base; ++i) {
            GridFunction neg = -reps[i].minimizer;
            double delta = opt.delta_orb > 0.0 ? opt.delta_orb
                                               : 1e-4 * e_norm(pr, neg);
            bool distinct = true;
            for (const auto& r : reps) {
                if (orbit_distance(pr, neg, r.minimizer, opt.period) <= delta) {
                    distinct = false;
                    break;
                }
            }
            if (distinct) {
                SolveResult mirror = reps[i];
                mirror.minimizer = std::move(neg);
                reps.push_back(std::move(mirror));
            }
        }
    }

    std::sort(reps.begin(), reps.end(),
              [](const SolveResult& a, const SolveResult& b) { return a.energy < b.energy; });
    set.representatives = std::move(reps);

    std::size_t n = set.representatives.size();
    set.distances.assign(n, std::vector<double>(n, 0.0));
    set.kappa_empirical = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            double dist = orbit_distance(pr, set.representatives[i].minimizer,
                                         set.representatives[j].minimizer, opt.period);
            set.distances[i][j] = set.distances[j][i] = dist;
            set.kappa_empirical = std::min(set.kappa_empirical, dist);
        }
    }
    if (n < 2) set.kappa_empirical = 0.0;
    if (set.representatives.empty())
        set.message = "no start converged; try more starts or a larger iteration cap";
    return set;
}

}  // namespace plap
