#ifndef PLAP_MULTIPLICITY_HPP
#define PLAP_MULTIPLICITY_HPP

#include "plap/nehari.hpp"

namespace plap {

/// Distance between translation orbits: min over all shifts k in
/// (side/T)^N of ||u(. - kT) - v||_E. Torus domains only; T must divide side.
double orbit_distance(const Problem& pr, const GridFunction& u,
                      const GridFunction& v, int period);

struct OrbitSet {
    std::vector<SolveResult> representatives;  // sorted by energy
    std::vector<std::vector<double>> distances;
    double delta_orb = 0.0;
    int period = 1;
    double kappa_empirical = 0.0;  // min pairwise representative distance
    int starts_attempted = 0;
    int starts_converged = 0;
    std::string message;
};

struct DistinctOptions {
    enum class Starts { bumps, mixed };
    int n_starts = 5;
    double delta_orb = -1.0;  // <= 0: default 1e-4 * ||u*||_E per candidate
    int period = 1;
    bool sign_companions = false;
    // bumps: translated Gaussian bumps only; mixed: also random fields and
    // sign-flipped bumps for a wider critical-point sweep
    Starts starts = Starts::bumps;
};

/// Multi-start ground-state search with exhaustive translation-orbit
/// deduplication. With sign companions, the negation of each one-signed
/// representative is appended as its own orbit (odd nonlinearity).
OrbitSet find_distinct(const Problem& pr, const SolverConfig& cfg,
                       const DistinctOptions& opt);

}  // namespace plap

#endif
