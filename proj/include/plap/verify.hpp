#ifndef PLAP_VERIFY_HPP
#define PLAP_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "plap/growth.hpp"
#include "plap/nehari.hpp"

namespace plap {

struct VerifyCheck {
    std::string name;
    std::string statement;  // the inequality or identity being sampled
    CheckStatus status = CheckStatus::pass;
    double tolerance = 0.0;
    std::string witness;  // worst sample found, or the failing one
};

struct VerifyTolerances {
    double lq_monotonicity = 1e-12;
    double p_inequality = 1e-12;
    double super_linearity = 1e-12;
    double fibering = 1e-12;
    double gradient_fd = 1e-6;
    double pairing_residual = 1e-12;
    double energy_identity = 1e-10;
    double lower_bound = 1e-8;
};

struct VerifyReport {
    std::vector<VerifyCheck> checks;
    std::uint64_t seed = 0;

    bool all_pass() const;  // skipped entries do not count as failures
    std::string table() const;
};

/// The one-command invariant suite: every in-scope quantitative statement as
/// a seeded, reproducible sampled check. Failures are report entries, never
/// exceptions; ground-state checks run with the hypothesis gate overridden
/// so that violating configurations produce diagnostics instead of errors.
VerifyReport run_suite(const Problem& pr, std::uint64_t seed,
                       const VerifyTolerances& tol = {},
                       const SolverConfig& solver = {});

}  // namespace plap

#endif
