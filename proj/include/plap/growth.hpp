#ifndef PLAP_GROWTH_HPP
#define PLAP_GROWTH_HPP

#include <string>
#include <vector>

#include "plap/nonlinearity.hpp"

namespace plap {

enum class CheckStatus { pass, fail, skip };

std::string to_string(CheckStatus s);

struct ConditionCheck {
    std::string name;
    CheckStatus status = CheckStatus::pass;
    std::string detail;
};

/// Sampled verdicts on the standing hypotheses for the nonlinearity:
///   S2  growth bound f(x,t) <= a (1 + |t|^{q-1})
///   S3  f(x,t) / |t|^{p*-1} -> 0 as t -> 0   (needs p < N, else skipped)
///   S4  f(x,t) / |t|^{p-1} strictly increasing away from 0
///   S5  F(x,t) / |t|^p -> infinity as |t| -> infinity
/// Sampling is a finite surrogate, not a proof; grids are log-spaced.
struct GrowthReport {
    std::vector<ConditionCheck> conditions;
    double critical_exponent = 0.0;  // p* = Np/(N-p); NaN when p >= N

    bool has_failure() const;
    std::string summary() const;
    const ConditionCheck* find(const std::string& name) const;
};

struct GrowthCheckOptions {
    double t_min = 1e-6;
    double t_max = 1e6;
    int points = 121;
};

GrowthReport check_growth_conditions(const Nonlinearity& nl, double p, int N,
                                     const GrowthCheckOptions& opt = {});

/// Thrown when a solve is requested under failing hypotheses without an
/// explicit override.
class HypothesisError : public std::runtime_error {
public:
    explicit HypothesisError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace plap

#endif
