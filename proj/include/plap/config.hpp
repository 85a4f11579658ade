#ifndef PLAP_CONFIG_HPP
#define PLAP_CONFIG_HPP

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "plap/multiplicity.hpp"
#include "plap/nehari.hpp"

namespace plap {

/// Malformed or out-of-schema configuration. The message carries the JSON
/// path (and line/column for parse errors) of the offending entry.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

struct FiberOptions {
    std::vector<double> t_grid;  // empty: log grid from t_min/t_max/points
    double t_min = 0.1;
    double t_max = 10.0;
    int points = 101;
    InitialGuess u;  // defaults to the centered bump
};

struct SweepOptions {
    std::string parameter;  // "side" | "q" | "potential_value"
    std::vector<double> values;
};

/// A fully validated run configuration: the problem, the solver settings,
/// and per-command options. Unknown keys anywhere are rejected.
struct RunConfig {
    nlohmann::ordered_json echo;  // the parsed file, for reproducible output
    DomainPtr domain;
    std::optional<Potential> potential;
    std::optional<Nonlinearity> nonlinearity;
    double p = 2.0;
    SolverConfig solver;
    FiberOptions fiber;
    DistinctOptions distinct;
    SweepOptions sweep;
    int sobolev_starts = 5;

    Problem make_problem() const;
};

RunConfig parse_config(const std::string& text, const std::string& source_name);
RunConfig load_config(const std::filesystem::path& path);

}  // namespace plap

#endif
