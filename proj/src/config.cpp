#include "plap/config.hpp"

#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "plap/io.hpp"

namespace plap {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw ConfigError(where + ": " + what);
}

void check_keys(const json& j, const std::string& where,
                std::initializer_list<const char*> required,
                std::initializer_list<const char*> optional) {
    if (!j.is_object()) fail(where, "expected an object");
    std::set<std::string> allowed;
    for (const char* k : required) allowed.insert(k);
    for (const char* k : optional) allowed.insert(k);
    for (const auto& [key, _] : j.items()) {
        if (!allowed.count(key)) fail(where, "unknown key '" + key + "'");
    }
    for (const char* k : required) {
        if (!j.contains(k)) fail(where, std::string("missing required key '") + k + "'");
    }
}

double number_at(const json& j, const std::string& where, const char* key) {
    const auto& v = j.at(key);
    if (!v.is_number()) fail(where + "/" + key, "expected a number");
    return v.get<double>();
}

double number_or(const json& j, const std::string& where, const char* key, double dflt) {
    if (!j.contains(key)) return dflt;
    return number_at(j, where, key);
}

int integer_at(const json& j, const std::string& where, const char* key) {
    const auto& v = j.at(key);
    if (!v.is_number_integer()) fail(where + "/" + key, "expected an integer");
    return v.get<int>();
}

std::string string_at(const json& j, const std::string& where, const char* key) {
    const auto& v = j.at(key);
    if (!v.is_string()) fail(where + "/" + key, "expected a string");
    return v.get<std::string>();
}

DomainPtr parse_domain(const json& j) {
    check_keys(j, "/domain", {"dim", "side", "boundary"}, {"generators"});
    int dim = integer_at(j, "/domain", "dim");
    int side = integer_at(j, "/domain", "side");
    Boundary b;
    try {
        b = boundary_from_string(string_at(j, "/domain", "boundary"));
    } catch (const std::invalid_argument& e) {
        fail("/domain/boundary", e.what());
    }
    std::vector<std::vector<int>> gens;
    if (j.contains("generators")) {
        const auto& g = j.at("generators");
        if (!g.is_array()) fail("/domain/generators", "expected an array of offset vectors");
        for (const auto& off : g) {
            if (!off.is_array()) fail("/domain/generators", "each offset must be an array");
            std::vector<int> v;
            for (const auto& c : off) {
                if (!c.is_number_integer())
                    fail("/domain/generators", "offsets must be integer vectors");
                v.push_back(c.get<int>());
            }
            gens.push_back(std::move(v));
        }
    }
    try {
        return make_domain(dim, side, b, std::move(gens));
    } catch (const std::invalid_argument& e) {
        fail("/domain", e.what());
    }
}

Potential parse_potential(const json& j, int dim) {
    check_keys(j, "/potential", {"mode"},
               {"value", "period", "cell", "v_inf", "dips"});
    std::string mode = string_at(j, "/potential", "mode");
    try {
        if (mode == "constant") {
            check_keys(j, "/potential", {"mode", "value"}, {});
            return Potential::constant(number_at(j, "/potential", "value"));
        }
        if (mode == "periodic") {
            check_keys(j, "/potential", {"mode", "period", "cell"}, {});
            int T = integer_at(j, "/potential", "period");
            const auto& cell = j.at("cell");
            if (!cell.is_array()) fail("/potential/cell", "expected an array");
            std::vector<double> values;
            for (const auto& c : cell) {
                if (!c.is_number()) fail("/potential/cell", "expected numbers");
                values.push_back(c.get<double>());
            }
            return Potential::periodic(dim, T, std::move(values));
        }
        if (mode == "decaying") {
            check_keys(j, "/potential", {"mode", "v_inf", "dips"}, {});
            double v_inf = number_at(j, "/potential", "v_inf");
            std::vector<std::pair<std::vector<int>, double>> dips;
            const auto& darr = j.at("dips");
            if (!darr.is_array()) fail("/potential/dips", "expected an array");
            for (const auto& dip : darr) {
                check_keys(dip, "/potential/dips[]", {"at", "depth"}, {});
                std::vector<int> at;
                for (const auto& c : dip.at("at")) {
                    if (!c.is_number_integer()) fail("/potential/dips[]/at", "integer coords");
                    at.push_back(c.get<int>());
                }
                if (static_cast<int>(at.size()) != dim)
                    fail("/potential/dips[]/at", "coordinate dimension mismatch");
                dips.emplace_back(std::move(at), number_at(dip, "/potential/dips[]", "depth"));
            }
            return Potential::decaying(v_inf, std::move(dips));
        }
    } catch (const std::invalid_argument& e) {
        fail("/potential", e.what());
    }
    fail("/potential/mode", "must be constant, periodic, or decaying");
}

Nonlinearity parse_nonlinearity(const json& j, int dim) {
    check_keys(j, "/nonlinearity", {"family", "q"}, {"weight"});
    std::string family = string_at(j, "/nonlinearity", "family");
    if (family != "power")
        fail("/nonlinearity/family", "only the weighted power family is available");
    double q = number_at(j, "/nonlinearity", "q");
    try {
        if (!j.contains("weight")) return Nonlinearity::power(q);
        const auto& w = j.at("weight");
        if (w.is_number()) return Nonlinearity::power(q, w.get<double>());
        check_keys(w, "/nonlinearity/weight", {"period", "cell"}, {});
        int T = integer_at(w, "/nonlinearity/weight", "period");
        std::vector<double> cell;
        for (const auto& c : w.at("cell")) {
            if (!c.is_number()) fail("/nonlinearity/weight/cell", "expected numbers");
            cell.push_back(c.get<double>());
        }
        return Nonlinearity::power_weighted(q, dim, T, std::move(cell));
    } catch (const std::invalid_argument& e) {
        fail("/nonlinearity", e.what());
    }
}

InitialGuess parse_initial(const json& j, const std::string& where, DomainPtr domain) {
    check_keys(j, where, {"kind"}, {"amplitude", "path"});
    InitialGuess g;
    std::string kind = string_at(j, where, "kind");
    g.amplitude = number_or(j, where, "amplitude", 1.0);
    if (kind == "bump") {
        g.kind = InitialGuess::Kind::bump;
    } else if (kind == "random") {
        g.kind = InitialGuess::Kind::random;
    } else if (kind == "file") {
        if (!j.contains("path")) fail(where, "kind 'file' requires a path");
        g.kind = InitialGuess::Kind::given;
        try {
            g.value = read_grid_csv(string_at(j, where, "path"), std::move(domain));
        } catch (const std::exception& e) {
            fail(where + "/path", e.what());
        }
    } else {
        fail(where + "/kind", "must be bump, random, or file");
    }
    return g;
}

SolverConfig parse_solver(const json& j, DomainPtr domain) {
    SolverConfig cfg;
    if (!j.contains("solver")) return cfg;
    const auto& s = j.at("solver");
    check_keys(s, "/solver", {},
               {"max_iterations", "eps_res", "eps_fib", "initial", "step"});
    if (s.contains("max_iterations")) {
        cfg.max_iterations = integer_at(s, "/solver", "max_iterations");
        if (cfg.max_iterations < 1) fail("/solver/max_iterations", "must be >= 1");
    }
    cfg.eps_res = number_or(s, "/solver", "eps_res", cfg.eps_res);
    cfg.eps_fib = number_or(s, "/solver", "eps_fib", cfg.eps_fib);
    if (!(cfg.eps_res > 0.0)) fail("/solver/eps_res", "must be positive");
    if (!(cfg.eps_fib > 0.0)) fail("/solver/eps_fib", "must be positive");
    if (s.contains("initial"))
        cfg.initial = parse_initial(s.at("initial"), "/solver/initial", std::move(domain));
    if (s.contains("step")) {
        const auto& st = s.at("step");
        check_keys(st, "/solver/step", {}, {"initial", "backtrack", "armijo"});
        cfg.step.initial = number_or(st, "/solver/step", "initial", cfg.step.initial);
        cfg.step.backtrack = number_or(st, "/solver/step", "backtrack", cfg.step.backtrack);
        cfg.step.armijo_c = number_or(st, "/solver/step", "armijo", cfg.step.armijo_c);
        if (!(cfg.step.backtrack > 0.0 && cfg.step.backtrack < 1.0))
            fail("/solver/step/backtrack", "must lie in (0, 1)");
        if (!(cfg.step.initial > 0.0)) fail("/solver/step/initial", "must be positive");
    }
    return cfg;
}

std::pair<int, int> line_col(const std::string& text, std::size_t byte) {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

}  // namespace

Problem RunConfig::make_problem() const {
    return Problem(domain, *potential, *nonlinearity, p);
}

RunConfig parse_config(const std::string& text, const std::string& source_name) {
    json j;
    try {
        j = json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        auto [line, col] = line_col(text, e.byte);
        throw ConfigError(source_name + ":" + std::to_string(line) + ":" +
                          std::to_string(col) + ": " + e.what());
    }

    check_keys(j, "/", {"domain", "p", "potential", "nonlinearity"},
               {"solver", "seed", "fiber", "distinct", "sweep", "sobolev"});

    RunConfig cfg;
    cfg.echo = j;
    cfg.domain = parse_domain(j.at("domain"));
    cfg.p = number_at(j, "/", "p");
    if (!(cfg.p > 1.0)) fail("/p", "must be > 1");
    cfg.potential = parse_potential(j.at("potential"), cfg.domain->dim());
    cfg.nonlinearity = parse_nonlinearity(j.at("nonlinearity"), cfg.domain->dim());
    // periodicity is only exact on the torus when the period divides the side
    if (cfg.domain->boundary() == Boundary::torus) {
        int T = cfg.potential->period();
        if (cfg.domain->side() % T != 0)
            fail("/potential/period", "must divide the domain side on a torus");
        int Tw = cfg.nonlinearity->weight_period();
        if (cfg.domain->side() % Tw != 0)
            fail("/nonlinearity/weight/period", "must divide the domain side on a torus");
    }
    cfg.solver = parse_solver(j, cfg.domain);
    if (j.contains("seed")) {
        if (!j.at("seed").is_number_unsigned())
            fail("/seed", "expected a nonnegative integer");
        cfg.solver.seed = j.at("seed").get<std::uint64_t>();
    }

    if (j.contains("fiber")) {
        const auto& f = j.at("fiber");
        check_keys(f, "/fiber", {}, {"u", "t_grid", "t_min", "t_max", "points"});
        if (f.contains("u"))
            cfg.fiber.u = parse_initial(f.at("u"), "/fiber/u", cfg.domain);
        if (f.contains("t_grid")) {
            for (const auto& t : f.at("t_grid")) {
                if (!t.is_number() || !(t.get<double>() > 0.0))
                    fail("/fiber/t_grid", "t values must be positive numbers");
                cfg.fiber.t_grid.push_back(t.get<double>());
            }
        }
        cfg.fiber.t_min = number_or(f, "/fiber", "t_min", cfg.fiber.t_min);
        cfg.fiber.t_max = number_or(f, "/fiber", "t_max", cfg.fiber.t_max);
        if (f.contains("points")) cfg.fiber.points = integer_at(f, "/fiber", "points");
        if (cfg.fiber.points < 1) fail("/fiber/points", "must be >= 1");
        if (!(cfg.fiber.t_min > 0.0) || !(cfg.fiber.t_max >= cfg.fiber.t_min))
            fail("/fiber", "need 0 < t_min <= t_max");
    }

    if (j.contains("distinct")) {
        const auto& dj = j.at("distinct");
        check_keys(dj, "/distinct", {},
                   {"n_starts", "delta_orb", "period", "sign_companions"});
        if (dj.contains("n_starts"))
            cfg.distinct.n_starts = integer_at(dj, "/distinct", "n_starts");
        if (dj.contains("delta_orb")) {
            const auto& del = dj.at("delta_orb");
            if (del.is_string() && del.get<std::string>() == "inf")
                cfg.distinct.delta_orb = std::numeric_limits<double>::infinity();
            else if (del.is_number())
                cfg.distinct.delta_orb = del.get<double>();
            else
                fail("/distinct/delta_orb", "expected a number or \"inf\"");
        }
        if (dj.contains("period"))
            cfg.distinct.period = integer_at(dj, "/distinct", "period");
        if (dj.contains("sign_companions")) {
            if (!dj.at("sign_companions").is_boolean())
                fail("/distinct/sign_companions", "expected a boolean");
            cfg.distinct.sign_companions = dj.at("sign_companions").get<bool>();
        }
    }

    if (j.contains("sweep")) {
        const auto& sj = j.at("sweep");
        check_keys(sj, "/sweep", {"parameter", "values"}, {});
        cfg.sweep.parameter = string_at(sj, "/sweep", "parameter");
        if (cfg.sweep.parameter != "side" && cfg.sweep.parameter != "q" &&
            cfg.sweep.parameter != "potential_value")
            fail("/sweep/parameter", "must be side, q, or potential_value");
        for (const auto& v : sj.at("values")) {
            if (!v.is_number()) fail("/sweep/values", "expected numbers");
            cfg.sweep.values.push_back(v.get<double>());
        }
    }

    if (j.contains("sobolev")) {
        const auto& sb = j.at("sobolev");
        check_keys(sb, "/sobolev", {}, {"starts"});
        if (sb.contains("starts")) cfg.sobolev_starts = integer_at(sb, "/sobolev", "starts");
        if (cfg.sobolev_starts < 1) fail("/sobolev/starts", "must be >= 1");
    }

    return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str(), path.string());
}

}  // namespace plap
