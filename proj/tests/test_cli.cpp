// Integration tests that drive the installed CLI binary end to end.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

struct RunOutcome {
    int exit_code;
    std::string stdout_text;
    std::string stderr_text;
};

fs::path scratch_dir() {
    static fs::path dir = [] {
        auto d = fs::temp_directory_path() / "plap_cli_tests";
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void spit(const fs::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary);
    out << text;
}

RunOutcome run_cli(const std::string& args, const std::string& env_prefix = "") {
    fs::path out = scratch_dir() / "stdout.txt";
    fs::path err = scratch_dir() / "stderr.txt";
    std::string cmd = (env_prefix.empty() ? "" : env_prefix + " ") + PLAP_CLI_PATH +
                      " " + args + " > " + out.string() + " 2> " + err.string();
    int status = std::system(cmd.c_str());
    RunOutcome o;
    o.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    o.stdout_text = slurp(out);
    o.stderr_text = slurp(err);
    return o;
}

const char* tiny_config = R"({
  "domain": {"dim": 1, "side": 1, "boundary": "dirichlet"},
  "p": 2.0,
  "potential": {"mode": "constant", "value": 0.0},
  "nonlinearity": {"family": "power", "q": 4.0},
  "seed": 11
})";

int csv_data_rows(const fs::path& p) {
    std::ifstream in(p);
    std::string line;
    int rows = -1;  // skip header
    while (std::getline(in, line))
        if (!line.empty()) ++rows;
    return rows;
}

}  // namespace

TEST_CASE("solve on the tiny instance reports energy 1") {
    fs::path cfg = scratch_dir() / "tiny.json";
    spit(cfg, tiny_config);
    fs::path out = scratch_dir() / "tiny_out";

    auto r = run_cli("solve --config " + cfg.string() + " --out " + out.string());
    CHECK(r.exit_code == 0);

    json res = json::parse(slurp(out / "result.json"));
    CHECK(res.at("converged").get<bool>());
    CHECK(std::abs(res.at("energy").get<double>() - 1.0) <= 1e-8);
    CHECK(fs::exists(out / "u.csv"));
    CHECK(fs::exists(out / "trace.csv"));
    CHECK(fs::exists(out / "trace.gp"));
}

TEST_CASE("q <= p is refused with the failing condition named") {
    std::string bad = R"({
      "domain": {"dim": 1, "side": 3, "boundary": "dirichlet"},
      "p": 2.0,
      "potential": {"mode": "constant", "value": 1.0},
      "nonlinearity": {"family": "power", "q": 2.0}
    })";
    fs::path cfg = scratch_dir() / "flat.json";
    spit(cfg, bad);
    auto r = run_cli("solve --config " + cfg.string() + " --out " +
                     (scratch_dir() / "flat_out").string());
    CHECK(r.exit_code == 1);
    CHECK(r.stderr_text.find("S4") != std::string::npos);
}

TEST_CASE("a one-iteration cap exits 2 with a single trace row") {
    std::string capped = R"({
      "domain": {"dim": 2, "side": 7, "boundary": "dirichlet"},
      "p": 2.0,
      "potential": {"mode": "constant", "value": 1.0},
      "nonlinearity": {"family": "power", "q": 4.0},
      "solver": {"max_iterations": 1}
    })";
    fs::path cfg = scratch_dir() / "capped.json";
    spit(cfg, capped);
    fs::path out = scratch_dir() / "capped_out";
    auto r = run_cli("solve --config " + cfg.string() + " --out " + out.string());
    CHECK(r.exit_code == 2);
    CHECK(csv_data_rows(out / "trace.csv") == 1);
}

TEST_CASE("identical config and seed reproduce byte-identical outputs") {
    fs::path cfg = scratch_dir() / "tiny2.json";
    spit(cfg, tiny_config);
    fs::path a = scratch_dir() / "det_a";
    fs::path b = scratch_dir() / "det_b";
    CHECK(run_cli("solve --config " + cfg.string() + " --out " + a.string()).exit_code == 0);
    CHECK(run_cli("solve --config " + cfg.string() + " --out " + b.string()).exit_code == 0);
    CHECK(slurp(a / "result.json") == slurp(b / "result.json"));
    CHECK(slurp(a / "u.csv") == slurp(b / "u.csv"));
    CHECK(slurp(a / "trace.csv") == slurp(b / "trace.csv"));
}

TEST_CASE("malformed config exits 1 with a line-anchored message") {
    fs::path cfg = scratch_dir() / "broken.json";
    spit(cfg, "{\n  \"domain\": [,]\n}");
    auto r = run_cli("solve --config " + cfg.string());
    CHECK(r.exit_code == 1);
    CHECK(r.stderr_text.find("broken.json:2:") != std::string::npos);

    fs::path unknown = scratch_dir() / "unknown.json";
    spit(unknown, R"({
      "domain": {"dim": 1, "side": 1, "boundary": "dirichlet"},
      "p": 2.0,
      "potential": {"mode": "constant", "value": 0.0},
      "nonlinearity": {"family": "power", "q": 4.0},
      "surprise": true
    })");
    auto r2 = run_cli("solve --config " + unknown.string());
    CHECK(r2.exit_code == 1);
    CHECK(r2.stderr_text.find("surprise") != std::string::npos);
}

TEST_CASE("fiber profile of the tiny instance") {
    std::string cfg_text = R"({
      "domain": {"dim": 1, "side": 1, "boundary": "dirichlet"},
      "p": 2.0,
      "potential": {"mode": "constant", "value": 0.0},
      "nonlinearity": {"family": "power", "q": 4.0},
      "fiber": {"u": {"kind": "bump"}, "t_grid": [0.5, 1.0, 1.4142135623730951, 2.0]}
    })";
    fs::path cfg = scratch_dir() / "fiber.json";
    spit(cfg, cfg_text);
    fs::path out = scratch_dir() / "fiber_out";
    auto r = run_cli("fiber --config " + cfg.string() + " --out " + out.string());
    CHECK(r.exit_code == 0);

    std::ifstream in(out / "fiber.csv");
    std::string line;
    std::getline(in, line);
    CHECK(line == "t,psi,slope,is_t_u");
    std::vector<double> ts, psis, slopes;
    std::vector<int> marks;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string cell;
        std::getline(ls, cell, ',');
        ts.push_back(std::stod(cell));
        std::getline(ls, cell, ',');
        psis.push_back(std::stod(cell));
        std::getline(ls, cell, ',');
        slopes.push_back(std::stod(cell));
        std::getline(ls, cell, ',');
        marks.push_back(std::stoi(cell));
    }
    REQUIRE(ts.size() == 5);  // four grid points plus the marked t_u row

    // hand values of t^2 - t^4/4 at the requested grid
    auto near = [](double a, double b) { return std::abs(a - b) <= 1e-9; };
    CHECK(near(psis[0], 0.234375));
    CHECK(near(psis[1], 0.75));
    CHECK(near(psis[3], 1.0));  // t = sqrt(2), after the inserted t_u row
    CHECK(near(psis[4], 0.0));

    int sign_changes = 0;
    for (std::size_t i = 1; i < slopes.size(); ++i)
        if (slopes[i - 1] * slopes[i] < 0.0) ++sign_changes;
    CHECK(sign_changes <= 1);
    int marked = 0;
    for (std::size_t i = 0; i < marks.size(); ++i)
        if (marks[i]) {
            ++marked;
            CHECK(near(ts[i], std::sqrt(2.0)));
        }
    CHECK(marked == 1);
}

TEST_CASE("single-point t grid evaluates psi at the energy") {
    std::string cfg_text = R"({
      "domain": {"dim": 1, "side": 1, "boundary": "dirichlet"},
      "p": 2.0,
      "potential": {"mode": "constant", "value": 0.0},
      "nonlinearity": {"family": "power", "q": 4.0},
      "fiber": {"t_grid": [1.0]}
    })";
    fs::path cfg = scratch_dir() / "fiber1.json";
    spit(cfg, cfg_text);
    fs::path out = scratch_dir() / "fiber1_out";
    CHECK(run_cli("fiber --config " + cfg.string() + " --out " + out.string())
              .exit_code == 0);
    std::ifstream in(out / "fiber.csv");
    std::string header, row;
    std::getline(in, header);
    std::getline(in, row);
    // bump of height 1 on one vertex: psi(1) = Phi(u) = 0.75
    CHECK(row.find("1,0.75,") != std::string::npos);
}

TEST_CASE("verify exits by outcome: 0 clean, 3 with failures") {
    std::string good = R"({
      "domain": {"dim": 2, "side": 9, "boundary": "dirichlet"},
      "p": 2.0,
      "potential": {"mode": "constant", "value": 0.0},
      "nonlinearity": {"family": "power", "q": 6.0},
      "seed": 5
    })";
    fs::path cfg = scratch_dir() / "verify.json";
    spit(cfg, good);
    fs::path out = scratch_dir() / "verify_out";
    auto r = run_cli("verify --config " + cfg.string() + " --out " + out.string());
    CHECK(r.exit_code == 0);
    CHECK(fs::exists(out / "verify.json"));
    CHECK(fs::exists(out / "verify.txt"));

    std::string flat = R"({
      "domain": {"dim": 1, "side": 5, "boundary": "dirichlet"},
      "p": 2.0,
      "potential": {"mode": "constant", "value": 1.0},
      "nonlinearity": {"family": "power", "q": 2.0}
    })";
    fs::path cfg2 = scratch_dir() / "verify_flat.json";
    spit(cfg2, flat);
    auto r2 = run_cli("verify --config " + cfg2.string() + " --out " +
                      (scratch_dir() / "verify_flat_out").string());
    CHECK(r2.exit_code == 3);

    std::string p15 = R"({
      "domain": {"dim": 2, "side": 8, "boundary": "dirichlet"},
      "p": 1.5,
      "potential": {"mode": "constant", "value": 1.0},
      "nonlinearity": {"family": "power", "q": 6.5}
    })";
    fs::path cfg3 = scratch_dir() / "verify_p15.json";
    spit(cfg3, p15);
    fs::path out3 = scratch_dir() / "verify_p15_out";
    auto r3 = run_cli("verify --config " + cfg3.string() + " --out " + out3.string());
    CHECK(r3.exit_code == 0);
    json rep = json::parse(slurp(out3 / "verify.json"));
    bool skipped_seen = false;
    for (const auto& c : rep.at("checks"))
        if (c.at("status") == "skip") skipped_seen = true;
    CHECK(skipped_seen);
}

TEST_CASE("sweep over side: ground energy does not increase with the box") {
    std::string cfg_text = R"({
      "domain": {"dim": 1, "side": 8, "boundary": "dirichlet"},
      "p": 2.0,
      "potential": {"mode": "constant", "value": 1.0},
      "nonlinearity": {"family": "power", "q": 4.0},
      "sweep": {"parameter": "side", "values": [8, 12, 16]}
    })";
    fs::path cfg = scratch_dir() / "sweep.json";
    spit(cfg, cfg_text);
    fs::path out = scratch_dir() / "sweep_out";
    auto r = run_cli("sweep --config " + cfg.string() + " --out " + out.string());
    CHECK(r.exit_code == 0);

    std::ifstream in(out / "sweep.csv");
    std::string line;
    std::getline(in, line);
    std::vector<double> b;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string cell;
        std::getline(ls, cell, ',');  // parameter
        std::getline(ls, cell, ',');  // value
        std::getline(ls, cell, ',');  // b
        b.push_back(std::stod(cell));
    }
    REQUIRE(b.size() == 3);
    CHECK(b[1] <= b[0] + 1e-9);
    CHECK(b[2] <= b[1] + 1e-9);
}

TEST_CASE("empty sweep axis exits 1") {
    std::string cfg_text = R"({
      "domain": {"dim": 1, "side": 8, "boundary": "dirichlet"},
      "p": 2.0,
      "potential": {"mode": "constant", "value": 1.0},
      "nonlinearity": {"family": "power", "q": 4.0},
      "sweep": {"parameter": "side", "values": []}
    })";
    fs::path cfg = scratch_dir() / "sweep_empty.json";
    spit(cfg, cfg_text);
    CHECK(run_cli("sweep --config " + cfg.string()).exit_code == 1);
}

TEST_CASE("potential depth sweep: b grows with a constant potential") {
    std::string cfg_text = R"({
      "domain": {"dim": 1, "side": 9, "boundary": "dirichlet"},
      "p": 2.0,
      "potential": {"mode": "constant", "value": 0.0},
      "nonlinearity": {"family": "power", "q": 4.0},
      "sweep": {"parameter": "potential_value", "values": [0.0, 0.5, 1.0]}
    })";
    fs::path cfg = scratch_dir() / "sweep_pot.json";
    spit(cfg, cfg_text);
    fs::path out = scratch_dir() / "sweep_pot_out";
    CHECK(run_cli("sweep --config " + cfg.string() + " --out " + out.string())
              .exit_code == 0);
    std::ifstream in(out / "sweep.csv");
    std::string line;
    std::getline(in, line);
    std::vector<double> b;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string cell;
        for (int i = 0; i < 3; ++i) std::getline(ls, cell, ',');
        b.push_back(std::stod(cell));
    }
    REQUIRE(b.size() == 3);
    CHECK(b[0] <= b[1] + 1e-9);
    CHECK(b[1] <= b[2] + 1e-9);
}

TEST_CASE("distinct orbits through the CLI") {
    std::string cfg_text = R"({
      "domain": {"dim": 1, "side": 8, "boundary": "torus"},
      "p": 2.0,
      "potential": {"mode": "periodic", "period": 2, "cell": [1.0, 1.5]},
      "nonlinearity": {"family": "power", "q": 4.0},
      "distinct": {"n_starts": 5, "period": 2, "sign_companions": true},
      "seed": 3
    })";
    fs::path cfg = scratch_dir() / "distinct.json";
    spit(cfg, cfg_text);
    fs::path out = scratch_dir() / "distinct_out";
    auto r = run_cli("distinct --config " + cfg.string() + " --out " + out.string());
    CHECK(r.exit_code == 0);
    json orbits = json::parse(slurp(out / "orbits.json"));
    CHECK(orbits.at("orbits").size() == 2);
    CHECK(fs::exists(out / "orbit_000.csv"));
    CHECK(fs::exists(out / "orbit_001.csv"));
}

TEST_CASE("q sweep records per-row failures and keeps going") {
    std::string cfg_text = R"({
      "domain": {"dim": 1, "side": 9, "boundary": "dirichlet"},
      "p": 2.0,
      "potential": {"mode": "constant", "value": 1.0},
      "nonlinearity": {"family": "power", "q": 4.0},
      "sweep": {"parameter": "q", "values": [1.5, 3.0, 6.0]},
      "seed": 13
    })";
    fs::path cfg = scratch_dir() / "sweep_q.json";
    spit(cfg, cfg_text);
    fs::path out = scratch_dir() / "sweep_q_out";
    auto r = run_cli("sweep --config " + cfg.string() + " --out " + out.string());
    CHECK(r.exit_code == 0);  // sub-run failures stay in-row

    std::ifstream in(out / "sweep.csv");
    std::string line;
    std::getline(in, line);
    int rows = 0, failed_rows = 0;
    while (std::getline(in, line)) {
        ++rows;
        std::istringstream ls(line);
        std::string cell;
        for (int i = 0; i < 6; ++i) std::getline(ls, cell, ',');
        bool converged = cell == "1";
        if (!converged) ++failed_rows;
    }
    CHECK(rows == 3);
    CHECK(failed_rows == 1);  // q = 1.5 < p has a diverging fibering map
}

TEST_CASE("fiber profile survives a divergent ray without marking t_u") {
    std::string cfg_text = R"({
      "domain": {"dim": 1, "side": 3, "boundary": "dirichlet"},
      "p": 2.0,
      "potential": {"mode": "constant", "value": 1.0},
      "nonlinearity": {"family": "power", "q": 2.0},
      "fiber": {"t_grid": [0.5, 1.0, 2.0]}
    })";
    fs::path cfg = scratch_dir() / "fiber_flat.json";
    spit(cfg, cfg_text);
    fs::path out = scratch_dir() / "fiber_flat_out";
    auto r = run_cli("fiber --config " + cfg.string() + " --out " + out.string());
    CHECK(r.exit_code == 0);
    std::ifstream in(out / "fiber.csv");
    std::string line;
    std::getline(in, line);
    int marked = 0, rows = 0;
    while (std::getline(in, line)) {
        ++rows;
        if (line.size() >= 2 && line.substr(line.size() - 2) == ",1") ++marked;
    }
    CHECK(rows == 3);
    CHECK(marked == 0);
}

TEST_CASE("negative potentials are gated by the smallness check") {
    // V = -0.1 at one site: ||V_-||_2 = 0.1 < S_{2,4}^2 ~ 0.249 on this box
    std::string small_dip = R"({
      "domain": {"dim": 1, "side": 9, "boundary": "dirichlet"},
      "p": 2.0,
      "potential": {"mode": "decaying", "v_inf": 0.1, "dips": [{"at": [4], "depth": -0.2}]},
      "nonlinearity": {"family": "power", "q": 4.0},
      "seed": 21
    })";
    fs::path cfg = scratch_dir() / "neg_small.json";
    spit(cfg, small_dip);
    auto ok = run_cli("solve --config " + cfg.string() + " --out " +
                      (scratch_dir() / "neg_small_out").string());
    CHECK(ok.exit_code == 0);
    CHECK(ok.stderr_text.find("smallness condition holds") != std::string::npos);

    // V = -1.9 at one site: far beyond the admissible negativity
    std::string deep_dip = R"({
      "domain": {"dim": 1, "side": 9, "boundary": "dirichlet"},
      "p": 2.0,
      "potential": {"mode": "decaying", "v_inf": 0.1, "dips": [{"at": [4], "depth": -2.0}]},
      "nonlinearity": {"family": "power", "q": 4.0},
      "seed": 21
    })";
    fs::path cfg2 = scratch_dir() / "neg_deep.json";
    spit(cfg2, deep_dip);
    auto refused = run_cli("solve --config " + cfg2.string() + " --out " +
                           (scratch_dir() / "neg_deep_out").string());
    CHECK(refused.exit_code == 1);
    CHECK(refused.stderr_text.find("smallness condition fails") != std::string::npos);

    auto forced = run_cli("solve --config " + cfg2.string() + " --override-hypotheses --out " +
                          (scratch_dir() / "neg_forced_out").string());
    CHECK(forced.exit_code != 1);  // proceeds; convergence is not promised
}

TEST_CASE("sweeps are reproducible across worker counts") {
    std::string cfg_text = R"({
      "domain": {"dim": 1, "side": 8, "boundary": "dirichlet"},
      "p": 2.0,
      "potential": {"mode": "constant", "value": 1.0},
      "nonlinearity": {"family": "power", "q": 4.0},
      "sweep": {"parameter": "side", "values": [8, 10, 12, 14]},
      "seed": 77
    })";
    fs::path cfg = scratch_dir() / "sweep_threads.json";
    spit(cfg, cfg_text);
    fs::path a = scratch_dir() / "sweep_t1";
    fs::path b = scratch_dir() / "sweep_t4";
    auto r1 = run_cli("sweep --config " + cfg.string() + " --out " + a.string(),
                      "PLAP_THREADS=1");
    auto r4 = run_cli("sweep --config " + cfg.string() + " --out " + b.string(),
                      "PLAP_THREADS=4");
    CHECK(r1.exit_code == 0);
    CHECK(r4.exit_code == 0);
    CHECK(slurp(a / "sweep.csv") == slurp(b / "sweep.csv"));
}

TEST_CASE("sobolev cross-check through the CLI") {
    std::string cfg_text = R"({
      "domain": {"dim": 2, "side": 10, "boundary": "dirichlet"},
      "p": 1.5,
      "potential": {"mode": "constant", "value": 0.0},
      "nonlinearity": {"family": "power", "q": 6.0},
      "sobolev": {"starts": 5},
      "seed": 100
    })";
    fs::path cfg = scratch_dir() / "sobolev.json";
    spit(cfg, cfg_text);
    fs::path out = scratch_dir() / "sobolev_out";
    auto r = run_cli("sobolev --config " + cfg.string() + " --out " + out.string());
    CHECK(r.exit_code == 0);
    json res = json::parse(slurp(out / "sobolev.json"));
    CHECK(res.at("relative_gap").get<double>() < 1e-3);
    CHECK(res.at("S_nehari").get<double>() <= std::pow(4.0, 2.0 / 3.0) + 1e-9);
    CHECK(fs::exists(out / "extremal.csv"));
}
