#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "plap/config.hpp"
#include "plap/io.hpp"
#include "plap/multiplicity.hpp"
#include "plap/verify.hpp"

namespace py = pybind11;
using namespace plap;

namespace {

GridFunction grid_from_values(DomainPtr d, std::vector<double> values) {
    return GridFunction(std::move(d), std::move(values));
}

py::dict report_to_dict(const VerifyReport& rep) {
    py::dict out;
    out["seed"] = rep.seed;
    out["all_pass"] = rep.all_pass();
    py::list checks;
    for (const auto& c : rep.checks) {
        py::dict entry;
        entry["name"] = c.name;
        entry["statement"] = c.statement;
        entry["status"] = to_string(c.status);
        entry["tolerance"] = c.tolerance;
        entry["witness"] = c.witness;
        checks.append(entry);
    }
    out["checks"] = checks;
    return out;
}

}  // namespace

PYBIND11_MODULE(_plap, m) {
    m.doc() = "Ground states of the discrete p-Laplacian on lattice graphs "
              "via the Nehari manifold method.";

    py::enum_<Boundary>(m, "Boundary")
        .value("dirichlet", Boundary::dirichlet)
        .value("torus", Boundary::torus);

    py::class_<Domain, std::shared_ptr<Domain>>(m, "Domain")
        .def(py::init([](int dim, int side, Boundary boundary,
                         std::vector<std::vector<int>> generators) {
                 return std::make_shared<Domain>(dim, side, boundary,
                                                 std::move(generators));
             }),
             py::arg("dim"), py::arg("side"), py::arg("boundary"),
             py::arg("generators") = std::vector<std::vector<int>>{})
        .def_property_readonly("dim", &Domain::dim)
        .def_property_readonly("side", &Domain::side)
        .def_property_readonly("boundary", &Domain::boundary)
        .def_property_readonly("vertex_count", &Domain::vertex_count)
        .def("edge_count", [](const Domain& d) { return d.edges().size(); })
        .def("degree", &Domain::degree)
        .def("is_connected", &Domain::is_connected)
        .def("coords_of", &Domain::coords_of)
        .def("index_of",
             [](const Domain& d, std::vector<int> c) { return d.index_of(c); });

    py::class_<GridFunction>(m, "GridFunction")
        .def(py::init(&grid_from_values), py::arg("domain"), py::arg("values"))
        .def_static(
            "delta",
            [](DomainPtr d, std::vector<int> at, double height) {
                return GridFunction::delta(std::move(d), at, height);
            },
            py::arg("domain"), py::arg("at"), py::arg("height") = 1.0)
        .def_static(
            "gaussian_bump",
            [](DomainPtr d, std::vector<int> center, double width, double height) {
                return GridFunction::gaussian_bump(std::move(d), center, width, height);
            },
            py::arg("domain"), py::arg("center"), py::arg("width"),
            py::arg("height") = 1.0)
        .def_property_readonly("values",
                               [](const GridFunction& u) {
                                   return std::vector<double>(u.values().begin(),
                                                              u.values().end());
                               })
        .def("__len__", &GridFunction::size)
        .def("__getitem__",
             [](const GridFunction& u, std::int64_t i) {
                 if (i < 0 || i >= u.size()) throw py::index_error();
                 return u[i];
             })
        .def("translated", [](const GridFunction& u, std::vector<int> k) {
            return u.translated(k);
        });

    py::class_<Potential>(m, "Potential")
        .def_static("constant", &Potential::constant, py::arg("value"))
        .def_static("periodic", &Potential::periodic, py::arg("dim"), py::arg("period"),
                    py::arg("cell"))
        .def_static(
            "decaying",
            [](double v_inf, std::vector<std::pair<std::vector<int>, double>> dips) {
                return Potential::decaying(v_inf, std::move(dips));
            },
            py::arg("v_inf"), py::arg("dips"))
        .def("__call__",
             [](const Potential& v, std::vector<int> x) { return v(x); })
        .def("describe", &Potential::describe);

    py::class_<Nonlinearity>(m, "Nonlinearity")
        .def_static("power", &Nonlinearity::power, py::arg("q"),
                    py::arg("weight") = 1.0)
        .def_static("power_weighted", &Nonlinearity::power_weighted, py::arg("q"),
                    py::arg("dim"), py::arg("period"), py::arg("cell"))
        .def_property_readonly("q", &Nonlinearity::exponent)
        .def("f", [](const Nonlinearity& n, std::vector<int> x,
                     double t) { return n.f(x, t); })
        .def("F", [](const Nonlinearity& n, std::vector<int> x,
                     double t) { return n.F(x, t); });

    py::class_<Problem>(m, "Problem")
        .def(py::init<DomainPtr, Potential, Nonlinearity, double>(),
             py::arg("domain"), py::arg("potential"), py::arg("nonlinearity"),
             py::arg("p"))
        .def_property_readonly("p", &Problem::p)
        .def_property_readonly(
            "domain",
            [](const Problem& pr) -> const Domain& { return pr.domain(); },
            py::return_value_policy::reference_internal);

    m.def("lq_norm", &lq_norm, py::arg("u"), py::arg("q"));
    m.def("dirichlet_norm", &dirichlet_norm, py::arg("u"), py::arg("p"));
    m.def(
        "e_norm",
        [](const GridFunction& u, const Potential& v, double p) {
            return e_norm(u, v, p);
        },
        py::arg("u"), py::arg("potential"), py::arg("p"));
    m.def("energy", &energy, py::arg("problem"), py::arg("u"));
    m.def("pairing", &pairing, py::arg("problem"), py::arg("u"), py::arg("v"));
    m.def("residual", &residual, py::arg("problem"), py::arg("u"));
    m.def("residual_norm", &residual_norm, py::arg("problem"), py::arg("u"));
    m.def("fiber", &fiber, py::arg("problem"), py::arg("u"), py::arg("t"));
    m.def("fiber_slope", &fiber_slope, py::arg("problem"), py::arg("u"), py::arg("t"));

    py::class_<NehariProjection>(m, "NehariProjection")
        .def_readonly("t", &NehariProjection::t)
        .def_readonly("w", &NehariProjection::w)
        .def_readonly("slope_residual", &NehariProjection::slope_residual);
    m.def("project_nehari", &project_nehari, py::arg("problem"), py::arg("u"),
          py::arg("eps_fib") = 1e-12);

    py::class_<SolverConfig>(m, "SolverConfig")
        .def(py::init<>())
        .def_readwrite("max_iterations", &SolverConfig::max_iterations)
        .def_readwrite("eps_res", &SolverConfig::eps_res)
        .def_readwrite("eps_fib", &SolverConfig::eps_fib)
        .def_readwrite("seed", &SolverConfig::seed)
        .def_readwrite("override_hypotheses", &SolverConfig::override_hypotheses);

    py::class_<SolveResult>(m, "SolveResult")
        .def_readonly("minimizer", &SolveResult::minimizer)
        .def_readonly("energy", &SolveResult::energy)
        .def_readonly("residual_norm", &SolveResult::residual_norm)
        .def_readonly("fibering_t", &SolveResult::fibering_t)
        .def_readonly("iterations", &SolveResult::iterations)
        .def_readonly("converged", &SolveResult::converged)
        .def_readonly("message", &SolveResult::message)
        .def_readonly("t_history", &SolveResult::t_history);
    m.def("ground_state", &ground_state, py::arg("problem"),
          py::arg("config") = SolverConfig{});

    py::class_<SobolevResult>(m, "SobolevResult")
        .def_readonly("S", &SobolevResult::S)
        .def_readonly("extremal", &SobolevResult::extremal)
        .def_readonly("flagged", &SobolevResult::flagged)
        .def_readonly("flag_reason", &SobolevResult::flag_reason);
    m.def("sobolev_constant", &sobolev_constant, py::arg("p"), py::arg("q"),
          py::arg("domain"), py::arg("config") = SolverConfig{});

    py::class_<QuotientResult>(m, "QuotientResult")
        .def_readonly("S", &QuotientResult::S)
        .def_readonly("minimizer", &QuotientResult::minimizer);
    m.def("sobolev_quotient_descent", &sobolev_quotient_descent, py::arg("p"),
          py::arg("q"), py::arg("domain"), py::arg("n_starts") = 5,
          py::arg("seed") = 12345, py::arg("max_iterations") = 5000);

    m.def("orbit_distance", &orbit_distance, py::arg("problem"), py::arg("u"),
          py::arg("v"), py::arg("period"));

    py::class_<DistinctOptions>(m, "DistinctOptions")
        .def(py::init<>())
        .def_readwrite("n_starts", &DistinctOptions::n_starts)
        .def_readwrite("delta_orb", &DistinctOptions::delta_orb)
        .def_readwrite("period", &DistinctOptions::period)
        .def_readwrite("sign_companions", &DistinctOptions::sign_companions);
    py::class_<OrbitSet>(m, "OrbitSet")
        .def_readonly("representatives", &OrbitSet::representatives)
        .def_readonly("distances", &OrbitSet::distances)
        .def_readonly("delta_orb", &OrbitSet::delta_orb)
        .def_readonly("kappa_empirical", &OrbitSet::kappa_empirical)
        .def_readonly("starts_converged", &OrbitSet::starts_converged);
    m.def("find_distinct", &find_distinct, py::arg("problem"), py::arg("config"),
          py::arg("options"));

    m.def(
        "run_verify",
        [](const Problem& pr, std::uint64_t seed) {
            return report_to_dict(run_suite(pr, seed));
        },
        py::arg("problem"), py::arg("seed") = 12345);

    m.def("grid_to_csv", &grid_to_csv, py::arg("u"));

    py::register_exception<HypothesisError>(m, "HypothesisError");
    py::register_exception<FiberDivergence>(m, "FiberDivergence");
}
