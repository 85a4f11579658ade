"""Smoke tests for the python bindings: import, build, solve, verify."""

import math
import sys

import plap


def approx(a, b, tol=1e-9):
    return abs(a - b) <= tol * max(1.0, abs(a), abs(b))


def test_domain_and_norms():
    d = plap.Domain(2, 4, plap.Boundary.torus)
    assert d.vertex_count == 16
    assert d.edge_count() == 32
    assert d.is_connected()

    d1 = plap.Domain(1, 2, plap.Boundary.dirichlet)
    u = plap.GridFunction(d1, [3.0, 4.0])
    assert approx(plap.lq_norm(u, 2), 5.0)
    assert approx(plap.lq_norm(u, 1), 7.0)
    assert plap.lq_norm(u, math.inf) == 4.0


def test_translate_roundtrip():
    d = plap.Domain(1, 4, plap.Boundary.torus)
    u = plap.GridFunction(d, [1.0, 2.0, 3.0, 4.0])
    v = u.translated([1])
    assert v.values == [4.0, 1.0, 2.0, 3.0]
    assert u.translated([4]).values == u.values


def test_tiny_ground_state():
    d = plap.Domain(1, 1, plap.Boundary.dirichlet)
    pr = plap.Problem(d, plap.Potential.constant(0.0), plap.Nonlinearity.power(4.0), 2.0)
    res = plap.ground_state(pr)
    assert res.converged
    assert approx(res.energy, 1.0, 1e-8)
    assert approx(abs(res.minimizer[0]), math.sqrt(2.0), 1e-8)

    proj = plap.project_nehari(pr, plap.GridFunction(d, [1.0]))
    assert approx(proj.t, math.sqrt(2.0), 1e-9)


def test_hypothesis_gate():
    d = plap.Domain(1, 3, plap.Boundary.dirichlet)
    pr = plap.Problem(d, plap.Potential.constant(1.0), plap.Nonlinearity.power(2.0), 2.0)
    try:
        plap.ground_state(pr)
    except plap.HypothesisError:
        pass
    else:
        raise AssertionError("expected HypothesisError for q = p")


def test_verify_suite():
    d = plap.Domain(2, 7, plap.Boundary.dirichlet)
    pr = plap.Problem(d, plap.Potential.constant(1.0), plap.Nonlinearity.power(4.0), 2.0)
    rep = plap.run_verify(pr, seed=7)
    assert rep["all_pass"], [c for c in rep["checks"] if c["status"] == "fail"]
    names = [c["name"] for c in rep["checks"]]
    assert "fibering_inequality" in names


def main():
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_")]
    for t in tests:
        t()
        print(f"ok: {t.__name__}")
    print(f"{len(tests)} python smoke tests passed")


if __name__ == "__main__":
    sys.exit(main())
