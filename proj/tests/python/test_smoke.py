import cmath
import math

import pytest

import robertson as rb


def test_x0():
    x0 = rb.cubic_root_x0()
    assert abs(x0 - 0.2034) <= 5e-5
    assert abs(16 * x0**3 + 16 * x0**2 + x0 - 1) < 1e-10


def test_jets_and_powers():
    v0, v1, v2 = rb.eval_jet(rb.FunctionSpec.spirallike_extremal(0.0), 0.5)
    assert abs(v0 - 2.0) < 1e-14
    assert abs(rb.principal_pow(2, 1 + 1j) - 2 * cmath.exp(1j * math.log(2))) < 1e-14
    with pytest.raises(ValueError):
        rb.eval_jet(rb.FunctionSpec.identity(), 1.0)


def test_function_spec_json_round_trip():
    f = rb.FunctionSpec.taylor([1, 0.5j, -0.1])
    assert rb.FunctionSpec.from_json(f.to_json()) == f
    assert f.kind == "taylor"


def test_reports():
    grid = rb.GridSpec(0.99, 10, 90)
    lam = math.pi / 3
    rep = rb.robertson_report(rb.FunctionSpec.robertson_extremal(lam), lam, grid)
    assert rep.verdict == rb.Verdict.PASS
    assert all(r.passed() for r in rb.equivalence_check(rb.FunctionSpec.identity(), 0.4, grid))
    bad = rb.spirallike_report(rb.FunctionSpec.taylor([1, 0.9]), 0.0, grid)
    assert not bad.passed()


def test_growth_and_integral():
    env = rb.growth_bounds(0.0, 0.5)
    assert abs(env.psi_lo - 0.5 / 2.25) < 1e-14
    assert abs(env.psi_hi - 2.0) < 1e-14
    assert math.isfinite(rb.boundedness_integral(math.acos(0.6), 1.0))
    with pytest.raises(ArithmeticError):
        rb.boundedness_integral(math.acos(0.8), 1.0)


def test_chain_and_extension():
    lam = math.acos(0.25)
    f = rb.FunctionSpec.robertson_extremal(lam)
    s = rb.chain_eval(f, lam, 0.0, 0.3)
    assert abs(s.p - (-1 - 2 * cmath.exp(-2j * lam))) < 1e-12
    assert abs(rb.eq43_lhs(f, lam, 0.0, 0.3) - 0.5) < 1e-13
    mu_max, _flagged = rb.max_dilatation(f, lam, 3.0, 10, 36)
    assert mu_max <= 0.51
    h = rb.hotta_check(f, 1.0, 0.0, 2 * cmath.exp(1j * lam) * math.cos(lam) - 1, 0.5,
                       rb.GridSpec(0.99, 10, 90))
    assert h["verdict"] == rb.Verdict.PASS
    assert h["l"] == 0.5


def test_royster():
    lam = math.acos(0.6)
    mu = rb.royster_mu(lam)
    assert abs(abs(mu + 1) - 1.2) < 1e-14
    with pytest.raises(ValueError):
        rb.royster_mu(0.0)


def test_cli_in_process():
    code, out = rb.run("root")
    assert code == 0
    assert abs(out["x0"] - 0.2034) < 1e-4
    code, _ = rb.run("frobnicate")
    assert code == 64
