import json
import random
from fractions import Fraction

import pytest

from solag import harness
from solag.cli import main
from solag.exactalg import Poly
from solag.harness import ConfigError, RunConfig, emit, parse_alpha_list, parse_diffop, parse_poly, random_poly
from solag.report import Check, Report
from solag.spectral import build_B, build_L, eigen
from solag.weyl import DiffOp


def test_emit_poly_and_operator():
    assert emit(Poly([Fraction(1, 2), 0, -3])) == '["1/2","0","-3"]'
    assert emit(Poly.zero()) == "[]"
    assert emit(build_L(0)) == '{"coeffs":[{"poly":["1","-1"],"power":1},{"poly":["0","1"],"power":2}],"order":2}'
    assert json.loads(emit(DiffOp.zero())) == {"coeffs": [], "order": None}


def test_round_trips():
    p = Poly([Fraction(-7, 3), 0, 5])
    assert parse_poly(emit(p)) == p
    for a in range(3):
        B = build_B(a)
        assert parse_diffop(emit(B)) == B


def test_parse_diffop_rejects_wrong_order():
    with pytest.raises(ValueError):
        parse_diffop('{"coeffs":[{"poly":["1"],"power":1}],"order":3}')


def test_emit_eigen_table():
    table = [(n, eigen(n, 0)) for n in range(4)]
    assert emit(table, "csv") == "n,lam,lamA,lamB,lamC\n0,0,0,0,0\n1,1,1,0,0\n2,2,3,1,1\n3,3,6,6,7\n"
    assert json.loads(emit(table))[2] == {"n": 2, "lam": "2", "lamA": "3", "lamB": "1", "lamC": "1"}


def test_emit_matrix():
    G = [[Fraction(2), Fraction(0)], [Fraction(0), Fraction(1, 3)]]
    assert emit(G, "csv") == "2,0\n0,1/3\n"
    assert emit(G) == '[["2","0"],["0","1/3"]]'


def test_emit_rejects_unknown():
    with pytest.raises(TypeError):
        emit(object())


def test_report_json_has_no_timing_by_default():
    r = Report("x")
    r.check("a").record(True)
    r.wall_time = 0.25
    assert "wall_time_ms" not in json.loads(emit(r))["suites"]["x"]
    assert json.loads(emit(r, timing=True))["suites"]["x"]["wall_time_ms"] == 250


def test_check_keeps_first_counterexample():
    c = Check("c")
    c.record(True, n=0)
    c.record(False, n=1)
    c.record(False, n=2)
    assert (c.passed, c.count, c.counterexample) == (False, 3, {"n": 1})


def test_report_merges_checks():
    a, b = Report("s"), Report("s")
    a.check("k").record(True)
    b.check("k").record(False, n=5)
    b.check("other").record(True)
    a.extend(b)
    assert [c.name for c in a.checks] == ["k", "other"]
    assert a.check("k").count == 2 and a.first_failure.counterexample == {"n": 5}


def test_random_poly_is_seeded():
    a = [random_poly(random.Random(7), 8) for _ in range(3)]
    b = [random_poly(random.Random(7), 8) for _ in range(3)]
    assert a == b
    rng = random.Random(7)
    assert random_poly(rng, 8) != random_poly(rng, 8)
    for p in (random_poly(random.Random(s), 5) for s in range(50)):
        assert p.degree is None or p.degree <= 5
        assert all(abs(c.numerator) <= 20 for c in p.coeffs)


def test_alpha_list():
    assert parse_alpha_list("0,1, 3") == [0, 1, 3]
    with pytest.raises(ConfigError, match="position 2"):
        parse_alpha_list("0,x")


@pytest.mark.parametrize(
    "kwargs",
    [
        dict(M="1"),
        dict(M="1//2", N="1"),
        dict(M="-1", N="1"),
        dict(suite="nope"),
        dict(format="xml"),
        dict(alpha_list=[-1]),
        dict(n_max=-1),
        dict(seed=-1),
    ],
)
def test_config_errors(kwargs):
    with pytest.raises(ConfigError):
        RunConfig(**kwargs)


def test_config_grid():
    assert len(RunConfig().grid) == 4
    assert RunConfig(M="1/2", N="0").grid == [(Fraction(1, 2), Fraction(0))]
    assert RunConfig(suite="gram").suites == ("gram",)


def test_run_is_deterministic():
    cfg = RunConfig(alpha_list=[0, 1], n_max=4, suite="symmetry", trials=3, seed=42)
    assert emit(harness.run(cfg)) == emit(harness.run(cfg))


def test_thread_cap(monkeypatch):
    monkeypatch.setenv("SOLAG_THREADS", "2")
    cfg = RunConfig(alpha_list=[0, 1], n_max=3, suite="boundary", trials=2)
    parallel = emit(harness.run(cfg))
    monkeypatch.setenv("SOLAG_THREADS", "1")
    assert emit(harness.run(cfg)) == parallel
    monkeypatch.setenv("SOLAG_THREADS", "many")
    with pytest.raises(ConfigError):
        harness.run(cfg)


def test_failing_suite_exit_status(monkeypatch):
    import solag.spectral as spectral

    real = spectral.eigen
    monkeypatch.setattr(spectral, "eigen", lambda n, a: real(n + 1, a))
    reports = harness.run(RunConfig(alpha_list=[0], n_max=2, M="1", N="1", suite="spectral"))
    assert harness.exit_status(reports) == harness.EXIT_FAIL
    out = json.loads(emit(reports))
    assert out["passed"] is False
    assert out["suites"]["spectral"]["first_failure"] == "classical"


class TestCli:
    def run(self, capsys, *argv):
        code = main(list(argv))
        return code, capsys.readouterr().out

    def test_verify_passes(self, capsys):
        code, out = self.run(capsys, "verify", "--suite", "gram", "--alpha", "0", "--nmax", "3", "--M", "1", "--N", "1")
        assert code == 0 and json.loads(out)["passed"] is True

    def test_verify_all_degenerate_N(self, capsys):
        code, out = self.run(capsys, "verify", "--alpha", "0,1", "--nmax", "4", "--M", "1", "--N", "0", "--trials", "3")
        assert code == 0
        assert set(json.loads(out)["suites"]) == set(harness.SUITES)

    def test_bad_rational_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["verify", "--M", "1//2", "--N", "1"])
        assert exc.value.code == 2
        assert "position 2" in capsys.readouterr().err

    def test_half_grid_is_usage_error(self, capsys):
        assert main(["verify", "--M", "1"]) == 2
        assert "M and N" in capsys.readouterr().err

    def test_symcheck_csv(self, capsys):
        code, out = self.run(capsys, "symcheck", "--alpha", "0", "--M", "1", "--N", "1", "--trials", "2", "--format", "csv")
        assert code == 0
        assert out.splitlines() == ["suite,check,passed,count", "symmetry,symmetric,1,2", "symmetry,closed_form,1,2"]

    def test_ops(self, capsys):
        _, out = self.run(capsys, "ops", "--alpha", "0", "--op", "L")
        assert parse_diffop(out) == build_L(0)
        _, out = self.run(capsys, "ops", "--alpha", "1", "--op", "combined", "--M", "1", "--N", "1")
        assert parse_diffop(out).order == 14
        assert main(["ops", "--alpha", "0", "--op", "combined"]) == 2

    def test_poly(self, capsys):
        _, out = self.run(capsys, "poly", "--alpha", "0", "--n", "1")
        assert out.strip() == '["1","-1"]'

    def test_eigen_and_gram(self, capsys):
        _, out = self.run(capsys, "eigen", "--alpha", "0", "--nmax", "2")
        assert out == "n,lam,lamA,lamB,lamC\n0,0,0,0,0\n1,1,1,0,0\n2,2,3,1,1\n"
        _, out = self.run(capsys, "gram", "--alpha", "0", "--nmax", "1", "--M", "1", "--N", "1")
        assert out.splitlines()[0] == "2,0"
