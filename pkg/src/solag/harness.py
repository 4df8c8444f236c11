"""Verification-suite orchestration, seeded test polynomials and serialization."""
from __future__ import annotations

import csv
import io
import json
import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Sequence

from .exactalg import Poly, format_rational, parse_rational
from .hypergeom import verify_hypergeom_identities
from .laguerre import toolbox_failures, u_comp, u_comp_alt
from .report import Report
from .sobolev import (
    SobolevSpace,
    boundary_sums,
    boundary_value_failures,
    energy_check,
    form_identity_failures,
    gram,
    symmetry_check,
)
from .spectral import EigenQuad, verify_spectral, verify_structure
from .weyl import DiffOp

SUITES = ("spectral", "symmetry", "gram", "identities", "boundary", "energy")
DEFAULT_ALPHAS = (0, 1, 2, 3)
DEFAULT_GRID = (
    (Fraction(1), Fraction(1)),
    (Fraction(3), Fraction(1, 2)),
    (Fraction(0), Fraction(2)),
    (Fraction(7, 5), Fraction(1, 3)),
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class ConfigError(ValueError):
    pass


@dataclass
class RunConfig:
    alpha_list: list[int] = field(default_factory=lambda: list(DEFAULT_ALPHAS))
    n_max: int = 10
    M: Fraction | None = None
    N: Fraction | None = None
    seed: int = 0
    format: str = "json"
    suite: str = "all"
    trials: int = 20
    max_degree: int = 8

    def __post_init__(self):
        if isinstance(self.M, str):
            self.M = _parse_mass("M", self.M)
        if isinstance(self.N, str):
            self.N = _parse_mass("N", self.N)
        if (self.M is None) != (self.N is None):
            raise ConfigError("give both M and N, or neither for the default grid")
        if self.suite not in SUITES + ("all",):
            raise ConfigError(f"unknown suite {self.suite!r}")
        if self.format not in ("json", "csv"):
            raise ConfigError(f"unknown format {self.format!r}")
        if any(a < 0 for a in self.alpha_list):
            raise ConfigError("alpha values must be nonnegative integers")
        if self.n_max < 0:
            raise ConfigError("n_max must be nonnegative")
        if not 0 <= self.seed < 2**64:
            raise ConfigError("seed must be an unsigned 64-bit integer")

    @property
    def grid(self) -> list[tuple[Fraction, Fraction]]:
        if self.M is None:
            return list(DEFAULT_GRID)
        return [(self.M, self.N)]

    @property
    def suites(self) -> tuple[str, ...]:
        return SUITES if self.suite == "all" else (self.suite,)


def _parse_mass(name: str, text: str) -> Fraction:
    try:
        q = parse_rational(text)
    except ValueError as exc:
        raise ConfigError(f"--{name}: {exc}") from None
    if q < 0:
        raise ConfigError(f"--{name}: point mass must be nonnegative, got {text!r}")
    return q


def parse_alpha_list(text: str) -> list[int]:
    out = []
    pos = 0
    for part in text.split(","):
        item = part.strip()
        if not item.isdigit():
            raise ConfigError(f"--alpha: bad entry {part!r} at position {pos}")
        out.append(int(item))
        pos += len(part) + 1
    return out


def random_poly(rng: random.Random, max_degree: int) -> Poly:
    """Degree drawn from ``0..max_degree``; numerators in [-20, 20], denominators in [1, 10]."""
    if max_degree < 0:
        raise ValueError("max_degree must be nonnegative")
    deg = rng.randint(0, max_degree)
    return Poly(Fraction(rng.randint(-20, 20), rng.randint(1, 10)) for _ in range(deg + 1))


def _task_rng(seed: int, *key: Any) -> random.Random:
    # string seeds are hashed with sha512, so this is stable across processes
    return random.Random(":".join(str(k) for k in (seed,) + key))


def _suite_spectral(cfg: RunConfig, alpha: int) -> Report:
    report = verify_structure(alpha)
    report.suite = "spectral"
    for M, N in cfg.grid:
        report.extend(verify_spectral(alpha, M, N, cfg.n_max))
    return report


def _suite_symmetry(cfg: RunConfig, alpha: int) -> Report:
    report = Report("symmetry")
    for M, N in cfg.grid:
        rng = _task_rng(cfg.seed, "symmetry", alpha, M, N)
        space = SobolevSpace(alpha, M, N)
        for _ in range(cfg.trials):
            f, g = random_poly(rng, cfg.max_degree), random_poly(rng, cfg.max_degree)
            res = symmetry_check(space, f, g)
            inputs = dict(alpha=alpha, M=str(M), N=str(N), f=f.to_json(), g=g.to_json())
            report.check("symmetric").record(res.symmetric, **inputs)
            report.check("closed_form").record(res.matches_closed_form, **inputs)
    return report


def _suite_gram(cfg: RunConfig, alpha: int) -> Report:
    report = Report("gram")
    for M, N in cfg.grid:
        G = gram(SobolevSpace(alpha, M, N), cfg.n_max)
        for i, row in enumerate(G):
            for j, v in enumerate(row):
                inputs = dict(alpha=alpha, M=str(M), N=str(N), n=i, m=j, value=str(v))
                if i == j:
                    report.check("diagonal_positive").record(v > 0, **inputs)
                else:
                    report.check("off_diagonal_zero").record(v == 0, **inputs)
    return report


def _suite_identities(cfg: RunConfig, alpha: int) -> Report:
    report = verify_hypergeom_identities(alpha_max=alpha) if alpha == max(cfg.alpha_list) else Report("identities")
    report.suite = "identities"
    tb = report.check("laguerre_toolbox")
    for n in range(cfg.n_max + 3):
        failures = toolbox_failures(n, alpha)
        tb.record(not failures, n=n, gamma=alpha, failed=failures)
    alt = report.check("u_alternative_form")
    for n in range(2, cfg.n_max + 3):
        alt.record(u_comp(n, alpha) == u_comp_alt(n, alpha), n=n, alpha=alpha)
    return report


def _suite_boundary(cfg: RunConfig, alpha: int) -> Report:
    report = Report("boundary")
    rng = _task_rng(cfg.seed, "boundary", alpha)
    for _ in range(cfg.trials):
        f, g = random_poly(rng, cfg.max_degree), random_poly(rng, cfg.max_degree)
        inputs = dict(alpha=alpha, f=f.to_json(), g=g.to_json())
        failed = boundary_value_failures(alpha, f)
        report.check("values_at_origin").record(not failed, failed=failed, **inputs)
        failed = form_identity_failures(alpha, f, g)
        report.check("integration_by_parts").record(not failed, failed=failed, **inputs)
        c = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
        lhs = boundary_sums(alpha, f + g.scale(c))
        sf, sg = boundary_sums(alpha, f), boundary_sums(alpha, g)
        report.check("boundary_sums_linear").record(
            lhs.s1 == sf.s1 + c * sg.s1 and lhs.s2 == sf.s2 + c * sg.s2, c=str(c), **inputs
        )
    return report


def _suite_energy(cfg: RunConfig, alpha: int) -> Report:
    report = Report("energy")
    for M, N in cfg.grid:
        rng = _task_rng(cfg.seed, "energy", alpha, M, N)
        space = SobolevSpace(alpha, M, N)
        polys = [random_poly(rng, cfg.max_degree) for _ in range(cfg.trials)]
        polys += [Poly((rng.randint(-9, 9), rng.randint(-9, 9))) for _ in range(3)]
        for f in polys:
            res = energy_check(space, f)
            report.check("energy_inequality").record(
                res.ok, alpha=alpha, M=str(M), N=str(N), f=f.to_json(), gap=str(res.gap)
            )
    return report


_RUNNERS = {
    "spectral": _suite_spectral,
    "symmetry": _suite_symmetry,
    "gram": _suite_gram,
    "identities": _suite_identities,
    "boundary": _suite_boundary,
    "energy": _suite_energy,
}


def _run_task(cfg: RunConfig, suite: str, alpha: int) -> Report:
    start = time.perf_counter()
    report = _RUNNERS[suite](cfg, alpha)
    report.wall_time = time.perf_counter() - start
    return report


def _thread_cap() -> int:
    raw = os.environ.get("SOLAG_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        raise ConfigError(f"SOLAG_THREADS must be an integer, got {raw!r}") from None


def run(cfg: RunConfig) -> dict[str, Report]:
    """Run the configured suites; results are keyed by suite in a fixed order."""
    tasks = [(s, a) for s in cfg.suites for a in cfg.alpha_list]
    workers = min(_thread_cap(), len(tasks)) or 1
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_run_task, [cfg] * len(tasks), *zip(*tasks)))
    else:
        parts = [_run_task(cfg, s, a) for s, a in tasks]
    out = {s: Report(s) for s in cfg.suites}
    for (suite, _), part in zip(tasks, parts):
        out[suite].extend(part)
    return out


def exit_status(reports: dict[str, Report]) -> int:
    return EXIT_OK if all(r.passed for r in reports.values()) else EXIT_FAIL


# serialization

def _dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _csv(rows: Sequence[Sequence[Any]]) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def emit(obj: Any, format: str = "json", timing: bool = False) -> str:
    """Serialize a Poly, DiffOp, eigenvalue table, Gram matrix or report set."""
    if isinstance(obj, Poly):
        return _dumps(obj.to_json())
    if isinstance(obj, DiffOp):
        return _dumps(obj.to_json())
    if isinstance(obj, Report):
        obj = {obj.suite: obj}
    if isinstance(obj, dict) and all(isinstance(v, Report) for v in obj.values()):
        if format == "csv":
            rows = [("suite", "check", "passed", "count")]
            for r in obj.values():
                rows += [(r.suite, c.name, int(c.passed), c.count) for c in r.checks]
            return _csv(rows)
        body = {k: v.to_json(timing) for k, v in obj.items()}
        return _dumps({"passed": all(r.passed for r in obj.values()), "suites": body})
    if isinstance(obj, list) and obj and isinstance(obj[0], tuple) and isinstance(obj[0][1], EigenQuad):
        header = ("n", "lam", "lamA", "lamB", "lamC")
        rows = [
            (n, *(format_rational(v) for v in (q.lam, q.lamA, q.lamB, q.lamC)))
            for n, q in obj
        ]
        if format == "csv":
            return _csv([header, *rows])
        return _dumps([dict(zip(header, r)) for r in rows])
    if isinstance(obj, list) and all(isinstance(r, list) for r in obj):
        rows = [[format_rational(v) for v in r] for r in obj]
        return _csv(rows) if format == "csv" else _dumps(rows)
    raise TypeError(f"cannot emit {type(obj).__name__}")


def parse_poly(text: str) -> Poly:
    return Poly.from_json(json.loads(text))


def parse_diffop(text: str) -> DiffOp:
    return DiffOp.from_json(json.loads(text))
