"""Dimension sweeps, cross-method verification, and text serialization.

The CLI is a thin shell over this module: sweep() produces the rows behind
the table and plot commands, verify_dimension() runs every applicable
solver route for one dimension and compares them pairwise, and the
*_to_csv / *_to_json helpers render both to deterministic text.  CSV values
carry 12 significant digits; JSON keeps full double precision so parsed
output round-trips exactly.
"""

from __future__ import annotations

import itertools
import json
import logging
import math
import time
from dataclasses import dataclass
from typing import Sequence

from .contour_root import default_contour, ullisch_k
from .errors import DomainError
from .fraser_solver import SQRT2, GoatSolution, solve_k
from .geometry_oracle import MonteCarloConfig, grazed_fraction_mc, solve_k_oracle
from .special_functions import DEFAULT_QUADRATURE, QuadratureConfig

__all__ = [
    "SweepRow",
    "MethodRun",
    "PairDeviation",
    "McCheck",
    "RunReport",
    "sweep",
    "verify_dimension",
    "table_to_csv",
    "table_to_json",
    "solution_to_csv",
    "solution_to_json",
    "report_to_csv",
    "report_to_json",
]

logger = logging.getLogger(__name__)

VERIFY_MIN_N = 1
VERIFY_MAX_N = 6

# Defensive cap so a typo'd step cannot ask for a billion solves.
_MAX_SWEEP_ROWS = 100_000


def _sig12(x: float) -> str:
    """12 significant digits, locale independent."""
    return format(float(x), ".12g")


@dataclass(frozen=True)
class SweepRow:
    """One table row: dimension, tether angle, ratio, and distance to sqrt(2)."""

    n: float
    beta: float
    k: float
    sqrt2_gap: float


@dataclass(frozen=True)
class MethodRun:
    """One solver route's result plus how long it took."""

    route: str
    solution: GoatSolution
    wall_time_s: float


@dataclass(frozen=True)
class PairDeviation:
    """Pairwise |delta k| between two routes, judged against a tolerance."""

    route_a: str
    route_b: str
    k_a: float
    k_b: float
    tolerance: float

    @property
    def delta_k(self) -> float:
        return abs(self.k_a - self.k_b)

    @property
    def within(self) -> bool:
        return self.delta_k <= self.tolerance


@dataclass(frozen=True)
class McCheck:
    """Monte Carlo half-fraction check: |fraction - 1/2| against 4 standard
    errors, the same form of deviation-vs-tolerance as PairDeviation."""

    samples: int
    seed: int
    fraction: float
    std_error: float
    wall_time_s: float

    @property
    def deviation(self) -> float:
        return abs(self.fraction - 0.5)

    @property
    def tolerance(self) -> float:
        return 4.0 * self.std_error

    @property
    def within(self) -> bool:
        return self.deviation <= self.tolerance


@dataclass(frozen=True)
class RunReport:
    """Everything verify_dimension learned about one dimension."""

    n: int
    tol_cross: float
    runs: tuple[MethodRun, ...]
    deviations: tuple[PairDeviation, ...]
    monte_carlo: McCheck | None = None

    @property
    def passed(self) -> bool:
        """Pass iff every deviation (pairwise and, when run, Monte Carlo)
        is within its configured tolerance."""
        if not all(d.within for d in self.deviations):
            return False
        return self.monte_carlo is None or self.monte_carlo.within


def sweep(
    n_min: float,
    n_max: float,
    step: float,
    tol: float = 1e-12,
    config: QuadratureConfig = DEFAULT_QUADRATURE,
) -> list[SweepRow]:
    """Solve every dimension n_min, n_min + step, ... up to n_max."""
    if not (0.0 <= n_min <= n_max):
        raise DomainError(f"need 0 <= n_min <= n_max, got [{n_min!r}, {n_max!r}]")
    if not (step > 0.0):
        raise DomainError(f"step must be positive, got {step!r}")
    count = int(math.floor((n_max - n_min) / step + 1e-9)) + 1
    if count > _MAX_SWEEP_ROWS:
        raise DomainError(f"sweep would produce {count} rows; cap is {_MAX_SWEEP_ROWS}")
    rows = []
    for i in range(count):
        n = n_min + i * step
        sol = solve_k(n, tol, config)
        rows.append(SweepRow(n, sol.beta, sol.k, SQRT2 - sol.k))
    return rows


def verify_dimension(
    n: int,
    tol_cross: float = 1e-8,
    tol: float = 1e-10,
    config: QuadratureConfig = DEFAULT_QUADRATURE,
    nodes: int = 256,
    mc: MonteCarloConfig | None = None,
) -> RunReport:
    """Run every solver route that applies to dimension n and compare them.

    Routes: the half-grazing solver always; the contour closed form when
    n = 2; the lens-bisection oracle always.  The routes share no formula
    beyond the ball volume, so pairwise agreement is a genuine check.
    Passing an MC config adds the sampled half-fraction test (slow path).
    """
    if int(n) != n or not (VERIFY_MIN_N <= n <= VERIFY_MAX_N):
        raise DomainError(
            f"verification supports integer n in "
            f"{VERIFY_MIN_N}..{VERIFY_MAX_N}, got {n!r}"
        )
    if not (tol_cross > 0.0):
        raise DomainError(f"tol_cross must be positive, got {tol_cross!r}")
    n = int(n)

    runs: list[MethodRun] = []

    start = time.perf_counter()
    fraser = solve_k(float(n), tol, config)
    runs.append(MethodRun("fraser", fraser, time.perf_counter() - start))

    if n == 2:
        start = time.perf_counter()
        contour = ullisch_k(1.0, default_contour(nodes))
        runs.append(MethodRun("contour", contour, time.perf_counter() - start))

    start = time.perf_counter()
    oracle = solve_k_oracle(n, tol, config)
    runs.append(MethodRun("oracle", oracle, time.perf_counter() - start))

    for run in runs:
        logger.debug("route %-8s k=%.15g  (%.1f ms)", run.route, run.solution.k, 1e3 * run.wall_time_s)

    deviations = tuple(
        PairDeviation(a.route, b.route, a.solution.k, b.solution.k, tol_cross)
        for a, b in itertools.combinations(runs, 2)
    )

    mc_check = None
    if mc is not None:
        start = time.perf_counter()
        fraction, std_error = grazed_fraction_mc(n, fraser.k, mc)
        mc_check = McCheck(mc.samples, mc.seed, fraction, std_error, time.perf_counter() - start)
        logger.debug(
            "monte carlo fraction %.6f +- %.6f  (%.1f ms)",
            fraction,
            std_error,
            1e3 * mc_check.wall_time_s,
        )

    report = RunReport(n, tol_cross, tuple(runs), deviations, mc_check)
    logger.info("verify n=%d: %s", n, "pass" if report.passed else "FAIL")
    return report


# ---------------------------------------------------------------------------
# Serialization.  All of it is plain string building: deterministic, LF line
# endings, no locale involvement.


def table_to_csv(rows: Sequence[SweepRow]) -> str:
    lines = ["n,beta,k,sqrt2_gap"]
    for row in rows:
        lines.append(
            ",".join(_sig12(v) for v in (row.n, row.beta, row.k, row.sqrt2_gap))
        )
    return "\n".join(lines) + "\n"


def table_to_json(rows: Sequence[SweepRow]) -> str:
    payload = {
        "rows": [
            {"n": row.n, "beta": row.beta, "k": row.k, "sqrt2_gap": row.sqrt2_gap}
            for row in rows
        ]
    }
    return json.dumps(payload, indent=2) + "\n"


def solution_to_csv(sol: GoatSolution) -> str:
    header = "n,beta,k,r,R,residual,method"
    row = ",".join(
        [_sig12(sol.n), _sig12(sol.beta), _sig12(sol.k), _sig12(sol.r),
         _sig12(sol.R), _sig12(sol.residual), sol.method.value]
    )
    return header + "\n" + row + "\n"


def solution_to_json(sol: GoatSolution) -> str:
    payload = {
        "n": sol.n,
        "beta": sol.beta,
        "k": sol.k,
        "r": sol.r,
        "R": sol.R,
        "residual": sol.residual,
        "method": sol.method.value,
    }
    return json.dumps(payload, indent=2) + "\n"


def report_to_csv(report: RunReport) -> str:
    """Per-route rows only; the verdict and deviations live in the JSON
    form (and in the exit code when run through the CLI)."""
    lines = ["route,method,n,beta,k,residual"]
    for run in report.runs:
        s = run.solution
        lines.append(
            ",".join(
                [run.route, s.method.value, _sig12(s.n), _sig12(s.beta),
                 _sig12(s.k), _sig12(s.residual)]
            )
        )
    return "\n".join(lines) + "\n"


def report_to_json(report: RunReport) -> str:
    def method_entry(run: MethodRun) -> dict:
        s = run.solution
        return {
            "route": run.route,
            "method": s.method.value,
            "n": s.n,
            "beta": s.beta,
            "k": s.k,
            "residual": s.residual,
        }

    def deviation_entry(d: PairDeviation) -> dict:
        return {
            "route_a": d.route_a,
            "route_b": d.route_b,
            "k_a": d.k_a,
            "k_b": d.k_b,
            "delta_k": d.delta_k,
            "tolerance": d.tolerance,
            "within": d.within,
        }

    mc = report.monte_carlo
    payload = {
        "n": report.n,
        "tol_cross": report.tol_cross,
        "passed": report.passed,
        # Wall times are kept on the report object but deliberately left out
        # of the payload: identical invocations must produce identical bytes.
        "methods": [method_entry(r) for r in report.runs],
        "deviations": [deviation_entry(d) for d in report.deviations],
        "monte_carlo": None
        if mc is None
        else {
            "samples": mc.samples,
            "seed": mc.seed,
            "fraction": mc.fraction,
            "std_error": mc.std_error,
            "deviation": mc.deviation,
            "tolerance": mc.tolerance,
            "within": mc.within,
        },
    }
    return json.dumps(payload, indent=2) + "\n"
