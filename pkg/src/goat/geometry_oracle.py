"""Independent geometric checks on the solver output.

Nothing here touches the half-grazing residual.  The grazed region is the
lens where the field ball B(0, 1) meets the tether ball B(P, k) with P on
the boundary, and its volume is integrated slice by slice: each slice
perpendicular to the symmetry axis is an (n-1)-ball whose radius follows
from whichever sphere is binding.  A bisection on k then finds where the
lens holds exactly half the field, giving a solution the main solver can
be compared against.  A seeded Monte Carlo estimate of the grazed fraction
provides a second, coarser check.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import ConvergenceError, DomainError
from .fraser_solver import GoatSolution, SolveMethod
from .special_functions import DEFAULT_QUADRATURE, QuadratureConfig, ball_volume

__all__ = [
    "LensResult",
    "MonteCarloConfig",
    "lens_volume",
    "lens_area_2d",
    "sample_unit_ball",
    "grazed_fraction_mc",
    "solve_k_oracle",
]


@dataclass(frozen=True)
class MonteCarloConfig:
    """Sample count and RNG seed for the Monte Carlo fraction estimate."""

    samples: int = 1_000_000
    seed: int = 42

    def __post_init__(self) -> None:
        if int(self.samples) != self.samples or self.samples < 1:
            raise DomainError(f"samples must be a positive integer, got {self.samples!r}")
        object.__setattr__(self, "samples", int(self.samples))
        if int(self.seed) != self.seed or not (0 <= self.seed < 2**64):
            raise DomainError(f"seed must be an integer in [0, 2**64), got {self.seed!r}")
        object.__setattr__(self, "seed", int(self.seed))


@dataclass(frozen=True)
class LensResult:
    """Lens volume for one (n, k) pair, with the quadrature's own error bound."""

    n: int
    k: float
    volume: float
    abs_error_estimate: float

    def __post_init__(self) -> None:
        cap = ball_volume(self.n, 1.0)
        # The lens sits inside the unit field ball; allow float-level slack.
        if not (0.0 <= self.volume <= cap + 1e-9):
            raise DomainError(
                f"volume {self.volume!r} outside [0, ball_volume({self.n}, 1)]"
            )
        if self.abs_error_estimate < 0.0:
            raise DomainError(
                f"error estimate must be >= 0, got {self.abs_error_estimate!r}"
            )


_GL15_X, _GL15_W = np.polynomial.legendre.leggauss(15)
_GL30_X, _GL30_W = np.polynomial.legendre.leggauss(30)


def _panel_estimate(f: Callable[[np.ndarray], np.ndarray], a: float, b: float):
    """30-point Gauss-Legendre value on [a, b] and its 15-vs-30 error gauge."""
    mid = 0.5 * (a + b)
    half = 0.5 * (b - a)
    coarse = half * float(np.dot(_GL15_W, f(mid + half * _GL15_X)))
    fine = half * float(np.dot(_GL30_W, f(mid + half * _GL30_X)))
    return fine, abs(fine - coarse)


def _adaptive_quad(
    f: Callable[[np.ndarray], np.ndarray],
    a: float,
    b: float,
    abs_tol: float,
    max_depth: int,
):
    """Globally adaptive quadrature: always split the worst panel first.

    Returns (value, error_estimate).  The cap slice integrands have
    square-root behaviour at the lens rim, which plain fixed-order rules
    resolve poorly; recursive halving concentrates nodes there instead.
    """
    if a == b:
        return 0.0, 0.0
    val, err = _panel_estimate(f, a, b)
    heap = [(-err, a, b, val, 0)]
    total_val, total_err = val, err
    while total_err > abs_tol:
        neg_err, lo, hi, old_val, depth = heapq.heappop(heap)
        if depth >= max_depth:
            raise ConvergenceError(
                f"adaptive quadrature on [{a!r}, {b!r}] still at error "
                f"{total_err:.3e} > {abs_tol:.3e} after depth {max_depth}"
            )
        mid = 0.5 * (lo + hi)
        lval, lerr = _panel_estimate(f, lo, mid)
        rval, rerr = _panel_estimate(f, mid, hi)
        total_val += lval + rval - old_val
        total_err += lerr + rerr + neg_err
        heapq.heappush(heap, (-lerr, lo, mid, lval, depth + 1))
        heapq.heappush(heap, (-rerr, mid, hi, rval, depth + 1))
    return total_val, total_err


def _check_lens_args(n: int, k: float) -> int:
    if int(n) != n or n < 1:
        raise DomainError(f"lens slicing needs an integer dimension >= 1, got {n!r}")
    if not (0.0 <= k <= 2.0):
        raise DomainError(f"tether ratio must lie in [0, 2], got {k!r}")
    return int(n)


def lens_volume(
    n: int,
    k: float,
    config: QuadratureConfig = DEFAULT_QUADRATURE,
) -> LensResult:
    """Volume of B(0, 1) intersect B(P, k) with P a boundary point.

    Splitting at the plane x = 1 - k^2/2 where the two spheres meet, the
    lens is a cap of the field ball glued to a cap of the tether ball, and
    each cap is a 1-d integral of (n-1)-ball slice volumes.
    """
    n = _check_lens_args(n, k)
    split = 1.0 - 0.5 * k * k
    unit_slice = ball_volume(n - 1, 1.0)
    ex = 0.5 * (n - 1)

    def field_slices(t: np.ndarray) -> np.ndarray:
        return unit_slice * np.clip(1.0 - t * t, 0.0, None) ** ex

    def tether_slices(t: np.ndarray) -> np.ndarray:
        return unit_slice * np.clip(k * k - (t - 1.0) ** 2, 0.0, None) ** ex

    budget = 0.5 * config.abs_tol
    v_field, e_field = _adaptive_quad(field_slices, split, 1.0, budget, config.max_subdivisions)
    v_tether, e_tether = _adaptive_quad(
        tether_slices, 1.0 - k, split, budget, config.max_subdivisions
    )
    return LensResult(n, float(k), max(0.0, v_field + v_tether), e_field + e_tether)


def lens_area_2d(k: float) -> float:
    """Planar lens area in closed form:

        A(k) = arccos(1 - k^2/2) + k^2 arccos(k/2) - (k/2) sqrt(4 - k^2).

    Exists so the n = 2 quadrature has something exact to answer to.
    """
    if not (0.0 <= k <= 2.0):
        raise DomainError(f"tether ratio must lie in [0, 2], got {k!r}")
    # Clamp acos arguments against rounding at the ends of the range.
    a1 = min(1.0, max(-1.0, 1.0 - 0.5 * k * k))
    a2 = min(1.0, max(-1.0, 0.5 * k))
    return math.acos(a1) + k * k * math.acos(a2) - 0.5 * k * math.sqrt(max(0.0, 4.0 - k * k))


def sample_unit_ball(
    n: int,
    rng: np.random.Generator,
    size: int | None = None,
) -> np.ndarray:
    """Uniform points in the n-ball: normalize Gaussians, scale by U^(1/n).

    Returns shape (n,) for size=None, else (size, n).  Draws from rng in a
    fixed order, so a given seed always yields the same points.
    """
    if int(n) != n or n < 1:
        raise DomainError(f"dimension must be an integer >= 1, got {n!r}")
    if size is not None and (int(size) != size or size < 1):
        raise DomainError(f"size must be a positive integer, got {size!r}")
    m = 1 if size is None else int(size)
    g = rng.standard_normal((m, int(n)))
    norms = np.linalg.norm(g, axis=1, keepdims=True)
    radii = rng.random(m) ** (1.0 / n)
    pts = g * (radii[:, None] / norms)
    return pts[0] if size is None else pts


_MC_CHUNK = 1 << 19


def grazed_fraction_mc(
    n: int,
    k: float,
    config: MonteCarloConfig = MonteCarloConfig(),
) -> tuple[float, float]:
    """Monte Carlo estimate of the grazed fraction of the field.

    Draws config.samples points uniformly from the field ball and counts
    those within k of the boundary point P = (1, 0, ..., 0).  Returns
    (fraction, standard_error) with the usual binomial error estimate.
    """
    n = _check_lens_args(n, k)
    rng = np.random.default_rng(config.seed)
    k_sq = k * k
    hits = 0
    remaining = config.samples
    while remaining > 0:
        m = min(remaining, _MC_CHUNK)
        pts = sample_unit_ball(n, rng, size=m)
        # |x - P|^2 = |x|^2 - 2 x_1 + 1 for P = (1, 0, ..., 0).
        d_sq = np.einsum("ij,ij->i", pts, pts) - 2.0 * pts[:, 0] + 1.0
        hits += int(np.count_nonzero(d_sq <= k_sq))
        remaining -= m
    fraction = hits / config.samples
    std_error = math.sqrt(fraction * (1.0 - fraction) / config.samples)
    return fraction, std_error


def solve_k_oracle(
    n: int,
    tol: float = 1e-10,
    config: QuadratureConfig = DEFAULT_QUADRATURE,
) -> GoatSolution:
    """Tether ratio by pure geometry: bisect k until the lens holds half
    the field.

    The lens volume is continuous and strictly increasing in k, from 0 at
    k = 0 to the whole field at k = 2, so the half-volume crossing is
    bracketed by construction.  The returned residual is the remaining
    volume defect (lens minus half field) at the accepted k, and beta is
    recovered from k = 2 cos(beta).
    """
    if int(n) != n or n < 1:
        raise DomainError(f"oracle needs an integer dimension >= 1, got {n!r}")
    n = int(n)
    if not (tol > 0.0):
        raise DomainError(f"tol must be positive, got {tol!r}")
    target = 0.5 * ball_volume(n, 1.0)
    lo, hi = 0.0, 2.0
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break  # bracket is one ulp wide; tol below float resolution
        defect = lens_volume(n, mid, config).volume - target
        if defect == 0.0:
            lo = hi = mid
            break
        if defect < 0.0:
            lo = mid
        else:
            hi = mid
    k = 0.5 * (lo + hi)
    residual = lens_volume(n, k, config).volume - target
    beta = math.acos(min(1.0, max(-1.0, 0.5 * k)))
    return GoatSolution(float(n), beta, k, residual, SolveMethod.ORACLE)
