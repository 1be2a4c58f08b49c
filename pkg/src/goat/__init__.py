"""Tether ratios for a goat grazing half of an n-dimensional field.

A goat is tethered to a point on the boundary of a ball-shaped field of
radius r and should graze exactly half of the field's volume.  This package
computes the required tether ratio k_n = R/r for any real dimension n >= 0
by three independent routes (a 1-d half-grazing equation, a contour-integral
closed form at n = 2, and a lens-volume bisection oracle) and cross-checks
them against each other.
"""

from .errors import (
    BracketError,
    ContourError,
    ConvergenceError,
    DomainError,
    GoatError,
)
from .special_functions import (
    DEFAULT_QUADRATURE,
    QuadratureConfig,
    ball_volume,
    cos_power_integral,
    gamma,
)
from .fraser_solver import (
    GoatSolution,
    SolveMethod,
    fraser_residual,
    limit_gap,
    solve_beta,
    solve_k,
    tether_ratio,
)
from .contour_root import (
    CircleContour,
    argument_principle,
    contour_quadrature,
    count_zeros,
    default_contour,
    extract_root,
    ullisch_f,
    ullisch_f_prime,
    ullisch_k,
)
from .geometry_oracle import (
    LensResult,
    MonteCarloConfig,
    grazed_fraction_mc,
    lens_area_2d,
    lens_volume,
    sample_unit_ball,
    solve_k_oracle,
)
from .report import (
    McCheck,
    MethodRun,
    PairDeviation,
    RunReport,
    SweepRow,
    sweep,
    verify_dimension,
)

__version__ = "0.1.0"

__all__ = [
    "GoatError",
    "DomainError",
    "ConvergenceError",
    "BracketError",
    "ContourError",
    "QuadratureConfig",
    "DEFAULT_QUADRATURE",
    "gamma",
    "ball_volume",
    "cos_power_integral",
    "SolveMethod",
    "GoatSolution",
    "fraser_residual",
    "solve_beta",
    "tether_ratio",
    "solve_k",
    "limit_gap",
    "CircleContour",
    "default_contour",
    "ullisch_f",
    "ullisch_f_prime",
    "contour_quadrature",
    "extract_root",
    "argument_principle",
    "count_zeros",
    "ullisch_k",
    "LensResult",
    "MonteCarloConfig",
    "lens_volume",
    "lens_area_2d",
    "sample_unit_ball",
    "grazed_fraction_mc",
    "solve_k_oracle",
    "SweepRow",
    "MethodRun",
    "PairDeviation",
    "McCheck",
    "RunReport",
    "sweep",
    "verify_dimension",
    "__version__",
]
