"""Command-line front end: solve, table, verify, plot.

Exit codes: 0 success, 1 verification failure, 2 usage error (including
method/dimension mismatches), 3 numeric failure, 4 I/O failure.  stdout
carries data only; all diagnostics go to stderr, with verbosity picked by
the GOAT_LOG environment variable (debug, info, or quiet).
"""

from __future__ import annotations

import functools
import logging
import os
import sys

import click

from . import report as _report
from .contour_root import default_contour, ullisch_k
from .errors import DomainError, GoatError
from .fraser_solver import solve_k
from .geometry_oracle import MonteCarloConfig, solve_k_oracle
from .special_functions import QuadratureConfig

logger = logging.getLogger("goat.cli")

_LOG_LEVELS = {"debug": logging.DEBUG, "info": logging.INFO, "quiet": logging.CRITICAL}


def _configure_logging() -> None:
    name = os.environ.get("GOAT_LOG", "info").strip().lower()
    level = _LOG_LEVELS.get(name, logging.INFO)
    logging.basicConfig(
        stream=sys.stderr,
        level=level,
        format="goat: %(levelname)s: %(message)s",
    )


def _fail(code: int, message: str) -> None:
    click.echo(f"goat: error: {message}", err=True)
    sys.exit(code)


def _guarded(fn):
    """Map library exceptions onto the documented exit codes."""

    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except DomainError as exc:
            _fail(2, str(exc))
        except click.ClickException:
            raise
        except OSError as exc:
            _fail(4, str(exc))
        except GoatError as exc:
            _fail(3, str(exc))
        except Exception as exc:  # anything unforeseen counts as numeric failure
            logger.debug("unexpected failure", exc_info=True)
            _fail(3, f"{type(exc).__name__}: {exc}")

    return wrapper


def _emit(text: str, output: str | None) -> None:
    if output is None:
        click.echo(text, nl=False)
    else:
        # newline="" keeps the LF line endings exactly as serialized.
        with open(output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        logger.info("wrote %s", output)


_format_option = click.option(
    "--format", "fmt", type=click.Choice(["csv", "json"]),
    help="Output format.  [default: csv for table, json elsewhere]",
)
_output_option = click.option(
    "--output", type=click.Path(dir_okay=False), default=None,
    help="Write to this file instead of stdout.",
)
_tol_option = click.option(
    "--tol", type=float, default=1e-12, show_default=True,
    help="Root-finding tolerance.",
)


@click.group()
def cli() -> None:
    """Tether ratios for a goat grazing half of an n-dimensional field.

    A goat is tethered to the boundary of a ball-shaped field of radius r.
    These commands compute the tether ratio k_n (tether length over r) that
    lets it graze exactly half the field, for any real dimension n >= 0.
    """
    _configure_logging()


@cli.command()
@click.option("--n", "n", type=float, required=True, help="Dimension, real and >= 0.")
@click.option("--r", "r", type=float, default=1.0, show_default=True,
              help="Field radius; the tether length is R = k*r.")
@_tol_option
@click.option("--method", type=click.Choice(["fraser", "contour", "oracle", "auto"]),
              default="auto", show_default=True,
              help="auto uses the closed form at n = 0 or 1 and bisection "
                   "elsewhere; contour needs n = 2; oracle needs integer n >= 1.")
@click.option("--nodes", type=int, default=256, show_default=True,
              help="Quadrature nodes for the contour method.")
@_format_option
@_output_option
@_guarded
def solve(n, r, tol, method, nodes, fmt, output) -> None:
    """Solve one dimension for the tether angle and ratio."""
    if method == "contour":
        if n != 2.0:
            raise DomainError(f"the contour method is only valid at n = 2, got n = {n!r}")
        sol = ullisch_k(r, default_contour(nodes))
    elif method == "oracle":
        if int(n) != n or n < 1:
            raise DomainError(
                f"the oracle method needs an integer dimension >= 1, got n = {n!r}"
            )
        sol = solve_k_oracle(int(n), tol)
        if r != 1.0:
            import dataclasses

            sol = dataclasses.replace(sol, r=r)
    else:
        # fraser and auto are the same route: exact branches fire at n = 0, 1.
        sol = solve_k(n, tol, r=r)
    text = _report.solution_to_csv(sol) if fmt == "csv" else _report.solution_to_json(sol)
    _emit(text, output)


@cli.command()
@click.option("--n-min", type=float, default=0.0, show_default=True)
@click.option("--n-max", type=float, default=10.0, show_default=True)
@click.option("--step", type=float, default=0.5, show_default=True)
@_tol_option
@_format_option
@_output_option
@_guarded
def table(n_min, n_max, step, tol, fmt, output) -> None:
    """Sweep dimensions and print n, beta, k, and sqrt(2) - k per row."""
    rows = _report.sweep(n_min, n_max, step, tol)
    text = _report.table_to_json(rows) if fmt == "json" else _report.table_to_csv(rows)
    _emit(text, output)


@cli.command()
@click.option("--n", "n", type=int, required=True, help="Dimension to verify, integer 1..6.")
@click.option("--tol-cross", type=float, default=1e-8, show_default=True,
              help="Maximum allowed |delta k| between any two routes.")
@_tol_option
@click.option("--with-mc", is_flag=True,
              help="Also run the Monte Carlo half-fraction check (slow path).")
@click.option("--samples", type=int, default=1_000_000, show_default=True,
              help="Monte Carlo sample count.")
@click.option("--seed", type=int, default=42, show_default=True,
              help="Monte Carlo RNG seed.")
@click.option("--nodes", type=int, default=256, show_default=True,
              help="Quadrature nodes for the contour route at n = 2.")
@_format_option
@_output_option
@_guarded
def verify(n, tol_cross, tol, with_mc, samples, seed, nodes, fmt, output) -> None:
    """Cross-check the solver routes against each other for one dimension.

    Exits 0 when all pairwise deviations (and the Monte Carlo check, if
    requested) are within tolerance, 1 otherwise.
    """
    mc = MonteCarloConfig(samples, seed) if with_mc else None
    rep = _report.verify_dimension(n, tol_cross=tol_cross, tol=tol, nodes=nodes, mc=mc)
    text = _report.report_to_csv(rep) if fmt == "csv" else _report.report_to_json(rep)
    _emit(text, output)
    if not rep.passed:
        for dev in rep.deviations:
            if not dev.within:
                click.echo(
                    f"goat: verify: |k_{dev.route_a} - k_{dev.route_b}| = "
                    f"{dev.delta_k:.3e} exceeds {dev.tolerance:.3e}",
                    err=True,
                )
        mc_check = rep.monte_carlo
        if mc_check is not None and not mc_check.within:
            click.echo(
                f"goat: verify: monte carlo fraction {mc_check.fraction!r} is "
                f"{mc_check.deviation:.3e} from 1/2, beyond {mc_check.tolerance:.3e}",
                err=True,
            )
        sys.exit(1)


@cli.command()
@click.option("--n-max", type=float, default=8.0, show_default=True)
@click.option("--step", type=float, default=0.25, show_default=True)
@_tol_option
@click.option("--output", type=click.Path(dir_okay=False), required=True,
              help="Destination SVG path.")
@click.option("--data-output", type=click.Path(dir_okay=False), default=None,
              help="Where to write the sweep data as CSV.  "
                   "[default: the SVG path with a .csv extension]")
@_guarded
def plot(n_max, step, tol, output, data_output) -> None:
    """Render k_n against n as SVG, with the sweep data saved alongside."""
    if not (n_max > 0.0):
        raise DomainError(f"n-max must be positive, got {n_max!r}")
    rows = _report.sweep(0.0, n_max, step, tol)
    # Deferred: pulling in matplotlib is slow and only this command needs it.
    from .plotting import render_sweep_svg

    render_sweep_svg(rows, output)
    logger.info("wrote %s", output)
    if data_output is None:
        root, ext = os.path.splitext(output)
        data_output = root + ".csv" if ext.lower() == ".svg" else output + ".csv"
    _emit(_report.table_to_csv(rows), data_output)


def main() -> None:
    cli(prog_name="goat")


if __name__ == "__main__":
    main()
