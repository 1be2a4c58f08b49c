"""Render the dimension sweep as an SVG figure.

Byte determinism is part of the output contract, so the two sources of
run-to-run noise in matplotlib SVG output are pinned here: the hash salt
that generates internal element ids, and the creation-date metadata.
"""

from __future__ import annotations

import math
from typing import Sequence

import matplotlib

matplotlib.use("svg")

import matplotlib.pyplot as plt

from .errors import DomainError
from .report import SweepRow

__all__ = ["render_sweep_svg"]

_HASH_SALT = "grazing-goat"


def render_sweep_svg(rows: Sequence[SweepRow], path: str) -> None:
    """Write k_n against n with the sqrt(2) asymptote to `path` as SVG 1.1.

    The curve approaches sqrt(2) from below and never touches it, so the
    asymptote is drawn dashed above the data.  OSError from an unwritable
    path propagates to the caller.
    """
    if not rows:
        raise DomainError("nothing to plot: empty sweep")
    xs = [row.n for row in rows]
    ys = [row.k for row in rows]
    with plt.rc_context({"svg.hashsalt": _HASH_SALT}):
        fig, ax = plt.subplots(figsize=(7.0, 4.5))
        try:
            ax.plot(xs, ys, marker="o", markersize=3.0, linewidth=1.5,
                    color="#2a6f97", label="tether ratio $k_n$")
            ax.axhline(math.sqrt(2.0), linestyle="--", linewidth=1.2,
                       color="#c44536", label=r"$\sqrt{2}$ limit")
            ax.set_xlabel("dimension $n$")
            ax.set_ylabel("tether ratio $k$")
            ax.set_title("Tether ratio for grazing half the field")
            ax.legend(loc="lower right")
            ax.grid(True, alpha=0.3)
            fig.savefig(path, format="svg", metadata={"Date": None})
        finally:
            plt.close(fig)
