"""First-quadrant ray figures rendered to deterministic SVG.

All mathematics upstream is exact; floating point enters only here, to place
line segments and labels.  Discrete-series rays are drawn solid, cone rays
dotted inside a shaded sector bounded by high-denominator rational
approximants of the cone boundary slopes (display only).  Byte-identical
output for identical input is arranged by pinning the matplotlib hash salt
and stripping the creation date.
"""

from __future__ import annotations

import io
import math
from fractions import Fraction
from typing import Optional, Tuple

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

from .permissible import Classification, classify  # noqa: E402
from .scatter import ScatteringDiagram  # noqa: E402

__all__ = ["render_svg"]

_STYLE = {
    Classification.DISCRETE_A: dict(color="#1f6fb2", linestyle="-", linewidth=1.6),
    Classification.DISCRETE_B: dict(color="#b25a1f", linestyle="-", linewidth=1.6),
    Classification.CONE_INTERIOR: dict(color="#3a7d44", linestyle=":", linewidth=1.1),
    Classification.CONE_BOUNDARY: dict(color="#3a7d44", linestyle="--", linewidth=1.4),
    Classification.NOT_PERMISSIBLE: dict(color="#888888", linestyle=":", linewidth=0.8),
}


def _cone_slopes(ell1: int, ell2: int, denominator: int = 10**6) -> Optional[Tuple[Fraction, Fraction]]:
    """Rational approximants p/denominator of the cone boundary slopes xi-, xi+.

    The boundaries are the roots of s^2/ell2 - s + 1/ell1; None when the cone
    is empty (ell1*ell2 < 4) or a single ray (= 4).
    """
    disc = ell1 * ell2 * (ell1 * ell2 - 4)
    if disc <= 0:
        return None
    # floor of sqrt(disc * denominator^2) via integer arithmetic
    root = math.isqrt(disc * denominator * denominator)
    lo = Fraction(ell2 * (ell1 * denominator - root), 2 * ell1 * denominator)
    hi = Fraction(ell2 * (ell1 * denominator + root), 2 * ell1 * denominator)
    return lo, hi


def render_svg(diagram: ScatteringDiagram, ell1: int, ell2: int) -> bytes:
    """Render one ray per nontrivial wall, labeled with direction and leading term."""
    fig, ax = plt.subplots(figsize=(6.0, 6.0))
    R = 1.0

    cone = _cone_slopes(ell1, ell2)
    if cone is not None:
        lo, hi = float(cone[0]), float(cone[1])
        angles = [math.atan2(lo, 1.0), math.atan2(hi, 1.0)]
        ts = [angles[0] + (angles[1] - angles[0]) * i / 64 for i in range(65)]
        xs = [0.0] + [R * math.cos(t) for t in ts] + [0.0]
        ys = [0.0] + [R * math.sin(t) for t in ts] + [0.0]
        ax.fill(xs, ys, color="#3a7d44", alpha=0.12, linewidth=0, zorder=0)

    for d, f in diagram.walls.items():
        angle = math.atan2(d.b, d.a)
        x, y = R * math.cos(angle), R * math.sin(angle)
        cls = classify(ell1, ell2, d.a, d.b)
        ax.plot([0.0, x], [0.0, y], gid=f"ray-{d.a}-{d.b}", **_STYLE[cls])
        lead = _leading_term(f)
        ax.annotate(
            f"({d.a},{d.b}): {lead}",
            xy=(x, y), xytext=(1.03 * x, 1.03 * y),
            fontsize=7, ha="left", va="bottom", rotation=math.degrees(angle),
            rotation_mode="anchor",
        )

    ax.set_xlim(0, 1.35)
    ax.set_ylim(0, 1.35)
    ax.set_aspect("equal")
    ax.set_title(f"walls for (l1,l2)=({ell1},{ell2}), N={diagram.order}")
    ax.set_xlabel("a")
    ax.set_ylabel("b")

    with matplotlib.rc_context({"svg.hashsalt": "tropvertex"}):
        buf = io.BytesIO()
        fig.savefig(buf, format="svg", metadata={"Date": None})
    plt.close(fig)
    return buf.getvalue()


def _leading_term(f) -> str:
    ks = sorted(k for k in f.coeffs if k > 0)
    if not ks:
        return "1"
    k = ks[0]
    c = f.coeffs[k]
    mono = "z" if k == 1 else f"z^{k}"
    head = mono if c == 1 else f"{c}{mono}"
    return f"1+{head}+..." if len(ks) > 1 or max(f.coeffs) > k else f"1+{head}"
