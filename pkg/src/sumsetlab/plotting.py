"""SVG figure of the density profiles and zones on [0, D_A].

The figure shows g_A, g_B, g = g_A + g_B and h, the reference lines y = x and
y = x + D_A - D_B + Δ, and the zones Z1, Z2, Z3 as colored bands under the
axis.  Rendering is deterministic: the SVG id salt is fixed and no date is
written, so identical inputs give byte-identical files.
"""

from __future__ import annotations

import io
from pathlib import Path

import matplotlib
from matplotlib.figure import Figure

from .density import ZonePartition, zone_partition
from .errors import PreconditionError
from .linear_sets import IntervalSet, format_set, measure, normalize_to_zero

__all__ = ["profile_figure", "render_svg", "write_svg"]

_RC = {
    "svg.hashsalt": "sumsetlab",
    "svg.fonttype": "path",
    "font.family": "DejaVu Sans",
    "font.size": 9,
    "axes.prop_cycle": matplotlib.cycler(color=["#1f77b4", "#ff7f0e", "#2ca02c", "#d62728"]),
}
_ZONE_COLORS = {"Z1": "#9ecae1", "Z2": "#c7e9c0", "Z3": "#fdae6b"}


def _xy(pl):
    return [float(x) for x in pl.xs], [float(y) for y in pl.ys]


def _zone_band(ax, S: IntervalSet, y: float, height: float, color: str, label: str):
    bars = [(float(lo), float(hi - lo)) for lo, hi in S.parts if hi > lo]
    points = [float(lo) for lo, hi in S.parts if hi == lo]
    if bars:
        ax.broken_barh(bars, (y, height), facecolors=color, edgecolors="none", label=label)
    if points:
        ax.vlines(points, y, y + height, colors=color, linewidth=2, label=None if bars else label)


def profile_figure(A: IntervalSet, B: IntervalSet, zones: ZonePartition | None = None) -> Figure:
    """Build the figure (not yet saved); the caller owns it."""
    if not A or not B or measure(A) <= 0 or measure(B) <= 0:
        raise PreconditionError("plot needs sets of positive measure")
    A0, B0 = normalize_to_zero(A), normalize_to_zero(B)
    if B0.diameter > A0.diameter:
        raise PreconditionError("plot needs diam(B) <= diam(A)", slack=A0.diameter - B0.diameter)
    zp = zones or zone_partition(A0, B0)
    prof = zp.profiles
    DA, off, delta = prof.DA, prof.offset, prof.delta

    with matplotlib.rc_context(_RC):
        fig = Figure(figsize=(6.4, 4.8))
        ax = fig.add_subplot()
        for pl, name in ((prof.gA, "g_A"), (prof.gB, "g_B"), (prof.g, "g"), (prof.h, "h")):
            ax.plot(*_xy(pl), label=name, linewidth=1.4)
        xs = [0.0, float(DA)]
        ax.plot(xs, xs, color="black", linewidth=0.8, linestyle="--", label="y = x")
        ax.plot(
            xs, [float(off + delta), float(DA + off + delta)], color="grey", linewidth=0.8,
            linestyle=":", label="y = x + D_A - D_B + Δ",
        )
        top = max(float(prof.h.ys[-1]), float(DA + off + delta), float(DA))
        band = 0.04 * top
        for name, S in (("Z1", zp.Z1), ("Z2", zp.Z2), ("Z3", zp.Z3)):
            _zone_band(ax, S, -2.2 * band, band, _ZONE_COLORS[name], name)
        ax.axhline(0, color="black", linewidth=0.5)
        ax.set_xlim(-0.02 * float(DA), 1.02 * float(DA))
        ax.set_ylim(-2.6 * band, 1.05 * top)
        ax.set_xlabel("x")
        ax.set_title(f"A = {format_set(A0, 4)}\nB = {format_set(B0, 4)}", fontsize=8)
        ax.legend(loc="upper left", fontsize=7, frameon=False)
        fig.tight_layout()
    return fig


def render_svg(A: IntervalSet, B: IntervalSet, zones: ZonePartition | None = None) -> bytes:
    fig = profile_figure(A, B, zones)
    buf = io.BytesIO()
    with matplotlib.rc_context(_RC):
        fig.savefig(buf, format="svg", metadata={"Date": None})
    return buf.getvalue()


def write_svg(A: IntervalSet, B: IntervalSet, path, zones: ZonePartition | None = None) -> Path:
    path = Path(path)
    path.write_bytes(render_svg(A, B, zones))
    return path
