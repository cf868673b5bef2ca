"""
SVG pictures of a polynomial or a plane set with the quantities behind its
identities: level curves at the breakpoints, critical points with their
degrees, isolating circles, asymptotic values and the polar curve.

Coordinates are float approximations used for display only.
"""

import io
import logging
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import numpy as np
from matplotlib.figure import Figure
from matplotlib.patches import Circle as CirclePatch
from sympy import Poly, lambdify

from satopo.circle.winding import separating_circle
from satopo.conf import get_setting
from satopo.core.polys import X, Y
from satopo.core.roots import AlgNumber, gap_samples
from satopo.critical.points import CriticalPoint, find_critical_points
from satopo.infinity.asymptotic import generic_basepoint, lambda_set
from satopo.infinity.gamma import BasePoint, gamma_polynomial
from satopo.stratified.critical import StratCriticalPoint, stratified_critical_points
from satopo.stratified.sets import REGION, PlaneSet

logger = logging.getLogger(__name__)

GRID: int = 400
MIN_HALF_WIDTH: float = 2.0

Marker = Tuple[float, float, str]
Disc = Tuple[float, float, float]


@dataclass
class Annotations:
    levels: List[float] = field(default_factory=list)
    samples: List[float] = field(default_factory=list)
    asymptotic: List[float] = field(default_factory=list)
    points: List[Marker] = field(default_factory=list)
    circles: List[Disc] = field(default_factory=list)
    gamma: Optional[Poly] = None
    region: bool = False


def _midpoint(p) -> Tuple[float, float]:
    xi, yi = p.solution.certain_box()
    return float(xi.midpoint), float(yi.midpoint)


def _half_width(annotations: Annotations) -> float:
    extent: List[float] = [MIN_HALF_WIDTH]
    extent.extend(1.5 * max(abs(x), abs(y)) + 1 for x, y, _ in annotations.points)
    extent.extend(1.5 * (max(abs(x), abs(y)) + r) for x, y, r in annotations.circles)
    return max(extent)


def _values(p: Poly, xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
    evaluate = lambdify((X, Y), p.as_expr(), "numpy")
    return np.broadcast_to(np.asarray(evaluate(xs, ys), dtype=float), xs.shape)


def polynomial_annotations(f: Poly, seed: Optional[int] = None) -> Annotations:
    points: List[CriticalPoint] = find_critical_points(f)
    a: BasePoint = generic_basepoint(f, seed)
    values: List[AlgNumber] = [p.value for p in points]
    annotations: Annotations = Annotations(
        levels=sorted({float(v) for v in values}),
        samples=[float(s) for s in gap_samples(values)],
        asymptotic=[float(v) for v in lambda_set(f, a).values],
        gamma=gamma_polynomial(f, a).h,
    )
    for p in points:
        x, y = _midpoint(p)
        annotations.points.append((x, y, f"deg {p.local_degree}"))
        circle = separating_circle(p.solution, [q.solution for q in points if q is not p])
        annotations.circles.append(
            (float(circle.center[0]), float(circle.center[1]), float(circle.radius))
        )

    return annotations


def set_annotations(x_set: PlaneSet, f: Poly) -> Annotations:
    points: List[StratCriticalPoint] = stratified_critical_points(x_set, f)
    annotations: Annotations = Annotations(region=x_set.kind == REGION)
    for p in points:
        x, y = _midpoint(p)
        annotations.points.append((x, y, f"ind {p.index}"))

    return annotations


def render_svg(curve: Poly, annotations: Annotations, title: str = "") -> str:
    """Level curves of ``curve`` with the annotations drawn over them."""
    size: int = get_setting("SVG_SIZE")
    half: float = _half_width(annotations)
    axis: np.ndarray = np.linspace(-half, half, GRID)
    xs, ys = np.meshgrid(axis, axis)
    zs: np.ndarray = _values(curve, xs, ys)

    fig: Figure = Figure(figsize=(size / 100, size / 100), dpi=100)
    ax = fig.add_subplot(1, 1, 1)
    ax.set_xlim(-half, half)
    ax.set_ylim(-half, half)
    ax.set_aspect("equal")
    ax.set_title(title)

    if annotations.region:
        ax.contourf(xs, ys, zs, levels=[min(zs.min(), 0) - 1, 0], colors=["#d3d3d3"])
    levels: List[float] = sorted(set(annotations.levels) or {0.0})
    ax.contour(xs, ys, zs, levels=levels, colors="#003cff", linewidths=1)
    if annotations.samples:
        ax.contour(
            xs, ys, zs, levels=sorted(set(annotations.samples)), colors="#b3b3b3", linewidths=0.5
        )
    if annotations.asymptotic:
        ax.contour(
            xs, ys, zs, levels=sorted(set(annotations.asymptotic)), colors="#ff8c00", linewidths=1
        )
    if annotations.gamma is not None:
        ax.contour(
            xs,
            ys,
            _values(annotations.gamma, xs, ys),
            levels=[0],
            colors="#50c878",
            linestyles="dotted",
        )
    for x, y, r in annotations.circles:
        ax.add_patch(CirclePatch((x, y), r, fill=False, edgecolor="#707070", linewidth=0.5))
    for x, y, label in annotations.points:
        ax.plot([x], [y], "o", color="#ff0000", markersize=4)
        ax.annotate(label, (x, y), textcoords="offset points", xytext=(4, 4), fontsize=7)

    buffer: io.StringIO = io.StringIO()
    fig.savefig(buffer, format="svg")
    logger.debug(f"Rendered {title or curve.as_expr()} with {len(annotations.points)} points")

    return buffer.getvalue()


def plot_polynomial(f: Poly, seed: Optional[int] = None) -> str:
    return render_svg(f, polynomial_annotations(f, seed), title=str(f.as_expr()))


def plot_set(x_set: PlaneSet, f: Poly) -> str:
    return render_svg(x_set.g, set_annotations(x_set, f), title=str(x_set))
