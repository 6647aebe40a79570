"""Convergence of equidistant Simson polygons to the parabola y = x^2/(4s).

As the foot spacing shrinks, the polygon squeezes between its two
bounding parabolas and converges to C' : y = x^2/(4 s), the curve whose
focus is the Simson point.  Quantitatively, the vertex chain with knot
spacing D (foot spacing D/2) interpolates C' shifted down by D^2/(16 s),
touching C' at the side midpoints, so its Hausdorff distance from C'
over a window containing the apex is D^2/(16 |s|), of quadratic order.

The chain here is the open vertex run V_1..V_{n-1}; the closing vertex
is a long-range chord and takes no part in the limit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .equidistant import EquidistantConfig, Parabola, make_equidistant
from .kernel import GeometryError, Point


@dataclass(frozen=True)
class ConvergenceRow:
    """One refinement level of the limit study."""

    delta: float
    hausdorff: float
    bound: float

    @property
    def ratio(self) -> float:
        return self.hausdorff / self.bound


def chain_for_window(s: float, half_width: float, delta: float) -> list[Point]:
    """Equidistant vertex chain spanning [-w, w] with knot spacing delta.

    Foot spacing is delta/2 so consecutive vertices are delta apart; the
    first foot is placed so the vertex abscissae run -w, -w+delta, .., w,
    which puts a vertex at the apex whenever delta divides w.
    """
    if delta <= 0.0 or half_width <= 0.0:
        raise GeometryError("window and spacing must be positive")
    segments = 2.0 * half_width / delta
    n_seg = round(segments)
    if abs(segments - n_seg) > 1e-9 or n_seg < 1:
        raise GeometryError(
            f"spacing {delta} does not tile the window [-{half_width}, {half_width}]")
    feet_spacing = 0.5 * delta
    x0 = 0.5 * (-half_width - feet_spacing)
    cfg = EquidistantConfig(s=s, x0=x0, delta=feet_spacing, n=n_seg + 2)
    return list(make_equidistant(cfg).chain)


def point_to_parabola_distance(p: Point, par: Parabola) -> float:
    """Exact Euclidean distance from a point to the parabola.

    The stationarity condition is the depressed cubic
    x^3 + (8 s^2 - c - 4 s py) x - 8 s^2 px = 0; the minimum is over its
    real roots.
    """
    s, c = par.s, par.c
    beta = 8.0 * s * s - c - 4.0 * s * p.y
    gamma = -8.0 * s * s * p.x
    roots = np.roots([1.0, 0.0, beta, gamma])
    best = math.inf
    for r in roots:
        if abs(r.imag) > 1e-8 * (1.0 + abs(r.real)):
            continue
        x = float(r.real)
        best = min(best, p.distance(par.point_at(x)))
    return best


def _chain_samples(chain: list[Point], per_segment: int) -> list[Point]:
    out = [chain[0]]
    for a, b in zip(chain, chain[1:]):
        for k in range(1, per_segment + 1):
            t = k / per_segment
            out.append(Point(a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)))
    return out


def _points_to_polyline(px: np.ndarray, py: np.ndarray,
                        chain: list[Point]) -> np.ndarray:
    v = np.array([[p.x, p.y] for p in chain])
    p0 = v[:-1]
    d = v[1:] - v[:-1]
    len2 = (d * d).sum(axis=1)
    qx = px[:, None] - p0[None, :, 0]
    qy = py[:, None] - p0[None, :, 1]
    t = (qx * d[None, :, 0] + qy * d[None, :, 1]) / len2[None, :]
    t = np.clip(t, 0.0, 1.0)
    rx = qx - t * d[None, :, 0]
    ry = qy - t * d[None, :, 1]
    return np.sqrt(rx * rx + ry * ry).min(axis=1)


def hausdorff_chain_parabola(chain: list[Point], par: Parabola,
                             half_width: float, *, per_segment: int = 8,
                             parabola_samples: int = 2001) -> float:
    """Hausdorff distance between the chain and the parabola arc over
    [-w, w], by dense sampling with exact point-to-curve distances in the
    chain-to-parabola direction."""
    d1 = max(point_to_parabola_distance(q, par)
             for q in _chain_samples(chain, per_segment))
    xs = np.linspace(-half_width, half_width, parabola_samples)
    ys = (xs * xs - par.c) / (4.0 * par.s)
    d2 = float(_points_to_polyline(xs, ys, chain).max())
    return max(d1, d2)


def convergence_table(s: float, half_width: float,
                      m_max: int) -> list[ConvergenceRow]:
    """Hausdorff distances for delta = 1, 1/2, ..., 2^-m_max."""
    if m_max < 0:
        raise GeometryError("m_max must be >= 0")
    target = Parabola(s, 0.0)
    rows = []
    for m in range(m_max + 1):
        delta = 2.0 ** (-m)
        chain = chain_for_window(s, half_width, delta)
        dist = hausdorff_chain_parabola(chain, target, half_width)
        rows.append(ConvergenceRow(delta=delta, hausdorff=dist,
                                   bound=delta * delta / (16.0 * abs(s))))
    return rows


def observed_orders(rows: list[ConvergenceRow]) -> list[float]:
    """log2 ratios of successive Hausdorff distances (one per halving)."""
    return [math.log2(a.hausdorff / b.hausdorff)
            for a, b in zip(rows, rows[1:])]
