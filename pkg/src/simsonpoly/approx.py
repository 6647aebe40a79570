"""Optimal piecewise linear interpolation of a parabola in the L1 sense.

For f(x) = (x^2 - delta^2)/(4 s) and an interpolant l that joins the
points (x_i, f(x_i)) of a knot grid a = x_0 < ... < x_n = b, the error on
one segment is f - l = (x - x_i)(x - x_{i+1})/(4 s), of one sign, so

    int_{x_i}^{x_{i+1}} |f - l| dx = (x_{i+1} - x_i)^3 / (24 |s|).

The total L1 error is therefore Sum h_i^3 / (24 |s|), minimized over
interior knots exactly when the h_i are equal; the position of the
interval never enters.  The quadrature routines below integrate the
error polynomial per segment with Gauss-Legendre nodes and are kept free
of the closed forms so the two routes stay independent checks of each
other.
"""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .kernel import GeometryError


class InvalidProblem(GeometryError):
    """Approximation problem parameters outside their domain."""


class BadInterval(GeometryError):
    """Segment endpoints out of order."""


class UnorderedKnots(GeometryError):
    """Knot sequence not strictly increasing."""


class OutOfDomain(GeometryError):
    """Evaluation point outside [a, b]."""


@dataclass(frozen=True)
class ApproxProblem:
    """Approximate f(x) = (x^2 - delta^2)/(4 s) on [a, b] with n segments."""

    s: float
    delta: float
    a: float
    b: float
    n: int

    def __post_init__(self):
        if not (math.isfinite(self.s) and self.s != 0.0):
            raise InvalidProblem(f"s must be nonzero, got {self.s}")
        if not (math.isfinite(self.delta) and self.delta >= 0.0):
            raise InvalidProblem(f"delta must be >= 0, got {self.delta}")
        if not (math.isfinite(self.a) and math.isfinite(self.b)
                and self.a < self.b):
            raise InvalidProblem(f"need a < b, got [{self.a}, {self.b}]")
        if not (isinstance(self.n, int) and self.n >= 1):
            raise InvalidProblem(f"n must be an integer >= 1, got {self.n}")

    def f(self, x: float) -> float:
        return (x * x - self.delta * self.delta) / (4.0 * self.s)


@dataclass(frozen=True)
class ApproxResult:
    """Optimal knot grid with its exact L1 and L2 interpolation errors."""

    knots: tuple[float, ...]
    knot_points: tuple[tuple[float, float], ...]
    l1_error: float
    l2_error: float


def segment_l1_error(p: ApproxProblem, xi: float, xj: float) -> float:
    """Exact L1 interpolation error on one segment: (xj - xi)^3 / (24|s|).

    Position-free: only the width enters.
    """
    if not xi < xj:
        raise BadInterval(f"need xi < xj, got [{xi}, {xj}]")
    h = xj - xi
    return h ** 3 / (24.0 * abs(p.s))


def segment_l2_error(p: ApproxProblem, xi: float, xj: float) -> float:
    """Exact squared L2 interpolation error: (xj - xi)^5 / (480 s^2)."""
    if not xi < xj:
        raise BadInterval(f"need xi < xj, got [{xi}, {xj}]")
    h = xj - xi
    return h ** 5 / (480.0 * p.s * p.s)


def _check_knots(p: ApproxProblem, interior: Sequence[float]) -> list[float]:
    knots = [p.a, *interior, p.b]
    for u, v in zip(knots, knots[1:]):
        if not u < v:
            raise UnorderedKnots(f"knots not strictly increasing at {u}, {v}")
    return knots

def total_error_objective(p: ApproxProblem, interior: Sequence[float]) -> float:
    """Sum of cubed segment widths for the full knot vector [a, *interior, b].

    This is the L1 error up to the constant factor 1/(24|s|), which is
    what the optimality argument actually minimizes.
    """
    if len(interior) != p.n - 1:
        raise InvalidProblem(
            f"expected {p.n - 1} interior knots, got {len(interior)}")
    knots = _check_knots(p, interior)
    return sum((v - u) ** 3 for u, v in zip(knots, knots[1:]))


def optimal_knots(p: ApproxProblem) -> ApproxResult:
    """Equally spaced knots, the unique minimizer of the L1 error.

    By power mean (or Lagrange) the sum of h_i^3 under fixed total width
    is smallest when all h_i coincide, so the optimum is the arithmetic
    progression from a to b.
    """
    h = (p.b - p.a) / p.n
    knots = tuple(p.a + i * h for i in range(p.n + 1))
    pts = tuple((x, p.f(x)) for x in knots)
    l1 = p.n * h ** 3 / (24.0 * abs(p.s))
    l2 = p.n * h ** 5 / (480.0 * p.s * p.s)
    return ApproxResult(knots=knots, knot_points=pts, l1_error=l1, l2_error=l2)


def interpolant_at(p: ApproxProblem, knots: Sequence[float], x: float) -> float:
    """Piecewise linear interpolant of f at the given knots, evaluated at x."""
    ks = list(knots)
    for u, v in zip(ks, ks[1:]):
        if not u < v:
            raise UnorderedKnots(f"knots not strictly increasing at {u}, {v}")
    slack = 1e-12 * (ks[-1] - ks[0])
    if x < ks[0] - slack or x > ks[-1] + slack:
        raise OutOfDomain(f"{x} outside [{ks[0]}, {ks[-1]}]")
    x = min(max(x, ks[0]), ks[-1])
    i = min(max(bisect.bisect_right(ks, x) - 1, 0), len(ks) - 2)
    xi, xj = ks[i], ks[i + 1]
    t = (x - xi) / (xj - xi)
    return (1.0 - t) * p.f(xi) + t * p.f(xj)


_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(10)


def _segment_quadrature(p: ApproxProblem, xi: float, xj: float,
                        squared: bool) -> float:
    """Gauss-Legendre integral of (f - l) or (f - l)^2 over one segment.

    The integrand is evaluated pointwise from f and the chord; degree 10
    rules are exact for it, so the only error is roundoff.  |f - l| keeps
    one sign per segment, hence the absolute value outside the signed
    integral in the L1 case.
    """
    mid = 0.5 * (xi + xj)
    half = 0.5 * (xj - xi)
    x = mid + half * _GL_NODES
    fi, fj = p.f(xi), p.f(xj)
    chord = fi + (x - xi) * (fj - fi) / (xj - xi)
    fx = (x * x - p.delta * p.delta) / (4.0 * p.s)
    err = fx - chord
    if squared:
        return half * float(np.dot(_GL_WEIGHTS, err * err))
    return abs(half * float(np.dot(_GL_WEIGHTS, err)))


def quadrature_l1(p: ApproxProblem, knots: Sequence[float]) -> float:
    """L1 interpolation error by per-segment quadrature.

    Independent oracle for the closed form: no h^3 shortcut is used.
    """
    ks = _validated(knots)
    return sum(_segment_quadrature(p, u, v, squared=False)
               for u, v in zip(ks, ks[1:]))


def quadrature_l2(p: ApproxProblem, knots: Sequence[float]) -> float:
    """Squared L2 interpolation error by per-segment quadrature."""
    ks = _validated(knots)
    return sum(_segment_quadrature(p, u, v, squared=True)
               for u, v in zip(ks, ks[1:]))


def _validated(knots: Sequence[float]) -> list[float]:
    ks = list(knots)
    if len(ks) < 2:
        raise UnorderedKnots("need at least two knots")
    for u, v in zip(ks, ks[1:]):
        if not u < v:
            raise UnorderedKnots(f"knots not strictly increasing at {u}, {v}")
    return ks
