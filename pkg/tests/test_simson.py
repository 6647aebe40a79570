import math

import numpy as np
import pytest

from geomgen import random_convex_polygon, random_quadrilateral, \
    random_triangle, regular_polygon, xy
from simsonpoly.kernel import DEFAULT_TOLERANCE, Circle, Line, Point, \
    bbox_diagonal, line_through, point_on_circle
from simsonpoly.simson import (
    CompleteQuadrilateral,
    DegenerateConfiguration,
    DegenerateSide,
    DuplicateFeet,
    PointOnLine,
    Polygon,
    characterization_candidates,
    characterization_circles,
    construct_simson_polygon,
    element_distance,
    find_simson_point,
    is_convex,
    is_simson_point,
    miquel_point,
    pedal_points,
)

RIGHT_TRIANGLE = Polygon((Point(0, 0), Point(4, 0), Point(0, 3)))


# --------------------------------------------------------------- polygon type

def test_polygon_needs_three_vertices():
    with pytest.raises(ValueError):
        Polygon((Point(0, 0), Point(1, 0)))


def test_polygon_rejects_repeated_consecutive_vertex():
    with pytest.raises(DegenerateSide):
        Polygon((Point(0, 0), Point(0, 0), Point(1, 1)))


def test_polygon_indices_wrap():
    assert RIGHT_TRIANGLE.vertex(3) == RIGHT_TRIANGLE.vertex(0)
    assert RIGHT_TRIANGLE.vertex(-1) == RIGHT_TRIANGLE.vertex(2)


def test_nondegenerate_flag():
    assert RIGHT_TRIANGLE.is_nondegenerate()
    flat = Polygon((Point(0, 0), Point(1, 0), Point(2, 0), Point(0, 1)))
    assert not flat.is_nondegenerate()


# --------------------------------------------------------------- pedal points

def test_pedals_at_right_angle_vertex_repeat():
    # right angle at V1 with legs along the axes: dropping from V1 hits
    # V1 itself on both adjacent sides
    feet = pedal_points(Point(0, 0), RIGHT_TRIANGLE)
    assert xy(feet[0]) == pytest.approx((0.0, 0.0))
    assert xy(feet[2]) == pytest.approx((0.0, 0.0))


def test_pedals_of_circumcenter_are_midpoints():
    tri = Polygon((Point(0, 0), Point(1, 0), Point(0.5, math.sqrt(3) / 2)))
    center = Point(0.5, math.sqrt(3) / 6)  # equilateral: centroid = circumcenter
    feet = pedal_points(center, tri)
    mids = [tri.vertex(i).midpoint(tri.vertex(i + 1)) for i in range(3)]
    for f, m in zip(feet, mids):
        assert f.distance(m) < 1e-12


def test_pedals_collinear_for_circumcircle_point():
    # (4,3) is on the circumcircle (hypotenuse is a diameter)
    feet = pedal_points(Point(4, 3), RIGHT_TRIANGLE)
    assert xy(feet[0]) == pytest.approx((4.0, 0.0))
    assert xy(feet[1]) == pytest.approx((64 / 25, 27 / 25))
    assert xy(feet[2]) == pytest.approx((0.0, 3.0))


# ------------------------------------------------------------- is_simson_point

def test_simson_certificate_on_circumcircle():
    cert = is_simson_point(Point(4, 3), RIGHT_TRIANGLE)
    assert cert is not None
    assert cert.residual <= DEFAULT_TOLERANCE.bound(10.0)
    assert len(cert.projections) == 3
    # the pedal line here is the side line through (4,0) and (0,3)
    assert cert.simson_line.distance(Point(4, 0)) < 1e-9
    assert cert.simson_line.distance(Point(0, 3)) < 1e-9


def test_centroid_is_not_simson_point():
    assert is_simson_point(Point(4 / 3, 1.0), RIGHT_TRIANGLE) is None


def test_square_admits_no_simson_point_anywhere():
    square = Polygon((Point(0, 0), Point(1, 0), Point(1, 1), Point(0, 1)))
    for x in np.linspace(-1.0, 2.0, 13):
        for y in np.linspace(-1.0, 2.0, 13):
            assert is_simson_point(Point(x, y), square) is None


# ----------------------------------------------------- complete quadrilateral

FOUR_LINES = (Line(0, 1, 0),                         # y = 0
              Line(1, 0, 0),                         # x = 0
              line_through(Point(1, 0), Point(0, 1)),   # y = 1 - x
              line_through(Point(1.5, 0), Point(0, 3)))  # y = 3 - 2x

MIQUEL_OF_FOUR_LINES = Point(12 / 17, -3 / 17)


def test_quadrilateral_labels():
    quad = CompleteQuadrilateral(FOUR_LINES)
    assert xy(quad.a) == pytest.approx((0.0, 0.0))
    assert xy(quad.b) == pytest.approx((1.0, 0.0))
    assert xy(quad.c) == pytest.approx((1.5, 0.0))
    assert xy(quad.d) == pytest.approx((2.0, -1.0))
    assert xy(quad.e) == pytest.approx((0.0, 1.0))
    assert xy(quad.f) == pytest.approx((0.0, 3.0))


def test_quadrilateral_rejects_parallel_lines():
    with pytest.raises(DegenerateConfiguration):
        CompleteQuadrilateral((Line(0, 1, 0), Line(0, 1, -1),
                               FOUR_LINES[2], FOUR_LINES[3]))


def test_quadrilateral_rejects_concurrent_lines():
    # y = x passes through the meet of the first two lines
    with pytest.raises(DegenerateConfiguration):
        CompleteQuadrilateral((Line(0, 1, 0), Line(1, 0, 0),
                               line_through(Point(0, 0), Point(1, 1)),
                               FOUR_LINES[3]))


def test_miquel_point_of_four_lines():
    quad = CompleteQuadrilateral(FOUR_LINES)
    m = miquel_point(quad)
    assert xy(m) == pytest.approx(xy(MIQUEL_OF_FOUR_LINES), abs=1e-12)
    for circle in quad.triangle_circles():
        assert point_on_circle(m, circle)


def test_trapezoid_simson_point_is_side_meet():
    # right-angled trapezoid: S = AB cap CD = (0, -1)
    trap = Polygon((Point(0, 0), Point(0, 2), Point(3, 2), Point(1, 0)))
    cert = find_simson_point(trap)
    assert cert is not None
    assert xy(cert.simson_point) == pytest.approx((0.0, -1.0), abs=1e-9)


# ---------------------------------------------------- characterization circles

def test_characterization_of_triangle_is_circumcircle():
    elems = characterization_circles(RIGHT_TRIANGLE)
    assert all(isinstance(e, Circle) for e in elems)
    for e in elems:
        assert e.center.distance(Point(2.0, 1.5)) < 1e-9
        assert e.radius == pytest.approx(2.5)


def test_characterization_of_quadrilateral_meets_at_miquel():
    rng = np.random.default_rng(5)
    poly = random_quadrilateral(rng)
    elems = characterization_circles(poly)
    m = miquel_point(CompleteQuadrilateral.from_polygon(poly))
    for e in elems:
        assert element_distance(m, e) <= 1e-8 * poly.diameter()


def test_characterization_trapezoid_contains_line_element():
    trap = Polygon((Point(0, 0), Point(0, 2), Point(3, 2), Point(1, 0)))
    elems = characterization_circles(trap)
    assert any(isinstance(e, Line) for e in elems)
    assert any(isinstance(e, Circle) for e in elems)


def test_characterization_rejects_degenerate_polygon():
    flat = Polygon((Point(0, 0), Point(1, 0), Point(2, 0), Point(0, 1)))
    with pytest.raises(DegenerateConfiguration):
        characterization_circles(flat)


# ------------------------------------------------------------ find_simson_point

def test_regular_pentagon_has_no_simson_point():
    assert find_simson_point(regular_polygon(5)) is None


def test_quadrilateral_simson_point_is_miquel_point():
    rng = np.random.default_rng(11)
    for _ in range(20):
        poly = random_quadrilateral(rng)
        cert = find_simson_point(poly)
        assert cert is not None
        m = miquel_point(CompleteQuadrilateral.from_polygon(poly))
        assert cert.simson_point.distance(m) <= 1e-7 * poly.diameter()


def test_find_simson_point_rejects_collinear_vertices():
    flat = Polygon((Point(0, 0), Point(1, 0), Point(2, 0), Point(0, 1)))
    with pytest.raises(DegenerateConfiguration):
        find_simson_point(flat)


def test_parallelogram_yields_no_simson_point():
    para = Polygon((Point(0, 0), Point(2, 0), Point(3, 1), Point(1, 1)))
    assert find_simson_point(para) is None


def test_triangle_candidates_lie_on_circumcircle():
    # for a triangle every characterization circle is the circumcircle;
    # the search degenerates and a representative point is returned
    cert = find_simson_point(RIGHT_TRIANGLE)
    assert cert is not None
    assert point_on_circle(cert.simson_point,
                           Circle(Point(2.0, 1.5), 2.5))


# ------------------------------------------------------ construct_simson_polygon

def test_construct_triangle_from_three_feet():
    poly = construct_simson_polygon(Point(0, 1), Line(0, 1, 0),
                                    [Point(-1, 0), Point(0, 0), Point(1, 0)])
    assert [xy(v) for v in poly.vertices] == [
        pytest.approx((-1.0, 0.0)),
        pytest.approx((1.0, 0.0)),
        pytest.approx((0.0, -1.0)),
    ]
    cert = is_simson_point(Point(0, 1), poly)
    assert cert is not None


def test_construct_projections_are_feet_rotated():
    # pedal of side i is the foot carried by that side, which is feet
    # shifted by one position relative to the vertex labeling
    feet = [Point(x, 0.0) for x in (0.0, 0.7, 1.6, 2.9)]
    poly = construct_simson_polygon(Point(0.3, 2), Line(0, 1, 0), feet)
    cert = is_simson_point(Point(0.3, 2), poly)
    assert cert is not None
    expected = feet[1:] + feet[:1]
    for got, want in zip(cert.projections, expected):
        assert got.distance(want) < 1e-9


def test_construct_rejects_point_on_line():
    with pytest.raises(PointOnLine):
        construct_simson_polygon(Point(0, 0), Line(0, 1, 0),
                                 [Point(-1, 0), Point(0, 0), Point(1, 0)])


def test_construct_rejects_duplicate_feet():
    with pytest.raises(DuplicateFeet):
        construct_simson_polygon(Point(0, 1), Line(0, 1, 0),
                                 [Point(0, 0), Point(0, 0), Point(1, 0)])


def test_construct_rejects_foot_off_line():
    with pytest.raises(ValueError):
        construct_simson_polygon(Point(0, 1), Line(0, 1, 0),
                                 [Point(0, 0.5), Point(1, 0), Point(2, 0)])


def test_construct_round_trip_recovers_simson_data():
    rng = np.random.default_rng(17)
    for _ in range(20):
        n = int(rng.integers(4, 9))
        xs = np.cumsum(rng.uniform(0.8, 2.0, n))
        feet = [Point(float(x), 0.0) for x in xs]
        s = Point(float(rng.uniform(xs[0], xs[-1])),
                  float(rng.choice([-1, 1]) * rng.uniform(1.5, 4.0)))
        poly = construct_simson_polygon(s, Line(0, 1, 0), feet)
        cert = find_simson_point(poly)
        assert cert is not None
        scale = bbox_diagonal(list(poly.vertices) + [s])
        assert cert.simson_point.distance(s) <= 1e-7 * scale


# -------------------------------------------------------------------- convexity

def test_regular_pentagon_is_convex():
    assert is_convex(regular_polygon(5))


def test_reflex_pentagon_is_not_convex():
    dented = Polygon((Point(0, 0), Point(4, 0), Point(4, 3),
                      Point(2, 1), Point(0, 3)))
    assert not is_convex(dented)


def test_equidistant_octagon_is_not_convex():
    # Simson polygons with n >= 5 cannot be convex
    from simsonpoly.equidistant import EquidistantConfig, make_equidistant
    poly = make_equidistant(EquidistantConfig(s=1, x0=0, delta=1, n=8))
    assert not is_convex(poly.polygon())


# ------------------------------------------------------------ property harnesses

def test_simson_wallace_on_random_triangles():
    rng = np.random.default_rng(7)
    for _ in range(200):
        tri, center, radius = random_triangle(rng)
        t = rng.uniform(0, 2 * math.pi)
        on = Point(center.x + radius * math.cos(t),
                   center.y + radius * math.sin(t))
        assert is_simson_point(on, tri) is not None
        off_by = radius * 10 ** rng.uniform(-6, -1) * rng.choice([-1, 1])
        off = Point(center.x + (radius + off_by) * math.cos(t),
                    center.y + (radius + off_by) * math.sin(t))
        assert is_simson_point(off, tri) is None


def test_convex_polygons_never_admit_simson_point():
    rng = np.random.default_rng(23)
    for _ in range(50):
        poly = random_convex_polygon(rng, int(rng.integers(5, 11)))
        assert find_simson_point(poly) is None


def test_second_circle_intersection_grows_along_ray():
    # cyclic A,B,S,C on a circle; X inside segment AB; the circle (AXS)
    # meets ray AC again strictly beyond C
    rng = np.random.default_rng(42)
    checked = 0
    while checked < 200:
        ts = np.sort(rng.uniform(0, 2 * math.pi, 4))
        gaps = np.diff(np.r_[ts, ts[0] + 2 * math.pi])
        if gaps.min() < 0.15:
            continue
        a, b, s, c = (np.array([math.cos(t), math.sin(t)]) for t in ts)
        x = a + rng.uniform(0.05, 0.95) * (b - a)
        m = 2.0 * np.array([x - a, s - a])
        rhs = np.array([x @ x - a @ a, s @ s - a @ a])
        ctr = np.linalg.solve(m, rhs)
        d = c - a
        t_second = -2.0 * (d @ (a - ctr)) / (d @ d)
        assert t_second > 1.0
        checked += 1
