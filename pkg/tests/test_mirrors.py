"""Mirror model tests: focal geometry, exact surface reflection, apertures."""

import math
import random

import pytest

from mirrorlab.geometry import Ray, Vec2, intersect_lines
from mirrorlab.mirrors import (
    BackSideArrivalError,
    PlaneMirror,
    SphericalMirror,
    axial_of,
    focal_length,
    focus_point,
    from_frame,
    is_at_infinity,
    reflect_off,
    surface_point,
    transverse_of,
)

ORIGIN = Vec2(0.0, 0.0)
AXIS_X = Vec2(1.0, 0.0)


def concave(radius=2.0, aperture_deg=30.0) -> SphericalMirror:
    return SphericalMirror(radius, "concave", ORIGIN, AXIS_X, math.radians(aperture_deg))


def convex(radius=2.0, aperture_deg=30.0) -> SphericalMirror:
    return SphericalMirror(radius, "convex", ORIGIN, AXIS_X, math.radians(aperture_deg))


def plane(extent=5.0) -> PlaneMirror:
    return PlaneMirror(ORIGIN, AXIS_X, extent)


# --- construction and derived points ----------------------------------------


def test_validation():
    with pytest.raises(ValueError):
        SphericalMirror(-2.0, "concave", ORIGIN, AXIS_X)
    with pytest.raises(ValueError):
        SphericalMirror(2.0, "flat", ORIGIN, AXIS_X)
    with pytest.raises(ValueError):
        SphericalMirror(2.0, "concave", ORIGIN, AXIS_X, aperture_half_angle=math.pi / 2)
    with pytest.raises(ValueError):
        PlaneMirror(ORIGIN, Vec2(2, 0), 1.0)
    with pytest.raises(ValueError):
        PlaneMirror(ORIGIN, AXIS_X, 0.0)


def test_center_sits_on_the_correct_side():
    assert concave().center == Vec2(2.0, 0.0)  # in front of the face
    assert convex().center == Vec2(-2.0, 0.0)  # behind the face


def test_focal_length_signs():
    assert focal_length(concave(radius=2.0)) == 1.0
    assert focal_length(convex(radius=2.0)) == -1.0
    f = focal_length(plane())
    assert is_at_infinity(f)
    assert 1.0 / f == 0.0  # the reciprocal focal power vanishes


def test_focus_point_positions():
    assert focus_point(concave()) == Vec2(1.0, 0.0)
    assert focus_point(convex()) == Vec2(-1.0, 0.0)  # reachable only by extensions


def test_focus_is_midpoint_of_vertex_and_center_for_concave():
    m = concave(radius=3.4)
    f = focus_point(m)
    mid = Vec2((m.vertex.x + m.center.x) / 2, (m.vertex.y + m.center.y) / 2)
    assert (f - mid).norm() < 1e-15


def test_focus_point_lies_on_the_axis_any_frame():
    rng = random.Random(22)
    for _ in range(200):
        ang = rng.uniform(0, 2 * math.pi)
        axis = Vec2(math.cos(ang), math.sin(ang))
        vertex = Vec2(rng.uniform(-5, 5), rng.uniform(-5, 5))
        orient = rng.choice(["concave", "convex"])
        m = SphericalMirror(rng.uniform(0.5, 4.0), orient, vertex, axis)
        assert abs((focus_point(m) - m.vertex).cross(m.axis_direction)) < 1e-12


# --- reflect_off: plane ----------------------------------------------------


def test_plane_normal_incidence():
    r = reflect_off(plane(), Ray(Vec2(1, 0), Vec2(-1, 0)))
    assert r == Ray(Vec2(0, 0), Vec2(1, 0))


def test_plane_extent_miss():
    assert reflect_off(plane(extent=0.5), Ray(Vec2(1, 1), Vec2(-1, 0))) is None


def test_plane_back_side_rejected():
    with pytest.raises(BackSideArrivalError):
        reflect_off(plane(), Ray(Vec2(-1, 0), Vec2(1, 0)))


def test_plane_moving_away_misses():
    assert reflect_off(plane(), Ray(Vec2(1, 0), Vec2(1, 0))) is None


def test_plane_double_bounce_restores_direction():
    # a second identical mirror facing the first sends the ray back unchanged
    first = plane()
    second = PlaneMirror(Vec2(4.0, 0.0), Vec2(-1.0, 0.0), 5.0)
    rng = random.Random(4)
    for _ in range(300):
        ang = rng.uniform(math.pi * 0.55, math.pi * 1.45)  # leftward directions
        d = Vec2(math.cos(ang), math.sin(ang))
        start = Ray(Vec2(rng.uniform(1.0, 3.0), rng.uniform(-1.0, 1.0)), d)
        r1 = reflect_off(first, start)
        if r1 is None:
            continue
        r2 = reflect_off(second, r1)
        if r2 is None:
            continue
        assert abs(r2.direction.x - d.x) < 1e-12
        assert abs(r2.direction.y - d.y) < 1e-12


# --- reflect_off: spherical ---------------------------------------------------


def test_concave_paraxial_ray_crosses_near_focus():
    m = concave(radius=2.0)
    r = reflect_off(m, Ray(Vec2(3.0, 1e-6), Vec2(-1.0, 0.0)))
    assert r is not None
    crossing = intersect_lines(r.origin, r.direction, m.vertex, m.axis_direction)
    assert abs(axial_of(m, crossing) - 1.0) < 1e-9


def test_cap_aperture_miss_returns_none():
    m = concave(radius=2.0, aperture_deg=10.0)
    # aim far above the 10-degree cap
    assert reflect_off(m, Ray(Vec2(3.0, 0.9), Vec2(-1.0, 0.0))) is None


def test_spherical_back_side_rejected():
    m = concave(radius=2.0)
    # launch from behind the vertex, flying forward into the cap's back
    with pytest.raises(BackSideArrivalError):
        reflect_off(m, Ray(Vec2(-1.0, 0.0), Vec2(1.0, 0.0)))


def test_convex_virtual_focus_from_extension_crossing():
    # the signed f = -R/2 choice, checked against exact tracing: a paraxial
    # axis-parallel ray reflects off the convex cap diverging, and the
    # backward extension of the reflected ray crosses the axis at -R/2
    m = convex(radius=2.0)
    r = reflect_off(m, Ray(Vec2(3.0, 1e-6), Vec2(-1.0, 0.0)))
    assert r is not None
    crossing = intersect_lines(r.origin, r.direction, m.vertex, m.axis_direction)
    assert abs(axial_of(m, crossing) - focal_length(m)) < 1e-9
    assert axial_of(m, crossing) < 0.0  # behind the face: virtual focus


def test_incidence_equals_reflection_everywhere():
    rng = random.Random(88)
    for _ in range(2_000):
        orient = rng.choice(["concave", "convex"])
        m = SphericalMirror(
            rng.uniform(0.5, 5.0),
            orient,
            Vec2(rng.uniform(-2, 2), rng.uniform(-2, 2)),
            Vec2(math.cos(a := rng.uniform(0, 2 * math.pi)), math.sin(a)),
            math.radians(rng.uniform(5.0, 60.0)),
        )
        # sample an on-cap target and shoot at it from the front
        t = rng.uniform(-0.95, 0.95) * m.radius * math.sin(m.aperture_half_angle)
        target = surface_point(m, t)
        source = from_frame(m, rng.uniform(0.3 * m.radius, 4.0 * m.radius), rng.uniform(-0.3, 0.3) * m.radius)
        try:
            r = reflect_off(m, Ray.toward(source, target))
        except BackSideArrivalError:
            continue
        if r is None:
            continue
        n = (m.center - r.origin).normalized()
        incident = (r.origin - source).normalized()
        angle_in = math.acos(max(-1, min(1, (-incident).dot(n))))
        angle_out = math.acos(max(-1, min(1, r.direction.dot(n))))
        assert abs(angle_in - angle_out) < 1e-12


def test_headlight_property_focus_rays_leave_axis_parallel():
    # source at F, any cap point with alpha <= 1e-3 rad: reflected ray is
    # axis-parallel within 2e-6 rad
    m = concave(radius=2.0)
    f = focus_point(m)
    for i in range(1, 500):
        alpha = 1e-3 * i / 499
        target = from_frame(
            m,
            m.radius - m.radius * math.cos(alpha),
            m.radius * math.sin(alpha),
        )
        r = reflect_off(m, Ray.toward(f, target))
        assert r is not None
        deviation = math.atan2(abs(r.direction.cross(m.axis_direction)), r.direction.dot(m.axis_direction))
        assert abs(deviation) < 2e-6


def test_far_side_of_circle_is_transparent():
    # an object outside the sphere shooting through: the near intersection is
    # off-cap and must be ignored, the cap hit happens on the far side
    m = concave(radius=2.0, aperture_deg=25.0)
    ray = Ray(Vec2(5.0, 0.2), Vec2(-1.0, 0.0))
    r = reflect_off(m, ray)
    assert r is not None
    assert axial_of(m, r.origin) < 0.2  # landed near the vertex, not at x ~ 4


def test_surface_point_heights():
    m = concave(radius=2.0)
    p = surface_point(m, 1.0)
    assert abs(transverse_of(m, p) - 1.0) < 1e-15
    assert abs((p - m.center).norm() - m.radius) < 1e-12
    q = surface_point(convex(radius=2.0), 1.0)
    assert q.x < 0.0  # convex cap curves backwards behind the vertex plane
