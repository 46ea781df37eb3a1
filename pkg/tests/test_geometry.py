"""Geometry kernel tests: reflection and intersection primitives."""

import math
import random

import pytest
from hypothesis import given, strategies as st

from mirrorlab.geometry import (
    CoincidentLinesError,
    Hit,
    Ray,
    Vec2,
    intersect_lines,
    intersect_ray_circle,
    reflect_direction,
)

SQ2 = math.sqrt(2.0) / 2.0


def unit(angle: float) -> Vec2:
    return Vec2(math.cos(angle), math.sin(angle))


def angle_between(a: Vec2, b: Vec2) -> float:
    return math.acos(max(-1.0, min(1.0, a.dot(b))))


units = st.floats(0.0, 2.0 * math.pi).map(unit)


# --- Vec2 / Ray / Hit construction --------------------------------------


def test_vec2_rejects_non_finite():
    with pytest.raises(ValueError):
        Vec2(math.nan, 0.0)
    with pytest.raises(ValueError):
        Vec2(0.0, math.inf)


def test_ray_requires_unit_direction():
    with pytest.raises(ValueError):
        Ray(Vec2(0, 0), Vec2(1, 1))
    assert Ray.toward(Vec2(0, 0), Vec2(3, 4)).direction == Vec2(0.6, 0.8)


def test_hit_validation():
    with pytest.raises(ValueError):
        Hit(Vec2(0, 0), Vec2(2, 0), 1.0)
    with pytest.raises(ValueError):
        Hit(Vec2(0, 0), Vec2(1, 0), -1.0)


# --- reflect_direction ----------------------------------------------------


def test_normal_incidence_retroreflects():
    assert reflect_direction(Vec2(1, 0), Vec2(-1, 0)) == Vec2(-1, 0)


def test_45_degree_flip():
    out = reflect_direction(Vec2(SQ2, -SQ2), Vec2(0, 1))
    assert math.isclose(out.x, SQ2, abs_tol=1e-15)
    assert math.isclose(out.y, SQ2, abs_tol=1e-15)


def test_rejects_from_behind_and_non_unit():
    with pytest.raises(ValueError):
        reflect_direction(Vec2(1, 0), Vec2(1, 0))  # arriving from behind
    with pytest.raises(ValueError):
        reflect_direction(Vec2(2, 0), Vec2(-1, 0))
    with pytest.raises(ValueError):
        reflect_direction(Vec2(1, 0), Vec2(-2, 0))


def test_equal_angles_random_sweep():
    # angle oracle: angle(result, normal) == angle(-incident, normal)
    rng = random.Random(1905)
    for _ in range(10_000):
        n = unit(rng.uniform(0.0, 2.0 * math.pi))
        # incident must arrive against the normal
        incident = None
        while incident is None or incident.dot(n) >= -1e-6:
            incident = unit(rng.uniform(0.0, 2.0 * math.pi))
        out = reflect_direction(incident, n)
        assert abs(angle_between(out, n) - angle_between(-incident, n)) < 1e-12


@given(units, units)
def test_reflection_involution_and_length(d, n):
    if d.dot(n) >= -1e-9:
        n = -n
        if d.dot(n) >= -1e-9:
            return  # grazing: precondition excluded
    out = reflect_direction(d, n)
    assert abs(out.norm() - 1.0) < 1e-12
    # the reflected ray leaves the surface, so reflect about the flipped
    # normal; the formula is even in the normal's sign, this IS the involution
    restored = reflect_direction(out, -n)
    assert abs(restored.x - d.x) < 1e-12 and abs(restored.y - d.y) < 1e-12


# --- intersect_ray_circle ---------------------------------------------------


def test_axis_aligned_hit():
    hit = intersect_ray_circle(Ray(Vec2(0, 0), Vec2(1, 0)), Vec2(2, 0), 1.0)
    assert hit is not None
    assert math.isclose(hit.t, 1.0, rel_tol=1e-12)
    assert math.isclose(hit.point.x, 1.0, rel_tol=1e-12)
    assert hit.point.y == 0.0
    assert hit.normal.dot(Vec2(1, 0)) <= 0.0


def test_disjoint_miss():
    assert intersect_ray_circle(Ray(Vec2(0, 2), Vec2(1, 0)), Vec2(2, 0), 1.0) is None


def test_tangency_single_touch():
    hit = intersect_ray_circle(Ray(Vec2(0, 1), Vec2(1, 0)), Vec2(2, 0), 1.0)
    assert hit is not None
    assert math.isclose(hit.point.x, 2.0, abs_tol=1e-7)
    assert math.isclose(hit.point.y, 1.0, abs_tol=1e-12)


def test_circle_behind_ray_misses():
    assert intersect_ray_circle(Ray(Vec2(5, 0), Vec2(1, 0)), Vec2(2, 0), 1.0) is None


def test_rejects_bad_radius():
    with pytest.raises(ValueError):
        intersect_ray_circle(Ray(Vec2(0, 0), Vec2(1, 0)), Vec2(2, 0), 0.0)


def test_substitution_oracle_random_sweep():
    # every returned point satisfies |point - center| = r within 1e-9 r
    rng = random.Random(7312)
    hits = 0
    for _ in range(10_000):
        origin = Vec2(rng.uniform(-10, 10), rng.uniform(-10, 10))
        d = unit(rng.uniform(0.0, 2.0 * math.pi))
        center = Vec2(rng.uniform(-10, 10), rng.uniform(-10, 10))
        r = rng.uniform(0.05, 8.0)
        hit = intersect_ray_circle(Ray(origin, d), center, r)
        if hit is None:
            continue
        hits += 1
        assert abs((hit.point - center).norm() - r) < 1e-9 * r
        assert hit.normal.dot(d) <= 0.0
        assert (hit.point - origin - hit.t * d).norm() < 1e-9 * max(1.0, hit.t)
    assert hits > 1000  # the sweep actually exercised the hit path


def test_reflected_ray_never_rehits_origin_point():
    rng = random.Random(99)
    for _ in range(2_000):
        center = Vec2(rng.uniform(-5, 5), rng.uniform(-5, 5))
        r = rng.uniform(0.1, 4.0)
        origin = Vec2(rng.uniform(-10, 10), rng.uniform(-10, 10))
        d = unit(rng.uniform(0.0, 2.0 * math.pi))
        hit = intersect_ray_circle(Ray(origin, d), center, r)
        if hit is None or d.dot(hit.normal) >= 0.0:
            continue
        bounced = Ray(hit.point, reflect_direction(d, hit.normal))
        second = intersect_ray_circle(bounced, center, r)
        if second is not None:
            assert (second.point - hit.point).norm() > 1e-9 * r


# --- intersect_lines ---------------------------------------------------------


def test_axis_crossing():
    x = intersect_lines(Vec2(0, 0), Vec2(1, 0), Vec2(1, -1), Vec2(0, 1))
    assert x == Vec2(1, 0)


def test_parallel_disjoint_returns_none():
    assert intersect_lines(Vec2(0, 0), Vec2(1, 0), Vec2(0, 1), Vec2(1, 0)) is None


def test_coincident_is_reported_distinctly():
    with pytest.raises(CoincidentLinesError):
        intersect_lines(Vec2(0, 0), Vec2(1, 0), Vec2(2, 0), Vec2(1, 0))


def test_residual_oracle_random_sweep():
    # returned point lies on both lines within 1e-9
    rng = random.Random(5150)
    done = 0
    while done < 10_000:
        p1 = Vec2(rng.uniform(-5, 5), rng.uniform(-5, 5))
        p2 = Vec2(rng.uniform(-5, 5), rng.uniform(-5, 5))
        a1 = rng.uniform(0.0, 2.0 * math.pi)
        a2 = rng.uniform(0.0, 2.0 * math.pi)
        d1, d2 = unit(a1), unit(a2)
        if abs(d1.cross(d2)) < 1e-3:  # keep the sweep well conditioned
            continue
        x = intersect_lines(p1, d1, p2, d2)
        assert x is not None
        assert abs(d1.cross(x - p1)) < 1e-9
        assert abs(d2.cross(x - p2)) < 1e-9
        done += 1


def test_argument_swap_symmetry_is_exact():
    rng = random.Random(808)
    for _ in range(2_000):
        p1 = Vec2(rng.uniform(-5, 5), rng.uniform(-5, 5))
        p2 = Vec2(rng.uniform(-5, 5), rng.uniform(-5, 5))
        d1 = unit(rng.uniform(0.0, 2.0 * math.pi))
        d2 = unit(rng.uniform(0.0, 2.0 * math.pi))
        if abs(d1.cross(d2)) < 1e-9:
            continue
        a = intersect_lines(p1, d1, p2, d2)
        b = intersect_lines(p2, d2, p1, d1)
        assert a == b  # bitwise equality, not just closeness
