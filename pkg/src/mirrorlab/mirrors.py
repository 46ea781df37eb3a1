"""Plane and spherical-cap mirror models.

A mirror owns its principal axis: a vertex O plus a unit axis direction that
points from O into the half-plane in FRONT of the mirrored face.  Axial
coordinates are measured along that axis (positive in front, negative
behind), transverse coordinates along its counterclockwise perpendicular.

Sign convention for the focal length: +R/2 for a concave mirror, -R/2 for a
convex one (its focus sits behind the face, reachable only by backward
extensions), and an at-infinity marker for plane mirrors, whose reciprocal
focal power is zero.  The convex sign is this library's extension of the
concave-only textbook statement; tests pin it against exact tracing.

All mirror values are immutable and every operation is pure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .geometry import Ray, Vec2, ray_circle_ts, reflect_direction

AT_INFINITY = math.inf

CONCAVE = "concave"
CONVEX = "convex"

DEFAULT_APERTURE = math.radians(30.0)


def is_at_infinity(value: float) -> bool:
    return math.isinf(value)


class BackSideArrivalError(ValueError):
    """The ray reached the reflective surface from behind the mirrored face."""


@dataclass(frozen=True)
class SphericalMirror:
    """Spherical-cap reflector cut from a sphere of radius R.

    aperture_half_angle is the cap extent: the largest angle, measured at the
    curvature center C between a cap point and the vertex, that still belongs
    to the cut.
    """

    radius: float
    orientation: str  # CONCAVE or CONVEX
    vertex: Vec2
    axis_direction: Vec2
    aperture_half_angle: float = DEFAULT_APERTURE

    def __post_init__(self) -> None:
        if not (math.isfinite(self.radius) and self.radius > 0.0):
            raise ValueError("radius must be a positive finite number")
        if self.orientation not in (CONCAVE, CONVEX):
            raise ValueError(f"orientation must be {CONCAVE!r} or {CONVEX!r}")
        if not 0.0 < self.aperture_half_angle < math.pi / 2.0:
            raise ValueError("aperture_half_angle must lie in (0, pi/2)")
        if not self.axis_direction.is_unit():
            raise ValueError("axis_direction must be unit length")

    @property
    def center(self) -> Vec2:
        """Curvature center C: in front of the face for concave, behind for convex."""
        s = self.radius if self.orientation == CONCAVE else -self.radius
        return self.vertex + s * self.axis_direction


@dataclass(frozen=True)
class PlaneMirror:
    """Flat reflector of half-length `extent` around the chosen vertex O."""

    vertex: Vec2
    axis_direction: Vec2
    extent: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.extent) and self.extent > 0.0):
            raise ValueError("extent must be a positive finite number")
        if not self.axis_direction.is_unit():
            raise ValueError("axis_direction must be unit length")


Mirror = SphericalMirror | PlaneMirror


def axial_of(m: Mirror, p: Vec2) -> float:
    """Signed axial coordinate of a point in the mirror frame (front > 0)."""
    return (p - m.vertex).dot(m.axis_direction)


def transverse_of(m: Mirror, p: Vec2) -> float:
    """Signed transverse coordinate (counterclockwise of the axis > 0)."""
    return m.axis_direction.cross(p - m.vertex)


def from_frame(m: Mirror, axial: float, transverse: float) -> Vec2:
    """World point from mirror-frame coordinates."""
    return m.vertex + axial * m.axis_direction + transverse * m.axis_direction.perp()


def surface_point(m: Mirror, transverse: float) -> Vec2:
    """Point of the reflective surface at a given transverse height.

    For spherical mirrors |transverse| must stay below R; the caller is
    responsible for aperture range, reflect_off re-checks it anyway.
    """
    if isinstance(m, PlaneMirror):
        return from_frame(m, 0.0, transverse)
    if abs(transverse) >= m.radius:
        raise ValueError("height exceeds the generating sphere radius")
    sag = m.radius - math.sqrt(m.radius * m.radius - transverse * transverse)
    axial = sag if m.orientation == CONCAVE else -sag
    return from_frame(m, axial, transverse)


def focal_length(m: Mirror) -> float:
    """Signed focal length: +R/2 concave, -R/2 convex, AT_INFINITY for plane."""
    if isinstance(m, PlaneMirror):
        return AT_INFINITY
    half = m.radius / 2.0
    return half if m.orientation == CONCAVE else -half


def focus_point(m: SphericalMirror) -> Vec2:
    """Paraxial focus F = O + f * axis; behind the face for convex mirrors."""
    return m.vertex + focal_length(m) * m.axis_direction


def _on_cap(m: SphericalMirror, point: Vec2) -> bool:
    # cap membership: angle at C between (point - C) and (O - C)
    c = m.center
    u = point - c
    v = m.vertex - c
    cos_ang = u.dot(v) / (u.norm() * v.norm())
    ang = math.acos(max(-1.0, min(1.0, cos_ang)))
    return ang <= m.aperture_half_angle


def _face_normal(m: SphericalMirror, point: Vec2) -> Vec2:
    # unit normal of the mirrored face (pointing into the front half-space)
    c = m.center
    if m.orientation == CONCAVE:
        return (c - point).normalized()
    return (point - c).normalized()


def reflect_off(m: Mirror, ray: Ray) -> Ray | None:
    """Exact reflected ray anchored at the surface hit point.

    Returns None when the ray misses the cap / extent.  Raises
    BackSideArrivalError when the first surface encounter is from behind the
    mirrored face.
    """
    if isinstance(m, PlaneMirror):
        return _reflect_off_plane(m, ray)
    return _reflect_off_spherical(m, ray)


def _reflect_off_plane(m: PlaneMirror, ray: Ray) -> Ray | None:
    n = m.axis_direction
    side = (ray.origin - m.vertex).dot(n)
    if side < 0.0:
        raise BackSideArrivalError("ray originates behind the plane mirror face")
    approach = ray.direction.dot(n)
    if approach >= 0.0:
        return None  # moving away from (or along) the face
    t = -side / approach
    if t <= 1e-12 * m.extent:
        return None
    hit = ray.at(t)
    if (hit - m.vertex).norm() > m.extent:
        return None
    return Ray(hit, reflect_direction(ray.direction, n))


def _reflect_off_spherical(m: SphericalMirror, ray: Ray) -> Ray | None:
    # The cap is opaque, the rest of the generating circle is not there at
    # all: walk the circle intersections in order and act on the first one
    # that lies on the cap.
    for t in ray_circle_ts(ray, m.center, m.radius):
        point = ray.at(t)
        if not _on_cap(m, point):
            continue
        normal = _face_normal(m, point)
        if ray.direction.dot(normal) >= 0.0:
            raise BackSideArrivalError("ray hits the cap from behind the mirrored face")
        return Ray(point, reflect_direction(ray.direction, normal))
    return None
