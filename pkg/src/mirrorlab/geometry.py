"""Exact 2D vector/ray primitives: reflection and intersection kernels.

Everything here is a pure function over immutable values, safe to call from
any number of threads.  Scene scale is assumed O(1)..O(1e6) length units;
absolute tolerances scale with the relevant radius or offset where needed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

# |v| must be within this of 1 to count as a unit vector.
UNIT_TOL = 1e-12
# two directions with |cross| below this are treated as parallel
PARALLEL_TOL = 1e-12
# self-intersection guard, scaled by the circle radius
SELF_HIT_GUARD = 1e-12


class CoincidentLinesError(ValueError):
    """The two lines are the same line (parallel and overlapping)."""


@dataclass(frozen=True)
class Vec2:
    """Point or direction in the optical plane.  Components must be finite."""

    x: float
    y: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"non-finite vector component ({self.x!r}, {self.y!r})")

    def __add__(self, other: "Vec2") -> "Vec2":
        return Vec2(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Vec2") -> "Vec2":
        return Vec2(self.x - other.x, self.y - other.y)

    def __mul__(self, s: float) -> "Vec2":
        return Vec2(self.x * s, self.y * s)

    __rmul__ = __mul__

    def __neg__(self) -> "Vec2":
        return Vec2(-self.x, -self.y)

    def dot(self, other: "Vec2") -> float:
        return self.x * other.x + self.y * other.y

    def cross(self, other: "Vec2") -> float:
        """z-component of the 3D cross product (signed parallelogram area)."""
        return self.x * other.y - self.y * other.x

    def norm(self) -> float:
        return math.hypot(self.x, self.y)

    def normalized(self) -> "Vec2":
        n = self.norm()
        if n == 0.0:
            raise ValueError("cannot normalize the zero vector")
        return Vec2(self.x / n, self.y / n)

    def perp(self) -> "Vec2":
        """Counterclockwise perpendicular: (x, y) -> (-y, x)."""
        return Vec2(-self.y, self.x)

    def is_unit(self) -> bool:
        return abs(self.norm() - 1.0) <= UNIT_TOL


@dataclass(frozen=True)
class Ray:
    """Half-line: origin plus unit direction."""

    origin: Vec2
    direction: Vec2

    def __post_init__(self) -> None:
        if not self.direction.is_unit():
            raise ValueError(f"ray direction must be unit length, got |d|={self.direction.norm()!r}")

    @classmethod
    def toward(cls, origin: Vec2, target: Vec2) -> "Ray":
        return cls(origin, (target - origin).normalized())

    def at(self, t: float) -> Vec2:
        return self.origin + t * self.direction


@dataclass(frozen=True)
class Hit:
    """Ray/surface intersection record.

    The normal is unit length and faces the arriving ray
    (normal . ray.direction <= 0).
    """

    point: Vec2
    normal: Vec2
    t: float

    def __post_init__(self) -> None:
        if not self.normal.is_unit():
            raise ValueError("hit normal must be unit length")
        if self.t < 0.0:
            raise ValueError("hit parameter must be non-negative")


def reflect_direction(incident: Vec2, normal: Vec2) -> Vec2:
    """Specular reflection of a unit direction about a unit surface normal.

    The incidence angle equals the reflection angle about the normal; the
    result keeps unit length.  Rejects rays arriving from behind the surface
    (incident . normal >= 0).
    """
    if not incident.is_unit():
        raise ValueError("incident direction must be unit length")
    if not normal.is_unit():
        raise ValueError("normal must be unit length")
    d = incident.dot(normal)
    if d >= 0.0:
        raise ValueError("ray arrives from behind the surface (incident . normal >= 0)")
    return incident - (2.0 * d) * normal


def ray_circle_ts(ray: Ray, center: Vec2, radius: float) -> tuple[float, ...]:
    """All ray parameters t of circle intersections, ascending.

    Only t > SELF_HIT_GUARD * radius count, so a ray anchored on the circle
    never reports its own anchor as a hit.  Uses the numerically stable
    quadratic form (matters for the huge-radius plane-limit sweeps).
    """
    if radius <= 0.0:
        raise ValueError("radius must be positive")
    f = ray.origin - center
    b = ray.direction.dot(f)
    c = f.dot(f) - radius * radius
    disc = b * b - c
    if disc < 0.0:
        return ()
    eps = SELF_HIT_GUARD * radius
    if disc == 0.0:
        t = -b
        return (t,) if t > eps else ()
    sq = math.sqrt(disc)
    q = -(b + sq) if b >= 0.0 else -(b - sq)
    t1, t2 = q, (c / q if q != 0.0 else -b)
    if t1 > t2:
        t1, t2 = t2, t1
    return tuple(t for t in (t1, t2) if t > eps)


def intersect_ray_circle(ray: Ray, center: Vec2, radius: float) -> Hit | None:
    """Nearest forward intersection of a ray with a circle, or None.

    The returned normal is the outward or inward radial direction, whichever
    faces the arriving ray.  Tangency yields the single touch point.
    """
    ts = ray_circle_ts(ray, center, radius)
    if not ts:
        return None
    t = ts[0]
    point = ray.at(t)
    normal = (point - center).normalized()
    if ray.direction.dot(normal) > 0.0:
        normal = -normal
    return Hit(point, normal, t)


def intersect_lines(p1: Vec2, d1: Vec2, p2: Vec2, d2: Vec2) -> Vec2 | None:
    """Crossing point of two infinite lines (point + unit direction each).

    Returns None for distinct parallel lines and raises CoincidentLinesError
    when both arguments describe the same line.  The crossing is evaluated on
    both lines and averaged, which makes the result exactly symmetric under
    argument swap.
    """
    if not d1.is_unit() or not d2.is_unit():
        raise ValueError("line directions must be unit length")
    cr = d1.cross(d2)
    if abs(cr) < PARALLEL_TOL:
        off = p2 - p1
        scale = max(1.0, off.norm())
        if abs(off.cross(d1)) <= PARALLEL_TOL * scale:
            raise CoincidentLinesError("lines are parallel and coincident")
        return None
    off = p2 - p1
    t1 = off.cross(d2) / cr
    t2 = (-off).cross(d1) / -cr
    a = p1 + t1 * d1
    b = p2 + t2 * d2
    return Vec2((a.x + b.x) / 2.0, (a.y + b.y) / 2.0)
