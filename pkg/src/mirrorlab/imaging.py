"""Image construction by rays: principal-ray crossings and exact fan tracing.

Two modes are deliberately kept apart.  The *ideal* mode reproduces the
textbook two-ray figure: the chief ray bends at the vertex mirror-symmetric
about the axis, the axis-parallel ray bends at the vertex plane and passes
exactly through F.  That construction is algebraically the paraxial image
equation.  The *exact* mode launches the same rays but reflects them off the
true spherical surface; the gap between the two is the aberration this
module measures.

Crossings of diverging reflected rays are taken on the backward extensions
of the reflected lines and classified virtual (behind the face).  Fan
aggregation is the centroid of all pairwise crossings with their RMS scatter
as the spread; both are order-independent reductions, so fans may be traced
in any order or in parallel.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .geometry import CoincidentLinesError, Ray, Vec2, intersect_lines
from .mirrors import (
    CONCAVE,
    BackSideArrivalError,
    Mirror,
    SphericalMirror,
    axial_of,
    focal_length,
    focus_point,
    from_frame,
    reflect_off,
    surface_point,
    transverse_of,
)
from .paraxial import IMAGE_AT_INFINITY, REAL, VIRTUAL

IDEAL = "ideal"
EXACT = "exact"


class ApertureMissError(ValueError):
    """A construction ray missed the mirror cap / extent."""


@dataclass(frozen=True)
class PrincipalRaySet:
    """The classical construction rays launched from one object point.

    chief aims at the vertex O, parallel runs along the axis direction, and
    focal aims through F (absent when the object sits on F).
    """

    chief: Ray
    parallel: Ray
    focal: Ray | None


@dataclass(frozen=True)
class TraceImage:
    """Image estimated from reflected-ray crossings.

    point is None exactly when kind is at-infinity (the reflected rays left
    parallel).  spread is the RMS distance of the pairwise crossings from
    their centroid; it is zero whenever only two rays (one crossing) took
    part.
    """

    point: Vec2 | None
    kind: str
    spread: float
    rays_used: int


def principal_rays(object_point: Vec2, m: SphericalMirror) -> PrincipalRaySet:
    """Launch rays for the two/three-ray construction."""
    chief = Ray.toward(object_point, m.vertex)
    parallel = Ray(object_point, -m.axis_direction)
    f_point = focus_point(m)
    focal = None
    if (f_point - object_point).norm() > 0.0:
        focal = Ray.toward(object_point, f_point)
    return PrincipalRaySet(chief, parallel, focal)


def _object_frame(m: Mirror, object_point: Vec2) -> tuple[float, float]:
    ax = axial_of(m, object_point)
    tr = transverse_of(m, object_point)
    if ax <= 0.0:
        raise ValueError("object must sit in front of the mirrored face")
    return ax, tr


def _classify_crossing(m: Mirror, crossing: Vec2 | None, rays_used: int) -> TraceImage:
    if crossing is None:
        return TraceImage(None, IMAGE_AT_INFINITY, 0.0, rays_used)
    kind = REAL if axial_of(m, crossing) > 0.0 else VIRTUAL
    return TraceImage(crossing, kind, 0.0, rays_used)


def principal_ray_image(object_point: Vec2, m: SphericalMirror, mode: str = IDEAL) -> TraceImage:
    """Image of an off-axis point from the chief/parallel ray crossing.

    ideal mode intersects the idealized reflected lines (the ones the
    textbook figure draws); exact mode reflects the same launch rays off the
    true surface first.  Diverging reflected rays cross on their backward
    extensions and the image is classified virtual.
    """
    ax, tr = _object_frame(m, object_point)
    if tr == 0.0:
        raise ValueError("object on the principal axis: two-ray construction degenerates")
    if mode == IDEAL:
        f = focal_length(m)
        # chief: bends at O, leaving mirror-symmetric about the axis
        chief_anchor = m.vertex
        chief_dir = (ax * m.axis_direction + (-tr) * m.axis_direction.perp()).normalized()
        # parallel: bends at the vertex plane, leaving exactly through F
        par_anchor = from_frame(m, 0.0, tr)
        par_dir = (f * m.axis_direction + (-tr) * m.axis_direction.perp()).normalized()
        crossing = intersect_lines(chief_anchor, chief_dir, par_anchor, par_dir)
        return _classify_crossing(m, crossing, rays_used=2)
    if mode != EXACT:
        raise ValueError(f"mode must be {IDEAL!r} or {EXACT!r}, got {mode!r}")
    launch = principal_rays(object_point, m)
    chief = reflect_off(m, launch.chief)
    parallel = reflect_off(m, launch.parallel)
    missing = [name for name, r in (("chief", chief), ("parallel", parallel)) if r is None]
    if missing:
        raise ApertureMissError(f"construction ray(s) missed the cap aperture: {', '.join(missing)}")
    crossing = intersect_lines(chief.origin, chief.direction, parallel.origin, parallel.direction)
    return _classify_crossing(m, crossing, rays_used=2)


def exact_focus_crossing(m: SphericalMirror, h: float) -> float:
    """Axial coordinate where an axis-parallel ray at height h crosses the axis.

    Exact tracing of the concave cap; equals R - R/(2 cos a) with
    sin a = h/R, which collapses to f = R/2 as h -> 0.
    """
    if m.orientation != CONCAVE:
        raise ValueError("focus crossing is defined for concave mirrors")
    h_max = m.radius * math.sin(m.aperture_half_angle)
    if not 0.0 < h < h_max:
        raise ValueError(f"height must lie inside the cap aperture (0, {h_max!r})")
    launch = Ray(from_frame(m, m.radius, h), -m.axis_direction)
    reflected = reflect_off(m, launch)
    if reflected is None:  # cannot happen inside the checked aperture
        raise ApertureMissError("parallel ray missed the cap")
    crossing = intersect_lines(reflected.origin, reflected.direction, m.vertex, m.axis_direction)
    if crossing is None:  # reflected ray axis-parallel at float precision
        raise ValueError("height too small: the crossing is numerically at infinity")
    return axial_of(m, crossing)


def fan_image(
    object_point: Vec2,
    m: Mirror,
    n_rays: int = 64,
    max_height: float = 0.0,
    crossing_tol: float = 1e-12,
) -> TraceImage | None:
    """Image from a fan of rays aimed across the mirror face.

    Launches n_rays from the object toward surface points with transverse
    heights spanning [-max_height, +max_height], reflects them exactly and
    aggregates all pairwise crossings (backward extensions included) into a
    centroid with RMS spread.

    Returns None when no image can be stated: fewer than two rays survive
    the aperture, or the crossings straddle the mirror face (mixed
    convergence) instead of agreeing on a side.
    """
    if n_rays < 3:
        raise ValueError("a fan needs at least 3 rays")
    if not (math.isfinite(max_height) and max_height > 0.0):
        raise ValueError("max_height must be positive")
    if crossing_tol < 1e-12:
        raise ValueError("crossing_tol cannot undercut the parallel-line threshold (1e-12)")
    _object_frame(m, object_point)  # front-side check

    reflected: list[Ray] = []
    for i in range(n_rays):
        height = -max_height + (2.0 * max_height) * i / (n_rays - 1)
        try:
            aim = surface_point(m, height)
        except ValueError:
            continue  # beyond the generating sphere: no such surface point
        offset = aim - object_point
        if offset.norm() == 0.0:
            continue
        try:
            r = reflect_off(m, Ray(object_point, offset.normalized()))
        except BackSideArrivalError:
            continue  # reached the cap from inside: not a usable image ray
        if r is not None:
            reflected.append(r)
    if len(reflected) < 2:
        return None

    crossings: list[Vec2] = []
    in_front = behind = False
    for i in range(len(reflected)):
        ri = reflected[i]
        for j in range(i + 1, len(reflected)):
            rj = reflected[j]
            if abs(ri.direction.cross(rj.direction)) < crossing_tol:
                continue
            try:
                x = intersect_lines(ri.origin, ri.direction, rj.origin, rj.direction)
            except CoincidentLinesError:
                continue
            if x is None:
                continue
            crossings.append(x)
            a = axial_of(m, x)
            in_front = in_front or a > 0.0
            behind = behind or a <= 0.0
    if not crossings or (in_front and behind):
        return None  # no crossings at all, or a caustic straddling the face

    n = len(crossings)
    centroid = Vec2(
        math.fsum(c.x for c in crossings) / n,
        math.fsum(c.y for c in crossings) / n,
    )
    spread = math.sqrt(
        math.fsum((c.x - centroid.x) ** 2 + (c.y - centroid.y) ** 2 for c in crossings) / n
    )
    kind = REAL if in_front else VIRTUAL
    return TraceImage(centroid, kind, spread, rays_used=len(reflected))
