"""Deterministic SVG 1.1 diagrams of mirror scenes.

Reproduces the two-ray construction figure: principal axis, mirror surface,
the marked points O, C, F, the chief and axis-parallel rays with their
reflections, and the image point.  Diverging reflected rays get dashed
backward extensions to the virtual image behind the face.

Output is byte-stable for identical input: floats are written with a fixed
format and nothing depends on dict ordering or the clock.  World x maps to
screen-right and world y to screen-up, so a mirror whose axis points along
+x shows its front side on the right.
"""

from __future__ import annotations

import math

from ..geometry import Vec2
from ..imaging import IDEAL, TraceImage, principal_ray_image
from ..mirrors import (
    Mirror,
    PlaneMirror,
    SphericalMirror,
    focus_point,
    from_frame,
    reflect_off,
    transverse_of,
)
from ..geometry import Ray
from ..paraxial import VIRTUAL
from .scene import SceneDoc

_W, _H, _MARGIN = 720.0, 440.0, 40.0

_STYLE_AXIS = 'stroke="#9aa0a6" stroke-width="1" stroke-dasharray="7,5"'
_STYLE_MIRROR = 'stroke="#00b0c8" stroke-width="3" fill="none"'
_STYLE_RAY_IN = 'stroke="#7b1fa2" stroke-width="1.5"'
_STYLE_RAY_OUT = 'stroke="#7b1fa2" stroke-width="1.5" stroke-dasharray="5,4"'
_STYLE_EXT = 'stroke="#ef6c00" stroke-width="1.2" stroke-dasharray="2,4"'
_STYLE_TEXT = 'font-family="Helvetica,Arial,sans-serif" font-size="13"'


def _fmt(v: float) -> str:
    out = f"{v:.3f}"
    return "0.000" if out == "-0.000" else out


class _Canvas:
    """World -> screen mapping plus element buffer."""

    def __init__(self, lo: Vec2, hi: Vec2):
        span_x = max(hi.x - lo.x, 1e-9)
        span_y = max(hi.y - lo.y, 1e-9)
        scale = min((_W - 2 * _MARGIN) / span_x, (_H - 2 * _MARGIN) / span_y)
        self.scale = scale
        self.ox = _MARGIN + ((_W - 2 * _MARGIN) - scale * span_x) / 2.0 - scale * lo.x
        self.oy = _H - _MARGIN - ((_H - 2 * _MARGIN) - scale * span_y) / 2.0 + scale * lo.y
        self.elements: list[str] = []

    def pt(self, p: Vec2) -> tuple[float, float]:
        return self.ox + self.scale * p.x, self.oy - self.scale * p.y

    def line(self, a: Vec2, b: Vec2, style: str) -> None:
        ax, ay = self.pt(a)
        bx, by = self.pt(b)
        self.elements.append(
            f'<line x1="{_fmt(ax)}" y1="{_fmt(ay)}" x2="{_fmt(bx)}" y2="{_fmt(by)}" {style}/>'
        )

    def polyline(self, pts: list[Vec2], style: str) -> None:
        coords = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in (self.pt(p) for p in pts))
        self.elements.append(f'<polyline points="{coords}" {style}/>')

    def dot(self, p: Vec2, color: str, r: float = 3.5) -> None:
        x, y = self.pt(p)
        self.elements.append(f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="{r}" fill="{color}"/>')

    def label(self, p: Vec2, text: str, dx: float = 6.0, dy: float = -6.0) -> None:
        x, y = self.pt(p)
        self.elements.append(
            f'<text x="{_fmt(x + dx)}" y="{_fmt(y + dy)}" {_STYLE_TEXT}>{text}</text>'
        )


def _mirror_outline(m: Mirror, samples: int = 64) -> list[Vec2]:
    if isinstance(m, PlaneMirror):
        return [from_frame(m, 0.0, -m.extent), from_frame(m, 0.0, m.extent)]
    c = m.center
    to_vertex = m.vertex - c
    base = math.atan2(to_vertex.y, to_vertex.x)
    pts = []
    for i in range(samples + 1):
        ang = base - m.aperture_half_angle + (2.0 * m.aperture_half_angle) * i / samples
        pts.append(c + m.radius * Vec2(math.cos(ang), math.sin(ang)))
    return pts


def _interesting_points(m: Mirror, obj: Vec2, image: TraceImage | None) -> list[Vec2]:
    pts = [m.vertex, obj] + _mirror_outline(m, samples=8)
    if isinstance(m, SphericalMirror):
        pts += [m.center, focus_point(m)]
    if image is not None and image.point is not None:
        pts.append(image.point)
    return pts


def _bounds(pts: list[Vec2]) -> tuple[Vec2, Vec2]:
    xs = [p.x for p in pts]
    ys = [p.y for p in pts]
    pad_x = 0.08 * max(max(xs) - min(xs), 1e-6)
    pad_y = 0.08 * max(max(ys) - min(ys), 1e-6)
    pad = max(pad_x, pad_y)
    return Vec2(min(xs) - pad, min(ys) - pad), Vec2(max(xs) + pad, max(ys) + pad)


def _draw_reflected(canvas: _Canvas, m: Mirror, anchor: Vec2, image: TraceImage | None) -> None:
    """Reflected-ray segment from a bend point, to the image if one exists."""
    if image is None or image.point is None:
        return
    if image.kind == VIRTUAL:
        # forward stub in front plus a dashed backward extension to the image
        away = (anchor - image.point).normalized()
        canvas.line(anchor, anchor + (0.6 * (anchor - m.vertex).norm() + 0.3) * away, _STYLE_RAY_OUT)
        canvas.line(anchor, image.point, _STYLE_EXT)
    else:
        canvas.line(anchor, image.point, _STYLE_RAY_OUT)


def render_scene(
    doc: SceneDoc,
    mirror_id: str | None = None,
    object_id: str | None = None,
) -> str:
    """SVG text for one mirror/object query of the scene document."""
    spec = doc.mirror(mirror_id)
    m = spec.build()
    obj_spec = doc.object(object_id)
    obj = obj_spec.resolve(m)

    image: TraceImage | None = None
    if isinstance(m, SphericalMirror):
        if transverse_of(m, obj) != 0.0:
            image = principal_ray_image(obj, m, mode=IDEAL)
    else:
        reflected = reflect_off(m, Ray(obj, -m.axis_direction))
        if reflected is not None:
            # stigmatic plane image: mirror the object through the face
            image = TraceImage(
                from_frame(m, -((obj - m.vertex).dot(m.axis_direction)), transverse_of(m, obj)),
                VIRTUAL,
                0.0,
                2,
            )

    lo, hi = _bounds(_interesting_points(m, obj, image))
    canvas = _Canvas(lo, hi)

    # principal axis across the whole view
    span = max(hi.x - lo.x, hi.y - lo.y)
    canvas.line(m.vertex - 1.2 * span * m.axis_direction, m.vertex + 1.2 * span * m.axis_direction, _STYLE_AXIS)

    canvas.polyline(_mirror_outline(m), _STYLE_MIRROR)

    canvas.dot(m.vertex, "#202124")
    canvas.label(m.vertex, "O")
    if isinstance(m, SphericalMirror):
        canvas.dot(m.center, "#202124")
        canvas.label(m.center, "C")
        canvas.dot(focus_point(m), "#d81b60")
        canvas.label(focus_point(m), "F")

    canvas.dot(obj, "#1a73e8")
    canvas.label(obj, obj_spec.ident)

    if isinstance(m, SphericalMirror) and image is not None:
        # chief ray object -> vertex, parallel ray object -> vertex plane
        canvas.line(obj, m.vertex, _STYLE_RAY_IN)
        par_bend = from_frame(m, 0.0, transverse_of(m, obj))
        canvas.line(obj, par_bend, _STYLE_RAY_IN)
        _draw_reflected(canvas, m, m.vertex, image)
        _draw_reflected(canvas, m, par_bend, image)
    elif image is not None:
        # plane mirror: normal ray plus one oblique ray, both mirror-symmetric
        foot = from_frame(m, 0.0, transverse_of(m, obj))
        canvas.line(obj, foot, _STYLE_RAY_IN)
        oblique_bend = from_frame(m, 0.0, transverse_of(m, obj) * 0.25)
        canvas.line(obj, oblique_bend, _STYLE_RAY_IN)
        canvas.line(foot, image.point, _STYLE_EXT)
        canvas.line(oblique_bend, image.point, _STYLE_EXT)

    if image is not None and image.point is not None:
        canvas.dot(image.point, "#e8710a")
        canvas.label(image.point, f"{obj_spec.ident}'")

    body = "\n".join(f"  {el}" for el in canvas.elements)
    return (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{_fmt(_W)}" height="{_fmt(_H)}" '
        f'viewBox="0 0 {_fmt(_W)} {_fmt(_H)}">\n'
        f"{body}\n"
        "</svg>\n"
    )
