"""Scene description files: parser with line/column diagnostics, serializer.

The format is line oriented and human writable.  Three block kinds exist;
every block closes with `end` and `#` starts a comment:

    mirror main
      type concave          # concave | convex | plane
      radius 2.0            # spherical only, > 0
      vertex 0.0 0.0
      axis 1.0 0.0          # non-zero; points into the front half-space
      aperture 30.0         # spherical only, degrees in (0, 90); default 30
      extent 10.0           # plane only, half-length > 0
    end

    object candle
      axial 3.0             # position along the query mirror's axis ...
      height 0.5            # ... plus transverse height; OR:
      position 3.0 0.5      # absolute scene coordinates
    end

    options
      fan_rays 64           # default 64
      max_height 0.2        # fan aim half-span; required for fan queries
      crossing_tol 1e-12    # reflected-pair crossing threshold override
    end

The only silent defaults are the documented ones: aperture 30 degrees and
fan_rays 64.  Everything else must be written out; a missing or invalid key
produces a diagnostic naming the field with its line and column.

serialize_scene emits the canonical form: block order as listed in the
document, fixed key order, floats in round-trip decimal notation, one blank
line between blocks.  parse -> serialize -> parse is the identity, and
serialize is the identity on canonical text.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from ..geometry import Vec2
from ..mirrors import CONCAVE, CONVEX, Mirror, PlaneMirror, SphericalMirror, from_frame

PLANE = "plane"

DEFAULT_APERTURE_DEG = 30.0
DEFAULT_FAN_RAYS = 64
DEFAULT_CROSSING_TOL = 1e-12


class SceneParseError(ValueError):
    """Parse or validation failure with a 1-based line/column location."""

    def __init__(self, message: str, line: int, col: int = 1):
        super().__init__(f"{line}:{col}: {message}")
        self.message = message
        self.line = line
        self.col = col


@dataclass
class MirrorSpec:
    ident: str
    kind: str
    vertex: tuple[float, float]
    axis: tuple[float, float]
    radius: float | None = None
    aperture_deg: float = DEFAULT_APERTURE_DEG
    extent: float | None = None

    def build(self) -> Mirror:
        vertex = Vec2(*self.vertex)
        axis = Vec2(*self.axis).normalized()
        if self.kind == PLANE:
            assert self.extent is not None
            return PlaneMirror(vertex, axis, self.extent)
        assert self.radius is not None
        return SphericalMirror(
            radius=self.radius,
            orientation=self.kind,
            vertex=vertex,
            axis_direction=axis,
            aperture_half_angle=math.radians(self.aperture_deg),
        )


@dataclass
class ObjectSpec:
    ident: str
    position: tuple[float, float] | None = None
    axial: float | None = None
    height: float | None = None

    def resolve(self, mirror: Mirror) -> Vec2:
        """World position; axial/height pairs are read in the mirror frame."""
        if self.position is not None:
            return Vec2(*self.position)
        assert self.axial is not None and self.height is not None
        return from_frame(mirror, self.axial, self.height)


@dataclass
class SceneOptions:
    fan_rays: int = DEFAULT_FAN_RAYS
    max_height: float | None = None
    crossing_tol: float = DEFAULT_CROSSING_TOL


@dataclass
class SceneDoc:
    mirrors: list[MirrorSpec] = field(default_factory=list)
    objects: list[ObjectSpec] = field(default_factory=list)
    options: SceneOptions = field(default_factory=SceneOptions)

    def mirror(self, ident: str | None = None) -> MirrorSpec:
        """The named mirror, or the only one when the document has just one."""
        if ident is None:
            if len(self.mirrors) != 1:
                raise ValueError("document has several mirrors: name one")
            return self.mirrors[0]
        for spec in self.mirrors:
            if spec.ident == ident:
                return spec
        raise ValueError(f"no mirror named {ident!r}")

    def object(self, ident: str | None = None) -> ObjectSpec:
        if ident is None:
            if len(self.objects) != 1:
                raise ValueError("document has several objects: name one")
            return self.objects[0]
        for spec in self.objects:
            if spec.ident == ident:
                return spec
        raise ValueError(f"no object named {ident!r}")


def _tokenize(line: str) -> list[tuple[int, str]]:
    """(1-based column, token) pairs; `#` starts a comment."""
    out = []
    i = 0
    while i < len(line):
        if line[i].isspace():
            i += 1
            continue
        if line[i] == "#":
            break
        j = i
        while j < len(line) and not line[j].isspace() and line[j] != "#":
            j += 1
        out.append((i + 1, line[i:j]))
        i = j
    return out


def _parse_float(tok: str, name: str, line: int, col: int) -> float:
    try:
        v = float(tok)
    except ValueError:
        raise SceneParseError(f"{name}: not a number: {tok!r}", line, col) from None
    if math.isnan(v):
        raise SceneParseError(f"{name}: NaN is not allowed", line, col)
    return v


def _parse_int(tok: str, name: str, line: int, col: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise SceneParseError(f"{name}: not an integer: {tok!r}", line, col) from None


_MIRROR_KEYS = ("type", "radius", "vertex", "axis", "aperture", "extent")
_OBJECT_KEYS = ("position", "axial", "height")
_OPTION_KEYS = ("fan_rays", "max_height", "crossing_tol")


def parse_scene(text: str) -> SceneDoc:
    """Parse scene text; raises SceneParseError with location on any problem."""
    doc = SceneDoc()
    lines = text.splitlines()
    i = 0
    while i < len(lines):
        toks = _tokenize(lines[i])
        if not toks:
            i += 1
            continue
        col, word = toks[0]
        if word == "mirror":
            i = _parse_mirror_block(doc, lines, i, toks)
        elif word == "object":
            i = _parse_object_block(doc, lines, i, toks)
        elif word == "options":
            i = _parse_options_block(doc, lines, i, toks)
        else:
            raise SceneParseError(
                f"unknown directive {word!r} (expected mirror, object or options)", i + 1, col
            )
    if not doc.mirrors:
        raise SceneParseError("no mirror in document", max(1, len(lines)), 1)
    return doc


def _block_body(lines: list[str], start: int, what: str) -> tuple[dict, int]:
    """Collect key -> (line, key column, [(col, tok), ...]) until `end`."""
    body: dict[str, tuple[int, int, list[tuple[int, str]]]] = {}
    i = start + 1
    while i < len(lines):
        toks = _tokenize(lines[i])
        if not toks:
            i += 1
            continue
        col, key = toks[0]
        if key == "end":
            return body, i + 1
        if key in ("mirror", "object", "options"):
            raise SceneParseError(f"unterminated {what} block (missing 'end')", i + 1, col)
        if key in body:
            raise SceneParseError(f"duplicate key {key!r}", i + 1, col)
        body[key] = (i + 1, col, toks[1:])
        i += 1
    raise SceneParseError(f"unterminated {what} block (missing 'end')", len(lines), 1)


def _block_ident(doc: SceneDoc, toks, line_no: int, what: str) -> str:
    if len(toks) < 2:
        raise SceneParseError(f"{what} block needs an identifier", line_no, toks[0][0])
    if len(toks) > 2:
        raise SceneParseError(f"{what} block takes a single identifier", line_no, toks[2][0])
    ident = toks[1][1]
    taken = [s.ident for s in doc.mirrors] + [s.ident for s in doc.objects]
    if ident in taken:
        raise SceneParseError(f"duplicate identifier {ident!r}", line_no, toks[1][0])
    return ident


def _values(body, key, arity, line_default):
    if key not in body:
        return None, line_default, 1
    line, key_col, toks = body[key]
    if len(toks) != arity:
        col = toks[0][0] if toks else key_col
        raise SceneParseError(f"{key}: expected {arity} value(s), got {len(toks)}", line, col)
    return toks, line, toks[0][0]


def _parse_mirror_block(doc: SceneDoc, lines, i, head) -> int:
    ident = _block_ident(doc, head, i + 1, "mirror")
    body, nxt = _block_body(lines, i, "mirror")
    for key, (ln, key_col, _toks) in body.items():
        if key not in _MIRROR_KEYS:
            raise SceneParseError(f"unknown key {key!r} in mirror block", ln, key_col)

    toks, ln, col = _values(body, "type", 1, i + 1)
    if toks is None:
        raise SceneParseError("missing required key 'type'", i + 1)
    kind = toks[0][1]
    if kind not in (CONCAVE, CONVEX, PLANE):
        raise SceneParseError(f"type: expected concave, convex or plane, got {kind!r}", ln, toks[0][0])

    toks, ln, col = _values(body, "vertex", 2, i + 1)
    if toks is None:
        raise SceneParseError("missing required key 'vertex'", i + 1)
    vertex = (_parse_float(toks[0][1], "vertex", ln, toks[0][0]),
              _parse_float(toks[1][1], "vertex", ln, toks[1][0]))

    toks, ln, col = _values(body, "axis", 2, i + 1)
    if toks is None:
        raise SceneParseError("missing required key 'axis'", i + 1)
    axis = (_parse_float(toks[0][1], "axis", ln, toks[0][0]),
            _parse_float(toks[1][1], "axis", ln, toks[1][0]))
    if axis == (0.0, 0.0):
        raise SceneParseError("axis must be non-zero", ln, col)

    spec = MirrorSpec(ident=ident, kind=kind, vertex=vertex, axis=axis)

    toks, ln, col = _values(body, "radius", 1, i + 1)
    if kind == PLANE:
        if toks is not None:
            raise SceneParseError("radius does not apply to a plane mirror", ln, col)
    else:
        if toks is None:
            raise SceneParseError("missing required key 'radius'", i + 1)
        spec.radius = _parse_float(toks[0][1], "radius", ln, col)
        if spec.radius <= 0.0 or math.isinf(spec.radius):
            raise SceneParseError("radius must be a positive finite number", ln, col)

    toks, ln, col = _values(body, "aperture", 1, i + 1)
    if toks is not None:
        if kind == PLANE:
            raise SceneParseError("aperture does not apply to a plane mirror", ln, col)
        spec.aperture_deg = _parse_float(toks[0][1], "aperture", ln, col)
        if not 0.0 < spec.aperture_deg < 90.0:
            raise SceneParseError("aperture must lie in (0, 90) degrees", ln, col)

    toks, ln, col = _values(body, "extent", 1, i + 1)
    if kind == PLANE:
        if toks is None:
            raise SceneParseError("missing required key 'extent'", i + 1)
        spec.extent = _parse_float(toks[0][1], "extent", ln, col)
        if spec.extent <= 0.0 or math.isinf(spec.extent):
            raise SceneParseError("extent must be a positive finite number", ln, col)
    elif toks is not None:
        raise SceneParseError("extent only applies to a plane mirror", ln, col)

    doc.mirrors.append(spec)
    return nxt


def _parse_object_block(doc: SceneDoc, lines, i, head) -> int:
    ident = _block_ident(doc, head, i + 1, "object")
    body, nxt = _block_body(lines, i, "object")
    for key, (ln, key_col, _toks) in body.items():
        if key not in _OBJECT_KEYS:
            raise SceneParseError(f"unknown key {key!r} in object block", ln, key_col)

    spec = ObjectSpec(ident=ident)
    toks, ln, col = _values(body, "position", 2, i + 1)
    if toks is not None:
        spec.position = (_parse_float(toks[0][1], "position", ln, toks[0][0]),
                         _parse_float(toks[1][1], "position", ln, toks[1][0]))
    toks, ln, col = _values(body, "axial", 1, i + 1)
    if toks is not None:
        spec.axial = _parse_float(toks[0][1], "axial", ln, col)
    toks, ln, col = _values(body, "height", 1, i + 1)
    if toks is not None:
        spec.height = _parse_float(toks[0][1], "height", ln, col)

    has_pos = spec.position is not None
    has_frame = spec.axial is not None or spec.height is not None
    if has_pos and has_frame:
        raise SceneParseError("give either position or axial+height, not both", i + 1)
    if not has_pos:
        if spec.axial is None or spec.height is None:
            raise SceneParseError("object needs position, or both axial and height", i + 1)
    doc.objects.append(spec)
    return nxt


def _parse_options_block(doc: SceneDoc, lines, i, head) -> int:
    if len(head) > 1:
        raise SceneParseError("options block takes no identifier", i + 1, head[1][0])
    body, nxt = _block_body(lines, i, "options")
    for key, (ln, key_col, _toks) in body.items():
        if key not in _OPTION_KEYS:
            raise SceneParseError(f"unknown key {key!r} in options block", ln, key_col)

    opts = doc.options
    toks, ln, col = _values(body, "fan_rays", 1, i + 1)
    if toks is not None:
        opts.fan_rays = _parse_int(toks[0][1], "fan_rays", ln, col)
        if opts.fan_rays < 3:
            raise SceneParseError("fan_rays must be at least 3", ln, col)
    toks, ln, col = _values(body, "max_height", 1, i + 1)
    if toks is not None:
        opts.max_height = _parse_float(toks[0][1], "max_height", ln, col)
        if opts.max_height <= 0.0 or math.isinf(opts.max_height):
            raise SceneParseError("max_height must be a positive finite number", ln, col)
    toks, ln, col = _values(body, "crossing_tol", 1, i + 1)
    if toks is not None:
        opts.crossing_tol = _parse_float(toks[0][1], "crossing_tol", ln, col)
        if opts.crossing_tol < 1e-12:
            raise SceneParseError("crossing_tol cannot undercut 1e-12", ln, col)
    return nxt


def _num(v: float) -> str:
    # round-trip decimal form: float(_num(v)) == v
    return repr(float(v))


def serialize_scene(doc: SceneDoc) -> str:
    """Canonical text form (see module docstring)."""
    blocks: list[str] = []
    for m in doc.mirrors:
        lines = [f"mirror {m.ident}", f"  type {m.kind}"]
        if m.kind != PLANE:
            lines.append(f"  radius {_num(m.radius)}")
        lines.append(f"  vertex {_num(m.vertex[0])} {_num(m.vertex[1])}")
        lines.append(f"  axis {_num(m.axis[0])} {_num(m.axis[1])}")
        if m.kind != PLANE:
            lines.append(f"  aperture {_num(m.aperture_deg)}")
        else:
            lines.append(f"  extent {_num(m.extent)}")
        lines.append("end")
        blocks.append("\n".join(lines))
    for o in doc.objects:
        lines = [f"object {o.ident}"]
        if o.position is not None:
            lines.append(f"  position {_num(o.position[0])} {_num(o.position[1])}")
        else:
            lines.append(f"  axial {_num(o.axial)}")
            lines.append(f"  height {_num(o.height)}")
        lines.append("end")
        blocks.append("\n".join(lines))
    lines = ["options", f"  fan_rays {doc.options.fan_rays}"]
    if doc.options.max_height is not None:
        lines.append(f"  max_height {_num(doc.options.max_height)}")
    lines.append(f"  crossing_tol {_num(doc.options.crossing_tol)}")
    lines.append("end")
    blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + "\n"
