"""Newline-delimited JSON session protocol for the interactive lab.

Every message is one JSON object per line carrying `v` (protocol version,
always 1), `kind` ("command" from the client, "event" from the engine),
`name`, `seq` and `payload`.  Each command gets exactly one reply event with
the same seq: name "state" on success, "error" on any failure.  Both reply
kinds carry the full derived state under payload["state"], so a client can
stay stateless between frames.  Domain errors never kill the session; only
`shutdown` (or EOF) ends the loop.

Commands: load_scene {text[, mirror, object]}, place_token {z},
displace {delta}, set_mirror {orientation[, R, aperture_deg, extent]},
set_object {axial, height}, query_image {mode[, n_rays, max_height]},
reset {}, shutdown {}.

set_mirror builds the bench mirror at the origin with its axis along +x.
Plane mirrors default to extent 10; fan queries default to 64 rays with a
max height of 0.05*R (half the extent for plane mirrors).  Positions at
infinity are encoded as the JSON string "at-infinity"; magnification is
null there.
"""

from __future__ import annotations

import json
import re
from typing import IO

from ..imaging import EXACT, IDEAL, TraceImage, fan_image, principal_ray_image
from ..mirrors import (
    Mirror,
    SphericalMirror,
    focal_length,
    focus_point,
    is_at_infinity,
)
from ..numberline import ArithmeticStep, NumberLineScene
from ..paraxial import ParaxialImage, gauss_image
from .scene import DEFAULT_APERTURE_DEG, PLANE, MirrorSpec, ObjectSpec, parse_scene

PROTOCOL_VERSION = 1
FAN = "fan"

DEFAULT_PLANE_EXTENT = 10.0
DEFAULT_FAN_RAYS = 64

_SEQ_RE = re.compile(r'"seq"\s*:\s*(-?\d+)')


class ProtocolError(ValueError):
    """Malformed or out-of-order message."""


def _axial(value) -> object:
    return "at-infinity" if isinstance(value, float) and is_at_infinity(value) else value


def _step_payload(step: ArithmeticStep) -> dict:
    return {
        "start": step.start,
        "delta": step.delta,
        "end": step.end,
        "front_direction": step.front_direction,
        "classification": step.classification,
        "front_equation": step.front_equation,
        "mirrored_equation": step.mirrored_equation,
    }


def _paraxial_payload(img: ParaxialImage) -> dict:
    return {"p_im": _axial(img.p_im), "magnification": img.magnification, "kind": img.kind}


def _trace_payload(img: TraceImage, mode: str) -> dict:
    return {
        "mode": mode,
        "point": None if img.point is None else [img.point.x, img.point.y],
        "kind": img.kind,
        "spread": img.spread,
        "rays_used": img.rays_used,
    }


def _mirror_payload(spec: MirrorSpec, m: Mirror) -> dict:
    out: dict = {
        "orientation": spec.kind,
        "vertex": list(spec.vertex),
        "axis": list(spec.axis),
        "focal_length": _axial(focal_length(m)),
    }
    if isinstance(m, SphericalMirror):
        out["radius"] = spec.radius
        out["aperture_deg"] = spec.aperture_deg
        c, f = m.center, focus_point(m)
        out["center"] = [c.x, c.y]
        out["focus"] = [f.x, f.y]
    else:
        out["extent"] = spec.extent
        out["center"] = None
        out["focus"] = None
    return out


class Session:
    """One protocol session: bench state, number-line state, reply builder."""

    def __init__(self) -> None:
        self._reset()
        self.last_seq = 0
        self.closed = False

    def _reset(self) -> None:
        self.line_scene: NumberLineScene | None = None
        self.mirror_spec: MirrorSpec | None = None
        self.object_spec: ObjectSpec | None = None
        self.trace: TraceImage | None = None
        self.trace_mode: str | None = None

    # -- state snapshot ----------------------------------------------------

    def snapshot(self) -> dict:
        state: dict = {
            "token": None if self.line_scene is None else self.line_scene.token,
            "image": None if self.line_scene is None else self.line_scene.image,
            "last_step": None,
            "mirror": None,
            "object": None,
            "paraxial": None,
            "trace": None,
        }
        if self.line_scene is not None and self.line_scene.log:
            state["last_step"] = _step_payload(self.line_scene.log[-1])
        mirror = None
        if self.mirror_spec is not None:
            mirror = self.mirror_spec.build()
            state["mirror"] = _mirror_payload(self.mirror_spec, mirror)
        if self.object_spec is not None:
            state["object"] = {"axial": self.object_spec.axial, "height": self.object_spec.height}
        if mirror is not None and self.object_spec is not None:
            img = gauss_image(self.object_spec.axial, focal_length(mirror))
            state["paraxial"] = _paraxial_payload(img)
        if self.trace is not None:
            state["trace"] = _trace_payload(self.trace, self.trace_mode)
        return state

    # -- command handlers ---------------------------------------------------

    def _cmd_place_token(self, payload: dict) -> None:
        z = _expect_int(payload, "z")
        if self.line_scene is None:
            self.line_scene = NumberLineScene(token=z)
        else:
            self.line_scene.place_token(z)

    def _cmd_displace(self, payload: dict) -> None:
        delta = _expect_int(payload, "delta")
        if self.line_scene is None:
            raise ValueError("no token placed yet")
        self.line_scene.displace(delta)

    def _cmd_set_mirror(self, payload: dict) -> None:
        orientation = _expect_str(payload, "orientation")
        if orientation == PLANE:
            extent = float(payload.get("extent", DEFAULT_PLANE_EXTENT))
            spec = MirrorSpec(
                ident="bench", kind=PLANE, vertex=(0.0, 0.0), axis=(1.0, 0.0), extent=extent
            )
        else:
            if "R" not in payload:
                raise ValueError("set_mirror needs R for a spherical mirror")
            spec = MirrorSpec(
                ident="bench",
                kind=orientation,
                vertex=(0.0, 0.0),
                axis=(1.0, 0.0),
                radius=float(payload["R"]),
                aperture_deg=float(payload.get("aperture_deg", DEFAULT_APERTURE_DEG)),
            )
        spec.build()  # validate before committing
        self.mirror_spec = spec
        self.trace = self.trace_mode = None

    def _cmd_set_object(self, payload: dict) -> None:
        axial = _expect_number(payload, "axial")
        height = _expect_number(payload, "height")
        if axial <= 0.0:
            raise ValueError("object must sit in front of the mirror (axial > 0)")
        self.object_spec = ObjectSpec(ident="object", axial=axial, height=height)
        self.trace = self.trace_mode = None

    def _cmd_query_image(self, payload: dict) -> None:
        mode = _expect_str(payload, "mode")
        if self.mirror_spec is None or self.object_spec is None:
            raise ValueError("query_image needs a mirror and an object")
        mirror = self.mirror_spec.build()
        obj = self.object_spec.resolve(mirror)
        if mode in (IDEAL, EXACT):
            if not isinstance(mirror, SphericalMirror):
                raise ValueError("principal-ray construction needs a spherical mirror")
            self.trace = principal_ray_image(obj, mirror, mode=mode)
        elif mode == FAN:
            n_rays = int(payload.get("n_rays", DEFAULT_FAN_RAYS))
            if isinstance(mirror, SphericalMirror):
                default_mh = 0.05 * mirror.radius
            else:
                default_mh = 0.5 * mirror.extent
            max_height = float(payload.get("max_height", default_mh))
            result = fan_image(obj, mirror, n_rays=n_rays, max_height=max_height)
            if result is None:
                raise ValueError("fan produced no image (aperture starvation or mixed convergence)")
            self.trace = result
        else:
            raise ValueError(f"unknown image mode {mode!r}")
        self.trace_mode = mode

    def _cmd_load_scene(self, payload: dict) -> None:
        text = _expect_str(payload, "text")
        doc = parse_scene(text)
        mirror_spec = doc.mirror(payload.get("mirror"))
        self.mirror_spec = mirror_spec
        self.object_spec = None
        self.trace = self.trace_mode = None
        if doc.objects:
            obj = doc.object(payload.get("object"))
            mirror = mirror_spec.build()
            pos = obj.resolve(mirror)
            axial = (pos - mirror.vertex).dot(mirror.axis_direction)
            height = mirror.axis_direction.cross(pos - mirror.vertex)
            if axial > 0.0:
                self.object_spec = ObjectSpec(ident=obj.ident, axial=axial, height=height)

    _HANDLERS = {
        "place_token": _cmd_place_token,
        "displace": _cmd_displace,
        "set_mirror": _cmd_set_mirror,
        "set_object": _cmd_set_object,
        "query_image": _cmd_query_image,
        "load_scene": _cmd_load_scene,
    }

    # -- message plumbing ---------------------------------------------------

    def _event(self, name: str, seq, message: str | None = None) -> dict:
        payload: dict = {"state": self.snapshot()}
        if message is not None:
            payload["message"] = message
        return {
            "v": PROTOCOL_VERSION,
            "kind": "event",
            "name": name,
            "seq": seq,
            "payload": payload,
        }

    def handle(self, msg: dict) -> dict:
        seq = msg.get("seq")
        try:
            if msg.get("v") != PROTOCOL_VERSION:
                raise ProtocolError(f"unsupported protocol version {msg.get('v')!r}")
            if msg.get("kind") != "command":
                raise ProtocolError("expected a command message")
            if not isinstance(seq, int):
                raise ProtocolError("seq must be an integer")
            if seq <= self.last_seq:
                raise ProtocolError(
                    f"seq must increase monotonically (got {seq} after {self.last_seq})"
                )
            self.last_seq = seq
            name = msg.get("name")
            payload = msg.get("payload") or {}
            if not isinstance(payload, dict):
                raise ProtocolError("payload must be an object")
            if name == "shutdown":
                self.closed = True
                return self._event("state", seq)
            if name == "reset":
                self._reset()
                return self._event("state", seq)
            handler = self._HANDLERS.get(name)
            if handler is None:
                raise ProtocolError(f"unknown command {name!r}")
            handler(self, payload)
            return self._event("state", seq)
        except (ValueError, TypeError) as exc:
            # covers ProtocolError, SceneParseError, MirrorBoundaryError and
            # malformed payload values; the session survives all of them
            return self._event("error", seq if isinstance(seq, int) else None, str(exc))

    def handle_line(self, line: str) -> str:
        try:
            msg = json.loads(line)
            if not isinstance(msg, dict):
                raise ValueError("message must be a JSON object")
        except ValueError:
            m = _SEQ_RE.search(line)
            seq = int(m.group(1)) if m else None
            reply = self._event("error", seq, "malformed message: not a JSON object")
            return json.dumps(reply)
        return json.dumps(self.handle(msg))


def _expect_int(payload: dict, key: str) -> int:
    v = payload.get(key)
    if isinstance(v, bool) or not isinstance(v, int):
        raise ValueError(f"payload field {key!r} must be an integer")
    return v


def _expect_number(payload: dict, key: str) -> float:
    v = payload.get(key)
    if isinstance(v, bool) or not isinstance(v, (int, float)):
        raise ValueError(f"payload field {key!r} must be a number")
    return float(v)


def _expect_str(payload: dict, key: str) -> str:
    v = payload.get(key)
    if not isinstance(v, str):
        raise ValueError(f"payload field {key!r} must be a string")
    return v


def session_loop(inp: IO[str], out: IO[str]) -> None:
    """Serve one session over text streams until shutdown or EOF."""
    session = Session()
    for line in inp:
        if not line.strip():
            continue
        out.write(session.handle_line(line) + "\n")
        out.flush()
        if session.closed:
            break


def serve_tcp(port: int, host: str = "127.0.0.1") -> None:
    """One session per connection over a local TCP socket."""
    import socketserver

    class Handler(socketserver.StreamRequestHandler):
        def handle(self) -> None:  # pragma: no cover - thin socket shim
            inp = (raw.decode("utf-8") for raw in self.rfile)
            session = Session()
            for line in inp:
                if not line.strip():
                    continue
                self.wfile.write((session.handle_line(line) + "\n").encode("utf-8"))
                if session.closed:
                    break

    with socketserver.ThreadingTCPServer((host, port), Handler) as server:
        server.serve_forever()
