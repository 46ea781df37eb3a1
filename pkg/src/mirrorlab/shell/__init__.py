"""Artifact shell: scene files, CLI, SVG output and the session protocol."""

from .cli import cli_dispatch, main
from .protocol import PROTOCOL_VERSION, Session, session_loop
from .scene import (
    MirrorSpec,
    ObjectSpec,
    SceneDoc,
    SceneOptions,
    SceneParseError,
    parse_scene,
    serialize_scene,
)
from .svg import render_scene

__all__ = [
    "MirrorSpec",
    "ObjectSpec",
    "PROTOCOL_VERSION",
    "SceneDoc",
    "SceneOptions",
    "SceneParseError",
    "Session",
    "cli_dispatch",
    "main",
    "parse_scene",
    "render_scene",
    "serialize_scene",
    "session_loop",
]
