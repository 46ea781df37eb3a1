"""Command-line front end.

Subcommands:

  solve   paraxial image from f (or radius+orientation) and the object position
  trace   principal-ray or fan image for a scene file
  limit   growing-radius sweep showing the plane-mirror limit
  arith   number-line steps with front and mirrored equations
  render  SVG diagram of a scene
  serve   interactive session protocol (stdio by default, or TCP)

solve/trace/limit write machine-readable line-delimited JSON records to
stdout; arith prints the equations as text.  Exit codes: 0 success, 1 domain
or validation error (diagnostic on stderr), 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from ..imaging import EXACT, IDEAL, fan_image, principal_ray_image
from ..mirrors import AT_INFINITY, SphericalMirror, axial_of, is_at_infinity, transverse_of
from ..numberline import NumberLineScene
from ..paraxial import gauss_image, magnification_heights, plane_limit_sweep
from .protocol import FAN, serve_tcp, session_loop
from .scene import PLANE, SceneDoc, parse_scene
from .svg import render_scene


def _emit(record: dict) -> None:
    sys.stdout.write(json.dumps(record) + "\n")


def _num_or_marker(v: float) -> object:
    return "at-infinity" if is_at_infinity(v) else v


def _load_scene(path: str) -> SceneDoc:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_scene(fh.read())


def _cmd_solve(args) -> int:
    if args.f is not None:
        f = args.f
    else:
        if args.orientation is None:
            raise ValueError("give --f, or --orientation (with --radius for spherical)")
        if args.orientation == PLANE:
            f = AT_INFINITY
        else:
            if args.radius is None:
                raise ValueError("spherical mirrors need --radius")
            f = args.radius / 2.0 if args.orientation == "concave" else -args.radius / 2.0
    img = gauss_image(args.p_ob, f)
    record = {
        "p_ob": args.p_ob,
        "f": _num_or_marker(f),
        "p_im": _num_or_marker(img.p_im),
        "magnification": img.magnification,
        "kind": img.kind,
    }
    if args.d_ob is not None and img.kind != "at-infinity":
        record["d_im"] = magnification_heights(args.d_ob, args.p_ob, img.p_im)
    _emit(record)
    return 0


def _cmd_trace(args) -> int:
    doc = _load_scene(args.scene)
    spec = doc.mirror(args.mirror)
    mirror = spec.build()
    obj_spec = doc.object(args.object)
    obj = obj_spec.resolve(mirror)
    if args.mode in (IDEAL, EXACT):
        if not isinstance(mirror, SphericalMirror):
            raise ValueError("principal-ray modes need a spherical mirror; use --mode fan")
        image = principal_ray_image(obj, mirror, mode=args.mode)
    else:
        max_height = args.max_height if args.max_height is not None else doc.options.max_height
        if max_height is None:
            raise ValueError("fan tracing needs max_height (scene options or --max-height)")
        image = fan_image(
            obj,
            mirror,
            n_rays=doc.options.fan_rays,
            max_height=max_height,
            crossing_tol=doc.options.crossing_tol,
        )
        if image is None:
            raise ValueError("fan produced no image (aperture starvation or mixed convergence)")
    _emit(
        {
            "mirror": spec.ident,
            "object": obj_spec.ident,
            "mode": args.mode,
            "point": None if image.point is None else [image.point.x, image.point.y],
            "axial": None if image.point is None else axial_of(mirror, image.point),
            "height": None if image.point is None else transverse_of(mirror, image.point),
            "kind": image.kind,
            "spread": image.spread,
            "rays_used": image.rays_used,
        }
    )
    return 0


def _cmd_limit(args) -> int:
    radii = []
    for tok in args.radii.split(","):
        tok = tok.strip()
        if not tok:
            continue
        radii.append(AT_INFINITY if tok in ("inf", "infinity") else float(tok))
    for r, p_im in plane_limit_sweep(args.p_ob, radii):
        _emit(
            {
                "radius": _num_or_marker(r),
                "p_im": p_im,
                "kind": "virtual" if p_im < 0 else "real",
                "gap_to_plane_image": abs(p_im + args.p_ob),
            }
        )
    return 0


def _cmd_arith(args) -> int:
    scene = NumberLineScene(token=args.start)
    for delta in args.delta:
        step = scene.displace(delta)
        print(step.front_equation)
        print(step.mirrored_equation)
    return 0


def _cmd_render(args) -> int:
    doc = _load_scene(args.scene)
    svg = render_scene(doc, mirror_id=args.mirror, object_id=args.object)
    if args.output is None or args.output == "-":
        sys.stdout.write(svg)
    else:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(svg)
    return 0


def _cmd_serve(args) -> int:
    if args.port is not None:
        serve_tcp(args.port)
    else:
        session_loop(sys.stdin, sys.stdout)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mirrorlab", description=__doc__.strip().splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="paraxial image for one object position")
    p.add_argument("--f", type=float, help="signed focal length (omit for --orientation)")
    p.add_argument("--radius", type=float, help="mirror radius R (f = R/2 signed by orientation)")
    p.add_argument("--orientation", choices=["concave", "convex", PLANE])
    p.add_argument("--p-ob", type=float, required=True, dest="p_ob", help="object position > 0")
    p.add_argument("--d-ob", type=float, dest="d_ob", help="object height (adds d_im to the record)")
    p.set_defaults(run=_cmd_solve)

    p = sub.add_parser("trace", help="ray-construction image for a scene file")
    p.add_argument("--scene", required=True)
    p.add_argument("--mode", choices=[IDEAL, EXACT, FAN], default=IDEAL)
    p.add_argument("--mirror", help="mirror id (defaults to the only one)")
    p.add_argument("--object", help="object id (defaults to the only one)")
    p.add_argument("--max-height", type=float, dest="max_height", help="fan aim half-span")
    p.set_defaults(run=_cmd_trace)

    p = sub.add_parser("limit", help="plane-mirror limit sweep over radii")
    p.add_argument("--p-ob", type=float, required=True, dest="p_ob")
    p.add_argument("--radii", required=True, help="comma-separated radii, e.g. 1e2,1e4,inf")
    p.set_defaults(run=_cmd_limit)

    p = sub.add_parser("arith", help="number-line displacements with mirrored equations")
    p.add_argument("--start", type=int, required=True, help="initial token position >= 0")
    p.add_argument(
        "--delta", type=int, required=True, action="append", help="displacement (repeatable)"
    )
    p.set_defaults(run=_cmd_arith)

    p = sub.add_parser("render", help="SVG diagram of a scene")
    p.add_argument("--scene", required=True)
    p.add_argument("--mirror", help="mirror id (defaults to the only one)")
    p.add_argument("--object", help="object id (defaults to the only one)")
    p.add_argument("-o", "--output", help="output path (default stdout)")
    p.set_defaults(run=_cmd_render)

    p = sub.add_parser("serve", help="interactive session protocol")
    p.add_argument("--port", type=int, help="serve TCP on this port instead of stdio")
    p.set_defaults(run=_cmd_serve)

    return parser


def cli_dispatch(argv: list[str]) -> int:
    """Run one CLI invocation; returns the process exit code."""
    args = _build_parser().parse_args(argv)
    try:
        return args.run(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(cli_dispatch(sys.argv[1:]))


if __name__ == "__main__":
    main()
