"""Emit the classic mirror diagrams as SVG files.

Renders the three bundled scenes: a concave mirror forming a real inverted
image (solid crossing in front of the face), a convex mirror whose diverging
reflections only cross on their dashed backward extensions (virtual image),
and a plane mirror with its mirror-symmetric virtual image.  Files land in
the working directory.
"""

from pathlib import Path

from mirrorlab.shell.scene import parse_scene
from mirrorlab.shell.svg import render_scene

FIXTURES = Path(__file__).parent.parent / "tests" / "fixtures"

for name in ("concave_f1", "convex_bench", "plane_ruler"):
    doc = parse_scene((FIXTURES / f"{name}.scene").read_text())
    out = Path(f"{name}.svg")
    out.write_text(render_scene(doc))
    print(f"wrote {out}   ({out.stat().st_size} bytes)")

print("\nOpen them in a browser: O marks the vertex, C the curvature center,")
print("F the focus; dashed orange lines are backward extensions behind the face.")
