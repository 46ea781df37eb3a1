"""A plane mirror is a spherical mirror whose radius ran off to infinity.

Blow up R while keeping the object fixed at p_ob = 1: the reciprocal focal
power 1/f = 2/R dies out and the image equation collapses to

    p_im = -p_ob

the virtual, same-size, mirror-symmetric image everyone knows from the
bathroom.  The sweep below shows the convergence and its 3/R error bound;
an exact ray fan off a true plane mirror lands on the mirrored point with
zero scatter.
"""

from mirrorlab import AT_INFINITY, PlaneMirror, Vec2, fan_image, plane_limit_sweep

P_OB = 1.0

print(f"object at p_ob = {P_OB}")
print(f"{'R':>12} {'p_im':>22} {'|p_im + p_ob|':>16} {'bound 3/R':>12}")
radii = [1e2, 1e4, 1e6, 1e8, AT_INFINITY]
for r, p_im in plane_limit_sweep(P_OB, radii):
    gap = abs(p_im + P_OB)
    bound = "exact" if r == AT_INFINITY else f"{3.0 / r:.1e}"
    r_label = "infinity" if r == AT_INFINITY else f"{r:.0e}"
    print(f"{r_label:>12} {p_im:>22.15f} {gap:>16.3e} {bound:>12}")

flat = PlaneMirror(Vec2(0, 0), Vec2(1, 0), extent=10.0)
obj = Vec2(1.0, 0.3)
fan = fan_image(obj, flat, n_rays=64, max_height=2.0)
print(f"\ntrue plane mirror, object {obj}:")
print(f"  fan image point  ({fan.point.x:+.15f}, {fan.point.y:+.15f})  [{fan.kind}]")
print(f"  crossing spread  {fan.spread:.3e}   (stigmatic: every pair of rays agrees)")
