"""Deriving the sign rules with a ruler and a plane mirror.

Stand a plane mirror on the 0 tick of a ruler.  A token at tick Z has its
image at the opposite position -Z, and whenever the token moves, the image
moves the opposite way.  Reading every front-side displacement together
with its mirrored reading mechanically produces signed arithmetic -- the
four sign rules drop out of the model instead of being memorized.
"""

from mirrorlab import NumberLineScene, distance_preservation, eval_signed, midpoint_check, sign_rule

# --- move a token, read both sides ------------------------------------------
scene = NumberLineScene(token=4)
print(f"token on {scene.token}, image on {scene.image}  (midpoint {midpoint_check(4)})")

step = scene.displace(+5)
print(f"\nmove right by 5:   {step.front_equation}")
print(f"mirrored reading:  {step.mirrored_equation}   [{step.classification}]")
print(f"token went {step.front_direction}, image went {step.image_direction}")

scene.place_token(7)
step = scene.displace(-5)
print(f"\nmove left by 5:    {step.front_equation}")
print(f"mirrored reading:  {step.mirrored_equation}   [{step.classification}]")

# --- the four sign rules, replayed rather than recited ------------------------
print("\nsign rules derived by replaying displacements:")
for outer in "+-":
    for inner in "+-":
        sign, direction = sign_rule(outer, inner)
        print(f"  {outer}({inner}Z)  ->  {sign}Z   (motion {direction})")

# --- arithmetic spot checks against the machine ---------------------------------
print("\nmirror-model arithmetic vs built-in integers:")
for a, op, b in ((-4, "+", -5), (-7, "-", -5), (3, "-", 5), (-3, "+", 5)):
    got = eval_signed(a, op, b)
    assert got == (a + b if op == "+" else a - b)
    print(f"  ({a}) {op} ({b}) = {got}")

front, mirrored = distance_preservation(5, 3)
print(f"\ndistances survive the mirror: |5-3| = {front} on the ruler, {mirrored} in the image")
