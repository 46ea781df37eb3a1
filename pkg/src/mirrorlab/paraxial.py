"""Closed-form paraxial mirror theory.

Axial positions are signed reals measured from the vertex O along the
principal axis: positive in front of the mirrored face, negative behind.
math.inf serves as the explicit at-infinity marker, both for the plane
mirror focal length and for the image position when the object sits exactly
on the focal point (rays emerge parallel).

The image equation solved here is  1/p_ob + 1/p_im = 1/f  with f = R/2.
Besides the direct reciprocal solve, triangle_image re-derives the image
position from the two similar-triangle relations of the two-ray image
construction (chief ray through the vertex, axis-parallel ray through the
focus); all routes must agree, which is exactly the classical derivation
replayed numerically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .mirrors import AT_INFINITY, is_at_infinity

REAL = "real"
VIRTUAL = "virtual"
IMAGE_AT_INFINITY = "at-infinity"

EQ_CHIEF = "eq7"  # height ratio from the vertex-reflected (chief) ray
EQ_FOCAL = "eq8"  # height ratio from the focus-crossing reflected ray


@dataclass(frozen=True)
class ParaxialImage:
    """Solved image: signed position, signed magnification, classification.

    magnification is -p_im/p_ob (negative = inverted image); it is None when
    the image is at infinity.
    """

    p_im: float
    magnification: float | None
    kind: str

    @property
    def is_real(self) -> bool:
        return self.kind == REAL

    @property
    def is_virtual(self) -> bool:
        return self.kind == VIRTUAL


def _check_object_position(p_ob: float) -> None:
    if not (math.isfinite(p_ob) and p_ob > 0.0):
        raise ValueError("object position must be finite and in front of the face (p_ob > 0)")


def _check_focal(f: float) -> None:
    if math.isnan(f) or f == 0.0:
        raise ValueError("focal length must be nonzero (use AT_INFINITY for plane mirrors)")


def gauss_image(p_ob: float, f: float) -> ParaxialImage:
    """Solve the mirror image equation for a frontal object.

    p_ob == f yields the explicit at-infinity image rather than an error:
    that configuration is the physically meaningful headlight setup.
    """
    _check_object_position(p_ob)
    _check_focal(f)
    if is_at_infinity(f):
        p_im = -p_ob  # plane-mirror limit, exact
    else:
        if p_ob == f:
            return ParaxialImage(AT_INFINITY, None, IMAGE_AT_INFINITY)
        inv = 1.0 / f - 1.0 / p_ob
        if inv == 0.0:  # reciprocals collide although p_ob != f
            return ParaxialImage(AT_INFINITY, None, IMAGE_AT_INFINITY)
        p_im = 1.0 / inv
    kind = REAL if p_im > 0.0 else VIRTUAL
    return ParaxialImage(p_im, -p_im / p_ob, kind)


def plane_limit_sweep(p_ob: float, radii: list[float]) -> list[tuple[float, float]]:
    """Image positions of concave mirrors with growing radii, f = R/2.

    As R grows the sequence converges to -p_ob, the plane-mirror image.
    Radii at or below the 2*p_ob threshold are accepted too (the image is
    then real instead of virtual; the sign flip is visible in the output).
    math.inf is a valid radius and gives exactly -p_ob.
    """
    _check_object_position(p_ob)
    out: list[tuple[float, float]] = []
    for r in radii:
        if math.isnan(r) or r <= 0.0:
            raise ValueError(f"radius must be positive, got {r!r}")
        out.append((r, gauss_image(p_ob, r / 2.0).p_im))
    return out


def triangle_image(p_ob: float, f: float, via: str) -> float:
    """Image position from the two-ray similar-triangle relations.

    The construction equates the image-to-object height ratio seen by the
    chief ray, |d_im|/d_ob = p_im/p_ob, with the one seen by the
    focus-crossing ray, |d_im|/d_ob = (p_im - f)/f.  `via` selects which
    algebraic elimination order is used:

      - EQ_CHIEF ("eq7"): cross-multiplied product form,
            p_im = p_ob * f / (p_ob - f)
      - EQ_FOCAL ("eq8"): sum-over-product (reciprocal) form,
            p_im = p_ob / (p_ob / f - 1)

    Both must agree with gauss_image to rounding error; the two routes use
    genuinely different floating-point expressions.
    """
    _check_object_position(p_ob)
    _check_focal(f)
    if is_at_infinity(f):
        raise ValueError("triangle relations need a finite focal length")
    if p_ob == f:
        raise ValueError("object on the focal point: image at infinity")
    if via == EQ_CHIEF:
        return p_ob * f / (p_ob - f)
    if via == EQ_FOCAL:
        return p_ob / (p_ob / f - 1.0)
    raise ValueError(f"via must be {EQ_CHIEF!r} or {EQ_FOCAL!r}, got {via!r}")


def magnification_heights(d_ob: float, p_ob: float, p_im: float) -> float:
    """Unsigned image height from the height/distance proportion.

    d_im = d_ob * |p_im| / p_ob.  The sign (image inversion) is carried by
    ParaxialImage.magnification, not by this ratio.
    """
    if not (math.isfinite(d_ob) and d_ob > 0.0):
        raise ValueError("object height must be positive")
    _check_object_position(p_ob)
    if not math.isfinite(p_im) or p_im == 0.0:
        raise ValueError("image position must be finite and nonzero")
    return d_ob * abs(p_im) / p_ob
