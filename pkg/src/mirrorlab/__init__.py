"""mirrorlab: 2D mirror optics and the mirror model of signed arithmetic.

Exact ray tracing and closed-form paraxial theory for plane and spherical
mirrors, built to agree in the paraxial limit, plus a plane-mirror
number-line model that derives the sign rules of integer arithmetic by
moving tokens in front of a mirror.
"""

from .geometry import CoincidentLinesError, Hit, Ray, Vec2, intersect_lines, intersect_ray_circle, reflect_direction
from .imaging import (
    ApertureMissError,
    PrincipalRaySet,
    TraceImage,
    exact_focus_crossing,
    fan_image,
    principal_ray_image,
    principal_rays,
)
from .mirrors import (
    AT_INFINITY,
    BackSideArrivalError,
    Mirror,
    PlaneMirror,
    SphericalMirror,
    focal_length,
    focus_point,
    is_at_infinity,
    reflect_off,
)
from .numberline import (
    ArithmeticStep,
    MirrorBoundaryError,
    NumberLineScene,
    distance_preservation,
    eval_signed,
    midpoint_check,
    sign_rule,
)
from .paraxial import ParaxialImage, gauss_image, magnification_heights, plane_limit_sweep, triangle_image

__version__ = "0.1.0"

__all__ = [
    "AT_INFINITY",
    "ApertureMissError",
    "ArithmeticStep",
    "BackSideArrivalError",
    "CoincidentLinesError",
    "Hit",
    "Mirror",
    "MirrorBoundaryError",
    "NumberLineScene",
    "ParaxialImage",
    "PlaneMirror",
    "PrincipalRaySet",
    "Ray",
    "SphericalMirror",
    "TraceImage",
    "Vec2",
    "distance_preservation",
    "eval_signed",
    "exact_focus_crossing",
    "fan_image",
    "focal_length",
    "focus_point",
    "gauss_image",
    "intersect_lines",
    "intersect_ray_circle",
    "is_at_infinity",
    "magnification_heights",
    "midpoint_check",
    "plane_limit_sweep",
    "principal_ray_image",
    "principal_rays",
    "reflect_direction",
    "reflect_off",
    "sign_rule",
    "triangle_image",
]
