"""Mirror model of signed-integer arithmetic on a half-line ruler.

A plane mirror stands perpendicular to a half-line ruler at its 0 tick.  A
token
lives on the ruler (integer position >= 0) and its mirror image sits at the
opposite position.  Moving the token moves the image the opposite way, and
reading displacements on both sides mechanically reproduces signed addition
and subtraction, including all four sign rules -- the rules are derived by
replaying displacements, never hard-coded.

Classification of a step follows the distance-to-zero reading: a move that
ends farther from 0 is a "soma", closer is a "subtração", and a zero move is
the identity.  The physical token never crosses the mirror; results landing
on the negative side are read off the image of the equivalent front-side
computation.
"""

from __future__ import annotations

from dataclasses import dataclass

MINUS = "−"  # typographic minus used in rendered equations

LEFT = "left"
RIGHT = "right"
NONE = "none"

SOMA = "soma"
SUBTRACAO = "subtração"
IDENTITY = "identity"

PLUS_OP = "+"
MINUS_OP = "-"

_OPPOSITE = {LEFT: RIGHT, RIGHT: LEFT, NONE: NONE}


class MirrorBoundaryError(ValueError):
    """The move would place the physical token behind the mirror."""


def _fmt(n: int) -> str:
    return str(n) if n >= 0 else MINUS + str(-n)


def _negated_term(n: int) -> str:
    # mirrored equations negate every term and keep the sign visible;
    # terms are always ruler magnitudes (n >= 0)
    return f"({MINUS}{n})"


@dataclass(frozen=True)
class ArithmeticStep:
    """One recorded displacement of the token, with both readings."""

    start: int
    delta: int
    end: int
    front_direction: str  # LEFT / RIGHT / NONE
    classification: str  # SOMA / SUBTRACAO / IDENTITY
    mirrored_equation: str

    @property
    def image_direction(self) -> str:
        """The image always moves opposite to the token."""
        return _OPPOSITE[self.front_direction]

    @property
    def front_equation(self) -> str:
        op = PLUS_OP if self.delta >= 0 else MINUS
        return f"{self.start} {op} {abs(self.delta)} = {_fmt(self.end)}"


def _render_mirrored(start: int, delta: int, end: int) -> str:
    op = PLUS_OP if delta >= 0 else MINUS
    return f"{_negated_term(start)} {op} {_negated_term(abs(delta))} = {_fmt(-end)}"


class NumberLineScene:
    """Single-owner mutable state: token position plus the step log."""

    def __init__(self, token: int = 0):
        self._token = 0
        self.log: list[ArithmeticStep] = []
        self.place_token(token)

    @property
    def token(self) -> int:
        return self._token

    @property
    def image(self) -> int:
        return -self._token

    def place_token(self, z: int) -> "NumberLineScene":
        """Put the token on ruler tick z >= 0; the image lands on -z."""
        if z < 0:
            raise MirrorBoundaryError("a physical token cannot be placed behind the mirror")
        self._token = int(z)
        return self

    def displace(self, delta: int) -> ArithmeticStep:
        """Move the token by delta ticks and log the resulting equations.

        The front equation reads the token, the mirrored equation reads the
        image with every term negated.  Rejects moves that would push the
        token behind the mirror.
        """
        start = self._token
        end = start + int(delta)
        if end < 0:
            raise MirrorBoundaryError(
                f"moving by {delta} would push the token behind the mirror (position {end})"
            )
        if delta == 0:
            direction, kind = NONE, IDENTITY
        elif delta > 0:
            direction, kind = RIGHT, SOMA
        else:
            direction, kind = LEFT, SUBTRACAO
        step = ArithmeticStep(
            start=start,
            delta=int(delta),
            end=end,
            front_direction=direction,
            classification=kind,
            mirrored_equation=_render_mirrored(start, int(delta), end),
        )
        self._token = end
        self.log.append(step)
        return step


def sign_rule(outer: str, inner: str, magnitude: int = 1) -> tuple[str, str]:
    """Effective sign and motion direction of applying `outer` to `inner`-signed Z.

    Derived by the model, not by a lookup table: replay the outer operation
    as a front-side displacement of the given magnitude and read the motion
    direction -- on the ruler when the operand is positive, on the image
    (which always moves the opposite way) when it is negative.  Any
    magnitude >= 1 yields the same answer.
    """
    if outer not in (PLUS_OP, MINUS_OP) or inner not in (PLUS_OP, MINUS_OP):
        raise ValueError("outer and inner must be '+' or '-'")
    if magnitude < 1:
        raise ValueError("magnitude must be at least 1")
    scene = NumberLineScene(token=magnitude)
    step = scene.displace(magnitude if outer == PLUS_OP else -magnitude)
    direction = step.front_direction if inner == PLUS_OP else _OPPOSITE[step.front_direction]
    return (PLUS_OP if direction == RIGHT else MINUS_OP), direction


_RULE_CACHE: dict[tuple[str, str], bool] = {}


def _moves_right(outer: str, inner: str) -> bool:
    # derived once by replay, then reused (sign_rule is magnitude-invariant)
    try:
        return _RULE_CACHE[outer, inner]
    except KeyError:
        _, direction = sign_rule(outer, inner)
        _RULE_CACHE[outer, inner] = direction == RIGHT
        return _RULE_CACHE[outer, inner]


def eval_signed(a: int, op: str, b: int) -> int:
    """Evaluate `a op b` purely with the mirror model.

    The running value is a token magnitude plus the side it is read on
    (ruler or image).  The operation becomes a motion direction via
    sign_rule; a motion that would cross the mirror flips the reading side
    instead, keeping the token on the physical half-line.  Must equal
    built-in integer arithmetic.
    """
    if op not in (PLUS_OP, MINUS_OP):
        raise ValueError("op must be '+' or '-'")
    if b == 0:
        return a
    front = a >= 0
    t = a if front else -a
    m = b if b > 0 else -b
    motion_right = _moves_right(op, PLUS_OP if b > 0 else MINUS_OP)
    # the image traces the motion mirrored, so the token moves the other way
    if motion_right == front:
        t += m
    elif m <= t:
        t -= m
    else:
        t = m - t
        front = not front
    return t if front else -t


def midpoint_check(z: int) -> int:
    """Midpoint of token and image as read off the model: always the 0 tick."""
    scene = NumberLineScene(token=z)
    return (scene.token + scene.image) // 2


def distance_preservation(a: int, b: int) -> tuple[int, int]:
    """Tick distance of two ruler positions and of their images.

    The mirror map preserves distances, so both numbers are equal; the pair
    is returned for inspection.
    """
    if a < 0 or b < 0:
        raise ValueError("ruler positions must be non-negative")
    front = abs(a - b)
    mirrored = abs((-a) - (-b))
    assert front == mirrored
    return front, mirrored
