"""Number-line mirror model tests: the sign rules as theorems."""

import random

import pytest
from hypothesis import given, strategies as st

from mirrorlab.numberline import (
    IDENTITY,
    LEFT,
    NONE,
    RIGHT,
    SOMA,
    SUBTRACAO,
    ArithmeticStep,
    MirrorBoundaryError,
    NumberLineScene,
    distance_preservation,
    eval_signed,
    midpoint_check,
    sign_rule,
)


# --- placing and displacing ------------------------------------------------


def test_place_token_pairs_token_with_opposite_image():
    scene = NumberLineScene()
    scene.place_token(4)
    assert scene.token == 4 and scene.image == -4
    scene.place_token(0)
    assert scene.token == 0 and scene.image == 0
    scene.place_token(7)
    assert scene.token == 7 and scene.image == -7


def test_place_token_rejects_negative_positions():
    with pytest.raises(MirrorBoundaryError):
        NumberLineScene().place_token(-1)


def test_displace_sum():
    scene = NumberLineScene(token=4)
    step = scene.displace(5)
    assert step == ArithmeticStep(4, 5, 9, RIGHT, SOMA, "(−4) + (−5) = −9")
    assert step.front_equation == "4 + 5 = 9"
    assert scene.token == 9 and scene.image == -9


def test_displace_subtraction():
    scene = NumberLineScene(token=7)
    step = scene.displace(-5)
    assert step.end == 2
    assert step.front_direction == LEFT
    assert step.classification == SUBTRACAO
    assert step.front_equation == "7 − 5 = 2"
    assert step.mirrored_equation == "(−7) − (−5) = −2"


def test_displace_identity():
    step = NumberLineScene(token=3).displace(0)
    assert step.classification == IDENTITY
    assert step.front_direction == NONE
    assert step.image_direction == NONE


def test_displace_to_zero_counts_as_subtraction():
    step = NumberLineScene(token=5).displace(-5)
    assert step.classification == SUBTRACAO
    assert step.end == 0


def test_displace_rejects_crossing_the_mirror():
    scene = NumberLineScene(token=3)
    with pytest.raises(MirrorBoundaryError):
        scene.displace(-4)
    assert scene.token == 3  # rejected move leaves the scene unchanged
    assert scene.log == []


def test_log_records_every_step():
    scene = NumberLineScene(token=1)
    scene.displace(2)
    scene.displace(-1)
    assert [s.end for s in scene.log] == [3, 2]


@given(st.integers(0, 10**6), st.integers(-10**6, 10**6))
def test_opposite_motion_invariant(start, delta):
    scene = NumberLineScene(token=start)
    if start + delta < 0:
        with pytest.raises(MirrorBoundaryError):
            scene.displace(delta)
        return
    step = scene.displace(delta)
    assert step.end == step.start + step.delta
    assert scene.image == -scene.token
    pairs = {RIGHT: LEFT, LEFT: RIGHT, NONE: NONE}
    assert step.image_direction == pairs[step.front_direction]


@given(st.integers(0, 10**6), st.integers(-10**6, 10**6))
def test_classification_symmetry(start, delta):
    # a soma on the front reads as a soma in the mirror too: both sides end
    # farther from zero (and dually for subtraction)
    if start + delta < 0:
        return
    step = NumberLineScene(token=start).displace(delta)
    front_moved = abs(step.end) - abs(step.start)
    image_moved = abs(-step.end) - abs(-step.start)
    assert (front_moved > 0) == (image_moved > 0)
    if step.classification == SOMA:
        assert front_moved > 0
    elif step.classification == SUBTRACAO:
        assert front_moved < 0
    else:
        assert step.delta == 0


# --- sign_rule ----------------------------------------------------------------


def test_the_four_identities():
    assert sign_rule("+", "+") == ("+", RIGHT)
    assert sign_rule("-", "-") == ("+", RIGHT)
    assert sign_rule("+", "-") == ("-", LEFT)
    assert sign_rule("-", "+") == ("-", LEFT)


def test_sign_rule_magnitude_invariance():
    for z in range(1, 101):
        for outer in "+-":
            for inner in "+-":
                assert sign_rule(outer, inner, magnitude=z) == sign_rule(outer, inner)


def test_sign_rule_validation():
    with pytest.raises(ValueError):
        sign_rule("*", "+")
    with pytest.raises(ValueError):
        sign_rule("+", "+", magnitude=0)


# --- midpoint and distances ------------------------------------------------------


def test_midpoint_examples():
    assert midpoint_check(5) == 0
    assert midpoint_check(0) == 0


def test_midpoint_exhaustive_sweep():
    assert all(midpoint_check(z) == 0 for z in range(0, 10**6 + 1, 997))
    assert all(midpoint_check(z) == 0 for z in range(0, 2001))


def test_distance_preservation_examples():
    assert distance_preservation(5, 3) == (2, 2)
    assert distance_preservation(4, 4) == (0, 0)


def test_distance_preservation_random_sweep():
    rng = random.Random(60)
    for _ in range(10_000):
        a, b = rng.randint(0, 10**6), rng.randint(0, 10**6)
        front, mirrored = distance_preservation(a, b)
        assert front == mirrored == abs(a - b)


def test_distance_preservation_rejects_negative():
    with pytest.raises(ValueError):
        distance_preservation(-1, 3)


@given(st.integers(-10**9, 10**9), st.integers(-10**9, 10**9))
def test_mirror_map_is_an_isometric_involution(a, b):
    assert abs((-a) - (-b)) == abs(a - b)
    assert -(-a) == a


# --- eval_signed -------------------------------------------------------------------


def test_mirrored_sum_and_subtraction_examples():
    assert eval_signed(-4, "+", -5) == -9
    assert eval_signed(-7, "-", -5) == -2


def test_eval_crosses_zero_by_flipping_the_reading_side():
    assert eval_signed(3, "-", 5) == -2
    assert eval_signed(-3, "+", 5) == 2


def test_eval_rejects_unknown_op():
    with pytest.raises(ValueError):
        eval_signed(1, "*", 2)


@given(st.integers(-10**6, 10**6), st.sampled_from(["+", "-"]), st.integers(-10**6, 10**6))
def test_eval_matches_builtin_arithmetic(a, op, b):
    expected = a + b if op == "+" else a - b
    assert eval_signed(a, op, b) == expected
