import math
from fractions import Fraction

import pytest

from metriclab.domain.numeric import (
    NumericMode,
    close,
    coerce_number,
    half,
    leq,
    serialize_number,
    to_mode,
)


@pytest.mark.parametrize(
    "raw, expected",
    [(3, Fraction(3)), ("3/2", Fraction(3, 2)), ("0.25", Fraction(1, 4)), (0.5, 0.5)],
)
def test_coerce_number(raw, expected):
    value = coerce_number(raw)
    assert value == expected
    assert type(value) is type(expected)


def test_coerce_rejects_booleans():
    with pytest.raises(TypeError):
        coerce_number(True)


def test_coerce_reads_infinity():
    assert coerce_number("inf") == math.inf


@pytest.mark.parametrize(
    "value, text",
    [
        (Fraction(2), "2"),
        (Fraction(3, 2), "1.5"),
        (Fraction(1, 20), "0.05"),
        (Fraction(-1, 4), "-0.25"),
        (Fraction(1, 3), "1/3"),
        (math.inf, "inf"),
        (0.125, 0.125),
    ],
)
def test_serialize_number(value, text):
    assert serialize_number(value) == text


def test_to_mode_between_modes():
    assert to_mode(Fraction(1, 4), NumericMode.FLOAT) == 0.25
    assert to_mode(0.1, NumericMode.RATIONAL) == Fraction(1, 10)
    assert to_mode(math.inf, NumericMode.RATIONAL) == math.inf


def test_comparisons_are_exact_for_rationals():
    tiny = Fraction(1, 10**12)
    assert not leq(Fraction(1) + tiny, Fraction(1))
    assert leq(1.0 + 1e-12, 1.0)
    assert not close(Fraction(1), Fraction(1) + tiny)
    assert close(math.inf, math.inf)


def test_half_keeps_the_mode():
    assert half(Fraction(3)) == Fraction(3, 2)
    assert isinstance(half(3.0), float)
