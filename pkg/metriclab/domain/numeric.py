"""
Aritmética en dos modos: racional exacta (fractions.Fraction sobre arrays
numpy de tipo object) y flotante de 64 bits con tolerancia TAU_EQ.
"""
from __future__ import annotations
import math
from enum import Enum
from fractions import Fraction
from typing import Annotated, Any, Iterable, Optional, Union

import numpy as np
from pydantic import BeforeValidator, PlainSerializer

TAU_EQ = 1e-9

Scalar = Union[Fraction, float]


class NumericMode(str, Enum):
    RATIONAL = "rational"
    FLOAT = "float"


def coerce_number(raw: Any) -> Scalar:
    """Convierte un valor de entrada (JSON o Python) a Fraction o float.

    Los enteros y las cadenas ("3/2", "0.25") se leen como racionales exactos;
    los float se conservan tal cual.
    """
    if isinstance(raw, bool):
        raise TypeError("booleans are not numbers here")
    if isinstance(raw, (Fraction, float)):
        return raw
    if isinstance(raw, (int, np.integer)):
        return Fraction(int(raw))
    if isinstance(raw, np.floating):
        return float(raw)
    if isinstance(raw, str):
        text = raw.strip()
        if text.lower() in ("inf", "+inf", "infinity"):
            return math.inf
        return Fraction(text)
    raise TypeError(f"cannot read {raw!r} as a number")


def serialize_number(value: Any) -> Any:
    """Racionales como cadena decimal o 'p/q'; floats como número, infinito como 'inf'."""
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        # representación decimal finita cuando existe
        den = value.denominator
        while den % 2 == 0:
            den //= 2
        while den % 5 == 0:
            den //= 5
        if den == 1:
            digits = 0
            scaled = value
            while scaled.denominator != 1:
                scaled *= 10
                digits += 1
            sign = "-" if scaled < 0 else ""
            body = str(abs(scaled.numerator)).rjust(digits + 1, "0")
            return f"{sign}{body[:-digits]}.{body[-digits:]}"
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, (float, np.floating)):
        value = float(value)
        if math.isinf(value):
            return "inf" if value > 0 else "-inf"
        return value
    return value


Number = Annotated[Any, BeforeValidator(coerce_number), PlainSerializer(serialize_number, when_used="json")]


def to_mode(value: Any, mode: NumericMode) -> Scalar:
    """Lleva un escalar al modo indicado (los float pasan a racional vía su repr decimal)."""
    value = coerce_number(value)
    if mode is NumericMode.FLOAT:
        return float(value)
    if isinstance(value, float):
        if math.isinf(value):
            return value
        return Fraction(repr(value))
    return value


def infer_mode(values: Iterable[Any]) -> NumericMode:
    for v in values:
        if isinstance(v, (float, np.floating)):
            return NumericMode.FLOAT
    return NumericMode.RATIONAL


def as_matrix(rows: Any, mode: NumericMode) -> np.ndarray:
    """Construye la matriz de distancias en el modo pedido."""
    if mode is NumericMode.FLOAT:
        return np.array([[float(coerce_number(x)) for x in row] for row in rows], dtype=float)
    data = [[to_mode(x, mode) for x in row] for row in rows]
    out = np.empty((len(data), len(data[0]) if data else 0), dtype=object)
    for i, row in enumerate(data):
        for j, x in enumerate(row):
            out[i, j] = x
    return out


def mode_of(array: np.ndarray) -> NumericMode:
    return NumericMode.RATIONAL if array.dtype == object else NumericMode.FLOAT


def tolerance(mode: NumericMode) -> float:
    return 0 if mode is NumericMode.RATIONAL else TAU_EQ


def leq(a: Any, b: Any, tol: Optional[float] = None) -> bool:
    """a ≤ b con tolerancia; por defecto exacta si ambos son racionales."""
    if tol is None:
        tol = 0 if isinstance(a, Fraction) and isinstance(b, Fraction) else TAU_EQ
    return a <= b + tol


def close(a: Any, b: Any, tol: Optional[float] = None) -> bool:
    if tol is None:
        tol = 0 if isinstance(a, Fraction) and isinstance(b, Fraction) else TAU_EQ
    if isinstance(a, float) and isinstance(b, float) and math.isinf(a) and math.isinf(b):
        return a == b
    return abs(a - b) <= tol


def half(value: Scalar) -> Scalar:
    return value / 2 if isinstance(value, Fraction) else value / 2.0


def zeros(n: int, m: int, mode: NumericMode) -> np.ndarray:
    if mode is NumericMode.FLOAT:
        return np.zeros((n, m), dtype=float)
    out = np.empty((n, m), dtype=object)
    out.fill(Fraction(0))
    return out


def freeze(array: np.ndarray) -> np.ndarray:
    array.setflags(write=False)
    return array
