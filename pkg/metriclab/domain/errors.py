"""
Jerarquía de errores del dominio.

Todas las excepciones heredan de MetricLabError (que a su vez es un ValueError,
igual que los errores de validación que lanzaban las fábricas) y exponen un
`code` estable que los controladores usan en la salida JSON de error.
"""
from __future__ import annotations
from typing import Any, Dict, Optional


class MetricLabError(ValueError):
    """Error base del dominio."""

    code: str = "metriclab_error"

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.details: Dict[str, Any] = details or {}

    def to_dict(self) -> Dict[str, Any]:
        return {"error": self.code, "message": str(self), "details": self.details}


# --- core ---------------------------------------------------------------

class NotSquare(MetricLabError):
    code = "NotSquare"


class NotSymmetric(MetricLabError):
    code = "NotSymmetric"


class NonPositiveOffDiagonal(MetricLabError):
    code = "NonPositiveOffDiagonal"


class NonZeroDiagonal(MetricLabError):
    code = "NonZeroDiagonal"


class TriangleViolation(MetricLabError):
    code = "TriangleViolation"

    def __init__(self, i: int, j: int, k: int):
        super().__init__(
            f"d[{i}][{k}] > d[{i}][{j}] + d[{j}][{k}]",
            {"i": i, "j": j, "k": k},
        )
        self.i, self.j, self.k = i, j, k


class SizeLimitExceeded(MetricLabError):
    code = "SizeLimitExceeded"


# --- distances ----------------------------------------------------------

class EmptySubset(MetricLabError):
    code = "EmptySubset"


class DimensionMismatch(MetricLabError):
    code = "DimensionMismatch"


class SizeMismatch(MetricLabError):
    code = "SizeMismatch"


class WitnessInvalid(MetricLabError):
    code = "WitnessInvalid"


class BudgetExhaustedWithoutBound(MetricLabError):
    code = "BudgetExhaustedWithoutBound"


# --- reductions ---------------------------------------------------------

class InputNotInM5(MetricLabError):
    code = "InputNotInM5"


class ClosureViolation(MetricLabError):
    code = "ClosureViolation"


class CoverageViolation(MetricLabError):
    code = "CoverageViolation"


class NonUnitVector(MetricLabError):
    code = "NonUnitVector"


class EmptyFamily(MetricLabError):
    code = "EmptyFamily"


class GadgetTooLarge(MetricLabError):
    code = "GadgetTooLarge"


class InvalidGadgetParams(MetricLabError):
    code = "InvalidGadgetParams"


# --- normlab ------------------------------------------------------------

class IndexOutOfRange(MetricLabError):
    code = "IndexOutOfRange"


class NormAxiomViolation(MetricLabError):
    code = "NormAxiomViolation"


# --- games / cli --------------------------------------------------------

class LengthMismatch(MetricLabError):
    code = "LengthMismatch"


class SizeLimit(MetricLabError):
    code = "SizeLimit"


class UnknownSuite(MetricLabError):
    code = "UnknownSuite"


class BudgetExhausted(MetricLabError):
    """Se lanza solo cuando el llamador exige un resultado exacto (--require-exact)."""

    code = "BudgetExhausted"
