"""Exception hierarchy shared by every module.

Each class carries a short machine-readable ``code`` so the CLI and JSON
reports can name the failure without parsing messages.
"""

from __future__ import annotations


class AlgebraError(Exception):
    code = "algebra-error"


class InvalidArgument(AlgebraError, ValueError):
    code = "invalid-argument"


class TableNotAGroup(AlgebraError, ValueError):
    code = "table-not-a-group"

    def __init__(self, message: str, triple: tuple[int, ...] | None = None):
        super().__init__(message)
        self.triple = triple


class Unsupported(AlgebraError):
    code = "unsupported"


class UnsupportedCoefficients(Unsupported):
    code = "unsupported-coefficients"


class NotLocal(AlgebraError):
    code = "not-local"


class NotAUnit(AlgebraError, ZeroDivisionError):
    code = "not-a-unit"


class IncompatibleElements(AlgebraError, TypeError):
    code = "incompatible-elements"


class SizeLimitExceeded(AlgebraError):
    code = "size-limit-exceeded"

    def __init__(self, message: str, cap: int, required: int | None = None):
        super().__init__(message)
        self.cap = cap
        self.required = required


class CharDividesOrder(AlgebraError):
    code = "char-divides-order"


class InvalidInstance(AlgebraError, ValueError):
    code = "invalid-instance"


class ZeroElement(AlgebraError, ValueError):
    code = "zero-element"


class WitnessSearchExhausted(AlgebraError):
    code = "witness-search-exhausted"

    def __init__(self, message: str, diagnostics: dict | None = None):
        super().__init__(message)
        self.diagnostics = diagnostics or {}


class ParseError(AlgebraError, ValueError):
    code = "parse-error"

    def __init__(self, message: str, text: str = "", position: int = 0):
        super().__init__(f"{message} at position {position}: {text!r}")
        self.text = text
        self.position = position
