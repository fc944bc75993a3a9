"""Laurent polynomials over GF(p): the group ring of an infinite cyclic group.

A Laurent polynomial over a field is a unit exactly when it is a nonzero
monomial. If x has at least two terms, its lowest and highest terms multiply
against those of any candidate inverse y to give products of degree
min(x)+min(y) < max(x)+max(y), both of which survive, so x*y has at least
two terms and cannot be 1. :func:`lp_is_unit` reports exactly these degrees.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

import numpy as np

from . import linalg
from .coeffs import CoeffRing, gf
from .errors import IncompatibleElements, ParseError, UnsupportedCoefficients


@dataclass(frozen=True)
class LaurentPoly:
    field: CoeffRing
    terms: tuple[tuple[int, int], ...]  # sorted (degree, nonzero coefficient)

    @classmethod
    def of(cls, field: CoeffRing, mapping: dict[int, int]) -> LaurentPoly:
        if not field.is_field:
            raise UnsupportedCoefficients(f"Laurent polynomials need a prime field, got {field}")
        clean = {}
        for k, c in mapping.items():
            c %= field.modulus
            if c:
                clean[int(k)] = c
        return cls(field, tuple(sorted(clean.items())))

    @classmethod
    def monomial(cls, field: CoeffRing, coeff: int, degree: int) -> LaurentPoly:
        return cls.of(field, {degree: coeff})

    @property
    def mapping(self) -> dict[int, int]:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def min_degree(self) -> int | None:
        return self.terms[0][0] if self.terms else None

    def max_degree(self) -> int | None:
        return self.terms[-1][0] if self.terms else None

    def _check(self, other: LaurentPoly) -> None:
        if other.field != self.field:
            raise IncompatibleElements(f"{self.field} vs {other.field}")

    def __add__(self, other: LaurentPoly) -> LaurentPoly:
        return lp_add(self, other)

    def __mul__(self, other: LaurentPoly) -> LaurentPoly:
        return lp_mul(self, other)

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly.of(self.field, {k: -c for k, c in self.terms})

    def __sub__(self, other: LaurentPoly) -> LaurentPoly:
        return self + (-other)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for k, c in self.terms:
            mono = "1" if k == 0 else ("x" if k == 1 else f"x^{k}")
            out.append(mono if c == 1 and k != 0 else (str(c) if k == 0 else f"{c}*{mono}"))
        return " + ".join(out)


def lp_add(x: LaurentPoly, y: LaurentPoly) -> LaurentPoly:
    x._check(y)
    out = x.mapping
    for k, c in y.terms:
        out[k] = out.get(k, 0) + c
    return LaurentPoly.of(x.field, out)


def lp_mul(x: LaurentPoly, y: LaurentPoly) -> LaurentPoly:
    x._check(y)
    out: dict[int, int] = {}
    for k1, c1 in x.terms:
        for k2, c2 in y.terms:
            out[k1 + k2] = out.get(k1 + k2, 0) + c1 * c2
    return LaurentPoly.of(x.field, out)


@dataclass(frozen=True)
class UnitCertificate:
    unit: bool
    support_size: int
    min_term: tuple[int, int] | None
    max_term: tuple[int, int] | None
    inverse: LaurentPoly | None
    reason: str

    def to_json(self) -> dict:
        return {
            "unit": self.unit,
            "support_size": self.support_size,
            "min_term": list(self.min_term) if self.min_term else None,
            "max_term": list(self.max_term) if self.max_term else None,
            "inverse": str(self.inverse) if self.inverse is not None else None,
            "reason": self.reason,
        }


def lp_is_unit(x: LaurentPoly) -> UnitCertificate:
    n = len(x.terms)
    if n == 0:
        return UnitCertificate(False, 0, None, None, None, "zero is not a unit")
    lo, hi = x.terms[0], x.terms[-1]
    if n == 1:
        k, c = lo
        inv = LaurentPoly.monomial(x.field, x.field.inverse(c), -k)
        if lp_mul(x, inv) != LaurentPoly.monomial(x.field, 1, 0):
            raise AssertionError("monomial inverse failed to multiply to 1")
        return UnitCertificate(True, 1, lo, hi, inv, f"monomial {c}*x^{k} has inverse {inv}")
    reason = (
        f"lowest term x^{lo[0]} and highest term x^{hi[0]} differ; for any nonzero y the product "
        f"has terms of degree {lo[0]}+min(y) and {hi[0]}+max(y), which are distinct and nonzero, "
        "so the product is never 1"
    )
    return UnitCertificate(False, n, lo, hi, None, reason)


def inverse_in_window(x: LaurentPoly, lo: int = -8, hi: int = 8) -> LaurentPoly | None:
    """Search for y supported in degrees [lo, hi] with x*y = 1.

    Solves the linear system on the coefficients of y over GF(p), so the whole
    p^(hi-lo+1) window is covered without enumerating it.
    """
    p = x.field.modulus
    if x.is_zero():
        return None
    width = hi - lo + 1
    dmin = x.min_degree() + lo
    dmax = x.max_degree() + hi
    rows = dmax - dmin + 1
    mat = np.zeros((rows, width), dtype=np.int64)
    for j in range(width):
        for k, c in x.terms:
            mat[k + lo + j - dmin, j] = c
    rhs = np.zeros(rows, dtype=np.int64)
    if not dmin <= 0 <= dmax:
        return None
    rhs[-dmin] = 1
    sol = linalg.solve(mat, rhs, p)
    if sol is None:
        return None
    return LaurentPoly.of(x.field, {lo + j: int(c) for j, c in enumerate(sol)})


_TERM = re.compile(r"\s*([+-])?\s*(\d+)?\s*(\*)?\s*(x(?:\s*\^\s*(-?\d+))?)?\s*")


def parse_laurent(text: str, p: int) -> LaurentPoly:
    """Parse expressions like ``1 + x - x^2`` or ``2x^-3 + 4``."""
    field = gf(p)
    out: dict[int, int] = {}
    pos = 0
    first = True
    stripped = text.strip()
    if not stripped:
        raise ParseError("empty polynomial", text, 0)
    while pos < len(text):
        if not text[pos:].strip():
            break
        m = _TERM.match(text, pos)
        sign, digits, star, mono, exp = m.groups()
        if not digits and not mono:
            raise ParseError("expected a term", text, pos)
        if sign is None and not first:
            raise ParseError("expected '+' or '-' between terms", text, pos)
        if star and not mono:
            raise ParseError("expected x after '*'", text, m.end())
        if star and not digits:
            raise ParseError("expected a coefficient before '*'", text, m.start(3))
        coeff = int(digits) if digits else 1
        if sign == "-":
            coeff = -coeff
        degree = 0 if not mono else (int(exp) if exp is not None else 1)
        out[degree] = out.get(degree, 0) + coeff
        pos = m.end()
        first = False
    return LaurentPoly.of(field, out)
