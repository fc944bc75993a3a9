"""The group ring A[G] of a finite group over GF(p) or Z/n.

Elements are dense coefficient vectors indexed by group elements. Ideals are
subspaces in reduced row-echelon form, checked for closure under the claimed
side's multiplication when they are built; anything touching ideals requires
field coefficients. The Jacobson radical comes with a certificate from one of
three strategies (see :func:`jacobson_radical`).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from . import linalg
from .algebra import DEFAULT_ENUM_CAP, FiniteAlgebra
from .coeffs import CoeffRing, LocalityWitness, gf, ring_is_local
from .errors import (
    AlgebraError,
    CharDividesOrder,
    IncompatibleElements,
    InvalidArgument,
    SizeLimitExceeded,
    Unsupported,
    UnsupportedCoefficients,
)
from .structures import (
    FiniteGroup,
    SubgroupEmbedding,
    element_order,
    is_p_group,
    normal_sylow,
    prime_factors,
)


class Side(str, Enum):
    LEFT = "left"
    RIGHT = "right"
    TWO_SIDED = "two-sided"


class QuotientCheck(str, Enum):
    DIVISION_RING = "division-ring-quotient"
    SEMISIMPLE_EXHAUSTIVE = "semisimple-quotient-exhaustive"
    STRUCTURAL_P_GROUP = "structural-p-group"
    TRACE_FORM = "trace-form-nondegenerate"


@dataclass(frozen=True)
class GroupAlgebra:
    ring: CoeffRing
    group: FiniteGroup

    @property
    def n(self) -> int:
        return self.ring.modulus

    @property
    def dim(self) -> int:
        return self.group.order

    @cached_property
    def algebra(self) -> FiniteAlgebra:
        """Structure-constant form; over Z/n the constants are still exact (entries 0/1)."""
        return FiniteAlgebra.from_group_table(self.n, self.group.array, self.group.identity)

    def require_field(self) -> int:
        if not self.ring.is_field:
            raise UnsupportedCoefficients(f"ideal computations need field coefficients, got {self.ring}")
        return self.ring.modulus

    def element(self, coeffs) -> GrElem:
        return GrElem(self, tuple(int(c) % self.n for c in coeffs))

    def zero(self) -> GrElem:
        return GrElem(self, (0,) * self.dim)

    def one(self) -> GrElem:
        return self.basis(self.group.identity)

    def basis(self, g: int | str) -> GrElem:
        g = self.group.index(g)
        v = [0] * self.dim
        v[g] = 1
        return GrElem(self, tuple(v))

    def from_terms(self, terms: Iterable[tuple[int | str, int]]) -> GrElem:
        """Build an element from (group element name or index, coefficient) pairs."""
        v = [0] * self.dim
        for g, c in terms:
            v[self.group.index(g)] += int(c)
        return self.element(v)

    def sum_of(self, elements: Iterable[int]) -> GrElem:
        """The element sum_{g in elements} g."""
        v = [0] * self.dim
        for g in elements:
            v[g] += 1
        return self.element(v)

    def norm_element(self) -> GrElem:
        return self.sum_of(range(self.dim))

    def __str__(self) -> str:
        return f"{self.ring}[{self.group}]"


@dataclass(frozen=True)
class GrElem:
    algebra: GroupAlgebra
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.algebra.dim:
            raise InvalidArgument(f"expected {self.algebra.dim} coefficients, got {len(self.coeffs)}")

    @property
    def vector(self) -> np.ndarray:
        return np.array(self.coeffs, dtype=np.int64)

    def _check(self, other: GrElem) -> None:
        if not isinstance(other, GrElem) or other.algebra != self.algebra:
            raise IncompatibleElements("elements belong to different group rings")

    def __add__(self, other: GrElem) -> GrElem:
        self._check(other)
        return self.algebra.element(np.add(self.coeffs, other.coeffs))

    def __sub__(self, other: GrElem) -> GrElem:
        self._check(other)
        return self.algebra.element(np.subtract(self.coeffs, other.coeffs))

    def __neg__(self) -> GrElem:
        return self.algebra.element([-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, (int, np.integer)):
            return self.algebra.element([c * int(other) for c in self.coeffs])
        self._check(other)
        return self.algebra.element(self.algebra.algebra.mul(self.vector, other.vector))

    def __rmul__(self, other):
        if isinstance(other, (int, np.integer)):
            return self * other
        return NotImplemented

    def __pow__(self, k: int) -> GrElem:
        out = self.algebra.one()
        for _ in range(k):
            out = out * self
        return out

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def support(self) -> list[int]:
        return [g for g, c in enumerate(self.coeffs) if c]

    def terms(self) -> list[tuple[str, int]]:
        names = self.algebra.group.names
        return [(names[g], c) for g, c in enumerate(self.coeffs) if c]

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for name, c in self.terms():
            parts.append(name if c == 1 else f"{c}*{name}")
        return " + ".join(parts)


def gr_add(x: GrElem, y: GrElem) -> GrElem:
    return x + y


def gr_mul(x: GrElem, y: GrElem) -> GrElem:
    return x * y


def gr_scale(c: int, x: GrElem) -> GrElem:
    return x * c


def augmentation(x: GrElem) -> int:
    return sum(x.coeffs) % x.algebra.n


def is_unit(x: GrElem) -> bool:
    """Invertibility of left multiplication by x.

    Over Z/n the determinant is a unit exactly when it is nonzero modulo every
    prime dividing n, so this reduces to a rank test over each GF(r).
    """
    amb = x.algebra
    mat = amb.algebra.left_matrix(x.vector)
    return all(linalg.rank(mat % r, r) == amb.dim for r in prime_factors(amb.n))


class Ideal:
    """A one- or two-sided ideal of a group algebra over a prime field.

    ``basis`` is the canonical rref matrix, so equality of ideals is equality
    of subspaces (the side is not compared). Closure under multiplication by
    the group basis on the claimed side(s) is verified on construction.
    """

    __slots__ = ("side", "algebra", "basis")

    def __init__(self, side: Side, algebra: GroupAlgebra, rows, *, check: bool = True):
        p = algebra.require_field()
        self.side = Side(side)
        self.algebra = algebra
        basis, _ = linalg.rref(rows, p, algebra.dim)
        self.basis = basis
        self.basis.setflags(write=False)
        if check and not self._closed():
            raise AlgebraError(f"span is not closed as a {self.side.value} ideal of {algebra}")

    def _closed(self) -> bool:
        alg = self.algebra.algebra
        eye = np.eye(self.dim_ambient, dtype=np.int64)
        sides = []
        if self.side in (Side.LEFT, Side.TWO_SIDED):
            sides.append(alg.span_products(eye, self.basis))
        if self.side in (Side.RIGHT, Side.TWO_SIDED):
            sides.append(alg.span_products(self.basis, eye))
        return all(self._contains_rows(rows) for rows in sides)

    def _contains_rows(self, rows: np.ndarray) -> bool:
        if rows.shape[0] == 0:
            return True
        return not linalg.reduce_mod(self.basis, rows, self.p).any()

    @property
    def p(self) -> int:
        return self.algebra.n

    @property
    def dim_ambient(self) -> int:
        return self.algebra.dim

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    def is_zero(self) -> bool:
        return self.dim == 0

    def is_whole(self) -> bool:
        return self.dim == self.dim_ambient

    def __contains__(self, x: GrElem) -> bool:
        if x.algebra != self.algebra:
            raise IncompatibleElements("element belongs to a different group ring")
        return linalg.span_contains(self.basis, x.vector, self.p)

    def contains_ideal(self, other: Ideal) -> bool:
        return self._contains_rows(other.basis)

    def gens(self) -> list[GrElem]:
        return [self.algebra.element(row) for row in self.basis]

    def elements(self):
        for coords in linalg.enumerate_vectors(self.p, self.dim):
            yield self.algebra.element(coords @ self.basis % self.p)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Ideal)
            and other.algebra == self.algebra
            and np.array_equal(other.basis, self.basis)
        )

    def __hash__(self) -> int:
        return hash((self.algebra, self.basis.tobytes()))

    def __repr__(self) -> str:
        return f"Ideal({self.side.value}, {self.algebra}, dim={self.dim})"

    def to_json(self) -> dict:
        return {"side": self.side.value, "dim": self.dim, "basis": self.basis.tolist()}


def zero_ideal(amb: GroupAlgebra, side: Side = Side.TWO_SIDED) -> Ideal:
    return Ideal(side, amb, np.zeros((0, amb.dim), dtype=np.int64))


def whole_ring(amb: GroupAlgebra) -> Ideal:
    return Ideal(Side.TWO_SIDED, amb, np.eye(amb.dim, dtype=np.int64))


def _span_growth(amb: GroupAlgebra, side: Side, rows: np.ndarray) -> np.ndarray:
    p = amb.require_field()
    alg = amb.algebra
    eye = np.eye(amb.dim, dtype=np.int64)
    current = linalg.rref(rows, p, amb.dim)[0]
    while True:
        parts = [current]
        if side in (Side.LEFT, Side.TWO_SIDED):
            parts.append(alg.span_products(eye, current))
        if side in (Side.RIGHT, Side.TWO_SIDED):
            parts.append(alg.span_products(current, eye))
        nxt = linalg.rref(np.vstack(parts), p, amb.dim)[0]
        if nxt.shape[0] == current.shape[0]:
            return current
        current = nxt


def ideal_generated(amb: GroupAlgebra, side: Side, gens: Sequence[GrElem]) -> Ideal:
    rows = np.array([g.vector for g in gens], dtype=np.int64).reshape(-1, amb.dim)
    return Ideal(side, amb, _span_growth(amb, Side(side), rows))


def omega(amb: GroupAlgebra) -> Ideal:
    """The fundamental ideal: span{g - e : g in G}."""
    amb.require_field()
    e = amb.group.identity
    rows = []
    for g in range(amb.dim):
        if g != e:
            v = np.zeros(amb.dim, dtype=np.int64)
            v[g], v[e] = 1, -1
            rows.append(v)
    return Ideal(Side.TWO_SIDED, amb, np.array(rows, dtype=np.int64).reshape(-1, amb.dim))


def omega_sub(amb: GroupAlgebra, h: SubgroupEmbedding, side: Side = Side.RIGHT) -> Ideal:
    """The ideal of the given side generated by {1 - h : h in H}."""
    amb.require_field()
    one = amb.one()
    return ideal_generated(amb, side, [one - amb.basis(x) for x in h.elements])


def _generator_rows(w) -> tuple[GroupAlgebra, np.ndarray, Side | None]:
    if isinstance(w, Ideal):
        return w.algebra, w.basis, w.side
    w = list(w)
    if not w:
        raise InvalidArgument("annihilator of an empty element list needs an ambient; pass an Ideal")
    amb = w[0].algebra
    return amb, np.array([x.vector for x in w], dtype=np.int64).reshape(-1, amb.dim), None


def left_annihilator(w) -> Ideal:
    """{x : x w = 0 for every generator w}.

    The left annihilator of a left (or two-sided) ideal is two-sided; of
    anything else it is a left ideal. The returned Ideal certifies its side.
    """
    amb, rows, side = _generator_rows(w)
    p = amb.require_field()
    alg = amb.algebra
    if rows.shape[0] == 0:
        return whole_ring(amb)
    system = np.vstack([alg.right_matrix(r) for r in rows])
    null = linalg.nullspace(system, p, amb.dim)
    out_side = Side.TWO_SIDED if side in (Side.LEFT, Side.TWO_SIDED) else Side.LEFT
    return Ideal(out_side, amb, null)


def right_annihilator(w) -> Ideal:
    """{x : w x = 0 for every generator w}; two-sided when w is a right ideal."""
    amb, rows, side = _generator_rows(w)
    p = amb.require_field()
    alg = amb.algebra
    if rows.shape[0] == 0:
        return whole_ring(amb)
    system = np.concatenate(alg.left_matrices(rows), axis=0)
    null = linalg.nullspace(system, p, amb.dim)
    out_side = Side.TWO_SIDED if side in (Side.RIGHT, Side.TWO_SIDED) else Side.RIGHT
    return Ideal(out_side, amb, null)


def nilpotency_index(ideal: Ideal) -> int | None:
    return ideal.algebra.algebra.nilpotency_index(ideal.basis)


@dataclass(frozen=True)
class RadicalCertificate:
    radical: Ideal
    nilpotency_index: int | None
    quotient_check: QuotientCheck
    strategy: str
    notes: tuple[str, ...] = ()

    def to_json(self) -> dict:
        return {
            "strategy": self.strategy,
            "quotient_check": self.quotient_check.value,
            "nilpotency_index": self.nilpotency_index,
            "radical": self.radical.to_json(),
            "notes": list(self.notes),
        }


def _radical_structural(amb: GroupAlgebra, cap: int) -> RadicalCertificate | None:
    """Candidate from the normal Sylow p-subgroup P: the ideal generated by omega(P).

    Certified by nilpotency (candidate is inside J) and semisimplicity of the
    quotient (J is inside the candidate). Returns None when G has no normal
    Sylow p-subgroup or the quotient cannot be certified within the cap.
    """
    p = amb.require_field()
    g = amb.group
    if is_p_group(g, p):
        cand = omega(amb)
        check = QuotientCheck.STRUCTURAL_P_GROUP
        notes = ["G is a p-group: candidate is the fundamental ideal"]
    else:
        sylow = normal_sylow(g, p)
        if sylow is None:
            return None
        cand = omega_sub(amb, sylow, Side.TWO_SIDED)
        check = None
        notes = [f"normal Sylow {p}-subgroup of order {sylow.order}"]
    k = nilpotency_index(cand)
    if k is None:
        raise AlgebraError(f"structural radical candidate for {amb} is not nilpotent")
    quotient, _ = amb.algebra.quotient(cand.basis)
    if quotient.dim == 1:
        notes.append("quotient has dimension 1, a field")
        check = check or QuotientCheck.DIVISION_RING
    elif quotient.trace_form_nondegenerate():
        check = QuotientCheck.TRACE_FORM
        notes.append("quotient trace form is nondegenerate")
    elif quotient.size <= cap and not quotient.radical_exhaustive(cap).shape[0]:
        check = QuotientCheck.SEMISIMPLE_EXHAUSTIVE
    else:
        return None
    return RadicalCertificate(cand, k, check, "structural", tuple(notes))


def _radical_exhaustive(amb: GroupAlgebra, cap: int) -> RadicalCertificate:
    basis = amb.algebra.radical_exhaustive(cap)
    ideal = Ideal(Side.TWO_SIDED, amb, basis)
    k = nilpotency_index(ideal)
    return RadicalCertificate(
        ideal, k, QuotientCheck.SEMISIMPLE_EXHAUSTIVE, "exhaustive",
        (f"quasi-regularity tested over all {amb.algebra.size} elements",),
    )


def _radical_trace_form(amb: GroupAlgebra) -> RadicalCertificate | None:
    # J lies in the radical of the trace form, so a nondegenerate form forces J = 0
    if not amb.algebra.trace_form_nondegenerate():
        return None
    return RadicalCertificate(
        zero_ideal(amb), 1, QuotientCheck.TRACE_FORM, "trace-form",
        ("trace form nondegenerate, so J = 0",),
    )


def jacobson_radical(amb: GroupAlgebra, strategy: str = "auto", cap: int = DEFAULT_ENUM_CAP) -> RadicalCertificate:
    """Jacobson radical of a group algebra over a prime field, with certificate.

    Strategies: ``exhaustive`` (definition, needs p^|G| <= cap), ``structural``
    (ideal generated by the augmentation ideal of a normal Sylow p-subgroup),
    ``trace-form`` (J = 0 when the trace form is nondegenerate). ``auto`` tries
    structural, then trace-form, then exhaustive.
    """
    amb.require_field()
    if strategy == "exhaustive":
        return _radical_exhaustive(amb, cap)
    if strategy == "structural":
        cert = _radical_structural(amb, cap)
        if cert is None:
            raise Unsupported(f"structural strategy does not apply to {amb}")
        return cert
    if strategy == "trace-form":
        cert = _radical_trace_form(amb)
        if cert is None:
            raise Unsupported(f"trace form of {amb} is degenerate; strategy does not apply")
        return cert
    if strategy != "auto":
        raise InvalidArgument(f"unknown radical strategy {strategy!r}")
    for attempt in (lambda: _radical_structural(amb, cap), lambda: _radical_trace_form(amb)):
        cert = attempt()
        if cert is not None:
            return cert
    if amb.algebra.size > cap:
        raise SizeLimitExceeded(f"no radical strategy applies to {amb} within cap {cap}", cap, amb.algebra.size)
    return _radical_exhaustive(amb, cap)


@dataclass(frozen=True)
class LocalityVerdict:
    local: bool
    radical: RadicalCertificate | None = None
    nonunit_witness: GrElem | None = None
    idempotent: GrElem | None = None
    coefficient_locality: LocalityWitness | None = None
    residue_verdict: LocalityVerdict | None = None
    notes: tuple[str, ...] = ()

    def __bool__(self) -> bool:
        return self.local

    def to_json(self) -> dict:
        out: dict = {"local": self.local, "notes": list(self.notes)}
        if self.radical is not None:
            out["radical"] = self.radical.to_json()
        if self.nonunit_witness is not None:
            out["nonunit_witness"] = self.nonunit_witness.terms()
        if self.idempotent is not None:
            out["idempotent"] = self.idempotent.terms()
        if self.coefficient_locality is not None:
            loc = self.coefficient_locality
            out["coefficients"] = {
                "local": loc.local, "residue_char": loc.prime,
                "maximal_generator": loc.maximal_generator,
                "nonunits": list(loc.nonunits) if loc.nonunits else None,
            }
        if self.residue_verdict is not None:
            out["residue_ring"] = self.residue_verdict.to_json()
        return out


def _negative_idempotent(amb: GroupAlgebra, cap: int) -> GrElem | None:
    try:
        return find_nontrivial_idempotent(amb, cap)
    except SizeLimitExceeded:
        return None


def is_local_ring(amb: GroupAlgebra, cap: int = DEFAULT_ENUM_CAP) -> LocalityVerdict:
    """Decide whether A[G] is local.

    Field coefficients: compute J, then look for a non-unit among the coset
    representatives outside J. Z/n coefficients: A[G] is local iff A is local
    and K[G] is local for the residue field K, because M A[G] is a nilpotent
    ideal (M = pZ/p^k is nilpotent) and so lies in the radical.
    """
    if amb.ring.is_field:
        cert = jacobson_radical(amb, cap=cap)
        witness = amb.algebra.find_nonunit_outside(cert.radical.basis, cap)
        if witness is None:
            return LocalityVerdict(True, cert, notes=("every element outside J is a unit",))
        return LocalityVerdict(
            False, cert, nonunit_witness=amb.element(witness),
            idempotent=_negative_idempotent(amb, cap),
            notes=("a non-unit lies outside J",),
        )
    loc = ring_is_local(amb.ring)
    if not loc:
        s, t = loc.nonunits
        return LocalityVerdict(
            False, coefficient_locality=loc,
            nonunit_witness=amb.one() * s,
            idempotent=amb.one() * s,
            notes=(f"coefficients not local: {s}e and {t}e are non-units summing to e; {s}e is idempotent",),
        )
    p = loc.prime
    m_elem = amb.one() * p
    k = 1
    power = m_elem
    while not power.is_zero():
        power = power * m_elem
        k += 1
    residue = is_local_ring(GroupAlgebra(gf(p), amb.group), cap)
    return LocalityVerdict(
        residue.local, coefficient_locality=loc, residue_verdict=residue,
        notes=(f"M A[G] is generated by {p}e with ({p}e)^{k} = 0, so it lies in J",),
    )


def _quotient_radical_zero(alg: FiniteAlgebra, cap: int) -> tuple[bool, str]:
    if alg.dim == 0:
        return True, "zero quotient"
    if alg.size <= cap:
        return not alg.radical_exhaustive(cap).shape[0], QuotientCheck.SEMISIMPLE_EXHAUSTIVE.value
    if alg.trace_form_nondegenerate():
        return True, QuotientCheck.TRACE_FORM.value
    raise SizeLimitExceeded(f"quotient of dimension {alg.dim} too large to check", cap, alg.size)


@dataclass(frozen=True)
class SemiprimaryVerdict:
    semiprimary: bool
    radical: RadicalCertificate
    quotient_radical_zero: bool
    quotient_check: str

    def __bool__(self) -> bool:
        return self.semiprimary

    def to_json(self) -> dict:
        return {
            "semiprimary": self.semiprimary,
            "radical": self.radical.to_json(),
            "quotient_radical_zero": self.quotient_radical_zero,
            "quotient_check": self.quotient_check,
        }


def is_semiprimary(amb: GroupAlgebra, cap: int = DEFAULT_ENUM_CAP) -> SemiprimaryVerdict:
    cert = jacobson_radical(amb, cap=cap)
    quotient, _ = amb.algebra.quotient(cert.radical.basis)
    zero, how = _quotient_radical_zero(quotient, cap)
    return SemiprimaryVerdict(cert.nilpotency_index is not None and zero, cert, zero, how)


def right_socle(amb: GroupAlgebra, cap: int = DEFAULT_ENUM_CAP) -> Ideal:
    """{x : x J = 0}, the right socle of a semiprimary ring."""
    cert = jacobson_radical(amb, cap=cap)
    ann = left_annihilator(cert.radical)
    return Ideal(Side.RIGHT, amb, ann.basis)


def frobenius_gram(amb: GroupAlgebra) -> tuple[np.ndarray, bool]:
    """Gram matrix of (x, y) -> coefficient of e in xy on the group basis, and its nondegeneracy."""
    p = amb.require_field()
    e = amb.group.identity
    gram = amb.algebra.mult[:, :, e].copy()
    return gram, linalg.rank(gram, p) == amb.dim


def double_annihilator_check(left_ideal: Ideal) -> bool:
    """Whether l(r(L)) = L."""
    return left_annihilator(right_annihilator(left_ideal)) == left_ideal


def principal_left_ideals(amb: GroupAlgebra, generators: np.ndarray | None = None) -> list[Ideal]:
    """Distinct ideals R x over the given generator vectors (default: every element).

    Rx = R(ux) for units u, so the distinct ideals are far fewer than the
    generators; they are deduplicated by their rref basis.
    """
    p = amb.require_field()
    alg = amb.algebra
    chunks = [generators] if generators is not None else alg.chunks()
    seen: dict[bytes, np.ndarray] = {}
    for xs in chunks:
        # rows of R[n]: b_j x for each basis element, spanning the left ideal
        rows = np.einsum("ni,jik->njk", np.asarray(xs, dtype=np.int64), alg.mult) % p
        reduced, ranks = linalg.batch_rref(rows, p)
        for r, k in zip(reduced, ranks):
            seen.setdefault(r[:k].tobytes() + bytes([k]), r[:k])
    return [Ideal(Side.LEFT, amb, b) for _, b in sorted(seen.items(), key=lambda kv: (kv[1].shape[0], kv[0]))]


@dataclass(frozen=True)
class CyclicIdempotent:
    element: GrElem
    complement: GrElem
    idempotent: bool
    complement_idempotent: bool
    trivial: bool


def idempotent_from_cyclic(amb: GroupAlgebra, x: int | str) -> CyclicIdempotent:
    """e_H = q^{-1} (e + x + ... + x^{q-1}) for x of order q, and 1 - e_H.

    Fails with CharDividesOrder when q is not invertible in the coefficients.
    """
    x = amb.group.index(x)
    q = element_order(amb.group, x)
    if not amb.ring.is_unit(q):
        raise CharDividesOrder(f"order {q} of {amb.group.names[x]} is not invertible in {amb.ring}")
    qinv = amb.ring.inverse(q)
    powers = [amb.group.power(x, i) for i in range(q)]
    e_h = amb.sum_of(powers) * qinv
    comp = amb.one() - e_h
    return CyclicIdempotent(
        element=e_h,
        complement=comp,
        idempotent=e_h * e_h == e_h,
        complement_idempotent=comp * comp == comp,
        trivial=e_h.is_zero() or e_h == amb.one(),
    )


def find_nontrivial_idempotent(amb: GroupAlgebra, cap: int = DEFAULT_ENUM_CAP) -> GrElem | None:
    """An idempotent other than 0 and 1, or None when there is none.

    First tries e_H for the first element of prime order r with r invertible
    in A (certified by squaring). Otherwise searches exhaustively and returns
    the lexicographically first one, so None is only ever an exhaustive answer.
    """
    for x in range(amb.dim):
        q = element_order(amb.group, x)
        for r in prime_factors(q):
            if amb.ring.is_unit(r):
                ci = idempotent_from_cyclic(amb, amb.group.power(x, q // r))
                if ci.idempotent and not ci.trivial:
                    return ci.element
    found = amb.algebra.find_idempotent(cap)
    return None if found is None else amb.element(found)


def annihilator_witness(amb: GroupAlgebra, h: SubgroupEmbedding) -> tuple[Ideal, GrElem, bool]:
    """l(omega(H)) for the right ideal omega(H), the element sum_{h in H} h, and whether it lies inside."""
    ann = left_annihilator(omega_sub(amb, h, Side.RIGHT))
    s = amb.sum_of(h.elements)
    return ann, s, s in ann
