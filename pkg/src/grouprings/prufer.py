"""The quasi-cyclic group Z(p^inf), its group ring, and the Hom-module B.

The group is modelled additively as rationals with p-power denominators
modulo 1. Translation from multiplicative notation:

    ========================  ===============================
    multiplicative            here
    ========================  ===============================
    g * h                     g + h
    g^-1                      -g
    e                         identity(p) (0 / 1)
    x_i                       generator(p, i) = 1 / p^(i+1)
    x_i^l                     l * generator(p, i)
    G_i = <x_i>               {g : g.level <= i + 1}
    ========================  ===============================

With this convention x_0 has order p and x_i = p * x_{i+1}, so every
relation x_i = x_{i+1}^p holds. All level arithmetic below depends on it.

B = Hom_A(A[G], A[G]) is represented by evaluation descriptors
(:class:`HomElem`). Elements of B are functions G -> A; A[G] sits inside B via
x -> (g -> coefficient of -g in x), and A[G] acts by (m . h)(g) = sum m_s h(g + s).
Equality in B is never decided; contracts are checked by evaluating on a
finite window {g : level(g) <= L} large enough for the descriptors involved.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

import numpy as np

from .coeffs import CoeffRing
from .errors import IncompatibleElements, InvalidInstance, WitnessSearchExhausted, ZeroElement
from .structures import is_prime

DENSE_LIMIT = 1 << 22


@dataclass(frozen=True, order=True)
class PruferElem:
    """The class of num / p^level modulo 1, in canonical form."""

    p: int
    level: int
    num: int

    def __post_init__(self):
        if self.level == 0:
            if self.num != 0:
                raise ValueError("level 0 is reserved for the identity")
        elif not (0 < self.num < self.p**self.level and self.num % self.p):
            raise ValueError(f"non-canonical Prufer element {self.num}/{self.p}^{self.level}")

    @classmethod
    def of(cls, p: int, num: int, level: int) -> PruferElem:
        num %= p**level
        while level > 0 and num % p == 0:
            num //= p
            level -= 1
        if num == 0:
            level = 0
        return cls(p, level, num)

    @property
    def order(self) -> int:
        return self.p**self.level

    def index_at(self, level: int) -> int:
        """Position in Z/p^level when the window {level <= L} is identified with it."""
        return self.num * self.p ** (level - self.level)

    def _same(self, other: PruferElem) -> None:
        if not isinstance(other, PruferElem) or other.p != self.p:
            raise IncompatibleElements("Prufer elements for different primes")

    def __add__(self, other: PruferElem) -> PruferElem:
        self._same(other)
        lvl = max(self.level, other.level)
        return PruferElem.of(self.p, self.index_at(lvl) + other.index_at(lvl), lvl)

    def __neg__(self) -> PruferElem:
        return PruferElem.of(self.p, -self.num, self.level)

    def __sub__(self, other: PruferElem) -> PruferElem:
        return self + (-other)

    def __mul__(self, k: int) -> PruferElem:
        return PruferElem.of(self.p, self.num * k, self.level)

    __rmul__ = __mul__

    def in_subgroup(self, i: int) -> bool:
        """Membership in G_i = <x_i>."""
        return self.level <= i + 1

    def __str__(self) -> str:
        return "0" if self.level == 0 else f"{self.num}/{self.p}^{self.level}"


def identity(p: int) -> PruferElem:
    return PruferElem(p, 0, 0)


def generator(p: int, i: int) -> PruferElem:
    """x_i, the class of 1/p^(i+1)."""
    return PruferElem.of(p, 1, i + 1)


def from_index(p: int, k: int, level: int) -> PruferElem:
    return PruferElem.of(p, k, level)


def elements_up_to(p: int, level: int) -> list[PruferElem]:
    """All p^level elements of level <= ``level``, ordered by window index."""
    return [from_index(p, k, level) for k in range(p**level)]


def prufer_add(g: PruferElem, h: PruferElem) -> PruferElem:
    return g + h


def prufer_order(g: PruferElem) -> int:
    return g.order


def prufer_level(g: PruferElem) -> int:
    return g.level


@dataclass(frozen=True)
class PruferGrElem:
    """Finitely supported element of A[Z(p^inf)]; ``terms`` sorted, coefficients nonzero."""

    ring: CoeffRing
    p: int
    terms: tuple[tuple[PruferElem, int], ...]

    @classmethod
    def of(cls, ring: CoeffRing, p: int, mapping: dict[PruferElem, int] | Iterable[tuple[PruferElem, int]]) -> PruferGrElem:
        items = mapping.items() if isinstance(mapping, dict) else mapping
        acc: dict[PruferElem, int] = {}
        for g, c in items:
            if g.p != p:
                raise IncompatibleElements(f"element for p={g.p} in a p={p} group ring")
            acc[g] = (acc.get(g, 0) + c) % ring.modulus
        return cls(ring, p, tuple(sorted(((g, c) for g, c in acc.items() if c), key=_term_key)))

    @classmethod
    def zero(cls, ring: CoeffRing, p: int) -> PruferGrElem:
        return cls(ring, p, ())

    @classmethod
    def one(cls, ring: CoeffRing, p: int) -> PruferGrElem:
        return cls.of(ring, p, {identity(p): 1})

    @classmethod
    def basis(cls, ring: CoeffRing, p: int, g: PruferElem, coeff: int = 1) -> PruferGrElem:
        return cls.of(ring, p, {g: coeff})

    @property
    def mapping(self) -> dict[PruferElem, int]:
        return dict(self.terms)

    def coeff(self, g: PruferElem) -> int:
        return self.mapping.get(g, 0)

    def is_zero(self) -> bool:
        return not self.terms

    def support(self) -> list[PruferElem]:
        return [g for g, _ in self.terms]

    def max_level(self) -> int:
        return max((g.level for g, _ in self.terms), default=0)

    def within(self, i: int) -> bool:
        """Support inside G_i."""
        return self.max_level() <= i + 1

    def augmentation(self) -> int:
        return sum(c for _, c in self.terms) % self.ring.modulus

    def _same(self, other: PruferGrElem) -> None:
        if not isinstance(other, PruferGrElem) or other.ring != self.ring or other.p != self.p:
            raise IncompatibleElements("Prufer group-ring elements over different rings or primes")

    def __add__(self, other: PruferGrElem) -> PruferGrElem:
        return pg_add(self, other)

    def __neg__(self) -> PruferGrElem:
        return PruferGrElem.of(self.ring, self.p, [(g, -c) for g, c in self.terms])

    def __sub__(self, other: PruferGrElem) -> PruferGrElem:
        return pg_add(self, -other)

    def __mul__(self, other):
        if isinstance(other, PruferGrElem):
            return pg_mul(self, other)
        if isinstance(other, PruferElem):
            return PruferGrElem.of(self.ring, self.p, [(g + other, c) for g, c in self.terms])
        if isinstance(other, (int, np.integer)):
            return PruferGrElem.of(self.ring, self.p, [(g, c * int(other)) for g, c in self.terms])
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, np.integer, PruferElem)):
            return self * other
        return NotImplemented

    def window(self, level: int) -> np.ndarray:
        """Dense coefficient array on Z/p^level; support must fit."""
        arr = np.zeros(self.p**level, dtype=np.int64)
        for g, c in self.terms:
            arr[g.index_at(level)] = c
        return arr

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*[{g}]" for g, c in self.terms)

    def to_json(self) -> list[list[int]]:
        return [[g.num, g.level, c] for g, c in self.terms]


def _term_key(term: tuple[PruferElem, int]) -> tuple[int, int]:
    return term[0].level, term[0].num


def pg_add(x: PruferGrElem, y: PruferGrElem) -> PruferGrElem:
    x._same(y)
    return PruferGrElem.of(x.ring, x.p, list(x.terms) + list(y.terms))


def pg_mul(x: PruferGrElem, y: PruferGrElem) -> PruferGrElem:
    """Convolution; both supports live in the cyclic window of the larger level."""
    x._same(y)
    if x.is_zero() or y.is_zero():
        return PruferGrElem.zero(x.ring, x.p)
    p, n = x.p, x.ring.modulus
    level = max(x.max_level(), y.max_level())
    size = p**level
    ix = np.array([g.index_at(level) for g, _ in x.terms], dtype=np.int64)
    iy = np.array([g.index_at(level) for g, _ in y.terms], dtype=np.int64)
    cx = np.array([c for _, c in x.terms], dtype=np.int64)
    cy = np.array([c for _, c in y.terms], dtype=np.int64)
    idx = ((ix[:, None] + iy[None, :]) % size).ravel()
    val = (cx[:, None] * cy[None, :] % n).ravel()
    if size <= DENSE_LIMIT:
        dense = np.bincount(idx, weights=val, minlength=size).astype(np.int64) % n
        hits = np.nonzero(dense)[0]
        terms = [(from_index(p, int(k), level), int(dense[k])) for k in hits]
    else:
        acc: dict[int, int] = {}
        for k, v in zip(idx.tolist(), val.tolist()):
            acc[k] = (acc.get(k, 0) + v) % n
        terms = [(from_index(p, k, level), v) for k, v in acc.items() if v]
    return PruferGrElem(x.ring, p, tuple(sorted(terms, key=_term_key)))


def one_minus(ring: CoeffRing, p: int, g: PruferElem) -> PruferGrElem:
    """The element 1 - g."""
    return PruferGrElem.of(ring, p, [(identity(p), 1), (g, -1)])


# --- the pattern defining f and f_i -------------------------------------------------


def f_eval(g: PruferElem) -> int:
    """1 when g = x_{2k}^l x_{2k+1} for some k >= 0 and l, else 0.

    Closed form: l x_{2k} + x_{2k+1} = (l p + 1) / p^(2k+2), so the pattern is
    exactly the elements of even level >= 2 with numerator = 1 mod p.
    """
    return int(g.level >= 2 and g.level % 2 == 0 and g.num % g.p == 1)


def fi_eval(i: int, g: PruferElem) -> int:
    return int(f_eval(g) and g.level <= 2 * i + 2)


@lru_cache(maxsize=32)
def pattern_elements(p: int, max_k: int) -> tuple[PruferElem, ...]:
    """Brute-force enumeration of x_{2k}^l x_{2k+1} for 0 <= k <= max_k, 0 <= l < p^(2k+1).

    Built by group arithmetic from the definition, independent of :func:`f_eval`.
    """
    out = []
    for k in range(max_k + 1):
        base, step = generator(p, 2 * k + 1), generator(p, 2 * k)
        g = base
        for _ in range(p ** (2 * k + 1)):
            out.append(g)
            g = g + step
    return tuple(out)


def pattern_up_to_level(p: int, max_level: int) -> set[PruferElem]:
    """Pattern elements with 2k + 2 <= max_level."""
    if max_level < 2:
        return set()
    return set(pattern_elements(p, (max_level - 2) // 2))


@lru_cache(maxsize=64)
def make_fi(ring: CoeffRing, p: int, i: int) -> PruferGrElem:
    """The element of A[G] whose image in B is f_i.

    Under x -> (g -> coefficient of -g in x), the function f_i comes from the
    element carrying coefficient 1 at -g for every pattern element g with
    k <= i. For p = 2 the pattern is closed under negation, so this is the
    pattern support itself.
    """
    return PruferGrElem.of(ring, p, [(-g, 1) for g in pattern_elements(p, i)])


def fi_pattern_support(p: int, i: int) -> list[PruferElem]:
    return list(pattern_elements(p, i))


@lru_cache(maxsize=64)
def _pattern_window(p: int, level: int, modulus: int, cutoff: int | None) -> np.ndarray:
    size = p**level
    k = np.arange(size, dtype=np.int64)
    val = np.zeros(size, dtype=np.int64)
    lvl = np.full(size, level, dtype=np.int64)
    num = k.copy()
    num[0] = 0
    lvl[0] = 0
    rest = k[1:].copy()
    lv = np.full(size - 1, level, dtype=np.int64)
    while True:
        div = rest % p == 0
        if not div.any():
            break
        rest = np.where(div, rest // p, rest)
        lv = np.where(div, lv - 1, lv)
    num[1:], lvl[1:] = rest, lv
    hit = (lvl >= 2) & (lvl % 2 == 0) & (num % p == 1)
    if cutoff is not None:
        hit &= lvl <= cutoff
    val[hit] = 1 % modulus
    val.setflags(write=False)
    return val


# --- B = Hom_A(A[G], A[G]) via evaluation descriptors --------------------------------


class HomElem:
    """An element of B, known through its values on group elements."""

    ring: CoeffRing
    p: int

    def eval(self, g: PruferElem) -> int:
        raise NotImplementedError

    def window(self, level: int) -> np.ndarray:
        """Values on every g of level <= ``level``, indexed by ``g.index_at(level)``."""
        raise NotImplementedError

    def support_level(self) -> int:
        """Level of the largest group element any finite part of this descriptor touches."""
        raise NotImplementedError

    def __add__(self, other: HomElem) -> HomElem:
        return Sum(self, other)

    def __rmul__(self, c: int) -> HomElem:
        return Scaled(int(c), self)

    def __neg__(self) -> HomElem:
        return Scaled(-1, self)

    def __sub__(self, other: HomElem) -> HomElem:
        return Sum(self, Scaled(-1, other))


@dataclass(frozen=True, eq=False)
class Embedded(HomElem):
    x: PruferGrElem

    @property
    def ring(self):
        return self.x.ring

    @property
    def p(self):
        return self.x.p

    def eval(self, g: PruferElem) -> int:
        return self.x.coeff(-g)

    def window(self, level: int) -> np.ndarray:
        arr = np.zeros(self.p**level, dtype=np.int64)
        for g, c in self.x.terms:
            if g.level <= level:
                arr[(-g).index_at(level)] = c
        return arr

    def support_level(self) -> int:
        return self.x.max_level()


@dataclass(frozen=True, eq=False)
class FPattern(HomElem):
    ring: CoeffRing
    p: int

    def eval(self, g: PruferElem) -> int:
        return f_eval(g) % self.ring.modulus

    def window(self, level: int) -> np.ndarray:
        return _pattern_window(self.p, level, self.ring.modulus, None).copy()

    def support_level(self) -> int:
        return 0


@dataclass(frozen=True, eq=False)
class FiPattern(HomElem):
    ring: CoeffRing
    p: int
    i: int

    def eval(self, g: PruferElem) -> int:
        return fi_eval(self.i, g) % self.ring.modulus

    def window(self, level: int) -> np.ndarray:
        return _pattern_window(self.p, level, self.ring.modulus, 2 * self.i + 2).copy()

    def support_level(self) -> int:
        return 2 * self.i + 2


@dataclass(frozen=True, eq=False)
class Scaled(HomElem):
    c: int
    h: HomElem

    @property
    def ring(self):
        return self.h.ring

    @property
    def p(self):
        return self.h.p

    def eval(self, g: PruferElem) -> int:
        return self.c * self.h.eval(g) % self.ring.modulus

    def window(self, level: int) -> np.ndarray:
        return self.c * self.h.window(level) % self.ring.modulus

    def support_level(self) -> int:
        return self.h.support_level()


@dataclass(frozen=True, eq=False)
class Sum(HomElem):
    left: HomElem
    right: HomElem

    def __post_init__(self):
        if self.left.ring != self.right.ring or self.left.p != self.right.p:
            raise IncompatibleElements("summands live in different modules")

    @property
    def ring(self):
        return self.left.ring

    @property
    def p(self):
        return self.left.p

    def eval(self, g: PruferElem) -> int:
        return (self.left.eval(g) + self.right.eval(g)) % self.ring.modulus

    def window(self, level: int) -> np.ndarray:
        return (self.left.window(level) + self.right.window(level)) % self.ring.modulus

    def support_level(self) -> int:
        return max(self.left.support_level(), self.right.support_level())


@dataclass(frozen=True, eq=False)
class Acted(HomElem):
    """m . h, evaluated as g -> sum over s in supp(m) of m_s h(g + s)."""

    m: PruferGrElem
    h: HomElem

    def __post_init__(self):
        if self.m.ring != self.h.ring or self.m.p != self.h.p:
            raise IncompatibleElements("acting element and module element disagree on ring or prime")

    @property
    def ring(self):
        return self.h.ring

    @property
    def p(self):
        return self.h.p

    def eval(self, g: PruferElem) -> int:
        return sum(c * self.h.eval(g + s) for s, c in self.m.terms) % self.ring.modulus

    def window(self, level: int) -> np.ndarray:
        if self.m.max_level() > level:
            raise InvalidInstance(f"window level {level} is below the acting element's level {self.m.max_level()}")
        base = self.h.window(level)
        out = np.zeros_like(base)
        for s, c in self.m.terms:
            out = (out + c * np.roll(base, -s.index_at(level))) % self.ring.modulus
        return out

    def support_level(self) -> int:
        return max(self.m.max_level(), self.h.support_level())


def mod_act(m: PruferGrElem, h: HomElem) -> HomElem:
    return Acted(m, h)


def embed(x: PruferGrElem) -> HomElem:
    return Embedded(x)


def f_hom(ring: CoeffRing, p: int) -> HomElem:
    return FPattern(ring, p)


def fi_hom(ring: CoeffRing, p: int, i: int) -> HomElem:
    return FiPattern(ring, p, i)


def agree_on_window(h1: HomElem, h2: HomElem, level: int) -> bool:
    return bool(np.array_equal(h1.window(level), h2.window(level)))


# --- the Lemma ----------------------------------------------------------------------


def lemma1_check(i: int, a: PruferGrElem, b: PruferGrElem, x: PruferElem) -> bool:
    """For a, b supported in G_i and x outside G_i: a = b x forces a = b = 0."""
    if not (a.within(i) and b.within(i)):
        raise InvalidInstance(f"a and b must be supported in G_{i} (level <= {i + 1})")
    if x.in_subgroup(i):
        raise InvalidInstance(f"x = {x} lies in G_{i}")
    bx = b * x
    if a == bx:
        return a.is_zero() and b.is_zero()
    return True


@dataclass(frozen=True)
class SweepReport:
    name: str
    instances: int
    violations: int
    first_violation: tuple | None = None

    @property
    def passed(self) -> bool:
        return self.instances > 0 and self.violations == 0

    def to_json(self) -> dict:
        return {
            "name": self.name, "instances": self.instances, "violations": self.violations,
            "first_violation": None if self.first_violation is None else [str(v) for v in self.first_violation],
        }


def _all_elements_on(ring: CoeffRing, p: int, support: list[PruferElem]):
    n, m = ring.modulus, len(support)
    for code in range(n**m):
        coeffs, rest = [], code
        for _ in range(m):
            coeffs.append(rest % n)
            rest //= n
        yield code, PruferGrElem.of(ring, p, zip(support, coeffs))


def lemma1_sweep(ring: CoeffRing, p: int, i: int, max_level: int) -> SweepReport:
    """Every (a, b) supported in G_i and every x of level <= max_level outside G_i.

    For fixed (b, x) the product b x is computed once and compared against all
    a at the same time: the instances with a != b x hold trivially, and the
    single a equal to b x (if it is supported in G_i) is checked explicitly.
    """
    support = elements_up_to(p, i + 1)
    n, m = ring.modulus, len(support)
    count_a = n**m
    pos = {g: k for k, g in enumerate(support)}
    weights = [n**k for k in range(m)]
    xs = [g for g in elements_up_to(p, max_level) if not g.in_subgroup(i)]
    instances = violations = 0
    first = None
    for _, b in _all_elements_on(ring, p, support):
        for x in xs:
            instances += count_a
            bx = b * x
            if all(g in pos for g in bx.support()):
                a_code = sum(c * weights[pos[g]] for g, c in bx.terms)
                # the unique a equal to bx; the implication needs a = b = 0
                if not (a_code == 0 and b.is_zero()):
                    violations += 1
                    first = first or (bx, b, x)
    return SweepReport(f"lemma1 p={p} i={i} ring={ring} levels<={max_level}", instances, violations, first)


def lemma2_check(i: int, g: PruferElem) -> bool:
    """((1 - x_{2i+2}) . f)(g) = 0 for g outside G_{2i+2}."""
    if g.in_subgroup(2 * i + 2):
        raise InvalidInstance(f"g = {g} lies in G_{2 * i + 2} (level <= {2 * i + 3})")
    return f_eval(g) - f_eval(g + generator(g.p, 2 * i + 2)) == 0


def lemma2_sweep(p: int, i: int, max_level: int) -> SweepReport:
    instances = violations = 0
    first = None
    for g in elements_up_to(p, max_level):
        if g.level <= 2 * i + 3:
            continue
        instances += 1
        if not lemma2_check(i, g):
            violations += 1
            first = first or (g,)
    return SweepReport(f"lemma2 p={p} i={i} levels<={max_level}", instances, violations, first)


# --- the essential-extension witness --------------------------------------------------


@dataclass(frozen=True)
class EssentialityWitness:
    multiplier: PruferGrElem
    result: PruferGrElem
    path: str  # "first-try" or "fallback"
    n0: int | None
    certified_level: int

    def to_json(self) -> dict:
        return {
            "multiplier": self.multiplier.to_json(),
            "result": self.result.to_json(),
            "path": self.path if self.n0 is None else f"{self.path}({self.n0})",
            "certified_level": self.certified_level,
        }


def target(a: PruferGrElem, b: PruferGrElem) -> HomElem:
    """a + b f as an element of B."""
    return Sum(Embedded(a), Acted(b, FPattern(a.ring, a.p)))


def essential_witness(i: int, a: PruferGrElem, b: PruferGrElem, n_max: int | None = None) -> EssentialityWitness:
    """Find m in A[G] with m (a + b f) a nonzero element of A[G].

    First try m = 1 - x_{2i+2}, for which m (a + b f) = m (a + b f_i). If that
    vanishes, a + b f_i = 0 and m = 1 - x_{2 n0 + 2} works for the first
    n0 >= i + 1 with b (f_{n0} - f_i) != 0. The identity m (a + b f) = result
    is then re-checked on the window of level 2 max(n0, i) + 4.

    ``b`` must be supported in G_{2i}; ``a`` may reach G_{2i+1}, where the
    element a + b f_i itself lives.
    """
    a._same(b)
    if not b.within(2 * i):
        raise InvalidInstance(f"b must be supported in G_{2 * i} (level <= {2 * i + 1})")
    if not a.within(2 * i + 1):
        raise InvalidInstance(f"a must be supported in G_{2 * i + 1} (level <= {2 * i + 2})")
    if a.is_zero() and b.is_zero():
        raise ZeroElement("a = b = 0")
    ring, p = a.ring, a.p
    n_max = i + 16 if n_max is None else n_max
    fi = make_fi(ring, p, i)
    if vanishes_in_b(i, a, b, fi):
        raise ZeroElement("a + b f vanishes on G: a + b f_i = 0 and b has augmentation 0")
    multiplier = one_minus(ring, p, generator(p, 2 * i + 2))
    y = multiplier * (a + b * fi)
    if not y.is_zero():
        return _certify(a, b, EssentialityWitness(multiplier, y, "first-try", None, 2 * i + 4))
    tested = []
    for n in range(i + 1, n_max + 1):
        diff = b * (make_fi(ring, p, n) - fi)
        tested.append((n, str(diff)))
        if not diff.is_zero():
            multiplier = one_minus(ring, p, generator(p, 2 * n + 2))
            result = multiplier * diff
            return _certify(a, b, EssentialityWitness(multiplier, result, "fallback", n, 2 * max(n, i) + 4))
    raise WitnessSearchExhausted(
        f"no n in [{i + 1}, {n_max}] with b (f_n - f_i) != 0",
        {"b": str(b), "tested": tested},
    )


def vanishes_in_b(i: int, a: PruferGrElem, b: PruferGrElem, fi: PruferGrElem | None = None) -> bool:
    """Whether a + b f is the zero function on G.

    For k > i the level-(2k+2) part of f is the indicator of the coset
    x_{2k+1} + G_{2k}, and b (supported in G_{2i}) acts on it as multiplication
    by its augmentation. So a + b f = (a + b f_i) + aug(b) (f - f_i), the two
    summands have disjoint supports, and a + b f = 0 iff both vanish.
    """
    if not b.within(2 * i):
        raise InvalidInstance(f"b must be supported in G_{2 * i}")
    fi = make_fi(a.ring, a.p, i) if fi is None else fi
    return (a + b * fi).is_zero() and b.augmentation() == 0


def _certify(a: PruferGrElem, b: PruferGrElem, w: EssentialityWitness) -> EssentialityWitness:
    if w.result.is_zero():
        raise AssertionError("witness result vanished")
    level = max(w.certified_level, a.max_level(), b.max_level(), w.multiplier.max_level(), w.result.max_level())
    lhs = Acted(w.multiplier, target(a, b))
    if not agree_on_window(lhs, Embedded(w.result), level):
        raise AssertionError(f"action identity fails on the level-{level} window")
    if level != w.certified_level:
        w = EssentialityWitness(w.multiplier, w.result, w.path, w.n0, level)
    return w


def fallback_instance(ring: CoeffRing, p: int, i: int) -> tuple[PruferGrElem, PruferGrElem]:
    """(a, b) = (-f_i, 1): the first try vanishes and the fallback must run."""
    return -make_fi(ring, p, i), PruferGrElem.one(ring, p)


def random_pair(rng: np.random.Generator, ring: CoeffRing, p: int, i: int) -> tuple[PruferGrElem, PruferGrElem]:
    """Uniform (a, b) supported in G_{2i}, redrawn until a + b f is nonzero in B."""
    support = elements_up_to(p, 2 * i + 1)
    fi = make_fi(ring, p, i)
    while True:
        ca = rng.integers(0, ring.modulus, size=len(support))
        cb = rng.integers(0, ring.modulus, size=len(support))
        a = PruferGrElem.of(ring, p, zip(support, ca.tolist()))
        b = PruferGrElem.of(ring, p, zip(support, cb.tolist()))
        if not vanishes_in_b(i, a, b, fi):
            return a, b


@dataclass(frozen=True)
class NotInGroupRing:
    element: PruferElem
    level: int
    value: int


def f_not_in_group_ring(p: int, level_bound: int) -> NotInGroupRing:
    """A pattern element above ``level_bound``: f has unbounded support."""
    if not is_prime(p):
        raise InvalidInstance(f"{p} is not prime")
    if level_bound < 2:
        raise InvalidInstance("level_bound must be at least 2")
    k = level_bound // 2
    while 2 * k + 2 <= level_bound:
        k += 1
    g = generator(p, 2 * k + 1)
    return NotInGroupRing(g, g.level, f_eval(g))
