"""Commutative coefficient rings: prime fields GF(p) and modular rings Z/n."""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from enum import Enum
from typing import Callable

from .errors import InvalidArgument, NotAUnit, NotLocal, ParseError
from .structures import is_prime, prime_factors


class Kind(str, Enum):
    PRIME_FIELD = "gf"
    MOD_RING = "zmod"


@dataclass(frozen=True)
class CoeffRing:
    kind: Kind
    modulus: int

    def __post_init__(self):
        if self.kind is Kind.PRIME_FIELD and not is_prime(self.modulus):
            raise InvalidArgument(f"GF({self.modulus}) needs a prime modulus")
        if self.kind is Kind.MOD_RING and self.modulus < 2:
            raise InvalidArgument(f"Z/{self.modulus} needs n >= 2")

    @property
    def characteristic(self) -> int:
        return self.modulus

    @property
    def is_field(self) -> bool:
        return is_prime(self.modulus)

    def elements(self) -> range:
        return range(self.modulus)

    def reduce(self, a: int) -> int:
        return a % self.modulus

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.modulus

    def neg(self, a: int) -> int:
        return -a % self.modulus

    def mul(self, a: int, b: int) -> int:
        return a * b % self.modulus

    def is_unit(self, a: int) -> bool:
        return math.gcd(a % self.modulus, self.modulus) == 1

    def inverse(self, a: int) -> int:
        if not self.is_unit(a):
            raise NotAUnit(f"{a % self.modulus} is not a unit of {self}")
        return pow(a % self.modulus, -1, self.modulus)

    def __str__(self) -> str:
        if self.kind is Kind.PRIME_FIELD:
            return f"GF({self.modulus})"
        return f"Z/{self.modulus}"

    @property
    def spec(self) -> str:
        return f"{self.kind.value}:{self.modulus}"


def gf(p: int) -> CoeffRing:
    return CoeffRing(Kind.PRIME_FIELD, p)


def zmod(n: int) -> CoeffRing:
    return CoeffRing(Kind.MOD_RING, n)


@dataclass(frozen=True)
class LocalityWitness:
    """Outcome of :func:`ring_is_local`.

    When local, ``prime`` is the residue characteristic and ``maximal_generator``
    generates M (0 for a field). When not local, ``nonunits`` are two non-units
    whose sum is a unit.
    """

    local: bool
    prime: int | None = None
    maximal_generator: int | None = None
    nonunits: tuple[int, int] | None = None

    def __bool__(self) -> bool:
        return self.local


def ring_is_local(a: CoeffRing) -> LocalityWitness:
    if a.kind is Kind.PRIME_FIELD:
        return LocalityWitness(True, a.modulus, 0)
    primes = prime_factors(a.modulus)
    if len(primes) == 1:
        p = primes[0]
        return LocalityWitness(True, p, p % a.modulus)
    # CRT idempotent-style split: u = p^k, v = n/p^k are coprime non-units
    p = primes[0]
    pk = 1
    while a.modulus % (pk * p) == 0:
        pk *= p
    u, v = pk, a.modulus // pk
    # find multiples of u and v summing to 1
    s = pow(u, -1, v) * u % a.modulus
    t = (1 - s) % a.modulus
    return LocalityWitness(False, nonunits=(s, t))


def residue_field(a: CoeffRing) -> tuple[CoeffRing, Callable[[int], int]]:
    loc = ring_is_local(a)
    if not loc:
        raise NotLocal(f"{a} is not local")
    p = loc.prime
    return gf(p), lambda x: x % p


_COEFF = re.compile(r"^\s*(gf|zmod)\s*:\s*(\d+)\s*$", re.IGNORECASE)


def parse_coeff_spec(spec: str) -> CoeffRing:
    m = _COEFF.match(spec)
    if not m:
        raise ParseError("expected gf:<p> or zmod:<n>", spec, 0)
    n = int(m.group(2))
    if m.group(1).lower() == "gf":
        if not is_prime(n):
            raise ParseError(f"gf:{n} needs a prime", spec, m.start(2))
        return gf(n)
    if n < 2:
        raise ParseError("zmod:<n> needs n >= 2", spec, m.start(2))
    return zmod(n)
