"""Finite groups given extensionally by their multiplication tables.

Every group here is a :class:`FiniteGroup` value: an ``order x order`` table
of element indices together with the identity, the inverse map and display
names. Constructors cover the test catalog (cyclic, direct products,
dihedral, Q8, small symmetric groups) plus loading from a JSON table file.
"""

from __future__ import annotations

import itertools
import json
import math
import re
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path

import numpy as np

from .errors import InvalidArgument, ParseError, TableNotAGroup, Unsupported

DEFAULT_MAX_ORDER = 64


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, math.isqrt(n) + 1))


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def is_power_of(n: int, p: int) -> bool:
    while n > 1 and n % p == 0:
        n //= p
    return n == 1


def _require_prime(p: int) -> None:
    if not isinstance(p, int) or not is_prime(p):
        raise InvalidArgument(f"{p!r} is not a prime")


@dataclass(frozen=True)
class FiniteGroup:
    order: int
    table: tuple[tuple[int, ...], ...]
    identity: int
    inverse: tuple[int, ...]
    names: tuple[str, ...]
    label: str = field(default="", compare=False)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def power(self, x: int, k: int) -> int:
        if k < 0:
            x, k = self.inverse[x], -k
        out = self.identity
        for _ in range(k):
            out = self.table[out][x]
        return out

    def index(self, name_or_index: str | int) -> int:
        if isinstance(name_or_index, int):
            if not 0 <= name_or_index < self.order:
                raise InvalidArgument(f"element index {name_or_index} out of range")
            return name_or_index
        try:
            return self.names.index(name_or_index)
        except ValueError:
            pass
        if re.fullmatch(r"\d+", name_or_index):
            return self.index(int(name_or_index))
        raise InvalidArgument(f"no element named {name_or_index!r}")

    @cached_property
    def array(self) -> np.ndarray:
        return np.array(self.table, dtype=np.int64)

    @cached_property
    def is_abelian(self) -> bool:
        a = self.array
        return bool((a == a.T).all())

    def __str__(self) -> str:
        return self.label or f"group of order {self.order}"


@dataclass(frozen=True)
class SubgroupEmbedding:
    parent: FiniteGroup
    elements: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def index_map(self) -> dict[int, int]:
        """Child index (position in ``elements``) to parent index."""
        return dict(enumerate(self.elements))

    def __contains__(self, x: int) -> bool:
        return x in self.elements

    def as_group(self) -> FiniteGroup:
        pos = {g: i for i, g in enumerate(self.elements)}
        t = self.parent.table
        table = tuple(tuple(pos[t[a][b]] for b in self.elements) for a in self.elements)
        return FiniteGroup(
            order=len(self.elements),
            table=table,
            identity=pos[self.parent.identity],
            inverse=tuple(pos[self.parent.inverse[g]] for g in self.elements),
            names=tuple(self.parent.names[g] for g in self.elements),
            label=f"subgroup of {self.parent}",
        )


def validate_table(table, names=None) -> FiniteGroup:
    """Check the group axioms on a raw table and build the group.

    Raises TableNotAGroup naming the first failing element or triple.
    """
    try:
        rows = [[int(v) for v in row] for row in table]
    except (TypeError, ValueError) as exc:
        raise TableNotAGroup(f"table entries must be integers: {exc}") from None
    n = len(rows)
    if n == 0:
        raise TableNotAGroup("empty table")
    for a, row in enumerate(rows):
        if len(row) != n:
            raise TableNotAGroup(f"row {a} has length {len(row)}, expected {n}", (a,))
        for b, v in enumerate(row):
            if not 0 <= v < n:
                raise TableNotAGroup(f"entry ({a},{b}) = {v} is not a valid index", (a, b))
    arr = np.array(rows, dtype=np.int64)
    ids = [e for e in range(n) if (arr[e] == np.arange(n)).all() and (arr[:, e] == np.arange(n)).all()]
    if not ids:
        raise TableNotAGroup("no two-sided identity element")
    e = ids[0]
    inverse = []
    for g in range(n):
        hits = np.nonzero(arr[g] == e)[0]
        if hits.size == 0 or arr[hits[0], g] != e:
            raise TableNotAGroup(f"element {g} has no inverse", (g,))
        inverse.append(int(hits[0]))
    # (ab)c vs a(bc) for every triple at once
    left = arr[arr]  # left[a, b, c] = table[table[a][b]][c]
    right = arr[:, arr]  # right[a, b, c] = table[a][table[b][c]]
    bad = np.argwhere(left != right)
    if bad.size:
        a, b, c = (int(v) for v in bad[0])
        raise TableNotAGroup(f"associativity fails for (a,b,c) = ({a},{b},{c})", (a, b, c))
    if names is None:
        names = [str(i) for i in range(n)]
    if len(names) != n:
        raise TableNotAGroup(f"expected {n} names, got {len(names)}")
    return FiniteGroup(n, tuple(tuple(r) for r in rows), e, tuple(inverse), tuple(str(s) for s in names))


def from_table(data: dict | str | Path) -> FiniteGroup:
    """Build a group from a parsed table-file object or a path to one."""
    if isinstance(data, (str, Path)):
        data = json.loads(Path(data).read_text())
    if not isinstance(data, dict) or "table" not in data:
        raise TableNotAGroup("table file must be a JSON object with a 'table' key")
    group = validate_table(data["table"], data.get("names"))
    if "order" in data and data["order"] != group.order:
        raise TableNotAGroup(f"declared order {data['order']} does not match table size {group.order}")
    return group


def _from_elements(elements: list, op, names: list[str], label: str) -> FiniteGroup:
    pos = {x: i for i, x in enumerate(elements)}
    table = tuple(tuple(pos[op(a, b)] for b in elements) for a in elements)
    g = validate_table(table, names)
    return FiniteGroup(g.order, g.table, g.identity, g.inverse, g.names, label)


def make_cyclic(n: int) -> FiniteGroup:
    if not isinstance(n, int) or n < 1:
        raise InvalidArgument(f"cyclic group order must be a positive integer, got {n!r}")
    table = tuple(tuple((i + j) % n for j in range(n)) for i in range(n))
    names = tuple("e" if i == 0 else ("g" if i == 1 else f"g^{i}") for i in range(n))
    inverse = tuple((-i) % n for i in range(n))
    return FiniteGroup(n, table, 0, inverse, names, f"C{n}")


def make_direct_product(g: FiniteGroup, h: FiniteGroup) -> FiniteGroup:
    m = h.order
    n = g.order * m
    table = tuple(
        tuple(g.table[a // m][b // m] * m + h.table[a % m][b % m] for b in range(n)) for a in range(n)
    )
    inverse = tuple(g.inverse[a // m] * m + h.inverse[a % m] for a in range(n))
    names = tuple(f"({g.names[a // m]},{h.names[a % m]})" for a in range(n))
    return FiniteGroup(n, table, g.identity * m + h.identity, inverse, names, f"{g}x{h}")


def make_dihedral(m: int) -> FiniteGroup:
    """Symmetries of the regular m-gon, order 2m; elements r^i s^j."""
    if not isinstance(m, int) or m < 1:
        raise InvalidArgument(f"dihedral parameter must be a positive integer, got {m!r}")
    elements = [(i, j) for j in (0, 1) for i in range(m)]

    def op(a, b):
        (i1, j1), (i2, j2) = a, b
        return ((i1 + (-i2 if j1 else i2)) % m, (j1 + j2) % 2)

    def name(x):
        i, j = x
        r = "" if i == 0 else ("r" if i == 1 else f"r^{i}")
        s = "s" if j else ""
        return (r + s) or "e"

    return _from_elements(elements, op, [name(x) for x in elements], f"D{2 * m}")


def make_quaternion8() -> FiniteGroup:
    # unit quaternions (sign, axis) with axis in 1, i, j, k
    axes = ["1", "i", "j", "k"]
    prod = {
        ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
        ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
        ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
        ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
    }
    elements = [(s, a) for a in axes for s in (1, -1)]

    def op(x, y):
        sign, axis = prod[(x[1], y[1])]
        return (x[0] * y[0] * sign, axis)

    names = [("" if s == 1 else "-") + a for s, a in elements]
    return _from_elements(elements, op, names, "Q8")


def make_symmetric(m: int) -> FiniteGroup:
    """Permutations of {0..m-1} composed right-to-left, m <= 4."""
    if not isinstance(m, int) or not 1 <= m <= 4:
        raise InvalidArgument(f"symmetric groups are limited to 1 <= m <= 4, got {m!r}")
    elements = list(itertools.permutations(range(m)))

    def op(a, b):
        return tuple(a[b[i]] for i in range(m))

    def name(perm):
        seen, cycles = set(), []
        for start in range(m):
            if start in seen or perm[start] == start:
                continue
            cyc, x = [], start
            while x not in seen:
                seen.add(x)
                cyc.append(str(x + 1))
                x = perm[x]
            cycles.append("(" + "".join(cyc) + ")")
        return "".join(cycles) or "e"

    return _from_elements(elements, op, [name(x) for x in elements], f"S{m}")


def subgroup_generated(g: FiniteGroup, gens) -> SubgroupEmbedding:
    gens = [g.index(x) for x in gens]
    members = {g.identity}
    frontier = [g.identity]
    while frontier:
        nxt = []
        for a in frontier:
            for s in gens:
                for b in (g.table[a][s], g.table[a][g.inverse[s]]):
                    if b not in members:
                        members.add(b)
                        nxt.append(b)
        frontier = nxt
    return SubgroupEmbedding(g, tuple(sorted(members)))


def element_order(g: FiniteGroup, x: int) -> int:
    x = g.index(x)
    k, y = 1, x
    while y != g.identity:
        y = g.table[y][x]
        k += 1
    return k


def element_orders(g: FiniteGroup) -> list[int]:
    return [element_order(g, x) for x in range(g.order)]


def is_p_group(g: FiniteGroup, p: int) -> bool:
    _require_prime(p)
    return is_power_of(g.order, p)


def p_elements(g: FiniteGroup, p: int) -> list[int]:
    """Indices of elements whose order is a power of p."""
    return [x for x in range(g.order) if is_power_of(element_order(g, x), p)]


def normal_sylow(g: FiniteGroup, p: int) -> SubgroupEmbedding | None:
    """The unique Sylow p-subgroup, when the p-elements form one (it is then normal)."""
    els = p_elements(g, p)
    sub = subgroup_generated(g, els)
    if sub.order != len(els):
        return None
    return sub


def sylow_decomposition(g: FiniteGroup, p: int) -> tuple[SubgroupEmbedding, SubgroupEmbedding]:
    """Split an abelian group as (p-part, p'-part)."""
    _require_prime(p)
    if not g.is_abelian:
        raise Unsupported("sylow_decomposition only handles abelian groups")
    orders = element_orders(g)
    gp = SubgroupEmbedding(g, tuple(x for x in range(g.order) if is_power_of(orders[x], p)))
    g0 = SubgroupEmbedding(g, tuple(x for x in range(g.order) if orders[x] % p != 0))
    if gp.order * g0.order != g.order or set(gp.elements) & set(g0.elements) != {g.identity}:
        raise AssertionError("Sylow decomposition sizes do not multiply to |G|")
    return gp, g0


def subgroups_generated_sweep(g: FiniteGroup) -> list[SubgroupEmbedding]:
    """All subgroups generated by at most two elements, deduplicated, sorted by (order, elements)."""
    seen: dict[tuple[int, ...], SubgroupEmbedding] = {}
    for a in range(g.order):
        for b in range(a, g.order):
            sub = subgroup_generated(g, [a, b])
            seen.setdefault(sub.elements, sub)
    return sorted(seen.values(), key=lambda s: (s.order, s.elements))


_ATOM = re.compile(r"\s*(c(\d+)|d(\d+)|q8|s(\d+)|trivial)\s*", re.IGNORECASE)


def parse_group_spec(spec: str, max_order: int = DEFAULT_MAX_ORDER) -> FiniteGroup:
    """Parse ``c<n>``, ``d<2m>``, ``q8``, ``s<m>``, products joined by ``x``, or ``file:<path>``."""
    text = spec.strip()
    if text.startswith("file:"):
        group = from_table(text[5:])
    else:
        factors = []
        pos = 0
        while True:
            m = _ATOM.match(text, pos)
            if not m or m.end() == pos:
                raise ParseError("expected group factor (c<n>, d<2m>, q8, s<m>)", spec, pos)
            factors.append(_atom(m, spec, pos))
            pos = m.end()
            if pos == len(text):
                break
            if text[pos] not in "xX":
                raise ParseError("expected 'x' between factors", spec, pos)
            pos += 1
        group = factors[0]
        for f in factors[1:]:
            group = make_direct_product(group, f)
    if group.order > max_order:
        raise InvalidArgument(f"group order {group.order} exceeds max_group_order={max_order}")
    return group


def _atom(m: re.Match, spec: str, pos: int) -> FiniteGroup:
    token = m.group(1).lower()
    if token == "trivial":
        return make_cyclic(1)
    if token == "q8":
        return make_quaternion8()
    if m.group(2):
        return make_cyclic(int(m.group(2)))
    if m.group(3):
        n = int(m.group(3))
        if n % 2 or n < 2:
            raise ParseError("dihedral spec needs an even order d<2m>", spec, pos)
        return make_dihedral(n // 2)
    return make_symmetric(int(m.group(4)))
