"""Brute-force reference implementations, independent of the package internals.

Everything here is plain Python over dicts, tuples and fractions so that a
bug in the numpy core cannot cancel out against the same bug in a test.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product


def cyclic_table(n):
    return [[(i + j) % n for j in range(n)] for i in range(n)]


def element_order(table, identity, x):
    k, y = 1, x
    while y != identity:
        y = table[y][x]
        k += 1
    return k


def order_census(table, identity):
    census = {}
    for x in range(len(table)):
        q = element_order(table, identity, x)
        census[q] = census.get(q, 0) + 1
    return census


def closure(table, identity, gens):
    found = {identity, *gens}
    while True:
        new = {table[a][b] for a in found for b in found} - found
        if not new:
            return sorted(found)
        found |= new


def convolve(table, n, x, y):
    out = [0] * len(table)
    for i, a in enumerate(x):
        if a:
            for j, b in enumerate(y):
                if b:
                    k = table[i][j]
                    out[k] = (out[k] + a * b) % n
    return tuple(out)


def all_elements(n, dim):
    return [tuple(v) for v in product(range(n), repeat=dim)]


def unit_set(table, identity, n):
    """Elements with a two-sided inverse, by trying every candidate."""
    dim = len(table)
    one = tuple(1 if g == identity else 0 for g in range(dim))
    elems = all_elements(n, dim)
    units = set()
    for x in elems:
        if x in units:
            continue
        for y in elems:
            if convolve(table, n, x, y) == one and convolve(table, n, y, x) == one:
                units.add(x)
                units.add(y)
                break
    return units


def radical_set(table, identity, n):
    """{x : 1 - y x is a unit for all y}."""
    dim = len(table)
    one = tuple(1 if g == identity else 0 for g in range(dim))
    units = unit_set(table, identity, n)
    elems = all_elements(n, dim)
    out = set()
    for x in elems:
        if all(tuple((o - z) % n for o, z in zip(one, convolve(table, n, y, x))) in units for y in elems):
            out.add(x)
    return out


def is_local(table, identity, n):
    """Non-units closed under addition."""
    dim = len(table)
    units = unit_set(table, identity, n)
    nonunits = [x for x in all_elements(n, dim) if x not in units]
    return all(tuple((a + b) % n for a, b in zip(x, y)) not in units for x in nonunits for y in nonunits)


def idempotents(table, identity, n):
    dim = len(table)
    return [x for x in all_elements(n, dim) if convolve(table, n, x, x) == x]


def rank_mod_p(rows, p):
    """Plain Gaussian elimination."""
    m = [list(r) for r in rows]
    rank = 0
    cols = len(m[0]) if m else 0
    for c in range(cols):
        piv = next((r for r in range(rank, len(m)) if m[r][c] % p), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][c], -1, p)
        m[rank] = [v * inv % p for v in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][c] % p:
                f = m[r][c]
                m[r] = [(a - f * b) % p for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank


def span_set(vectors, p):
    """Every linear combination, as a set of tuples."""
    vectors = list(vectors)
    dim = len(vectors[0]) if vectors else 0
    out = {tuple([0] * dim)}
    for v in vectors:
        out = {tuple((a + c * b) % p for a, b in zip(w, v)) for w in out for c in range(p)}
    return out


# --- quasi-cyclic group as fractions mod 1 -------------------------------------------


def frac_level(q: Fraction, p: int) -> int:
    d, level = q.denominator, 0
    while d > 1:
        d //= p
        level += 1
    return level


def pattern_by_enumeration(p, max_level):
    """{l/p^(2k+1) + 1/p^(2k+2) mod 1 : 2k+2 <= max_level, 0 <= l < p^(2k+1)}."""
    out = set()
    k = 0
    while 2 * k + 2 <= max_level:
        for l in range(p ** (2 * k + 1)):
            out.add((Fraction(l, p ** (2 * k + 1)) + Fraction(1, p ** (2 * k + 2))) % 1)
        k += 1
    return out


def fractions_up_to(p, level):
    return [Fraction(k, p**level) for k in range(p**level)]
