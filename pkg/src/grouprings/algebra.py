"""Finite-dimensional associative algebras over GF(p) by structure constants.

This is the numeric core under :mod:`grouprings.groupring`: group algebras
and their quotients are both instances of :class:`FiniteAlgebra`, so the
exhaustive searches (units, radical, idempotents) are written once.

Enumeration order is always lexicographic in the coefficient vector, with
coordinate 0 most significant. Searches process the space in chunks and stop
at the first hit, so a returned witness is the lexicographically smallest one.
"""

from __future__ import annotations

import numpy as np

from . import linalg
from .errors import SizeLimitExceeded

DEFAULT_ENUM_CAP = 2**14
CHUNK = 4096


class FiniteAlgebra:
    """Unital algebra with basis b_0..b_{d-1}; ``mult[i, j, k]`` is the b_k-coefficient of b_i b_j."""

    def __init__(self, p: int, mult: np.ndarray, one: np.ndarray):
        self.p = p
        self.mult = np.asarray(mult, dtype=np.int64) % p
        self.one = np.asarray(one, dtype=np.int64) % p
        self.dim = self.mult.shape[0]

    @classmethod
    def from_group_table(cls, p: int, table: np.ndarray, identity: int) -> FiniteAlgebra:
        n = table.shape[0]
        mult = np.zeros((n, n, n), dtype=np.int64)
        i, j = np.meshgrid(np.arange(n), np.arange(n), indexing="ij")
        mult[i, j, table] = 1
        one = np.zeros(n, dtype=np.int64)
        one[identity] = 1
        return cls(p, mult, one)

    @property
    def size(self) -> int:
        return self.p**self.dim

    def mul(self, x, y) -> np.ndarray:
        return np.einsum("i,j,ijk->k", x, y, self.mult) % self.p

    def mul_many(self, xs, ys) -> np.ndarray:
        xs = np.asarray(xs, dtype=np.int64)
        ys = np.asarray(ys, dtype=np.int64)
        tmp = np.einsum("ni,ijk->njk", xs, self.mult) % self.p
        return np.einsum("nj,njk->nk", ys, tmp) % self.p

    def left_matrices(self, xs) -> np.ndarray:
        """``L[n]`` with ``L[n] @ y = xs[n] * y`` (column j is xs[n] * b_j)."""
        return np.einsum("ni,ijk->nkj", np.asarray(xs, dtype=np.int64), self.mult) % self.p

    def left_matrix(self, x) -> np.ndarray:
        return self.left_matrices(np.asarray(x)[None, :])[0]

    def right_matrix(self, y) -> np.ndarray:
        """``R`` with ``R @ x = x * y`` (column i is b_i * y)."""
        return np.einsum("j,ijk->ki", np.asarray(y, dtype=np.int64), self.mult) % self.p

    def is_unit_many(self, xs) -> np.ndarray:
        xs = np.asarray(xs, dtype=np.int64)
        if xs.shape[0] == 0:
            return np.zeros(0, dtype=bool)
        return linalg.batch_rank(self.left_matrices(xs), self.p) == self.dim

    def is_unit(self, x) -> bool:
        return bool(self.is_unit_many(np.asarray(x)[None, :])[0])

    def check_cap(self, count: int, cap: int, what: str) -> None:
        if count > cap:
            raise SizeLimitExceeded(f"{what} needs {count} elements, cap is {cap}", cap, count)

    def chunks(self, dim: int | None = None):
        dim = self.dim if dim is None else dim
        total = self.p**dim
        for start in range(0, total, CHUNK):
            yield linalg.enumerate_vectors(self.p, dim, start, start + CHUNK)

    def trace_form(self) -> np.ndarray:
        """Gram matrix of (x, y) -> trace of left multiplication by xy."""
        traces = np.einsum("kjj->k", self.mult) % self.p
        return np.einsum("ijk,k->ij", self.mult, traces) % self.p

    def trace_form_nondegenerate(self) -> bool:
        return linalg.rank(self.trace_form(), self.p) == self.dim

    def span_products(self, left: np.ndarray, right: np.ndarray) -> np.ndarray:
        """rref basis of span{u v : u in rows(left), v in rows(right)}."""
        if left.shape[0] == 0 or right.shape[0] == 0:
            return np.zeros((0, self.dim), dtype=np.int64)
        tmp = np.einsum("ai,ijk->ajk", left, self.mult) % self.p
        prods = np.einsum("bj,ajk->abk", right, tmp) % self.p
        return linalg.rref(prods.reshape(-1, self.dim), self.p, self.dim)[0]

    def nilpotency_index(self, basis: np.ndarray) -> int | None:
        """Smallest k with I^k = 0 for the span I of ``basis``, or None."""
        current = linalg.rref(basis, self.p, self.dim)[0]
        k = 1
        while current.shape[0]:
            nxt = self.span_products(current, basis)
            if nxt.shape[0] == current.shape[0]:
                return None
            current = nxt
            k += 1
        return k

    def is_two_sided(self, basis: np.ndarray) -> bool:
        basis = linalg.rref(basis, self.p, self.dim)[0]
        eye = np.eye(self.dim, dtype=np.int64)
        for prods in (self.span_products(eye, basis), self.span_products(basis, eye)):
            if prods.shape[0] > basis.shape[0] or not np.array_equal(
                linalg.rref(np.vstack([basis, prods]), self.p, self.dim)[0], basis
            ):
                return False
        return True

    def quotient(self, ideal_basis: np.ndarray) -> tuple[FiniteAlgebra, np.ndarray]:
        """Quotient by a two-sided ideal given in rref.

        Returns ``(Q, complement)`` where ``complement`` lists the coordinates
        of the original basis that survive as the basis of Q.
        """
        basis = linalg.rref(ideal_basis, self.p, self.dim)[0]
        pivots = set(linalg.first_nonzero_columns(basis).tolist()) if basis.shape[0] else set()
        comp = np.array([c for c in range(self.dim) if c not in pivots], dtype=np.int64)
        m = len(comp)
        sub = self.mult[np.ix_(comp, comp)]  # (m, m, d)
        reduced = linalg.reduce_mod(basis, sub.reshape(-1, self.dim), self.p)
        qmult = reduced[:, comp].reshape(m, m, m)
        qone = linalg.reduce_mod(basis, self.one, self.p)[comp]
        return FiniteAlgebra(self.p, qmult, qone), comp

    def radical_exhaustive(self, cap: int = DEFAULT_ENUM_CAP) -> np.ndarray:
        """J = {x : 1 - z is a unit for every z in the left ideal generated by x}.

        Every element is enumerated. A cheap necessary filter (x a non-unit and
        1 - cx a unit for every scalar c) prunes candidates; each surviving
        candidate not already in the span found so far gets the full test over
        all y in the algebra. Returns the rref basis.
        """
        self.check_cap(self.size, cap, "exhaustive radical")
        p, d = self.p, self.dim
        xs = linalg.enumerate_vectors(p, d)
        unit = self.is_unit_many(xs)
        candidate = ~unit
        for c in range(1, p):
            candidate &= unit[linalg.encode(self.one[None, :] - c * xs, p)]
        found = np.zeros((0, d), dtype=np.int64)
        for idx in np.nonzero(candidate)[0]:
            x = xs[idx]
            if linalg.span_contains(found, x, p):
                continue
            rx = self.right_matrix(x)  # column i is b_i x
            zs = xs @ rx.T % p  # every y x
            if unit[linalg.encode(self.one[None, :] - zs, p)].all():
                found = linalg.rref(np.vstack([found, x]), p, d)[0]
        return found

    def find_idempotent(self, cap: int = DEFAULT_ENUM_CAP) -> np.ndarray | None:
        """Lexicographically first idempotent other than 0 and 1."""
        self.check_cap(self.size, cap, "idempotent search")
        for xs in self.chunks():
            sq = self.mul_many(xs, xs)
            hit = (sq == xs).all(axis=1) & xs.any(axis=1) & ~(xs == self.one).all(axis=1)
            if hit.any():
                return xs[np.argmax(hit)]
        return None

    def find_nonunit_outside(self, ideal_basis: np.ndarray, cap: int = DEFAULT_ENUM_CAP) -> np.ndarray | None:
        """First non-unit among the nonzero coset representatives of an ideal.

        Representatives are supported on the non-pivot coordinates of the rref
        basis, so each coset outside the ideal is visited once. Stops at the
        first hit; raises SizeLimitExceeded only if the search would have to
        go past ``cap`` representatives without a hit.
        """
        basis = linalg.rref(ideal_basis, self.p, self.dim)[0]
        pivots = set(linalg.first_nonzero_columns(basis).tolist()) if basis.shape[0] else set()
        comp = [c for c in range(self.dim) if c not in pivots]
        m = len(comp)
        total = self.p**m
        for start in range(1, total, CHUNK):
            if start > cap:
                raise SizeLimitExceeded(
                    f"locality check needs {total - 1} coset representatives, cap is {cap}", cap, total - 1
                )
            coords = linalg.enumerate_vectors(self.p, m, start, min(start + CHUNK, cap + 1, total))
            xs = np.zeros((coords.shape[0], self.dim), dtype=np.int64)
            xs[:, comp] = coords
            bad = ~self.is_unit_many(xs)
            if bad.any():
                return xs[np.argmax(bad)]
        if total - 1 > cap:
            raise SizeLimitExceeded(
                f"locality check needs {total - 1} coset representatives, cap is {cap}", cap, total - 1
            )
        return None
