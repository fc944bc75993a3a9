import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from grouprings import linalg

import oracles

PRIMES = [2, 3, 5, 7]


@st.composite
def matrices(draw, max_rows=6, max_cols=6):
    p = draw(st.sampled_from(PRIMES))
    rows = draw(st.integers(0, max_rows))
    cols = draw(st.integers(1, max_cols))
    entries = draw(st.lists(st.integers(0, p - 1), min_size=rows * cols, max_size=rows * cols))
    return p, np.array(entries, dtype=np.int64).reshape(rows, cols)


@settings(max_examples=200, deadline=None)
@given(matrices())
def test_rank_matches_plain_elimination(pm):
    p, m = pm
    expected = oracles.rank_mod_p(m.tolist(), p) if m.shape[0] else 0
    assert linalg.rank(m, p) == expected


@settings(max_examples=200, deadline=None)
@given(matrices())
def test_rref_is_canonical(pm):
    p, m = pm
    r, pivots = linalg.rref(m, p, m.shape[1])
    again, pivots2 = linalg.rref(r, p, m.shape[1])
    assert np.array_equal(r, again) and pivots == pivots2
    for row, c in enumerate(pivots):
        assert r[row, c] == 1
        assert np.count_nonzero(r[:, c]) == 1
    # same row space in a shuffled order
    shuffled = m[::-1]
    assert np.array_equal(linalg.rref(shuffled, p, m.shape[1])[0], r)


@settings(max_examples=200, deadline=None)
@given(matrices())
def test_nullspace(pm):
    p, m = pm
    ns = linalg.nullspace(m, p, m.shape[1])
    assert ns.shape[0] == m.shape[1] - linalg.rank(m, p)
    if ns.shape[0] and m.shape[0]:
        assert not (m @ ns.T % p).any()


@settings(max_examples=100, deadline=None)
@given(matrices(max_rows=5, max_cols=5), st.integers(0, 10**6))
def test_solve(pm, seed):
    p, m = pm
    if m.shape[0] == 0:
        return
    rng = np.random.default_rng(seed)
    x = rng.integers(0, p, size=m.shape[1])
    b = m @ x % p
    sol = linalg.solve(m, b, p)
    assert sol is not None and np.array_equal(m @ sol % p, b)


def test_solve_inconsistent():
    assert linalg.solve([[1, 1], [1, 1]], [0, 1], 2) is None


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(PRIMES), st.integers(1, 5), st.integers(0, 10**6))
def test_batch_rref_matches_single(p, size, seed):
    rng = np.random.default_rng(seed)
    mats = rng.integers(0, p, size=(8, size, size))
    mats[0] = 0
    mats[1] = np.eye(size, dtype=np.int64)
    reduced, ranks = linalg.batch_rref(mats, p)
    for k in range(8):
        r, _ = linalg.rref(mats[k], p, size)
        assert ranks[k] == r.shape[0]
        assert np.array_equal(reduced[k][: ranks[k]], r)
        assert not reduced[k][ranks[k]:].any()


def test_span_and_reduce():
    basis = linalg.rref([[1, 1, 0], [0, 1, 1]], 2)[0]
    assert linalg.span_contains(basis, [1, 0, 1], 2)
    assert not linalg.span_contains(basis, [0, 0, 1], 2)
    assert linalg.span_contains(np.zeros((0, 3), dtype=np.int64), [0, 0, 0], 2)
    assert not linalg.reduce_mod(basis, [1, 0, 1], 2).any()


@pytest.mark.parametrize("p,dim", [(2, 3), (3, 2), (5, 2), (2, 1)])
def test_enumeration_is_lexicographic(p, dim):
    vs = linalg.enumerate_vectors(p, dim)
    assert vs.tolist() == [list(v) for v in itertools.product(range(p), repeat=dim)]
    assert linalg.encode(vs, p).tolist() == list(range(p**dim))
    assert linalg.enumerate_vectors(p, dim, 2, 4).tolist() == vs[2:4].tolist()


def test_inverse_table():
    for p in PRIMES:
        inv = linalg.inverse_table(p)
        assert inv[0] == 0
        assert all(a * inv[a] % p == 1 for a in range(1, p))
