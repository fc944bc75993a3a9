import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from grouprings.coeffs import gf, zmod
from grouprings.errors import IncompatibleElements, ParseError, UnsupportedCoefficients
from grouprings.laurent import LaurentPoly, inverse_in_window, lp_add, lp_is_unit, lp_mul, parse_laurent


def poly(p, mapping):
    return LaurentPoly.of(gf(p), mapping)


def test_arithmetic_examples():
    x, xinv = poly(5, {1: 1}), poly(5, {-1: 1})
    assert lp_mul(x, xinv) == poly(5, {0: 1})
    one_plus_x = poly(2, {0: 1, 1: 1})
    assert lp_mul(one_plus_x, one_plus_x) == poly(2, {0: 1, 2: 1})
    step = poly(3, {0: 1, 1: 1, 2: -1})
    assert lp_mul(step, poly(3, {1: 1})) == poly(3, {1: 1, 2: 1, 3: -1})
    assert lp_add(x, x) == poly(5, {1: 2})
    assert (x - x).is_zero()
    with pytest.raises(IncompatibleElements):
        lp_add(poly(2, {0: 1}), poly(3, {0: 1}))
    with pytest.raises(UnsupportedCoefficients):
        LaurentPoly.of(zmod(4), {0: 1})


def test_canonical_form():
    x = poly(3, {2: 3, -1: 4, 0: 0})
    assert x.terms == ((-1, 1),)
    assert str(poly(3, {-2: 1, 0: 2, 1: 1})) == "x^-2 + 2 + x"


def test_unit_examples():
    cert = lp_is_unit(poly(3, {5: 2}))
    assert cert.unit and cert.inverse == poly(3, {-5: 2})
    cert = lp_is_unit(poly(2, {0: 1, 1: 1, 2: -1}))
    assert not cert.unit and cert.support_size == 3
    assert cert.min_term == (0, 1) and cert.max_term == (2, 1)
    assert not lp_is_unit(poly(2, {})).unit


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_theorem_step_is_not_a_unit(p):
    x = poly(p, {0: 1, 1: 1, 2: -1})
    assert not lp_is_unit(x).unit
    assert inverse_in_window(x, -8, 8) is None


def _window_brute_force(x, lo, hi):
    """Enumerate every y with support in [lo, hi] (tiny windows only)."""
    p = x.field.modulus
    one = poly(p, {0: 1})
    width = hi - lo + 1
    for code in range(p**width):
        coeffs = {lo + k: (code // p**k) % p for k in range(width)}
        y = poly(p, coeffs)
        if lp_mul(x, y) == one:
            return y
    return None


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([2, 3]), st.dictionaries(st.integers(-3, 3), st.integers(1, 2), min_size=1, max_size=3))
def test_window_search_matches_enumeration(p, mapping):
    x = poly(p, mapping)
    if x.is_zero():
        return
    found = inverse_in_window(x, -3, 3)
    brute = _window_brute_force(x, -3, 3)
    assert (found is None) == (brute is None)
    assert lp_is_unit(x).unit == (found is not None)


@settings(max_examples=100, deadline=None)
@given(st.sampled_from([2, 3, 5, 7]), st.lists(st.tuples(st.integers(-5, 5), st.integers(1, 6)), min_size=1, max_size=4))
def test_products_of_monomials_are_units(p, monomials):
    x = poly(p, {0: 1})
    for k, c in monomials:
        if c % p:
            x = lp_mul(x, poly(p, {k: c}))
    cert = lp_is_unit(x)
    assert cert.unit
    assert lp_mul(x, cert.inverse) == poly(p, {0: 1})


@settings(max_examples=100, deadline=None)
@given(st.sampled_from([2, 3, 5, 7]), st.integers(0, 10**6))
def test_multi_term_polynomials_are_not_units(p, seed):
    rng = np.random.default_rng(seed)
    degrees = rng.choice(np.arange(-4, 5), size=int(rng.integers(2, 5)), replace=False)
    x = poly(p, {int(d): int(rng.integers(1, p)) for d in degrees})
    assert not lp_is_unit(x).unit
    assert inverse_in_window(x, -8, 8) is None


def test_parse():
    assert parse_laurent("1 + x - x^2", 2) == poly(2, {0: 1, 1: 1, 2: 1})
    assert parse_laurent("2x^-3 + 4", 5) == poly(5, {-3: 2, 0: 4})
    assert parse_laurent("-x^ -1 + 3*x", 7) == poly(7, {-1: -1, 1: 3})
    assert parse_laurent("x - x", 3).is_zero()
    for bad, pos in [("", 0), ("1 + ", 2), ("1 x^2 x", 6), ("1+*x", 2), ("x^", 1), ("2 *", 3)]:
        with pytest.raises(ParseError) as info:
            parse_laurent(bad, 3)
        assert info.value.position == pos
