import pytest

from grouprings.coeffs import Kind, gf, parse_coeff_spec, residue_field, ring_is_local, zmod
from grouprings.errors import InvalidArgument, NotAUnit, NotLocal, ParseError


def test_kinds():
    assert gf(5).kind is Kind.PRIME_FIELD and gf(5).is_field
    assert zmod(4).kind is Kind.MOD_RING and not zmod(4).is_field
    assert zmod(4).characteristic == 4
    with pytest.raises(InvalidArgument):
        gf(6)
    with pytest.raises(InvalidArgument):
        zmod(1)


def test_arithmetic():
    r = zmod(6)
    assert r.add(4, 5) == 3
    assert r.neg(2) == 4
    assert r.mul(4, 5) == 2
    assert r.is_unit(5) and not r.is_unit(3)
    assert r.inverse(5) == 5
    with pytest.raises(NotAUnit):
        r.inverse(2)
    assert gf(7).inverse(3) == 5
    assert zmod(9).inverse(2) == 5


@pytest.mark.parametrize("n", range(2, 40))
def test_inverse_round_trip(n):
    r = zmod(n)
    for a in range(n):
        if r.is_unit(a):
            assert r.mul(a, r.inverse(a)) == 1


def test_locality():
    assert ring_is_local(gf(5)).prime == 5
    w = ring_is_local(zmod(4))
    assert w.local and w.prime == 2 and w.maximal_generator == 2
    assert ring_is_local(zmod(9)).prime == 3
    w = ring_is_local(zmod(6))
    assert not w.local
    s, t = w.nonunits
    r = zmod(6)
    assert not r.is_unit(s) and not r.is_unit(t) and r.is_unit(r.add(s, t))
    assert w.nonunits == (4, 3)


@pytest.mark.parametrize("n", range(2, 60))
def test_locality_matches_nonunit_closure(n):
    r = zmod(n)
    nonunits = [a for a in range(n) if not r.is_unit(a)]
    closed = all(not r.is_unit((a + b) % n) for a in nonunits for b in nonunits)
    assert bool(ring_is_local(r)) == closed


def test_residue_field():
    k, red = residue_field(zmod(9))
    assert k == gf(3) and red(7) == 1
    k, red = residue_field(gf(5))
    assert k == gf(5) and red(3) == 3
    with pytest.raises(NotLocal):
        residue_field(zmod(6))


def test_parse():
    assert parse_coeff_spec("gf:3") == gf(3)
    assert parse_coeff_spec(" ZMOD : 4 ") == zmod(4)
    for bad in ["gf:4", "zmod:1", "f:3", "gf", ""]:
        with pytest.raises(ParseError):
            parse_coeff_spec(bad)
