from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from a6curves.exact import (UPoly, as_rational, coprime, parse_upoly, rational_roots,
                            rational_roots_bruteforce, squarefree_part, upoly_gcd, upoly_xgcd)

small = st.fractions(min_value=-20, max_value=20, max_denominator=6)
polys = st.lists(small, min_size=1, max_size=6).map(lambda cs: UPoly(cs, "x"))


def test_as_rational_refuses_floats():
    with pytest.raises(TypeError):
        as_rational(0.5)
    assert as_rational("3/6") == Fraction(1, 2)


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a - a == UPoly((), "x")


@given(polys, polys.filter(lambda p: not p.is_zero()))
def test_division_identity(a, b):
    q, r = a.divmod(b)
    assert q * b + r == a
    assert r.is_zero() or r.degree < b.degree


@given(polys.filter(lambda p: not p.is_zero()), polys.filter(lambda p: not p.is_zero()))
def test_xgcd_bezout(a, b):
    g, s, t = upoly_xgcd(a, b)
    assert s * a + t * b == g
    assert (a % g).is_zero() and (b % g).is_zero()


@given(st.lists(st.integers(-6, 6), min_size=1, max_size=4), st.integers(1, 4))
def test_rational_roots_planted(roots, den):
    planted = [Fraction(r, den) for r in roots]
    p = UPoly.from_roots(planted) * UPoly((1, 0, 1), "x")
    assert rational_roots(p) == set(planted)


def test_rational_roots_match_bruteforce():
    p = parse_upoly("12*x^3 - 4*x^2 - 3*x + 1")
    assert rational_roots(p) == rational_roots_bruteforce(p) == {Fraction(1, 2), Fraction(-1, 2), Fraction(1, 3)}


@given(polys.filter(lambda p: p.degree > 0))
def test_squarefree_part_of_square(p):
    s = squarefree_part(p * p)
    assert s == squarefree_part(p)
    assert upoly_gcd(s, s.derivative()).degree == 0


def test_coprime_and_parse_roundtrip():
    a = parse_upoly("x^2 - 2")
    assert coprime(a, parse_upoly("x - 1"))
    assert not coprime(a * parse_upoly("x + 5"), parse_upoly("x + 5"))
    assert parse_upoly(str(a)) == a
