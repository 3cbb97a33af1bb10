from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from a6curves.exact import UPoly
from a6curves.numberfield import NumberField, rho_tau_field

K = NumberField(UPoly((-2, 0, 1), "s"), "s")
q = st.fractions(min_value=-9, max_value=9, max_denominator=5)
elems = st.tuples(q, q).map(lambda c: K.element(list(c)))


@given(elems, elems, elems)
def test_field_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)


@given(elems.filter(bool))
def test_inverse(a):
    assert a * a.inverse() == K.one()
    assert a / a == K.one()


def test_generator_relation():
    s = K.gen()
    assert s * s == K(2)
    assert not (s * s - 2)


def test_reducible_modulus_has_zero_divisors():
    R = NumberField(UPoly((-1, 0, 1), "u"), "u")
    with pytest.raises(ZeroDivisionError):
        (R.gen() - 1).inverse()


def test_tower_relations():
    k, rho, tau = rho_tau_field()
    assert rho * rho + rho + 1 == k.zero()
    assert tau * tau == tau + 1
    assert k.absolute_degree == 4
    assert (rho * tau).inverse() * rho * tau == k.one()
    assert Fraction(1, 2) * (tau + tau) == tau
