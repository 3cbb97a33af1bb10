from itertools import combinations

from hypothesis import given, settings, strategies as st

from a6curves.exact import UPoly
from a6curves.mpoly import Ring
from a6curves.symfunc import (ElementarySpec, bivariate_to_nested, elementary_polys, f15_by_enumeration,
                              is_symmetric, nested_to_bivariate, newton_coefficients, omega0, orbit,
                              power_sums_from_coefficients, resolvent_f15, root_ring, stabilizer_order,
                              sym_to_elementary, verify_factorization)

small = st.fractions(min_value=-6, max_value=6, max_denominator=3)


def test_omega_orbit_has_fifteen_members():
    w = omega0()
    assert len(orbit(w)) == 15
    assert stabilizer_order(w) == 48
    assert not is_symmetric(w)


def test_fundamental_theorem_on_power_sum():
    R = root_ring()
    p2 = sum((v ** 2 for v in R.gens()), R.zero())
    q = sym_to_elementary(p2)
    E = q.ring
    assert q == E.var("e1") ** 2 - 2 * E.var("e2")


def test_elementary_polys_expand_correctly():
    R = root_ring()
    es = elementary_polys(R)
    r = R.gens()
    assert es[1] == sum((r[i] * r[j] for i, j in combinations(range(6), 2)), R.zero())
    assert es[5] == r[0] * r[1] * r[2] * r[3] * r[4] * r[5]


@given(st.lists(small, min_size=1, max_size=6))
def test_newton_roundtrip(roots):
    n = len(roots)
    sums = [sum(r ** k for r in roots) for k in range(1, n + 1)]
    a = newton_coefficients(sums, n)
    f = UPoly.from_roots(roots)
    assert list(reversed(a)) == list(f.coeffs)
    assert power_sums_from_coefficients(a, n + 3) == [sum(r ** k for r in roots) for k in range(1, n + 4)]


@given(st.lists(st.integers(-3, 3), min_size=6, max_size=6))
@settings(max_examples=5)
def test_resolvent_matches_enumeration(roots):
    f = resolvent_f15(ElementarySpec.from_roots(roots))
    g = f15_by_enumeration(roots)
    assert all(c.degree <= 0 for c in f.coeffs)
    assert [c.coeffs[0] if c.coeffs else 0 for c in f.coeffs] == list(g.coeffs)


def test_nested_roundtrip():
    R = Ring(("x", "t"))
    p = R.parse("x^3*t^2 - 5*x*t + 7*t^4 - 1")
    assert nested_to_bivariate(bivariate_to_nested(p), R) == p


def test_factorization_report():
    R = Ring(("x", "t"))
    a = bivariate_to_nested(R.parse("x^2 - t"))
    b = bivariate_to_nested(R.parse("x + t"))
    rep = verify_factorization([a, b], a * b)
    assert rep.product_matches and rep.coprime_pairs
    rep2 = verify_factorization([a, a], a * a)
    assert rep2.product_matches and not rep2.coprime_pairs
