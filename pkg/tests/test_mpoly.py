from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from a6curves.curves import hessian_phi, wiman_sextic
from a6curves.exact import upoly_gcd
from a6curves.mpoly import (MultiPoly, Ring, bordered_hessian, det_bareiss, format_poly_file,
                            hessian_det, mp_det, parse_poly_file, sylvester_matrix, sylvester_resultant)
from a6curves.mpoly import _det_cofactor

R = Ring(("x", "y", "z"))
coef = st.integers(-5, 5)
monos = st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3))
polys = st.dictionaries(monos, coef, max_size=5).map(lambda d: MultiPoly(R, {e: c for e, c in d.items() if c}))


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * (b * c) == (a * b) * c
    assert a - a == R.zero()


@given(polys, polys)
def test_product_rule(a, b):
    assert (a * b).diff("x") == a.diff("x") * b + a * b.diff("x")


@given(polys)
def test_text_roundtrip(p):
    ring, [q] = parse_poly_file(format_poly_file(R, [p])) if p else (R, [p])
    assert q == p


def test_compact_names():
    S = Ring(("a", "b", "e"))
    assert S.parse("b2e - 1") == S.var("b") ** 2 * S.var("e") - 1


@given(st.lists(st.lists(st.integers(-4, 4), min_size=4, max_size=4), min_size=4, max_size=4))
def test_bareiss_matches_cofactor(M):
    Mq = [[Fraction(v) for v in row] for row in M]
    assert det_bareiss(Mq) == _det_cofactor(Mq)


def test_wiman_invariants_oracle():
    F = wiman_sextic()
    phi = hessian_phi()
    assert phi.total_degree() == 12 and phi.is_homogeneous()
    # values from an independent symbolic computation
    assert phi(1, 1, 1) == -316406250
    assert phi(0, 0, 1) == -14762250
    psi = bordered_hessian(F, phi)
    assert psi.total_degree() == 30
    assert psi(1, 0, 0) == 29893556250000
    assert psi(1, 1, 1) == -1216371917724609375000000


def test_hessian_of_quadric():
    q = R.parse("x^2 + y^2 - z^2")
    assert hessian_det(q) == R.constant(-8)


@given(st.integers(-5, 5), st.lists(st.integers(-5, 5), min_size=1, max_size=3),
       st.lists(st.integers(-5, 5), min_size=1, max_size=3))
def test_resultant_detects_planted_factor(root, f, g):
    S = Ring(("w",))
    w = S.var("w")
    p = (w - root) * sum((c * w ** i for i, c in enumerate(f)), S.zero())
    q = (w - root) * sum((c * w ** i for i, c in enumerate(g)), S.zero())
    if p.degree("w") < 1 or q.degree("w") < 1:
        return
    assert sylvester_resultant(p, q, "w").is_zero()
    assert upoly_gcd(p.to_upoly("w"), q.to_upoly("w")).degree >= 1


def test_resultant_of_coprime_pair():
    S = Ring(("w",))
    assert sylvester_resultant(S.parse("w^2 - 2"), S.parse("w - 1"), "w") == S.constant(-1)


def test_sylvester_determinant_of_sextic():
    S = Ring(("w", "t"))
    p = S.parse("w^6 + 4*w^5 + 20*w^4 - 256*t*w + 256*t")
    M = sylvester_matrix(p, p.diff("w"), "w")
    assert len(M) == 11
    d = mp_det(M)
    # the raw determinant is Res(p, p'), the negative of the discriminant for degree 6
    disc = S.parse("879609302220800000*t^6 - 2638827906662400000*t^5"
                   " + 2638827906662400000*t^4 - 879609302220800000*t^3")
    assert d == -disc


def test_sylvester_rejects_two_constants():
    S = Ring(("w",))
    with pytest.raises(ValueError):
        sylvester_matrix(S.constant(3), S.constant(5), "w")
