import random

import pytest
from hypothesis import given, settings, strategies as st

from a6curves.ideals import (Budget, BudgetExceeded, GBCache, Ideal, contains, eliminate,
                             eliminate_zero_dim, groebner, groebner_multimodular, intersect,
                             is_groebner, is_radical_certificate, is_reduced, normal_form,
                             reduces_to_zero, s_polynomial, same_ideal, solvable_with_unit,
                             univariate_eliminant, vdim, zero_dim_radical)
from a6curves.mpoly import DEGREVLEX, LEX, MultiPoly, Ring

R = Ring(("x", "y", "z"))


def random_ideal(rng: random.Random, ngens: int = 3) -> Ideal:
    gens = []
    for _ in range(ngens):
        terms = {}
        for _ in range(rng.randint(1, 3)):
            e = tuple(rng.randint(0, 2) for _ in range(3))
            terms[e] = rng.randint(-3, 3) or 1
        gens.append(MultiPoly(R, terms))
    return Ideal(R, gens)


def test_hundred_random_ideals():
    rng = random.Random(20261016)
    for _ in range(100):
        I = random_ideal(rng)
        G = groebner(I)
        assert is_reduced(G)
        for i, f in enumerate(G.basis):
            for g in G.basis[i + 1:]:
                assert reduces_to_zero(s_polynomial(f, g, G.order), G)
        assert all(reduces_to_zero(g, G) for g in I.gens)


@given(st.integers(0, 10**6))
@settings(max_examples=25)
def test_normal_form_is_idempotent(seed):
    rng = random.Random(seed)
    G = groebner(random_ideal(rng))
    p = random_ideal(rng, 1).gens[0]
    r = normal_form(p, G)
    assert normal_form(r, G) == r
    assert reduces_to_zero(p - r, G)


def test_lex_triangular_example():
    I = Ideal(R, [R.parse("x^2 + y^2 + z^2 - 1"), R.parse("x - y"), R.parse("y - z")])
    G = groebner(I, LEX)
    assert is_groebner(list(G.basis), LEX)
    assert G.basis[-1] == R.parse("3*z^2 - 1")
    assert vdim(I) == 2


def test_zero_dim_elimination_agrees():
    rng = random.Random(7)
    checked = 0
    while checked < 15:
        x, y, z = R.gens()
        I = Ideal(R, [x ** 2 - rng.randint(1, 5) * y + z, y ** 2 - z * rng.randint(-3, 3) - 1,
                      z ** 2 + x - rng.randint(-4, 4)])
        if vdim(I) is None:
            continue
        a = eliminate(I, ["x"])
        b = eliminate_zero_dim(I, ["x"])
        assert sorted(str(g) for g in a.gens) == sorted(str(g) for g in b.gens)
        checked += 1


def test_eliminant_is_minimal_polynomial():
    I = Ideal(R, [R.parse("x^2 - 2"), R.parse("y^2 - 3"), R.parse("z - x - y")])
    f = univariate_eliminant(I, "z")
    assert str(f.monic()) == "z^4 - 10*z^2 + 1"
    assert is_radical_certificate(groebner(I))


def test_radical_of_double_point():
    I = Ideal(R, [R.parse("x^2"), R.parse("y"), R.parse("z")])
    assert vdim(I) == 2
    assert vdim(zero_dim_radical(I)) == 1


def test_rabinowitsch():
    I = Ideal(R, [R.parse("x*y"), R.parse("y - 1"), R.parse("z")])
    assert not solvable_with_unit(I, "x")
    assert solvable_with_unit(I, "y")


def test_multimodular_matches_direct():
    rng = random.Random(11)
    for _ in range(10):
        I = random_ideal(rng)
        G = groebner(I)
        H, cert = groebner_multimodular(I)
        if cert.contains_input:
            assert H.basis == G.basis


def test_intersection_of_points():
    x, y, z = R.gens()
    I = Ideal(R, [x, y, z])
    J = Ideal(R, [x - 1, y, z])
    K = intersect(I, J)
    assert vdim(K) == 2
    assert contains(K, x * (x - 1))
    assert not contains(K, x)


def test_budget_raises():
    rng = random.Random(3)
    with pytest.raises(BudgetExceeded):
        groebner(random_ideal(rng, 4), budget=Budget(max_steps=1))


def test_cache_roundtrip_and_tamper(tmp_path):
    I = Ideal(R, [R.parse("x^2 - y"), R.parse("y^2 - z"), R.parse("z^2 - x")])
    cache = GBCache(str(tmp_path))
    assert cache.load(I, DEGREVLEX) is None
    G = groebner(I, DEGREVLEX)
    cache.store(I, G)
    assert cache.load(I, DEGREVLEX).basis == G.basis
    path = next(tmp_path.glob("gb-*.txt"))
    path.write_text("x - 1\n")
    assert cache.load(I, DEGREVLEX) is None


def test_same_ideal_detects_difference():
    a = [R.parse("x^2 - 1"), R.parse("y")]
    assert same_ideal(a, [R.parse("x^2 - 1 + y"), R.parse("y")])
    assert not same_ideal(a, [R.parse("x - 1"), R.parse("y")])
