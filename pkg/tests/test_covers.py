from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from a6curves.covers import (Signature, branch_assignments, build_cover_system, case445, case2225,
                             discriminant_parity_certificate, genus19_case, genus19_cases,
                             inversion_identity_check, multiplicity_partition, quotient_signature,
                             resolvent_certificate, rh_enumerate, solve_cover, verify_solution)
from a6curves.exact import UPoly
from a6curves.groups import a6_standard, alternating_group
from a6curves.mpoly import Ring
from a6curves.symfunc import ElementarySpec


@given(st.integers(0, 1), st.lists(st.integers(2, 12), max_size=4))
def test_rh_enumeration_contains_every_signature(g, idx):
    sig = Signature(g, tuple(idx))
    L = sig.rh_value()
    if not 0 < L <= 2:  # the enumeration grows quickly with L
        return
    found = rh_enumerate(L)
    assert sig in found
    assert all(s.rh_value() == L for s in found)


def test_rh_small_values():
    assert [str(s) for s in rh_enumerate(Fraction(1, 20))] == ["(0, (2, 4, 5))"]
    assert Signature(0, (3, 3, 4)) in rh_enumerate(Fraction(1, 12))
    with pytest.raises(ValueError):
        rh_enumerate(0)


def test_quotient_signatures():
    A6, A5 = a6_standard(), alternating_group(5)
    assert quotient_signature(10, A6) == {Signature(0, (2, 4, 5))}
    assert quotient_signature(19, A6) == {Signature(0, (2, 5, 5))}
    assert quotient_signature(19, A6, element_orders=False) == {Signature(0, (2, 5, 5)), Signature(0, (2, 3, 15))}
    loose = quotient_signature(10, A5, (2, 4, 5), element_orders=False)
    assert loose == {Signature(0, (4, 4, 5)), Signature(0, (2, 2, 2, 5))}
    assert quotient_signature(10, A5, (2, 4, 5)) == {Signature(0, (2, 2, 2, 5))}


@pytest.mark.parametrize("sig", [Signature(0, (4, 4, 5)), Signature(0, (2, 2, 2, 5))])
def test_fiber_bookkeeping(sig):
    base = {"1": 2, "0": 4, "inf": 5}
    for case in branch_assignments(sig, base):
        if not case.feasible:
            continue
        for point, _ in case.base:
            assert sum(case.fiber(point)) == 6
        assert case.ramification_total() == 10


def test_infeasible_placements():
    cases = branch_assignments(Signature(0, (2, 2, 2, 5)), {"1": 2, "0": 4, "inf": 5})
    assert sorted(dict(c.assignment)["0"].count(2) for c in cases if c.feasible) == [1, 3]
    assert sum(not c.feasible for c in genus19_cases()) == 2


def test_multiplicity_partition():
    p = UPoly.from_roots([0, 0, 0, 1, 1, 2])
    assert multiplicity_partition(p) == (3, 2, 1)
    assert multiplicity_partition(UPoly((1, 0, 1), "x") ** 2) == (2, 2)


def test_case445_solution():
    out = solve_cover(case445())
    (sol,) = out.solutions
    assert sol.values == {"k": Fraction(1, 256), "l": Fraction(1, 64), "m": Fraction(5, 64)}
    assert len(sol.branches) == 2 and sol.verified
    assert verify_solution(case445(), sol)


def test_case2225_all_over_zero_is_empty():
    out = solve_cover(case2225(3))
    assert not out.solutions and out.unsolvable_certificate


def test_genus19_solutions():
    out = solve_cover(genus19_case())
    rational = [s for s in out.solutions if s.field is None]
    assert [(s.values["k"], s.values["l"]) for s in rational] == [(Fraction(1, 64), Fraction(1, 16))]
    assert all(s.verified for s in out.solutions)
    assert len(build_cover_system(genus19_case()).gens) > 0


def test_inversion_guard_and_branches():
    with pytest.raises(ValueError):
        inversion_identity_check(Fraction(0), Fraction(1))
    assert not inversion_identity_check(Fraction(1, 64), Fraction(1, 16))
    # lambda = -1, kappa = 1 satisfies lambda^3 = -kappa^2
    assert inversion_identity_check(Fraction(1), Fraction(-1))


def test_discriminant_toys():
    R = Ring(("w", "t"))
    assert discriminant_parity_certificate(R.parse("w^2 - t")).order == 1
    toy = discriminant_parity_certificate(R.parse("w^2 - t^2"))
    assert toy.order == 2 and not toy.holds


def test_resolvent_toys():
    x = UPoly.gen("x")
    # roots 0,0,0,0,1,2: three matchings pair 1 with 2 (value 2), twelve give 0
    good = resolvent_certificate(ElementarySpec.from_roots([0, 0, 0, 0, 1, 2]), [(x - 2) ** 3, x ** 12])
    assert good.holds
    # all roots 1: f15 = (x - 3)^15 has no coprime splitting
    bad = resolvent_certificate(ElementarySpec.from_roots([1] * 6), [(x - 3) ** 5, (x - 3) ** 10])
    assert bad.product_matches and not bad.holds
