from fractions import Fraction

import pytest

from a6curves.curves import (PencilMember, affine_chart, bezout_contradiction, decomposition_patterns,
                             geometric_genus_nodal, hessian_phi, infinity_analysis, nodality_report,
                             pencil_singular_parameters, small_index_subgroup_indices, smoothness_check,
                             wiman_sextic)
from a6curves.exact import UPoly, squarefree_part
from a6curves.mpoly import Ring, det_bareiss


def conic_parameters(q1: str, q2: str) -> UPoly:
    """Singular members of the conic pencil P*q1 + q2 from det(P*M1 + M2)."""
    R = Ring(("x", "y", "z"))
    a, b = R.parse(q1), R.parse(q2)
    P = UPoly.gen("P")
    M = [[P * Fraction(a.diff(u).diff(v).constant_coeff()) + Fraction(b.diff(u).diff(v).constant_coeff())
          for v in "xyz"] for u in "xyz"]
    return squarefree_part(det_bareiss(M)).monic()


# generic pairs: every singular member has its vertex in the chart z = 1 and off q1 = 0,
# which is where the chart computation looks
@pytest.mark.parametrize("q1,q2", [("x^2 - 2*y*z + z^2", "y^2 + x*z - 3*z^2"),
                                   ("x^2 + 3*x*y - y^2 + 2*x*z - z^2", "2*x^2 - y*z + x*z + 5*z^2"),
                                   ("x^2 + y^2 - 4*z^2", "x*y + x*z + 2*z^2")])
def test_conic_pencil_against_determinant(q1, q2):
    R = Ring(("x", "y"))
    w = affine_chart(Ring(("x", "y", "z")).parse(q1), R)
    v = affine_chart(Ring(("x", "y", "z")).parse(q2), R)
    res = pencil_singular_parameters(w, 1, v)
    expected = conic_parameters(q1, q2)
    assert res.squarefree.monic() == expected


def test_sextic_and_hessian_smooth():
    assert smoothness_check(wiman_sextic())
    assert smoothness_check(hessian_phi())
    R = Ring(("x", "y", "z"))
    assert not smoothness_check(R.parse("x*y*z"))


def test_pencil_members():
    assert PencilMember.at(None).polynomial == wiman_sextic() ** 2
    assert PencilMember.at(0).polynomial == hessian_phi()


def test_nodal_members():
    rep = nodality_report(20250)
    assert rep.nodal and rep.node_count == 36 and rep.consistent()
    rep = nodality_report(-10125)
    assert rep.nodal and rep.infinity_points == 5 and rep.node_count == 45
    assert nodality_report(1).node_count == 0


def test_infinity():
    res = infinity_analysis()
    assert res.parameter == -10125


def test_lemmas():
    assert geometric_genus_nodal(12, 45) == 10
    assert geometric_genus_nodal(12, 36) == 19
    with pytest.raises(ValueError):
        geometric_genus_nodal(4, 4)
    assert decomposition_patterns() == {(0, 2)}
    assert bezout_contradiction([6, 6], 45)
    assert not bezout_contradiction([6, 6], 36)
    assert small_index_subgroup_indices(21) == {1, 6, 10, 15, 20}
