"""The pencil P*F^2 + Phi of Wiman's sextic and its singular members.

Finding singular members
------------------------
A member ``P*w^m + v`` of a pencil is singular at an affine point where
``P*w^m + v`` and both partial derivatives vanish.  P occurs linearly, so it
can be eliminated by hand.  Where ``w != 0``, the point is singular iff

    A = w*v_x - m*v*w_x = 0,   B = w*v_y - m*v*w_y = 0,   P = -v / w^m.

The singular parameters are then the values of the function -v/w^m on the
finite set V(A, B) minus V(w).  Their minimal polynomial is computed by exact
linear algebra in the quotient ring of the radical ideal <A, B>.  That
polynomial vanishes at every singular parameter and at no other value, so a
single computation proves both directions.  The bivariate system is tiny next
to the trivariate Jacobian ideal in (x, y, P).

The Jacobian ideal in (x, y, P) is still handled, as a cross-check.  Its
basis is lifted from prime fields and then verified over Q
(:func:`jacobian_cross_check`).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .exact import UPoly, parse_upoly, rational_roots, squarefree_part, upoly_gcd
from .groups import a6_subgroup_classes
from .ideals import (
    Budget,
    GBCache,
    GroebnerBasis,
    Ideal,
    ModularCertificate,
    groebner,
    groebner_multimodular,
    intersect,
    is_radical_certificate,
    minimal_polynomial,
    normal_form,
    ratio_minimal_polynomial,
    reduces_to_zero,
    same_ideal,
    standard_monomials_count,
    vdim,
    zero_dim_radical,
)
from .mpoly import DEGREVLEX, MultiPoly, Ring, hessian_det, mp_subst

PENCIL_VARS = ("x", "y", "z", "P")


@lru_cache(maxsize=None)
def plane_ring() -> Ring:
    return Ring(["x", "y", "z"], DEGREVLEX)


@lru_cache(maxsize=None)
def pencil_ring() -> Ring:
    return Ring(list(PENCIL_VARS), DEGREVLEX)


@lru_cache(maxsize=None)
def wiman_sextic() -> MultiPoly:
    """Wiman's A6-invariant sextic in (x, y, z)."""
    return plane_ring().parse("10*x^3*y^3 + 9*x^5*z + 9*y^5*z - 45*x^2*y^2*z^2 - 135*x*y*z^4 + 27*z^6")


@lru_cache(maxsize=None)
def hessian_phi() -> MultiPoly:
    return hessian_det(wiman_sextic())


def pencil_polynomial() -> MultiPoly:
    """G = P*F^2 + Phi in the ring (x, y, z, P)."""
    R = pencil_ring()
    F = wiman_sextic().to_ring(R)
    return R.var("P") * F * F + hessian_phi().to_ring(R)


@dataclass(frozen=True)
class PencilMember:
    parameter: Fraction | None  # None stands for the point at infinity
    polynomial: MultiPoly

    @classmethod
    def at(cls, parameter: Fraction | int | None) -> "PencilMember":
        F = wiman_sextic()
        if parameter is None:
            return cls(None, F * F)
        P = Fraction(parameter)
        return cls(P, F * F * P + hessian_phi())


def affine_chart(p: MultiPoly, ring: Ring | None = None) -> MultiPoly:
    """Restriction z = 1 into the ring (x, y), or into ``ring`` if given."""
    target = ring or Ring(["x", "y"])
    images = {v: target.var(v) for v in p.ring.vars if v != "z" and v in target.vars}
    images["z"] = target.one()
    return mp_subst(p, images, target)


def jacobian_affine(member: MultiPoly) -> Ideal:
    """<g, g_x, g_y> for the chart z = 1 of a plane curve given in (x, y, z)."""
    g = affine_chart(member)
    return Ideal(g.ring, [g, g.diff("x"), g.diff("y")])


# locus of singular parameters


@dataclass
class LocusResult:
    eliminant: UPoly  # primitive minimal polynomial of the singular parameters
    squarefree: UPoly
    rational_roots: list[Fraction]
    nonlinear_factor: UPoly  # product of the factors without rational roots
    point_count: int  # affine singular points over all parameters
    radical_certified: bool
    method: str = "p-linear"
    details: dict = field(default_factory=dict)


def _pencil_pfree_system(w: MultiPoly, m: int, v: MultiPoly) -> tuple[MultiPoly, MultiPoly]:
    A = w * v.diff("x") - m * v * w.diff("x")
    B = w * v.diff("y") - m * v * w.diff("y")
    return A, B


def pencil_singular_parameters(w: MultiPoly, m: int, v: MultiPoly, var: str = "P",
                               budget: Budget | None = None, cache: GBCache | None = None) -> LocusResult:
    """Parameters P at which the affine curve P*w^m + v = 0 in (x, y) is singular.

    Only singular points off V(w) are seen, which for ``m >= 2`` is no loss:
    at points of V(w) every member is singular iff v is.
    """
    A, B = _pencil_pfree_system(w, m, v)
    system = Ideal(w.ring, [A, B])
    G = cache.load(system, DEGREVLEX) if cache else None
    if G is None:
        G = groebner(system, DEGREVLEX, budget)
        if cache:
            cache.store(system, G)
    if G.is_unit():
        return LocusResult(UPoly((1,), var), UPoly((1,), var), [], UPoly((1,), var), 0, True)
    n_all = standard_monomials_count(G.leading_exponents(), w.ring.nvars)
    if n_all is None:
        raise ValueError("the parameter-free system is not zero-dimensional")
    radical = is_radical_certificate(G)
    if not radical:
        G = groebner(zero_dim_radical(Ideal(w.ring, G.basis), budget), DEGREVLEX, budget)
        n_all = vdim(G)
    on_base = vdim(zero_dim_radical(Ideal(w.ring, list(G.basis) + [w]), budget))
    E = ratio_minimal_polynomial(G, -v, w ** m, var)
    sq = squarefree_part(E).primitive()
    roots = sorted(rational_roots(sq)) if sq.degree > 0 else []
    rest = sq
    for r in roots:
        rest = rest.exact_div(UPoly((-r, 1), var))
    return LocusResult(E.primitive(), sq, roots, rest.primitive(), n_all - on_base, radical,
                       details={"points_of_pfree_system": n_all, "points_on_base": on_base})


def singular_parameter_locus(budget: Budget | None = None, cache: GBCache | None = None) -> LocusResult:
    """Singular parameters of P*F^2 + Phi in the chart z = 1."""
    R = Ring(["x", "y"])
    f = affine_chart(wiman_sextic(), R)
    phi = affine_chart(hessian_phi(), R)
    return pencil_singular_parameters(f, 2, phi, "P", budget, cache)


@dataclass
class CrossCheck:
    basis: GroebnerBasis
    certificate: ModularCertificate
    eliminant: UPoly | None
    vdim: int | None
    radical: bool | None


def jacobian_ideal_xyp() -> Ideal:
    """jG1: <g, g_x, g_y> for g = P*f^2 + phi in the ring (x, y, P)."""
    R = Ring(["x", "y", "P"])
    g = affine_chart(pencil_polynomial(), R)
    return Ideal(R, [g, g.diff("x"), g.diff("y")])


def jacobian_cross_check(budget: Budget | None = None, radical: bool = True,
                         cache: GBCache | None = None) -> CrossCheck:
    """Multimodular basis of jG1, verified over Q, with its P-eliminant and vdim.

    The verification shows that the lifted basis generates an ideal J
    containing jG1.  When J is also radical with as many points as
    :func:`singular_parameter_locus` counts, J is the radical of jG1.
    """
    I = jacobian_ideal_xyp()
    G = cache.load(I, DEGREVLEX) if cache else None
    if G is None:
        G, cert = groebner_multimodular(I, DEGREVLEX, budget)
        if cache and cert.contains_input:
            cache.store(I, G)
    else:
        # a cache hit has just been re-verified over Q by the loader
        cert = ModularCertificate((), True, True)
    elim = None
    for p in G.basis:
        if set(p.variables()) <= {"P"}:
            elim = p.to_upoly("P").primitive()
    rad = is_radical_certificate(G) if radical else None
    return CrossCheck(G, cert, elim, vdim(G), rad)


# the line at infinity


@dataclass
class InfinityResult:
    radical_generators: list[MultiPoly]
    reference_form_matches: bool
    parameter: Fraction | None
    point_count: int
    details: dict = field(default_factory=dict)


def infinity_jacobian() -> Ideal:
    """jG0: the projective Jacobian ideal of the pencil restricted to z = 0, in (x, y, P)."""
    G = pencil_polynomial()
    R = Ring(["x", "y", "P"])
    images = {"x": R.var("x"), "y": R.var("y"), "z": R.constant(0), "P": R.var("P")}
    gens = [mp_subst(h, images, R) for h in (G, G.diff("x"), G.diff("y"), G.diff("z"))]
    return Ideal(R, gens)


def infinity_analysis() -> InfinityResult:
    """Radical of jG0 and the singular points of the pencil on the line z = 0.

    The expected radical is <y(P+c), x(P+c), x^5+y^5>, which is the intersection
    <x, y> and <P+c, x^5+y^5> of two radical ideals.  It is certified by
    showing that both ideals have the same radical: jG0 lies inside the
    candidate, and a power of every candidate generator lies in jG0.
    """
    I = infinity_jacobian()
    R = I.ring
    GI = groebner(I)
    x, y, P = R.gens()
    found = _infinity_parameter(GI)
    cand = [y * (P - found), x * (P - found), x ** 5 + y ** 5] if found is not None else []
    matches = False
    points = 0
    if cand:
        Gc = groebner(Ideal(R, cand))
        inside = all(reduces_to_zero(g, Gc) for g in I.gens)
        powers = all(_power_in(h, GI) for h in cand)
        components = intersect(Ideal(R, [x, y]), Ideal(R, [P - found, x ** 5 + y ** 5]))
        split = same_ideal(list(components.gens), cand)
        # x^5 + 1 squarefree: five distinct points (x : y : 0) on the line
        quintic = UPoly((1, 0, 0, 0, 0, 1), "x")
        points = squarefree_part(quintic).degree
        matches = inside and powers and split
    return InfinityResult(cand, matches, found, points, details={"jG0_basis_size": len(GI.basis)})


def _infinity_parameter(GI: GroebnerBasis) -> Fraction | None:
    """The unique P at which jG0 has a zero with (x, y) != 0, or None."""
    found: set[Fraction] = set()
    # chart x = 1, then the single remaining point x = 0, y = 1
    S = Ring(["y", "P"])
    G1 = groebner(Ideal(S, [mp_subst(h, {"x": S.one(), "y": S.var("y"), "P": S.var("P")}, S) for h in GI.basis]))
    if not G1.is_unit():
        e = minimal_polynomial(G1, S.var("P"), "P")
        if squarefree_part(e).degree != len(rational_roots(e)):
            return None
        found |= rational_roots(e)
    T = Ring(["P"])
    rest = [mp_subst(h, {"x": T.zero(), "y": T.one(), "P": T.var("P")}, T).to_upoly("P") for h in GI.basis]
    h = UPoly((), "P")
    for c in rest:
        h = upoly_gcd(h, c)
    if h.degree > 0:
        if squarefree_part(h).degree != len(rational_roots(h)):
            return None
        found |= rational_roots(h)
    return next(iter(found)) if len(found) == 1 else None


def _power_in(h: MultiPoly, G: GroebnerBasis, limit: int = 64) -> bool:
    t = h
    for _ in range(limit):
        if reduces_to_zero(t, G):
            return True
        t = normal_form(t * h, G)
    return False


# singular members


def _quadratic_ring_check(q: UPoly, budget: Budget | None = None) -> bool:
    """Whether some root of q is a singular parameter (computed inside Q[P]/(q))."""
    R = Ring(["x", "y"])
    f = affine_chart(wiman_sextic(), R)
    phi = affine_chart(hessian_phi(), R)
    A, B = _pencil_pfree_system(f, 2, phi)
    # q(-phi/f^2) cleared of denominators
    d = q.degree
    qt = R.zero()
    for k, c in enumerate(q.coeffs):
        qt = qt + (-phi) ** k * (f * f) ** (d - k) * c
    G = groebner(Ideal(R, [A, B, qt]), DEGREVLEX, budget)
    if G.is_unit():
        return False
    # a point with f != 0 exists iff f is not nilpotent modulo the ideal
    mp = minimal_polynomial(G, f, "T")
    return any(mp.coeffs[:-1]) if mp.degree > 0 else False


def verify_singular_at(P: Fraction | int | UPoly | None, budget: Budget | None = None) -> bool:
    """Whether the member at P has a singular point.

    ``P`` may be a rational, ``None`` for the point at infinity, or a monic
    irreducible polynomial standing for its roots.
    """
    if P is None:
        return True  # F^2 is singular along all of V(F)
    if isinstance(P, UPoly):
        if P.degree == 1:
            return verify_singular_at(-P.coeffs[0] / Fraction(P.coeffs[1]), budget)
        return _quadratic_ring_check(P, budget)
    member = PencilMember.at(P).polynomial
    # projective smoothness is a fast homogeneous computation; try it first
    if smoothness_check(member, budget):
        return False
    if vdim(jacobian_affine(member), DEGREVLEX, budget) not in (0, None):
        return True
    return infinity_singular_points(Fraction(P)) > 0


def infinity_singular_points(P: Fraction) -> int:
    """Number of singular points of the member at P on the line z = 0."""
    G = PencilMember.at(P).polynomial
    S = Ring(["x", "y"])
    gens = [mp_subst(h, {"x": S.var("x"), "y": S.var("y"), "z": S.constant(0)}, S)
            for h in (G, G.diff("x"), G.diff("y"), G.diff("z"))]
    gens = [g for g in gens if g]
    if not gens:
        return -1  # the whole line is singular
    # homogeneous in (x, y): points (x : 1) plus possibly (1 : 0)
    T = Ring(["x"])
    chart = [mp_subst(g, {"x": T.var("x"), "y": T.one()}, T).to_upoly("x") for g in gens]
    h = UPoly((), "x")
    for c in chart:
        h = upoly_gcd(h, c)
    count = squarefree_part(h).degree if h else -1
    if all(g(1, 0) == 0 for g in gens):
        count += 1
    return count


@dataclass
class SingularityReport:
    parameter: Fraction
    affine_tjurina: int
    infinity_points: int
    distinct_certificate: bool
    nodal: bool
    node_count: int

    def consistent(self) -> bool:
        return not self.nodal or self.node_count == self.affine_tjurina + self.infinity_points


def nodality_report(P: Fraction | int, budget: Budget | None = None) -> SingularityReport:
    """Tjurina totals and a radical certificate for the singular points of C_P.

    Affine points: the Tjurina ideal <g, g_x, g_y> in the chart z = 1 has
    vdim equal to the sum of the Tjurina numbers.  If it is radical, every
    point contributes exactly 1, hence every singularity is a node.  Points
    on z = 0 are treated the same way in the chart y = 1.
    """
    P = Fraction(P)
    member = PencilMember.at(P).polynomial
    if smoothness_check(member, budget):
        return SingularityReport(P, 0, 0, True, True, 0)
    J = jacobian_affine(member)
    G = groebner(J, DEGREVLEX, budget)
    tj = vdim(G)
    if tj is None:
        raise ValueError("infinitely many singular points")
    certified = tj == 0 or is_radical_certificate(G)
    inf_points = infinity_singular_points(P)
    inf_ok = True
    if inf_points:
        S = Ring(["x", "z"])
        g = mp_subst(member, {"x": S.var("x"), "y": S.one(), "z": S.var("z")}, S)
        G1 = groebner(Ideal(S, [g, g.diff("x"), g.diff("z")]), DEGREVLEX, budget)
        inf_ok = is_radical_certificate(G1)
    certified = certified and inf_ok
    nodes = tj + inf_points if certified else 0
    return SingularityReport(P, tj, inf_points, certified, certified, nodes)


# arithmetic lemmas


def geometric_genus_nodal(d: int, n: int) -> int:
    top = (d - 1) * (d - 2) // 2
    if d < 1 or not 0 <= n <= top:
        raise ValueError(f"node count {n} out of range for degree {d}")
    return top - n


def decomposition_patterns(total: int = 12, sizes: tuple[int, int] = (10, 6)) -> set[tuple[int, int]]:
    """Nonnegative (k, l) with sizes[0]*k + sizes[1]*l == total."""
    a, b = sizes
    return {(k, (total - a * k) // b) for k in range(total // a + 1) if (total - a * k) % b == 0}


def bezout_contradiction(degrees: list[int], node_count: int) -> bool:
    """True when the pairwise intersection count cannot equal the node count."""
    if sum(degrees) <= 0:
        raise ValueError("empty partition")
    meet = sum(a * b for a, b in combinations(degrees, 2))
    return meet != node_count


def small_index_subgroup_indices(bound: int) -> set[int]:
    return {c.index for c in a6_subgroup_classes() if c.index < bound}


def smoothness_check(F: MultiPoly, budget: Budget | None = None) -> bool:
    """Whether the projective curve F = 0 is nonsingular.

    The partials must have only the origin as common zero: the ideal is then
    zero-dimensional and each variable is nilpotent modulo it.
    """
    if not F.is_homogeneous():
        raise ValueError("expected a homogeneous polynomial")
    G = groebner(Ideal(F.ring, [F.diff(v) for v in F.ring.vars]), DEGREVLEX, budget)
    if G.is_unit():
        return True
    if standard_monomials_count(G.leading_exponents(), F.ring.nvars) is None:
        return False
    cap = max(sum(e) for e in G.leading_exponents()) * F.ring.nvars + 1
    for v in F.ring.vars:
        t = F.ring.var(v)
        for _ in range(cap):
            if normal_form(t, G).is_zero():
                break
            t = t * F.ring.var(v)
        else:
            return False
    return True


def reference_quartic() -> UPoly:
    return parse_upoly("P^4 - 6750*P^3 - 231609375*P^2 - 768867187500*P - 1556956054687500", "P")
