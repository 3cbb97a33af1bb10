"""Quotient signatures and degree-6 rational maps P^1 -> P^1 with fixed fibers.

Curves with an A6 action map to C/A5 -> C/A6, and when both quotients are
rational the middle arrow is a degree-6 rational function f whose fibers over
0, 1 and infinity are dictated by the ramification data.  This module
enumerates the data, writes the coefficient-matching ideal for each
admissible fiber pattern, solves it exactly, and checks the two Galois
exclusions (discriminant parity and the degree-15 resolvent).
"""

from __future__ import annotations

import itertools
import json
import math
from collections import Counter
import dataclasses
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from typing import Any, Iterable, Mapping, Sequence

from .exact import UPoly, format_rational, rational_roots, squarefree_part, upoly_gcd
from .groups import PermGroup, a6_standard, a6_subgroup_classes, has_subgroup_of_order
from .ideals import (Budget, Ideal, eliminate, eliminate_zero_dim, groebner, minimal_polynomial,
                     solvable_with_unit, univariate_eliminant, vdim)
from .mpoly import MultiPoly, Ring, TermOrder, sylvester_resultant
from .numberfield import NumberField, NumberFieldElem
from .symfunc import (ElementarySpec, bivariate_to_nested, genus19_spec, resolvent_f15,
                      verify_factorization)

BASE_POINTS = ("0", "1", "inf")
ONE_NAMES = "abcdefghij"
ZERO_NAMES = "klmnopqrs"


@lru_cache(maxsize=1)
def golden() -> dict:
    """Reference objects shipped with the package."""
    text = resources.files("a6curves").joinpath("data/golden.json").read_text()
    return json.loads(text)


# Riemann-Hurwitz enumeration


@dataclass(frozen=True, order=True)
class Signature:
    genus: int
    indices: tuple[int, ...]

    def __post_init__(self) -> None:
        idx = tuple(sorted(int(r) for r in self.indices))
        if any(r < 2 for r in idx):
            raise ValueError("ramification indices must be at least 2")
        if self.genus < 0:
            raise ValueError("negative genus")
        object.__setattr__(self, "indices", idx)

    def rh_value(self) -> Fraction:
        """2g' - 2 + sum(1 - 1/r)."""
        return 2 * self.genus - 2 + sum((1 - Fraction(1, r) for r in self.indices), Fraction(0))

    def to_json(self) -> list:
        return [self.genus, list(self.indices)]

    def __str__(self) -> str:
        return f"({self.genus}, ({', '.join(map(str, self.indices))}))"


def _reciprocal_tuples(target: Fraction, count: int, smallest: int) -> list[tuple[int, ...]]:
    """Ascending tuples r_1 <= ... <= r_count, r_1 >= smallest, with sum 1/r_i = target."""
    if count == 0:
        return [()] if target == 0 else []
    if target <= 0:
        return []
    out = []
    # 1/r_1 is the largest term: target/count <= 1/r_1 <= target
    lo = max(smallest, 2, math.ceil(1 / target))
    hi = math.floor(count / target)
    for r in range(lo, hi + 1):
        for tail in _reciprocal_tuples(target - Fraction(1, r), count - 1, r):
            out.append((r,) + tail)
    return out


def rh_enumerate(L: Fraction | int | str) -> list[Signature]:
    """All signatures (g', r_1..r_s) with 2g' - 2 + sum(1 - 1/r_i) = L.

    The number of branch points obeys T < s <= 2T with T = L - (2g' - 2),
    because each term 1 - 1/r lies in [1/2, 1).
    """
    L = Fraction(L)
    if L <= 0:
        raise ValueError("L must be positive")
    found = []
    g = 0
    while 2 * g - 2 <= L:
        T = L - (2 * g - 2)
        if T == 0:
            found.append(Signature(g, ()))
        s = int(T) + 1
        while s <= 2 * T:
            for idx in _reciprocal_tuples(s - T, s, 2):
                found.append(Signature(g, idx))
            s += 1
        g += 1
    return sorted(set(found))


def quotient_signature(g: int, group: PermGroup, allowed: Iterable[int] | None = None,
                       element_orders: bool = True) -> set[Signature]:
    """Signatures of C -> C/G for a genus-g curve C with a faithful G action.

    Point stabilizers are cyclic, so with ``element_orders`` every index must
    be the order of some element.  ``allowed`` keeps only indices dividing one
    of the given numbers (the indices of a map further down the tower).
    """
    if g < 2:
        raise ValueError("genus must be at least 2")
    L = Fraction(2 * g - 2, group.order)
    orders = set(group.element_order_census()) if element_orders else None
    allowed = tuple(allowed) if allowed is not None else None
    out = set()
    for sig in rh_enumerate(L):
        if orders is not None and any(r not in orders for r in sig.indices):
            continue
        if allowed is not None and any(all(a % r for a in allowed) for r in sig.indices):
            continue
        out.add(sig)
    return out


def order15_excluded() -> bool:
    """A6 has no subgroup of order 15, which removes the signature (2, 3, 15)."""
    return not has_subgroup_of_order(a6_standard(), 15, list(a6_subgroup_classes()))


# branch assignments and the ansatz


@dataclass(frozen=True)
class CoverCase:
    """One way of placing the branch points of C -> C/A5 over 0, 1, infinity.

    ``fibers`` lists, per base point, the local degrees of f at the points of
    the fiber.  Normalization: the pole of order deg-1 sits at w = infinity,
    the simple pole at w = 1, and the largest part over 0 at w = 0.
    """

    label: str
    upstairs: Signature
    base: tuple[tuple[str, int], ...]
    assignment: tuple[tuple[str, tuple[int, ...]], ...]
    fibers: tuple[tuple[str, tuple[int, ...]], ...]
    degree: int = 6
    feasible: bool = True
    reason: str = ""

    def fiber(self, point: str) -> tuple[int, ...]:
        return dict(self.fibers)[point]

    def ramification_total(self) -> int:
        return sum(e - 1 for _, parts in self.fibers for e in parts)


def _fiber_parts(e_b: int, assigned: Sequence[int], degree: int) -> tuple[int, ...] | None:
    parts = [e_b // r for r in assigned]
    rest = degree - sum(parts)
    if rest < 0 or rest % e_b:
        return None
    return tuple(sorted(parts + [e_b] * (rest // e_b), reverse=True))


def branch_assignments(upstairs: Signature, base: Mapping[str, int], degree: int = 6) -> list[CoverCase]:
    """Every placement of the upstairs branch points compatible with divisibility.

    A point of index r may only lie over a base point whose index e is a
    multiple of r; f then has local degree e/r there.  Placements whose
    fibers cannot add up to ``degree`` come back with ``feasible=False``.
    """
    if upstairs.genus != 0:
        raise NotImplementedError("only rational intermediate quotients")
    base = {b: int(base.get(b, 1)) for b in BASE_POINTS}
    counts = Counter(upstairs.indices)
    per_index = []
    for r, c in sorted(counts.items()):
        targets = [b for b in BASE_POINTS if base[b] % r == 0]
        if not targets:
            return []
        splits = []
        for combo in itertools.combinations_with_replacement(targets, c):
            splits.append(Counter(combo))
        per_index.append((r, splits))
    cases = []
    for choice in itertools.product(*(s for _, s in per_index)):
        assigned = {b: [] for b in BASE_POINTS}
        for (r, _), split in zip(per_index, choice):
            for b, k in split.items():
                assigned[b].extend([r] * k)
        fibers, bad = [], []
        for b in BASE_POINTS:
            parts = _fiber_parts(base[b], assigned[b], degree)
            if parts is None:
                bad.append(b)
            fibers.append((b, parts or ()))
        label = ";".join(f"{b}<-{','.join(map(str, sorted(assigned[b]))) or '-'}" for b in BASE_POINTS)
        reason = ""
        if bad:
            reason = "fiber over " + ", ".join(bad) + " cannot have total degree %d" % degree
        case = CoverCase(label, upstairs, tuple(sorted(base.items())),
                         tuple((b, tuple(sorted(assigned[b]))) for b in BASE_POINTS),
                         tuple(fibers), degree, not bad, reason)
        if case.feasible and case.ramification_total() != 2 * degree - 2:
            raise ValueError(f"inconsistent degree bookkeeping in {label}")
        cases.append(case)
    return sorted(cases, key=lambda c: c.label)


@dataclass(frozen=True)
class Ansatz:
    """f = N(w)/(w - 1) with N - (w - 1) = RHS, both in unknowns plus w."""

    ring: Ring
    unknown_ring: Ring
    one_vars: tuple[str, ...]
    zero_vars: tuple[str, ...]
    numerator: MultiPoly
    one_side: MultiPoly
    one_groups: tuple[tuple[int, int, bool], ...]
    one_names: tuple[tuple[str, ...], ...]
    lead_var: str


def _group(parts: Sequence[int]) -> list[tuple[int, int]]:
    """(multiplicity, count) pairs, highest multiplicity first."""
    return sorted(Counter(parts).items(), reverse=True)


def cover_ansatz(case: CoverCase) -> Ansatz:
    d = case.degree
    if case.fiber("inf") != (d - 1, 1):
        raise NotImplementedError("the normalization needs an infinity fiber of shape (d-1, 1)")
    zero = case.fiber("0")
    one = case.fiber("1")
    if sum(zero) != d or sum(one) != d:
        raise ValueError("inconsistent degree bookkeeping")
    e0, rest0 = zero[0], zero[1:]
    zgroups = _group(rest0)
    ogroups = _group(one)
    # unknown names: monic factors get only lower coefficients
    znames: list[list[str]] = []
    zi = iter(ZERO_NAMES)
    if not zgroups:
        znames.append([next(zi)])
    for k, (m, c) in enumerate(reversed(zgroups)):
        znames.append([next(zi) for _ in range(c + 1 if k == 0 else c)])
    lead_zero = znames[0][0]
    # lc(N) is a bare unknown exactly when the general factor is not raised to a power
    single_lead = not zgroups or zgroups[-1][0] == 1
    onames: list[list[str]] = []
    oi = iter(ONE_NAMES)
    reuse = single_lead and ogroups[-1][0] == 1
    for k, (m, c) in enumerate(ogroups):
        general = k == len(ogroups) - 1
        if general and not reuse:
            onames.append([next(oi) for _ in range(c + 1)])
        elif general:
            onames.append([lead_zero] + [next(oi) for _ in range(c)])
        else:
            onames.append([next(oi) for _ in range(c)])
    one_vars = tuple(n for g in onames for n in g if n in ONE_NAMES)
    zero_vars = tuple(n for g in znames for n in g)
    R = Ring(one_vars + zero_vars + ("w",))
    w = R.var("w")

    def factor(names: Sequence[str], deg: int, monic: bool) -> MultiPoly:
        p = w ** deg if monic else R.zero()
        top = deg - 1 if monic else deg
        for i, n in enumerate(names):
            p = p + R.var(n) * w ** (top - i)
        return p

    N = w ** e0
    if not zgroups:
        N = N * R.var(znames[0][0])
    for k, (m, c) in enumerate(reversed(zgroups)):
        N = N * factor(znames[k], c, monic=k != 0) ** m
    rhs = R.one()
    flags = []
    for k, (m, c) in enumerate(ogroups):
        general = k == len(ogroups) - 1
        rhs = rhs * factor(onames[k], c, monic=not general) ** m
        flags.append((m, c, not general))
    return Ansatz(R, Ring(one_vars + zero_vars), one_vars, zero_vars, N, rhs, tuple(flags),
                  tuple(tuple(g) for g in onames), lead_zero)


def build_cover_system(case: CoverCase) -> Ideal:
    """Coefficient-matching ideal of N(w) - (w - 1) = RHS."""
    if not case.feasible:
        raise ValueError(f"inconsistent degree bookkeeping: {case.reason}")
    a = cover_ansatz(case)
    w = a.ring.var("w")
    diff = a.numerator - (w - 1) - a.one_side
    coeffs = diff.coefficients_in("w")
    gens = [coeffs[k].to_ring(a.unknown_ring).primitive() for k in sorted(coeffs)]
    return Ideal(a.unknown_ring, gens)


# solving


@dataclass
class CoverSolution:
    """A solved cover; values live in Q or in ``field`` when it is set."""

    label: str
    values: dict[str, Any]
    numerator: UPoly
    denominator: UPoly
    field: NumberField | None = None
    branches: list[dict[str, Any]] = dataclasses.field(default_factory=list)
    verified: bool = False

    def to_json(self) -> dict:
        def enc(v: Any) -> Any:
            if isinstance(v, NumberFieldElem):
                return {"coords": [format_rational(Fraction(c)) for c in v.flat_coords()]}
            return format_rational(Fraction(v))

        out = {"label": self.label, "values": {k: enc(v) for k, v in sorted(self.values.items())},
               "numerator": [enc(c) for c in self.numerator.coeffs],
               "denominator": [enc(c) for c in self.denominator.coeffs],
               "branches": len(self.branches), "verified": self.verified}
        if self.field is not None:
            out["minpoly"] = str(self.field.minpoly)
        return out


@dataclass
class CoverOutcome:
    case: CoverCase
    solutions: list[CoverSolution]
    system: Ideal | None = None
    elimination: Ideal | None = None
    eliminant: UPoly | None = None
    unsolvable_certificate: bool = False
    note: str = ""


def multiplicity_partition(p: UPoly) -> tuple[int, ...]:
    """Root multiplicities of p over an algebraic closure (Yun's algorithm)."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    parts: list[int] = []
    a = p.monic()
    b = a.derivative()
    c = upoly_gcd(a, b)
    wpoly = a.exact_div(c) if c.degree > 0 else a
    i = 1
    while wpoly.degree > 0:
        y = upoly_gcd(wpoly, c)
        z = wpoly.exact_div(y)
        parts.extend([i] * z.degree)
        wpoly = y
        c = c.exact_div(y) if y.degree > 0 else c
        i += 1
    return tuple(sorted(parts, reverse=True))


def _yun_factors(p: UPoly) -> dict[int, UPoly]:
    """Monic squarefree factors by multiplicity."""
    out = {}
    a = p.monic()
    c = upoly_gcd(a, a.derivative())
    wpoly = a.exact_div(c)
    i = 1
    while wpoly.degree > 0:
        y = upoly_gcd(wpoly, c)
        z = wpoly.exact_div(y)
        if z.degree > 0:
            out[i] = z
        wpoly = y
        c = c.exact_div(y)
        i += 1
    return out


def _eval_in_w(p: MultiPoly, values: Mapping[str, Any], one: Any) -> UPoly:
    """Substitute values for every variable but w; result is a UPoly in w."""
    ring = p.ring
    wi = ring.index("w")
    coeffs: dict[int, Any] = {}
    for e, c in p.terms.items():
        term = one * c
        for i, k in enumerate(e):
            if i != wi and k:
                term = term * values[ring.vars[i]] ** k
        coeffs[e[wi]] = coeffs.get(e[wi], one * 0) + term
    deg = max(coeffs) if coeffs else 0
    return UPoly([coeffs.get(k, one * 0) for k in range(deg + 1)], "w")


def _eval(p: MultiPoly, values: Mapping[str, Any], one: Any) -> Any:
    total = one * 0
    for e, c in p.terms.items():
        term = one * c
        for i, k in enumerate(e):
            if k:
                term = term * values[p.ring.vars[i]] ** k
        total = total + term
    return total


def _rational_root(value: Any, m: int) -> list[Fraction]:
    """Rational m-th roots of a rational value."""
    if isinstance(value, NumberFieldElem):
        if not value.is_rational():
            raise NotImplementedError("m-th roots of irrational leading coefficients")
        value = value.flat_coords()[0]
    q = Fraction(value)
    poly = UPoly([-q] + [0] * (m - 1) + [1], "r")
    return sorted(rational_roots(poly))


def _lift_one_side(a: Ansatz, values: Mapping[str, Any], one: Any) -> list[dict[str, Any]]:
    """All assignments of the 1-fiber unknowns matching N - (w - 1).

    Monic factors are read off the squarefree decomposition.  A general
    factor raised to a power m > 1 is fixed only up to an m-th root of
    unity, which gives the sign branches for m = 2.
    """
    w = a.ring.var("w")
    D = _eval_in_w(a.numerator - (w - 1), values, one)
    yun = _yun_factors(D)
    monic_part = UPoly([one], "w")
    fixed: dict[str, Any] = {}
    general = None
    for (m, c, monic), names in zip(a.one_groups, a.one_names):
        if not monic:
            general = (m, c, names)
            continue
        S = yun.get(m)
        if S is None or S.degree != c:
            return []
        monic_part = monic_part * S ** m
        for j, n in enumerate(names):
            fixed[n] = S.coeffs[c - 1 - j]
    m, c, names = general
    Q, r = D.divmod(monic_part)
    if not r.is_zero() or Q.degree != m * c:
        return []
    if m == 1:
        candidates = [Q]
    else:
        S = yun.get(m)
        if S is None or S.degree != c:
            return []
        candidates = [S * (one * s) for s in _rational_root(Q.lc, m)]
    out = []
    for P in candidates:
        full = dict(fixed)
        for j, n in enumerate(names):
            if n in a.one_vars:
                full[n] = P.coeffs[c - j]
        out.append(full)
    return out


def _shape_solutions(EI: Ideal, budget: Budget | None) -> list[tuple[NumberField | None, dict[str, Any]]]:
    """Points of a zero-dimensional ideal, grouped by the factors of the last eliminant.

    Rational roots are split off; the remaining squarefree factor is handled
    in one stroke in Q[v]/(factor), which covers all conjugate roots at once.
    """
    ring = EI.ring
    vars_ = ring.vars
    last = vars_[-1]
    lex = TermOrder("lex")
    elim = univariate_eliminant(EI, last, budget)
    if elim.degree < 1:
        return []
    sqf = squarefree_part(elim)
    pieces: list[UPoly] = []
    for r in sorted(rational_roots(sqf)):
        pieces.append(UPoly([-r, 1], last))
        sqf = sqf.exact_div(UPoly([-r, 1], last))
    if sqf.degree > 0:
        pieces.append(sqf.primitive())
    out = []
    for piece in pieces:
        gens = list(EI.gens) + [_univariate(piece, ring)]
        G = groebner(Ideal(ring, gens), lex, budget)
        K = None if piece.degree == 1 else NumberField(piece.primitive(), last)
        theta = -piece.coeffs[0] / piece.coeffs[1] if K is None else K.gen()
        one = Fraction(1) if K is None else K.one()
        values: dict[str, Any] = {last: theta}
        for v in vars_[:-1]:
            g = next((p for p in G.basis if p.degree(v) == 1 and
                      all(p.degree(u) == 0 for u in vars_[:-1] if u != v)), None)
            if g is None:
                raise NotImplementedError("elimination ideal is not in shape position")
            parts = g.coefficients_in(v)
            lead = parts[1]
            if not lead.is_constant():
                raise NotImplementedError("elimination ideal is not in shape position")
            tail = parts.get(0, ring.zero())
            if any(tail.degree(u) for u in vars_[:-1]):
                raise NotImplementedError("elimination ideal is not in shape position")
            values[v] = -_eval(tail, values, one) / lead.constant_coeff()
        out.append((K, values))
    return out


def _univariate(u: UPoly, ring: Ring) -> MultiPoly:
    i = ring.index(u.var)
    terms = {}
    for k, c in enumerate(u.coeffs):
        if c:
            e = [0] * ring.nvars
            e[i] = k
            terms[tuple(e)] = c
    return MultiPoly(ring, terms)


def verify_solution(case: CoverCase, sol: CoverSolution) -> bool:
    """Fibers of the solved map over 0, 1 and infinity match the case."""
    N, D = sol.numerator, sol.denominator
    d = case.degree
    if N.degree != d or D.degree != 1 or not N(D.coeffs[0] * -1 / D.coeffs[1]):
        return False
    if multiplicity_partition(N) != case.fiber("0"):
        return False
    if multiplicity_partition(N - D) != case.fiber("1"):
        return False
    return case.ramification_total() == 2 * d - 2


def solve_cover(case: CoverCase, budget: Budget | None = None) -> CoverOutcome:
    """Solve the coefficient system of ``case`` exactly.

    Infeasible placements return no solutions.  Otherwise the system is
    first tested for a solution with nonzero leading coefficient (the
    leading unknown must not be nilpotent modulo the system; when it is, a
    Rabinowitsch unit confirms the empty solution set); then the 1-fiber unknowns are eliminated, the
    remaining zero-dimensional ideal is solved over Q or a number field,
    and each point is lifted back and substituted into every generator.
    """
    if not case.feasible:
        return CoverOutcome(case, [], note=case.reason)
    a = cover_ansatz(case)
    I = build_cover_system(case)
    G = groebner(I, budget=budget)
    zero_dim = G.is_unit() or vdim(G) is not None
    if zero_dim:
        # a solution with the leading unknown nonzero exists iff it is not nilpotent
        mp = minimal_polynomial(G, I.ring.var(a.lead_var), a.lead_var)
        possible = any(mp.coeffs[:-1]) if mp.degree > 0 else False
    else:
        possible = True
    if not possible:
        cert = not solvable_with_unit(I, a.lead_var, budget)
        return CoverOutcome(case, [], I, unsolvable_certificate=cert,
                            note=f"no solution with {a.lead_var} != 0")
    EI = eliminate_zero_dim(G, a.one_vars, budget) if zero_dim else eliminate(I, a.one_vars, budget)
    last = a.zero_vars[-1]
    eliminant = univariate_eliminant(EI, last, budget)
    solutions = []
    for K, vals in _shape_solutions(EI, budget):
        one = Fraction(1) if K is None else K.one()
        if vals[a.lead_var] == 0:
            continue
        N = _eval_in_w(a.numerator, vals, one)
        Dn = UPoly([-one, one], "w")
        sol = CoverSolution(case.label, vals, N, Dn, K)
        sol.branches = _lift_one_side(a, vals, one)
        checks = [all(_eval(g, {**vals, **br}, one) == 0 for g in I.gens) for br in sol.branches]
        sol.verified = bool(sol.branches) and all(checks) and verify_solution(case, sol)
        if sol.verified:
            solutions.append(sol)
    return CoverOutcome(case, solutions, I, EI, eliminant)


# shipped cases


def genus10_cases(sub: Signature) -> list[CoverCase]:
    return branch_assignments(sub, {"1": 2, "0": 4, "inf": 5})


def genus19_cases() -> list[CoverCase]:
    return branch_assignments(Signature(0, (2, 2, 5, 5)), {"1": 2, "0": 5, "inf": 5})


def case445() -> CoverCase:
    (case,) = [c for c in genus10_cases(Signature(0, (4, 4, 5))) if c.feasible]
    return case


def case2225(over_zero: int) -> CoverCase:
    """The (2,2,2,5) placement with ``over_zero`` index-2 points over 0."""
    for c in genus10_cases(Signature(0, (2, 2, 2, 5))):
        if dict(c.assignment)["0"].count(2) == over_zero:
            return c
    raise KeyError(over_zero)


def genus19_case() -> CoverCase:
    (case,) = [c for c in genus19_cases() if c.feasible]
    return case


# Galois exclusions


@dataclass
class DiscriminantCertificate:
    discriminant: MultiPoly
    resultant: MultiPoly
    order: int
    index2_subgroup_in_a6: bool

    @property
    def holds(self) -> bool:
        return self.order % 2 == 1 and not self.index2_subgroup_in_a6

    def __bool__(self) -> bool:
        return self.holds

    def coefficients(self, var: str = "t") -> dict[int, Fraction]:
        i = self.discriminant.ring.index(var)
        return {e[i]: c for e, c in self.discriminant.terms.items()}


def sextic_genus10(ring: Ring | None = None) -> MultiPoly:
    ring = ring or Ring(("w", "t"))
    return ring.parse("w^6 + 4*w^5 + 20*w^4 - 256*t*w + 256*t")


def discriminant_parity_certificate(p: MultiPoly | None = None, var: str = "w",
                                    param: str = "t") -> DiscriminantCertificate:
    """Odd t-adic order of the discriminant rules out Galois group A6.

    disc(p) = (-1)^(n(n-1)/2) Res(p, p') / lc(p); an odd order at t = 0
    makes it a non-square in Q(t), so the Galois group lies in no A_n and
    has an index-2 subgroup, which A6 lacks.
    """
    p = p if p is not None else sextic_genus10()
    n = p.degree(var)
    res = sylvester_resultant(p, p.diff(var), var)
    lc = p.coefficients_in(var)[n]
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    disc = (res * sign).exact_div(lc) if not lc.is_constant() else res * (Fraction(sign) / lc.constant_coeff())
    if disc.is_zero():
        raise ValueError("p is not squarefree")
    ti = disc.ring.index(param)
    order = min(e[ti] for e in disc.terms)
    index2 = has_subgroup_of_order(a6_standard(), 180, list(a6_subgroup_classes()))
    return DiscriminantCertificate(disc, res, order, index2)


def mobius_compose(num: UPoly, den: UPoly, m: tuple[Any, Any, Any, Any], degree: int) -> tuple[UPoly, UPoly]:
    """num/den evaluated at (a w + b)/(c w + d), both homogenized to ``degree``."""
    a, b, c, d = m
    X = UPoly([b, a], num.var)
    Y = UPoly([d, c], num.var)

    def hom(p: UPoly) -> UPoly:
        out = UPoly([a * 0], num.var)
        for i, coeff in enumerate(p.coeffs):
            if coeff:
                out = out + X ** i * Y ** (degree - i) * coeff
        return out

    return hom(num), hom(den)


def genus19_map(kappa: Any, lam: Any) -> tuple[UPoly, UPoly]:
    zero = kappa * 0
    one = zero + 1
    num = UPoly([zero] * 5 + [lam, kappa], "w")
    den = UPoly([-one, one], "w")
    return num, den


def inversion_identity_check(kappa: Any, lam: Any) -> bool:
    """lambda^3/kappa^2 = -1 and f(-lambda/(kappa w)) f(w) = 1 for f = w^5(kappa w + lambda)/(w - 1)."""
    if not kappa or not lam:
        raise ValueError("kappa and lambda must be nonzero")
    if lam ** 3 / kappa ** 2 != -1:
        return False
    num, den = genus19_map(kappa, lam)
    zero = kappa * 0
    n2, d2 = mobius_compose(num, den, (zero, -lam, kappa, zero), 6)
    return n2 * num == d2 * den


@dataclass
class ResolventCertificate:
    resolvent: UPoly
    product_matches: bool
    coprime: bool
    factor_degrees: tuple[int, ...]

    @property
    def holds(self) -> bool:
        return self.product_matches and self.coprime and len(self.factor_degrees) > 1 \
            and all(d > 0 for d in self.factor_degrees)

    def __bool__(self) -> bool:
        return self.holds


def reference_resolvent_factors(ring: Ring | None = None) -> tuple[UPoly, list[UPoly]]:
    data = golden()["galois.resolvent"]
    ring = ring or Ring(("x", "t"))
    f = bivariate_to_nested(ring.parse(data["f15"]), "x", "t")
    return f, [bivariate_to_nested(ring.parse(s), "x", "t") for s in data["factors"]]


def _over_qt(f: UPoly) -> UPoly:
    """View a polynomial with rational coefficients as one over Q[t]."""
    if all(isinstance(c, UPoly) for c in f.coeffs):
        return f
    return UPoly([c if isinstance(c, UPoly) else UPoly.constant(c, "t") for c in f.coeffs], f.var)


def resolvent_certificate(spec: ElementarySpec | None = None,
                          factors: Sequence[UPoly] | None = None,
                          resolvent: UPoly | None = None) -> ResolventCertificate:
    """Two coprime nonconstant factors show f15 is no power of an irreducible."""
    if resolvent is None:
        resolvent = resolvent_f15(spec or genus19_spec())
    if factors is None:
        factors = reference_resolvent_factors()[1]
    factors = [_over_qt(f) for f in factors]
    rep = verify_factorization(factors, _over_qt(resolvent))
    return ResolventCertificate(resolvent, rep.product_matches, rep.coprime_pairs,
                                tuple(f.degree for f in factors))
