"""Symmetric functions in six root variables and the degree-15 resolvent.

Symmetric polynomials are handled in the monomial-symmetric basis: a dict
mapping a partition (a non-increasing 6-tuple) to the coefficient of that
exponent vector.  Products with elementary polynomials are computed directly
in this basis, which keeps the Gauss reduction to e_1..e_6 small.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations
from math import factorial
from typing import Iterable, Sequence

from .exact import UPoly, as_rational, upoly_gcd
from .mpoly import MultiPoly, Ring

N_ROOTS = 6
ROOT_VARS = tuple(f"r{i}" for i in range(1, N_ROOTS + 1))
ELEM_VARS = tuple(f"e{i}" for i in range(1, N_ROOTS + 1))

Partition = tuple[int, ...]


def root_ring() -> Ring:
    return Ring(ROOT_VARS)


def elementary_ring() -> Ring:
    return Ring(ELEM_VARS)


def omega0(ring: Ring | None = None) -> MultiPoly:
    """r1*r2 + r3*r4 + r5*r6."""
    R = ring or root_ring()
    r = R.gens()
    return r[0] * r[1] + r[2] * r[3] + r[4] * r[5]


def permute_vars(p: MultiPoly, perm: Sequence[int]) -> MultiPoly:
    """Image of p under r_i -> r_{perm[i]} (0-based images)."""
    n = len(perm)
    out = {}
    for e, c in p.terms.items():
        ne = [0] * n
        for i, k in enumerate(e):
            ne[perm[i]] = k
        out[tuple(ne)] = c
    return MultiPoly(p.ring, out)


def orbit(p: MultiPoly) -> list[MultiPoly]:
    """Distinct images of p under all permutations of the ring variables, in first-seen order."""
    if p.is_zero():
        raise ValueError("orbit of the zero polynomial")
    seen: dict[MultiPoly, None] = {}
    for perm in permutations(range(p.ring.nvars)):
        seen.setdefault(permute_vars(p, perm), None)
    return list(seen)


def stabilizer_order(p: MultiPoly) -> int:
    return sum(1 for perm in permutations(range(p.ring.nvars)) if permute_vars(p, perm) == p)


def is_symmetric(p: MultiPoly) -> bool:
    """Invariance under the generators (1 2) and (1 2 ... n) of the symmetric group."""
    n = p.ring.nvars
    swap = [1, 0] + list(range(2, n))
    cycle = [(i + 1) % n for i in range(n)]
    return permute_vars(p, swap) == p and permute_vars(p, cycle) == p


# monomial-symmetric representation


def to_msym(p: MultiPoly) -> dict[Partition, Fraction]:
    """Coefficients of p on partition exponent vectors (p assumed symmetric)."""
    return {e: Fraction(c) for e, c in p.terms.items() if all(e[i] >= e[i + 1] for i in range(len(e) - 1))}


def msym_to_poly(m: dict[Partition, Fraction], ring: Ring) -> MultiPoly:
    out: dict[tuple[int, ...], Fraction] = {}
    for lam, c in m.items():
        for e in set(permutations(lam)):
            out[e] = c
    return MultiPoly(ring, out)


def _pull_elementary(f: dict[Partition, Fraction], j: int, n: int, cap: int,
                     targets: Iterable[Partition]) -> dict[Partition, Fraction]:
    """f * e_j on the given target partitions.

    The coefficient of x^nu in f*e_j is the sum over j-subsets S of the
    coefficient of x^(nu - 1_S) in f.  Truncating targets to parts <= cap is
    exact because every source partition has parts no larger than its target.
    """
    out: dict[Partition, Fraction] = {}
    subsets = list(combinations(range(n), j))
    for nu in targets:
        total = 0
        for S in subsets:
            mu = list(nu)
            ok = True
            for i in S:
                mu[i] -= 1
                if mu[i] < 0:
                    ok = False
                    break
            if not ok:
                continue
            c = f.get(tuple(sorted(mu, reverse=True)))
            if c:
                total += c
        if total:
            out[nu] = total
    return out


def _partitions(total: int, parts: int, cap: int) -> list[Partition]:
    """Non-increasing tuples of length ``parts`` with entries <= cap summing to total."""
    out: list[Partition] = []

    def rec(prefix: list[int], left: int, mx: int) -> None:
        if len(prefix) == parts:
            if left == 0:
                out.append(tuple(prefix))
            return
        slots = parts - len(prefix)
        for v in range(min(mx, left), -1, -1):
            if v * slots < left:
                break
            rec(prefix + [v], left - v, v)

    rec([], total, cap)
    return out


class _ElementaryTable:
    """Memoized monomial-symmetric expansions of products of e_1..e_n."""

    def __init__(self, n: int, cap: int):
        self.n = n
        self.cap = cap
        # expansions of e-products have integer coefficients
        self.memo: dict[tuple[int, ...], dict[Partition, int]] = {(0,) * n: {(0,) * n: 1}}

    def expansion(self, exps: tuple[int, ...]) -> dict[Partition, int]:
        got = self.memo.get(exps)
        if got is not None:
            return got
        j = next(i for i, k in enumerate(exps) if k)
        smaller = list(exps)
        smaller[j] -= 1
        base = self.expansion(tuple(smaller))
        deg = sum((i + 1) * k for i, k in enumerate(exps))
        targets = _partitions(deg, self.n, self.cap)
        res = _pull_elementary(base, j + 1, self.n, self.cap, targets)
        self.memo[exps] = res
        return res


@lru_cache(maxsize=8)
def _shared_table(n: int, cap: int) -> _ElementaryTable:
    return _ElementaryTable(n, cap)


def _e_exponents(lam: Partition) -> tuple[int, ...]:
    """The e-monomial whose leading term is x^lam: e_i^(lam_i - lam_{i+1})."""
    n = len(lam)
    return tuple(lam[i] - (lam[i + 1] if i + 1 < n else 0) for i in range(n))


def msym_to_elementary(m: dict[Partition, Fraction], n: int = N_ROOTS,
                       table: _ElementaryTable | None = None) -> dict[tuple[int, ...], Fraction]:
    """Gauss reduction: peel off the lex-leading partition with the matching e-monomial."""
    m = {k: v for k, v in m.items() if v}
    if not m:
        return {}
    cap = max(lam[0] for lam in m)
    if table is None or table.cap < cap or table.n != n:
        table = _shared_table(n, cap)
    out: dict[tuple[int, ...], Fraction] = {}
    while m:
        lam = max(m)
        c = m[lam]
        ex = _e_exponents(lam)
        out[ex] = out.get(ex, 0) + c
        for mu, d in table.expansion(ex).items():
            v = m.get(mu, 0) - c * d
            if v:
                m[mu] = v
            else:
                m.pop(mu, None)
        if lam in m:
            raise AssertionError("leading partition did not cancel")
    return out


def sym_to_elementary(p: MultiPoly) -> MultiPoly:
    """Unique Q with Q(e_1(r), ..., e_n(r)) = p, as a polynomial in e1..en."""
    if not is_symmetric(p):
        raise ValueError("polynomial is not symmetric")
    n = p.ring.nvars
    ring = Ring(tuple(f"e{i}" for i in range(1, n + 1)))
    return MultiPoly(ring, msym_to_elementary(to_msym(p), n))


def elementary_polys(ring: Ring) -> list[MultiPoly]:
    """e_1..e_n in the variables of ``ring``."""
    n = ring.nvars
    out = []
    for j in range(1, n + 1):
        terms = {}
        for S in combinations(range(n), j):
            e = [0] * n
            for i in S:
                e[i] = 1
            terms[tuple(e)] = Fraction(1)
        out.append(MultiPoly(ring, terms))
    return out


# power sums of the orbit of omega_0


def _pair_matchings(n: int = N_ROOTS) -> list[tuple[tuple[int, int], ...]]:
    """The 15 perfect matchings of {0..5}: the orbit of omega_0 as index pairs."""
    def rec(rest: tuple[int, ...]) -> list[tuple[tuple[int, int], ...]]:
        if not rest:
            return [()]
        a = rest[0]
        out = []
        for k in range(1, len(rest)):
            b = rest[k]
            for tail in rec(rest[1:k] + rest[k + 1:]):
                out.append(((a, b),) + tail)
        return out

    return rec(tuple(range(n)))


def orbit_power_sum_msym(k: int) -> dict[Partition, Fraction]:
    """Sum over the 15 matchings of omega^k, restricted to partition exponents.

    Each omega^k is expanded multinomially over its three products
    (k+2 choose 2 terms), then only sorted exponent vectors are kept.
    """
    out: dict[Partition, int] = {}
    fk = factorial(k)
    for match in _pair_matchings():
        for a in range(k + 1):
            for b in range(k - a + 1):
                c = k - a - b
                e = [0] * N_ROOTS
                for (i, j), p in zip(match, (a, b, c)):
                    e[i] += p
                    e[j] += p
                if any(e[i] < e[i + 1] for i in range(N_ROOTS - 1)):
                    continue
                t = tuple(e)
                out[t] = out.get(t, 0) + fk // (factorial(a) * factorial(b) * factorial(c))
    return out


@dataclass(frozen=True)
class ElementarySpec:
    """Values of e_1..e_6 of the roots, as polynomials in t."""

    values: tuple[UPoly, ...]

    def __post_init__(self) -> None:
        if len(self.values) != N_ROOTS:
            raise ValueError("need six elementary values")

    @classmethod
    def from_monic(cls, coeffs_desc: Sequence[UPoly | int | Fraction], var: str = "t") -> "ElementarySpec":
        """From w^6 + c1 w^5 + ... + c6: e_i = (-1)^i c_i."""
        vals = []
        for i, c in enumerate(coeffs_desc, start=1):
            u = c if isinstance(c, UPoly) else UPoly((as_rational(c),), var)
            vals.append(u * ((-1) ** i))
        return cls(tuple(vals))

    @classmethod
    def from_roots(cls, roots: Sequence[int | Fraction], var: str = "t") -> "ElementarySpec":
        vals = []
        for j in range(1, N_ROOTS + 1):
            s = Fraction(0)
            for S in combinations(roots, j):
                prod = Fraction(1)
                for r in S:
                    prod *= r
                s += prod
            vals.append(UPoly((s,), var))
        return cls(tuple(vals))


def genus19_spec() -> ElementarySpec:
    """e-values for the roots of w^6 + 4w^5 - 64tw + 64t."""
    t = UPoly.gen("t")
    zero = UPoly((), "t")
    return ElementarySpec((UPoly((-4,), "t"), zero, zero, zero, 64 * t, 64 * t))


def specialize(q: dict[tuple[int, ...], Fraction], spec: ElementarySpec) -> UPoly:
    """Evaluate a polynomial in e1..e6 at the given elementary values."""
    var = spec.values[0].var
    total = UPoly((), var)
    powers: dict[tuple[int, int], UPoly] = {}

    def pw(i: int, k: int) -> UPoly:
        key = (i, k)
        if key not in powers:
            powers[key] = spec.values[i] ** k
        return powers[key]

    for ex, c in q.items():
        term = UPoly((c,), var)
        for i, k in enumerate(ex):
            if k:
                term = term * pw(i, k)
                if term.is_zero():
                    break
        total = total + term
    return total


@lru_cache(maxsize=None)
def orbit_power_sum_elementary(k: int) -> tuple[tuple[tuple[int, ...], Fraction], ...]:
    """P_k of the omega-orbit written in e1..e6 (sorted items, cached)."""
    # one expansion table serves every k: omega^k has exponents <= k <= 15
    q = msym_to_elementary(orbit_power_sum_msym(k), N_ROOTS, _shared_table(N_ROOTS, 15))
    return tuple(sorted(q.items()))


def newton_coefficients(power_sums: Sequence, degree: int) -> list:
    """a_0..a_n of prod (x - root) from power sums p_1..p_n: i*a_i = -sum a_{i-j} p_j."""
    if len(power_sums) < degree:
        raise ValueError("not enough power sums")
    one = power_sums[0] ** 0 if hasattr(power_sums[0], "__pow__") else 1
    a = [one]
    for i in range(1, degree + 1):
        s = 0 * one
        for j in range(1, i + 1):
            s = s + a[i - j] * power_sums[j - 1]
        a.append(s * Fraction(-1, i))
    return a


def power_sums_from_coefficients(a: Sequence, count: int) -> list:
    """Inverse of :func:`newton_coefficients`: p_k = -k a_k - sum_{j<k} a_{k-j} p_j."""
    n = len(a) - 1
    zero = a[0] * 0
    p = []
    for k in range(1, count + 1):
        s = (a[k] * (-k)) if k <= n else zero
        for j in range(1, k):
            if k - j <= n:
                s = s - a[k - j] * p[j - 1]
        p.append(s)
    return p


def resolvent_f15(spec: ElementarySpec, var: str = "x") -> UPoly:
    """prod over the omega-orbit of (x - omega(roots)), coefficients in Q[t].

    Built from the orbit power sums via Newton's identities; returned as a
    UPoly in ``var`` whose coefficients are UPolys in the parameter of ``spec``.
    """
    sums = [specialize(dict(orbit_power_sum_elementary(k)), spec) for k in range(1, 16)]
    a = newton_coefficients(sums, 15)
    return UPoly(list(reversed(a)), var)


def f15_by_enumeration(roots: Sequence[int | Fraction], var: str = "x") -> UPoly:
    """Direct product over the 15 matchings for explicit numeric roots."""
    f = UPoly((1,), var)
    for match in _pair_matchings():
        w = sum(Fraction(roots[i]) * Fraction(roots[j]) for i, j in match)
        f = f * UPoly((-w, 1), var)
    return f


# polynomials in x over Q[t]


def bivariate_to_nested(p: MultiPoly, outer: str = "x", inner: str = "t") -> UPoly:
    """A polynomial in (t, x) as a UPoly in x with UPoly-in-t coefficients."""
    parts = p.coefficients_in(outer)
    deg = max(parts) if parts else -1
    coeffs = []
    for k in range(deg + 1):
        c = parts.get(k)
        if c is None:
            coeffs.append(UPoly((), inner))
        else:
            coeffs.append(c.to_upoly(inner) if c.variables() else UPoly((c.constant_coeff(),), inner))
    return UPoly(coeffs, outer)


def nested_to_bivariate(f: UPoly, ring: Ring) -> MultiPoly:
    outer = ring.index(f.var)
    out: dict[tuple[int, ...], Fraction] = {}
    for k, c in enumerate(f.coeffs):
        inner_p = c if isinstance(c, UPoly) else UPoly((c,), ring.vars[1 - outer])
        ii = ring.index(inner_p.var)
        for j, v in enumerate(inner_p.coeffs):
            if v:
                e = [0] * ring.nvars
                e[outer] = k
                e[ii] = j
                out[tuple(e)] = Fraction(v)
    return MultiPoly(ring, out)


def _content_t(f: UPoly) -> UPoly:
    g = UPoly((), f.coeffs[0].var if f.coeffs else "t")
    for c in f.coeffs:
        g = upoly_gcd(g, c) if not g.is_zero() else c.monic()
        if g.degree == 0:
            break
    return g


def _primitive_part_t(f: UPoly) -> UPoly:
    g = _content_t(f)
    if g.degree <= 0:
        return f
    return UPoly([c.exact_div(g) for c in f.coeffs], f.var)


def gcd_over_qt(a: UPoly, b: UPoly) -> UPoly:
    """gcd in x over Q(t) via the primitive pseudo-remainder sequence (primitive part)."""
    a, b = _primitive_part_t(a), _primitive_part_t(b)
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero():
        _, r = a.pseudo_divmod(b)
        a, b = b, (_primitive_part_t(r) if not r.is_zero() else r)
    return a


@dataclass(frozen=True)
class FactorizationReport:
    product_matches: bool
    coprime_pairs: bool
    common_degrees: tuple[int, ...]


def verify_factorization(factors: Sequence[UPoly], target: UPoly) -> FactorizationReport:
    """Multiply out and check pairwise coprimality in x over Q(t)."""
    prod = factors[0]
    for f in factors[1:]:
        prod = prod * f
    degs = []
    for i in range(len(factors)):
        for j in range(i + 1, len(factors)):
            degs.append(gcd_over_qt(factors[i], factors[j]).degree)
    return FactorizationReport(prod == target, all(d == 0 for d in degs), tuple(degs))
