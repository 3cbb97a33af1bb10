"""Groebner bases over Q and the ideal operations built on them.

The Buchberger engine works on a packed representation: a monomial is one
Python int holding the order-weight fields (most significant) followed by the
raw exponent fields, each ``EXP_BITS`` wide.  Integer comparison is then the
term order, integer addition is monomial multiplication, and divisibility is a
guard-bit test.  Coefficients are integers; reduction is fraction free and
every basis element is kept primitive.
"""

from __future__ import annotations

import heapq
import math
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .exact import UPoly, squarefree_part
from .mpoly import DEGREVLEX, EXP_BITS, MAX_EXP, MultiPoly, Ring, TermOrder, iter_monomials

try:  # big-int arithmetic is noticeably faster through GMP
    from gmpy2 import gcd as _gcd
    from gmpy2 import mpz as _int
except ImportError:  # pragma: no cover
    _gcd = math.gcd
    _int = int


class BudgetExceeded(RuntimeError):
    """A Groebner computation ran past its step or time budget."""


@dataclass
class Budget:
    max_steps: int | None = None
    timeout: float | None = None
    steps: int = 0
    started: float = field(default_factory=time.monotonic)

    def tick(self, n: int = 1) -> None:
        self.steps += n
        if self.max_steps is not None and self.steps > self.max_steps:
            raise BudgetExceeded(f"step budget of {self.max_steps} exceeded")
        if self.timeout is not None and time.monotonic() - self.started > self.timeout:
            raise BudgetExceeded(f"time budget of {self.timeout}s exceeded")


class Packer:
    """Bijection between exponent tuples and order-comparable packed ints."""

    def __init__(self, nvars: int, order: TermOrder):
        self.n = nvars
        self.order = order
        self.rows = order.matrix(nvars)
        w = EXP_BITS
        self.w = w
        self.field_mask = (1 << w) - 1
        self.exp_bits = nvars * w
        self.exp_mask = (1 << self.exp_bits) - 1
        self.guard = sum(1 << (i * w + w - 1) for i in range(nvars))
        nr = len(self.rows)
        # packed value of the unit exponent vector of each variable
        self.unit = []
        for i in range(nvars):
            v = 1 << (i * w)
            for r, row in enumerate(self.rows):
                if row[i]:
                    v += row[i] << (self.exp_bits + (nr - 1 - r) * w)
            self.unit.append(v)
        self.deg_rows = [r for r, row in enumerate(self.rows) if all(row)]

    def pack(self, e: Sequence[int]) -> int:
        m = 0
        for i, k in enumerate(e):
            if k:
                if k > MAX_EXP:
                    raise OverflowError("exponent exceeds the fixed-width limit")
                m += k * self.unit[i]
        return m

    def exps(self, m: int) -> tuple[int, ...]:
        w, mask = self.w, self.field_mask
        return tuple((m >> (i * w)) & mask for i in range(self.n))

    def divides(self, a: int, b: int) -> bool:
        g = self.guard
        return (((b & self.exp_mask) | g) - (a & self.exp_mask)) & g == g

    def lcm(self, a: int, b: int) -> int:
        return self.pack([max(x, y) for x, y in zip(self.exps(a), self.exps(b))])

    def coprime(self, a: int, b: int) -> bool:
        return all(not (x and y) for x, y in zip(self.exps(a), self.exps(b)))

    def degree(self, m: int) -> int:
        return sum(self.exps(m))


# packed polynomials: list of (mono, coeff) sorted by descending mono


def _content(cs: Iterable) -> int:
    g = _int(0)
    for c in cs:
        g = _gcd(g, c)
        if g == 1:
            break
    return g


def _make_primitive(terms: list[tuple[int, int]]) -> list[tuple[int, int]]:
    if not terms:
        return terms
    g = _content(c for _, c in terms)
    if terms[0][1] < 0:
        g = -g
    if g == 1:
        return terms
    return [(m, c // g) for m, c in terms]


def _from_dict(d: dict[int, int]) -> list[tuple[int, int]]:
    return sorted(d.items(), reverse=True)


class _Engine:
    """Buchberger with Gebauer-Moeller pair pruning and sugar pair selection."""

    def __init__(self, packer: Packer, budget: Budget | None):
        self.pk = packer
        self.budget = budget or Budget()
        self.polys: list[list[tuple[int, int]]] = []
        self.lms: list[int] = []
        self.active: list[int] = []
        self.sugar: list[int] = []
        self.full_reduce = False
        self.log = None

    # reduction

    def _find_reducer(self, m: int, basis: Sequence[int]) -> int:
        divides = self.pk.divides
        lms = self.lms
        for i in basis:
            if divides(lms[i], m):
                return i
        return -1

    def reduce(self, terms: list[tuple[int, int]], basis: Sequence[int], full: bool = True,
               track_scale: bool = False):
        """Fraction-free normal form. Returns (terms, scale) with scale*input == result mod basis."""
        p: dict[int, int] = dict(terms)
        heap = [-m for m in p]
        heapq.heapify(heap)
        out: dict[int, int] = {}
        scale = Fraction(1)
        steps = 0
        polys = self.polys
        while heap:
            m = -heapq.heappop(heap)
            c = p.get(m)
            if c is None:
                continue
            i = self._find_reducer(m, basis)
            if i < 0:
                if not full:
                    break
                out[m] = p.pop(m)
                continue
            g = polys[i]
            gc = g[0][1]
            q = m - g[0][0]
            d = _gcd(c, gc)
            a = gc // d
            b = c // d
            if a != 1:
                if a == -1:
                    for k in p:
                        p[k] = -p[k]
                    for k in out:
                        out[k] = -out[k]
                else:
                    for k in p:
                        p[k] *= a
                    for k in out:
                        out[k] *= a
                if track_scale:
                    scale *= int(a)
            del p[m]
            for gm, gcoef in g[1:]:
                k = gm + q
                v = p.get(k)
                if v is None:
                    p[k] = -b * gcoef
                    heapq.heappush(heap, -k)
                else:
                    v -= b * gcoef
                    if v:
                        p[k] = v
                    else:
                        del p[k]
            steps += 1
            if steps % 32 == 0:
                self.budget.tick(32)
                if len(p) + len(out) > 8:
                    cont = _content(list(p.values()) + list(out.values()))
                    if cont > 1:
                        for k in p:
                            p[k] //= cont
                        for k in out:
                            out[k] //= cont
                        if track_scale:
                            scale /= int(cont)
        if not full:
            out.update(p)
        res = _from_dict(out)
        if track_scale:
            return res, scale
        return res

    def normalize(self, terms: list[tuple[int, int]]) -> list[tuple[int, int]]:
        return _make_primitive(terms)

    # pair handling

    def _spoly(self, i: int, j: int) -> list[tuple[int, int]]:
        f, g = self.polys[i], self.polys[j]
        lcm = self.pk.lcm(f[0][0], g[0][0])
        cf, cg = f[0][1], g[0][1]
        d = _gcd(cf, cg)
        a, b = cg // d, cf // d
        qf = lcm - f[0][0]
        qg = lcm - g[0][0]
        out: dict[int, int] = {}
        for m, c in f[1:]:
            out[m + qf] = a * c
        for m, c in g[1:]:
            k = m + qg
            v = out.get(k, 0) - b * c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return _from_dict(out)

    def _pair_key(self, i: int, j: int) -> tuple:
        # sugar strategy: the degree the S-polynomial would have had in a
        # homogenized computation, ties broken by the lcm in the term order
        pk = self.pk
        lcm = pk.lcm(self.lms[i], self.lms[j])
        d = pk.degree(lcm)
        sugar = max(self.sugar[i] + d - pk.degree(self.lms[i]), self.sugar[j] + d - pk.degree(self.lms[j]))
        return (sugar, lcm, i, j)

    def _lcm_with(self, cache: dict[int, int], g: int, lh: int) -> int:
        v = cache.get(g)
        if v is None:
            v = cache[g] = self.pk.lcm(self.lms[g], lh)
        return v

    def _update(self, pairs: list[tuple], h: int) -> list[tuple]:
        pk = self.pk
        lh = self.lms[h]
        lcm_h = {g: pk.lcm(self.lms[g], lh) for g in self.active}
        C = list(self.active)
        D: list[int] = []
        while C:
            g1 = C.pop()
            l1 = lcm_h[g1]
            if pk.coprime(self.lms[g1], lh):
                D.append(g1)
                continue
            redundant = False
            for g2 in C:
                if pk.divides(lcm_h[g2], l1):
                    redundant = True
                    break
            if not redundant:
                for g2 in D:
                    if pk.divides(lcm_h[g2], l1):
                        redundant = True
                        break
            if not redundant:
                D.append(g1)
        new_pairs = [g for g in D if not pk.coprime(self.lms[g], lh)]
        kept = []
        for pr in pairs:
            _, l12, a, b = pr
            if pk.divides(lh, l12) and self._lcm_with(lcm_h, a, lh) != l12 \
                    and self._lcm_with(lcm_h, b, lh) != l12:
                continue
            kept.append(pr)
        for g in new_pairs:
            kept.append(self._pair_key(g, h) if g < h else self._pair_key(h, g))
        self.active = [g for g in self.active if not pk.divides(lh, self.lms[g])] + [h]
        return kept

    def _add(self, terms: list[tuple[int, int]], sugar: int | None = None) -> int:
        if sugar is None:
            sugar = max(self.pk.degree(m) for m, _ in terms)
        self.sugar.append(sugar)
        if self.log:
            self.log(len(self.polys), sugar, self.pk.exps(terms[0][0]), len(terms),
                     max(int(abs(c)).bit_length() for _, c in terms))
        self.polys.append(terms)
        self.lms.append(terms[0][0])
        return len(self.polys) - 1

    def run(self, gens: list[list[tuple[int, int]]]) -> list[list[tuple[int, int]]]:
        pairs: list[tuple] = []
        # reduce inputs against each other as they arrive; smallest first
        gens = sorted((g for g in gens if g), key=lambda t: (t[0][0], len(t)))
        for g in gens:
            r = self.reduce(g, self.active, full=False)
            if not r:
                continue
            r = self.normalize(r)
            if r[0][0] & self.pk.exp_mask == 0:
                return [[(0, _int(1))]]
            h = self._add(r)
            pairs = self._update(pairs, h)
        while pairs:
            best = min(range(len(pairs)), key=lambda k: pairs[k])
            pairs[best], pairs[-1] = pairs[-1], pairs[best]
            sugar, _, i, j = pairs.pop()
            self.budget.tick()
            s = self._spoly(i, j)
            if not s:
                continue
            r = self.reduce(s, self.active, full=self.full_reduce)
            if not r:
                continue
            r = self.normalize(r)
            if r[0][0] & self.pk.exp_mask == 0:
                return [[(0, _int(1))]]
            h = self._add(r, max(sugar, self.pk.degree(r[0][0])))
            pairs = self._update(pairs, h)
        return self._interreduce()

    def _interreduce(self) -> list[list[tuple[int, int]]]:
        pk = self.pk
        idx = sorted(self.active, key=lambda i: self.lms[i])
        minimal = []
        for i in idx:
            if not any(pk.divides(self.lms[j], self.lms[i]) for j in minimal):
                minimal.append(i)
        out = []
        for i in minimal:
            others = [j for j in minimal if j != i]
            head = self.polys[i][0]
            tail, scale = self.reduce(self.polys[i][1:], others, full=True, track_scale=True)
            # the head is irreducible; rescale it to match the fraction-free tail
            hs = head[1] * _int(scale.numerator)
            terms = [(head[0], hs)] + [(m, c * _int(scale.denominator)) for m, c in tail]
            self.budget.tick()
            out.append(_make_primitive(terms))
        out.sort(key=lambda t: t[0][0], reverse=True)
        return out


class _ModEngine(_Engine):
    """The same Buchberger loop over the prime field Z/p (monic basis elements)."""

    def __init__(self, packer: Packer, budget: Budget | None, prime: int):
        super().__init__(packer, budget)
        self.p = prime

    def normalize(self, terms: list[tuple[int, int]]) -> list[tuple[int, int]]:
        if not terms or terms[0][1] == 1:
            return terms
        inv = pow(terms[0][1], -1, self.p)
        return [(m, c * inv % self.p) for m, c in terms]

    def reduce(self, terms, basis, full=True, track_scale=False):
        mod = self.p
        p: dict[int, int] = {m: c % mod for m, c in terms if c % mod}
        heap = [-m for m in p]
        heapq.heapify(heap)
        out: dict[int, int] = {}
        polys = self.polys
        steps = 0
        while heap:
            m = -heapq.heappop(heap)
            c = p.get(m)
            if c is None:
                continue
            i = self._find_reducer(m, basis)
            if i < 0:
                if not full:
                    break
                out[m] = p.pop(m)
                continue
            g = polys[i]
            q = m - g[0][0]
            del p[m]
            for gm, gcoef in g[1:]:
                k = gm + q
                v = p.get(k)
                if v is None:
                    p[k] = (-c * gcoef) % mod
                    heapq.heappush(heap, -k)
                else:
                    v = (v - c * gcoef) % mod
                    if v:
                        p[k] = v
                    else:
                        del p[k]
            steps += 1
            if steps % 256 == 0:
                self.budget.tick(256)
        if not full:
            out.update(p)
        res = _from_dict(out)
        return (res, Fraction(1)) if track_scale else res

    def _spoly(self, i: int, j: int) -> list[tuple[int, int]]:
        f, g = self.polys[i], self.polys[j]
        lcm = self.pk.lcm(f[0][0], g[0][0])
        qf = lcm - f[0][0]
        qg = lcm - g[0][0]
        out: dict[int, int] = {}
        for m, c in f[1:]:
            out[m + qf] = c
        for m, c in g[1:]:
            k = m + qg
            v = (out.get(k, 0) - c) % self.p
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return _from_dict(out)

    def _interreduce(self) -> list[list[tuple[int, int]]]:
        pk = self.pk
        idx = sorted(self.active, key=lambda i: self.lms[i])
        minimal = []
        for i in idx:
            if not any(pk.divides(self.lms[j], self.lms[i]) for j in minimal):
                minimal.append(i)
        out = []
        for i in minimal:
            others = [j for j in minimal if j != i]
            tail = self.reduce(self.polys[i][1:], others, full=True)
            out.append([self.polys[i][0]] + tail)
        out.sort(key=lambda t: t[0][0], reverse=True)
        return out


# public layer


@dataclass(frozen=True)
class Ideal:
    ring: Ring
    gens: tuple[MultiPoly, ...]

    def __init__(self, ring: Ring, gens: Iterable[MultiPoly]):
        gs = []
        for g in gens:
            if g.ring != ring:
                raise ValueError("generator ring mismatch")
            if g:
                gs.append(g)
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "gens", tuple(gs))

    def __iter__(self):
        return iter(self.gens)

    def __len__(self) -> int:
        return len(self.gens)

    def __add__(self, other: "Ideal | Iterable[MultiPoly]") -> "Ideal":
        more = other.gens if isinstance(other, Ideal) else tuple(other)
        return Ideal(self.ring, self.gens + tuple(more))

    def __str__(self) -> str:
        return "<" + ", ".join(str(g.primitive()) for g in self.gens) + ">"


@dataclass(frozen=True)
class GroebnerBasis:
    ring: Ring
    order: TermOrder
    basis: tuple[MultiPoly, ...]
    reduced: bool = True

    def __iter__(self):
        return iter(self.basis)

    def __len__(self) -> int:
        return len(self.basis)

    def is_unit(self) -> bool:
        return len(self.basis) == 1 and self.basis[0].is_constant()

    def leading_exponents(self) -> list[tuple[int, ...]]:
        return [p.leading_term(self.order)[0] for p in self.basis]

    def __str__(self) -> str:
        return "\n".join(str(p) for p in self.basis)


def _to_packed(p: MultiPoly, pk: Packer) -> list[tuple[int, int]]:
    prim = p.primitive()
    d = {pk.pack(e): _int(int(c)) for e, c in prim.terms.items()}
    return _from_dict(d)


def _from_packed(terms: list[tuple[int, int]], pk: Packer, ring: Ring) -> MultiPoly:
    return MultiPoly(ring, {pk.exps(m): Fraction(int(c)) for m, c in terms})


def _check_rational(polys: Iterable[MultiPoly]) -> None:
    for p in polys:
        for c in p.terms.values():
            if not isinstance(c, (int, Fraction)):
                raise TypeError("Groebner bases are computed over Q only")


def groebner(I: Ideal | Sequence[MultiPoly], order: TermOrder | str | None = None,
             budget: Budget | None = None) -> GroebnerBasis:
    """Reduced Groebner basis, elements integer-primitive with positive leading coefficient."""
    if not isinstance(I, Ideal):
        polys = list(I)
        if not polys:
            raise ValueError("empty generator list; pass an Ideal to fix the ring")
        I = Ideal(polys[0].ring, polys)
    ring = I.ring
    if ring.nvars == 0:
        raise ValueError("ring without variables")
    order = ring.order if order is None else (TermOrder.parse(order) if isinstance(order, str) else order)
    _check_rational(I.gens)
    pk = Packer(ring.nvars, order)
    eng = _Engine(pk, budget)
    out = eng.run([_to_packed(g, pk) for g in I.gens])
    basis = tuple(_from_packed(t, pk, ring) for t in out)
    return GroebnerBasis(ring, order, basis, True)


def normal_form(p: MultiPoly, G: GroebnerBasis) -> MultiPoly:
    """Fully reduced remainder of p modulo G, over Q."""
    if p.ring != G.ring:
        raise ValueError("ring mismatch")
    if not p:
        return p
    pk = Packer(G.ring.nvars, G.order)
    eng = _Engine(pk, None)
    for g in G.basis:
        eng._add(_to_packed(g, pk))
    prim = p.primitive()
    content = _rational_content(p, prim)
    r, scale = eng.reduce(_to_packed(prim, pk), list(range(len(G.basis))), full=True, track_scale=True)
    res = _from_packed(r, pk, G.ring)
    return res * (content / scale)


def _rational_content(p: MultiPoly, prim: MultiPoly) -> Fraction:
    e, c = next(iter(prim.terms.items()))
    return Fraction(p.terms[e]) / c


def reduces_to_zero(p: MultiPoly, G: GroebnerBasis) -> bool:
    return normal_form(p, G).is_zero()


def s_polynomial(f: MultiPoly, g: MultiPoly, order: TermOrder) -> MultiPoly:
    ef, cf = f.leading_term(order)
    eg, cg = g.leading_term(order)
    lcm = tuple(max(a, b) for a, b in zip(ef, eg))
    mf = f.ring.monomial([a - b for a, b in zip(lcm, ef)], 1 / Fraction(cf))
    mg = f.ring.monomial([a - b for a, b in zip(lcm, eg)], 1 / Fraction(cg))
    return mf * f - mg * g


def is_groebner(polys: Sequence[MultiPoly], order: TermOrder) -> bool:
    """Buchberger criterion: every S-polynomial reduces to zero."""
    polys = [p for p in polys if p]
    if not polys:
        return True
    G = GroebnerBasis(polys[0].ring, order, tuple(polys), reduced=False)
    for i in range(len(polys)):
        for j in range(i + 1, len(polys)):
            if not reduces_to_zero(s_polynomial(polys[i], polys[j], order), G):
                return False
    return True


def is_reduced(G: GroebnerBasis) -> bool:
    lts = G.leading_exponents()
    for p, lt in zip(G.basis, lts):
        for e in p.terms:
            for q_lt in lts:
                if q_lt is lt:
                    continue
                if all(a >= b for a, b in zip(e, q_lt)):
                    return False
    return True


def same_ideal(a: Sequence[MultiPoly], b: Sequence[MultiPoly], order: TermOrder | None = None) -> bool:
    ring = (a[0] if a else b[0]).ring
    order = order or DEGREVLEX
    ga = groebner(Ideal(ring, a), order)
    gb = groebner(Ideal(ring, b), order)
    return ga.basis == gb.basis


# standard monomials


def standard_monomials_count(lead: Sequence[tuple[int, ...]], nvars: int) -> int | None:
    """Number of monomials outside the monomial ideal; None when infinite."""
    if any(not any(e) for e in lead):
        return 0
    bounds = []
    for i in range(nvars):
        pure = [e[i] for e in lead if e[i] and all(e[j] == 0 for j in range(nvars) if j != i)]
        if not pure:
            return None
        bounds.append(min(pure))
    lead = [e for e in lead]

    def count(prefix: list[int], i: int, active: list[tuple[int, ...]]) -> int:
        if i == nvars:
            return 1
        total = 0
        for k in range(bounds[i]):
            pre = prefix + [k]
            # generators that can still divide some extension of the prefix
            still = [e for e in active if e[i] <= k]
            if any(all(e[j] == 0 for j in range(i + 1, nvars)) for e in still):
                break
            total += count(pre, i + 1, still)
        return total

    return count([], 0, lead)


def standard_monomials(lead: Sequence[tuple[int, ...]], nvars: int) -> list[tuple[int, ...]]:
    """Explicit staircase (finite case only)."""
    n = standard_monomials_count(lead, nvars)
    if n is None:
        raise ValueError("ideal is not zero-dimensional")
    bounds = []
    for i in range(nvars):
        bounds.append(min(e[i] for e in lead if e[i] and all(e[j] == 0 for j in range(nvars) if j != i)))
    out = []

    def rec(prefix: list[int]) -> None:
        i = len(prefix)
        if i == nvars:
            out.append(tuple(prefix))
            return
        for k in range(bounds[i]):
            cand = prefix + [k]
            if any(all(e[j] <= (cand[j] if j <= i else 0) for j in range(nvars)) for e in lead):
                # some generator divides cand padded with zeros; larger k also divisible
                break
            rec(cand)

    rec([])
    return out


def vdim(I: Ideal | GroebnerBasis, order: TermOrder | None = None, budget: Budget | None = None) -> int | None:
    """Dimension of the quotient ring over Q (None for infinite)."""
    G = I if isinstance(I, GroebnerBasis) else groebner(I, order or DEGREVLEX, budget)
    if G.is_unit():
        return 0
    return standard_monomials_count(G.leading_exponents(), G.ring.nvars)


# elimination


def eliminate(I: Ideal, variables: Iterable[str], budget: Budget | None = None) -> Ideal:
    """Generators of I intersected with the subring without ``variables``.

    The result lives in a ring over the remaining variables (original order)
    and is the reduced degrevlex Groebner basis of the elimination ideal.
    """
    elim = list(dict.fromkeys(variables))
    ring = I.ring
    for v in elim:
        ring.index(v)
    rest = [v for v in ring.vars if v not in elim]
    if not elim or not rest:
        raise ValueError("must eliminate a proper nonempty subset of the variables")
    inner = Ring(elim + rest, TermOrder("block", len(elim)))
    gens = [g.to_ring(inner) for g in I.gens]
    G = groebner(Ideal(inner, gens), inner.order, budget)
    sub = Ring(rest, DEGREVLEX)
    kept = [p.to_ring(sub) for p in G.basis if not any(p.degree(v) > 0 for v in elim)]
    return Ideal(sub, kept)


def eliminate_zero_dim(I: Ideal | GroebnerBasis, variables: Iterable[str],
                       budget: Budget | None = None) -> Ideal:
    """Elimination for zero-dimensional ideals by linear algebra in the quotient.

    Monomials in the kept variables are walked in increasing degrevlex
    order; the first one whose normal form depends on the earlier ones gives
    a new basis element (an FGLM-style change of ring).  The output is the
    reduced degrevlex basis of the elimination ideal, like :func:`eliminate`,
    but no block-order basis is ever formed.
    """
    G = I if isinstance(I, GroebnerBasis) else groebner(I, DEGREVLEX, budget)
    ring = G.ring
    elim = set(variables)
    for v in elim:
        ring.index(v)
    rest = [v for v in ring.vars if v not in elim]
    if not elim or not rest:
        raise ValueError("must eliminate a proper nonempty subset of the variables")
    sub = Ring(rest, DEGREVLEX)
    if G.is_unit():
        return Ideal(sub, [sub.one()])
    std = standard_monomials(G.leading_exponents(), ring.nvars)
    index = {e: k for k, e in enumerate(std)}
    slots = [ring.index(v) for v in rest]

    def embed(e: tuple[int, ...]) -> MultiPoly:
        full = [0] * ring.nvars
        for i, k in zip(slots, e):
            full[i] = k
        return ring.monomial(full)

    rows: list[tuple[int, list[Fraction], dict]] = []
    leads: list[tuple[int, ...]] = []
    out: list[MultiPoly] = []
    deg = 0
    while True:
        monos = sorted(iter_monomials(len(rest), deg), key=sub.sort_key)
        live = [m for m in monos if not any(all(a <= b for a, b in zip(l, m)) for l in leads)]
        if not live:
            break
        for m in live:
            if budget is not None:
                budget.tick()
            vec = _quotient_coords(embed(m), G, index)
            combo = {m: Fraction(1)}
            for piv, rv, rc in rows:
                c = vec[piv]
                if c:
                    vec = [a - c * b for a, b in zip(vec, rv)]
                    for mono, coef in rc.items():
                        combo[mono] = combo.get(mono, Fraction(0)) - c * coef
            piv = next((i for i, c in enumerate(vec) if c), None)
            if piv is None:
                out.append(MultiPoly(sub, {e: c for e, c in combo.items() if c}).primitive())
                leads.append(m)
                continue
            inv = 1 / vec[piv]
            rows.append((piv, [c * inv for c in vec], {e: c * inv for e, c in combo.items()}))
        deg += 1
    return Ideal(sub, out)


def _quotient_coords(p: MultiPoly, G: GroebnerBasis, index: dict) -> list[Fraction]:
    r = normal_form(p, G)
    vec = [Fraction(0)] * len(index)
    for e, c in r.terms.items():
        vec[index[e]] = Fraction(c)
    return vec


def minimal_polynomial(G: GroebnerBasis, f: MultiPoly, var: str) -> UPoly:
    """Minimal polynomial of multiplication by f on Q[x]/I (zero-dimensional I)."""
    if G.is_unit():
        return UPoly((1,), var)
    lead = G.leading_exponents()
    std = standard_monomials(lead, G.ring.nvars)
    index = {e: k for k, e in enumerate(std)}
    n = len(std)
    # incremental echelon form over Q of the powers f^0, f^1, ...
    rows: list[tuple[int, list[Fraction], list[Fraction]]] = []
    power = G.ring.one()
    for k in range(n + 1):
        vec = _quotient_coords(power, G, index)
        combo = [Fraction(0)] * (n + 1)
        combo[k] = Fraction(1)
        for piv, rv, rc in rows:
            c = vec[piv]
            if c:
                vec = [a - c * b for a, b in zip(vec, rv)]
                combo = [a - c * b for a, b in zip(combo, rc)]
        piv = next((i for i, c in enumerate(vec) if c), None)
        if piv is None:
            return UPoly(combo[: k + 1], var).primitive()
        inv = 1 / vec[piv]
        rows.append((piv, [c * inv for c in vec], [c * inv for c in combo]))
        power = normal_form(power * f, G)
    raise AssertionError("minimal polynomial degree exceeds the quotient dimension")


def univariate_eliminant(I: Ideal | GroebnerBasis, var: str, budget: Budget | None = None) -> UPoly:
    """Primitive generator of I intersected with Q[var].

    Zero-dimensional ideals go through the multiplication-matrix minimal
    polynomial on a degrevlex basis; otherwise a block elimination is used.
    A zero elimination ideal is returned as the zero polynomial.
    """
    G = I if isinstance(I, GroebnerBasis) else groebner(I, DEGREVLEX, budget)
    ring = G.ring
    ring.index(var)
    if G.is_unit():
        return UPoly((1,), var)
    if standard_monomials_count(G.leading_exponents(), ring.nvars) is not None:
        return minimal_polynomial(G, ring.var(var), var)
    others = [v for v in ring.vars if v != var]
    if not others:
        return G.basis[0].to_upoly(var).primitive()
    E = eliminate(Ideal(ring, G.basis), others, budget)
    if not E.gens:
        return UPoly((), var)
    if len(E.gens) != 1:
        raise ValueError("elimination ideal is not principal")
    return E.gens[0].to_upoly(var).primitive()


def _upoly_to_mpoly(u: UPoly, ring: Ring) -> MultiPoly:
    i = ring.index(u.var)
    terms = {}
    for k, c in enumerate(u.coeffs):
        if c:
            e = [0] * ring.nvars
            e[i] = k
            terms[tuple(e)] = c
    return MultiPoly(ring, terms)


def zero_dim_radical(I: Ideal, budget: Budget | None = None) -> Ideal:
    """Seidenberg radical: I plus the squarefree part of each variable's eliminant."""
    G = groebner(I, DEGREVLEX, budget)
    if G.is_unit():
        return Ideal(I.ring, G.basis)
    if standard_monomials_count(G.leading_exponents(), I.ring.nvars) is None:
        raise ValueError("ideal is not zero-dimensional")
    extra = []
    for v in I.ring.vars:
        f = minimal_polynomial(G, I.ring.var(v), v)
        extra.append(_upoly_to_mpoly(squarefree_part(f).primitive(), I.ring))
    R = groebner(Ideal(I.ring, list(G.basis) + extra), DEGREVLEX, budget)
    return Ideal(I.ring, R.basis)


def is_radical_certificate(G: GroebnerBasis) -> bool:
    """Seidenberg check: every variable has a squarefree eliminant."""
    for v in G.ring.vars:
        f = minimal_polynomial(G, G.ring.var(v), v)
        if f.degree > 0 and squarefree_part(f).degree != f.degree:
            return False
    return True


def solvable_with_unit(I: Ideal, var: str, budget: Budget | None = None) -> bool:
    """Whether I has a solution with ``var`` nonzero (Rabinowitsch trick)."""
    ring = I.ring
    ring.index(var)
    u = "_u"
    while u in ring.vars:
        u += "_"
    big = Ring(ring.vars + (u,), ring.order)
    gens = [g.to_ring(big) for g in I.gens]
    gens.append(big.var(var) * big.var(u) - 1)
    G = groebner(Ideal(big, gens), DEGREVLEX, budget)
    return not G.is_unit()


def contains(I: Ideal | GroebnerBasis, p: MultiPoly) -> bool:
    G = I if isinstance(I, GroebnerBasis) else groebner(I, DEGREVLEX)
    return reduces_to_zero(p, G)


# verification, multimodular lifting and caching


def verify_groebner(G: GroebnerBasis | Sequence[MultiPoly], order: TermOrder | None = None,
                    budget: Budget | None = None) -> bool:
    """Buchberger criterion over Q with the Gebauer-Moeller pair filter.

    Cheaper than :func:`is_groebner` on large bases because pairs removed by
    the product and chain criteria are never reduced.
    """
    if isinstance(G, GroebnerBasis):
        polys, order = list(G.basis), G.order
    else:
        polys = [p for p in G if p]
        if order is None:
            raise ValueError("order required for a bare polynomial list")
    if not polys:
        return True
    _check_rational(polys)
    pk = Packer(polys[0].ring.nvars, order)
    eng = _Engine(pk, budget)
    pairs: list[tuple] = []
    for p in polys:
        h = eng._add(_to_packed(p, pk))
        pairs = eng._update(pairs, h)
    for _, _, i, j in sorted(pairs):
        eng.budget.tick()
        s = eng._spoly(i, j)
        if s and eng.reduce(s, eng.active, full=False):
            return False
    return True


def _ratrecon(a: int, m: int) -> Fraction | None:
    """Rational number n/d with n = a*d mod m and |n|, d below sqrt(m/2)."""
    bound = math.isqrt(m // 2)
    r0, r1 = m, a % m
    s0, s1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if s1 == 0 or abs(s1) > bound or math.gcd(r1, abs(s1)) != 1:
        return None
    return Fraction(r1, s1)


@dataclass
class ModularCertificate:
    """How a multimodular basis was obtained and what was checked over Q."""

    primes: list[int]
    groebner_checked: bool
    generators_reduce: bool

    @property
    def contains_input(self) -> bool:
        return self.groebner_checked and self.generators_reduce


def groebner_multimodular(I: Ideal, order: TermOrder | None = None, budget: Budget | None = None,
                          max_primes: int = 40, start: int = 2**61) -> tuple[GroebnerBasis, ModularCertificate]:
    """Reduced basis through computations mod p, CRT and rational reconstruction.

    Primes are consumed until two consecutive reconstructions agree.  The
    lifted candidate is then checked over Q: it must satisfy the Buchberger
    criterion and every input generator must reduce to zero.  Those checks
    prove that the candidate is a Groebner basis of an ideal containing I;
    equality with I is not implied and callers certify it separately.
    """
    from sympy import nextprime

    ring = I.ring
    order = order or ring.order
    _check_rational(I.gens)
    pk = Packer(ring.nvars, order)
    budget = budget or Budget()
    gens = [_to_packed(g, pk) for g in I.gens]
    prime = start
    used: list[int] = []
    acc: list[list[tuple[int, int]]] | None = None
    modulus = 1
    previous = None
    for _ in range(max_primes):
        prime = int(nextprime(prime))
        eng = _ModEngine(pk, budget, prime)
        out = eng.run([list(g) for g in gens])
        shape = [[m for m, _ in t] for t in out]
        if acc is not None and shape != [[m for m, _ in t] for t in acc]:
            if len(used) == 1:
                # first prime was unlucky or this one is; restart on the new one
                acc, modulus, used, previous = None, 1, [], None
            else:
                continue
        if acc is None:
            acc = [[(m, int(c)) for m, c in t] for t in out]
            modulus = prime
        else:
            inv = pow(modulus, -1, prime)
            acc = [[(m, a + modulus * (((int(b) - a) * inv) % prime)) for (m, a), (_, b) in zip(ta, tb)]
                   for ta, tb in zip(acc, out)]
            modulus *= prime
        used.append(prime)
        lifted = []
        for t in acc:
            row = []
            for m, a in t:
                q = _ratrecon(a, modulus)
                if q is None:
                    row = None
                    break
                row.append((m, q))
            if row is None:
                lifted = None
                break
            lifted.append(row)
        if lifted is not None and lifted == previous:
            break
        previous = lifted
    else:
        raise BudgetExceeded(f"rational reconstruction did not stabilize within {max_primes} primes")
    basis = tuple(MultiPoly(ring, {pk.exps(m): q for m, q in row}).primitive() for row in lifted)
    G = GroebnerBasis(ring, order, basis, True)
    gb_ok = verify_groebner(G, budget=budget)
    gens_ok = gb_ok and all(reduces_to_zero(g, G) for g in I.gens)
    return G, ModularCertificate(used, gb_ok, gens_ok)


def ratio_minimal_polynomial(G: GroebnerBasis, num: MultiPoly, den: MultiPoly, var: str,
                             max_degree: int | None = None) -> UPoly:
    """Minimal polynomial of num/den over the points of a radical ideal where den is nonzero.

    ``G`` must be a Groebner basis of a zero-dimensional radical ideal.  For
    increasing d the normal forms of den * num^k * den^(d-k), k = 0..d, are
    tested for a linear relation; the first relation found gives the answer,
    since any relation with top coefficient zero would already hold at d - 1.
    """
    if G.is_unit():
        return UPoly((1,), var)
    std = standard_monomials(G.leading_exponents(), G.ring.nvars)
    index = {e: k for k, e in enumerate(std)}
    limit = len(std) if max_degree is None else max_degree
    num = normal_form(num, G)
    den = normal_form(den, G)
    if den.is_zero():
        return UPoly((1,), var)
    memo: dict[tuple[int, int], MultiPoly] = {(0, 0): den}

    def term(k: int, j: int) -> MultiPoly:
        # normal form of den * num^k * den^j
        if (k, j) not in memo:
            memo[(k, j)] = normal_form(term(k - 1, j) * num, G) if k else normal_form(term(k, j - 1) * den, G)
        return memo[(k, j)]

    for d in range(1, limit + 1):
        vecs = [_quotient_coords(term(k, d - k), G, index) for k in range(d + 1)]
        kernel = _kernel_vector(vecs)
        if kernel is not None:
            return UPoly(kernel, var).primitive()
    raise ValueError("no relation found within the degree limit")


def _kernel_vector(vecs: list[list[Fraction]]) -> list[Fraction] | None:
    """Coefficients c, not all zero, with sum c_k vecs[k] = 0, or None."""
    rows: list[tuple[int, list[Fraction], list[Fraction]]] = []
    n = len(vecs)
    for k, v in enumerate(vecs):
        vec = list(v)
        combo = [Fraction(0)] * n
        combo[k] = Fraction(1)
        for piv, rv, rc in rows:
            c = vec[piv]
            if c:
                vec = [a - c * b for a, b in zip(vec, rv)]
                combo = [a - c * b for a, b in zip(combo, rc)]
        piv = next((i for i, c in enumerate(vec) if c), None)
        if piv is None:
            return combo
        inv = 1 / vec[piv]
        rows.append((piv, [c * inv for c in vec], [c * inv for c in combo]))
    return None


class GBCache:
    """Content-addressed store of reduced bases, revalidated on every hit."""

    def __init__(self, directory: str | None):
        self.directory = directory

    @staticmethod
    def key(I: Ideal, order: TermOrder) -> str:
        import hashlib

        ring = I.ring
        gens = sorted(str(g.primitive()) for g in I.gens)
        blob = "|".join([",".join(ring.vars), repr(order), *gens])
        return hashlib.sha256(blob.encode()).hexdigest()

    def _path(self, key: str) -> str | None:
        import os

        if not self.directory:
            return None
        return os.path.join(self.directory, f"gb-{key}.txt")

    def load(self, I: Ideal, order: TermOrder) -> GroebnerBasis | None:
        import os

        path = self._path(self.key(I, order))
        if path is None or not os.path.exists(path):
            return None
        with open(path, encoding="utf-8") as fh:
            lines = [ln.strip() for ln in fh if ln.strip()]
        basis = tuple(I.ring.parse(ln) for ln in lines)
        G = GroebnerBasis(I.ring, order, basis, True)
        # a hit is trusted only after the S-polynomial check and membership of the inputs
        if not verify_groebner(G) or not all(reduces_to_zero(g, G) for g in I.gens):
            return None
        return G

    def store(self, I: Ideal, G: GroebnerBasis) -> None:
        import os

        path = self._path(self.key(I, G.order))
        if path is None:
            return
        os.makedirs(self.directory, exist_ok=True)
        tmp = path + ".tmp"
        with open(tmp, "w", encoding="utf-8") as fh:
            for p in G.basis:
                fh.write(str(p) + "\n")
        os.replace(tmp, path)


def intersect(I: Ideal, J: Ideal, budget: Budget | None = None) -> Ideal:
    """I intersected with J, via elimination of t from t*I + (1 - t)*J."""
    if I.ring != J.ring:
        raise ValueError("ring mismatch")
    ring = I.ring
    t = "_t"
    while t in ring.vars:
        t += "_"
    big = Ring((t,) + ring.vars, ring.order)
    tv = big.var(t)
    gens = [tv * g.to_ring(big) for g in I.gens] + [(1 - tv) * g.to_ring(big) for g in J.gens]
    E = eliminate(Ideal(big, gens), [t], budget)
    return Ideal(ring, [g.to_ring(ring) for g in E.gens])
