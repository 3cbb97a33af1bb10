"""Permutation groups on six letters and projective matrix groups.

Permutations are stored 0-based; text output is 1-based cycle notation.
Composition follows function composition: ``(p * q)(i) = p(q(i))``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from itertools import permutations
from math import gcd
from typing import Iterable, Sequence

from .numberfield import NumberField, NumberFieldElem, rho_tau_field


@dataclass(frozen=True, order=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError(f"not a permutation: {self.images}")

    @classmethod
    def identity(cls, n: int = 6) -> "Permutation":
        return cls(tuple(range(n)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], n: int = 6) -> "Permutation":
        """Build from 1-based cycles, e.g. [(1, 2, 3), (4, 5)]."""
        img = list(range(n))
        for cyc in cycles:
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                img[a - 1] = b - 1
        return cls(tuple(img))

    def __mul__(self, other: "Permutation") -> "Permutation":
        return _trusted(tuple(self.images[i] for i in other.images))

    def __call__(self, i: int) -> int:
        return self.images[i]

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(tuple(inv))

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for s in range(len(self.images)):
            if s in seen:
                continue
            cyc = [s]
            seen.add(s)
            j = self.images[s]
            while j != s:
                cyc.append(j)
                seen.add(j)
                j = self.images[j]
            out.append(tuple(cyc))
        return out

    def order(self) -> int:
        o = 1
        for c in self.cycles():
            o = o * len(c) // gcd(o, len(c))
        return o

    def is_even(self) -> bool:
        return sum(len(c) - 1 for c in self.cycles()) % 2 == 0

    def __str__(self) -> str:
        cyc = [c for c in self.cycles() if len(c) > 1]
        if not cyc:
            return "()"
        return "".join("(" + " ".join(str(i + 1) for i in c) + ")" for c in cyc)


def _trusted(images: tuple[int, ...]) -> Permutation:
    # products of permutations are permutations; skip validation
    p = object.__new__(Permutation)
    object.__setattr__(p, "images", images)
    return p


@dataclass(frozen=True)
class PermGroup:
    elements: frozenset[Permutation]
    generators: tuple[Permutation, ...] = ()

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, g: Permutation) -> bool:
        return g in self.elements

    def __iter__(self):
        return iter(sorted(self.elements))

    def is_abelian(self) -> bool:
        gens = self.generators or tuple(self.elements)
        return all(a * b == b * a for a in gens for b in gens)

    def conjugate(self, g: Permutation) -> "PermGroup":
        gi = g.inverse()
        return PermGroup(frozenset(g * h * gi for h in self.elements),
                         tuple(g * h * gi for h in self.generators))

    def center(self) -> frozenset[Permutation]:
        return frozenset(z for z in self.elements if all(z * h == h * z for h in self.elements))

    def derived_subgroup(self) -> "PermGroup":
        comms = {a * b * a.inverse() * b.inverse() for a in self.elements for b in self.elements}
        return generate(comms, degree=self.degree)

    def element_order_census(self) -> dict[int, int]:
        return dict(sorted(Counter(g.order() for g in self.elements).items()))

    @property
    def degree(self) -> int:
        return len(next(iter(self.elements)).images)


def generate(gens: Iterable[Permutation], degree: int = 6) -> PermGroup:
    """Closure of ``gens`` under composition."""
    gens = tuple(dict.fromkeys(gens))
    ident = Permutation.identity(degree)
    elems = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for h in frontier:
            for g in gens:
                k = h * g
                if k not in elems:
                    elems.add(k)
                    nxt.append(k)
        frontier = nxt
    return PermGroup(frozenset(elems), gens)


def symmetric_group(n: int = 6) -> PermGroup:
    return PermGroup(frozenset(Permutation(p) for p in permutations(range(n))))


def alternating_group(n: int = 6) -> PermGroup:
    els = frozenset(Permutation(p) for p in permutations(range(n)) if Permutation(p).is_even())
    return PermGroup(els)


def a6_standard() -> PermGroup:
    """A6 generated by (1 2 3 4 5) and (4 5 6)."""
    return generate([Permutation.from_cycles([(1, 2, 3, 4, 5)]), Permutation.from_cycles([(4, 5, 6)])])


# isomorphism labels


# (order, abelian, element-order census, |Z|, |G'|) for each label used
_LABEL_INVARIANTS: dict[tuple, str] = {
    (1, True, ((1, 1),), 1, 1): "1",
    (2, True, ((1, 1), (2, 1)), 2, 1): "C2",
    (3, True, ((1, 1), (3, 2)), 3, 1): "C3",
    (4, True, ((1, 1), (2, 3)), 4, 1): "C2^2",
    (4, True, ((1, 1), (2, 1), (4, 2)), 4, 1): "C4",
    (5, True, ((1, 1), (5, 4)), 5, 1): "C5",
    (6, False, ((1, 1), (2, 3), (3, 2)), 1, 3): "S3",
    (8, False, ((1, 1), (2, 5), (4, 2)), 2, 2): "D4",
    (9, True, ((1, 1), (3, 8)), 9, 1): "C3^2",
    (10, False, ((1, 1), (2, 5), (5, 4)), 1, 5): "D5",
    (12, False, ((1, 1), (2, 3), (3, 8)), 1, 4): "A4",
    (18, False, ((1, 1), (2, 9), (3, 8)), 1, 9): "C3:S3",
    (24, False, ((1, 1), (2, 9), (3, 8), (4, 6)), 1, 12): "S4",
    (36, False, ((1, 1), (2, 9), (3, 8), (4, 18)), 1, 9): "C3^2:C4",
    (60, False, ((1, 1), (2, 15), (3, 20), (5, 24)), 1, 60): "A5",
    (360, False, ((1, 1), (2, 45), (3, 80), (4, 90), (5, 144)), 1, 360): "A6",
}

KNOWN_LABELS = tuple(dict.fromkeys(_LABEL_INVARIANTS.values()))


def iso_invariants(H: PermGroup) -> tuple:
    return (
        H.order,
        H.is_abelian(),
        tuple(H.element_order_census().items()),
        len(H.center()),
        H.derived_subgroup().order,
    )


def iso_label(H: PermGroup) -> str:
    inv = iso_invariants(H)
    try:
        return _LABEL_INVARIANTS[inv]
    except KeyError:
        raise ValueError(f"no label for invariant tuple {inv}") from None


# subgroup lattice up to conjugacy


@dataclass(frozen=True)
class SubgroupClass:
    representative: PermGroup
    order: int
    index: int
    iso_label: str
    class_size: int

    @property
    def normalizer_order(self) -> int:
        return (self.order * self.index) // self.class_size


def _cyclic(g: Permutation) -> frozenset[Permutation]:
    out = {g}
    h = g * g
    while h not in out:
        out.add(h)
        h = h * g
    return frozenset(out)


def subgroup_classes(G: PermGroup) -> list[SubgroupClass]:
    """All conjugacy classes of subgroups of G.

    Seeds are the cyclic subgroups; every class representative is then
    extended by each element of G.  Any subgroup is generated by one of its
    maximal subgroups and a single extra element, so induction on the order
    shows every class is reached.
    """
    elems = sorted(G.elements)
    conj_by: list[tuple[Permutation, Permutation]] = [(g, g.inverse()) for g in elems]
    known: dict[frozenset, int] = {}
    reps: list[frozenset] = []
    sizes: list[int] = []

    def register(H: frozenset) -> bool:
        if H in known:
            return False
        cid = len(reps)
        cls = {frozenset(g * h * gi for h in H) for g, gi in conj_by}
        for K in cls:
            known[K] = cid
        reps.append(H)
        sizes.append(len(cls))
        return True

    for g in elems:
        register(_cyclic(g))
    queue = list(range(len(reps)))
    while queue:
        cid = queue.pop(0)
        H = reps[cid]
        gensH = _small_generating_set(H)
        for g in elems:
            if g in H:
                continue
            K = generate(gensH + [g], G.degree).elements
            if register(K):
                queue.append(len(reps) - 1)
    out = []
    for H, size in zip(reps, sizes):
        grp = PermGroup(H, tuple(_small_generating_set(H)))
        out.append(SubgroupClass(grp, len(H), G.order // len(H), iso_label(grp), size))
    out.sort(key=lambda c: (c.order, _label_rank(c.iso_label), _class_key(c)))
    return out


def _label_rank(label: str) -> int:
    return KNOWN_LABELS.index(label) if label in KNOWN_LABELS else len(KNOWN_LABELS)


def _class_key(c: SubgroupClass) -> tuple:
    # deterministic tie-break between classes with equal order and label
    return (c.class_size, min(tuple(sorted(p.images for p in c.representative.elements)), default=()))


def _small_generating_set(H: frozenset) -> list[Permutation]:
    gens: list[Permutation] = []
    span: frozenset = frozenset()
    for g in sorted(H, key=lambda p: (-p.order(), p)):
        if g not in span or not gens:
            gens.append(g)
            span = generate(gens).elements if gens else span
            if len(span) == len(H):
                break
    return gens


@lru_cache(maxsize=1)
def a6_subgroup_classes() -> tuple[SubgroupClass, ...]:
    """Subgroup classes of A6, computed once per process."""
    return tuple(subgroup_classes(a6_standard()))


def has_subgroup_of_order(G: PermGroup, n: int, classes: list[SubgroupClass] | None = None) -> bool:
    classes = classes if classes is not None else subgroup_classes(G)
    return any(c.order == n for c in classes)


def table_rows(classes: list[SubgroupClass]) -> list[dict]:
    return [
        {"no": i, "iso_label": c.iso_label, "order": c.order, "index": c.index}
        for i, c in enumerate(classes, start=1)
    ]


def total_subgroup_count(classes: list[SubgroupClass]) -> int:
    return sum(c.class_size for c in classes)


def brute_force_subgroups(G: PermGroup, max_gens: int = 2) -> set[frozenset]:
    """Every subgroup generated by at most ``max_gens`` elements (exhaustive)."""
    elems = sorted(G.elements)
    found: set[frozenset] = {frozenset([Permutation.identity(G.degree)])}
    cyclic = {_cyclic(g) for g in elems}
    found |= cyclic
    layer = set(cyclic)
    for _ in range(max_gens - 1):
        new = set()
        for H in layer:
            hg = _small_generating_set(H)
            for g in elems:
                if g not in H:
                    K = generate(hg + [g], G.degree).elements
                    if K not in found:
                        new.add(K)
        found |= new
        layer = new
    return found


# projective matrices over Q(rho, tau)


Matrix = tuple[tuple[NumberFieldElem, ...], ...]


@dataclass(frozen=True)
class ProjMatrix:
    """3x3 matrix up to scalars, stored with its first nonzero entry equal to 1."""

    rows: Matrix

    @classmethod
    def normalized(cls, rows: Sequence[Sequence[NumberFieldElem]]) -> "ProjMatrix":
        flat = [e for r in rows for e in r]
        pivot = next((e for e in flat if e), None)
        if pivot is None:
            raise ValueError("zero matrix")
        inv = pivot.inverse()
        return cls(tuple(tuple(e * inv for e in r) for r in rows))

    def key(self) -> tuple:
        return tuple(tuple(c for c in e.flat_coords()) for r in self.rows for e in r)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ProjMatrix) and self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __mul__(self, other: "ProjMatrix") -> "ProjMatrix":
        a, b = self.rows, other.rows
        n = len(a)
        prod = [[sum((a[i][k] * b[k][j] for k in range(n)), a[0][0] * 0) for j in range(n)] for i in range(n)]
        return ProjMatrix.normalized(prod)

    def determinant(self) -> NumberFieldElem:
        m = self.rows
        return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
                - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
                + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))

    def is_identity(self) -> bool:
        return all((e == 1) if i == j else (not e) for i, r in enumerate(self.rows) for j, e in enumerate(r))

    def order(self, limit: int = 1000) -> int:
        p = self
        for k in range(1, limit + 1):
            if p.is_identity():
                return k
            p = p * self
        raise ValueError("element order exceeds limit")


def valentiner_generators() -> tuple[NumberField, list[ProjMatrix]]:
    """The four generator matrices over Q(rho, tau), rho^2+rho+1 = 0, tau^2 = tau+1."""
    K, rho, tau = rho_tau_field()
    z, o = K(0), K(1)
    ti = tau.inverse()
    m1 = [[-o, z, z], [z, o, z], [z, z, -o]]
    m2 = [[z, z, o], [o, z, z], [z, o, z]]
    m3 = [[o, z, z], [z, z, rho * rho], [z, -rho, z]]
    half = K(Fraction(1, 2))
    m4 = [[half * o, half * ti, -half * tau], [half * ti, half * tau, half * o], [half * tau, -half * o, half * ti]]
    mats = [ProjMatrix.normalized(m) for m in (m1, m2, m3, m4)]
    for m in mats:
        if not m.determinant():
            raise ValueError("singular generator")
    return K, mats


def identity_matrix(K: NumberField) -> ProjMatrix:
    z, o = K(0), K(1)
    return ProjMatrix.normalized([[o, z, z], [z, o, z], [z, z, o]])


def matrix_closure(gens: Sequence[ProjMatrix], limit: int = 100000) -> set[ProjMatrix]:
    """All products of the generators, normalized projectively after each step."""
    for g in gens:
        if not g.determinant():
            raise ValueError("non-invertible generator")
    if not gens:
        raise ValueError("no generators")
    field = gens[0].rows[0][0].field
    ident = identity_matrix(field)
    elems = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for h in frontier:
            for g in gens:
                k = h * g
                if k not in elems:
                    elems.add(k)
                    nxt.append(k)
                    if len(elems) > limit:
                        raise ValueError("closure exceeds limit")
        frontier = nxt
    return elems


def order_census(elements: Iterable) -> dict[int, int]:
    return dict(sorted(Counter(e.order() for e in elements).items()))
