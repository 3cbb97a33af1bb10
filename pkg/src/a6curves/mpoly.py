"""Sparse multivariate polynomials, term orders, determinants and resultants."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Iterable, Iterator, Mapping, Sequence

from .exact import UPoly, as_rational, format_terms, tokenize

# exponents are fixed-width unsigned fields in the packed Groebner representation
EXP_BITS = 16
MAX_EXP = (1 << (EXP_BITS - 1)) - 1

Exp = tuple[int, ...]


@dataclass(frozen=True)
class TermOrder:
    """degrevlex, lex, or block(k): first k variables eliminated, degrevlex per block."""

    kind: str = "degrevlex"
    k: int = 0

    def __post_init__(self) -> None:
        if self.kind not in ("degrevlex", "lex", "block"):
            raise ValueError(f"unknown term order {self.kind!r}")
        if self.kind == "block" and self.k < 1:
            raise ValueError("block order needs k >= 1")

    def __str__(self) -> str:
        return f"block({self.k})" if self.kind == "block" else self.kind

    @classmethod
    def parse(cls, text: str) -> "TermOrder":
        text = text.strip()
        if text.startswith("block(") and text.endswith(")"):
            return cls("block", int(text[6:-1]))
        return cls(text)

    def matrix(self, n: int) -> list[list[int]]:
        """Nonnegative weight rows; comparing M*e lexicographically gives the order.

        Degrevlex rows are the prefix sums e_1+..+e_j for j = n..1, which keeps
        every row additive and nonnegative (a packed-integer friendly form).
        """
        if self.kind == "lex":
            return [[1 if j == i else 0 for j in range(n)] for i in range(n)]
        if self.kind == "degrevlex":
            return _drl_rows(0, n, n)
        k = min(self.k, n)
        if k == n:
            return _drl_rows(0, n, n)
        return _drl_rows(0, k, n) + _drl_rows(k, n, n)

    def key_function(self, n: int) -> Callable[[Exp], tuple]:
        rows = self.matrix(n)
        sparse = [[j for j, w in enumerate(r) if w] for r in rows]
        if all(all(rows[i][j] == 1 for j in s) for i, s in enumerate(sparse)):
            return lambda e: tuple(sum(e[j] for j in s) for s in sparse)
        return lambda e: tuple(sum(w * x for w, x in zip(r, e)) for r in rows)


def _drl_rows(lo: int, hi: int, n: int) -> list[list[int]]:
    rows = []
    for top in range(hi, lo, -1):
        rows.append([1 if lo <= j < top else 0 for j in range(n)])
    return rows


DEGREVLEX = TermOrder("degrevlex")
LEX = TermOrder("lex")


class Ring:
    """Polynomial ring descriptor: ordered variable names plus a term order."""

    def __init__(self, variables: Iterable[str], order: TermOrder | str = DEGREVLEX, coeff: str = "Q"):
        self.vars: tuple[str, ...] = tuple(variables)
        if len(set(self.vars)) != len(self.vars):
            raise ValueError("duplicate variable names")
        self.order = TermOrder.parse(order) if isinstance(order, str) else order
        self.coeff = coeff
        self._index = {v: i for i, v in enumerate(self.vars)}
        self._key = self.order.key_function(len(self.vars))

    @property
    def nvars(self) -> int:
        return len(self.vars)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Ring) and self.vars == other.vars and self.coeff == other.coeff

    def __hash__(self) -> int:
        return hash((self.vars, self.coeff))

    def __repr__(self) -> str:
        return f"Ring({','.join(self.vars)}; {self.order})"

    def header(self) -> str:
        return f"ring: vars={','.join(self.vars)}; coeff={self.coeff}; order={self.order}"

    @classmethod
    def from_header(cls, line: str) -> "Ring":
        body = line.split(":", 1)[1] if line.startswith("ring:") else line
        fields = {}
        for part in body.split(";"):
            if "=" in part:
                k, v = part.split("=", 1)
                fields[k.strip()] = v.strip()
        return cls(fields["vars"].split(","), fields.get("order", "degrevlex"), fields.get("coeff", "Q"))

    def with_order(self, order: TermOrder | str) -> "Ring":
        return Ring(self.vars, order, self.coeff)

    def index(self, var: str) -> int:
        try:
            return self._index[var]
        except KeyError:
            raise ValueError(f"unknown variable {var!r} in {self!r}") from None

    def sort_key(self, e: Exp) -> tuple:
        return self._key(e)

    def zero(self) -> "MultiPoly":
        return MultiPoly(self, {})

    def one(self) -> "MultiPoly":
        return self.constant(1)

    def constant(self, c: Any) -> "MultiPoly":
        if isinstance(c, int):
            c = Fraction(c)
        return MultiPoly(self, {(0,) * self.nvars: c} if c else {})

    def var(self, name: str) -> "MultiPoly":
        e = [0] * self.nvars
        e[self.index(name)] = 1
        return MultiPoly(self, {tuple(e): Fraction(1)})

    def gens(self) -> list["MultiPoly"]:
        return [self.var(v) for v in self.vars]

    def monomial(self, exps: Sequence[int], c: Any = 1) -> "MultiPoly":
        if isinstance(c, int):
            c = Fraction(c)
        return MultiPoly(self, {tuple(exps): c} if c else {})

    def __call__(self, value: Any) -> "MultiPoly":
        if isinstance(value, MultiPoly):
            return value.to_ring(self)
        if isinstance(value, str):
            return self.parse(value)
        return self.constant(value)

    def parse(self, text: str) -> "MultiPoly":
        return _Parser(self, text).parse()


class MultiPoly:
    """Polynomial as a map exponent-tuple -> nonzero coefficient."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: Ring, terms: Mapping[Exp, Any] | None = None):
        self.ring = ring
        self.terms: dict[Exp, Any] = {e: c for e, c in (terms or {}).items() if c}

    # inspection

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def degree(self, var: str) -> int:
        i = self.ring.index(var)
        return max((e[i] for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_coeff(self) -> Any:
        return self.terms.get((0,) * self.ring.nvars, Fraction(0))

    def variables(self) -> list[str]:
        used = [False] * self.ring.nvars
        for e in self.terms:
            for i, x in enumerate(e):
                if x:
                    used[i] = True
        return [v for v, u in zip(self.ring.vars, used) if u]

    def sorted_terms(self, order: TermOrder | None = None) -> list[tuple[Exp, Any]]:
        key = self.ring.sort_key if order is None else order.key_function(self.ring.nvars)
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)

    def leading_term(self, order: TermOrder | None = None) -> tuple[Exp, Any]:
        key = self.ring.sort_key if order is None else order.key_function(self.ring.nvars)
        e = max(self.terms, key=key)
        return e, self.terms[e]

    def lc(self) -> Any:
        return self.leading_term()[1]

    # arithmetic

    def _coerce(self, other: Any) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.ring != self.ring:
                raise ValueError(f"ring mismatch: {self.ring!r} vs {other.ring!r}")
            return other
        return self.ring.constant(other)

    def __add__(self, other: Any) -> "MultiPoly":
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e)
            if v is None:
                out[e] = c
            else:
                s = v + c
                if s:
                    out[e] = s
                else:
                    del out[e]
        return MultiPoly(self.ring, out)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: Any) -> "MultiPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other: Any) -> "MultiPoly":
        return self._coerce(other) - self

    def __mul__(self, other: Any) -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            if isinstance(other, int):
                other = Fraction(other)
            if not other:
                return self.ring.zero()
            return MultiPoly(self.ring, {e: c * other for e, c in self.terms.items()})
        return mp_mul(self, other)

    def __rmul__(self, other: Any) -> "MultiPoly":
        if isinstance(other, int):
            other = Fraction(other)
        return MultiPoly(self.ring, {e: other * c for e, c in self.terms.items()})

    def __truediv__(self, other: Any) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            return self.exact_div(other)
        inv = 1 / (Fraction(other) if isinstance(other, int) else other)
        return self * inv

    def __pow__(self, n: int) -> "MultiPoly":
        return mp_pow(self, n)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, MultiPoly):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == self.ring.constant(other).terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.ring, frozenset(self.terms.items())))

    def exact_div(self, other: "MultiPoly") -> "MultiPoly":
        q, r = mp_divmod(self, other)
        if r:
            raise ArithmeticError("multivariate division is not exact")
        return q

    # calculus and homomorphisms

    def diff(self, var: str) -> "MultiPoly":
        return mp_diff(self, var)

    def subst(self, images: Mapping[str, Any], target: Ring | None = None) -> "MultiPoly":
        return mp_subst(self, images, target)

    def __call__(self, *point: Any, **named: Any) -> Any:
        """Evaluate at a point (positional in ring order, or by name)."""
        if point and named:
            raise TypeError("use positional or named values, not both")
        if point:
            if len(point) != self.ring.nvars:
                raise ValueError("point has wrong dimension")
            values = list(point)
        else:
            values = [named[v] for v in self.ring.vars]
        return mp_eval(self, values)

    def map_coeffs(self, fn: Callable[[Any], Any]) -> "MultiPoly":
        return MultiPoly(self.ring, {e: fn(c) for e, c in self.terms.items()})

    def to_ring(self, ring: Ring) -> "MultiPoly":
        """Re-express in a ring whose variables include all used ones."""
        if ring.vars == self.ring.vars:
            return MultiPoly(ring, self.terms)
        pos = []
        for i, v in enumerate(self.ring.vars):
            if v in ring._index:
                pos.append(ring._index[v])
            else:
                pos.append(None)
        out: dict[Exp, Any] = {}
        for e, c in self.terms.items():
            ne = [0] * ring.nvars
            for i, x in enumerate(e):
                if x:
                    if pos[i] is None:
                        raise ValueError(f"variable {self.ring.vars[i]!r} not in target ring")
                    ne[pos[i]] = x
            out[tuple(ne)] = c
        return MultiPoly(ring, out)

    def coefficients_in(self, var: str) -> dict[int, "MultiPoly"]:
        """Coefficients with respect to ``var`` (still living in the same ring)."""
        i = self.ring.index(var)
        out: dict[int, dict[Exp, Any]] = {}
        for e, c in self.terms.items():
            k = e[i]
            ne = e[:i] + (0,) + e[i + 1:]
            out.setdefault(k, {})[ne] = c
        return {k: MultiPoly(self.ring, t) for k, t in out.items()}

    def to_upoly(self, var: str | None = None) -> UPoly:
        """Univariate view; every used variable must be ``var``."""
        used = self.variables()
        if var is None:
            var = used[0] if used else self.ring.vars[0]
        if any(v != var for v in used):
            raise ValueError(f"polynomial is not univariate in {var!r}")
        i = self.ring.index(var)
        deg = self.degree(var)
        cs = [Fraction(0)] * (deg + 1)
        for e, c in self.terms.items():
            cs[e[i]] = c
        return UPoly(cs, var)

    def primitive(self) -> "MultiPoly":
        """Integer-primitive normal form: content removed, positive leading coefficient."""
        if not self.terms:
            return self
        return MultiPoly(self.ring, dict(zip(*_primitive_items(self))))

    def monic(self) -> "MultiPoly":
        if not self.terms:
            return self
        lc = self.lc()
        return self * (1 / lc)

    # text

    def __str__(self) -> str:
        return format_mpoly(self)

    def __repr__(self) -> str:
        return f"MultiPoly({format_mpoly(self)!r}, {self.ring!r})"


def _primitive_items(p: MultiPoly) -> tuple[list[Exp], list[Fraction]]:
    import math

    items = p.sorted_terms()
    es = [e for e, _ in items]
    qs = [as_rational(c) for _, c in items]
    den = 1
    for q in qs:
        den = den * q.denominator // math.gcd(den, q.denominator)
    ints = [int(q * den) for q in qs]
    g = 0
    for v in ints:
        g = math.gcd(g, v)
    if ints[0] < 0:
        g = -g
    return es, [Fraction(v // g) for v in ints]


def _mono_str(ring: Ring, e: Exp) -> str:
    parts = []
    for v, k in zip(ring.vars, e):
        if k == 1:
            parts.append(v)
        elif k > 1:
            parts.append(f"{v}^{k}")
    return "*".join(parts)


def format_mpoly(p: MultiPoly, order: TermOrder | None = None) -> str:
    return format_terms([(c, _mono_str(p.ring, e)) for e, c in p.sorted_terms(order)])


# core operations


def mp_add(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    return a + b


def mp_mul(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    if a.ring != b.ring:
        raise ValueError(f"ring mismatch: {a.ring!r} vs {b.ring!r}")
    if not a.terms or not b.terms:
        return a.ring.zero()
    if a.total_degree() + b.total_degree() > MAX_EXP:
        raise OverflowError("exponent exceeds the fixed-width limit")
    out: dict[Exp, Any] = {}
    bt = list(b.terms.items())
    for ea, ca in a.terms.items():
        for eb, cb in bt:
            e = tuple(x + y for x, y in zip(ea, eb))
            v = out.get(e)
            out[e] = ca * cb if v is None else v + ca * cb
    return MultiPoly(a.ring, out)


def mp_pow(a: MultiPoly, n: int) -> MultiPoly:
    if n < 0:
        raise ValueError("negative exponent")
    result = a.ring.one()
    base = a
    while n:
        if n & 1:
            result = mp_mul(result, base)
        n >>= 1
        if n:
            base = mp_mul(base, base)
    return result


def mp_diff(p: MultiPoly, var: str) -> MultiPoly:
    i = p.ring.index(var)
    out = {}
    for e, c in p.terms.items():
        k = e[i]
        if k:
            out[e[:i] + (k - 1,) + e[i + 1:]] = c * k
    return MultiPoly(p.ring, out)


def mp_eval(p: MultiPoly, values: Sequence[Any]) -> Any:
    total: Any = Fraction(0)
    powers: list[dict[int, Any]] = [{0: 1} for _ in values]
    for e, c in p.terms.items():
        term = c
        for i, k in enumerate(e):
            if k:
                cache = powers[i]
                if k not in cache:
                    cache[k] = values[i] ** k
                term = term * cache[k]
        total = total + term
    return total


def mp_subst(p: MultiPoly, images: Mapping[str, Any], target: Ring | None = None) -> MultiPoly:
    """Apply the ring homomorphism sending each variable to its image.

    Variables missing from ``images`` map to themselves (they must then exist
    in the target ring).  Scalar images are allowed.
    """
    poly_targets = {im.ring for im in images.values() if isinstance(im, MultiPoly)}
    if target is None:
        if len(poly_targets) > 1:
            raise ValueError("images live in different rings")
        target = poly_targets.pop() if poly_targets else p.ring
    elif poly_targets - {target}:
        raise ValueError("image ring differs from the target ring")
    for v in images:
        p.ring.index(v)
    imgs: list[MultiPoly] = []
    for v in p.ring.vars:
        if v in images:
            im = images[v]
            imgs.append(im if isinstance(im, MultiPoly) else target.constant(im))
        else:
            imgs.append(target.var(v))
    cache: list[dict[int, MultiPoly]] = [{} for _ in imgs]

    def power(i: int, k: int) -> MultiPoly:
        c = cache[i]
        if k not in c:
            c[k] = mp_pow(imgs[i], k)
        return c[k]

    # scalar images collapse to one coefficient multiplication
    scalar = [im.is_constant() for im in imgs]
    out: dict[Exp, Any] = {}
    zero_e = (0,) * target.nvars
    for e, c in p.terms.items():
        coeff = c
        rest: list[tuple[int, int]] = []
        for i, k in enumerate(e):
            if not k:
                continue
            if scalar[i]:
                coeff = coeff * imgs[i].constant_coeff() ** k
            else:
                rest.append((i, k))
        if not coeff:
            continue
        term = {zero_e: coeff}
        for i, k in rest:
            term = mp_mul(MultiPoly(target, term), power(i, k)).terms
        for te, tc in term.items():
            v = out.get(te)
            out[te] = tc if v is None else v + tc
    return MultiPoly(target, out)


def mp_divmod(a: MultiPoly, b: MultiPoly) -> tuple[MultiPoly, MultiPoly]:
    """Division by a single polynomial w.r.t. lex (remainder-free iff b | a)."""
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    n = a.ring.nvars
    key = LEX.key_function(n)
    lb, cb = b.leading_term(LEX)
    rem = dict(a.terms)
    q: dict[Exp, Any] = {}
    r: dict[Exp, Any] = {}
    bt = list(b.terms.items())
    while rem:
        e = max(rem, key=key)
        c = rem[e]
        if all(x >= y for x, y in zip(e, lb)):
            qe = tuple(x - y for x, y in zip(e, lb))
            qc = c / cb
            q[qe] = q.get(qe, 0) + qc
            for be, bc in bt:
                te = tuple(x + y for x, y in zip(qe, be))
                v = rem.get(te, 0) - qc * bc
                if v:
                    rem[te] = v
                else:
                    rem.pop(te, None)
        else:
            r[e] = c
            del rem[e]
    return MultiPoly(a.ring, q), MultiPoly(a.ring, r)


# determinants


def _det_cofactor(M: Sequence[Sequence[Any]]) -> Any:
    n = len(M)
    if n == 1:
        return M[0][0]
    if n == 2:
        return M[0][0] * M[1][1] - M[0][1] * M[1][0]
    total = None
    for j in range(n):
        a = M[0][j]
        if not a:
            continue
        minor = [row[:j] + row[j + 1:] for row in M[1:]]
        term = a * _det_cofactor(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    if total is None:
        return M[0][0] * 0
    return total


def det_bareiss(M: Sequence[Sequence[Any]]) -> Any:
    """Fraction-free Gaussian elimination; entries need exact division."""
    n = len(M)
    A = [list(row) for row in M]
    sign = 1
    prev: Any = 1
    for k in range(n - 1):
        if not A[k][k]:
            for i in range(k + 1, n):
                if A[i][k]:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return A[0][0] * 0
        akk = A[k][k]
        for i in range(k + 1, n):
            aik = A[i][k]
            row_i = A[i]
            row_k = A[k]
            for j in range(k + 1, n):
                num = akk * row_i[j] - aik * row_k[j]
                row_i[j] = _exact_div(num, prev)
            row_i[k] = akk * 0
        prev = akk
    d = A[n - 1][n - 1]
    return d if sign == 1 else -d


def _exact_div(num: Any, den: Any) -> Any:
    if isinstance(den, int) and den == 1:
        return num
    if isinstance(num, MultiPoly):
        if isinstance(den, MultiPoly):
            if den.is_constant():
                return num * (1 / den.constant_coeff())
            return num.exact_div(den)
        return num * (1 / Fraction(den) if isinstance(den, int) else 1 / den)
    if hasattr(num, "exact_div") and not isinstance(den, (int, Fraction)):
        return num.exact_div(den)
    return num / den


def mp_det(M: Sequence[Sequence[Any]]) -> Any:
    """Exact determinant: cofactor expansion up to 4x4, Bareiss beyond."""
    n = len(M)
    if n == 0:
        raise ValueError("empty matrix")
    if any(len(row) != n for row in M):
        raise ValueError("matrix is not square")
    if n <= 4:
        return _det_cofactor(M)
    return det_bareiss(M)


def _three_vars(F: MultiPoly) -> tuple[str, str, str]:
    if F.ring.nvars != 3:
        raise ValueError("expected a polynomial in exactly 3 variables")
    return F.ring.vars  # type: ignore[return-value]


def hessian_matrix(F: MultiPoly) -> list[list[MultiPoly]]:
    vs = F.ring.vars
    grad = [F.diff(v) for v in vs]
    return [[g.diff(v) for v in vs] for g in grad]


def hessian_det(F: MultiPoly) -> MultiPoly:
    _three_vars(F)
    return mp_det(hessian_matrix(F))


def bordered_hessian(F: MultiPoly, Phi: MultiPoly) -> MultiPoly:
    """det [[H(F), grad Phi], [grad Phi^T, 0]]."""
    vs = _three_vars(F)
    if Phi.ring != F.ring:
        raise ValueError("F and Phi must share a ring")
    H = hessian_matrix(F)
    g = [Phi.diff(v) for v in vs]
    M = [H[i] + [g[i]] for i in range(3)] + [g + [F.ring.zero()]]
    return mp_det(M)


def sylvester_matrix(p: MultiPoly, q: MultiPoly, var: str) -> list[list[MultiPoly]]:
    if p.ring != q.ring:
        raise ValueError("ring mismatch")
    m, n = p.degree(var), q.degree(var)
    if m <= 0 and n <= 0:
        raise ValueError(f"both polynomials are constant in {var!r}")
    zero = p.ring.zero()
    pc = p.coefficients_in(var)
    qc = q.coefficients_in(var)
    size = m + n
    rows = []
    for i in range(n):
        row = [zero] * size
        for k in range(m + 1):
            row[i + m - k] = pc.get(k, zero)
        rows.append(row)
    for i in range(m):
        row = [zero] * size
        for k in range(n + 1):
            row[i + n - k] = qc.get(k, zero)
        rows.append(row)
    return rows


def sylvester_resultant(p: MultiPoly, q: MultiPoly, var: str) -> MultiPoly:
    m, n = p.degree(var), q.degree(var)
    if m <= 0 and n <= 0:
        raise ValueError(f"both polynomials are constant in {var!r}")
    if m < 0 or n < 0:
        return p.ring.zero()
    if m == 0:
        return p ** n
    if n == 0:
        return q ** m
    return mp_det(sylvester_matrix(p, q, var))


def is_homogeneous_of_degree(p: MultiPoly, d: int) -> bool:
    return all(sum(e) == d for e in p.terms)


# parsing


class _Parser:
    def __init__(self, ring: Ring, text: str):
        self.ring = ring
        self.toks = tokenize(text)
        self.pos = 0
        # longest-first so that multi-letter names win over prefixes
        self.names = sorted(ring.vars, key=len, reverse=True)

    def peek(self) -> tuple[str, str] | None:
        return self.toks[self.pos] if self.pos < len(self.toks) else None

    def take(self) -> tuple[str, str]:
        tok = self.toks[self.pos]
        self.pos += 1
        return tok

    def parse(self) -> MultiPoly:
        if not self.toks:
            raise ValueError("empty polynomial text")
        p = self.expr()
        if self.peek() is not None:
            raise ValueError(f"trailing input at token {self.peek()}")
        return p

    def expr(self) -> MultiPoly:
        sign = 1
        tok = self.peek()
        if tok and tok[0] == "op" and tok[1] in "+-":
            self.take()
            sign = -1 if tok[1] == "-" else 1
        acc = self.term() * sign
        while True:
            tok = self.peek()
            if tok and tok[0] == "op" and tok[1] in "+-":
                self.take()
                t = self.term()
                acc = acc + t if tok[1] == "+" else acc - t
            else:
                return acc

    def term(self) -> MultiPoly:
        acc = self.factor()
        while True:
            tok = self.peek()
            if tok is None:
                return acc
            if tok[0] == "op" and tok[1] == "*":
                self.take()
                acc = acc * self.factor()
            elif tok[0] == "op" and tok[1] == "/":
                self.take()
                d = self.factor()
                if not d.is_constant() or d.is_zero():
                    raise ValueError("division only by nonzero constants")
                acc = acc * (1 / d.constant_coeff())
            elif tok[0] in ("num", "name") or tok == ("op", "("):
                acc = acc * self.factor()  # implicit product
            else:
                return acc

    def factor(self) -> MultiPoly:
        base = self.atom()
        tok = self.peek()
        if tok == ("op", "^"):
            self.take()
            kind, val = self.take()
            if kind != "num":
                raise ValueError("exponent must be a nonnegative integer")
            base = base ** int(val)
        return base

    def atom(self) -> MultiPoly:
        kind, val = self.take()
        if kind == "num":
            return self.ring.constant(int(val))
        if kind == "name":
            return self.compact_name(val)
        if val == "(":
            p = self.expr()
            if self.take() != ("op", ")"):
                raise ValueError("unbalanced parentheses")
            return p
        if val == "-":
            return -self.factor()
        raise ValueError(f"unexpected token {val!r}")

    def compact_name(self, word: str) -> MultiPoly:
        """Split Singular-style words such as ``b2e`` into b^2*e."""
        if word in self.ring._index:
            return self.ring.var(word)
        exps = [0] * self.ring.nvars
        i = 0
        while i < len(word):
            for name in self.names:
                if word.startswith(name, i):
                    break
            else:
                raise ValueError(f"unknown variable in {word!r}")
            i += len(name)
            j = i
            while j < len(word) and word[j].isdigit():
                j += 1
            exps[self.ring.index(name)] += int(word[i:j]) if j > i else 1
            i = j
        return self.ring.monomial(exps)


def parse_poly_file(text: str) -> tuple[Ring, list[MultiPoly]]:
    """Read the header-plus-one-polynomial-per-line format."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.strip().startswith("#")]
    if not lines or not lines[0].startswith("ring:"):
        raise ValueError("missing 'ring:' header line")
    ring = Ring.from_header(lines[0])
    return ring, [ring.parse(ln) for ln in lines[1:]]


def format_poly_file(ring: Ring, polys: Iterable[MultiPoly]) -> str:
    return "\n".join([ring.header()] + [format_mpoly(p) for p in polys]) + "\n"


def iter_monomials(nvars: int, degree: int) -> Iterator[Exp]:
    """All exponent vectors of the given total degree."""
    if nvars == 1:
        yield (degree,)
        return
    for k in range(degree, -1, -1):
        for rest in iter_monomials(nvars - 1, degree - k):
            yield (k,) + rest
