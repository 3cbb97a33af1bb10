"""Exact scalars: rationals and dense univariate polynomials over a field.

Rationals are :class:`fractions.Fraction` values; every other module goes
through :func:`as_rational` so ints and decimal-free strings are accepted
wherever a coefficient is expected.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from itertools import zip_longest
from typing import Any, Iterable, Sequence

Rational = Fraction


def as_rational(value: Any) -> Fraction:
    """Coerce ``value`` to a normalized Fraction (floats are refused)."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a coefficient")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    if isinstance(value, float):
        raise TypeError("floating point values are not exact")
    # gmpy2 mpz/mpq and similar expose numerator/denominator
    num = getattr(value, "numerator", None)
    den = getattr(value, "denominator", None)
    if num is not None and den is not None:
        return Fraction(int(num), int(den))
    raise TypeError(f"cannot interpret {value!r} as a rational")


def format_rational(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _is_zero(c: Any) -> bool:
    return not c


class UPoly:
    """Dense univariate polynomial, coefficients ascending by degree.

    Coefficients may be Fractions, number-field elements or other UPoly
    instances (polynomials over Q[t]); only ring operations are needed except
    where a method says it divides.
    """

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs: Iterable[Any] = (), var: str = "x"):
        cs = [Fraction(c) if isinstance(c, int) and not isinstance(c, bool) else c for c in coeffs]
        while cs and _is_zero(cs[-1]):
            cs.pop()
        self.coeffs = tuple(cs)
        self.var = var

    # construction helpers

    @classmethod
    def gen(cls, var: str = "x") -> "UPoly":
        return cls((0, 1), var)

    @classmethod
    def constant(cls, c: Any, var: str = "x") -> "UPoly":
        return cls((c,), var)

    @classmethod
    def from_roots(cls, roots: Iterable[Any], var: str = "x") -> "UPoly":
        out = cls((1,), var)
        for r in roots:
            out = out * cls((-r, 1), var)
        return out

    # basic properties

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> Any:
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, k: int) -> Any:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return self._zero()

    def _zero(self) -> Any:
        if self.coeffs:
            c = self.coeffs[0]
            return c - c
        return Fraction(0)

    def _check(self, other: "UPoly") -> None:
        if self.var != other.var:
            raise ValueError(f"variable mismatch: {self.var!r} vs {other.var!r}")

    def _coerce(self, other: Any) -> "UPoly":
        # a UPoly in another variable is a scalar here (coefficients in Q[t])
        if isinstance(other, UPoly) and other.var == self.var:
            return other
        return UPoly((other,), self.var)

    # arithmetic

    def __add__(self, other: Any) -> "UPoly":
        other = self._coerce(other)
        cs = [
            (a if b is None else (b if a is None else a + b))
            for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=None)
        ]
        return UPoly(cs, self.var)

    __radd__ = __add__

    def __neg__(self) -> "UPoly":
        return UPoly([-c for c in self.coeffs], self.var)

    def __sub__(self, other: Any) -> "UPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other: Any) -> "UPoly":
        return self._coerce(other) - self

    def __mul__(self, other: Any) -> "UPoly":
        if not isinstance(other, UPoly) or other.var != self.var:
            return UPoly([c * other for c in self.coeffs], self.var)
        if not self.coeffs or not other.coeffs:
            return UPoly((), self.var)
        out: list[Any] = [None] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if _is_zero(a):
                continue
            for j, b in enumerate(other.coeffs):
                if _is_zero(b):
                    continue
                k = i + j
                out[k] = a * b if out[k] is None else out[k] + a * b
        z = self._zero()
        return UPoly([z if c is None else c for c in out], self.var)

    def __rmul__(self, other: Any) -> "UPoly":
        return UPoly([other * c for c in self.coeffs], self.var)

    def __pow__(self, n: int) -> "UPoly":
        if n < 0:
            raise ValueError("negative exponent")
        one = self.coeffs[0] ** 0 if self.coeffs and isinstance(self.coeffs[0], UPoly) else 1
        result = UPoly((one,), self.var)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, UPoly):
            if not self.coeffs and not other.coeffs:
                return True
            return self.var == other.var and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return not self.coeffs
            return len(self.coeffs) == 1 and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self) -> int:
        if len(self.coeffs) <= 1:
            return hash(self.coeffs[0] if self.coeffs else 0)
        return hash((self.var, self.coeffs))

    def __call__(self, value: Any) -> Any:
        """Horner evaluation; ``value`` may be any ring element."""
        acc: Any = self._zero()
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def derivative(self) -> "UPoly":
        return UPoly([c * k for k, c in enumerate(self.coeffs) if k], self.var)

    def shift_up(self, k: int) -> "UPoly":
        """Multiply by var**k."""
        if not self.coeffs:
            return self
        z = self._zero()
        return UPoly([z] * k + list(self.coeffs), self.var)

    # field operations

    def divmod(self, other: "UPoly") -> tuple["UPoly", "UPoly"]:
        """Euclidean division; coefficients must form a field."""
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs) + 1
        if dq <= 0:
            return UPoly((), self.var), self
        inv = _inverse(other.lc)
        q: list[Any] = [self._zero()] * dq
        d = other.degree
        for k in range(dq - 1, -1, -1):
            c = rem[k + d]
            if _is_zero(c):
                continue
            c = c * inv
            q[k] = c
            for i, b in enumerate(other.coeffs):
                rem[k + i] = rem[k + i] - c * b
        return UPoly(q, self.var), UPoly(rem[:d], self.var)

    def __floordiv__(self, other: "UPoly") -> "UPoly":
        return self.divmod(other)[0]

    def __mod__(self, other: "UPoly") -> "UPoly":
        return self.divmod(other)[1]

    def exact_div(self, other: "UPoly") -> "UPoly":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ArithmeticError("division is not exact")
        return q

    def pseudo_divmod(self, other: "UPoly") -> tuple["UPoly", "UPoly"]:
        """lc(other)**(deg self - deg other + 1) * self = q*other + r, over a ring."""
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        d = other.degree
        n = self.degree
        if n < d:
            return UPoly((), self.var), self
        lc = other.lc
        rem = list(self.coeffs)
        q: list[Any] = [self._zero()] * (n - d + 1)
        for k in range(n - d, -1, -1):
            c = rem[k + d]
            q = [x * lc for x in q]
            rem = [x * lc for x in rem]
            if _is_zero(c):
                continue
            q[k] = q[k] + c
            for i, b in enumerate(other.coeffs):
                rem[k + i] = rem[k + i] - c * b
        return UPoly(q, self.var), UPoly(rem[:d], self.var)

    def monic(self) -> "UPoly":
        if not self.coeffs:
            return self
        inv = _inverse(self.lc)
        return UPoly([c * inv for c in self.coeffs], self.var)

    def primitive(self) -> "UPoly":
        """Integer-primitive form: content removed, leading coefficient positive (over Q)."""
        if not self.coeffs:
            return self
        qs = [as_rational(c) for c in self.coeffs]
        den = 1
        for q in qs:
            den = den * q.denominator // math.gcd(den, q.denominator)
        ints = [int(q * den) for q in qs]
        g = 0
        for v in ints:
            g = math.gcd(g, v)
        if ints[-1] < 0:
            g = -g
        return UPoly([Fraction(v // g) for v in ints], self.var)

    def integer_coeffs(self) -> list[int]:
        """Coefficients of the primitive form as Python ints (ascending)."""
        return [int(c) for c in self.primitive().coeffs]

    def content(self) -> Fraction:
        """Rational content c with self = c * primitive()."""
        if not self.coeffs:
            return Fraction(0)
        return as_rational(self.lc) / as_rational(self.primitive().lc)

    # text form

    def __str__(self) -> str:
        return format_upoly(self)

    def __repr__(self) -> str:
        return f"UPoly({format_upoly(self)!r}, var={self.var!r})"


def _inverse(c: Any) -> Any:
    if isinstance(c, (int, Fraction)):
        if c == 0:
            raise ZeroDivisionError("division by zero")
        return 1 / Fraction(c)
    inv = getattr(c, "inverse", None)
    if inv is not None:
        return inv()
    return 1 / c


def _coeff_str(c: Any) -> str:
    if isinstance(c, Fraction):
        return format_rational(c)
    if isinstance(c, int):
        return str(c)
    return f"({c})"


def format_terms(terms: Sequence[tuple[Any, str]]) -> str:
    """Join (coefficient, monomial text) pairs in canonical form."""
    if not terms:
        return "0"
    parts: list[str] = []
    for i, (c, mono) in enumerate(terms):
        neg = False
        if isinstance(c, (int, Fraction)):
            neg = c < 0
            mag = -c if neg else c
            cstr = format_rational(Fraction(mag))
        else:
            cstr = _coeff_str(c)
        if mono:
            body = mono if cstr == "1" else f"{cstr}*{mono}"
        else:
            body = cstr
        if i == 0:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(parts)


def format_upoly(p: UPoly) -> str:
    terms = []
    for k in range(p.degree, -1, -1):
        c = p.coeffs[k]
        if _is_zero(c):
            continue
        mono = "" if k == 0 else (p.var if k == 1 else f"{p.var}^{k}")
        terms.append((c, mono))
    return format_terms(terms)


# gcd machinery


def upoly_gcd(a: UPoly, b: UPoly) -> UPoly:
    """Monic gcd over a field; gcd(0, 0) = 0."""
    a._check(b)
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def upoly_xgcd(a: UPoly, b: UPoly) -> tuple[UPoly, UPoly, UPoly]:
    """Return (g, s, t) with s*a + t*b = g monic."""
    a._check(b)
    one = UPoly((1,), a.var)
    zero = UPoly((), a.var)
    r0, r1, s0, s1, t0, t1 = a, b, one, zero, zero, one
    while not r1.is_zero():
        q, r = r0.divmod(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    inv = _inverse(r0.lc)
    return r0 * inv, s0 * inv, t0 * inv


def squarefree_part(a: UPoly) -> UPoly:
    """Monic product of the distinct irreducible factors (characteristic 0)."""
    if a.is_zero():
        raise ValueError("squarefree part of the zero polynomial")
    g = upoly_gcd(a, a.derivative())
    return a.exact_div(g).monic()


def _divisors(n: int) -> list[int]:
    """Positive divisors of |n|, from sympy's integer factorization."""
    from sympy import divisors

    return [int(d) for d in divisors(abs(n))]


def rational_roots(a: UPoly) -> set[Fraction]:
    """All rational roots, by the rational root test on the primitive form."""
    if a.is_zero():
        raise ValueError("rational roots of the zero polynomial")
    p = a.primitive()
    roots: set[Fraction] = set()
    # strip the zero root first so the constant term is nonzero
    k = 0
    while p.coeffs[k] == 0:
        k += 1
    if k:
        roots.add(Fraction(0))
        p = UPoly(p.coeffs[k:], p.var)
    if p.degree <= 0:
        return roots
    ints = [int(c) for c in p.coeffs]
    lead, trail = ints[-1], ints[0]
    # shrink the search by the squarefree part when cheap
    lead_divs = _divisors(lead)
    trail_divs = _divisors(trail)
    for q in lead_divs:
        for r in trail_divs:
            if math.gcd(q, r) != 1:
                continue
            for cand in (Fraction(r, q), Fraction(-r, q)):
                if cand not in roots and p(cand) == 0:
                    roots.add(cand)
    return roots


def rational_roots_bruteforce(a: UPoly) -> set[Fraction]:
    """Scan every divisor pair without the coprimality shortcut (slow; for tests)."""
    p = a.primitive()
    ints = [int(c) for c in p.coeffs]
    roots = set()
    if ints[0] == 0:
        roots.add(Fraction(0))
    lead = ints[-1]
    trail = next(v for v in ints if v)
    for q in range(1, abs(lead) + 1):
        for r in range(0, abs(trail) + 1):
            for cand in (Fraction(r, q), Fraction(-r, q)):
                if p(cand) == 0:
                    roots.add(cand)
    return roots


def coprime(a: UPoly, b: UPoly) -> bool:
    return upoly_gcd(a, b).degree == 0


# parsing

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*(?:\(\d+\))?)|(\*\*|[-+*/^()]))")


def tokenize(text: str) -> list[tuple[str, str]]:
    """Split polynomial text into ('num'|'name'|'op', value) tokens."""
    out: list[tuple[str, str]] = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"unexpected character at {pos}: {text[pos:pos + 10]!r}")
        num, name, op = m.groups()
        if num is not None:
            out.append(("num", num))
        elif name is not None:
            out.append(("name", name))
        else:
            out.append(("op", "^" if op == "**" else op))
        pos = m.end()
    return out


def parse_upoly(text: str, var: str = "x") -> UPoly:
    """Parse canonical or compact text in one variable over Q."""
    from .mpoly import Ring  # local: mpoly builds on this module

    ring = Ring((var,))
    p = ring.parse(text)
    coeffs: dict[int, Fraction] = {e[0]: c for e, c in p.terms.items()}
    deg = max(coeffs, default=-1)
    return UPoly([coeffs.get(k, Fraction(0)) for k in range(deg + 1)], var)
