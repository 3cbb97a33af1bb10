"""Small number fields: simple extensions Q[a]/(m(a)) and towers of them.

A field is built from a monic-or-not minimal polynomial whose coefficients lie
in the base field (Q or another :class:`NumberField`).  Elements store their
coordinates in the power basis over the base, so a tower Q(rho)(tau) has the
flattened basis {1, rho, tau, rho*tau}.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Iterable, Sequence

from .exact import UPoly, as_rational, format_terms, upoly_xgcd


class NumberField:
    def __init__(self, minpoly: UPoly, name: str, base: "NumberField | None" = None):
        if minpoly.degree < 1:
            raise ValueError("minimal polynomial must have positive degree")
        self.base = base
        self.name = name
        self.minpoly = minpoly.monic()
        self.degree = minpoly.degree

    def __repr__(self) -> str:
        base = f" over {self.base!r}" if self.base else ""
        return f"NumberField({self.name}: {self.minpoly}{base})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, NumberField) and (
            self.name == other.name and self.minpoly == other.minpoly and self.base == other.base
        )

    def __hash__(self) -> int:
        return hash((self.name, self.minpoly, self.base))

    @property
    def absolute_degree(self) -> int:
        return self.degree * (self.base.absolute_degree if self.base else 1)

    def base_coerce(self, c: Any) -> Any:
        if self.base is None:
            return as_rational(c)
        return self.base(c)

    def __call__(self, value: Any) -> "NumberFieldElem":
        if isinstance(value, NumberFieldElem):
            if value.field == self:
                return value
            # lift from a subfield of the tower
            return NumberFieldElem(self, [self.base_coerce(value)])
        return NumberFieldElem(self, [self.base_coerce(value)])

    def gen(self) -> "NumberFieldElem":
        return NumberFieldElem(self, [self.base_coerce(0), self.base_coerce(1)])

    def element(self, coords: Sequence[Any]) -> "NumberFieldElem":
        return NumberFieldElem(self, [self.base_coerce(c) for c in coords])

    def zero(self) -> "NumberFieldElem":
        return self(0)

    def one(self) -> "NumberFieldElem":
        return self(1)

    def flat_basis_names(self) -> list[str]:
        inner = self.base.flat_basis_names() if self.base else ["1"]
        out = []
        for k in range(self.degree):
            g = "" if k == 0 else (self.name if k == 1 else f"{self.name}^{k}")
            for b in inner:
                if not g:
                    out.append(b)
                elif b == "1":
                    out.append(g)
                else:
                    out.append(f"{b}*{g}")
        return out


def quadratic_field(minpoly: UPoly, name: str) -> NumberField:
    if minpoly.degree != 2:
        raise ValueError("expected a quadratic")
    return NumberField(minpoly, name)


class NumberFieldElem:
    """Element of a :class:`NumberField`, kept reduced modulo the minimal polynomial."""

    __slots__ = ("field", "coords")

    def __init__(self, field: NumberField, coords: Iterable[Any]):
        self.field = field
        self.coords = nf_reduce_coords(field, list(coords))

    # coercion

    def _lift(self, other: Any) -> "NumberFieldElem":
        if isinstance(other, NumberFieldElem):
            if other.field == self.field:
                return other
            if _is_subfield(other.field, self.field):
                return self.field(other)
            if _is_subfield(self.field, other.field):
                raise _Promote(other.field)
            raise ValueError(f"field mismatch: {self.field!r} vs {other.field!r}")
        return self.field(other)

    def _as_poly(self) -> UPoly:
        return UPoly(self.coords, "_a")

    # arithmetic

    def __add__(self, other: Any) -> "NumberFieldElem":
        try:
            o = self._lift(other)
        except _Promote as p:
            return p.field(self) + other
        n = max(len(self.coords), len(o.coords))
        z = self.field.base_coerce(0)
        a = list(self.coords) + [z] * (n - len(self.coords))
        b = list(o.coords) + [z] * (n - len(o.coords))
        return NumberFieldElem(self.field, [x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self) -> "NumberFieldElem":
        return NumberFieldElem(self.field, [-c for c in self.coords])

    def __sub__(self, other: Any) -> "NumberFieldElem":
        return self + (-other)

    def __rsub__(self, other: Any) -> "NumberFieldElem":
        return (-self) + other

    def __mul__(self, other: Any) -> "NumberFieldElem":
        if isinstance(other, UPoly):
            return NotImplemented
        try:
            o = self._lift(other)
        except _Promote as p:
            return p.field(self) * other
        return nf_mul(self, o)

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> "NumberFieldElem":
        try:
            o = self._lift(other)
        except _Promote as p:
            return p.field(self) / other
        return nf_mul(self, nf_inv(o))

    def __rtruediv__(self, other: Any) -> "NumberFieldElem":
        return self._lift(other) * nf_inv(self)

    def __pow__(self, n: int) -> "NumberFieldElem":
        if n < 0:
            return nf_inv(self) ** (-n)
        result = self.field.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self) -> "NumberFieldElem":
        return nf_inv(self)

    def __bool__(self) -> bool:
        return any(bool(c) for c in self.coords)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)) or (
            isinstance(other, NumberFieldElem) and other.field != self.field
        ):
            try:
                other = self._lift(other)
            except (_Promote, ValueError):
                return False
        if not isinstance(other, NumberFieldElem):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self) -> int:
        if len(self.coords) <= 1:
            return hash(self.coords[0] if self.coords else 0)
        return hash((self.field.name, self.coords))

    def is_rational(self) -> bool:
        if len(self.coords) > 1:
            return False
        if not self.coords:
            return True
        c = self.coords[0]
        return c.is_rational() if isinstance(c, NumberFieldElem) else True

    def flat_coords(self) -> list[Fraction]:
        """Coordinates over Q in the flattened tower basis."""
        z = self.field.base_coerce(0)
        cs = list(self.coords) + [z] * (self.field.degree - len(self.coords))
        if self.field.base is None:
            return [as_rational(c) for c in cs]
        out: list[Fraction] = []
        for c in cs:
            out.extend(c.flat_coords())
        return out

    def __str__(self) -> str:
        names = self.field.flat_basis_names()
        terms = [(c, "" if n == "1" else n) for c, n in zip(self.flat_coords(), names) if c]
        return format_terms(terms)

    def __repr__(self) -> str:
        return f"NumberFieldElem({self})"


class _Promote(Exception):
    def __init__(self, field: NumberField):
        self.field = field


def _is_subfield(small: NumberField, big: NumberField) -> bool:
    f = big.base
    while f is not None:
        if f == small:
            return True
        f = f.base
    return False


def nf_reduce_coords(field: NumberField, coords: list[Any]) -> tuple:
    """Reduce a coordinate list modulo the minimal polynomial of ``field``."""
    z = field.base_coerce(0)
    coords = [field.base_coerce(c) for c in coords]
    m = field.minpoly.coeffs
    d = field.degree
    # x^d = -(m_0 + ... + m_{d-1} x^{d-1}) since minpoly is monic
    for k in range(len(coords) - 1, d - 1, -1):
        c = coords[k]
        if not c:
            continue
        coords[k] = z
        for i in range(d):
            coords[k - d + i] = coords[k - d + i] - c * m[i]
    coords = coords[:d] + [z] * (d - len(coords))
    return tuple(coords)


def nf_reduce(e: NumberFieldElem) -> NumberFieldElem:
    return NumberFieldElem(e.field, e.coords)


def nf_add(a: NumberFieldElem, b: NumberFieldElem) -> NumberFieldElem:
    return a + b


def nf_mul(a: NumberFieldElem, b: NumberFieldElem) -> NumberFieldElem:
    if a.field != b.field:
        raise ValueError("field mismatch")
    z = a.field.base_coerce(0)
    out = [z] * (len(a.coords) + len(b.coords) - 1)
    for i, x in enumerate(a.coords):
        if not x:
            continue
        for j, y in enumerate(b.coords):
            if y:
                out[i + j] = out[i + j] + x * y
    return NumberFieldElem(a.field, out)


def nf_inv(a: NumberFieldElem) -> NumberFieldElem:
    """Inverse via the extended gcd with the minimal polynomial."""
    if not a:
        raise ZeroDivisionError("inverse of zero in a number field")
    field = a.field
    m = UPoly(field.minpoly.coeffs, "_a")
    p = UPoly(a.coords, "_a")
    g, s, _ = upoly_xgcd(p, m)
    if g.degree != 0:
        raise ZeroDivisionError("element is a zero divisor (minimal polynomial not irreducible)")
    return NumberFieldElem(field, s.coeffs)


# the fields used by the Valentiner generators


def rho_tau_field() -> tuple[NumberField, NumberFieldElem, NumberFieldElem]:
    """Q(rho, tau) with rho^2 + rho + 1 = 0 and tau^2 - tau - 1 = 0."""
    q_rho = NumberField(UPoly((1, 1, 1), "rho"), "rho")
    # tau over Q(rho): coefficients coerced into Q(rho)
    tau_min = UPoly((q_rho(-1), q_rho(-1), q_rho(1)), "tau")
    k = NumberField(tau_min, "tau", base=q_rho)
    rho = k(q_rho.gen())
    tau = k.gen()
    return k, rho, tau
