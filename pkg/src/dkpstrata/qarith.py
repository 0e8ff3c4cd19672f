"""Exact arithmetic in Z[q, q^-1] and its fraction field.

q-integers use the balanced convention ``[n]_{q^d} = (q^{dn} - q^{-dn}) / (q^d - q^{-d})``,
the one compatible with the ``(K_i - K_i^-1) / (q_i - q_i^-1)`` commutator.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Mapping, Union


class LaurentPoly:
    """Sparse Laurent polynomial in ``q`` with integer coefficients."""

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        self._c = {int(e): int(c) for e, c in (coeffs or {}).items() if c}
        self._hash = None

    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def monomial(cls, e: int, c: int = 1) -> "LaurentPoly":
        return cls({e: c})

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._c)

    def items(self):
        return sorted(self._c.items())

    def __bool__(self):
        return bool(self._c)

    def is_monomial(self) -> bool:
        return len(self._c) == 1

    def min_exp(self) -> int:
        return min(self._c)

    def max_exp(self) -> int:
        return max(self._c)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._c.items()})

    def __add__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._c)
        for e, c in other._c.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict[int, int] = {}
        for e1, c1 in self._c.items():
            for e2, c2 in other._c.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if not self.is_monomial():
                raise ValueError("negative power of a non-unit Laurent polynomial")
            (e, c), = self._c.items()
            if abs(c) != 1:
                raise ValueError("negative power of a non-unit Laurent polynomial")
            return LaurentPoly({e * n: c ** n})
        out = LaurentPoly.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``q^k``."""
        return LaurentPoly({e + k: c for e, c in self._c.items()})

    def bar(self) -> "LaurentPoly":
        """The involution ``q -> q^-1``."""
        return LaurentPoly({-e: c for e, c in self._c.items()})

    def substitute_power(self, d: int) -> "LaurentPoly":
        """``f(q) -> f(q^d)``."""
        return LaurentPoly({e * d: c for e, c in self._c.items()})

    def at_one(self) -> int:
        return sum(self._c.values())

    def derivative_at_one(self) -> int:
        return sum(e * c for e, c in self._c.items())

    def content(self) -> int:
        g = 0
        for c in self._c.values():
            g = gcd(g, c)
        return g

    def exact_div(self, other: "LaurentPoly") -> "LaurentPoly":
        """Quotient in the Laurent ring; raises ``ArithmeticError`` if ``other`` does not divide."""
        if not other:
            raise ZeroDivisionError("division by zero Laurent polynomial")
        if not self:
            return LaurentPoly()
        a, sa = _to_poly(self)
        b, sb = _to_poly(other)
        quo, rem = _poly_divmod(a, b)
        if any(rem):
            raise ArithmeticError("inexact Laurent polynomial division")
        return _from_poly(quo, sa - sb)

    def __repr__(self):
        return f"LaurentPoly({self})"

    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for e, c in sorted(self._c.items(), reverse=True):
            if e == 0:
                mono = str(abs(c))
            else:
                var = "q" if e == 1 else f"q^{e}" if e > 0 else f"q^({e})"
                mono = var if abs(c) == 1 else f"{abs(c)}*{var}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, mono))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, mono in parts[1:]:
            out += f" {sign} {mono}"
        return out


Q = LaurentPoly.monomial(1)
ONE = LaurentPoly.const(1)
ZERO = LaurentPoly()


def _as_poly(x):
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly.const(x)
    return NotImplemented


# -- dense integer polynomial helpers (coefficient lists, low degree first) --

def _to_poly(f: LaurentPoly) -> tuple[list[int], int]:
    lo, hi = f.min_exp(), f.max_exp()
    return [f._c.get(e, 0) for e in range(lo, hi + 1)], lo


def _from_poly(p: list[int], shift: int) -> LaurentPoly:
    return LaurentPoly({i + shift: c for i, c in enumerate(p) if c})


def _trim(p: list[int]) -> list[int]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod(a: list[int], b: list[int]) -> tuple[list[int], list[int]]:
    """Division over Z; the quotient is exact only if the remainder is zero."""
    a = list(a)
    b = _trim(list(b))
    if len(a) < len(b):
        return [0], a
    quo = [0] * (len(a) - len(b) + 1)
    lead = b[-1]
    for k in range(len(a) - len(b), -1, -1):
        c = a[k + len(b) - 1]
        if c == 0:
            continue
        if c % lead:
            return quo, a  # not divisible over Z
        f = c // lead
        quo[k] = f
        for i, bc in enumerate(b):
            a[k + i] -= f * bc
    return quo, _trim(a)


def _prim(p: list[int]) -> tuple[int, list[int]]:
    g = 0
    for c in p:
        g = gcd(g, c)
    if g == 0:
        return 0, p
    if p[-1] < 0:
        g = -g
    return g, [c // g for c in p]


def _pseudo_rem(a: list[int], b: list[int]) -> list[int]:
    a = list(a)
    lead = b[-1]
    while len(a) >= len(b) and any(a):
        c = a[-1]
        shift = len(a) - len(b)
        a = [lead * x for x in a]
        for i, bc in enumerate(b):
            a[shift + i] -= c * bc
        _trim(a)
    return a


def _poly_gcd(a: list[int], b: list[int]) -> list[int]:
    ca, a = _prim(_trim(list(a)))
    cb, b = _prim(_trim(list(b)))
    g_content = gcd(ca, cb)
    if len(a) < len(b):
        a, b = b, a
    while b and any(b):
        r = _pseudo_rem(a, b)
        if not r:
            a, b = b, []
            break
        _, r = _prim(r)
        a, b = b, r
    _, a = _prim(a)
    return [g_content * c for c in a]


def laurent_gcd(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    """A gcd in Z[q, q^-1], normalised to lowest exponent 0 and positive leading coefficient."""
    if not f:
        return g
    if not g:
        return f
    a, _ = _to_poly(f)
    b, _ = _to_poly(g)
    return _from_poly(_poly_gcd(a, b), 0)


class QFraction:
    """Reduced quotient of Laurent polynomials.

    Canonical form: no common factor, denominator with lowest exponent 0 and
    positive lowest-degree coefficient.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Union[LaurentPoly, int], den: Union[LaurentPoly, int] = 1, *, _reduced=False):
        num = _as_poly(num)
        den = _as_poly(den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not _reduced:
            num, den = _normalize(num, den)
        self.num = num
        self.den = den

    @classmethod
    def coerce(cls, x) -> "QFraction":
        if isinstance(x, QFraction):
            return x
        if isinstance(x, (LaurentPoly, int)):
            return cls(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to QFraction")

    def is_laurent(self) -> bool:
        return self.den == ONE

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            other = QFraction(other)
        if not isinstance(other, QFraction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __neg__(self):
        return QFraction(-self.num, self.den, _reduced=True)

    def __add__(self, other):
        try:
            other = QFraction.coerce(other)
        except TypeError:
            return NotImplemented
        if not other.num:
            return self
        if not self.num:
            return other
        if self.den == other.den:
            if self.den == ONE:
                return QFraction(self.num + other.num, ONE, _reduced=True)
            return QFraction(self.num + other.num, self.den)
        return QFraction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            other = QFraction.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            other = QFraction.coerce(other)
        except TypeError:
            return NotImplemented
        if not self.num or not other.num:
            return QFraction(ZERO, ONE, _reduced=True)
        if self.den == ONE and other.den == ONE:
            return QFraction(self.num * other.num, ONE, _reduced=True)
        return QFraction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = QFraction.coerce(other)
        if not other.num:
            raise ZeroDivisionError("division by zero")
        return self * QFraction(other.den, other.num)

    def __rtruediv__(self, other):
        return QFraction.coerce(other) / self

    def __pow__(self, n: int):
        if n < 0:
            return QFraction(1) / (self ** -n)
        return QFraction(self.num ** n, self.den ** n)

    def bar(self) -> "QFraction":
        return QFraction(self.num.bar(), self.den.bar())

    def __repr__(self):
        return f"QFraction({self})"

    def __str__(self):
        if self.den == ONE:
            return str(self.num)
        return f"({self.num})/({self.den})"


def _normalize(num: LaurentPoly, den: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    if not num:
        return ZERO, ONE
    if den.is_monomial():
        (e, c), = den.items()
        if abs(c) == 1:
            return num.shift(-e) * c, ONE
    g = laurent_gcd(num, den)
    if g != ONE:
        num = num.exact_div(g)
        den = den.exact_div(g)
    shift = den.min_exp()
    num, den = num.shift(-shift), den.shift(-shift)
    if den._c[0] < 0:
        num, den = -num, -den
    return num, den


def q_int(n: int, d: int = 1) -> LaurentPoly:
    """Balanced q-integer ``[n]_{q^d} = q^{d(n-1)} + q^{d(n-3)} + ... + q^{-d(n-1)}``."""
    if n < 0:
        raise ValueError("q_int needs n >= 0")
    if d < 1:
        raise ValueError("q_int needs d >= 1")
    return LaurentPoly({d * (n - 1 - 2 * k): 1 for k in range(n)})


@lru_cache(maxsize=None)
def q_factorial(n: int, d: int = 1) -> LaurentPoly:
    out = ONE
    for k in range(1, n + 1):
        out = out * q_int(k, d)
    return out


@lru_cache(maxsize=None)
def q_binomial(n: int, k: int, d: int = 1) -> LaurentPoly:
    """Gaussian binomial ``[n]! / ([k]! [n-k]!)`` in base ``q^d``; zero outside ``0 <= k <= n``."""
    if n < 0 or k < 0 or k > n:
        return ZERO
    return q_factorial(n, d).exact_div(q_factorial(k, d) * q_factorial(n - k, d))


def exp_q_coefficients(N: int, d: int = 1) -> list[QFraction]:
    """Coefficients ``c_n = q^{d n(n+1)/2} / [n]_{q^d}!`` of the q-exponential, ``n = 0..N``."""
    if N < 0:
        raise ValueError("N must be >= 0")
    return [QFraction(LaurentPoly.monomial(d * n * (n + 1) // 2), q_factorial(n, d))
            for n in range(N + 1)]


def specialize(f, order: str = "value") -> Fraction:
    """Value (``order="value"``) or first derivative (``order="derivative"``) at ``q = 1``."""
    f = QFraction.coerce(f)
    n0, d0 = f.num.at_one(), f.den.at_one()
    if d0 == 0:
        raise ZeroDivisionError("denominator vanishes at q = 1")
    if order == "value":
        return Fraction(n0, d0)
    if order == "derivative":
        n1, d1 = f.num.derivative_at_one(), f.den.derivative_at_one()
        return Fraction(n1 * d0 - n0 * d1, d0 * d0)
    raise ValueError(f"unknown order {order!r}")


def qsum(terms: Iterable) -> QFraction:
    out = QFraction(0)
    for t in terms:
        out = out + t
    return out
