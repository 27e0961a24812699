"""Dense univariate polynomials in the order parameter nu, rational coefficients.

Coefficient lists are ascending (index = power of nu) with trailing zeros
stripped; the empty tuple is the zero polynomial, of degree -1 by
convention. Multiplication and gcd work on primitive integer images of the
operands, which keeps big-rational normalization off the hot path.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _int_gcd
from math import lcm as _int_lcm
from typing import Iterable, Union

Scalar = Union[int, Fraction]

__all__ = ["PolyNu"]


def _int_content(v: list[int]) -> int:
    g = 0
    for x in v:
        g = _int_gcd(g, x)
        if g == 1:
            return 1
    return g


def _iprimitive(v: list[int]) -> list[int]:
    """Divide out the content; make the leading coefficient positive."""
    if not v:
        return []
    g = _int_content(v)
    if v[-1] < 0:
        g = -g
    return [c // g for c in v]


def _iprem(u: list[int], v: list[int]) -> list[int]:
    """Pseudo-remainder of u by v over the integers (v nonzero)."""
    r = list(u)
    dv = len(v) - 1
    lv = v[-1]
    while r and len(r) - 1 >= dv:
        f = r[-1]
        k = len(r) - 1 - dv
        r = [lv * c for c in r]
        for i, vc in enumerate(v):
            r[k + i] -= f * vc
        r.pop()  # leading term cancels exactly
        while r and not r[-1]:
            r.pop()
    return r


def _ipoly_gcd(u: list[int], v: list[int]) -> list[int]:
    """Primitive gcd of integer polynomials via the primitive PRS."""
    u = _iprimitive(u)
    v = _iprimitive(v)
    if len(u) < len(v):
        u, v = v, u
    while v:
        r = _iprem(u, v)
        u, v = v, _iprimitive(r)
    return u


class PolyNu:
    """Immutable polynomial ``a0 + a1*nu + ... + ad*nu^d`` over the rationals."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        c = [x if isinstance(x, Fraction) else Fraction(x) for x in coeffs]
        while c and not c[-1]:
            c.pop()
        self._c = tuple(c)

    @classmethod
    def constant(cls, value: Scalar) -> "PolyNu":
        return cls([value])

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._c

    @property
    def degree(self) -> int:
        return len(self._c) - 1

    @property
    def leading(self) -> Fraction:
        return self._c[-1] if self._c else Fraction(0)

    def coeff(self, k: int) -> Fraction:
        return self._c[k] if 0 <= k < len(self._c) else Fraction(0)

    def __bool__(self) -> bool:
        return bool(self._c)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, PolyNu):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self._c == PolyNu([other])._c
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._c)

    def __neg__(self) -> "PolyNu":
        return PolyNu([-c for c in self._c])

    def __add__(self, other: object) -> "PolyNu":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        a, b = self._c, o._c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return PolyNu(out)

    __radd__ = __add__

    def __sub__(self, other: object) -> "PolyNu":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: object) -> "PolyNu":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other: object) -> "PolyNu":
        if isinstance(other, (int, Fraction)):
            if not other:
                return PolyNu()
            return PolyNu([c * other for c in self._c])
        if not isinstance(other, PolyNu):
            return NotImplemented
        if not self._c or not other._c:
            return PolyNu()
        c1, p1 = self.primitive()
        c2, p2 = other.primitive()
        u = [c.numerator for c in p1._c]
        v = [c.numerator for c in p2._c]
        out = [0] * (len(u) + len(v) - 1)
        for i, ui in enumerate(u):
            if ui:
                for j, vj in enumerate(v):
                    out[i + j] += ui * vj
        scale = c1 * c2
        return PolyNu([scale * w for w in out])

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "PolyNu":
        if n < 0:
            raise ValueError("negative polynomial power")
        result = PolyNu([1])
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __call__(self, x: Scalar) -> Fraction:
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self._c):
            acc = acc * x + c
        return acc

    def derivative(self) -> "PolyNu":
        return PolyNu([k * c for k, c in enumerate(self._c)][1:])

    def primitive(self) -> tuple[Fraction, "PolyNu"]:
        """Split into ``content * primitive`` with an integer, positive-leading
        primitive part; the zero polynomial yields content 0."""
        if not self._c:
            return Fraction(0), PolyNu()
        den_l = 1
        for c in self._c:
            den_l = _int_lcm(den_l, c.denominator)
        ints = [int(c * den_l) for c in self._c]
        g = _int_content(ints)
        if ints[-1] < 0:
            g = -g
        prim = PolyNu([c // g for c in ints])
        return Fraction(g, den_l), prim

    def __divmod__(self, other: "PolyNu") -> tuple["PolyNu", "PolyNu"]:
        if not isinstance(other, PolyNu):
            return NotImplemented
        if not other._c:
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self._c)
        do = other.degree
        lo = other.leading
        q = [Fraction(0)] * max(len(r) - do, 0)
        while r and len(r) - 1 >= do:
            f = r[-1] / lo
            k = len(r) - 1 - do
            q[k] = f
            for i, oc in enumerate(other._c):
                r[k + i] -= f * oc
            r.pop()
            while r and not r[-1]:
                r.pop()
        return PolyNu(q), PolyNu(r)

    def __floordiv__(self, other: "PolyNu") -> "PolyNu":
        return divmod(self, other)[0]

    def __mod__(self, other: "PolyNu") -> "PolyNu":
        return divmod(self, other)[1]

    def exact_div(self, other: "PolyNu") -> "PolyNu":
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError("inexact polynomial division")
        return q

    @staticmethod
    def gcd(a: "PolyNu", b: "PolyNu") -> "PolyNu":
        """Primitive gcd with positive leading coefficient; gcd(0, 0) = 0."""
        if not a:
            return b.primitive()[1]
        if not b:
            return a.primitive()[1]
        # Common power of nu is split off cheaply first.
        va = next(i for i, c in enumerate(a._c) if c)
        vb = next(i for i, c in enumerate(b._c) if c)
        shift = min(va, vb)
        if shift:
            a = PolyNu(a._c[shift:])
            b = PolyNu(b._c[shift:])
        if a.degree == 0 or b.degree == 0:
            g = PolyNu([1])
        else:
            u = [c.numerator for c in a.primitive()[1]._c]
            v = [c.numerator for c in b.primitive()[1]._c]
            w = _ipoly_gcd(u, v)
            g = PolyNu([1]) if len(w) == 1 else PolyNu(w)
        if shift:
            g = g * PolyNu([0] * shift + [1])
        return g

    @staticmethod
    def _coerce(other: object):
        if isinstance(other, PolyNu):
            return other
        if isinstance(other, (int, Fraction)):
            return PolyNu([other])
        return NotImplemented

    def __repr__(self) -> str:
        return f"PolyNu({list(self._c)!r})"

    def __str__(self) -> str:
        if not self._c:
            return "0"
        parts: list[str] = []
        for k in range(self.degree, -1, -1):
            c = self._c[k]
            if not c:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                var = "nu" if k == 1 else f"nu^{k}"
                body = var if mag == 1 else f"{mag}*{var}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)


PolyNu.ZERO = PolyNu()
PolyNu.ONE = PolyNu([1])
PolyNu.NU = PolyNu([0, 1])
