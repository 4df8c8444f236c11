"""Exact rational scalars, dense polynomials over Q and factorial combinatorics.

Scalars are :class:`fractions.Fraction` throughout; they are always reduced
with a positive denominator, which is exactly the canonical form required
here.  Polynomials are immutable and stored densely, lowest degree first.
"""
from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Fraction
Scalar = Union[int, Fraction]

_RATIONAL_RE = re.compile(r"[+-]?\d+(?:/\d+)?\Z")


def to_rational(value: Scalar | str) -> Fraction:
    """Coerce ``value`` to an exact rational; floats and bools are refused."""
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"refusing inexact or boolean scalar {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot convert {type(value).__name__} to a rational")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p"`` or ``"p/q"``.

    Raises ValueError naming the first offending character position.
    """
    s = text.strip()
    if not _RATIONAL_RE.match(s):
        pos = _first_bad_position(s)
        raise ValueError(f"malformed rational {text!r} at position {pos}")
    num, _, den = s.partition("/")
    if den and int(den) == 0:
        raise ValueError(f"zero denominator in {text!r} at position {s.index('/') + 1}")
    return Fraction(int(num), int(den) if den else 1)


def _first_bad_position(s: str) -> int:
    i = 0
    if i < len(s) and s[i] in "+-":
        i += 1
    start = i
    while i < len(s) and s[i].isdigit():
        i += 1
    if i == start:
        return i
    if i < len(s) and s[i] == "/":
        i += 1
        start = i
        while i < len(s) and s[i].isdigit():
            i += 1
        if i == start:
            return i
    return i


def format_rational(q: Scalar) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


class Poly:
    """Dense univariate polynomial over Q in the variable x.

    ``coeffs[k]`` is the coefficient of ``x**k``.  The stored tuple never ends
    in a zero, so the zero polynomial has no coefficients at all and its
    :attr:`degree` is ``None``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [to_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # construction helpers
    @classmethod
    def zero(cls) -> "Poly":
        return _ZERO

    @classmethod
    def one(cls) -> "Poly":
        return _ONE

    @classmethod
    def const(cls, c: Scalar) -> "Poly":
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: Scalar = 1) -> "Poly":
        if k < 0:
            raise ValueError("negative exponent")
        return cls([0] * k + [c])

    @classmethod
    def x(cls) -> "Poly":
        return cls.monomial(1)

    # structure
    @property
    def degree(self) -> int | None:
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.coeffs == Poly.const(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly([{', '.join(format_rational(c) for c in self.coeffs)}])"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if mono and c == 1:
                terms.append(mono)
            elif mono and c == -1:
                terms.append("-" + mono)
            elif mono:
                terms.append(f"({format_rational(c)})*{mono}")
            else:
                terms.append(format_rational(c))
        return " + ".join(terms).replace("+ -", "- ")

    # ring arithmetic
    def __add__(self, other) -> "Poly":
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other) -> "Poly":
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return _ZERO
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
        return Poly(out)

    __rmul__ = __mul__

    def scale(self, c: Scalar) -> "Poly":
        c = to_rational(c)
        if c == 0:
            return _ZERO
        return Poly(c * a for a in self.coeffs)

    def __truediv__(self, c: Scalar) -> "Poly":
        return self.scale(1 / to_rational(c))

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative power")
        out, base = _ONE, self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, k: int) -> "Poly":
        """Multiply by ``x**k``."""
        if not self.coeffs or k == 0:
            return self
        return Poly((0,) * k + self.coeffs)

    # calculus
    def derive(self, k: int = 1) -> "Poly":
        return poly_derive(self, k)

    def __call__(self, x0: Scalar) -> Fraction:
        return poly_eval(self, x0)

    def to_json(self) -> list[str]:
        return [format_rational(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[str]) -> "Poly":
        return cls(parse_rational(str(s)) for s in data)


def _as_poly(value):
    if isinstance(value, Poly):
        return value
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return Poly.const(value)
    return NotImplemented


_ZERO = Poly()
_ONE = Poly((1,))


def poly_derive(f: Poly, k: int = 1) -> Poly:
    """Exact k-th derivative."""
    if k < 0:
        raise ValueError("derivative order must be nonnegative")
    if k == 0:
        return f
    cs = f.coeffs
    if len(cs) <= k:
        return _ZERO
    return Poly(falling(m, k) * cs[m] for m in range(k, len(cs)))


def poly_eval(f: Poly, x0: Scalar) -> Fraction:
    x0 = to_rational(x0)
    acc = Fraction(0)
    for c in reversed(f.coeffs):
        acc = acc * x0 + c
    return acc


def deriv_at_zero(f: Poly, k: int) -> Fraction:
    """``f^(k)(0) = k! * [x^k] f``."""
    return factorial(k) * f.coeff(k)


def pochhammer(a: Scalar, n: int) -> Fraction:
    """Shifted factorial ``(a)_n = a (a+1) ... (a+n-1)``, with ``(a)_0 = 1``."""
    if n < 0:
        raise ValueError("pochhammer length must be nonnegative")
    a = to_rational(a)
    out = Fraction(1)
    for i in range(n):
        out *= a + i
    return out


def falling(a: Scalar, n: int) -> Fraction:
    """Falling factorial ``a (a-1) ... (a-n+1)``."""
    if n < 0:
        raise ValueError("falling factorial length must be nonnegative")
    a = to_rational(a)
    out = Fraction(1)
    for i in range(n):
        out *= a - i
    return out


def factorial(n: int) -> Fraction:
    if n < 0:
        raise ValueError("factorial of a negative integer")
    return Fraction(math.factorial(n))


def binomial(n: Scalar, k: int) -> Fraction:
    """``n choose k`` via the falling factorial; any rational upper argument."""
    if k < 0:
        return Fraction(0)
    return falling(n, k) / factorial(k)
