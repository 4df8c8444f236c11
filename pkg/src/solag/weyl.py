"""Differential operators with polynomial coefficients in normal form.

An operator is stored as ``sum_i p_i(x) D^i`` with coefficients on the left.
Composition pushes ``D`` past polynomials with the Leibniz rule
``D^i p = sum_k C(i, k) p^(k) D^(i-k)``, so every product lands back in
normal form.  Conjugation by ``e^{sx}`` is the substitution ``D -> D - s``;
no exponential is ever represented.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from .exactalg import Poly, Scalar, binomial, to_rational


class DiffOp:
    """``sum_i coeffs[i] * D^i``; immutable, trailing zero coefficients stripped."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Poly | Scalar] = ()):
        cs = [c if isinstance(c, Poly) else Poly.const(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("DiffOp is immutable")

    @classmethod
    def zero(cls) -> "DiffOp":
        return cls()

    @classmethod
    def identity(cls) -> "DiffOp":
        return cls((Poly.one(),))

    @classmethod
    def mul(cls, p: Poly | Scalar) -> "DiffOp":
        """Multiplication by the polynomial ``p``."""
        return cls((p,))

    @classmethod
    def d(cls, k: int = 1) -> "DiffOp":
        """``D^k``."""
        return cls([Poly.zero()] * k + [Poly.one()])

    @property
    def order(self) -> int | None:
        return len(self.coeffs) - 1 if self.coeffs else None

    def coeff(self, i: int) -> Poly:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Poly.zero()

    @property
    def max_coeff_degree(self) -> int | None:
        degs = [c.degree for c in self.coeffs if not c.is_zero()]
        return max(degs) if degs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        if not isinstance(other, DiffOp):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "DiffOp(0)"
        parts = [f"({c})*D^{i}" for i, c in enumerate(self.coeffs) if not c.is_zero()]
        return "DiffOp(" + " + ".join(parts) + ")"

    def __add__(self, other: "DiffOp") -> "DiffOp":
        if not isinstance(other, DiffOp):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return DiffOp(self.coeff(i) + other.coeff(i) for i in range(n))

    def __neg__(self) -> "DiffOp":
        return DiffOp(-c for c in self.coeffs)

    def __sub__(self, other: "DiffOp") -> "DiffOp":
        if not isinstance(other, DiffOp):
            return NotImplemented
        return self + (-other)

    def __mul__(self, c) -> "DiffOp":
        if isinstance(c, DiffOp):
            return compose(self, c)
        if isinstance(c, Poly):
            return DiffOp(c * p for p in self.coeffs)
        c = to_rational(c)
        return DiffOp(p.scale(c) for p in self.coeffs)

    def __rmul__(self, c) -> "DiffOp":
        if isinstance(c, Poly):
            return compose(DiffOp.mul(c), self)
        return self * c

    def __matmul__(self, other: "DiffOp") -> "DiffOp":
        return compose(self, other)

    def __call__(self, y: Poly) -> Poly:
        return apply(self, y)

    def coefficient_sum(self) -> Poly:
        """``sum_i p_i(x)``, read straight off the normal form."""
        out = Poly.zero()
        for c in self.coeffs:
            out = out + c
        return out

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "coeffs": [
                {"power": i, "poly": c.to_json()}
                for i, c in enumerate(self.coeffs)
                if not c.is_zero()
            ],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "DiffOp":
        entries = {int(e["power"]): Poly.from_json(e["poly"]) for e in data["coeffs"]}
        size = max(entries) + 1 if entries else 0
        op = cls(entries.get(i, Poly.zero()) for i in range(size))
        if op.order != data.get("order"):
            raise ValueError(f"declared order {data.get('order')} != actual {op.order}")
        return op


def apply(op: DiffOp, y: Poly) -> Poly:
    """``sum_i p_i(x) y^(i)(x)``."""
    out = Poly.zero()
    dy = y
    for p in op.coeffs:
        if dy.is_zero():
            break
        if not p.is_zero():
            out = out + p * dy
        dy = dy.derive()
    return out


def compose(a: DiffOp, b: DiffOp) -> DiffOp:
    """Normal form of ``a o b``."""
    if a.is_zero() or b.is_zero():
        return DiffOp.zero()
    out: list[Poly] = [Poly.zero()] * (len(a.coeffs) + len(b.coeffs) - 1)
    # derivs[j][k] = k-th derivative of the j-th coefficient of b
    derivs: list[list[Poly]] = []
    for q in b.coeffs:
        row = [q]
        for _ in range(len(a.coeffs) - 1):
            if row[-1].is_zero():
                break
            row.append(row[-1].derive())
        derivs.append(row)
    for i, p in enumerate(a.coeffs):
        if p.is_zero():
            continue
        for j, row in enumerate(derivs):
            for k in range(min(i, len(row) - 1) + 1):
                dq = row[k]
                if dq.is_zero():
                    continue
                out[i - k + j] = out[i - k + j] + p * dq.scale(binomial(i, k))
    return DiffOp(out)


def conj_exp(op: DiffOp, s: int) -> DiffOp:
    """``e^{sx} o op o e^{-sx}`` via ``D -> D - s``; ``s`` is +1 or -1."""
    if s not in (1, -1):
        raise ValueError("conjugation sign must be +1 or -1")
    out: list[Poly] = [Poly.zero()] * len(op.coeffs)
    for i, p in enumerate(op.coeffs):
        if p.is_zero():
            continue
        for m in range(i + 1):
            c = binomial(i, m) * Fraction(-s) ** (i - m)
            out[m] = out[m] + p.scale(c)
    return DiffOp(out)


def sandwich(rho: int, q: int, w: Poly, s: int, t: int) -> DiffOp:
    """Normal form of ``y -> e^x x^rho D^q { e^{-x} w(x) D^s [x^t y] }``."""
    inner = compose(DiffOp.mul(w), compose(DiffOp.d(s), DiffOp.mul(Poly.monomial(t))))
    outer = compose(DiffOp.mul(Poly.monomial(rho)), conj_exp(DiffOp.d(q), +1))
    return compose(outer, inner)
