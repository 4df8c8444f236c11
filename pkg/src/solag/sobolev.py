"""The Sobolev inner product and the integration-by-parts identities behind symmetry.

Every integral here has the shape ``int_0^inf e^{-x} p(x) dx`` with ``p`` a
polynomial, so it is the finite sum ``sum_m p_m m!``.  The inner product
itself goes through the normalized moments ``(alpha+1)_m`` instead; the two
routes share no code beyond polynomial arithmetic.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .exactalg import Poly, Scalar, deriv_at_zero, factorial, pochhammer, to_rational
from .laguerre import sobolev_laguerre
from .spectral import bundle, c_weight, q_shift
from .weyl import DiffOp


@dataclass(frozen=True)
class SobolevSpace:
    alpha: int
    M: Fraction = Fraction(0)
    N: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "M", to_rational(self.M))
        object.__setattr__(self, "N", to_rational(self.N))
        if self.alpha < 0:
            raise ValueError("alpha must be a nonnegative integer")
        if self.M < 0 or self.N < 0:
            raise ValueError("point masses must be nonnegative")

    @property
    def laguerre_only(self) -> "SobolevSpace":
        return SobolevSpace(self.alpha)

    def operator(self) -> DiffOp:
        return bundle(self.alpha).combined(self.M, self.N)


def gamma_moment(alpha: int, m: int) -> Fraction:
    """``(1/alpha!) int_0^inf e^{-x} x^(alpha+m) dx = (alpha+1)_m``."""
    return pochhammer(alpha + 1, m)


def weighted_inner(alpha: int, f: Poly, g: Poly) -> Fraction:
    """Laguerre-weight part of the inner product (no point masses)."""
    return sum(
        (c * gamma_moment(alpha, m) for m, c in enumerate((f * g).coeffs)), Fraction(0)
    )


def inner(space: SobolevSpace, f: Poly, g: Poly) -> Fraction:
    return (
        weighted_inner(space.alpha, f, g)
        + space.M * f(0) * g(0)
        + space.N * deriv_at_zero(f, 1) * deriv_at_zero(g, 1)
    )


def exp_integral(p: Poly) -> Fraction:
    """``int_0^inf e^{-x} p(x) dx``."""
    return sum((c * factorial(m) for m, c in enumerate(p.coeffs)), Fraction(0))


def _lifted(f: Poly, power: int, order: int) -> Poly:
    # D^order [x^power f]
    return f.shift(power).derive(order)


@dataclass(frozen=True)
class IForms:
    I1: Fraction
    I2: Fraction
    I31: Fraction
    I32: Fraction
    I33: Fraction
    I4: tuple[Fraction, ...]

    @property
    def b_form(self) -> Fraction:
        """Quadratic form of the B operator.

        ``(Gf, g)`` integrates by parts to ``+I33`` (``alpha + 2`` derivatives
        against a ``(-1)^alpha`` prefactor), so I33 is subtracted here.
        """
        return self.I31 + self.I32 - self.I33

    def I4_weighted(self, alpha: int) -> Fraction:
        return sum((c_weight(alpha, j) * v for j, v in enumerate(self.I4)), Fraction(0))

    def as_tuple(self) -> tuple[Fraction, ...]:
        return (self.I1, self.I2, self.I31, self.I32, self.I33) + self.I4


def forms_I(space: SobolevSpace, f: Poly, g: Poly) -> IForms:
    a = space.alpha
    x = Poly.x()
    shifted = Poly((2 * a + 4, 1))

    def form(weight: Poly, power: int, order: int) -> Fraction:
        return exp_integral(weight * _lifted(f, power, order) * _lifted(g, power, order))

    I1 = exp_integral(f.derive() * g.derive() * Poly.monomial(a + 1)) / factorial(a)
    I2 = form(Poly.one(), a + 1, a + 2) / (factorial(a) * factorial(a + 2))
    I31 = form(x * x, a + 1, a + 4) * (a + 2) / (factorial(a + 1) * factorial(a + 4))
    I32 = form(shifted, a + 1, a + 3) / (factorial(a + 1) * factorial(a + 3))
    I33 = form(shifted, a, a + 2) / (factorial(a) * factorial(a + 2))
    I4 = tuple(
        form(Poly.monomial(j) * Poly((q_shift(a, j), 1)), a + 1, j + a + 3)
        / (factorial(a + 1) * factorial(a + 3 + j))
        for j in range(a + 3)
    )
    return IForms(I1, I2, I31, I32, I33, I4)


@dataclass(frozen=True)
class BoundaryData:
    s1: Fraction
    s2: Fraction


def boundary_sums(alpha: int, f: Poly) -> BoundaryData:
    a = alpha
    s1 = sum(
        (
            (-1) ** j * pochhammer(a + 3 - j, 2 * j) * (a + 2 + j)
            / (factorial(j) * factorial(j + 2))
            * deriv_at_zero(f, j + 2)
            for j in range(a + 3)
        ),
        Fraction(0),
    )
    s2 = sum(
        (
            (-1) ** (j + 1) * c_weight(a, j) * deriv_at_zero(f, j + 1)
            for j in range(1, a + 3)
        ),
        Fraction(0),
    )
    return BoundaryData(s1, s2)


@dataclass(frozen=True)
class OpBoundaryValues:
    """``(X f)(0)`` and ``(X f)'(0)`` for X in L, A, B, C."""

    L0: Fraction
    L1: Fraction
    A0: Fraction
    A1: Fraction
    B0: Fraction
    B1: Fraction
    C0: Fraction
    C1: Fraction


def op_boundary_values(alpha: int, f: Poly) -> OpBoundaryValues:
    ops = bundle(alpha)
    vals = []
    for _, op in ops.items():
        h = op(f)
        vals += [h(0), deriv_at_zero(h, 1)]
    return OpBoundaryValues(*vals)


def boundary_value_failures(alpha: int, f: Poly) -> list[str]:
    """Names of the boundary-value identities at the origin that do not hold."""
    v = op_boundary_values(alpha, f)
    s = boundary_sums(alpha, f)
    d1, d2 = deriv_at_zero(f, 1), deriv_at_zero(f, 2)
    expected = [
        ("L_at_0", v.L0, (alpha + 1) * d1),
        ("L_prime_at_0", v.L1, (alpha + 2) * d2 - d1),
        ("A_at_0", v.A0, 0),
        ("A_prime_at_0", v.A1, -d1 + s.s2),
        ("B_at_0", v.B0, s.s1),
        ("B_prime_at_0", v.B1, 0),
        ("C_at_0", v.C0, 0),
        ("C_prime_at_0", v.C1, 0),
    ]
    return [name for name, got, want in expected if got != want]


def form_identity_failures(alpha: int, f: Poly, g: Poly) -> list[str]:
    """Check each component operator against its integration-by-parts form."""
    ops = bundle(alpha)
    I = forms_I(SobolevSpace(alpha), f, g)
    s = boundary_sums(alpha, f)
    f1, f2 = deriv_at_zero(f, 1), deriv_at_zero(f, 2)
    g0, g1 = g(0), deriv_at_zero(g, 1)
    expected = [
        ("L_form", ops.opL, -I.I1),
        ("A_form", ops.opA, -I.I2 - (alpha + 1) * f1 * g0),
        ("B_form", ops.opB, -I.b_form - (alpha + 2) * f2 * g1),
        ("C_form", ops.opC, -I.I4_weighted(alpha) - s.s1 * g0 - s.s2 * g1),
    ]
    return [name for name, op, want in expected if weighted_inner(alpha, op(f), g) != want]


def identity_rhs(space: SobolevSpace, f: Poly, g: Poly) -> Fraction:
    """Symmetric closed form of ``(Lf, g)`` for the combined operator."""
    M, N, a = space.M, space.N, space.alpha
    I = forms_I(space, f, g)
    return (
        -I.I1
        - M * I.I2
        - N * I.b_form
        - M * N * I.I4_weighted(a)
        - N * (1 + M) * deriv_at_zero(f, 1) * deriv_at_zero(g, 1)
    )


@dataclass(frozen=True)
class SymmetryResult:
    lhs: Fraction
    swapped: Fraction
    closed_form: Fraction

    @property
    def symmetric(self) -> bool:
        return self.lhs == self.swapped

    @property
    def matches_closed_form(self) -> bool:
        return self.lhs == self.closed_form

    @property
    def ok(self) -> bool:
        return self.symmetric and self.matches_closed_form

    def residuals(self) -> dict[str, Fraction]:
        return {
            "symmetry": self.lhs - self.swapped,
            "closed_form": self.lhs - self.closed_form,
        }


def symmetry_check(space: SobolevSpace, f: Poly, g: Poly) -> SymmetryResult:
    op = space.operator()
    return SymmetryResult(
        inner(space, op(f), g), inner(space, f, op(g)), identity_rhs(space, f, g)
    )


def gram(space: SobolevSpace, n_max: int) -> list[list[Fraction]]:
    ys = [sobolev_laguerre(n, space.alpha, space.M, space.N) for n in range(n_max + 1)]
    G = [[Fraction(0)] * len(ys) for _ in ys]
    for i, yi in enumerate(ys):
        for j in range(i, len(ys)):
            G[i][j] = G[j][i] = inner(space, yi, ys[j])
    return G


@dataclass(frozen=True)
class EnergyResult:
    energy: Fraction
    lower_bound: Fraction
    gap_from_forms: Fraction
    linear: bool

    @property
    def gap(self) -> Fraction:
        return self.energy - self.lower_bound

    @property
    def ok(self) -> bool:
        if self.gap < 0 or self.gap != self.gap_from_forms:
            return False
        return self.gap == 0 if self.linear else True


def energy_check(space: SobolevSpace, f: Poly) -> EnergyResult:
    """``(-Lf, f)`` against ``I1 + M I2 + N (1 + M) f'(0)^2``."""
    M, N = space.M, space.N
    I = forms_I(space, f, f)
    energy = -inner(space, space.operator()(f), f)
    bound = I.I1 + M * I.I2 + N * (1 + M) * deriv_at_zero(f, 1) ** 2
    gap = N * I.b_form + M * N * I.I4_weighted(space.alpha)
    linear = f.degree is None or f.degree <= 1
    return EnergyResult(energy, bound, gap, linear)
