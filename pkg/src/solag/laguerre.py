"""Classical Laguerre polynomials and the Sobolev-Laguerre building blocks.

The Sobolev-Laguerre polynomial of degree n is

    L_n^a + M T_n^a + N U_n^a + M N V_n^a

with the components below.  The Laguerre parameter is restricted to
nonnegative integers.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exactalg import Poly, Scalar, binomial, factorial, pochhammer, to_rational


@dataclass(frozen=True)
class LagParams:
    n: int
    alpha: int

    def __post_init__(self):
        _check(self.n, self.alpha)


def _check(n: int, alpha: int) -> None:
    if n < 0:
        raise ValueError(f"degree index must be nonnegative, got {n}")
    if alpha < 0:
        raise ValueError(f"Laguerre parameter must be a nonnegative integer, got {alpha}")


@lru_cache(maxsize=4096)
def laguerre(n: int, a: int) -> Poly:
    """``L_n^a(x) = sum_k (-1)^k C(n+a, n-k) x^k / k!``."""
    _check(n, a)
    return Poly(
        (-1) ** k * binomial(n + a, n - k) / factorial(k) for k in range(n + 1)
    )


def _lag(n: int, a: int) -> Poly:
    # L_{-1} = 0, as the index-shifted identities expect
    return Poly.zero() if n < 0 else laguerre(n, a)


def toolbox_failures(n: int, gamma: int) -> list[str]:
    """Names of the standard Laguerre identities that fail at ``(n, gamma)``.

    Identities carrying an ``e^{-x}`` factor are checked after cancelling it.
    Identities that need ``n - 1`` or ``gamma - 1`` are skipped when those
    indices would be negative.
    """
    _check(n, gamma)
    x = Poly.x()
    L = _lag
    g = gamma
    failed: list[str] = []

    def check(name: str, lhs: Poly, rhs: Poly) -> None:
        if lhs != rhs:
            failed.append(name)

    check("parameter_step", L(n, g), L(n, g + 1) - L(n - 1, g + 1))
    check("derivative", L(n, g).derive(), -L(n - 1, g + 1))
    check("exp_derivative", L(n, g).derive() - L(n, g), -L(n, g + 1))
    if g >= 1:
        check("x_times", x * L(n, g), (n + g) * L(n, g - 1) - (n + 1) * L(n + 1, g - 1))
        xg = Poly.monomial(g) * L(n, g)
        check("power_derivative", xg.derive(), (n + g) * Poly.monomial(g - 1) * L(n, g - 1))
        check(
            "exp_power_derivative",
            xg.derive() - xg,
            (n + 1) * Poly.monomial(g - 1) * L(n + 1, g - 1),
        )
    sum1 = Poly.zero()
    sum2 = Poly.zero()
    for k in range(n + 1):
        sum1 = sum1 + L(k, g + 1)
        sum2 = sum2 + (n + 1 - k) * L(k, g)
    check("partial_sum", L(n, g + 2), sum1)
    check("weighted_partial_sum", L(n, g + 2), sum2)
    return failed


def laguerre_toolbox_check(n: int, gamma: int) -> bool:
    return not toolbox_failures(n, gamma)


def t_comp(n: int, alpha: int) -> Poly:
    _check(n, alpha)
    if n == 0:
        return Poly.zero()
    c = -pochhammer(alpha + 2, n - 1) / factorial(n)
    return (Poly.x() * laguerre(n - 1, alpha + 2)).scale(c)


def u_part1(n: int, alpha: int) -> Poly:
    if n < 2:
        raise ValueError("U_{n,1} is only defined for n >= 2")
    return Poly.monomial(2, Fraction(1, n - 1)) * laguerre(n - 2, alpha + 4)


def u_part2(n: int, alpha: int) -> Poly:
    return Poly.monomial(1, -(alpha + 2)) * laguerre(n - 1, alpha + 2)


def u_part3(n: int, alpha: int) -> Poly:
    return laguerre(n, alpha).scale(-(n + alpha + 1))


def _u_prefactor(n: int, alpha: int) -> Fraction:
    return pochhammer(alpha + 3, n - 2) / ((alpha + 1) * (alpha + 3) * factorial(n - 2))


def u_comp(n: int, alpha: int) -> Poly:
    _check(n, alpha)
    if n < 2:
        return Poly.zero()
    parts = u_part1(n, alpha) + u_part2(n, alpha) + u_part3(n, alpha)
    return parts.scale(_u_prefactor(n, alpha))


def u_comp_alt(n: int, alpha: int) -> Poly:
    """U_n^a through the Laguerre expansion ``[n(a+2)-(a+1)] L_n - ... sum j L_j``."""
    _check(n, alpha)
    if n < 2:
        raise ValueError("the alternative representation needs n >= 2")
    tail = Poly.zero()
    for j in range(1, n):
        tail = tail + j * laguerre(j, alpha)
    body = (n * (alpha + 2) - (alpha + 1)) * laguerre(n, alpha) - tail.scale(
        Fraction((alpha + 2) * (alpha + 3), n - 1)
    )
    return body.scale(_u_prefactor(n, alpha))


def v_comp(n: int, alpha: int) -> Poly:
    _check(n, alpha)
    if n < 2:
        return Poly.zero()
    c = (
        pochhammer(alpha + 3, n - 2)
        * pochhammer(alpha + 4, n - 2)
        / ((alpha + 1) * factorial(n - 1) * factorial(n))
    )
    return Poly.monomial(2, c) * laguerre(n - 2, alpha + 4)


def sobolev_laguerre(n: int, alpha: int, M: Scalar = 0, N: Scalar = 0) -> Poly:
    """The degree-n Sobolev-Laguerre polynomial for point masses ``M``, ``N``."""
    _check(n, alpha)
    M, N = to_rational(M), to_rational(N)
    if M < 0 or N < 0:
        raise ValueError("point masses must be nonnegative")
    return (
        laguerre(n, alpha)
        + t_comp(n, alpha).scale(M)
        + u_comp(n, alpha).scale(N)
        + v_comp(n, alpha).scale(M * N)
    )
