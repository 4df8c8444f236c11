"""Terminating hypergeometric sums at unit argument and the identities built on them."""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .exactalg import Scalar, factorial, pochhammer, to_rational
from .report import Report


def hyper_terminating(upper: Sequence[Scalar], lower: Sequence[Scalar], max_terms: int) -> Fraction:
    """``pFq(upper; lower; 1)`` summed over ``j = 0 .. max_terms``.

    Callers pass a bound at or beyond the point where a nonpositive integer
    upper parameter makes every later term vanish.
    """
    upper = [to_rational(a) for a in upper]
    lower = [to_rational(b) for b in lower]
    total = Fraction(0)
    for j in range(max_terms + 1):
        num = Fraction(1)
        for a in upper:
            num *= pochhammer(a, j)
        if num == 0:
            continue
        den = factorial(j)
        for b in lower:
            den *= pochhammer(b, j)
        if den == 0:
            raise ZeroDivisionError(f"lower parameter hits zero at term {j}")
        total += num / den
    return total


def chu_vandermonde_lhs(m: int, b: Scalar, c: Scalar) -> Fraction:
    return hyper_terminating((-m, b), (c,), m)


def chu_vandermonde_rhs(m: int, b: Scalar, c: Scalar) -> Fraction:
    b, c = to_rational(b), to_rational(c)
    return pochhammer(c - b, m) / pochhammer(c, m)


def c_jk_sum(alpha: int, j: int, k: int) -> Fraction:
    total = Fraction(0)
    for n in range(max(0, k - j - 1), min(alpha + 1, k) + 1):
        total += pochhammer(-k, n) * pochhammer(-alpha - 1, n) / (
            factorial(n - k + j + 1) * factorial(n)
        )
    return total


def c_jk_closed(alpha: int, j: int, k: int) -> Fraction:
    return factorial(j + alpha + 2) / (factorial(j + 1) * factorial(j - k + alpha + 2))


def b_coefficient(alpha: int, k: int) -> Fraction:
    """Coefficient of ``f^(k+2)(0)`` (up to a nonzero factor) in ``(C f)'(0)``."""
    a = alpha
    total = Fraction(0)
    for j in range(max(0, k - a - 3), min(a + 2, k) + 1):
        w = pochhammer(a + 3 - j, 2 * j) / (factorial(j) * factorial(j + 1) * factorial(k - j))
        bracket = a + 3 - k + j - Fraction((a + 2 - j) * (j + a + 3), a + 2)
        total += w * bracket / factorial(a + 3 - k + j)
    return total


def b_coefficient_split(alpha: int, k: int) -> tuple[Fraction, Fraction]:
    """The two sums whose difference is :func:`b_coefficient`."""
    a = alpha
    first = Fraction(0)
    for j in range(max(0, k - a - 2), min(a + 2, k) + 1):
        first += pochhammer(a + 3 - j, 2 * j) / (
            factorial(j) * factorial(j + 1) * factorial(k - j) * factorial(a + 2 - k + j)
        )
    second = Fraction(0)
    for j in range(max(0, k - a - 3), min(a + 1, k) + 1):
        second += pochhammer(a + 2 - j, 2 * j + 2) / (
            factorial(j) * factorial(j + 1) * factorial(k - j) * factorial(a + 3 - k + j) * (a + 2)
        )
    return first, second


def vanishing_sides(alpha: int, k: int) -> tuple[Fraction, Fraction]:
    """Left and right sides of the equivalent form of ``b_k = 0``."""
    a = alpha
    lhs = Fraction(0)
    for j in range(max(0, k - a - 2), min(a + 2, k) + 1):
        lhs += factorial(j + a + 2) * pochhammer(-k, j) * pochhammer(-a - 2, j) / (
            factorial(j) * factorial(j + 1) * factorial(j - k + a + 2)
        )
    rhs = Fraction(0)
    for n in range(max(0, k - a - 3), min(a + 1, k) + 1):
        rhs += factorial(n + a + 3) * pochhammer(-k, n) * pochhammer(-a - 1, n) / (
            factorial(n) * factorial(n + 1) * factorial(n - k + a + 3)
        )
    return lhs, rhs


def thomae_sides(alpha: int, k: int) -> tuple[Fraction, Fraction]:
    a = alpha
    lhs = hyper_terminating((a + 3, -a - 2, -k), (2, a + 3 - k), k)
    rhs = Fraction(a + 3, a + 3 - k) * hyper_terminating((a + 4, -a - 1, -k), (2, a + 4 - k), k)
    return lhs, rhs


def verify_hypergeom_identities(alpha_max: int, k_max: int = 6) -> Report:
    """Chu-Vandermonde for ``m <= k_max``; the C-coefficient identities for ``alpha <= alpha_max``."""
    report = Report("identities")
    cv = report.check("chu_vandermonde")
    for m in range(k_max + 1):
        for b in range(-(alpha_max + 4), 4):
            for c in range(1, 7):
                lhs, rhs = chu_vandermonde_lhs(m, b, c), chu_vandermonde_rhs(m, b, c)
                cv.record(lhs == rhs, m=m, b=b, c=c, lhs=str(lhs), rhs=str(rhs))
    for a in range(alpha_max + 1):
        for k in range(2 * a + 5):
            for j in range(max(0, k - a - 2), min(a + 2, k) + 1):
                lhs, rhs = c_jk_sum(a, j, k), c_jk_closed(a, j, k)
                report.check("c_jk_closed_form").record(lhs == rhs, alpha=a, j=j, k=k)
            bk = b_coefficient(a, k)
            first, second = b_coefficient_split(a, k)
            report.check("b_k_vanishes").record(
                bk == 0 and first - second == 0, alpha=a, k=k, b_k=str(bk)
            )
            lhs, rhs = vanishing_sides(a, k)
            report.check("b_k_equivalent_sums").record(lhs == rhs, alpha=a, k=k)
        for k in range(a + 3):
            lhs, rhs = thomae_sides(a, k)
            report.check("thomae_3f2").record(lhs == rhs, alpha=a, k=k, lhs=str(lhs), rhs=str(rhs))
    return report
