"""Independent reference evaluations with sympy.

Operators are applied by literally differentiating the nested expressions
with true exponentials, and integrals are done by sympy.integrate.  Nothing
here touches the normal-form machinery under test.
"""
import sympy as sp

from solag.exactalg import Poly

x = sp.symbols("x")


def to_sym(p: Poly):
    return sum(sp.Rational(c.numerator, c.denominator) * x**k for k, c in enumerate(p.coeffs))


def from_sym(expr) -> Poly:
    poly = sp.Poly(sp.expand(expr), x)
    cs = poly.all_coeffs()[::-1]
    from fractions import Fraction

    return Poly(Fraction(int(sp.fraction(c)[0]), int(sp.fraction(c)[1])) for c in cs)


def nested(y, rho, q, w, s, t):
    """e^x x^rho D^q { e^{-x} w D^s [x^t y] }"""
    inner = sp.exp(-x) * w * sp.diff(x**t * y, x, s)
    return sp.expand(sp.simplify(sp.exp(x) * x**rho * sp.diff(inner, x, q)))


def op_L(y, a):
    return sp.expand(x * sp.diff(y, x, 2) + (a + 1 - x) * sp.diff(y, x))


def op_A(y, a):
    return sp.Rational((-1) ** (a + 1)) / sp.factorial(a + 2) * nested(y, 1, a + 2, 1, a + 2, a + 1)


def op_B(y, a):
    E = -(a + 2) * nested(y, 1, a + 4, x**2, a + 4, a + 1)
    F = (a + 4) * nested(y, 1, a + 3, x + 2 * a + 4, a + 3, a + 1)
    G = (a + 1) * (a + 3) * (a + 4) * nested(y, 0, a + 2, x + 2 * a + 4, a + 2, a)
    return sp.expand(sp.Rational((-1) ** a) / ((a + 1) * sp.factorial(a + 4)) * (E + F + G))


def op_C(y, a):
    total = 0
    for j in range(a + 3):
        q = sp.Rational((a + 2 - j) * (a + 3 + j), a + 2)
        w = sp.rf(a + 3 - j, 2 * j) / (sp.factorial(j) * sp.factorial(j + 1))
        norm = sp.Rational((-1) ** (a + j)) / ((a + 1) * sp.factorial(a + 3 + j))
        total += w * norm * nested(y, 1, a + 3 + j, x**j * (x + q), a + 3 + j, a + 1)
    return sp.expand(total)


def laguerre(n, a):
    return sp.expand(sp.assoc_laguerre(n, a, x))


def weighted_integral(expr, a):
    return sp.integrate(expr * sp.exp(-x) * x**a, (x, 0, sp.oo)) / sp.factorial(a)


def inner(f, g, a, M, N):
    d = lambda h: sp.diff(h, x).subs(x, 0)
    return weighted_integral(f * g, a) + M * f.subs(x, 0) * g.subs(x, 0) + N * d(f) * d(g)
