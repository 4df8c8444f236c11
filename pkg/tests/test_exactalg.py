from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from solag.exactalg import (
    Poly,
    binomial,
    deriv_at_zero,
    factorial,
    format_rational,
    parse_rational,
    pochhammer,
    poly_derive,
    poly_eval,
)

rationals = st.builds(Fraction, st.integers(-50, 50), st.integers(1, 12))


@st.composite
def polys(draw, max_degree=10):
    return Poly(draw(st.lists(rationals, max_size=max_degree + 1)))


def test_binomial_square():
    one_minus_x = Poly([1, -1])
    assert one_minus_x * one_minus_x == Poly([1, -2, 1])


def test_additive_inverse_is_zero():
    f = Poly([Fraction(1, 3), 0, -7])
    z = f + (-f)
    assert z.is_zero()
    assert z.coeffs == ()
    assert z.degree is None


def test_scalar_scaling():
    f = Poly([1, -2, Fraction(1, 2)])
    assert f.scale(2) == Poly([2, -4, 1])
    assert 2 * f == f * 2 == f.scale(2)


def test_canonical_strips_trailing_zeros():
    assert Poly([1, 0, 0]).coeffs == (Fraction(1),)
    assert Poly([0, 0]).degree is None
    assert Poly([0, 3]).degree == 1


def test_derivatives():
    assert poly_derive(Poly.monomial(3), 2) == Poly([0, 6])
    assert poly_derive(Poly.const(5), 1).is_zero()
    f = Poly([1, 2, 3])
    assert poly_derive(f, 0) is f
    for alpha in range(6):
        assert poly_derive(Poly.monomial(alpha + 1), alpha + 2).is_zero()
    with pytest.raises(ValueError):
        poly_derive(f, -1)


def test_evaluation():
    f = Poly([1, -2, Fraction(1, 2)])
    assert poly_eval(f, 0) == 1
    assert f(2) == 1 - 4 + 2
    assert deriv_at_zero(Poly.monomial(3), 3) == 6
    assert deriv_at_zero(Poly.monomial(2), 1) == 0


def test_factorial_family():
    assert pochhammer(Fraction(7, 3), 0) == 1
    assert pochhammer(3, 2) == 12
    assert pochhammer(0, 4) == 0
    assert factorial(0) == factorial(1) == 1
    assert factorial(25) == 15511210043330985984000000
    assert binomial(5, 2) == 10
    assert binomial(-3, 2) == 6  # (-3)(-4)/2
    assert binomial(Fraction(1, 2), 2) == Fraction(-1, 8)
    assert binomial(4, 7) == 0


def test_big_factorial_is_exact():
    # (2a+5)! for a = 8 already exceeds 64 bits
    assert factorial(21) > 2**64
    assert factorial(21) / factorial(20) == 21


@pytest.mark.parametrize(
    "text,value",
    [("3", Fraction(3)), ("-3/6", Fraction(-1, 2)), ("+7/1", Fraction(7)), (" 0/5 ", Fraction(0))],
)
def test_parse_rational(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("text,pos", [("1//2", 2), ("1/", 2), ("abc", 0), ("1.5", 1), ("2/0", 2)])
def test_parse_rational_rejects(text, pos):
    with pytest.raises(ValueError, match=f"position {pos}"):
        parse_rational(text)


def test_format_rational():
    assert format_rational(Fraction(4, 2)) == "2"
    assert format_rational(Fraction(-3, 9)) == "-1/3"


def test_json_round_trip():
    f = Poly([Fraction(-1, 3), 0, 5])
    assert f.to_json() == ["-1/3", "0", "5"]
    assert Poly.from_json(f.to_json()) == f
    assert Poly().to_json() == []


def test_immutable():
    f = Poly([1])
    with pytest.raises(AttributeError):
        f.coeffs = ()


def test_floats_refused():
    with pytest.raises(TypeError):
        Poly([0.5])


@given(polys(), polys())
def test_results_are_canonical(f, g):
    for h in (f + g, f - g, f * g, f.derive(), f.scale(Fraction(2, 3))):
        assert not h.coeffs or h.coeffs[-1] != 0
        assert all(isinstance(c, Fraction) for c in h.coeffs)


@given(polys(), polys())
def test_leibniz_rule(f, g):
    assert (f * g).derive() == f * g.derive() + g * f.derive()


@given(polys(), polys(), rationals)
def test_derivative_linear(f, g, c):
    assert (f + g.scale(c)).derive() == f.derive() + g.derive().scale(c)


@given(rationals, st.integers(0, 8), st.integers(0, 8))
def test_pochhammer_splits(a, m, n):
    assert pochhammer(a, m + n) == pochhammer(a, m) * pochhammer(a + m, n)


@settings(max_examples=50)
@given(polys())
def test_deriv_at_zero_matches_derivative(f):
    top = (f.degree or 0) + 2
    for k in range(top + 1):
        assert deriv_at_zero(f, k) == poly_eval(poly_derive(f, k), 0)
