from fractions import Fraction

import pytest

from solag.exactalg import pochhammer
from solag.hypergeom import (
    b_coefficient,
    b_coefficient_split,
    c_jk_closed,
    c_jk_sum,
    chu_vandermonde_lhs,
    chu_vandermonde_rhs,
    hyper_terminating,
    thomae_sides,
    vanishing_sides,
    verify_hypergeom_identities,
)


def brute_2f1(m, b, c):
    return sum(pochhammer(-m, j) * pochhammer(b, j) / (pochhammer(c, j) * pochhammer(1, j)) for j in range(m + 1))


def test_chu_vandermonde_example():
    # 1 + 3 + 1 by hand; (5)_2 / (2)_2 = 30 / 6
    assert brute_2f1(2, -3, 2) == 5
    assert chu_vandermonde_lhs(2, -3, 2) == 5
    assert chu_vandermonde_rhs(2, -3, 2) == 5


@pytest.mark.parametrize("m", range(7))
def test_chu_vandermonde_grid(m):
    for b in range(-8, 4):
        for c in range(1, 7):
            assert chu_vandermonde_lhs(m, b, c) == chu_vandermonde_rhs(m, b, c) == brute_2f1(m, b, c)


def test_rational_parameters():
    b, c = Fraction(1, 3), Fraction(5, 2)
    assert chu_vandermonde_lhs(4, b, c) == chu_vandermonde_rhs(4, b, c)


def test_zero_lower_parameter():
    with pytest.raises(ZeroDivisionError):
        hyper_terminating((-3, 1), (-1,), 3)


def test_b_k_at_zero():
    assert b_coefficient(0, 0) == 0
    first, second = b_coefficient_split(0, 0)
    assert first == second == Fraction(1, 2)


@pytest.mark.parametrize("alpha", range(5))
def test_c_coefficient_identities(alpha):
    for k in range(2 * alpha + 5):
        assert b_coefficient(alpha, k) == 0
        first, second = b_coefficient_split(alpha, k)
        assert first == second
        lhs, rhs = vanishing_sides(alpha, k)
        assert lhs == rhs
        for j in range(max(0, k - alpha - 2), min(alpha + 2, k) + 1):
            assert c_jk_sum(alpha, j, k) == c_jk_closed(alpha, j, k)


@pytest.mark.parametrize("alpha", range(5))
def test_thomae(alpha):
    assert thomae_sides(alpha, 0) == (1, 1)
    for k in range(alpha + 3):
        lhs, rhs = thomae_sides(alpha, k)
        assert lhs == rhs


def test_report():
    r = verify_hypergeom_identities(4, 6)
    assert r.passed
    assert {c.name for c in r.checks} == {
        "chu_vandermonde", "c_jk_closed_form", "b_k_vanishes", "b_k_equivalent_sums", "thomae_3f2",
    }
