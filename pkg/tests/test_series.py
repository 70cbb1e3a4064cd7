"""Generating-function, Euler-product, Eisenstein, and hook-length oracles."""

from fractions import Fraction
from math import factorial

import pytest

from darcais.arith import identity, one, sigma
from darcais.exact import Poly, X
from darcais.recursion import polynomial_sequence, value_sequence
from darcais.series import (
    closed_family_check,
    euler_product_power,
    generating_series_h_id,
    generating_series_h_one,
    hook_length_polynomial,
    inverse_eisenstein,
)

HALF = Fraction(1, 2)


def count_partitions_dp(n: int) -> int:
    table = [1] + [0] * n
    for part in range(1, n + 1):
        for total in range(part, n + 1):
            table[total] += table[total - part]
    return table[n]


def pentagonal_coefficient(n: int) -> int:
    """Euler: the q^n coefficient of prod (1 - q^k) is (-1)^j at j(3j+-1)/2."""
    j = 0
    while j * (3 * j - 1) // 2 <= n:
        if n in (j * (3 * j - 1) // 2, j * (3 * j + 1) // 2):
            return (-1) ** j
        j += 1
    return 0


def triangular_coefficient(n: int) -> int:
    """Jacobi: the q^n coefficient of the cube is (-1)^k (2k+1) at k(k+1)/2."""
    k = 0
    while k * (k + 1) // 2 <= n:
        if n == k * (k + 1) // 2:
            return (-1) ** k * (2 * k + 1)
        k += 1
    return 0


def test_series_h_id_examples():
    series = generating_series_h_id(sigma(1), 4)
    assert series.coefficient(0) == 1
    assert series.coefficient(2) == (X**2 + 3 * X) * HALF
    series_one_g = generating_series_h_id(one(), 6)
    for n in range(7):
        rising = Poly([1])
        for k in range(n):
            rising = rising * (X + k)
        assert series_one_g.coefficient(n) * factorial(n) == rising


def test_series_h_one_examples():
    series = generating_series_h_one(one(), 6)
    for n in range(1, 7):
        assert series.coefficient(n) == X * (X + 1) ** (n - 1)
    assert generating_series_h_one(sigma(3), 1).coefficient(1)(-240) == -240
    assert generating_series_h_one(sigma(5), 1).coefficient(1)(504) == 504


def test_series_match_recursion():
    for g in (one(), identity(), sigma(1)):
        polys_id = polynomial_sequence(g, identity(), 14)
        polys_one = polynomial_sequence(g, one(), 14)
        series_id = generating_series_h_id(g, 14)
        series_one = generating_series_h_one(g, 14)
        for n in range(15):
            assert series_id.coefficient(n) == polys_id[n]
            assert series_one.coefficient(n) == polys_one[n]


def test_euler_product_small_powers():
    eta = euler_product_power(1, 30)
    for n in range(31):
        assert eta.coefficient(n) == pentagonal_coefficient(n)
    cube = euler_product_power(3, 30)
    for n in range(31):
        assert cube.coefficient(n) == triangular_coefficient(n)
    reciprocal = euler_product_power(-1, 25)
    for n in range(26):
        assert reciprocal.coefficient(n) == count_partitions_dp(n)


def test_euler_product_24():
    expansion = euler_product_power(24, 10)
    assert expansion.coefficient(0) == 1
    assert expansion.coefficient(1) == -24
    assert expansion.coefficient(2) == 252
    values = value_sequence(sigma(1), identity(), Fraction(-24), 10)
    for n in range(11):
        assert expansion.coefficient(n) == values[n]


def test_euler_product_integer_exponents_match_recursion_values():
    # prod (1-q^n)^r has q^n coefficient P_n(-r) for (sigma, id)
    for r in (-2, -1, 1, 3, 24):
        expansion = euler_product_power(r, 30)
        values = value_sequence(sigma(1), identity(), Fraction(-r), 30)
        for n in range(31):
            assert expansion.coefficient(n) == values[n], (r, n)


def test_euler_product_symbolic_exponent():
    expansion = euler_product_power(X, 10)
    polys = polynomial_sequence(sigma(1), identity(), 10)
    negate = Poly([0, -1])
    for n in range(11):
        coeff = expansion.coefficient(n)
        assert isinstance(coeff, Poly) or n == 0
        if isinstance(coeff, Poly):
            assert coeff.degree <= n
        assert coeff == polys[n](negate)


def test_euler_product_negative_symbolic_relation():
    # substituting a concrete integer into the symbolic expansion matches
    # the directly expanded product
    symbolic = euler_product_power(X, 8)
    for r in (-2, 1, 5):
        direct = euler_product_power(r, 8)
        for n in range(9):
            coeff = symbolic.coefficient(n)
            value = coeff(Fraction(r)) if isinstance(coeff, Poly) else coeff
            assert value == direct.coefficient(n)


def test_inverse_eisenstein_values():
    a4 = inverse_eisenstein(4, 6)
    assert a4[0] == 1
    assert a4[1] == -240
    a6 = inverse_eisenstein(6, 6)
    assert a6[0] == 1
    assert a6[1] == 504
    # two independent routes for a6(2): series inversion vs 504*(504 + sigma5(2))
    assert a6[2] == 504 * (504 + 33) == 270648
    with pytest.raises(ValueError):
        inverse_eisenstein(8, 3)


def test_inverse_eisenstein_matches_recursion_values():
    a4 = inverse_eisenstein(4, 20)
    v4 = value_sequence(sigma(3), one(), Fraction(-240), 20)
    assert a4 == v4
    a6 = inverse_eisenstein(6, 20)
    v6 = value_sequence(sigma(5), one(), Fraction(504), 20)
    assert a6 == v6


def test_hook_length_polynomial_examples():
    assert hook_length_polynomial(0) == Poly([1])
    assert hook_length_polynomial(1) == 1 + X
    assert hook_length_polynomial(2) == Poly([2, Fraction(5, 2), HALF])
    for n in range(11):
        q = hook_length_polynomial(n)
        assert q.degree == n
        assert q(0) == count_partitions_dp(n)
        assert all(c > 0 for c in q.coefficients)


def test_hook_length_polynomial_shift_identity():
    polys = polynomial_sequence(sigma(1), identity(), 10)
    shift = X + 1
    for n in range(11):
        assert hook_length_polynomial(n) == polys[n](shift)


def test_closed_family_checks_pass():
    for family in ("pochhammer", "stirling", "lah", "chebyshev3term", "symmetric_product"):
        report = closed_family_check(family, 10)
        assert report.passed, report
        assert report.checks > 0
    with pytest.raises(ValueError):
        closed_family_check("legendre", 5)


def test_chebyshev_three_term_instance():
    # g = id, h = one, n = 0: h(0) P0 + (-2 - x) P1 + P2 must vanish (h(0) = 0)
    polys = polynomial_sequence(identity(), one(), 2)
    assert polys[2] == X**2 + 2 * X
    relation = Poly() * polys[0] + (Poly([-2]) - X) * polys[1] + polys[2]
    assert relation.is_zero()


def test_symmetric_product_example():
    p3 = polynomial_sequence(one(), identity(), 3)[3]
    assert p3 * 6 == X * (X + 1) * (X + 2)
