"""Generating-function and hook-length oracles.

Every route here computes the attached polynomials (or their values)
without touching the recursion engine, so agreement between the two is
meaningful evidence:

* h = id:   sum_n P_n(x) q^n = exp(x * sum_k g(k) q^k / k),
* h = one:  sum_n P_n(x) q^n = 1 / (1 - x * sum_k g(k) q^k),
* Euler products prod_n (1 - q^n)^r expanded factor by factor with
  generalized binomial coefficients (r may be a polynomial variable),
* reciprocals of the weight-4/6 Eisenstein series,
* hook-length sums over partitions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .arith import ArithmeticFunction, CumulativeProduct, identity, one, sigma
from .exact import Poly, Series, X
from .partitions import hook_multiset, partitions_of, stirling_first_unsigned
from .recursion import coefficient_table, polynomial_sequence

_F0 = Fraction(0)
_F1 = Fraction(1)


def generating_series_h_id(g: ArithmeticFunction, order: int) -> Series:
    """exp(x * sum_{k>=1} g(k) q^k / k) truncated; q^n coefficient is P_n for h = id."""
    if order < 0:
        raise ValueError("series order must be nonnegative")
    argument = Series(
        [Poly()] + [Poly((0, g(k) / k)) for k in range(1, order + 1)]
    )
    return argument.exp()


def generating_series_h_one(g: ArithmeticFunction, order: int) -> Series:
    """1 / (1 - x * sum_{k>=1} g(k) q^k) truncated; q^n coefficient is P_n for h = one."""
    if order < 0:
        raise ValueError("series order must be nonnegative")
    denominator = Series(
        [Poly((_F1,))] + [Poly((0, -g(k))) for k in range(1, order + 1)]
    )
    return denominator.inverse()


def _signed_binomial_terms(exponent, kmax: int) -> list:
    """Coefficients (-1)^k C(exponent, k) for k = 0..kmax.

    Works for integer exponents (negative included) and for a Poly
    exponent, via C(r, k) = C(r, k-1) (r - k + 1) / k.
    """
    if isinstance(exponent, Poly):
        current: Poly | Fraction = Poly((_F1,))
    else:
        current = _F1
    terms = [current]
    for k in range(1, kmax + 1):
        current = current * (exponent - (k - 1)) / k * -1
        terms.append(current)
        if not isinstance(current, Poly) and current == 0:
            break  # nonnegative integer exponent: the factor is a polynomial
    return terms


def euler_product_power(exponent, order: int) -> Series:
    """prod_{n>=1} (1 - q^n)^r truncated at q^order.

    `exponent` may be any integer or a Poly (typically X), in which case
    the q^n coefficient is an exact polynomial of degree n in the exponent
    variable.
    """
    if order < 0:
        raise ValueError("series order must be nonnegative")
    if not isinstance(exponent, (int, Fraction, Poly)):
        raise TypeError("exponent must be an integer, Fraction, or Poly")
    acc: list = [_F1] + [_F0] * order
    for n in range(1, order + 1):
        terms = _signed_binomial_terms(exponent, order // n)
        out = list(acc)  # k = 0 contribution
        for k in range(1, len(terms)):
            c = terms[k]
            if not isinstance(c, Poly) and c == 0:
                break
            shift = n * k
            for i in range(order - shift + 1):
                ci = acc[i]
                if isinstance(ci, Poly) or ci:
                    out[i + shift] = out[i + shift] + c * ci
        acc = out
    return Series(acc)


def inverse_eisenstein(weight: int, order: int) -> list[Fraction]:
    """q-expansion coefficients of 1/E4 or 1/E6, by exact series inversion."""
    if weight == 4:
        scale, power = 240, 3
    elif weight == 6:
        scale, power = -504, 5
    else:
        raise ValueError(f"weight must be 4 or 6, got {weight}")
    s = sigma(power)
    eisenstein = Series([_F1] + [Fraction(scale * s(n)) for n in range(1, order + 1)])
    return list(eisenstein.inverse().coefficients)


def hook_length_polynomial(n: int) -> Poly:
    """The degree-n hook-length polynomial (Nekrasov-Okounkov form):

        Q_n(x) = sum over partitions lam of n of
                     prod over hook lengths t of (1 + x / t^2).

    Q_n(0) = p(n) and every coefficient is a positive rational.
    """
    if n < 0:
        raise ValueError("hook-length polynomials need n >= 0")
    total = Poly()
    for lam in partitions_of(n):
        # prod (1 + x/t^2) = prod (x + t^2) / prod t^2, over integers
        numerator = [1]
        denominator = 1
        for t in hook_multiset(lam):
            t2 = t * t
            denominator *= t2
            new = [0] * (len(numerator) + 1)
            for i, c in enumerate(numerator):
                new[i] += t2 * c
                new[i + 1] += c
            numerator = new
        total = total + Poly(Fraction(c, denominator) for c in numerator)
    return total


@dataclass(frozen=True)
class FamilyReport:
    """Outcome of a closed-family verification sweep."""

    family: str
    max_n: int
    checks: int
    first_failure: tuple | None

    @property
    def passed(self) -> bool:
        return self.first_failure is None


_FAMILIES = ("pochhammer", "stirling", "lah", "chebyshev3term", "symmetric_product")


def closed_family_check(
    family: str, max_n: int, h_functions: list[ArithmeticFunction] | None = None
) -> FamilyReport:
    """Verify one closed polynomial family against the recursion engine.

    pochhammer:         P_n for (one, one) equals x (x+1)^(n-1)
    stirling:           A[n][m] for (one, id) equals |s(n, m)|
    lah:                A[n][m] for (id, id) equals (n!/m!) C(n-1, m-1)
    chebyshev3term:     g = id satisfies, for each h,
                        h(n) P_n + (-2 h(n+1) - x) P_{n+1} + h(n+2) P_{n+2} = 0
                        (h(0) = 0, so the P_0 term drops at n = 0)
    symmetric_product:  H(n) P_n for (one, h) equals prod_{k=0}^{n-1} (x + h(k))

    Returns the first failing (family, n[, m]) if any.
    """
    if family not in _FAMILIES:
        raise ValueError(f"unknown family {family!r}; expected one of {_FAMILIES}")
    if max_n < 1:
        raise ValueError("max_n must be at least 1")
    if h_functions is None:
        h_functions = [one(), identity(), sigma(1)]
    checks = 0
    failure: tuple | None = None

    if family == "pochhammer":
        fn_one = one()
        polys = polynomial_sequence(fn_one, fn_one, max_n)
        for n in range(1, max_n + 1):
            expected = (X * (X + 1) ** (n - 1)) if n >= 1 else Poly((_F1,))
            checks += 1
            if polys[n] != expected:
                failure = (family, n)
                break

    elif family == "stirling":
        table = coefficient_table(one(), identity(), max_n)
        for n in range(max_n + 1):
            for m in range(n + 1):
                checks += 1
                if table.entry(n, m) != stirling_first_unsigned(n, m):
                    failure = (family, n, m)
                    break
            if failure:
                break

    elif family == "lah":
        table = coefficient_table(identity(), identity(), max_n)
        for n in range(1, max_n + 1):
            for m in range(1, n + 1):
                checks += 1
                expected = (factorial(n) // factorial(m)) * comb(n - 1, m - 1)
                if table.entry(n, m) != expected:
                    failure = (family, n, m)
                    break
            if failure:
                break

    elif family == "chebyshev3term":
        g = identity()
        for h in h_functions:
            polys = polynomial_sequence(g, h, max_n + 2)
            for n in range(max_n + 1):
                lhs = (
                    polys[n] * h(n)
                    + polys[n + 1] * (Poly((-2 * h(n + 1),)) - X)
                    + polys[n + 2] * h(n + 2)
                )
                checks += 1
                if not lhs.is_zero():
                    failure = (family, h.name, n)
                    break
            if failure:
                break

    elif family == "symmetric_product":
        g = one()
        for h in h_functions:
            polys = polynomial_sequence(g, h, max_n)
            products = CumulativeProduct(h)
            expected = Poly((_F1,))
            for n in range(1, max_n + 1):
                expected = expected * (X + h(n - 1))  # h(0) = 0 gives the x factor
                checks += 1
                if polys[n] * products.value(n) != expected:
                    failure = (family, h.name, n)
                    break
            if failure:
                break

    return FamilyReport(family=family, max_n=max_n, checks=checks, first_failure=failure)
