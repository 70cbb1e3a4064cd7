"""Coefficient-sequence shape predicates and exact scans.

The predicates (unimodal, log-concave, ultra-log-concave) are evaluated
exactly on sequences of nonnegative rationals.  The scans combine routes
from the recursion engine and the oracles: hook-polynomial scans use the
shift identity Q_n(x) = P_n(x+1) for (sigma, id) on top of the integer
coefficient triangle, and the Lehmer scan runs the recursion on values at
x = -24 and cross-checks the 24th Euler-product power.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence

from .arith import ArithmeticFunction, from_table, identity, one, sigma, tilde
from .recursion import (
    coefficient_table,
    coefficient_top_band,
    shifted_coefficient_numerators,
    value_sequence,
)
from .series import euler_product_power
from .weights import orbit_weight_sum

_F0 = Fraction(0)


@dataclass(frozen=True)
class ShapeReport:
    """Result of one shape predicate on one sequence."""

    predicate: str
    n: int
    holds: bool
    witness: int | None  # first violating index when holds is False


def _as_nonnegative(seq: Sequence) -> list[Fraction]:
    out = [v if isinstance(v, Fraction) else Fraction(v) for v in seq]
    for v in out:
        if v < 0:
            raise ValueError("shape predicates are defined for nonnegative sequences")
    return out


def _resolve_n(seq: Sequence, n: int | None) -> int:
    if n is None:
        return len(seq) - 1
    if len(seq) != n + 1:
        raise ValueError(f"sequence of length {len(seq)} does not match n = {n}")
    return n


def is_unimodal(seq: Sequence, n: int | None = None) -> ShapeReport:
    """Nondecreasing up to some peak, then nonincreasing."""
    n = _resolve_n(seq, n)
    values = _as_nonnegative(seq)
    i = 0
    while i + 1 < len(values) and values[i] <= values[i + 1]:
        i += 1
    while i + 1 < len(values) and values[i] >= values[i + 1]:
        i += 1
    holds = i + 1 >= len(values)
    return ShapeReport("unimodal", n, holds, None if holds else i + 1)


def is_log_concave(seq: Sequence, n: int | None = None) -> ShapeReport:
    """a_j^2 >= a_{j-1} a_{j+1} for every interior j."""
    n = _resolve_n(seq, n)
    values = _as_nonnegative(seq)
    for j in range(1, len(values) - 1):
        if values[j] * values[j] < values[j - 1] * values[j + 1]:
            return ShapeReport("log-concave", n, False, j)
    return ShapeReport("log-concave", n, True, None)


def is_ultra_log_concave(seq: Sequence, n: int | None = None) -> ShapeReport:
    """Log-concavity of the associated sequence a_k / C(n, k)."""
    n = _resolve_n(seq, n)
    values = _as_nonnegative(seq)
    scaled = [v / comb(n, k) for k, v in enumerate(values)]
    inner = is_log_concave(scaled, n)
    return ShapeReport("ultra-log-concave", n, inner.holds, inner.witness)


def implication_chain_holds(seq: Sequence, n: int | None = None) -> bool:
    """ultra-log-concave => log-concave => unimodal on this sequence."""
    ultra = is_ultra_log_concave(seq, n)
    log = is_log_concave(seq, n)
    uni = is_unimodal(seq, n)
    if ultra.holds and not log.holds:
        return False
    if log.holds and not uni.holds:
        return False
    return True


@dataclass(frozen=True)
class TransferReport:
    """Shape transfer from the (g/n, one) polynomials to the (g, id) ones."""

    g_name: str
    max_n: int
    premise_log: list[int]      # n where the h=one side is log-concave
    premise_ultra: list[int]    # n where the h=one side is ultra-log-concave
    first_failure: tuple | None  # (n, predicate) breaking the implication

    @property
    def passed(self) -> bool:
        return self.first_failure is None


def transfer_check(g: ArithmeticFunction, max_n: int) -> TransferReport:
    """Whenever P_n for (g/n, one) is (ultra-)log-concave, so must be P_n for (g, id)."""
    g_tilde = tilde(g)
    source = coefficient_table(g_tilde, one(), max_n)
    target = coefficient_table(g, identity(), max_n)
    premise_log: list[int] = []
    premise_ultra: list[int] = []
    failure: tuple | None = None
    for n in range(1, max_n + 1):
        src = [source.scaled(n, m) for m in range(n + 1)]
        dst = [target.scaled(n, m) for m in range(n + 1)]
        if is_log_concave(src, n).holds:
            premise_log.append(n)
            if not is_log_concave(dst, n).holds:
                failure = (n, "log-concave")
                break
        if is_ultra_log_concave(src, n).holds:
            premise_ultra.append(n)
            if not is_ultra_log_concave(dst, n).holds:
                failure = (n, "ultra-log-concave")
                break
    return TransferReport(g.name, max_n, premise_log, premise_ultra, failure)


def top_margin(g: ArithmeticFunction, h: ArithmeticFunction, n: int) -> Fraction:
    """A[n][n-1]^2 - A[n][n-2] A[n][n]: positivity gives log-concavity at the top.

    Evaluated through the weight route, so only g(2) and g(3) are needed
    (table-backed g of length 3 suffices).
    """
    if n < 2:
        raise ValueError("the top margin needs n >= 2")
    a_top = g(2) * orbit_weight_sum(h, (1,), n)
    a_next = g(3) * orbit_weight_sum(h, (2,), n) + g(2) ** 2 * orbit_weight_sum(h, (1, 1), n)
    return a_top * a_top - a_next


def top_margin_lower_bound(g: ArithmeticFunction, h: ArithmeticFunction, n: int) -> Fraction:
    """(g(2)^2 - g(3)) * sum_{k=2}^{n-1} h(k) h(k-1)."""
    if n < 2:
        raise ValueError("the top margin needs n >= 2")
    window_sum = _F0
    for k in range(2, n):
        window_sum += h(k) * h(k - 1)
    return (g(2) ** 2 - g(3)) * window_sum


@dataclass(frozen=True)
class MarginCounterexample:
    """A g-table and an n where the top margin goes negative."""

    g_values: tuple[int, ...]
    h_name: str
    n: int
    margin: Fraction


def counterexample_search(
    h: ArithmeticFunction, max_n: int = 50, start: int = 2, limit: int = 1 << 20
) -> MarginCounterexample | None:
    """Double g(3) on g = table[1, 1, G] until the top margin fails somewhere.

    Existence is guaranteed for any h with positive values: the g(3) term
    grows without bound while the rest of the margin is fixed.
    """
    big = start
    while big <= limit:
        g = from_table([1, 1, big])
        for n in range(2, max_n + 1):
            margin = top_margin(g, h, n)
            if margin < 0:
                return MarginCounterexample((1, 1, big), h.name, n, margin)
        big *= 2
    return None


@dataclass(frozen=True)
class ScanReport:
    """Outcome of an exact scan over 1 <= n <= max_n."""

    check: str
    max_n: int
    first_failure: int | None
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.first_failure is None


def _shifted_rows(max_n: int) -> list[list[int]]:
    """Integer numerators (n! times coefficients) of P_n(x+1) for (sigma, id)."""
    table = coefficient_table(sigma(1), identity(), max_n)
    return [list(shifted_coefficient_numerators(table.row(n))) for n in range(max_n + 1)]


def hook_poly_log_concavity_scan(max_n: int, check_chain: bool = False) -> ScanReport:
    """Exact log-concavity of the hook-polynomial coefficients for n <= max_n.

    Q_n comes from the shift identity on the integer triangle; the common
    positive denominator n! drops out of every log-concavity comparison.
    With check_chain, also assert ultra => log-concave => unimodal on each
    computed sequence.
    """
    rows = _shifted_rows(max_n)
    for n in range(1, max_n + 1):
        row = rows[n]
        report = is_log_concave(row, n)
        if not report.holds:
            return ScanReport(
                "hook-log-concavity", max_n, n, f"first violation at index {report.witness}"
            )
        if check_chain and not implication_chain_holds(row, n):
            return ScanReport("hook-log-concavity", max_n, n, "implication chain broken")
    return ScanReport("hook-log-concavity", max_n, None)


def hook_poly_top_inequality_scan(max_n: int) -> ScanReport:
    """Strict b_{n,n-1}^2 > b_{n,n-2} b_{n,n} for the hook polynomials, 2 <= n <= max_n.

    Uses the diagonal band of the triangle: with N_j = n! b_{n,j},
    N_{n}   = A[n][n],
    N_{n-1} = A[n][n-1] + n A[n][n],
    N_{n-2} = A[n][n-2] + (n-1) A[n][n-1] + C(n,2) A[n][n].
    """
    if max_n < 2:
        raise ValueError("the top inequality scan needs max_n >= 2")
    band = coefficient_top_band(sigma(1), identity(), max_n, depth=2)
    for n in range(2, max_n + 1):
        a_nn, a_n1, a_n2 = band[n][0], band[n][1], band[n][2]
        top = a_n1 + n * a_nn
        second = a_n2 + (n - 1) * a_n1 + comb(n, 2) * a_nn
        if not top * top > second * a_nn:
            return ScanReport("hook-top-inequality", max_n, n)
    return ScanReport("hook-top-inequality", max_n, None)


@dataclass(frozen=True)
class LehmerReport:
    """Values P_n(-24) for (sigma, id) and the Euler-product cross-check."""

    max_n: int
    values: list[Fraction]  # index n, starting at n = 0
    zeros: list[int]
    crosscheck_ok: bool

    @property
    def passed(self) -> bool:
        return not self.zeros and self.crosscheck_ok


def lehmer_scan(max_n: int) -> LehmerReport:
    """P_n(-24) != 0 for 1 <= n <= max_n, checked exactly.

    The values come from the recursion run at x = -24; independently, the
    q-expansion of the 24th power of the Euler product must reproduce them
    coefficient by coefficient.
    """
    if max_n < 1:
        raise ValueError("the scan needs max_n >= 1")
    values = value_sequence(sigma(1), identity(), Fraction(-24), max_n)
    zeros = [n for n in range(1, max_n + 1) if values[n] == 0]
    product = euler_product_power(24, max_n)
    crosscheck_ok = all(product.coefficient(n) == values[n] for n in range(max_n + 1))
    return LehmerReport(max_n, values, zeros, crosscheck_ok)
