"""Partitions, compositions, orbits, hook lengths, and counting helpers.

Compositions and partitions are plain tuples of positive ints; a partition
is the non-increasing representative.  The empty tuple is the unique
composition of 0.  All generators are lazy and yield in a fixed
deterministic order.
"""

from __future__ import annotations

from collections import Counter
from math import comb, factorial
from typing import Iterator, Sequence


def is_partition(mu: Sequence[int]) -> bool:
    return all(a >= b for a, b in zip(mu, mu[1:])) and all(p >= 1 for p in mu)


def partitions_of(n: int) -> Iterator[tuple[int, ...]]:
    """All partitions of n in reverse-lexicographic order (largest part first)."""
    if n < 0:
        raise ValueError("partitions need n >= 0")

    def descend(remaining: int, cap: int, prefix: list[int]) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield tuple(prefix)
            return
        for part in range(min(remaining, cap), 0, -1):
            prefix.append(part)
            yield from descend(remaining - part, part, prefix)
            prefix.pop()

    yield from descend(n, n, [])


def orbit_of(mu: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """All distinct reorderings of the parts, in lexicographic order.

    Uses the classical next-permutation sweep starting from the sorted
    arrangement, so repeated parts are never emitted twice.
    """
    arr = sorted(mu)
    while True:
        yield tuple(arr)
        i = len(arr) - 2
        while i >= 0 and arr[i] >= arr[i + 1]:
            i -= 1
        if i < 0:
            return
        j = len(arr) - 1
        while arr[j] <= arr[i]:
            j -= 1
        arr[i], arr[j] = arr[j], arr[i]
        arr[i + 1:] = reversed(arr[i + 1:])


def orbit_size(mu: Sequence[int]) -> int:
    """len(mu)! / prod_j multiplicity_j!"""
    size = factorial(len(mu))
    for count in Counter(mu).values():
        size //= factorial(count)
    return size


def compositions_of(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """All compositions of n with exactly k parts, lexicographically."""
    if n < 1 or not 1 <= k <= n:
        raise ValueError(f"compositions need n >= 1 and 1 <= k <= n, got n={n}, k={k}")

    def build(remaining: int, parts_left: int, prefix: list[int]) -> Iterator[tuple[int, ...]]:
        if parts_left == 1:
            prefix.append(remaining)
            yield tuple(prefix)
            prefix.pop()
            return
        for first in range(1, remaining - parts_left + 2):
            prefix.append(first)
            yield from build(remaining - first, parts_left - 1, prefix)
            prefix.pop()

    yield from build(n, k, [])


def composition_count(n: int, k: int) -> int:
    """c_k(n) = C(n-1, k-1)."""
    if n < 1 or not 1 <= k <= n:
        raise ValueError(f"composition counts need n >= 1 and 1 <= k <= n, got n={n}, k={k}")
    return comb(n - 1, k - 1)


def multiplicities(mu: Sequence[int]) -> Counter:
    """Multiplicity of each part value in the composition."""
    return Counter(mu)


def multinomial(n: int, parts: Sequence[int]) -> int:
    """n! / prod parts_i!; the parts must sum to n."""
    if any(p < 0 for p in parts):
        raise ValueError("multinomial parts must be nonnegative")
    if sum(parts) != n:
        raise ValueError(f"multinomial parts {tuple(parts)} do not sum to {n}")
    out = factorial(n)
    for p in parts:
        out //= factorial(p)
    return out


_STIRLING_ROWS: list[list[int]] = [[1]]


def stirling_first_unsigned(n: int, m: int) -> int:
    """Unsigned Stirling numbers of the first kind, |s(n, m)|.

    Triangle recurrence |s(n+1, m)| = n |s(n, m)| + |s(n, m-1)|.
    """
    if n < 0 or m < 0:
        raise ValueError("Stirling numbers need n, m >= 0")
    if m > n:
        return 0
    while len(_STIRLING_ROWS) <= n:
        k = len(_STIRLING_ROWS) - 1
        prev = _STIRLING_ROWS[-1]
        row = [0] * (k + 2)
        for j in range(k + 2):
            above = prev[j] if j <= k else 0
            left = prev[j - 1] if 1 <= j <= k + 1 else 0
            row[j] = k * above + left
        _STIRLING_ROWS.append(row)
    return _STIRLING_ROWS[n][m]


def conjugate(lam: Sequence[int]) -> tuple[int, ...]:
    """Conjugate (transposed) partition."""
    if not lam:
        return ()
    out = []
    for j in range(lam[0]):
        out.append(sum(1 for row in lam if row > j))
    return tuple(out)


def hook_multiset(lam: Sequence[int]) -> tuple[int, ...]:
    """Hook lengths (arm + leg + 1) of all cells of the Young diagram, sorted."""
    if not is_partition(lam):
        raise ValueError(f"{tuple(lam)} is not a partition")
    conj = conjugate(lam)
    hooks = []
    for i, row in enumerate(lam):
        for j in range(row):
            arm = row - j - 1
            leg = conj[j] - i - 1
            hooks.append(arm + leg + 1)
    return tuple(sorted(hooks))
