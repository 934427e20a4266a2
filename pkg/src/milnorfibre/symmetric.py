"""Partitions, cycle types and Murnaghan–Nakayama character values for S_n."""

from __future__ import annotations

from functools import lru_cache
from math import factorial, gcd
from collections import Counter

from .errors import ShapeMismatch

Partition = tuple[int, ...]


@lru_cache(maxsize=None)
def partitions(n: int, largest: int | None = None) -> tuple[Partition, ...]:
    """Partitions of n in reverse lexicographic order, (n) first."""
    if largest is None:
        largest = n
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def conjugate(lam: Partition) -> Partition:
    return tuple(sum(1 for part in lam if part > i) for i in range(lam[0])) if lam else ()


def centralizer_order(ct: Partition) -> int:
    z = 1
    for length, mult in Counter(ct).items():
        z *= length**mult * factorial(mult)
    return z


def class_size(ct: Partition) -> int:
    return factorial(sum(ct)) // centralizer_order(ct)


def sign_of(ct: Partition) -> int:
    return -1 if sum(length - 1 for length in ct) % 2 else 1


def power_cycle_type(ct: Partition, j: int) -> Partition:
    """Cycle type of g^j: a k-cycle splits into gcd(k, j) cycles of length k/gcd(k, j)."""
    parts = []
    for k in ct:
        g = gcd(k, j)
        parts.extend([k // g] * g)
    return tuple(sorted(parts, reverse=True))


def _beta(lam: Partition) -> tuple[int, ...]:
    n = len(lam)
    return tuple(lam[i] + n - 1 - i for i in range(n))


@lru_cache(maxsize=None)
def _mn(beta: tuple[int, ...], ct: Partition) -> int:
    if not ct:
        return 1
    r, rest = ct[0], ct[1:]
    beads = set(beta)
    total = 0
    for b in beta:
        if b - r >= 0 and (b - r) not in beads:
            # removing a rim hook of length r moves one bead down by r
            crossed = sum(1 for c in beta if b - r < c < b)
            new = tuple(sorted((c if c != b else b - r) for c in beta))[::-1]
            total += (-1) ** crossed * _mn(new, rest)
    return total


def mn_value(lam: Partition, ct: Partition) -> int:
    """chi^lam evaluated on the class of cycle type ct."""
    lam, ct = tuple(lam), tuple(ct)
    if sum(lam) != sum(ct):
        raise ShapeMismatch(f"|{lam}| != |{ct}|")
    if any(a < b for a, b in zip(lam, lam[1:])) or any(p <= 0 for p in lam):
        raise ShapeMismatch(f"{lam} is not a partition")
    # larger parts first keeps the recursion shallow
    return _mn(_beta(lam), tuple(sorted(ct, reverse=True)))


def hook_dimension(lam: Partition) -> int:
    n = sum(lam)
    conj = conjugate(lam)
    hooks = 1
    for i, row in enumerate(lam):
        for j in range(row):
            hooks *= row - j + conj[j] - i - 1
    return factorial(n) // hooks
