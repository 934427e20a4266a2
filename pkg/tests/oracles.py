"""Brute-force reference computations that share no code with the library.

Symmetric-group characters come from permutation modules on tabloids:
the permutation character pi^lam counts tabloids fixed by a permutation,
and chi^lam is what remains of pi^lam after removing the constituents
chi^nu with nu lexicographically larger (each occurs with multiplicity
given by an inner product).  Everything is exact integer/rational work.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from math import gcd


def partitions_of(n: int, largest: int | None = None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in partitions_of(n - k, k):
            yield (k,) + rest


def cycle_type(perm) -> tuple[int, ...]:
    n, seen, out = len(perm), set(), []
    for i in range(n):
        if i in seen:
            continue
        j, length = i, 0
        while j not in seen:
            seen.add(j)
            j = perm[j]
            length += 1
        out.append(length)
    return tuple(sorted(out, reverse=True))


def perm_of_type(ct) -> tuple[int, ...]:
    """A permutation with the given cycle type, cycles on consecutive points."""
    perm, start = [], 0
    for length in ct:
        perm += [start + (k + 1) % length for k in range(length)]
        start += length
    return tuple(perm)


def perm_power(perm, j: int):
    out = tuple(range(len(perm)))
    for _ in range(j):
        out = tuple(perm[x] for x in out)
    return out


@lru_cache(maxsize=None)
def class_sizes(n: int) -> dict[tuple[int, ...], int]:
    sizes: dict = {}
    for perm in itertools.permutations(range(n)):
        ct = cycle_type(perm)
        sizes[ct] = sizes.get(ct, 0) + 1
    return sizes


@lru_cache(maxsize=None)
def _tabloids(lam) -> tuple[tuple[int, ...], ...]:
    word = [row for row, size in enumerate(lam) for _ in range(size)]
    return tuple(set(itertools.permutations(word)))


def permutation_character(lam) -> dict[tuple[int, ...], int]:
    """pi^lam(sigma) = number of row assignments constant on the cycles of sigma."""
    n = sum(lam)
    out = {}
    for ct in class_sizes(n):
        sigma = perm_of_type(ct)
        out[ct] = sum(1 for f in _tabloids(lam) if all(f[sigma[i]] == f[i] for i in range(n)))
    return out


def inner(n: int, f: dict, g: dict) -> Fraction:
    sizes = class_sizes(n)
    total = sum(sizes[ct] * f[ct] * g[ct] for ct in sizes)  # real characters
    return Fraction(total, sum(sizes.values()))


@lru_cache(maxsize=None)
def brute_characters(n: int) -> dict[tuple[int, ...], dict[tuple[int, ...], int]]:
    chars: dict = {}
    for lam in partitions_of(n):  # lexicographically decreasing
        pi = permutation_character(lam)
        for nu, chi in chars.items():
            c = inner(n, pi, chi)
            assert c.denominator == 1
            pi = {ct: pi[ct] - int(c) * chi[ct] for ct in pi}
        assert inner(n, pi, pi) == 1
        chars[lam] = pi
    return chars


def element_order(ct) -> int:
    out = 1
    for k in ct:
        out = out * k // gcd(out, k)
    return out


def _moebius(n: int) -> int:
    out, k = 1, 2
    while k * k <= n:
        if n % k == 0:
            n //= k
            if n % k == 0:
                return 0
            out = -out
        k += 1
    return -out if n > 1 else out


def ramanujan_sum(q: int, n: int) -> int:
    """sum of zeta_q^(n j) over j coprime to q, an integer."""
    g = gcd(q, n)
    return sum(_moebius(q // e) * e for e in range(1, g + 1) if g % e == 0)


def induced_multiplicity_brute(n: int, lam, ct, k: int, m: int, i: int) -> tuple[Fraction, int]:
    """Multiplicity of chi^lam (x) gamma_i in Ind_R^{S_n x mu_m}(1), R = <(sigma, zeta_m^k)>.

    Frobenius reciprocity on explicit powers of an explicit permutation,
    characters from tabloids.  chi(sigma^j) depends on gcd(j, d) only, so
    the sum of roots of unity collapses to Ramanujan sums.
    """
    sigma = perm_of_type(ct)
    o, r = element_order(ct), m // gcd(k, m)
    d = o * r // gcd(o, r)
    c = (i * k * d // m) % d  # zeta_m^(i k j) = zeta_d^(c j)
    chi = brute_characters(n)[lam]
    total = 0
    for g in range(1, d + 1):
        if d % g == 0:
            total += chi[cycle_type(perm_power(sigma, g))] * ramanujan_sum(d // g, c)
    return Fraction(total, d), d

