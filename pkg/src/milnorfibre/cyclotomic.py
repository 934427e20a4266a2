"""Exact arithmetic in cyclotomic fields.

An element of Q(zeta_m) is stored as an integer vector over the power basis
1, z, ..., z^(phi(m)-1) together with one positive common denominator.  The
vector is always reduced modulo the m-th cyclotomic polynomial, so equality
inside one field is equality of vectors.  Mixed orders are handled by
embedding both operands into the field of order lcm(m, n).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from numbers import Rational as _RationalABC

from .errors import NotRational


def _lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


@lru_cache(maxsize=None)
def _divisors(n: int) -> tuple[int, ...]:
    return tuple(k for k in range(1, n + 1) if n % k == 0)


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


@lru_cache(maxsize=None)
def mobius_number(n: int) -> int:
    """Classical number-theoretic Möbius function."""
    result, k, rest = 1, 2, n
    while k * k <= rest:
        if rest % k == 0:
            rest //= k
            if rest % k == 0:
                return 0
            result = -result
        k += 1
    if rest > 1:
        result = -result
    return result


def _poly_divexact(num: list[int], den: tuple[int, ...]) -> list[int]:
    # exact division of integer polynomials (low degree first), den monic
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + len(den) - 1]
        out[i] = c
        if c:
            for j, dj in enumerate(den):
                num[i + j] -= c * dj
    assert not any(num), "inexact polynomial division"
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Coefficients of Phi_m, lowest degree first."""
    poly = [-1] + [0] * (m - 1) + [1]
    for k in _divisors(m)[:-1]:
        poly = _poly_divexact(poly, cyclotomic_polynomial(k))
    return tuple(poly)


def _reduce(poly: list[int], m: int) -> list[int]:
    phi = cyclotomic_polynomial(m)
    deg = len(phi) - 1
    for i in range(len(poly) - 1, deg - 1, -1):
        c = poly[i]
        if c:
            base = i - deg
            for j in range(deg):
                if phi[j]:
                    poly[base + j] -= c * phi[j]
            poly[i] = 0
    del poly[deg:]
    poly.extend([0] * (deg - len(poly)))
    return poly


@lru_cache(maxsize=None)
def _power_rows(m: int) -> tuple[tuple[int, ...], ...]:
    """Row k is the reduced coordinate vector of z^k, 0 <= k < m."""
    deg = euler_phi(m)
    rows = []
    for k in range(m):
        poly = [0] * max(k + 1, deg)
        poly[k] = 1
        rows.append(tuple(_reduce(poly, m)))
    return tuple(rows)


class Cyclotomic:
    """Immutable element of Q(zeta_order)."""

    __slots__ = ("_order", "_num", "_den", "_hash")

    def __init__(self, order: int, num, den: int = 1, *, _trusted: bool = False):
        if _trusted:
            self._order, self._num, self._den = order, num, den
            self._hash = None
            return
        if order < 1:
            raise ValueError("order must be positive")
        num = list(num)
        deg = euler_phi(order)
        if len(num) > deg:
            num = _reduce(num, order)
        else:
            num = num + [0] * (deg - len(num))
        self._order = order
        self._num, self._den = _normalise(num, den)
        self._hash = None

    # -- constructors -------------------------------------------------
    @classmethod
    def rational(cls, value) -> "Cyclotomic":
        q = Fraction(value)
        return cls(1, (q.numerator,), q.denominator, _trusted=True)

    @classmethod
    def root(cls, m: int, k: int = 1) -> "Cyclotomic":
        if m < 1:
            raise ValueError("order must be positive")
        return cls(m, _power_rows(m)[k % m], 1, _trusted=True)

    # -- accessors ----------------------------------------------------
    @property
    def order(self) -> int:
        return self._order

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self._den) for c in self._num)

    def is_zero(self) -> bool:
        return not any(self._num)

    def is_rational(self) -> bool:
        return not any(self._num[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise NotRational(f"{self!r} is not rational")
        return Fraction(self._num[0], self._den)

    # -- field embedding ----------------------------------------------
    def embed(self, order: int) -> "Cyclotomic":
        if order == self._order:
            return self
        if order % self._order:
            raise ValueError(f"cannot embed order {self._order} into {order}")
        step = order // self._order
        rows = _power_rows(order)
        acc = [0] * euler_phi(order)
        for k, c in enumerate(self._num):
            if c:
                row = rows[(k * step) % order]
                for i, r in enumerate(row):
                    if r:
                        acc[i] += c * r
        return Cyclotomic(order, acc, self._den)

    def descend(self, order: int) -> "Cyclotomic":
        """Rewrite in Q(zeta_order), order | self.order; ValueError if the value is not there."""
        if order == self._order:
            return self
        if self._order % order:
            raise ValueError(f"order {order} does not divide {self._order}")
        basis = [Cyclotomic.root(order, k).embed(self._order).coefficients
                 for k in range(euler_phi(order))]
        sol = _solve_rational([list(b) for b in basis], list(self.coefficients))
        den = 1
        for c in sol:
            den = _lcm(den, c.denominator)
        out = Cyclotomic(order, [int(c * den) for c in sol], den)
        if out.embed(self._order) != self:
            raise ValueError(f"value does not lie in Q(zeta_{order})")
        return out

    # -- arithmetic ---------------------------------------------------
    def _common(self, other: "Cyclotomic") -> tuple["Cyclotomic", "Cyclotomic"]:
        if self._order == other._order:
            return self, other
        if other._order == 1:
            return self, other.embed(self._order)
        if self._order == 1:
            return self.embed(other._order), other
        m = _lcm(self._order, other._order)
        return self.embed(m), other.embed(m)

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._common(other)
        num = [x * b._den + y * a._den for x, y in zip(a._num, b._num)]
        return Cyclotomic(a._order, num, a._den * b._den)

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self._order, tuple(-c for c in self._num), self._den, _trusted=True)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other._order == 1:
            c = other._num[0]
            return Cyclotomic(self._order, [x * c for x in self._num], self._den * other._den)
        if self._order == 1:
            return other * self
        a, b = self._common(other)
        n = len(a._num)
        prod = [0] * (2 * n - 1)
        for i, x in enumerate(a._num):
            if x:
                for j, y in enumerate(b._num):
                    if y:
                        prod[i + j] += x * y
        return Cyclotomic(a._order, _reduce(prod, a._order), a._den * b._den)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not supported")
        out, base = Cyclotomic.rational(1), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def galois(self, a: int) -> "Cyclotomic":
        """Image under zeta -> zeta^a, with a coprime to the order."""
        m = self._order
        if gcd(a, m) != 1:
            raise ValueError("galois exponent must be a unit")
        if m <= 2:
            return self
        rows = _power_rows(m)
        acc = [0] * len(self._num)
        for k, c in enumerate(self._num):
            if c:
                for i, r in enumerate(rows[(k * a) % m]):
                    if r:
                        acc[i] += c * r
        return Cyclotomic(m, acc, self._den)

    def inverse(self) -> "Cyclotomic":
        """Multiplicative inverse via the product of the other Galois conjugates."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        if self.is_rational():
            return Cyclotomic.rational(1 / self.as_rational())
        m = self._order
        others = Cyclotomic.rational(1)
        for a in range(2, m):
            if gcd(a, m) == 1:
                others = others * self.galois(a)
        norm = (self * others).as_rational()
        return others * (1 / norm)

    def conj(self) -> "Cyclotomic":
        return self.galois(-1)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return self * Fraction(q.denominator, q.numerator)
        return NotImplemented

    # -- comparison and hashing ---------------------------------------
    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._common(other)
        return a._den == b._den and a._num == b._num

    def __hash__(self):
        # the normalised trace Tr(x)/[K:Q] does not depend on the ambient field
        if self._hash is None:
            m = self._order
            t = Fraction(0)
            for k, c in enumerate(self._num):
                if c:
                    n = m // gcd(m, k)
                    t += Fraction(c * mobius_number(n), euler_phi(n))
            self._hash = hash(t / self._den)
        return self._hash

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        if self.is_rational():
            return f"Cyclotomic({self.as_rational()})"
        terms = []
        for k, c in enumerate(self.coefficients):
            if c:
                terms.append(f"{c}*z{self._order}^{k}" if k else f"{c}")
        return "Cyclotomic(" + " + ".join(terms) + ")"


def _normalise(num: list[int], den: int) -> tuple[tuple[int, ...], int]:
    if den < 0:
        num, den = [-c for c in num], -den
    g = den
    for c in num:
        if g == 1:
            break
        g = gcd(g, c)
    if g > 1:
        num = [c // g for c in num]
        den //= g
    if not any(num):
        den = 1
    return tuple(num), den


def _coerce(x):
    if isinstance(x, Cyclotomic):
        return x
    if isinstance(x, (int, Fraction, _RationalABC)):
        return Cyclotomic.rational(x)
    return NotImplemented


def _solve_rational(cols: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    """Least-effort exact solve of sum_j x_j cols[j] = rhs (columns independent)."""
    n_rows, n_cols = len(rhs), len(cols)
    aug = [[Fraction(cols[j][i]) for j in range(n_cols)] + [Fraction(rhs[i])] for i in range(n_rows)]
    pivots = []
    r = 0
    for c in range(n_cols):
        p = next((i for i in range(r, n_rows) if aug[i][c] != 0), None)
        if p is None:
            continue
        aug[r], aug[p] = aug[p], aug[r]
        piv = aug[r][c]
        aug[r] = [x / piv for x in aug[r]]
        for i in range(n_rows):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
    sol = [Fraction(0)] * n_cols
    for i, c in enumerate(pivots):
        sol[c] = aug[i][-1]
    return sol


def root(m: int, k: int = 1) -> Cyclotomic:
    """zeta_m^k."""
    return Cyclotomic.root(m, k)


def rational(value) -> Cyclotomic:
    return Cyclotomic.rational(value)


ZERO = Cyclotomic.rational(0)
ONE = Cyclotomic.rational(1)
