"""Explicit model of the rank-two monomial reflection groups G(m, p, 2).

An element is a triple (swap, c0, c1): the basis vector e_j is sent to
zeta_m^{c_j} e_{pi(j)}, where pi swaps the two coordinates when swap is set.
Membership requires p | c0 + c1.  G(p, p, 2) is the dihedral group of order
2p; G(2p, p, 2) is the other uniform family of the rank-two catalog.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .cyclotomic import Cyclotomic, ONE, ZERO, root

Element = tuple[int, int, int]


@dataclass(frozen=True)
class MonomialGroup:
    m: int
    p: int

    def __post_init__(self):
        if self.m < 1 or self.p < 1 or self.m % self.p:
            raise ValueError(f"G({self.m},{self.p},2) needs p | m")

    @property
    def order(self) -> int:
        return 2 * self.m * self.m // self.p

    def elements(self) -> list[Element]:
        return _elements(self.m, self.p)

    def identity(self) -> Element:
        return (0, 0, 0)

    def mul(self, g: Element, h: Element) -> Element:
        """Composition g after h."""
        m = self.m
        sg, g0, g1 = g
        sh, h0, h1 = h
        gc = (g0, g1)
        # e_j -> zeta^{h_j} e_{pi_h(j)} -> zeta^{h_j + g_{pi_h(j)}} e_{pi_g(pi_h(j))}
        c0 = (h0 + gc[sh]) % m
        c1 = (h1 + gc[1 - sh]) % m
        return (sg ^ sh, c0, c1)

    def power(self, g: Element, j: int) -> Element:
        out = self.identity()
        for _ in range(j % self.element_order(g)):
            out = self.mul(out, g)
        return out

    def inverse(self, g: Element) -> Element:
        s, c0, c1 = g
        m = self.m
        if s:
            return (1, (-c1) % m, (-c0) % m)
        return (0, (-c0) % m, (-c1) % m)

    def element_order(self, g: Element) -> int:
        k, x = 1, g
        while x != self.identity():
            x = self.mul(x, g)
            k += 1
        return k

    def matrix(self, g: Element) -> tuple[tuple[Cyclotomic, Cyclotomic], tuple[Cyclotomic, Cyclotomic]]:
        s, c0, c1 = g
        z0, z1 = root(self.m, c0), root(self.m, c1)
        if s:
            return ((ZERO, z1), (z0, ZERO))
        return ((z0, ZERO), (ZERO, z1))

    def trace(self, g: Element) -> Cyclotomic:
        s, c0, c1 = g
        return ZERO if s else root(self.m, c0) + root(self.m, c1)

    def det(self, g: Element) -> Cyclotomic:
        s, c0, c1 = g
        z = root(self.m, c0 + c1)
        return -z if s else z

    def fix_dim(self, g: Element, xi: Cyclotomic) -> int:
        """Dimension of the xi-eigenspace of g."""
        (a, b), (c, d) = self.matrix(g)
        a, d = a - xi, d - xi
        if not any((a, b, c, d)):
            return 2
        return 1 if (a * d - b * c).is_zero() else 0

    def eigenvector(self, g: Element, xi: Cyclotomic):
        """A spanning vector of the xi-eigenspace when it is a line, else None."""
        (a, b), (c, d) = self.matrix(g)
        a, d = a - xi, d - xi
        if self.fix_dim(g, xi) != 1:
            return None
        if a or b:
            return (-b, a)
        return (-d, c)

    def apply(self, g: Element, v):
        (a, b), (c, d) = self.matrix(g)
        return (a * v[0] + b * v[1], c * v[0] + d * v[1])

    def reflections(self) -> list[Element]:
        return [g for g in self.elements() if g != self.identity() and self.fix_dim(g, ONE) == 1]

    def hyperplane_orders(self) -> dict[int, int]:
        """Map e_H -> number of reflecting lines with that pointwise stabiliser order."""
        lines: dict[tuple, int] = {}
        for r in self.reflections():
            v = self.eigenvector(r, ONE)
            key = _line_key(v)
            lines[key] = lines.get(key, 1) + 1
        out: dict[int, int] = {}
        for size in lines.values():
            out[size] = out.get(size, 0) + 1
        return out

    def is_regular_vector(self, v) -> bool:
        return all(self.apply(r, v) != v for r in self.reflections())

    def regular_element(self, d: int) -> Element | None:
        """Some g with a zeta_d-eigenvector lying on no reflecting line."""
        xi = root(d, 1)
        for g in self.elements():
            k = self.fix_dim(g, xi)
            if k == 2:
                return g
            if k == 1 and self.is_regular_vector(self.eigenvector(g, xi)):
                return g
        return None


def _line_key(v) -> tuple:
    # normalise a nonzero vector up to scalars
    x, y = v
    if x.is_zero():
        return ("inf",)
    return ("slope", y * x.inverse())


@lru_cache(maxsize=None)
def _elements(m: int, p: int) -> list[Element]:
    return [(s, c0, c1) for s in (0, 1) for c0 in range(m) for c1 in range(m) if (c0 + c1) % p == 0]
