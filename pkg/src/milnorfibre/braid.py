"""Symmetric groups S_{ell+1}: Euler characteristics, the quotient F/G, and the known cohomologies."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .arrangement import DenseEdgeSummary, dense_edges_braid
from .checks import CheckReport
from .errors import DimensionMismatch, NotEffective, Unsupported
from .golden import load_golden
from .groups import MAX_SYMMETRIC, Cyclic, Gamma0, Product, Symmetric, table, trivial_label
from .reps import (GradedRep, RepElement, cyclic_generator, gammas, graded_map, induce_from_cyclic,
                   restrict_to_gamma0, theta)
from .rank2 import h0_general


def sym_gamma(ell: int) -> Product:
    if ell < 2 or ell + 1 > MAX_SYMMETRIC:
        raise Unsupported(f"ell = {ell} is outside 2..{MAX_SYMMETRIC - 1}")
    return Product(Symmetric(ell + 1), ell * (ell + 1))


def regular_cyclic(ell: int, d: int) -> list[tuple[int, int]]:
    """Powers of (g_d, zeta_d), g_d a product of floor((ell+1)/d) disjoint d-cycles."""
    group = sym_gamma(ell)
    n = ell + 1
    ct = (d,) * (n // d) + (1,) * (n % d)
    ci = table(group.g).class_index(ct)
    return cyclic_generator(group, ci, group.n // d, d)


def euler_sym(ell: int) -> RepElement:
    """Ind R(ell) + Ind R(ell+1) - Ind R(h), h = ell/2 or (ell+1)/2 by parity."""
    group = sym_gamma(ell)
    h = ell // 2 if ell % 2 == 0 else (ell + 1) // 2

    def ind(d):
        return induce_from_cyclic(group, regular_cyclic(ell, d), d)

    return ind(ell) + ind(ell + 1) - ind(h)


def quotient_euler_sym(ell: int) -> RepElement:
    """The monodromy Euler characteristic of F/G written without cancellation."""
    sym_gamma(ell)
    m = ell * (ell + 1)
    if ell % 2 == 0:
        plus = [(ell + 1) * j for j in range(ell)]
        minus = [(ell // 2) * (2 * j + 1) for j in range(ell + 1)]
    else:
        plus = [ell * j for j in range(ell + 1)]
        minus = [((ell + 1) // 2) * (2 * j + 1) for j in range(ell)]
    return gammas(m, plus) - gammas(m, minus)


def _order_class(m: int, order: int) -> list[int]:
    """Indices i in Z/m with gamma_i of the given order."""
    return [i for i in range(m) if m // gcd(i, m) == order]


def dps_graded(ell: int) -> GradedRep:
    """H^*(F/G) over mu_m in terms of the orders of characters."""
    sym_gamma(ell)
    m = ell * (ell + 1)
    c = Cyclic(m)
    acc: dict[int, RepElement] = {}
    for h in range(2, ell + 2):
        if ell % h and (ell + 1) % h:
            continue
        k = ((ell + 1) // h) * (h - 2)
        if h % 2:
            order = 2 * h
        elif h % 4 == 2:
            order = h // 2
        else:
            order = h
        x = gammas(m, _order_class(m, order))
        acc[k] = acc[k] + x if k in acc else x
    return GradedRep.from_t(c, acc)


def monodromy_degree_check(g: GradedRep, edges: DenseEdgeSummary) -> CheckReport:
    """A character of order o > 1 in degree s needs a dense edge with codim <= s+1 and o | m_X."""
    if not isinstance(g.group, Cyclic):
        raise ValueError("expected a polynomial over mu_d")
    rep = CheckReport("monodromy order versus degree", anchor="dense edges bound the monodromy order")
    d = g.group.n
    for (_, _, s), r in g.items():
        for i, mult in r.items():
            if not mult:
                continue
            o = d // gcd(i, d)
            if s == 0:
                rep.require(o == 1, f"gamma_{i} occurs in degree 0")
                continue
            if o == 1:
                continue
            ok = any(e.codim <= s + 1 and e.multiplicity % o == 0 for e in edges.edges)
            rep.require(ok, f"gamma_{i} of order {o} in degree {s} has no dense edge of codim <= {s + 1} with {o} | m_X")
    return rep


def faithful_check(g: GradedRep, r: int, chiU: int) -> CheckReport:
    """Faithful characters of mu_d live in degree r-1 only, each with multiplicity |chi(U)|."""
    if not isinstance(g.group, Cyclic):
        raise ValueError("expected a polynomial over mu_d")
    rep = CheckReport("faithful characters", anchor="faithful characters sit in the top degree")
    d = g.group.n
    faithful = _order_class(d, d)
    for i in faithful:
        for j in g.t_degrees():
            mult = sum(x[i] for (_, _, t), x in g.items() if t == j)
            if j == r - 1:
                rep.require(mult == abs(chiU), f"gamma_{i} has multiplicity {mult} in degree {j}, expected {abs(chiU)}")
            else:
                rep.require(mult == 0, f"faithful gamma_{i} occurs in degree {j}")
        if r - 1 not in g.t_degrees():
            rep.require(chiU == 0, f"gamma_{i} is missing from degree {r - 1}")
    return rep


def lift(x: RepElement, group: Product) -> RepElement:
    """rho -> rho (x) gamma_0."""
    return RepElement(group, {(lab, 0): c for lab, c in x.items()})


def assemble_rank3(chi: RepElement, h0: RepElement, pgu: GradedRep, dim_h1: int) -> tuple[RepElement, RepElement]:
    """Recover H^1(F) and H^2(F) from the Euler characteristic when the rank is three.

    H^1 contains the negative part of chi and Phi (H^1(U) (x) gamma_0); the
    dimension count closes the argument, and H^2 follows from chi.
    """
    group = chi.group
    from_u = h0 * lift(pgu.t_coefficient(1), group)
    h1 = chi.negative_part().join(from_u)
    if h1.dim() != dim_h1:
        raise DimensionMismatch(f"lower bound for H^1 has dimension {h1.dim()}, expected {dim_h1}")
    h2 = chi - h0 + h1
    if not h2.is_effective():
        raise NotEffective(f"H^2 = chi - H^0 + H^1 has negative part {h2.negative_part()}")
    return h1, h2


@dataclass(frozen=True)
class GoldenCohomology:
    ell: int
    group: Product
    graded: GradedRep  # H^*(F) as a Gamma-module, t-graded
    p0: GradedRep  # P_0 with graded = Phi * P_0
    pd: GradedRep | None  # Gamma_0 Poincare-Deligne polynomial when known
    citations: dict

    @property
    def d(self) -> int:
        return self.group.n // 2

    def f0(self) -> GradedRep:
        """H^*(F_0) as a Gamma_0-module."""
        g0 = Gamma0(self.group.g, self.group.n, 2)
        return graded_map(self.p0, lambda r: restrict_to_gamma0(r, 2), g0)

    def monodromy(self) -> GradedRep:
        """H^*(F_0) as a mu_d-module."""
        return graded_map(self.p0, lambda r: theta(r, self.d), Cyclic(self.d))

    def invariant_part(self) -> GradedRep:
        triv = trivial_label(self.group.g)
        return graded_map(self.graded, lambda r: r.isotypic(triv), Cyclic(self.group.n))


def golden_cohomology_sym(ell: int) -> GoldenCohomology:
    if ell not in (2, 3, 4):
        raise Unsupported("decompositions are known for S_3, S_4 and S_5 only")
    gd = load_golden()
    key = f"s{ell + 1}"
    rec = gd[f"{key}.cohomology"]
    pd = gd.value(f"{key}.pd") if f"{key}.pd" in gd.records else None
    return GoldenCohomology(ell, sym_gamma(ell), rec.value, gd.value(f"{key}.p0"), pd, dict(rec.citations))


def h0_sym(ell: int) -> RepElement:
    m = ell * (ell + 1)
    return h0_general(2, m // 2, Symmetric(ell + 1))


def chi_u_sym(ell: int) -> int:
    """(-1)^(ell-1) (ell-1)!: coexponents 1..ell."""
    out = 1
    for c in range(2, ell + 1):
        out *= c - 1
    return (-1) ** (ell - 1) * out


__all__ = [
    "DenseEdgeSummary", "GoldenCohomology", "assemble_rank3", "chi_u_sym", "dense_edges_braid", "dps_graded",
    "euler_sym", "faithful_check", "golden_cohomology_sym", "h0_sym", "lift", "monodromy_degree_check",
    "quotient_euler_sym", "regular_cyclic", "sym_gamma",
]
