"""Reduced Milnor fibre cohomology for reflection groups of rank two."""

from __future__ import annotations

from dataclasses import dataclass

from .catalog import ReflectionGroupData, euler_coefficients
from .cyclotomic import Cyclotomic, root
from .errors import EvenNotSupported, MissingModel
from .groups import Cyclic, Dihedral, Gamma0, Monomial, Product, eps_power_label, table
from .reps import ClassFunction, GradedRep, RepElement, decompose, gammas
from .spectrum import Spectrum


@dataclass(frozen=True)
class Rank2Element:
    """(g, xi) in G x mu_m acting on V; k is the dimension of its fixed space."""

    g_matrix: tuple[tuple[Cyclotomic, Cyclotomic], tuple[Cyclotomic, Cyclotomic]]
    root: Cyclotomic

    @property
    def fix_dim(self) -> int:
        (a, b), (c, d) = self.g_matrix
        xi = self.root
        a, d = a - xi, d - xi
        if not any((a, b, c, d)):
            return 2
        return 1 if (a * d - b * c).is_zero() else 0


def os_character(d: int, elt: Rank2Element) -> Cyclotomic:
    """Trace of (g, xi) on H^1(F_0): (1 - d)^k."""
    return Cyclotomic.rational((1 - d) ** elt.fix_dim)


def h1_f0_monodromy(d: int) -> RepElement:
    """(d-1) gamma_0 + (d-2) sum_{i>0} gamma_i over mu_d."""
    if d < 2:
        raise ValueError("d must be at least 2")
    return RepElement(Cyclic(d), {0: d - 1, **{i: d - 2 for i in range(1, d)}})


def _chi(k: int) -> str:
    return f"chi{k}"


def h1_f0_dihedral(p: int) -> RepElement:
    """Closed formula for H^1(F_0) of G(p,p,2) as a Gamma_0 module."""
    if p < 3:
        raise ValueError("dihedral groups need p >= 3")
    g0 = Gamma0(Dihedral(p), 2 * p, 2)
    acc: dict = {}

    def add(lab, i, c=1):
        acc[(lab, i)] = acc.get((lab, i), 0) + c

    if p % 2:
        for i in range(p):
            if i % 2:
                add("1", i)
            elif i:
                add("eps", i)
        for k in range(1, (p - 1) // 2 + 1):
            for i in range(p):
                if i not in (k, p - k):
                    add(_chi(k), i)
    else:
        # the trivial and sign parts; see h1_f0_dihedral_printed for the other reading
        add("1", 0)
        for i in range(2, p, 2):
            add("1", i)
            add("eps", i)
        for i in range(p):
            if (i + p // 2) % 2 == 0 and i != p // 2:
                add("delta", i)
                add("eps.delta", i)
        for k in range(1, (p - 2) // 2 + 1):
            for i in range(p):
                if (i + k) % 2 == 0 and i not in (k, p - k):
                    add(_chi(k), i, 2)
            add(_chi(k), k)
            add(_chi(k), p - k)
    return RepElement(g0, acc)


def h1_f0_dihedral_printed(p: int) -> RepElement:
    """Even-p formula with eps (x) gamma_0 + 2 sum eps (x) gamma_i as its sign part.

    Kept for comparison only: it fails the Orlik–Solomon trace check and the
    Euler-characteristic check, both of which need 1 (x) gamma_0 here.
    """
    x = h1_f0_dihedral(p)
    if p % 2:
        return x
    g0 = x.group
    wrong = {("eps", 0): 1, **{("eps", i): 2 for i in range(2, p, 2)}}
    right = {("1", 0): 1, **{("1", i): 1 for i in range(2, p, 2)}, **{("eps", i): 1 for i in range(2, p, 2)}}
    return x - RepElement(g0, right) + RepElement(g0, wrong)


def uniform_gamma0(model) -> Gamma0:
    """Gamma_0 for a shipped uniform rank-two model (e = 2 in both families)."""
    if isinstance(model, Dihedral):
        return Gamma0(model, 2 * model.p, 2)
    if isinstance(model, Monomial) and model.m == 2 * model.p:
        d = 2 * model.p + 2
        return Gamma0(model, 2 * d, 2)
    raise MissingModel(f"no uniform rank-two model for {model}")


def h1_f0_uniform(model, e: int | None = None, d: int | None = None) -> RepElement:
    """Decompose the Orlik–Solomon class function over Gamma_0.

    The pair (g, zeta) fixes v when g v = zeta^{-1} v, since zeta acts on
    the fibre by scalar multiplication and cohomology is contravariant.
    """
    g0 = uniform_gamma0(model)
    if e is not None and e != g0.e:
        raise MissingModel(f"{model} is uniform with e = {g0.e}, not {e}")
    if d is not None and d != g0.d:
        raise MissingModel(f"{model} has d = {g0.d}, not {d}")
    t = table(g0)
    base = t.base
    vals = []
    for ci, k in t.reps:
        g = base.reps[ci]
        elt = Rank2Element(base.model.matrix(g), root(g0.m, -k))
        vals.append(os_character(g0.d, elt))
    return decompose(ClassFunction(g0, tuple(vals)))


def h0_general(e: int, d: int, G) -> RepElement:
    """sum_{i<e} eps^i (x) gamma_{di} over G x mu_{de}."""
    if e < 1:
        raise ValueError("e must be positive")
    gamma = Product(G, d * e)
    return RepElement(gamma, {(eps_power_label(G, i), d * i): 1 for i in range(e)})


def pd_rank2_monodromy(d: int) -> GradedRep:
    """mu_d-equivariant Poincaré–Deligne polynomial of F_0."""
    if d < 2:
        raise ValueError("d must be at least 2")
    c = Cyclic(d)
    u = RepElement(c, {i: i - 1 for i in range(2, d)})
    v = RepElement(c, {j: d - 1 - j for j in range(1, d - 1)})
    uv = RepElement(c, {0: d - 1})
    return GradedRep(c, {(0, 0, 0): RepElement(c, {0: 1}), (1, 0, 1): u, (0, 1, 1): v, (1, 1, 1): uv})


def spectrum_rank2(d: int) -> Spectrum:
    """Spectrum of d lines through the origin in C^2."""
    if d < 2:
        raise ValueError("d must be at least 2")
    acc: dict[int, int] = {d: d - 1}
    for i in range(1, d - 1):
        acc[i + 1] = acc.get(i + 1, 0) + i
    for j in range(1, d - 1):
        k = d + d - 1 - j
        acc[k] = acc.get(k, 0) + j
    return Spectrum.build(d, acc)


def weight_poly_dihedral(p: int) -> GradedRep:
    """Weight polynomial of F_0 for G(p,p,2), p odd, as stated without proof in the literature."""
    if p % 2 == 0:
        raise EvenNotSupported("the weight polynomial is only available for odd p")
    if p < 3:
        raise ValueError("dihedral groups need p >= 3")
    g0 = Gamma0(Dihedral(p), 2 * p, 2)
    half = (p - 1) // 2
    t1: dict = {}
    for i in range(1, p):
        lab = "1" if (i + 1) % 2 == 0 else "eps"
        t1[(lab, i)] = t1.get((lab, i), 0) + 1
        for k in range(1, half + 1):
            if k not in (i, p - i):
                t1[(_chi(k), i)] = t1.get((_chi(k), i), 0) + 1
    t2 = {(_chi(k), 0): 1 for k in range(1, half + 1)}
    return GradedRep(g0, {
        (0, 0, 0): RepElement(g0, {("1", 0): 1}),
        (0, 0, 1): RepElement(g0, t1),
        (0, 0, 2): RepElement(g0, t2),
    })


def euler_dimension(data: ReflectionGroupData) -> int:
    """chi(F) = sum_d chi(U(d)^0/G(d)) |G| m / d."""
    m = data.m
    total = 0
    for d, c in euler_coefficients(data).items():
        total += c * data.order * m // d
    return total


def h1_dim_nonuniform(data: ReflectionGroupData) -> tuple[RepElement, int]:
    """Monodromy structure of H^0(F) and dim H^1(F) from the Euler characteristic."""
    if data.rank != 2:
        raise ValueError(f"{data.name} does not have rank two")
    e, m = data.e, data.m
    d = m // e
    h0 = gammas(m, [d * i for i in range(e)])
    return h0, h0.dim() - euler_dimension(data)
