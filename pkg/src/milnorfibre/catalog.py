"""Reflection-group numerics, the regular-number poset and Euler characteristics."""

from __future__ import annotations

import json
import os
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache, reduce
from importlib import resources
from math import comb, gcd, prod
from pathlib import Path

from .errors import MissingCatalogEntry, MissingModel, NonIntegral, NotInPoset, ParseError, Unsupported
from .groups import Dihedral, Monomial, Product, Symmetric, Cyclic, eps_power_label, table
from .reps import RepElement, cyclic_generator, induce_from_cyclic

CATALOG_ENV = "MILNORFIBRE_CATALOG"
MAX_SYMMETRIC = 8


@dataclass(frozen=True)
class ReflectionGroupData:
    """Numerical data of an irreducible reflection group acting essentially.

    ``hyperplane_orders`` maps e_H to the number of hyperplanes with that
    stabiliser order; it is None when the counts are not on record.
    """

    name: str
    family: str
    params: tuple[int, ...]
    rank: int
    degrees: tuple[int, ...]
    coexponents: tuple[int, ...]
    hyperplane_orders: dict[int, int] | None
    chiU0_overrides: dict[int, int] = field(default_factory=dict)
    citation: str = ""
    recorded_e_values: tuple[int, ...] = ()  # used when counts are absent

    def __hash__(self):
        return hash((self.name, self.family, self.params, self.degrees, self.coexponents))

    @property
    def exponents(self) -> tuple[int, ...]:
        return tuple(x - 1 for x in self.degrees)

    @property
    def order(self) -> int:
        return prod(self.degrees)

    @property
    def e_values(self) -> tuple[int, ...]:
        if self.hyperplane_orders is None:
            return tuple(sorted(self.recorded_e_values))
        return tuple(sorted(self.hyperplane_orders))

    def _counts(self) -> dict[int, int]:
        if self.hyperplane_orders is None:
            raise MissingCatalogEntry(f"{self.name}: hyperplane counts per order are not on record")
        return self.hyperplane_orders

    @property
    def N_G(self) -> int:
        return sum(self._counts().values())

    @property
    def n_G(self) -> int:
        return sum((e - 1) * c for e, c in self._counts().items())

    @property
    def m(self) -> int:
        return sum(e * c for e, c in self._counts().items())

    @property
    def e(self) -> int:
        """gcd of the e_H; the number of components of F."""
        return reduce(gcd, self._counts())

    @property
    def is_uniform(self) -> bool:
        return len(self._counts()) == 1

    @property
    def d(self) -> int:
        """Degree of the reduced polynomial: m / e."""
        return self.m // self.e


# --------------------------------------------------------------------------
# regular-number poset


@dataclass(frozen=True)
class RegularPoset:
    """Regular numbers d with d = gcd{d_i : d | d_i}; e <= d iff d | e."""

    elements: tuple[int, ...]
    top: int

    def leq(self, e: int, d: int) -> bool:
        return e % d == 0

    def below(self, d: int) -> list[int]:
        return [e for e in self.elements if e % d == 0]

    def __contains__(self, d) -> bool:
        return d in self.elements

    def mu(self, e: int, d: int) -> int:
        """Möbius function mu(e, d) of the poset (zero unless e <= d)."""
        for x in (e, d):
            if x not in self.elements:
                raise NotInPoset(f"{x} is not in {self.elements}")
        return _mu(self.elements, e, d)


@lru_cache(maxsize=None)
def _mu(elements: tuple[int, ...], e: int, d: int) -> int:
    if e == d:
        return 1
    if e % d:
        return 0
    # sum over e <= z <= d of mu(e, z) vanishes
    return -sum(_mu(elements, e, z) for z in elements if e % z == 0 and z % d == 0 and z != d)


def _is_regular(d: int, degrees, codegrees) -> bool:
    # d is regular iff it divides as many degrees as codegrees
    return sum(1 for x in degrees if x % d == 0) == sum(1 for x in codegrees if x % d == 0)


def regular_poset(degrees, coexponents=None) -> RegularPoset:
    """Poset of regular numbers d equal to the gcd of the degrees they divide.

    Without coexponents only the gcd condition is applied.  With them, the
    codegrees are taken to be coexponent - 1 and non-regular d are dropped.
    """
    degrees = tuple(degrees)
    if not degrees:
        raise ValueError("degrees must be nonempty")
    codegrees = None if coexponents is None else tuple(c - 1 for c in coexponents)
    out = []
    for d in range(1, max(degrees) + 1):
        divisible = [x for x in degrees if x % d == 0]
        if not divisible or reduce(gcd, divisible) != d:
            continue
        if codegrees is not None and not _is_regular(d, degrees, codegrees):
            continue
        out.append(d)
    return RegularPoset(tuple(out), reduce(gcd, degrees))


def mobius(P: RegularPoset, d: int) -> int:
    """mu(d, top)."""
    return P.mu(d, P.top)


def poset_of(data: ReflectionGroupData) -> RegularPoset:
    if not data.coexponents:
        raise MissingCatalogEntry(f"{data.name}: coexponents are needed to test regularity")
    return regular_poset(data.degrees, data.coexponents)


# --------------------------------------------------------------------------
# Euler characteristics


def chi_U(data: ReflectionGroupData) -> int:
    """(-1)^(r-1) prod_{i>=2} (m_i* - 1)."""
    if not data.coexponents:
        raise MissingCatalogEntry(f"{data.name}: coexponents are not on record")
    co = sorted(data.coexponents)
    return (-1) ** (len(co) - 1) * prod(c - 1 for c in co[1:])


def centralizer_data(data: ReflectionGroupData, d: int) -> ReflectionGroupData:
    """Numerical data of G(d), the group induced on the zeta_d-eigenspace of g_d.

    Its degrees are the degrees of G divisible by d, and likewise for the
    codegrees; hyperplane counts are not derived.
    """
    P = poset_of(data)
    if d not in P:
        raise NotInPoset(f"{d} is not in {P.elements}")
    degs = tuple(x for x in data.degrees if x % d == 0)
    co = tuple(sorted(c for c in data.coexponents if (c - 1) % d == 0))
    return ReflectionGroupData(
        name=f"{data.name}({d})", family="centralizer", params=(d,), rank=len(degs),
        degrees=degs, coexponents=co, hyperplane_orders=None,
    )


def _c(data: ReflectionGroupData) -> Fraction:
    return Fraction(chi_U(data), data.order)


def euler_coefficients(data: ReflectionGroupData, catalog: dict | None = None) -> dict[int, int]:
    """chi(U(d)^0 / G(d)) for every d in the poset, by Möbius inversion.

    ``catalog`` may map d to the data of G(d); otherwise G(d) is derived
    from the degrees and codegrees of G.
    """
    P = poset_of(data)
    groups = {}
    for d in P.elements:
        if catalog is not None:
            if d not in catalog:
                raise MissingCatalogEntry(f"no catalog entry for G({d}) of {data.name}")
            groups[d] = catalog[d]
        else:
            groups[d] = centralizer_data(data, d)
    out = {}
    for d in P.elements:
        val = d * sum(P.mu(e, d) * _c(groups[e]) for e in P.below(d))
        if val.denominator != 1:
            raise NonIntegral(f"chi(U({d})^0/G({d})) = {val} for {data.name}")
        out[d] = int(val)
    return out


def chi_U0_mod_G(data: ReflectionGroupData, catalog: dict | None = None) -> int:
    """chi(U^0/G) = |Z(G)| sum_d mu(d) chi(U(d)) / |G(d)|."""
    P = poset_of(data)
    return euler_coefficients(data, catalog)[P.top]


def check_overrides(data: ReflectionGroupData) -> list[str]:
    """Disagreements between the Möbius values and the recorded ones."""
    computed = euler_coefficients(data)
    bad = []
    for d, v in data.chiU0_overrides.items():
        got = computed.get(d, 0)
        if got != v:
            bad.append(f"{data.name}: d={d} computed {got}, recorded {v}")
    return bad


# --------------------------------------------------------------------------
# equivariant assembly


def group_spec(data: ReflectionGroupData):
    """Descriptor of a group with a character table, or MissingModel."""
    if data.family == "symmetric":
        return Symmetric(data.params[0])
    if data.family == "dihedral":
        return Dihedral(data.params[0])
    if data.family == "imprimitive":
        r, p, ell = data.params
        if ell == 2:
            return Dihedral(r) if r == p and r >= 3 else Monomial(r, p)
    raise MissingModel(f"{data.name}: no explicit model or character table is shipped")


def regular_generator(data: ReflectionGroupData, d: int) -> list[tuple[int, int]]:
    """Powers of (g_d, zeta_d) in G x mu_m as (G-class index, exponent mod m)."""
    spec = group_spec(data)
    m = data.m
    if m % d:
        raise ValueError(f"{d} does not divide m = {m}")
    t = table(spec)
    if isinstance(spec, Symmetric):
        n = spec.n
        ct = tuple([d] * (n // d) + [1] * (n % d))
        ci = t.class_index(ct)
    else:
        model = t.model
        g = model.regular_element(d)
        if g is None:
            raise MissingCatalogEntry(f"{data.name}: no {d}-regular element found")
        ci = t.class_index(g)
    return cyclic_generator(Product(spec, m), ci, m // d, d)


def equivariant_euler(data: ReflectionGroupData) -> RepElement:
    """sum_d chi(U(d)^0/G(d)) Ind_{R(d)}(1) over G x mu_m."""
    spec = group_spec(data)
    gamma = Product(spec, data.m)
    out = RepElement(gamma, {})
    for d, c in euler_coefficients(data).items():
        if c:
            out = out + induce_from_cyclic(gamma, regular_generator(data, d), d).scale(c)
    return out


def monodromy_euler_quotient(data: ReflectionGroupData) -> RepElement:
    """The 1_G-isotypic part: sum_d chi(U(d)^0/G(d)) sum_j gamma_{dj} over mu_m."""
    m = data.m
    acc: dict[int, int] = {}
    for d, c in euler_coefficients(data).items():
        if c:
            for j in range(m // d):
                acc[d * j] = acc.get(d * j, 0) + c
    return RepElement(Cyclic(m), acc)


def factor_phi(data: ReflectionGroupData, e: int) -> RepElement:
    """Phi = sum_{i<e} eps^i (x) gamma_{di}, d = m / e."""
    if any(x % e for x in data._counts()):
        raise ValueError(f"{e} does not divide every e_H of {data.name}")
    spec = group_spec(data)
    m = data.m
    d = m // e
    return RepElement(Product(spec, m), {(eps_power_label(spec, i), d * i): 1 for i in range(e)})


# --------------------------------------------------------------------------
# catalog file and descriptors


def _record(raw: dict) -> ReflectionGroupData:
    ho = raw.get("hyperplane_orders")
    return ReflectionGroupData(
        name=raw["name"],
        family=raw["family"],
        params=tuple(raw.get("params", ())),
        rank=raw["rank"],
        degrees=tuple(raw["degrees"]),
        coexponents=tuple(raw["coexponents"] or ()),
        hyperplane_orders=None if ho is None else {int(k): v for k, v in ho.items()},
        chiU0_overrides={int(k): v for k, v in raw.get("chiU0_overrides", {}).items()},
        citation=raw.get("citation", ""),
        recorded_e_values=tuple(raw.get("e_values", ())),
    )


def catalog_path() -> Path | None:
    env = os.environ.get(CATALOG_ENV)
    return Path(env) if env else None


def load_catalog(path: str | Path | None = None) -> dict[str, ReflectionGroupData]:
    """Read the catalog file; the environment variable overrides the bundled copy."""
    path = Path(path) if path is not None else catalog_path()
    if path is None:
        text = resources.files("milnorfibre").joinpath("data/catalog.json").read_text()
    else:
        text = path.read_text()
    raw = json.loads(text)
    if raw.get("format") != "milnorfibre-catalog" or raw.get("version") != 1:
        raise ParseError("unrecognised catalog file")
    return {r["name"]: _record(r) for r in raw["groups"]}


@lru_cache(maxsize=None)
def _default_catalog() -> dict[str, ReflectionGroupData]:
    return load_catalog()


def catalog() -> dict[str, ReflectionGroupData]:
    if catalog_path() is not None:
        return load_catalog()
    return _default_catalog()


_DESCRIPTOR = re.compile(r"^(sym|dihedral|imprimitive|monomial|table1|table4):([A-Za-z0-9_,]+)$")


def descriptor_name(descriptor: str) -> str:
    """Catalog key for a descriptor such as "sym:4" or "imprimitive:3,1,2"."""
    m = _DESCRIPTOR.match(descriptor.strip())
    if not m:
        raise ParseError(f"cannot parse group descriptor {descriptor!r}")
    kind, arg = m.groups()
    try:
        if kind == "sym":
            return f"S{int(arg)}"
        if kind == "dihedral":
            return f"G({int(arg)},{int(arg)},2)"
        if kind in ("imprimitive", "monomial"):
            parts = [int(x) for x in arg.split(",")]
            if kind == "monomial" and len(parts) == 2:
                parts.append(2)
            if len(parts) != 3:
                raise ValueError
            if parts[:2] == [1, 1]:
                return f"S{parts[2]}"
            return "G({},{},{})".format(*parts)
    except ValueError as exc:
        raise ParseError(f"bad parameters in {descriptor!r}") from exc
    name = arg.upper()
    return name if name.startswith("G") else f"G{name}"


def get_group(descriptor: str) -> ReflectionGroupData:
    name = descriptor_name(descriptor)
    cat = catalog()
    if name not in cat:
        raise Unsupported(f"{name} is not in the catalog")
    return cat[name]


# --------------------------------------------------------------------------
# record builders (used by the catalog build script and by tests)


def symmetric_record(n: int) -> ReflectionGroupData:
    """S_n on the essential (n-1)-dimensional representation."""
    ell = n - 1
    overrides = {d: 0 for d in regular_poset(range(2, n + 1), range(1, n)).elements}
    overrides[ell] = 1
    overrides[ell + 1] = 1
    half = ell // 2 if ell % 2 == 0 else (ell + 1) // 2
    overrides[half] = -1
    return ReflectionGroupData(
        name=f"S{n}", family="symmetric", params=(n,), rank=ell,
        degrees=tuple(range(2, n + 1)), coexponents=tuple(range(1, n)),
        hyperplane_orders={2: comb(n, 2)}, chiU0_overrides=overrides,
        citation="symmetric-group Euler values",
    )


def imprimitive_r1_record(r: int, ell: int) -> ReflectionGroupData:
    """G(r,1,ell), r >= 2: coordinate hyperplanes of order r and ell(ell-1)r/2 of order 2."""
    counts = {r: ell}
    if ell >= 2:
        counts[2] = counts.get(2, 0) + r * comb(ell, 2)
    value = 1 if ell == 1 else (-1 if ell == 2 else 0)
    return ReflectionGroupData(
        name=f"G({r},1,{ell})", family="imprimitive", params=(r, 1, ell), rank=ell,
        degrees=tuple(r * k for k in range(1, ell + 1)),
        coexponents=tuple(1 + r * k for k in range(ell)),
        hyperplane_orders=counts,
        chiU0_overrides={reduce(gcd, [r * k for k in range(1, ell + 1)]): value},
        citation="G(r,1,l) Euler values",
    )


def rank2_coexponents(n_hyperplanes: int) -> tuple[int, int]:
    # the complement of N lines through the origin has Poincaré polynomial (1+t)(1+(N-1)t)
    return (1, n_hyperplanes - 1)


def rank2_record(name: str, family: str, params, degrees, counts: dict | None, citation: str = "") -> ReflectionGroupData:
    """A rank-two record; the coexponents need the total number of lines."""
    if counts is None:
        raise MissingCatalogEntry(f"{name}: the number of lines is needed for the coexponents")
    return ReflectionGroupData(
        name=name, family=family, params=tuple(params), rank=2, degrees=tuple(sorted(degrees)),
        coexponents=rank2_coexponents(sum(counts.values())), hyperplane_orders=dict(counts),
        citation=citation,
    )


def dihedral_record(p: int) -> ReflectionGroupData:
    return rank2_record(f"G({p},{p},2)", "dihedral", (p,), (2, p), {2: p}, "dihedral groups")


def imprimitive_rank2_record(r: int, p: int) -> ReflectionGroupData:
    """G(r,p,2): r lines x = zeta y of order 2, and two coordinate lines of order r/p."""
    if r % p:
        raise ValueError("p must divide r")
    e = r // p
    counts = {2: r}
    if e > 1:
        counts[e] = counts.get(e, 0) + 2
    return rank2_record(f"G({r},{p},2)", "imprimitive", (r, p, 2), (r, 2 * e), counts,
                        "imprimitive rank-two groups, counts from the monomial model")


# uniform exceptional groups of rank two: (name, e, number of lines, degrees)
TABLE1 = (
    ("G4", 3, 4, (4, 6)), ("G5", 3, 8, (6, 12)), ("G8", 4, 6, (8, 12)), ("G12", 2, 12, (6, 8)),
    ("G13", 2, 18, (8, 12)), ("G16", 5, 12, (20, 30)), ("G20", 3, 20, (12, 30)), ("G22", 2, 30, (12, 20)),
)

# non-uniform exceptional groups of rank two: (name, e_H values, degrees)
TABLE4 = (
    ("G6", (2, 3), (4, 12)), ("G7", (2, 3), (12, 12)), ("G9", (2, 4), (8, 24)), ("G10", (3, 4), (12, 24)),
    ("G11", (2, 3, 4), (24, 24)), ("G14", (2, 3), (6, 24)), ("G15", (2, 3, 4), (12, 24)),
    ("G17", (2, 5), (20, 60)), ("G18", (3, 5), (30, 60)), ("G19", (2, 3, 5), (60, 60)),
    ("G21", (2, 3), (12, 60)),
)


def table1_record(name: str, e: int, lines: int, degrees) -> ReflectionGroupData:
    return rank2_record(name, "table1", (), degrees, {e: lines}, "uniform rank-two groups table")
