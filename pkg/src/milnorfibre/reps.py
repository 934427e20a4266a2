"""Class functions, representation-ring elements and graded polynomials."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .cyclotomic import Cyclotomic, ZERO, root
from .errors import GroupMismatch, NonIntegral
from .groups import (
    Abstract, Cyclic, Gamma0, Product, canonical_gamma0_label, eps_power_label,
    is_pair_label, label_sort_key, table, tensor_labels, trivial_label,
)


# --------------------------------------------------------------------------
# class functions


@dataclass(frozen=True)
class ClassFunction:
    group: object
    values: tuple[Cyclotomic, ...]

    def __post_init__(self):
        if len(self.values) != len(table(self.group).reps):
            raise ValueError("one value per conjugacy class is required")

    @property
    def class_sizes(self) -> list[int]:
        return table(self.group).sizes

    @property
    def class_reps(self) -> list:
        return table(self.group).reps

    def __add__(self, other: "ClassFunction") -> "ClassFunction":
        _same(self.group, other.group)
        return ClassFunction(self.group, tuple(a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other: "ClassFunction") -> "ClassFunction":
        _same(self.group, other.group)
        return ClassFunction(self.group, tuple(a - b for a, b in zip(self.values, other.values)))

    def scale(self, c) -> "ClassFunction":
        return ClassFunction(self.group, tuple(v * c for v in self.values))


def irreducible(group, label) -> ClassFunction:
    return ClassFunction(group, table(group).char(label))


def regular_character(group) -> ClassFunction:
    t = table(group)
    return ClassFunction(group, tuple(Cyclotomic.rational(t.order if i == 0 else 0)
                                      for i in range(len(t.reps))))


def inner_product(f: ClassFunction, g: ClassFunction) -> Fraction:
    """(1/|G|) sum over classes of size * f * conj(g)."""
    _same(f.group, g.group)
    return table(f.group).inner(f.values, g.values)


def decompose(f: ClassFunction) -> "RepElement":
    """Multiplicities of every irreducible in a virtual character."""
    group = f.group
    if isinstance(group, Product):
        return _decompose_product(f)
    t = table(group)
    out = {}
    for lab in t.labels:
        c = t.inner(f.values, t.char(lab))
        if c.denominator != 1:
            raise NonIntegral(f"multiplicity {c} of {lab!r} is not an integer")
        if c:
            out[lab] = int(c)
    return RepElement(group, out)


def _decompose_product(f: ClassFunction) -> "RepElement":
    # Fourier transform along mu_N first, then the G inner products
    t = table(f.group)
    base, n = t.base, t.n
    nc = len(base.reps)
    rows = [f.values[ci * n:(ci + 1) * n] for ci in range(nc)]
    out = {}
    for i in range(n):
        conj_chars = [root(n, -i * k) for k in range(n)]
        column = []
        for row in rows:
            s = ZERO
            for v, z in zip(row, conj_chars):
                if v:
                    s = s + v * z
            column.append(s * Fraction(1, n))
        for lab in base.labels:
            c = base.inner(column, base.char(lab))
            if c.denominator != 1:
                raise NonIntegral(f"multiplicity {c} of {(lab, i)!r} is not an integer")
            if c:
                out[(lab, i)] = int(c)
    return RepElement(f.group, out)


def _same(a, b):
    if a != b:
        raise GroupMismatch(f"{a} vs {b}")


# --------------------------------------------------------------------------
# representation ring


class RepElement:
    """Finitely supported integer combination of irreducible labels."""

    __slots__ = ("group", "_terms")

    def __init__(self, group, terms: Mapping | Iterable = ()):
        self.group = group
        acc: dict = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for lab, c in items:
            if isinstance(group, Gamma0):
                lab = canonical_gamma0_label(group, lab)
            elif isinstance(group, Cyclic):
                lab = lab % group.n
            elif isinstance(group, Product):
                lab = (lab[0], lab[1] % group.n)
            acc[lab] = acc.get(lab, 0) + int(c)
        self._terms = {k: v for k, v in acc.items() if v}

    # -- basic protocol -----------------------------------------------
    def items(self):
        return sorted(self._terms.items(), key=lambda kv: label_sort_key(kv[0]))

    def labels(self):
        return [lab for lab, _ in self.items()]

    def __getitem__(self, label) -> int:
        if isinstance(self.group, Gamma0):
            label = canonical_gamma0_label(self.group, label)
        elif isinstance(self.group, Cyclic):
            label = label % self.group.n
        elif isinstance(self.group, Product):
            label = (label[0], label[1] % self.group.n)
        return self._terms.get(label, 0)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self._terms
        if not isinstance(other, RepElement):
            return NotImplemented
        return self.group == other.group and self._terms == other._terms

    def __hash__(self):
        return hash((self.group, frozenset(self._terms.items())))

    def __repr__(self):
        return f"RepElement({self.group}, {format_rep(self)})"

    # -- arithmetic ---------------------------------------------------
    def __add__(self, other: "RepElement") -> "RepElement":
        if isinstance(other, int) and other == 0:
            return self
        _same(self.group, other.group)
        acc = dict(self._terms)
        for k, v in other._terms.items():
            acc[k] = acc.get(k, 0) + v
        return RepElement(self.group, acc)

    __radd__ = __add__

    def __neg__(self):
        return RepElement(self.group, {k: -v for k, v in self._terms.items()})

    def __sub__(self, other: "RepElement") -> "RepElement":
        return self + (-other)

    def scale(self, c: int) -> "RepElement":
        return RepElement(self.group, {k: c * v for k, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        _same(self.group, other.group)
        return _tensor(self, other)

    __rmul__ = __mul__

    # -- predicates and summaries ---------------------------------------
    def is_effective(self) -> bool:
        return all(v >= 0 for v in self._terms.values())

    def positive_part(self) -> "RepElement":
        return RepElement(self.group, {k: v for k, v in self._terms.items() if v > 0})

    def negative_part(self) -> "RepElement":
        """The part with negative coefficients, negated (so it is effective)."""
        return RepElement(self.group, {k: -v for k, v in self._terms.items() if v < 0})

    def join(self, other: "RepElement") -> "RepElement":
        """Termwise maximum: the smallest element dominating both."""
        _same(self.group, other.group)
        keys = set(self._terms) | set(other._terms)
        return RepElement(self.group, {k: max(self[k], other[k]) for k in keys})

    def leq(self, other: "RepElement") -> bool:
        _same(self.group, other.group)
        keys = set(self._terms) | set(other._terms)
        return all(self[k] <= other[k] for k in keys)

    def dim(self) -> int:
        g = self.group
        if isinstance(g, Cyclic):
            return sum(self._terms.values())
        if isinstance(g, Abstract):
            return sum(self._terms.values())
        if isinstance(g, (Product, Gamma0)):
            if isinstance(g.g, Abstract):
                return sum(self._terms.values())
            base = table(g.g)
            return sum(v * base.dim(lab) for (lab, _), v in self._terms.items())
        t = table(g)
        return sum(v * t.dim(lab) for lab, v in self._terms.items())

    def character(self) -> ClassFunction:
        t = table(self.group)
        vals = [ZERO] * len(t.reps)
        for lab, c in self._terms.items():
            vals = [a + b * c for a, b in zip(vals, t.char(lab))]
        return ClassFunction(self.group, tuple(vals))

    def isotypic(self, g_label) -> "RepElement":
        """For pair-labelled groups: the gamma-combination multiplying one G-irreducible."""
        n = self.group.n if isinstance(self.group, Product) else self.group.m
        return RepElement(Cyclic(n), {i: v for (lab, i), v in self._terms.items() if lab == g_label})


def zero(group) -> RepElement:
    return RepElement(group, {})


def one(group) -> RepElement:
    return RepElement(group, {trivial_label(group): 1})


def gammas(n: int, indices: Iterable[int], mult: int = 1) -> RepElement:
    """sum of mult * gamma_i over mu_n (indices may repeat)."""
    acc: dict = {}
    for i in indices:
        acc[i % n] = acc.get(i % n, 0) + mult
    return RepElement(Cyclic(n), acc)


def pair(group, g_label, gamma_combination: RepElement, mult: int = 1) -> RepElement:
    """g_label (x) (sum of gammas) inside a product or gamma0 group."""
    return RepElement(group, {(g_label, i): mult * c for i, c in gamma_combination.items()})


def _tensor(a: RepElement, b: RepElement) -> RepElement:
    g = a.group
    if isinstance(g, Cyclic):
        acc: dict = {}
        for i, x in a._terms.items():
            for j, y in b._terms.items():
                k = (i + j) % g.n
                acc[k] = acc.get(k, 0) + x * y
        return RepElement(g, acc)
    if isinstance(g, (Product, Gamma0)):
        acc = {}
        for (la, i), x in a._terms.items():
            for (lb, j), y in b._terms.items():
                for lab, c in tensor_labels(g.g, la, lb).items():
                    key = (lab, i + j)
                    acc[key] = acc.get(key, 0) + x * y * c
        return RepElement(g, acc)  # constructor canonicalises gamma0 labels
    acc = {}
    for la, x in a._terms.items():
        for lb, y in b._terms.items():
            for lab, c in tensor_labels(g, la, lb).items():
                acc[lab] = acc.get(lab, 0) + x * y * c
    return RepElement(g, acc)


# --------------------------------------------------------------------------
# induction and restriction


def cyclic_generator(group, g_class: int, root_exp: int, n: int) -> list[tuple[int, int]]:
    """Powers j = 0..n-1 of (g, zeta_m^root_exp) as (G-class index, exponent mod m)."""
    base = table(group.g)
    m = group.n if isinstance(group, Product) else group.m
    return [(base.power_class(g_class, j), (root_exp * j) % m) for j in range(n)]


def induce_from_cyclic(group: Product, gen: list[tuple[int, int]], d: int) -> RepElement:
    """Ind_R^Gamma(1) for the cyclic subgroup R of order d described by ``gen``.

    By Frobenius reciprocity the multiplicity of rho (x) gamma_i is
    (1/d) sum_j rho(g^j) zeta^{i k_j}, with (g^j, zeta_m^{k_j}) the j-th power.
    """
    if not isinstance(group, Product):
        raise GroupMismatch("induction from a cyclic subgroup needs a product group")
    if len(gen) != d:
        raise ValueError("gen must list the d powers of the generator")
    base, m = table(group.g), group.n
    out = {}
    for lab in base.labels:
        vals = base.char(lab)
        for i in range(m):
            s = ZERO
            for ci, k in gen:
                s = s + vals[ci] * root(m, i * k)
            c = s.as_rational() / d
            if c.denominator != 1:
                raise NonIntegral(f"induced multiplicity {c} of {(lab, i)!r}")
            if c:
                out[(lab, i)] = int(c)
    return RepElement(group, out)


def phi(group, e: int) -> RepElement:
    """Phi = sum_{i<e} eps^i (x) gamma_{d i} over G x mu_m, d = m / e."""
    m = group.n
    d = m // e
    return RepElement(group, {(eps_power_label(group.g, i), d * i): 1 for i in range(e)})


def induce_gamma0(x: RepElement) -> RepElement:
    """Ind from Gamma_0 to Gamma, computed as Phi times the canonical lift."""
    g0 = x.group
    if not isinstance(g0, Gamma0):
        raise GroupMismatch("induce_gamma0 expects a Gamma0 element")
    prod = Product(g0.g, g0.m)
    lift = RepElement(prod, dict(x.items()))
    return phi(prod, g0.e) * lift


def restrict_to_gamma0(x: RepElement, e: int) -> RepElement:
    g = x.group
    return RepElement(Gamma0(g.g, g.n, e), dict(x.items()))


def restrict_to_cyclic(x: RepElement, gen: list[tuple[int, int]], n: int) -> RepElement:
    """Restrict to the cyclic subgroup of order n whose j-th element is gen[j]."""
    g = x.group
    if isinstance(g, Cyclic):
        vals = [ZERO] * n
        for i, c in x.items():
            for j, (_, k) in enumerate(gen):
                vals[j] = vals[j] + root(g.n, i * k) * c
    else:
        m = g.n if isinstance(g, Product) else g.m
        base = table(g.g)
        vals = [ZERO] * n
        for (lab, i), c in x.items():
            bv = base.char(lab)
            for j, (ci, k) in enumerate(gen):
                vals[j] = vals[j] + bv[ci] * root(m, i * k) * c
    return decompose(ClassFunction(Cyclic(n), tuple(vals)))


def theta(x: RepElement, d: int) -> RepElement:
    """Restriction to the monodromy subgroup mu_d (identity in G)."""
    g = x.group
    if isinstance(g, Cyclic):
        return RepElement(Cyclic(d), {i % d: c for i, c in x.items()}) if g.n % d == 0 else \
            restrict_to_cyclic(x, [(0, (g.n // d) * j) for j in range(d)], d)
    m = g.n if isinstance(g, Product) else g.m
    if m % d:
        raise ValueError(f"mu_{d} is not a subgroup of mu_{m}")
    if isinstance(g.g, Abstract):
        acc: dict = {}
        for (_, i), c in x.items():
            acc[i % d] = acc.get(i % d, 0) + c
        return RepElement(Cyclic(d), acc)
    base = table(g.g)
    acc = {}
    for (lab, i), c in x.items():
        acc[i % d] = acc.get(i % d, 0) + c * base.dim(lab)
    return RepElement(Cyclic(d), acc)


# --------------------------------------------------------------------------
# graded polynomials in u, v, t


Monomial3 = tuple[int, int, int]


class GradedRep:
    """Polynomial in u, v, t with RepElement coefficients."""

    __slots__ = ("group", "_terms")

    def __init__(self, group, terms: Mapping[Monomial3, RepElement] | None = None):
        self.group = group
        acc: dict = {}
        for mono, rep in (terms or {}).items():
            _same(group, rep.group)
            acc[mono] = acc[mono] + rep if mono in acc else rep
        self._terms = {k: v for k, v in acc.items() if v}

    @classmethod
    def from_t(cls, group, coeffs: Mapping[int, RepElement]) -> "GradedRep":
        return cls(group, {(0, 0, j): r for j, r in coeffs.items()})

    def items(self):
        return sorted(self._terms.items(), key=lambda kv: (kv[0][2], kv[0][0] + kv[0][1], kv[0]))

    def monomials(self):
        return [k for k, _ in self.items()]

    def __getitem__(self, mono: Monomial3) -> RepElement:
        return self._terms.get(tuple(mono), zero(self.group))

    def t_coefficient(self, j: int) -> RepElement:
        out = zero(self.group)
        for (u, v, t), r in self._terms.items():
            if t == j:
                out = out + r
        return out

    def t_degrees(self) -> list[int]:
        return sorted({t for (_, _, t) in self._terms})

    def __eq__(self, other):
        if not isinstance(other, GradedRep):
            return NotImplemented
        return self.group == other.group and self._terms == other._terms

    def __hash__(self):
        return hash((self.group, frozenset(self._terms.items())))

    def __repr__(self):
        return f"GradedRep({self.group}, {format_graded(self)})"

    def __add__(self, other: "GradedRep") -> "GradedRep":
        _same(self.group, other.group)
        acc = dict(self._terms)
        for k, v in other._terms.items():
            acc[k] = acc[k] + v if k in acc else v
        return GradedRep(self.group, acc)

    def __neg__(self):
        return GradedRep(self.group, {k: -v for k, v in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, RepElement):
            other = GradedRep(other.group, {(0, 0, 0): other})
        _same(self.group, other.group)
        acc: dict = {}
        for (a, b, c), x in self._terms.items():
            for (p, q, r), y in other._terms.items():
                k = (a + p, b + q, c + r)
                prod = x * y
                acc[k] = acc[k] + prod if k in acc else prod
        return GradedRep(self.group, acc)

    def map_coefficients(self, fn, group=None) -> "GradedRep":
        out = {k: fn(v) for k, v in self._terms.items()}
        target = group if group is not None else next(iter(out.values())).group if out else self.group
        return GradedRep(target, out)

    def is_effective(self) -> bool:
        return all(r.is_effective() for r in self._terms.values())

    def dims(self) -> dict[Monomial3, int]:
        return {k: r.dim() for k, r in self.items()}


def gr_add(a: GradedRep, b: GradedRep) -> GradedRep:
    return a + b


def gr_mul(a: GradedRep, b: GradedRep) -> GradedRep:
    return a * b


def specialize(a: GradedRep, u=None, v=None, t=None):
    """Substitute u, v, t in {1, -1}; None keeps the variable.

    Returns a RepElement when all three are substituted.
    """
    for val in (u, v, t):
        if val not in (None, 1, -1):
            raise ValueError("only 1 and -1 can be substituted")
    acc: dict = {}
    for (p, q, j), r in a._terms.items():
        sign = 1
        key = [p, q, j]
        for idx, val in enumerate((u, v, t)):
            if val is not None:
                sign *= val ** key[idx]
                key[idx] = 0
        k = tuple(key)
        contrib = r.scale(sign)
        acc[k] = acc[k] + contrib if k in acc else contrib
    out = GradedRep(a.group, acc)
    if u is not None and v is not None and t is not None:
        return out[(0, 0, 0)]
    return out


def to_weight(a: GradedRep) -> GradedRep:
    """Collapse u^p v^q t^j to t^(p+q)."""
    acc: dict = {}
    for (p, q, _), r in a._terms.items():
        k = (0, 0, p + q)
        acc[k] = acc[k] + r if k in acc else r
    return GradedRep(a.group, acc)


def graded_map(a: GradedRep, fn, group) -> GradedRep:
    return GradedRep(group, {k: fn(r) for k, r in a.items()})


def alternating_sum(a: GradedRep) -> RepElement:
    """sum_j (-1)^j H^j for a t-graded polynomial."""
    return specialize(a, 1, 1, -1)


# --------------------------------------------------------------------------
# text formatting


def format_label(group, label) -> str:
    if isinstance(group, Cyclic):
        return f"γ{label}"
    if is_pair_label(label):
        return f"{format_label(group.g, label[0])}⊗γ{label[1]}"
    if isinstance(label, tuple):
        return "χ(" + ",".join(map(str, label)) + ")"
    return str(label)


def format_rep(x: RepElement) -> str:
    if not x:
        return "0"
    parts = []
    for lab, c in x.items():
        name = format_label(x.group, lab)
        coef = "" if abs(c) == 1 else f"{abs(c)}"
        parts.append(("-" if c < 0 else "+") + f" {coef}{name}")
    s = " ".join(parts)
    return s[2:] if s.startswith("+ ") else "-" + s[1:]


def format_graded(a: GradedRep) -> str:
    if not a._terms:
        return "0"
    parts = []
    for (p, q, j), r in a.items():
        mono = "".join(
            f"{var}" + (f"^{e}" if e > 1 else "") for var, e in (("u", p), ("v", q), ("t", j)) if e
        )
        parts.append(f"[{format_rep(r)}]{mono}")
    return " + ".join(parts)
