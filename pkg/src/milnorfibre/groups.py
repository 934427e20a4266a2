"""Group descriptors and their character tables.

Supported families: cyclic mu_N, symmetric S_n (n <= 8), the monomial groups
G(m, p, 2) (dihedral when m = p), direct products G x mu_N, and the index-e
subgroup Gamma_0 = ker(eps (x) gamma_d) of G x mu_m, where eps = det^{-1}.

Irreducible labels:
  cyclic        int i, the character zeta -> zeta^i
  symmetric     partition tuple
  dihedral      "1", "eps", "delta", "eps.delta", "chi1", "chi2", ...
  G(m,p,2)      "lin[x,y]+", "lin[x,y]-", "ind[x,y]" from Clifford theory
  abstract      "1", "eps", "eps^2", ... (only the powers of eps are known)
  product       (G-label, i)
  gamma0        (G-label, i) with 0 <= i < d, the canonical lift
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from math import factorial

from .cyclotomic import Cyclotomic, ONE, ZERO, root
from .errors import GroupMismatch, NonIntegral, Unsupported
from .monomial import MonomialGroup
from .symmetric import class_size, mn_value, partitions, power_cycle_type, sign_of

MAX_SYMMETRIC = 8


# --------------------------------------------------------------------------
# descriptors


@dataclass(frozen=True)
class Cyclic:
    n: int

    def __str__(self):
        return f"mu_{self.n}"


@dataclass(frozen=True)
class Symmetric:
    n: int

    def __str__(self):
        return f"S_{self.n}"


@dataclass(frozen=True)
class Dihedral:
    p: int

    def __post_init__(self):
        if self.p < 3:
            raise ValueError("dihedral(p) needs p >= 3")

    def __str__(self):
        return f"G({self.p},{self.p},2)"


@dataclass(frozen=True)
class Monomial:
    m: int
    p: int

    def __str__(self):
        return f"G({self.m},{self.p},2)"


@dataclass(frozen=True)
class Abstract:
    """A reflection group known only numerically; only eps^i labels exist."""

    name: str
    e: int

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Product:
    g: object
    n: int

    def __str__(self):
        return f"{self.g} x mu_{self.n}"


@dataclass(frozen=True)
class Gamma0:
    g: object
    m: int
    e: int

    def __post_init__(self):
        if self.m % self.e:
            raise ValueError("gamma0 needs e | m")

    @property
    def d(self) -> int:
        return self.m // self.e

    def __str__(self):
        return f"Gamma0({self.g} x mu_{self.m}, e={self.e})"


GroupSpec = Cyclic | Symmetric | Dihedral | Monomial | Abstract | Product | Gamma0


def ambient_order(group) -> int | None:
    """Order of the cyclic factor whose characters gamma_i index the labels."""
    if isinstance(group, Cyclic):
        return group.n
    if isinstance(group, (Product, Gamma0)):
        return group.n if isinstance(group, Product) else group.m
    return None


# --------------------------------------------------------------------------
# tables


class CharacterTable:
    """Common interface: classes, sizes, labels and lazily built characters."""

    group: object
    order: int
    reps: list
    sizes: list[int]
    labels: list

    def char(self, label) -> tuple[Cyclotomic, ...]:
        raise NotImplementedError

    def power_class(self, ci: int, j: int) -> int:
        raise NotImplementedError

    @cached_property
    def _char_lookup(self) -> dict:
        return {tuple(self.char(lab)): lab for lab in self.labels}

    def label_of_values(self, values) -> object:
        try:
            return self._char_lookup[tuple(values)]
        except KeyError:
            raise NonIntegral("values are not an irreducible character") from None

    def dim(self, label) -> int:
        return int(self.char(label)[0].as_rational())

    def inner(self, f, g) -> Fraction:
        total = ZERO
        for size, a, b in zip(self.sizes, f, g):
            if a and b:
                total = total + a * b.conj() * size
        return total.as_rational() / self.order


class CyclicTable(CharacterTable):
    def __init__(self, n: int):
        self.group = Cyclic(n)
        self.n = n
        self.order = n
        self.reps = list(range(n))
        self.sizes = [1] * n
        self.labels = list(range(n))

    @lru_cache(maxsize=None)
    def char(self, label):
        return tuple(root(self.n, label * k) for k in range(self.n))

    def power_class(self, ci, j):
        return (ci * j) % self.n


class SymmetricTable(CharacterTable):
    def __init__(self, n: int):
        if not 1 <= n <= MAX_SYMMETRIC:
            raise Unsupported(f"symmetric groups are catalogued for n <= {MAX_SYMMETRIC}")
        self.group = Symmetric(n)
        self.n = n
        self.order = factorial(n)
        self.reps = list(reversed(partitions(n)))  # identity class first
        self.sizes = [class_size(ct) for ct in self.reps]
        self.labels = list(partitions(n))  # trivial character first
        self._index = {ct: i for i, ct in enumerate(self.reps)}

    @lru_cache(maxsize=None)
    def char(self, label):
        return tuple(Cyclotomic.rational(mn_value(label, ct)) for ct in self.reps)

    def class_index(self, ct) -> int:
        return self._index[tuple(sorted(ct, reverse=True))]

    def power_class(self, ci, j):
        return self._index[power_cycle_type(self.reps[ci], j)]

    @cached_property
    def det(self) -> tuple[Cyclotomic, ...]:
        return tuple(Cyclotomic.rational(sign_of(ct)) for ct in self.reps)


class MonomialTable(CharacterTable):
    """Character table of G(m, p, 2) from its explicit matrices.

    Classes come from orbit-partitioning all elements under conjugation;
    irreducibles come from Clifford theory over the diagonal subgroup A,
    which has index two with the coordinate swap as complement.
    """

    def __init__(self, m: int, p: int, dihedral_names: bool = False):
        self.model = MonomialGroup(m, p)
        self.group = Dihedral(m) if dihedral_names else Monomial(m, p)
        self.order = self.model.order
        self._classes()
        self._irreducibles()
        if dihedral_names:
            self._rename_dihedral()

    def _classes(self):
        model = self.model
        elements = model.elements()
        seen: dict = {}
        reps, sizes = [], []
        for g in elements:
            if g in seen:
                continue
            orbit = {model.mul(model.mul(h, g), model.inverse(h)) for h in elements}
            for x in orbit:
                seen[x] = len(reps)
            reps.append(g)
            sizes.append(len(orbit))
        self.reps, self.sizes, self._index = reps, sizes, seen

    def _irreducibles(self):
        m = self.model.m
        diag = [g for g in self.model.elements() if g[0] == 0]

        def restrict(x, y):
            return tuple((x * c0 + y * c1) % m for _, c0, c1 in diag)

        by_values: dict = {}
        for x in range(m):
            for y in range(m):
                by_values.setdefault(restrict(x, y), (x, y))
        done, self._defs = set(), {}
        for vals, (x, y) in sorted(by_values.items(), key=lambda kv: kv[1]):
            if vals in done:
                continue
            swapped = restrict(y, x)
            done.update({vals, swapped})
            if swapped == vals:
                self._defs[f"lin[{x},{y}]+"] = ("lin", x, y, 1)
                self._defs[f"lin[{x},{y}]-"] = ("lin", x, y, -1)
            else:
                self._defs[f"ind[{x},{y}]"] = ("ind", x, y, 0)
        self.labels = list(self._defs)
        self._values = {lab: tuple(self._value(d, g) for g in self.reps) for lab, d in self._defs.items()}

    def _value(self, definition, g):
        kind, x, y, sign = definition
        m = self.model.m
        s, c0, c1 = g
        if kind == "lin":
            # g = diag(c1, c0) * swap when s = 1
            a0, a1 = (c1, c0) if s else (c0, c1)
            v = root(m, x * a0 + y * a1)
            return v * sign if s else v
        if s:
            return ZERO
        return root(m, x * c0 + y * c1) + root(m, y * c0 + x * c1)

    def _rename_dihedral(self):
        p = self.model.m
        rot = self._index[(0, 1, p - 1)]
        refl = self._index[(1, 0, 0)]
        names = {}
        for lab in self.labels:
            vals = self._values[lab]
            if vals[0] == ONE:
                key = (vals[rot] == ONE, vals[refl] == ONE)
                names[lab] = {(True, True): "1", (True, False): "eps",
                              (False, True): "delta", (False, False): "eps.delta"}[key]
            else:
                k = next(k for k in range(1, p) if vals[rot] == root(p, k) + root(p, -k))
                names[lab] = f"chi{k}"
        order = ["1", "eps", "delta", "eps.delta"] + [f"chi{k}" for k in range(1, p)]
        self._values = {names[lab]: v for lab, v in self._values.items()}
        self.labels = sorted(self._values, key=order.index)

    def char(self, label):
        return self._values[label]

    def class_index(self, g) -> int:
        return self._index[g]

    def power_class(self, ci, j):
        return self._index[self.model.power(self.reps[ci], j)]

    @cached_property
    def det(self) -> tuple[Cyclotomic, ...]:
        return tuple(self.model.det(g) for g in self.reps)


class ProductTable(CharacterTable):
    """G x mu_N; classes are pairs (G-class, k) standing for (g, zeta_N^k)."""

    def __init__(self, base: CharacterTable, n: int):
        self.base, self.n = base, n
        self.group = Product(base.group, n)
        self.order = base.order * n
        self.reps = [(ci, k) for ci in range(len(base.reps)) for k in range(n)]
        self.sizes = [base.sizes[ci] for ci, _ in self.reps]
        self.labels = [(lab, i) for lab in base.labels for i in range(n)]

    @lru_cache(maxsize=None)
    def char(self, label):
        lab, i = label
        vals = self.base.char(lab)
        return tuple(vals[ci] * root(self.n, i * k) for ci, k in self.reps)

    def power_class(self, ci, j):
        c, k = self.reps[ci]
        return self.reps.index((self.base.power_class(c, j), (k * j) % self.n))


class Gamma0Table(CharacterTable):
    """Gamma_0 = {(g, xi) : eps(g) xi^d = 1} inside G x mu_m, with eps = det^{-1}."""

    def __init__(self, base: CharacterTable, m: int, e: int):
        if m % e:
            raise ValueError("gamma0 needs e | m")
        self.base, self.m, self.e, self.d = base, m, e, m // e
        self.group = Gamma0(base.group, m, e)
        det = base_det(base)
        self.reps = [(ci, k) for ci in range(len(base.reps)) for k in range(m)
                     if root(m, k * self.d) == det[ci]]
        self.sizes = [base.sizes[ci] for ci, _ in self.reps]
        self.order = sum(self.sizes)
        self.labels = [(lab, i) for lab in base.labels for i in range(self.d)]
        self._index = {r: n for n, r in enumerate(self.reps)}

    @lru_cache(maxsize=None)
    def char(self, label):
        lab, i = label
        vals = self.base.char(lab)
        return tuple(vals[ci] * root(self.m, i * k) for ci, k in self.reps)

    def power_class(self, ci, j):
        c, k = self.reps[ci]
        return self._index[(self.base.power_class(c, j), (k * j) % self.m)]


def base_det(table: CharacterTable) -> tuple[Cyclotomic, ...]:
    det = getattr(table, "det", None)
    if det is None:
        raise Unsupported(f"{table.group} has no reflection representation on record")
    return det


@lru_cache(maxsize=None)
def table(group) -> CharacterTable:
    """Character table for any supported descriptor."""
    if isinstance(group, Cyclic):
        return CyclicTable(group.n)
    if isinstance(group, Symmetric):
        return SymmetricTable(group.n)
    if isinstance(group, Dihedral):
        return MonomialTable(group.p, group.p, dihedral_names=True)
    if isinstance(group, Monomial):
        return MonomialTable(group.m, group.p)
    if isinstance(group, Product):
        return ProductTable(table(group.g), group.n)
    if isinstance(group, Gamma0):
        return Gamma0Table(table(group.g), group.m, group.e)
    raise Unsupported(f"no character table for {group}")


def character_table(group) -> dict:
    """Map label -> tuple of character values on the classes of ``table(group)``."""
    t = table(group)
    return {lab: t.char(lab) for lab in t.labels}


# --------------------------------------------------------------------------
# linear characters and label twisting


def trivial_label(group):
    if isinstance(group, Cyclic):
        return 0
    if isinstance(group, Symmetric):
        return (group.n,)
    if isinstance(group, (Dihedral, Abstract)):
        return "1"
    if isinstance(group, (Product, Gamma0)):
        return (trivial_label(group.g), 0)
    t = table(group)
    return t.label_of_values([ONE] * len(t.reps))


def eps_power_label(group, i: int):
    """Label of eps^i, eps = det^{-1} on the reflection representation."""
    if isinstance(group, Abstract):
        i %= group.e
        return "1" if i == 0 else ("eps" if i == 1 else f"eps^{i}")
    t = table(group)
    det = base_det(t)
    return t.label_of_values([_power(x.inverse(), i) for x in det])


def _power(x: Cyclotomic, i: int) -> Cyclotomic:
    return x ** i if i >= 0 else x.inverse() ** (-i)


def twist(group, label, i: int):
    """Label of eps^i (x) label for a base (non-product) group."""
    if i == 0:
        return label
    if isinstance(group, Abstract):
        k = _abstract_power(label)
        return eps_power_label(group, k + i)
    t = table(group)
    det = base_det(t)
    vals = t.char(label)
    return t.label_of_values([v * _power(x.inverse(), i) for v, x in zip(vals, det)])


def _abstract_power(label: str) -> int:
    if label == "1":
        return 0
    if label == "eps":
        return 1
    if label.startswith("eps^"):
        return int(label[4:])
    raise GroupMismatch(f"unknown abstract label {label!r}")


@lru_cache(maxsize=None)
def tensor_labels(group, a, b) -> dict:
    """Decomposition of the tensor product of two irreducibles of a base group."""
    if isinstance(group, Abstract):
        return {eps_power_label(group, _abstract_power(a) + _abstract_power(b)): 1}
    if isinstance(group, Cyclic):
        return {(a + b) % group.n: 1}
    t = table(group)
    va, vb = t.char(a), t.char(b)
    prod = [x * y for x, y in zip(va, vb)]
    out = {}
    for lab in t.labels:
        c = t.inner(prod, t.char(lab))
        if c.denominator != 1:
            raise NonIntegral(f"tensor {a} x {b} is not integral")
        if c:
            out[lab] = int(c)
    return out


def canonical_gamma0_label(group: Gamma0, label):
    """Reduce (rho, i) with arbitrary i to the lift with 0 <= i < d."""
    lab, i = label
    q, r = divmod(i, group.d)
    # on Gamma_0, gamma_d agrees with eps^{-1}
    return (twist(group.g, lab, -q) if q else lab, r)


def label_sort_key(label):
    """Total order on labels of mixed shape, for stable printing."""
    if is_pair_label(label):
        return (1, label_sort_key(label[0]), label[1])
    if isinstance(label, int):
        return (0, (), label)
    if isinstance(label, tuple):
        return (0, tuple(-x for x in label), 0)
    return (0, (_name_rank(label),), 0)


def is_pair_label(label) -> bool:
    # partitions are int tuples; pair labels carry a G-label first
    return isinstance(label, tuple) and len(label) == 2 and not isinstance(label[0], int)


def _name_rank(name: str):
    fixed = {"1": 0, "eps": 1, "delta": 2, "eps.delta": 3}
    if name in fixed:
        return fixed[name]
    if name.startswith("chi"):
        return 10 + int(name[3:])
    if name.startswith("eps^"):
        return 1 + int(name[4:]) / 100
    return 1000 + sum(map(ord, name))
