"""Spectra versus monodromy-equivariant Hodge–Deligne data.

A piece H^{p,q}(H^j(F_0))_{gamma_s} of mu_d-equivariant data sits in the
spectrum at

    alpha = ell - p - 1 + s/d   (s != 0)
    alpha = ell - p             (s = 0)

with sign (-1)^(j - ell + 1).  The class of H^0 is left out because spectra
see reduced cohomology.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arrangement import DenseEdgeSummary
from .checks import CheckReport
from .errors import MalformedPD, Unsupported
from .golden import load_golden
from .groups import Cyclic, Gamma0, Symmetric, table
from .reps import GradedRep, RepElement, cyclic_generator, gammas, graded_map, restrict_to_cyclic, theta
from .spectrum import Spectrum


@dataclass(frozen=True)
class HodgePiece:
    p: int
    q: int
    j: int
    s: int
    mult: int

    def __post_init__(self):
        if self.mult < 0:
            raise MalformedPD(f"negative multiplicity in {self}")


def hodge_pieces(pd: GradedRep) -> list[HodgePiece]:
    if not isinstance(pd.group, Cyclic):
        raise MalformedPD("Hodge pieces are read from mu_d-equivariant data")
    return [HodgePiece(p, q, j, s, c) for (p, q, j), r in pd.items() for s, c in r.items()]


def check_hodge_types(pd: GradedRep) -> CheckReport:
    """Non-trivial eigenvalues: weight j or j+1. Trivial eigenvalue: type (j, j)."""
    rep = CheckReport("hodge types")
    for h in hodge_pieces(pd):
        if h.s == 0:
            rep.require(h.p == h.q == h.j, f"gamma_0 piece of type ({h.p},{h.q}) in degree {h.j}")
        else:
            rep.require(h.p + h.q in (h.j, h.j + 1),
                        f"gamma_{h.s} piece of weight {h.p + h.q} in degree {h.j}")
    return rep


def _alpha(ell: int, d: int, p: int, s: int) -> Fraction:
    return Fraction(ell - p) if s == 0 else Fraction(ell - p - 1) + Fraction(s, d)


def spectrum_from_pd(pd: GradedRep, ell: int) -> Spectrum:
    if not isinstance(pd.group, Cyclic):
        raise MalformedPD("expected a polynomial over a cyclic group")
    d = pd.group.n
    h0 = pd.t_coefficient(0)
    if h0 != gammas(d, [0]) or pd[(0, 0, 0)] != h0:
        raise MalformedPD("degree 0 must be gamma_0 of type (0,0)")
    acc: dict[Fraction, int] = {}
    for h in hodge_pieces(pd):
        if h.j == 0:
            continue
        a = _alpha(ell, d, h.p, h.s)
        acc[a] = acc.get(a, 0) + (-h.mult if (h.j - ell + 1) % 2 else h.mult)
    return Spectrum.from_alphas(d, acc)


def hd_contraction(pd: GradedRep) -> GradedRep:
    """HD(u, 1) = sum_{j,q} (-1)^j H^{p,q}(H^j) u^p, kept as u-monomials."""
    acc: dict = {}
    for (p, _, j), r in pd.items():
        k = (p, 0, 0)
        x = r.scale((-1) ** j)
        acc[k] = acc[k] + x if k in acc else x
    return GradedRep(pd.group, acc)


def theta_hd_from_spectrum(sp: Spectrum, ell: int, d: int) -> GradedRep:
    """Inverse of the placement rule: c_{p,s} = (-1)^(ell-1) m_alpha, plus gamma_0 for H^0."""
    acc: dict[tuple[int, int, int], dict[int, int]] = {(0, 0, 0): {0: 1}}
    sign = (-1) ** (ell - 1)
    for a, m in sp.as_dict().items():
        k = a * d
        if k.denominator != 1:
            raise ValueError(f"{a} is not a multiple of 1/{d}")
        k = int(k)
        s = k % d
        p = ell - k // d if s == 0 else ell - 1 - k // d
        if p < 0:
            raise ValueError(f"alpha = {a} lies outside the range for ell = {ell}")
        bucket = acc.setdefault((p, 0, 0), {})
        bucket[s] = bucket.get(s, 0) + sign * m
    c = Cyclic(d)
    return GradedRep(c, {k: RepElement(c, v) for k, v in acc.items()})


def theta_hd_map(sp: Spectrum, ell: int, d: int) -> dict[tuple[int, int], int]:
    """The same data as a map (p, s) -> c_{p,s}."""
    return {(p, s): c for (p, _, _), r in theta_hd_from_spectrum(sp, ell, d).items() for s, c in r.items()}


def zeta_check(g: GradedRep, chiU: int) -> CheckReport:
    """Every character gamma_s must have alternating multiplicity chi(U)."""
    if not isinstance(g.group, Cyclic):
        raise ValueError("zeta_check expects a polynomial over mu_d")
    rep = CheckReport("zeta function", anchor="zeta function (1 - t^d)^chi(U)")
    d = g.group.n
    sums = {s: 0 for s in range(d)}
    for (_, _, j), r in g.items():
        for s, c in r.items():
            sums[s] += (-1) ** j * c
    for s, total in sums.items():
        rep.require(total == chiU, f"gamma_{s}: alternating sum {total}, expected {chiU}")
    return rep


def purity_symmetry_check(sp: Spectrum, ell: int, edges: DenseEdgeSummary, order_filter=None) -> CheckReport:
    """m_alpha = m_{ell - alpha} whenever beta = exp(-2 pi i alpha) has order dividing no m_X.

    Only dense edges of positive dimension constrain beta.  ``order_filter``
    optionally narrows the orders considered further.
    """
    rep = CheckReport("purity symmetry", anchor="purity of eigenspaces away from dense-edge orders")
    ms = [e.multiplicity for e in edges.proper()]
    alphas = set(sp.as_dict())
    alphas |= {ell - a for a in alphas}
    checked = 0
    for a in sorted(alphas):
        o = a.denominator
        if o == 1 or any(mx % o == 0 for mx in ms):
            continue
        if order_filter is not None and not order_filter(o):
            continue
        checked += 1
        rep.require(sp[a] == sp[ell - a], f"m_{a} = {sp[a]} but m_{ell - a} = {sp[ell - a]}")
    rep.note(f"{checked} exponents checked")
    return rep


# --------------------------------------------------------------------------
# golden Hodge data


def golden_spectrum_a4() -> Spectrum:
    return load_golden().value("a4.spectrum")


def golden_spectrum_a3() -> Spectrum:
    return load_golden().value("a3.spectrum")


def golden_hd_braid(n: int) -> GradedRep:
    """mu_d-equivariant Poincaré–Deligne polynomial of F_0 for A_n, n = 2, 3, 4."""
    if n not in (2, 3, 4):
        raise Unsupported(f"Hodge data for A_{n} is not known; A_2, A_3 and A_4 are available")
    return load_golden().value(f"a{n}.hd")


def golden_pd_s4() -> GradedRep:
    return load_golden().value("s4.pd")


def golden_pd_s4_rejected() -> GradedRep:
    return load_golden().value("s4.pd_rejected")


def theta_graded(pd: GradedRep, d: int) -> GradedRep:
    return graded_map(pd, lambda r: theta(r, d), Cyclic(d))


def twisted_generator(group: Gamma0) -> list[tuple[int, int]]:
    """Powers of (tau, zeta_m) for a transposition tau; requires det(tau) = zeta_m^d."""
    if not isinstance(group.g, Symmetric) or group.m != 2 * group.d:
        raise ValueError("the twisted restriction is set up for symmetric groups with e = 2")
    base = table(group.g)
    tau = base.class_index((2,) + (1,) * (group.g.n - 2))
    return cyclic_generator(group, tau, 1, group.m)


def twisted_restriction(pd: GradedRep) -> GradedRep:
    """Restrict along zeta_m -> (tau, zeta_m)."""
    g = pd.group
    gen = twisted_generator(g)
    return graded_map(pd, lambda r: restrict_to_cyclic(r, gen, g.m), Cyclic(g.m))


def twisted_u2(pd: GradedRep) -> RepElement:
    """Coefficient of u^2 v^0 in the twisted restriction of HD(u, v)."""
    hd = twisted_restriction(pd)
    out = RepElement(hd.group, {})
    for (p, q, j), r in hd.items():
        if (p, q) == (2, 0):
            out = out + r.scale((-1) ** j)
    return out


def disambiguation_check_s4() -> CheckReport:
    """Gr_F^2 of the smoothing must contain the u^2 coefficient of the right branch only."""
    gd = load_golden()
    rep = CheckReport("S4 Poincare-Deligne disambiguation",
                      anchor="twisted mu_12 restriction against the smoothing computation")
    bound = gd.value("s4.smoothing_gr2")
    accepted = twisted_u2(golden_pd_s4())
    rejected = twisted_u2(golden_pd_s4_rejected())
    printed_rejected = gd.value("s4.twisted_u2_rejected_printed")
    rep.require(accepted == gd.value("s4.twisted_u2_accepted"),
                f"accepted u^2 coefficient is {accepted}, expected {gd.value('s4.twisted_u2_accepted')}")
    rep.require(accepted.leq(bound), "accepted branch is not contained in the smoothing bound")
    rep.require(not rejected.leq(bound), "rejected branch is contained in the smoothing bound")
    rep.require(not printed_rejected.leq(bound), "printed rejected value is contained in the smoothing bound")
    if rejected != printed_rejected:
        rep.note(f"rejected branch computes to {rejected}; the transcribed value is {printed_rejected}")
    return rep
