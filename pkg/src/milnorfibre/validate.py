"""Validator suites: every checkable identity, grouped by the group it concerns."""

from __future__ import annotations

from math import prod

from .arrangement import dense_edges_braid, dense_edges_rank2
from .braid import (assemble_rank3, chi_u_sym, dps_graded, euler_sym, faithful_check, golden_cohomology_sym,
                    h0_sym, monodromy_degree_check, quotient_euler_sym)
from .catalog import (ReflectionGroupData, catalog, check_overrides, chi_U, descriptor_name, equivariant_euler,
                      group_spec, monodromy_euler_quotient, poset_of)
from .checks import CheckReport
from .errors import MilnorError, MissingModel, Unsupported
from .golden import load_golden
from .groups import Cyclic, Dihedral, trivial_label
from .hodge import (check_hodge_types, disambiguation_check_s4, golden_hd_braid, hd_contraction,
                    purity_symmetry_check, spectrum_from_pd, theta_graded, theta_hd_from_spectrum, zeta_check)
from .rank2 import (h1_f0_dihedral, h1_f0_monodromy, h1_f0_uniform, pd_rank2_monodromy, spectrum_rank2,
                    weight_poly_dihedral)
from .reps import (GradedRep, alternating_sum, graded_map, induce_gamma0, one, restrict_to_gamma0, specialize, theta,
                   to_weight)


def _anchor(name: str) -> str:
    rec = load_golden()[name]
    return f"{name}: " + "; ".join(rec.anchors())


def _check(name: str, anchor: str, cond: bool, detail: str = "") -> CheckReport:
    rep = CheckReport(name, anchor)
    rep.require(cond, detail or "identity does not hold")
    return rep


def _guarded(name: str, anchor: str, fn) -> CheckReport:
    """Run ``fn``; a library error counts as a failed check rather than a crash."""
    try:
        out = fn()
    except MilnorError as exc:
        return _check(name, anchor, False, f"{type(exc).__name__}: {exc}")
    if isinstance(out, CheckReport):
        if not out.anchor:
            out.anchor = anchor
        out.name = name
        return out
    return _check(name, anchor, bool(out))


# --------------------------------------------------------------------------
# symmetric groups


def suite_symmetric(ell: int) -> list[CheckReport]:
    n = ell + 1
    key = f"s{n}.cohomology"
    anchor = _anchor(key)
    gc = golden_cohomology_sym(ell)
    data = catalog()[f"S{n}"]
    chi = euler_sym(ell)
    out = [
        _guarded(f"S{n}: three-term Euler formula equals the Moebius assembly", "Euler characteristic via regular numbers",
                 lambda: equivariant_euler(data) == chi),
        _guarded(f"S{n}: alternating sum of the cohomology equals the Euler characteristic", anchor,
                 lambda: alternating_sum(gc.graded) == chi),
        _guarded(f"S{n}: invariant part equals the quotient cohomology of F/G", anchor,
                 lambda: gc.invariant_part() == dps_graded(ell)),
        _guarded(f"S{n}: quotient Euler characteristic, three ways", "monodromy Euler characteristic of F/G",
                 lambda: quotient_euler_sym(ell) == chi.isotypic(trivial_label(gc.group.g)) == monodromy_euler_quotient(data)),
        _guarded(f"S{n}: cohomology factors as Phi times an effective quotient", _anchor(f"s{n}.p0"),
                 lambda: gc.graded == gc.p0 * h0_sym(ell) and gc.p0.is_effective()),
        _guarded(f"S{n}: H^0 is the sum of eps^i (x) gamma_(di)", anchor,
                 lambda: gc.graded.t_coefficient(0) == h0_sym(ell)),
        _guarded(f"S{n}: monodromy orders are bounded by dense edges", anchor,
                 lambda: monodromy_degree_check(gc.monodromy(), dense_edges_braid(ell))),
        _guarded(f"S{n}: faithful characters sit in the top degree", anchor,
                 lambda: faithful_check(gc.monodromy(), ell, chi_u_sym(ell))),
        _guarded(f"S{n}: gamma_0 multiplicities equal the Betti numbers of U", anchor,
                 lambda: _betti_check(gc.monodromy(), data)),
    ]
    if ell == 2:
        out += _s3_extras(gc)
    if ell == 3:
        out += _s4_extras(gc, chi)
    return out


def _betti_check(mono: GradedRep, data: ReflectionGroupData) -> CheckReport:
    rep = CheckReport("Betti numbers of U")
    # prod_{i>=2} (1 + m_i* t)
    poly = [1]
    for c in sorted(data.coexponents)[1:]:
        poly = [a + b for a, b in zip(poly + [0], [0] + [c * x for x in poly])]
    for j, b in enumerate(poly):
        got = mono.t_coefficient(j)[0]
        rep.require(got == b, f"gamma_0 multiplicity {got} in degree {j}, expected {b}")
    return rep


def _pd_checks(label: str, pd: GradedRep, p0: GradedRep, hd_n: int, anchor: str) -> list[CheckReport]:
    d = pd.group.d
    g0 = pd.group
    return [
        _guarded(f"{label}: Poincare-Deligne polynomial specialises to P_0", anchor,
                 lambda: specialize(pd, u=1, v=1) == graded_map(p0, lambda r: restrict_to_gamma0(r, 2), g0)),
        _guarded(f"{label}: monodromy restriction equals the braid Hodge data", anchor,
                 lambda: theta_graded(pd, d) == golden_hd_braid(hd_n)),
    ]


def _s3_extras(gc) -> list[CheckReport]:
    anchor = _anchor("s3.pd")
    return _pd_checks("S3", gc.pd, gc.p0, 2, anchor) + [
        _guarded("S3: H^1(F_0) from the dihedral formula has the golden dimension profile", anchor,
                 lambda: theta(h1_f0_dihedral(3), 3) == gc.monodromy().t_coefficient(1)),
    ]


def _s4_extras(gc, chi) -> list[CheckReport]:
    gd = load_golden()
    anchor = _anchor("s4.cohomology")
    dim7 = gd.constant("s4.dim_h1_f0")

    def assembled():
        h1, h2 = assemble_rank3(chi, h0_sym(3), gd.value("s4.complement"), 2 * dim7)
        return h1 == gc.graded.t_coefficient(1) and h2 == gc.graded.t_coefficient(2)

    def dims():
        rep = CheckReport("dimensions")
        got = [gc.graded.t_coefficient(j).dim() for j in range(3)]
        want = [2, 2 * dim7, chi.dim() - 2 + 2 * dim7]
        rep.require(got == want, f"dimensions {got}, expected {want}")
        return rep

    return [
        _guarded("S4: H^1 and H^2 assembled from chi, H^0, H^*(U) and dim H^1(F_0) = 7", anchor, assembled),
        _guarded("S4: dimensions of H^0, H^1, H^2 are 2, 14, 36", anchor, dims),
        *_pd_checks("S4", gc.pd, gc.p0, 3, _anchor("s4.pd")),
        _guarded("S4: twisted mu_12 restriction selects the accepted branch", _anchor("s4.smoothing_gr2"),
                 disambiguation_check_s4),
    ]


# --------------------------------------------------------------------------
# Hodge data of braid arrangements


def suite_hodge() -> list[CheckReport]:
    gd = load_golden()
    chis = {2: -1, 3: 2, 4: -6}
    expected = {2: gd.value("a2.spectrum"), 3: gd.value("a3.spectrum"), 4: gd.value("a4.spectrum")}
    out = [
        _guarded("A2: the rank-two spectrum formula at d = 3", _anchor("a2.spectrum"),
                 lambda: spectrum_rank2(3) == expected[2]),
        _guarded("A3: restricted Hodge-Deligne polynomial read from the spectrum", _anchor("a3.theta_hd"),
                 lambda: theta_hd_from_spectrum(expected[3], 3, 6) == gd.value("a3.theta_hd")),
        _guarded("A4: purity symmetry of the spectrum", _anchor("a4.spectrum"),
                 lambda: purity_symmetry_check(expected[4], 4, dense_edges_braid(4))),
        _guarded("A4: U_4 Betti numbers match the integral exponents", "a4.complement_betti",
                 lambda: _betti_a4(gd)),
    ]
    for n in (2, 3, 4):
        hd = golden_hd_braid(n)
        anchor = _anchor(f"a{n}.hd")
        out += [
            _guarded(f"A{n}: spectrum of the Hodge-Deligne data", anchor,
                     lambda hd=hd, n=n: spectrum_from_pd(hd, n) == expected[n]),
            _guarded(f"A{n}: zeta function, chi(U) = {chis[n]}", anchor, lambda hd=hd, n=n: zeta_check(hd, chis[n])),
            _guarded(f"A{n}: Hodge types of the pieces", anchor, lambda hd=hd: check_hodge_types(hd)),
            _guarded(f"A{n}: spectrum round trip", anchor,
                     lambda hd=hd, n=n: theta_hd_from_spectrum(spectrum_from_pd(hd, n), n, hd.group.n) == hd_contraction(hd)),
        ]
    return out


def _betti_a4(gd) -> bool:
    b = gd.constant("a4.complement_betti")
    hd = golden_hd_braid(4)
    return [hd[(j, j, j)][0] for j in range(4)] == b


# --------------------------------------------------------------------------
# rank two


def suite_dihedral(p: int) -> list[CheckReport]:
    name = f"G({p},{p},2)"
    out = [
        _guarded(f"{name}: H^1(F_0) is effective and restricts to the monodromy formula", "rank-two monodromy",
                 lambda: h1_f0_dihedral(p).is_effective() and theta(h1_f0_dihedral(p), p) == h1_f0_monodromy(p)),
        _guarded(f"{name}: closed formula agrees with the trace formula", "rank-two trace formula",
                 lambda: h1_f0_dihedral(p) == h1_f0_uniform(Dihedral(p))),
        _guarded(f"{name}: invariant part of the induced cohomology matches the quotient Euler characteristic",
                 "monodromy Euler characteristic of F/G", lambda: _induced_quotient(p)),
        _guarded(f"{name}: purity symmetry of the rank-two spectrum", "rank-two spectrum",
                 lambda: purity_symmetry_check(spectrum_rank2(p), 2, dense_edges_rank2(p))),
        _guarded(f"{name}: zeta function of the rank-two Poincare-Deligne polynomial, chi(U) = 2 - p", "rank-two spectrum",
                 lambda: zeta_check(specialize(pd_rank2_monodromy(p), u=1, v=1), 2 - p)),
    ]
    if p == 3:
        out.append(_guarded("G(3,3,2): weight polynomial agrees with the Poincare-Deligne weights", "dihedral weight polynomial",
                            lambda: graded_map(weight_poly_dihedral(3), lambda r: theta(r, 3), Cyclic(3))
                            == to_weight(pd_rank2_monodromy(3))))
    return out


def _induced_quotient(p: int) -> bool:
    """(Ind H^0 - Ind H^1)^G over mu_2p equals the Moebius prediction."""
    x = h1_f0_dihedral(p)
    h0, h1 = induce_gamma0(one(x.group)), induce_gamma0(x)
    triv = trivial_label(x.group.g)
    return h0.isotypic(triv) - h1.isotypic(triv) == monodromy_euler_quotient(catalog()[f"G({p},{p},2)"])


def suite_uniform_model(data: ReflectionGroupData) -> list[CheckReport]:
    def run():
        spec = group_spec(data)
        x = h1_f0_uniform(spec)
        d = x.group.d
        return x.is_effective() and x.dim() == (d - 1) ** 2 and theta(x, d) == h1_f0_monodromy(d)
    return [_guarded(f"{data.name}: trace-formula H^1(F_0) has dimension (d-1)^2", "rank-two trace formula", run)]


# --------------------------------------------------------------------------
# catalog


def suite_catalog_entry(data: ReflectionGroupData) -> list[CheckReport]:
    name = data.name
    anchor = data.citation or "catalog"
    if data.family == "table4":
        return [_check(f"{name}: degrees recorded, counts absent", anchor,
                       data.hyperplane_orders is None and len(data.degrees) == 2)]

    def numerics():
        rep = CheckReport("numerics")
        rep.require(data.m == data.n_G + data.N_G, "m != n_G + N_G")
        rep.require(prod(data.degrees) == prod(1 + x for x in data.exponents), "|G| mismatch")
        rep.require(sum(data.coexponents) == data.N_G, "sum of coexponents != N_G")
        rep.require(all(data.m % d == 0 for d in poset_of(data).elements), "some regular d does not divide m")
        lhs = prod(1 + x for x in data.exponents)
        rhs = (sum(data.exponents) + sum(data.coexponents)) * prod(abs(1 - c) for c in sorted(data.coexponents)[1:])
        rep.require(rhs % lhs == 0, f"{lhs} does not divide {rhs}")
        for msg in check_overrides(data):
            rep.fail(msg)
        return rep

    def euler():
        try:
            x = equivariant_euler(data)
        except MissingModel:
            return True
        triv = trivial_label(x.group.g)
        return x.dim() == data.m * chi_U(data) and x.isotypic(triv) == monodromy_euler_quotient(data)

    return [
        _guarded(f"{name}: numerical invariants", anchor, numerics),
        _guarded(f"{name}: equivariant Euler characteristic", anchor, euler),
    ]


def suite_catalog() -> list[CheckReport]:
    out = []
    for data in catalog().values():
        out += suite_catalog_entry(data)
    return out


# --------------------------------------------------------------------------
# dispatch


def suite_for(descriptor: str) -> list[CheckReport]:
    """Checks concerning one group, e.g. "sym:5" or "dihedral:7"."""
    name = descriptor_name(descriptor)
    cat = catalog()
    if name not in cat:
        raise Unsupported(f"{name} is not in the catalog")
    data = cat[name]
    out = suite_catalog_entry(data)
    if data.family == "symmetric" and data.params[0] in (3, 4, 5):
        out += suite_symmetric(data.params[0] - 1)
        if data.params[0] == 3:
            out += suite_dihedral(3)
    elif data.family == "dihedral":
        out += suite_dihedral(data.params[0])
    elif data.family == "imprimitive" and data.rank == 2 and data.is_uniform:
        out += suite_uniform_model(data)
    return out


def run_all() -> list[CheckReport]:
    out = suite_catalog()
    for ell in (2, 3, 4):
        out += suite_symmetric(ell)
    for p in range(3, 13):
        out += suite_dihedral(p)
    for name in ("G(4,2,2)", "G(6,3,2)"):
        out += suite_uniform_model(catalog()[name])
    out += suite_hodge()
    return out
