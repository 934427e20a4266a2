from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from milnorfibre.arrangement import dense_edges_braid, dense_edges_rank2
from milnorfibre.errors import MalformedPD, Unsupported
from milnorfibre.golden import load_golden
from milnorfibre.groups import Cyclic
from milnorfibre.hodge import (HodgePiece, check_hodge_types, disambiguation_check_s4, golden_hd_braid,
                               golden_pd_s4, golden_pd_s4_rejected, golden_spectrum_a3, golden_spectrum_a4,
                               hd_contraction, purity_symmetry_check, spectrum_from_pd, theta_graded,
                               theta_hd_from_spectrum, theta_hd_map, twisted_u2, zeta_check)
from milnorfibre.rank2 import pd_rank2_monodromy, spectrum_rank2
from milnorfibre.reps import GradedRep, RepElement, gammas, specialize
from milnorfibre.spectrum import Spectrum

# restricted Hodge-Deligne polynomial of A_3 at v = 1, as (p, s) -> coefficient of gamma_s u^p
THETA_A3 = {(0, 0): 1, (0, 1): 2, (0, 2): -1, (0, 3): 1,
            (1, 0): -5, (1, 2): 3, (1, 4): -1,
            (2, 0): 6, (2, 3): 1, (2, 4): 3, (2, 5): 2}


def test_placement_single_piece():
    c = Cyclic(3)
    pd = GradedRep(c, {(0, 0, 0): gammas(3, [0]), (1, 1, 1): gammas(3, [0], 2)})
    assert spectrum_from_pd(pd, 2) == Spectrum.build(3, {3: 2})  # 2t


def test_placement_signs_and_fractional():
    c = Cyclic(4)
    pd = GradedRep(c, {(0, 0, 0): gammas(4, [0]), (0, 1, 1): gammas(4, [1]), (1, 1, 2): gammas(4, [3])})
    # (p=0, s=1, j=1, ell=2): alpha = 1 + 1/4, sign +; (p=1, s=3, j=2): alpha = 3/4, sign -
    assert spectrum_from_pd(pd, 2) == Spectrum.from_alphas(4, {Fraction(5, 4): 1, Fraction(3, 4): -1})


def test_rank2_spectrum_from_pd():
    for d in range(2, 15):
        assert spectrum_from_pd(pd_rank2_monodromy(d), 2) == spectrum_rank2(d)


def test_a2_matches_rank2():
    assert spectrum_from_pd(golden_hd_braid(2), 2) == spectrum_rank2(3)


def test_a3_theta_eleven_terms():
    got = theta_hd_map(golden_spectrum_a3(), 3, 6)
    assert {k: v for k, v in got.items() if v} == THETA_A3
    assert len(THETA_A3) == 11


def test_a4_values():
    sp = spectrum_from_pd(golden_hd_braid(4), 4)
    assert sp == golden_spectrum_a4()
    assert sp[1] == 24 and sp[2] == -26 and sp[Fraction(3, 2)] == -1
    assert len(sp) == 19


@pytest.mark.parametrize("n", (2, 3, 4))
def test_round_trip(n):
    hd = golden_hd_braid(n)
    assert theta_hd_from_spectrum(spectrum_from_pd(hd, n), n, hd.group.n) == hd_contraction(hd)


@pytest.mark.parametrize("n,chi", [(2, -1), (3, 2), (4, -6)])
def test_zeta_braid(n, chi):
    rep = zeta_check(golden_hd_braid(n), chi)
    assert rep.passed
    assert not zeta_check(golden_hd_braid(n), chi + 1).passed


@pytest.mark.parametrize("d", range(2, 13))
def test_zeta_rank2(d):
    assert zeta_check(specialize(pd_rank2_monodromy(d), u=1, v=1), 2 - d).passed


@pytest.mark.parametrize("d", range(3, 13))
def test_purity_rank2(d):
    assert purity_symmetry_check(spectrum_rank2(d), 2, dense_edges_rank2(d)).passed


def test_purity_a4_and_perturbation():
    sp = golden_spectrum_a4()
    assert purity_symmetry_check(sp, 4, dense_edges_braid(4)).passed
    bumped = Spectrum.from_alphas(10, {**sp.as_dict(), Fraction(2, 5): 2})
    rep = purity_symmetry_check(bumped, 4, dense_edges_braid(4))
    assert not rep.passed
    # 1/2 has order 2, which divides m_X = 6, so it is exempt
    bumped = Spectrum.from_alphas(10, {**sp.as_dict(), Fraction(1, 2): 7})
    assert purity_symmetry_check(bumped, 4, dense_edges_braid(4)).passed


def test_hodge_types():
    for n in (2, 3, 4):
        assert check_hodge_types(golden_hd_braid(n)).passed
    c = Cyclic(3)
    bad = GradedRep(c, {(0, 0, 0): gammas(3, [0]), (1, 0, 1): gammas(3, [0])})
    assert not check_hodge_types(bad).passed


def test_malformed_pd():
    with pytest.raises(MalformedPD):
        spectrum_from_pd(golden_pd_s4(), 3)
    c = Cyclic(3)
    with pytest.raises(MalformedPD):
        spectrum_from_pd(GradedRep(c, {(1, 1, 1): gammas(3, [0])}), 2)
    with pytest.raises(MalformedPD):
        HodgePiece(0, 0, 0, 0, -1)


def test_unknown_braid():
    with pytest.raises(Unsupported):
        golden_hd_braid(5)


def test_theta_of_s4_pd_is_a3_data():
    assert theta_graded(golden_pd_s4(), 6) == golden_hd_braid(3)


def test_disambiguation():
    rep = disambiguation_check_s4()
    assert rep.passed
    assert twisted_u2(golden_pd_s4()) == gammas(12, [5, 9, 11])
    bound = load_golden().value("s4.smoothing_gr2")
    assert bound == RepElement(Cyclic(12), {4: 1, 5: 2, 9: 2, 10: 1, 11: 4})
    assert not twisted_u2(golden_pd_s4_rejected()).leq(bound)
    assert not load_golden().value("s4.twisted_u2_rejected_printed").leq(bound)


@given(st.integers(2, 12), st.dictionaries(st.integers(1, 40), st.integers(-5, 5), max_size=8))
def test_inverse_placement_round_trip(d, entries):
    # positive pieces go to degree ell - 1, negative ones to degree ell
    ell = 3
    sp = Spectrum.build(d, {k: v for k, v in entries.items() if 0 < k < ell * d})
    c = Cyclic(d)
    pieces = {(0, 0, 0): gammas(d, [0])}
    for (p, s), coeff in theta_hd_map(sp, ell, d).items():
        coeff -= (p, s) == (0, 0)
        if coeff:
            key = (p, p if s == 0 else 0, ell - 1 if coeff > 0 else ell)
            pieces[key] = pieces.get(key, RepElement(c, {})) + RepElement(c, {s: abs(coeff)})
    assert spectrum_from_pd(GradedRep(c, pieces), ell) == sp
