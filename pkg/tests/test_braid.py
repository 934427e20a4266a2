from math import factorial

import pytest

from milnorfibre.arrangement import DenseEdge, dense_edges_braid
from milnorfibre.braid import (assemble_rank3, chi_u_sym, dps_graded, euler_sym, faithful_check, golden_cohomology_sym,
                               h0_sym, lift, monodromy_degree_check, quotient_euler_sym, sym_gamma)
from milnorfibre.errors import DimensionMismatch, Unsupported
from milnorfibre.golden import load_golden
from milnorfibre.groups import Cyclic, trivial_label
from milnorfibre.reps import GradedRep, RepElement, alternating_sum, gammas
from milnorfibre.serialize import parse_expr

# Gamma-module Euler characteristics as displayed for S_3 and S_4 (sigma = (2,2), rho = (3,1))
EULER_S3 = ("(3)*g0 + (1,1,1)*g3 - (3)*g1 - (3)*g5 - (1,1,1)*g2 - (1,1,1)*g4 - (2,1)*g0 - (2,1)*g3")
EULER_S4 = ("(4)*g0 + (4)*g3 + (4)*g9 + (1,1,1,1)*g3 + (1,1,1,1)*g6 + (1,1,1,1)*g9"
            " + (3,1)*g2 + (3,1)*g6 + (3,1)*g10 + (2,1,1)*g0 + (2,1,1)*g4 + (2,1,1)*g8"
            " + (2,2)*g1 + (2,2)*g5 + (2,2)*g7 + (2,2)*g11"
            " - (4)*g2 - (4)*g10 - (1,1,1,1)*g4 - (1,1,1,1)*g8 - (2,2)*g0 - (2,2)*g6")


def test_euler_s3():
    assert euler_sym(2) == parse_expr(sym_gamma(2), EULER_S3)


def test_euler_s4():
    assert euler_sym(3) == parse_expr(sym_gamma(3), EULER_S4)
    assert euler_sym(3) == load_golden().value("s4.euler")


@pytest.mark.parametrize("ell", range(2, 7))
def test_euler_dimension(ell):
    assert euler_sym(ell).dim() == (-1) ** (ell + 1) * factorial(ell + 1)
    assert euler_sym(ell).dim() == ell * (ell + 1) * chi_u_sym(ell)


def test_chi_u_sym():
    assert [chi_u_sym(ell) for ell in (2, 3, 4, 5)] == [-1, 2, -6, 24]


def test_sym_gamma_bounds():
    with pytest.raises(Unsupported):
        sym_gamma(8)
    with pytest.raises(Unsupported):
        sym_gamma(1)


def test_quotient_euler_examples():
    assert quotient_euler_sym(2) == gammas(6, [0]) - gammas(6, [1, 5])
    assert quotient_euler_sym(3) == gammas(12, [0, 3, 9]) - gammas(12, [2, 10])


@pytest.mark.parametrize("ell", range(2, 6))
def test_quotient_euler_is_invariant_part(ell):
    chi = euler_sym(ell)
    assert quotient_euler_sym(ell) == chi.isotypic(trivial_label(chi.group.g))


def test_dps_examples():
    c12 = Cyclic(12)
    assert dps_graded(3) == GradedRep.from_t(c12, {0: gammas(12, [0]), 1: gammas(12, [2, 10]), 2: gammas(12, [3, 9])})
    d4 = dps_graded(4)
    assert d4.t_coefficient(3) == gammas(20, [2, 6, 14, 18])
    assert d4.t_coefficient(2) == gammas(20, [5, 15])
    assert d4.t_coefficient(1) == RepElement(Cyclic(20), {})


@pytest.mark.parametrize("ell", range(2, 8))
def test_dps_alternating_sum(ell):
    assert alternating_sum(dps_graded(ell)) == quotient_euler_sym(ell)


def test_dense_edges():
    e4 = dense_edges_braid(4)
    assert e4.by_shape((3, 1, 1)) == DenseEdge(2, 3, 10, (3, 1, 1))
    assert e4.by_shape((4, 1)) == DenseEdge(3, 6, 5, (4, 1))
    assert e4.center().multiplicity == 10
    assert e4.by_shape((3, 2)) is None
    e2 = dense_edges_braid(2)
    assert [(e.codim, e.multiplicity, e.count) for e in e2.proper()] == [(1, 1, 3)]
    assert e2.center().multiplicity == 3
    with pytest.raises(ValueError):
        dense_edges_braid(1)


@pytest.mark.parametrize("ell", range(2, 8))
def test_dense_edge_multiplicities(ell):
    for s, e in enumerate(reversed(dense_edges_braid(ell).edges), start=1):
        assert e.codim == ell + 1 - s
        assert e.multiplicity == (ell + 2 - s) * (ell + 1 - s) // 2


@pytest.mark.parametrize("ell", (2, 3, 4))
def test_golden_checks_pass(ell):
    gc = golden_cohomology_sym(ell)
    assert alternating_sum(gc.graded) == euler_sym(ell)
    assert gc.invariant_part() == dps_graded(ell)
    assert gc.graded.t_coefficient(0) == h0_sym(ell)
    assert monodromy_degree_check(gc.monodromy(), dense_edges_braid(ell)).passed
    assert faithful_check(gc.monodromy(), ell, chi_u_sym(ell)).passed


def test_monodromy_check_catches_order_seven():
    fake = GradedRep.from_t(Cyclic(70), {0: gammas(70, [0]), 1: gammas(70, [10])})  # gamma_10 has order 7
    rep = monodromy_degree_check(fake, dense_edges_braid(4))
    assert not rep.passed and "order 7" in rep.violations[0]


def test_monodromy_check_gcd_instance():
    # order 6 in degree 2 for ell = 3 needs the codim-3 edge with m_X = 6
    g = GradedRep.from_t(Cyclic(6), {0: gammas(6, [0]), 2: gammas(6, [1, 5])})
    assert monodromy_degree_check(g, dense_edges_braid(3)).passed
    g = GradedRep.from_t(Cyclic(6), {0: gammas(6, [0]), 1: gammas(6, [1])})
    assert not monodromy_degree_check(g, dense_edges_braid(3)).passed


def test_faithful_examples():
    s5 = golden_cohomology_sym(4).monodromy()
    assert s5.t_coefficient(3)[1] == 6
    assert all(s5.t_coefficient(j)[1] == 0 for j in (0, 1, 2))
    s4 = golden_cohomology_sym(3).monodromy()
    assert s4.t_coefficient(2)[1] == 2
    # every nontrivial character of mu_2 is faithful
    g = GradedRep.from_t(Cyclic(2), {0: gammas(2, [0]), 1: gammas(2, [1], 3)})
    assert faithful_check(g, 2, 3).passed
    assert not faithful_check(g, 2, 2).passed


def test_assemble_rank3():
    gd = load_golden()
    gc = golden_cohomology_sym(3)
    h1, h2 = assemble_rank3(euler_sym(3), h0_sym(3), gd.value("s4.complement"), 14)
    assert h1 == gc.graded.t_coefficient(1)
    assert h2 == gc.graded.t_coefficient(2)
    with pytest.raises(DimensionMismatch):
        assemble_rank3(euler_sym(3), h0_sym(3), gd.value("s4.complement"), 13)


def test_assemble_degenerate():
    group = sym_gamma(2)
    h0 = h0_sym(2)
    pgu = GradedRep.from_t(group.g, {0: RepElement(group.g, {(3,): 1}), 1: RepElement(group.g, {(2, 1): 1})})
    chi = h0.scale(3)
    h1, h2 = assemble_rank3(chi, h0, pgu, 4)
    assert h1 == h0 * lift(pgu.t_coefficient(1), group)
    assert h2 == chi - h0 + h1
