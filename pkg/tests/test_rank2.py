import pytest

from milnorfibre.catalog import catalog, chi_U
from milnorfibre.cyclotomic import rational, root
from milnorfibre.errors import EvenNotSupported, MissingModel
from milnorfibre.groups import Abstract, Cyclic, Dihedral, Gamma0, Monomial
from milnorfibre.reps import GradedRep, RepElement, gammas, graded_map, specialize, theta, to_weight
from milnorfibre.rank2 import (Rank2Element, euler_dimension, h0_general, h1_dim_nonuniform, h1_f0_dihedral,
                               h1_f0_dihedral_printed, h1_f0_monodromy, h1_f0_uniform, os_character,
                               pd_rank2_monodromy, spectrum_rank2, uniform_gamma0, weight_poly_dihedral)
from milnorfibre.spectrum import Spectrum

I2 = ((rational(1), rational(0)), (rational(0), rational(1)))
SWAP = ((rational(0), rational(1)), (rational(1), rational(0)))


def test_fixed_space_dimensions():
    assert Rank2Element(I2, rational(1)).fix_dim == 2
    assert Rank2Element(I2, root(3, 1)).fix_dim == 0
    assert Rank2Element(SWAP, rational(1)).fix_dim == 1
    assert Rank2Element(SWAP, rational(-1)).fix_dim == 1
    assert Rank2Element(SWAP, root(3, 1)).fix_dim == 0


def test_os_character():
    # (1 - d)^k for k = dim of the fixed space
    assert os_character(5, Rank2Element(I2, rational(1))) == rational(16)
    assert os_character(5, Rank2Element(SWAP, rational(1))) == rational(-4)
    assert os_character(5, Rank2Element(I2, root(5, 1))) == rational(1)


def test_monodromy_examples():
    assert h1_f0_monodromy(3) == RepElement(Cyclic(3), {0: 2, 1: 1, 2: 1})
    assert h1_f0_monodromy(2) == gammas(2, [0])
    with pytest.raises(ValueError):
        h1_f0_monodromy(1)


@pytest.mark.parametrize("d", range(2, 31))
def test_monodromy_dimension(d):
    assert h1_f0_monodromy(d).dim() == (d - 1) ** 2


def test_dihedral_p3():
    g0 = Gamma0(Dihedral(3), 6, 2)
    assert h1_f0_dihedral(3) == RepElement(g0, {("1", 1): 1, ("eps", 2): 1, ("chi1", 0): 1})


@pytest.mark.parametrize("p", range(3, 13))
def test_dihedral_formula(p):
    x = h1_f0_dihedral(p)
    assert x.is_effective()
    assert x.dim() == (p - 1) ** 2
    assert theta(x, p) == h1_f0_monodromy(p)
    assert x == h1_f0_uniform(Dihedral(p))


@pytest.mark.parametrize("p", [4, 6, 8])
def test_printed_even_variant_fails_trace_check(p):
    assert h1_f0_dihedral_printed(p) != h1_f0_uniform(Dihedral(p))
    assert theta(h1_f0_dihedral_printed(p), p) == h1_f0_monodromy(p)  # same dimensions, different characters


def test_dihedral_too_small():
    with pytest.raises(ValueError):
        h1_f0_dihedral(2)


@pytest.mark.parametrize("model,d", [(Monomial(4, 2), 6), (Monomial(6, 3), 8)])
def test_uniform_models(model, d):
    x = h1_f0_uniform(model)
    assert x.group.d == d
    assert x.is_effective() and x.dim() == (d - 1) ** 2
    assert theta(x, d) == h1_f0_monodromy(d)


def test_uniform_model_errors():
    with pytest.raises(MissingModel):
        uniform_gamma0(Monomial(6, 2))
    with pytest.raises(MissingModel):
        h1_f0_uniform(Dihedral(5), e=3)


def test_h0_general():
    assert h0_general(2, 3, Dihedral(3)) == RepElement(h0_general(2, 3, Dihedral(3)).group,
                                                       {("1", 0): 1, ("eps", 3): 1})
    g4 = h0_general(3, 4, Abstract("G4", 3))
    assert set(g4.items()) == {(("1", 0), 1), (("eps", 4), 1), (("eps^2", 8), 1)}
    with pytest.raises(ValueError):
        h0_general(0, 3, Dihedral(3))


def test_pd_examples():
    c3 = Cyclic(3)
    assert pd_rank2_monodromy(3) == GradedRep(c3, {(0, 0, 0): gammas(3, [0]), (1, 0, 1): gammas(3, [2]),
                                                   (0, 1, 1): gammas(3, [1]), (1, 1, 1): gammas(3, [0], 2)})
    pd6 = pd_rank2_monodromy(6)
    assert pd6[(1, 1, 1)] == gammas(6, [0], 5)
    assert pd6[(1, 0, 1)] == RepElement(Cyclic(6), {2: 1, 3: 2, 4: 3, 5: 4})


@pytest.mark.parametrize("d", range(2, 16))
def test_pd_specialises_to_monodromy(d):
    pd = pd_rank2_monodromy(d)
    assert specialize(pd, u=1, v=1).t_coefficient(1) == h1_f0_monodromy(d)


def test_spectrum_examples():
    assert spectrum_rank2(3) == Spectrum.build(3, {2: 1, 3: 2, 4: 1})
    assert spectrum_rank2(6) == Spectrum.build(6, {2: 1, 3: 2, 4: 3, 5: 4, 6: 5, 7: 4, 8: 3, 9: 2, 10: 1})


@pytest.mark.parametrize("d", range(2, 20))
def test_spectrum_total(d):
    # reduced cohomology of F_0 sits in degree 1 only, so every sign is +
    sp = spectrum_rank2(d)
    assert sp.total() == (d - 1) ** 2
    assert all(c > 0 for _, c in sp.entries)


def test_weight_polynomial_p3():
    w = weight_poly_dihedral(3)
    assert graded_map(w, lambda r: theta(r, 3), Cyclic(3)) == to_weight(pd_rank2_monodromy(3))
    assert specialize(w, t=1).t_coefficient(0).dim() == 1 + 2 + 2


def test_weight_polynomial_even():
    with pytest.raises(EvenNotSupported):
        weight_poly_dihedral(4)


@pytest.mark.parametrize("p", [5, 7, 9])
def test_weight_polynomial_odd_dimensions(p):
    w = weight_poly_dihedral(p)
    assert w.t_coefficient(1).dim() + w.t_coefficient(2).dim() == (p - 1) ** 2


def test_euler_dimension_matches_complement():
    # chi(F) = m chi(U) since F -> U is an m-fold cover
    for data in catalog().values():
        if data.coexponents and data.hyperplane_orders is not None:
            assert euler_dimension(data) == data.m * chi_U(data), data.name


def test_h1_dim_nonuniform():
    h0, h1 = h1_dim_nonuniform(catalog()["G4"])
    assert h0 == gammas(12, [0, 4, 8])
    assert h1 == 3 + 24
    h0, h1 = h1_dim_nonuniform(catalog()["G(4,2,2)"])
    assert (h0, h1) == (gammas(12, [0, 6]), 50)
    with pytest.raises(ValueError):
        h1_dim_nonuniform(catalog()["S4"])
