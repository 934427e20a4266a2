import json

import pytest
from hypothesis import given, strategies as st

from milnorfibre.errors import ParseError
from milnorfibre.groups import Abstract, Cyclic, Dihedral, Gamma0, Monomial, Product, Symmetric, table
from milnorfibre.reps import GradedRep, RepElement
from milnorfibre.serialize import (dumps, format_expr, format_graded_terms, from_json, group_from_str, group_to_str,
                                   loads, parse_expr, parse_graded, parse_spectrum, to_json)
from milnorfibre.spectrum import Spectrum

GROUPS = [Cyclic(6), Symmetric(4), Dihedral(5), Dihedral(6), Monomial(4, 2), Product(Symmetric(3), 6),
          Product(Dihedral(4), 8), Gamma0(Symmetric(4), 12, 2), Gamma0(Dihedral(3), 6, 2)]


@st.composite
def elements(draw):
    group = draw(st.sampled_from(GROUPS))
    labels = table(group).labels
    chosen = draw(st.lists(st.sampled_from(labels), max_size=8))
    coeffs = draw(st.lists(st.integers(-9, 9), min_size=len(chosen), max_size=len(chosen)))
    return RepElement(group, dict(zip(chosen, coeffs)))


@st.composite
def graded(draw):
    x = draw(elements())
    monos = draw(st.lists(st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 4)), max_size=4))
    return GradedRep(x.group, {k: x.scale(i + 1) for i, k in enumerate(monos)})


@st.composite
def spectra(draw):
    d = draw(st.integers(1, 12))
    entries = draw(st.dictionaries(st.integers(-30, 60), st.integers(-40, 40), max_size=10))
    return Spectrum.build(d, entries)


@given(elements())
def test_expr_round_trip(x):
    assert parse_expr(x.group, format_expr(x)) == x


@given(graded())
def test_graded_round_trip(a):
    assert parse_graded(a.group, format_graded_terms(a)) == a


@given(spectra())
def test_spectrum_round_trip(sp):
    assert parse_spectrum(str(sp), sp.d) == sp


@given(st.one_of(elements(), graded(), spectra()))
def test_json_round_trip(obj):
    text = dumps(obj)
    assert loads(text) == obj
    assert from_json(json.loads(json.dumps(to_json(obj)))) == obj


@pytest.mark.parametrize("group", GROUPS + [Abstract("G4", 3), Product(Abstract("G4", 3), 12)])
def test_group_strings(group):
    assert group_from_str(group_to_str(group)) == group


def test_expr_examples():
    p = Product(Dihedral(3), 6)
    x = parse_expr(p, "1*g1 + eps*g2 + chi1*g0")
    assert x == RepElement(p, {("1", 1): 1, ("eps", 2): 1, ("chi1", 0): 1})
    assert parse_expr(Cyclic(4), "2 g0 - g3") == RepElement(Cyclic(4), {0: 2, 3: -1})
    assert parse_expr(Cyclic(4), "0") == RepElement(Cyclic(4), {})


def test_spectrum_text():
    sp = Spectrum.build(3, {0: 3, 2: 1, 3: 2, 4: 1, -6: -1})
    assert str(sp) == "-t^(-2) + 3 + t^(2/3) + 2t + t^(4/3)"
    assert parse_spectrum(str(sp), 3) == sp
    assert str(Spectrum.build(5, {})) == "0"


@pytest.mark.parametrize("text", ["g", "2 ** g1", "(5)*g0", "g0 +", "chi9*g0"])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_expr(Product(Dihedral(3), 6), text)


def test_parse_errors_other():
    with pytest.raises(ParseError):
        group_from_str("nonsense(3)")
    with pytest.raises(ParseError):
        parse_spectrum("t^(1/2) + @", 2)
    with pytest.raises(ParseError):
        from_json({"type": "unknown"})
