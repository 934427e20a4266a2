from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from milnorfibre.cyclotomic import cyclotomic_polynomial, euler_phi, rational, root
from milnorfibre.errors import NotRational

ORDERS = [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 15, 16, 18, 20, 24]


@st.composite
def cyclotomics(draw, orders=ORDERS):
    m = draw(st.sampled_from(orders))
    coeffs = draw(st.lists(st.integers(-4, 4), min_size=1, max_size=m))
    den = draw(st.integers(1, 3))
    x = rational(0)
    for k, c in enumerate(coeffs):
        if c:
            x = x + root(m, k) * Fraction(c, den)
    return x


def test_root_examples():
    assert root(4, 2) == rational(-1)
    assert root(6, 3) == rational(-1)
    assert root(12, 0) == rational(1)


def test_add_examples():
    assert root(3, 0) + root(3, 1) + root(3, 2) == 0
    assert root(6, 1) + root(6, 5) == rational(1)
    assert root(5, 1) + 0 == root(5, 1)


def test_mul_examples():
    assert root(12, 1) * root(12, 11) == rational(1)
    assert root(3, 1) * root(3, 1) == root(3, 2)


def test_conj_examples():
    assert root(5, 2).conj() == root(5, 3)
    assert rational(Fraction(3, 7)).conj() == rational(Fraction(3, 7))


def test_as_rational():
    assert (root(6, 1) + root(6, 5)).as_rational() == 1
    assert sum((root(10, j) for j in range(10)), rational(0)).as_rational() == 0
    with pytest.raises(NotRational):
        root(8, 1).as_rational()


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)
    for m in range(1, 40):
        assert len(cyclotomic_polynomial(m)) == euler_phi(m) + 1


@pytest.mark.parametrize("m", range(1, 61))
def test_roots_of_unity(m):
    total = rational(0)
    for k in range(m):
        z = root(m, k)
        assert z ** m == rational(1)
        total = total + z
    assert total == (rational(1) if m == 1 else rational(0))


def test_mixed_orders_embed():
    # zeta_3 = zeta_6^2 = zeta_12^4
    assert root(3, 1) == root(6, 2) == root(12, 4)
    assert root(4, 1) + root(3, 1) - root(12, 3) == root(12, 4)


@given(cyclotomics(), cyclotomics(), cyclotomics())
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a and a * b == b * a
    assert a - a == 0


@given(cyclotomics(), cyclotomics())
def test_conj_is_a_ring_automorphism(a, b):
    assert (a * b).conj() == a.conj() * b.conj()
    assert (a + b).conj() == a.conj() + b.conj()
    assert a.conj().conj() == a


@given(cyclotomics())
def test_inverse(a):
    if a.is_zero():
        return
    assert a * a.inverse() == rational(1)


@given(cyclotomics(orders=[1, 2, 3, 4, 5, 6, 8, 9, 10, 12]))
def test_embedding_round_trip(a):
    m = a.order
    assert a.embed(2 * m).descend(m) == a
    assert a.embed(2 * m) == a


@given(cyclotomics())
def test_norm_is_rational_and_nonnegative(a):
    # a * conj(a) summed over the Galois orbit is a positive rational unless a = 0
    m = a.order
    units = [k for k in range(1, m + 1) if Fraction(k, m).denominator == m]
    total = rational(0)
    for k in units:
        g = a.galois(k)
        total = total + g * g.conj()
    q = total.as_rational()
    assert q >= 0 and (q > 0) == (not a.is_zero())
