"""Field construction, arithmetic tables and involutions."""

import pytest
from hypothesis import given, strategies as st

from hermline import FROBENIUS, IDENTITY, make_field


def test_prime_field_arithmetic_is_mod_p():
    f = make_field(5)
    assert f.q == 5
    for a in f.elements():
        for b in f.elements():
            assert f.add(a, b) == (a + b) % 5
            assert f.mul(a, b) == (a * b) % 5
            assert f.sub(a, b) == (a - b) % 5


def test_frozen_moduli():
    """The modulus is the first irreducible polynomial in encoding order."""
    assert make_field(2, 2, "frobenius").modulus == (1, 1, 1)
    assert make_field(3, 2, "frobenius").modulus == (1, 0, 1)
    assert make_field(2, 3).modulus == (1, 1, 0, 1)


@pytest.mark.parametrize(
    "p,k,involution",
    [(2, 1, IDENTITY), (3, 1, IDENTITY), (2, 2, FROBENIUS), (3, 2, FROBENIUS), (2, 3, IDENTITY)],
)
def test_field_axioms_exhaustive(p, k, involution):
    f = make_field(p, k, involution)
    assert f.q == p**k
    elements = list(f.elements())
    for a in elements:
        assert f.add(a, 0) == a
        assert f.mul(a, 1) == a
        assert f.add(a, f.neg(a)) == 0
        for b in elements:
            assert f.add(a, b) == f.add(b, a)
            assert f.mul(a, b) == f.mul(b, a)
            for c in elements:
                assert f.add(f.add(a, b), c) == f.add(a, f.add(b, c))
                assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
                assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))


def test_inverses():
    f = make_field(3, 2, "frobenius")
    for a in f.elements():
        if a == 0:
            continue
        assert f.mul(a, f.inv(a)) == 1
    with pytest.raises(ZeroDivisionError):
        f.inv(0)


def test_subtraction_is_add_neg(f9):
    for a in f9.elements():
        for b in f9.elements():
            assert f9.sub(a, b) == f9.add(a, f9.neg(b))


@pytest.mark.parametrize("p,k", [(2, 2), (3, 2), (2, 4)])
def test_frobenius_involution_properties(p, k):
    f = make_field(p, k, FROBENIUS)
    fixed = []
    for a in f.elements():
        assert f.sigma(f.sigma(a)) == a
        assert f.sigma(a) == f.pow(a, p ** (k // 2))
        if f.sigma(a) == a:
            fixed.append(a)
        for b in f.elements():
            assert f.sigma(f.mul(a, b)) == f.mul(f.sigma(a), f.sigma(b))
            assert f.sigma(f.add(a, b)) == f.add(f.sigma(a), f.sigma(b))
    assert tuple(fixed) == f.fixed_elements
    assert len(fixed) == p ** (k // 2)


def test_frozen_fixed_elements(f4, f9):
    assert f4.fixed_elements == (0, 1)
    assert f9.fixed_elements == (0, 1, 2)


def test_identity_involution_fixes_everything(f3):
    assert f3.fixed_elements == tuple(f3.elements())
    for a in f3.elements():
        assert f3.sigma(a) == a


def test_pow_matches_repeated_multiplication(f4):
    for a in f4.elements():
        acc = 1
        for e in range(10):
            assert f4.pow(a, e) == acc
            acc = f4.mul(acc, a)
    assert f4.pow(2, -1) == f4.inv(2)
    assert f4.pow(3, -2) == f4.inv(f4.mul(3, 3))


def test_multiplicative_group_order(f9):
    """Nonzero elements satisfy a^(q-1) = 1."""
    for a in f9.elements():
        if a:
            assert f9.pow(a, f9.q - 1) == 1


def test_frobenius_power_maps(f9):
    for a in f9.elements():
        assert f9.frobenius(a, 0) == a
        assert f9.frobenius(a, 1) == f9.pow(a, 3)
        assert f9.frobenius(a, 2) == a


def test_coeffs_roundtrip(f9):
    for a in f9.elements():
        coeffs = f9.coeffs(a)
        assert len(coeffs) == f9.k
        assert f9.from_coeffs(coeffs) == a
    with pytest.raises(ValueError):
        f9.from_coeffs((1, 2, 3))


def test_element_string_roundtrip(f4):
    for a in f4.elements():
        assert f4.parse_element(f4.element_to_string(a)) == a
    with pytest.raises(ValueError):
        f4.parse_element("7")
    with pytest.raises(ValueError):
        f4.parse_element("x+1")


def test_check_element(f2):
    assert f2.check_element(1) == 1
    with pytest.raises(ValueError):
        f2.check_element(2)
    with pytest.raises(ValueError):
        f2.check_element(-1)


def test_make_field_validation():
    with pytest.raises(ValueError):
        make_field(4)
    with pytest.raises(ValueError):
        make_field(2, 0)
    with pytest.raises(ValueError):
        make_field(2, 2, "conjugation")
    with pytest.raises(ValueError):
        make_field(2, 3, FROBENIUS)


def test_involution_aliases():
    assert make_field(2, 2, "frobenius_half") is make_field(2, 2, FROBENIUS)
    assert make_field(3, 1, "id") is make_field(3, 1, IDENTITY)


def test_field_cache_and_equality():
    assert make_field(2) is make_field(2)
    assert make_field(2) == make_field(2, 1, IDENTITY)
    assert make_field(2) != make_field(3)
    assert make_field(2, 2, IDENTITY) != make_field(2, 2, FROBENIUS)


def test_repr():
    assert repr(make_field(2)) == "GF(2)"
    assert repr(make_field(3, 2, FROBENIUS)) == "GF(9)[frobenius]"


@given(st.integers(min_value=0, max_value=26), st.integers(min_value=0, max_value=26))
def test_gf27_commutativity_property(a, b):
    f = make_field(3, 3)
    assert f.mul(a, b) == f.mul(b, a)
    assert f.add(a, b) == f.add(b, a)


@given(st.integers(min_value=1, max_value=48), st.integers(min_value=0, max_value=20))
def test_gf49_power_law_property(a, e):
    f = make_field(7, 2, FROBENIUS)
    assert f.pow(a, e + 1) == f.mul(f.pow(a, e), a)
    assert f.sigma(f.pow(a, e)) == f.pow(f.sigma(a), e)
