import pickle

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from convmds import element_order, field_arith, make_field, primitive_elements
from convmds.errors import (
    BadParametersError,
    DivisionByZeroError,
    FieldMismatchError,
    FieldOverflowError,
    NotPrimeError,
    ZeroElementError,
)
from convmds.gf import euler_phi, is_irreducible, is_primitive

from .conftest import FIELD_PARAMS, field_and_elements


def test_prime_field_basics():
    F = make_field(11)
    assert F(7) + F(9) == F(5)
    assert F(3) * F(4) == F(1)
    assert F(3).inverse() == F(4)
    assert F(2) ** -5 == F(10)
    assert F(2) ** 0 == F.one
    assert -F(0) == F(0)


def test_field_arith_dispatch():
    F = make_field(11)
    assert field_arith("add", F(7), F(9)) == F(5)
    assert field_arith("sub", F(3), F(5)) == F(9)
    assert field_arith("mul", F(3), F(4)) == F(1)
    assert field_arith("div", F(1), F(3)) == F(4)
    assert field_arith("inv", F(3)) == F(4)
    assert field_arith("pow", F(2), -5) == F(10)


def test_zero_has_no_inverse():
    F = make_field(7)
    with pytest.raises(DivisionByZeroError):
        F(0).inverse()
    with pytest.raises(DivisionByZeroError):
        F(3) / F(0)
    with pytest.raises(ZeroElementError):
        element_order(F(0))


def test_make_field_validation():
    with pytest.raises(NotPrimeError):
        make_field(4)
    with pytest.raises(BadParametersError):
        make_field(1)
    with pytest.raises(FieldOverflowError):
        make_field(2, 21)
    with pytest.raises(BadParametersError):
        make_field(3, 2, [1, 0, 2])  # x^2 + 2 = (x+1)(x+2) over F_3


def test_field_is_cached_and_picklable():
    F = make_field(3, 2)
    assert make_field(3, 2) is F
    assert pickle.loads(pickle.dumps(F)) is F
    x = F((1, 2))
    assert pickle.loads(pickle.dumps(x)) == x


def test_f9_default_modulus_and_arithmetic():
    F9 = make_field(3, 2)
    assert tuple(F9.modulus) == (1, 0, 1)  # x^2 + 1
    x = F9((0, 1))
    assert x * x == F9(2)  # x^2 = -1
    assert F9((1, 2)) + F9((2, 2)) == F9((0, 1))
    assert x.rep == (0, 1)
    assert repr(F9((1, 2))) == "F9(1, 2)"


def test_mixing_fields_is_an_error():
    with pytest.raises(FieldMismatchError):
        make_field(5)(1) + make_field(7)(1)


@pytest.mark.parametrize("p,m", FIELD_PARAMS)
def test_primitive_count_is_phi(p, m):
    F = make_field(p, m)
    prims = primitive_elements(F)
    assert len(prims) == euler_phi(F.q - 1)
    assert prims == sorted(prims)
    for a in prims:
        assert len({(a**i).value for i in range(F.q - 1)}) == F.q - 1


def test_primitive_elements_known_values():
    assert [a.value for a in primitive_elements(make_field(11))] == [2, 6, 7, 8]
    F9 = make_field(3, 2)
    assert len(primitive_elements(F9)) == 4
    assert not is_primitive(make_field(11)(10))


@pytest.mark.parametrize("p,m", FIELD_PARAMS)
def test_element_orders_divide_group_order(p, m):
    F = make_field(p, m)
    for a in F.elements()[1:]:
        d = element_order(a)
        assert (F.q - 1) % d == 0
        assert a**d == F.one


def test_default_moduli_are_irreducible():
    for p, m in FIELD_PARAMS:
        F = make_field(p, m)
        if m > 1:
            assert is_irreducible(F.modulus, p)


# -- invariant suite (>= 10^3 cases each) ----------------------------------

@settings(max_examples=1000, deadline=None)
@given(field_and_elements())
def test_field_axioms(data):
    F, (a, b, c) = data
    assert a + b == b + a and a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + F.zero == a and a * F.one == a
    assert a + (-a) == F.zero
    assert a - b == a + (-b)
    if a:
        assert a * a.inverse() == F.one
        assert (b / a) * a == b
        assert a ** (F.q - 1) == F.one


@settings(max_examples=1000, deadline=None)
@given(field_and_elements(count=2))
def test_frobenius_is_additive_and_multiplicative(data):
    F, (a, b) = data
    p = F.p
    assert (a + b) ** p == a**p + b**p
    assert (a * b) ** p == a**p * b**p
    assert a**F.q == a


@settings(max_examples=1000, deadline=None)
@given(field_and_elements(count=1), st.integers(-40, 40), st.integers(-40, 40))
def test_power_laws(data, e1, e2):
    F, (a,) = data
    if not a:
        return
    assert a**e1 * a**e2 == a ** (e1 + e2)
    assert (a**e1) ** e2 == a ** (e1 * e2)
