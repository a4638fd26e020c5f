from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from ncprod.cyclo import CycNum, cyc_inv, cyc_mul, cyclotomic_poly, euler_phi, primitive_root
from ncprod.errors import ConfigError, DivisionByZero
from ncprod.twisted import AlgebraConfig

from strategies import cycnums


@pytest.mark.parametrize(
    "m, expected",
    [
        (1, (-1, 1)),
        (2, (1, 1)),
        (4, (1, 0, 1)),  # (x^4 - 1) / ((x - 1)(x + 1))
        (6, (1, -1, 1)),  # (x^6 - 1) / ((x - 1)(x + 1)(x^2 + x + 1))
        (8, (1, 0, 0, 0, 1)),
        (12, (1, 0, -1, 0, 1)),
    ],
)
def test_cyclotomic_poly_values(m, expected):
    assert cyclotomic_poly(m) == expected


@pytest.mark.parametrize("m", range(1, 25))
def test_product_of_cyclotomics_is_x_m_minus_1(m):
    prod = [1]
    for d in range(1, m + 1):
        if m % d == 0:
            phi = cyclotomic_poly(d)
            out = [0] * (len(prod) + len(phi) - 1)
            for i, a in enumerate(prod):
                for j, b in enumerate(phi):
                    out[i + j] += a * b
            prod = out
    assert prod == [-1] + [0] * (m - 1) + [1]


def test_phi_degree_is_totient():
    from math import gcd

    for m in range(1, 40):
        assert euler_phi(m) == sum(1 for k in range(1, m + 1) if gcd(k, m) == 1)


def test_zeta4_squared_is_minus_one():
    z = CycNum.zeta(4)
    assert cyc_mul(z, z) == CycNum.rational(4, -1)


def test_identities():
    a = CycNum(6, [Fraction(1, 3), 2])
    assert a * CycNum.one(6) == a
    assert CycNum.zeta(6) + CycNum.zero(6) == CycNum.zeta(6)


def test_inverse_examples():
    for m in (3, 5, 7, 12):
        assert cyc_inv(CycNum.zeta(m)) == CycNum.zeta(m, m - 1)
    assert cyc_inv(CycNum.rational(5, 2)) == CycNum.rational(5, Fraction(1, 2))
    one_plus_i = CycNum(4, [1, 1])
    assert cyc_inv(one_plus_i) == CycNum(4, [Fraction(1, 2), Fraction(-1, 2)])
    assert one_plus_i * cyc_inv(one_plus_i) == 1


def test_inverse_of_zero_raises():
    with pytest.raises(DivisionByZero):
        cyc_inv(CycNum.zero(6))


def test_mismatched_fields_rejected():
    with pytest.raises(ConfigError):
        CycNum.zeta(4) + CycNum.zeta(6)


def test_zeta_powers_wrap():
    assert CycNum.zeta(6, 6) == 1
    assert CycNum.zeta(6, -1) == CycNum.zeta(6, 5)
    assert CycNum.zeta(6) ** 3 == -1


@pytest.mark.parametrize(
    "blocks, i, expected",
    [
        ((2,), 1, CycNum.rational(2, -1)),
        ((2, 3), 2, CycNum.zeta(6, 2)),
        ((4, 4), 1, CycNum.zeta(4)),
    ],
)
def test_primitive_root(blocks, i, expected):
    assert primitive_root(AlgebraConfig(blocks), i) == expected


def test_primitive_root_index_range():
    with pytest.raises(ConfigError):
        primitive_root(AlgebraConfig((2, 3)), 3)


@pytest.mark.parametrize("blocks", [(2,), (3,), (2, 3), (4, 6), (5,), (8, 2)])
def test_primitive_roots_are_primitive(blocks):
    cfg = AlgebraConfig(blocks)
    for i, n in enumerate(blocks, start=1):
        z = primitive_root(cfg, i)
        assert z ** n == 1
        assert all(z ** d != 1 for d in range(1, n) if n % d == 0)


def test_text_form():
    assert CycNum(6, [Fraction(1, 2), -1]).to_text() == "1/2 - z"
    assert CycNum(8, [0, 0, 3, -1]).to_text() == "3*z^2 - z^3"
    assert CycNum.zero(5).to_text() == "0"


@settings(max_examples=200, deadline=None)
@given(st.sampled_from([3, 4, 5, 8, 12]).flatmap(lambda m: st.tuples(cycnums(m), cycnums(m), cycnums(m))))
def test_field_axioms(abc):
    a, b, c = abc
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a + (-a) == 0


@settings(max_examples=200, deadline=None)
@given(st.sampled_from([3, 4, 5, 7, 9, 12]).flatmap(lambda m: cycnums(m, nonzero=True)))
def test_inverse_property(a):
    assert a * a.inverse() == CycNum.one(a.m)
