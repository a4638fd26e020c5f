import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from ncprod.cyclo import CycNum, primitive_root
from ncprod.errors import ConfigError
from ncprod.expr import parse_element
from ncprod.twisted import (
    AlgebraConfig,
    Mode,
    TwistedElement,
    cocycle,
    monomial_word,
    mul,
    pow,
    reduce_word,
)

from strategies import CONFIGS, configs, laurent

X1, Y1, X2, Y2 = 1, 2, 3, 4  # generator ids


def mono(cfg, alpha, c=1):
    return TwistedElement.monomial(cfg, alpha, c)


def test_config_fields():
    cfg = AlgebraConfig((2, 3))
    assert (cfg.r, cfg.n, cfg.m, cfg.dim) == (2, 6, 6, 4)
    assert AlgebraConfig((4, 6)).m == 12
    assert AlgebraConfig((2, 2), m=8).m == 8


@pytest.mark.parametrize("bad", [(), (1,), (2, 0)])
def test_config_rejects_small_blocks(bad):
    with pytest.raises(ConfigError):
        AlgebraConfig(bad)


def test_config_rejects_bad_m():
    with pytest.raises(ConfigError):
        AlgebraConfig((2, 3), m=4)


def test_cocycle_examples():
    c2 = AlgebraConfig((2,))
    assert cocycle(c2, (0, 1), (1, 0)) == -1
    assert cocycle(c2, (1, 0), (0, 1)) == 1
    c3 = AlgebraConfig((3,))
    assert cocycle(c3, (0, 2), (1, 0)) == CycNum.zeta(3, -2)


def test_cocycle_length_mismatch():
    with pytest.raises(ConfigError):
        cocycle(AlgebraConfig((2,)), (1, 0, 0), (0, 1))


def test_reduce_word_examples():
    c2 = AlgebraConfig((2,))
    assert reduce_word(c2, [(Y1, 1), (X1, 1)]) == mono(c2, (1, 1), -1)
    assert reduce_word(c2, [(X1, 1), (Y1, 1)]) == mono(c2, (1, 1))
    c23 = AlgebraConfig((2, 3))
    assert reduce_word(c23, [(X2, 1), (Y1, 1)]) == mono(c23, (0, 1, 1, 0))


def test_reduce_word_inverse_letters():
    # y^-1 x = zeta x y^-1 and y x^-1 = zeta x^-1 y
    c3 = AlgebraConfig((3,))
    z = CycNum.zeta(3)
    assert reduce_word(c3, [(Y1, -1), (X1, 1)]) == mono(c3, (1, -1), z)
    assert reduce_word(c3, [(Y1, 1), (X1, -1)]) == mono(c3, (-1, 1), z)
    assert reduce_word(c3, [(Y1, -1), (X1, -1)]) == mono(c3, (-1, -1), z ** 2)
    # x x^-1 collapses to 1
    assert reduce_word(c3, [(X1, 1), (Y1, 1), (X1, -1)]) == mono(c3, (0, 1), z)


def test_mul_examples():
    c2 = AlgebraConfig((2,))
    xy = mono(c2, (1, 1))
    assert xy * xy == mono(c2, (2, 2), -1)
    assert xy * TwistedElement.one(c2) == xy
    x, y = parse_element("x1", c2), parse_element("y1", c2)
    assert (x + y) * (x - y) == mono(c2, (2, 0)) - mono(c2, (0, 2)) - mono(c2, (1, 1), 2)


def _expand_by_words(cfg, f, g):
    """Product computed term by term through the rewriting oracle only."""
    total = TwistedElement.zero(cfg)
    for a, ca in f.terms.items():
        for b, cb in g.terms.items():
            total = total + reduce_word(cfg, monomial_word(cfg, a) + monomial_word(cfg, b)).scale(ca * cb)
    return total


@settings(max_examples=60, deadline=None)
@given(configs.flatmap(lambda c: st.tuples(laurent(c, 3, 2), laurent(c, 3, 2))))
def test_mul_matches_word_expansion(fg):
    f, g = fg
    assert mul(f, g) == _expand_by_words(f.config, f, g)


def test_add_neg_scalar():
    c2 = AlgebraConfig((2,))
    f = parse_element("x1 + y1", c2)
    assert f + TwistedElement.zero(c2) == f
    assert (f + (-f)).is_zero()
    assert f.scale(2) == parse_element("2*x1 + 2*y1", c2)


def test_pow_examples():
    c2 = AlgebraConfig((2,))
    x = parse_element("x1", c2)
    assert pow(x, 3) == mono(c2, (3, 0))
    assert pow(mono(c2, (1, 1)), 2) == mono(c2, (2, 2), -1)
    assert pow(x + 1, 0) == TwistedElement.one(c2)


@pytest.mark.parametrize("blocks", [(2,), (2, 2), (2, 3), (3, 3), (4, 2)])
def test_defining_relations_exhaustive(blocks):
    cfg = AlgebraConfig(blocks)
    gens = [mono(cfg, cfg.basis_vector(k)) for k in range(cfg.dim)]
    for a, b in itertools.product(range(cfg.dim), repeat=2):
        if a % 2 == 0 and b == a + 1:
            z = primitive_root(cfg, a // 2 + 1)
            assert (gens[a] * gens[b] - (gens[b] * gens[a]).scale(z)).is_zero()
        elif a // 2 != b // 2:
            assert gens[a] * gens[b] == gens[b] * gens[a]
    s = CycNum(cfg.m, [1, 2])
    for g in gens:
        assert g * TwistedElement.constant(cfg, s) == TwistedElement.constant(cfg, s) * g


@pytest.mark.parametrize("blocks", CONFIGS)
def test_cocycle_condition(blocks):
    cfg = AlgebraConfig(blocks)
    rng = random.Random(7)
    for _ in range(300):
        a, b, c = (tuple(rng.randint(-4, 4) for _ in range(cfg.dim)) for _ in range(3))
        ab = tuple(x + y for x, y in zip(a, b))
        bc = tuple(x + y for x, y in zip(b, c))
        assert cocycle(cfg, a, b) * cocycle(cfg, ab, c) == cocycle(cfg, b, c) * cocycle(cfg, a, bc)


@settings(max_examples=40, deadline=None)
@given(configs.flatmap(lambda c: st.tuples(laurent(c, 3, 2), laurent(c, 3, 2), laurent(c, 3, 2))))
def test_associativity(fgh):
    f, g, h = fgh
    assert (f * g) * h == f * (g * h)


@settings(max_examples=80, deadline=None)
@given(configs.flatmap(lambda c: st.tuples(laurent(c), laurent(c))))
def test_no_zero_divisors(fg):
    f, g = fg
    assert not (f * g).is_zero()


def test_truncated_mode_rules():
    c2 = AlgebraConfig((2,))
    f = parse_element("1 + x1 + x1^2*y1^3", c2).truncate(3)
    assert f.mode is Mode.TRUNCATED
    assert set(f.terms) == {(0, 0), (1, 0)}
    g = parse_element("1 + y1", c2).truncate(5)
    assert (f * g).prec == 3
    e = parse_element("x1 + x1^4", c2)
    assert (f + e).prec == 3 and (4, 0) not in (f + e).terms
    with pytest.raises(ConfigError):
        f * parse_element("x1^-1", c2)


def test_config_mismatch():
    with pytest.raises(ConfigError):
        TwistedElement.one(AlgebraConfig((2,))) + TwistedElement.one(AlgebraConfig((3,)))


def test_monomial_inverse():
    cfg = AlgebraConfig((3, 2))
    f = mono(cfg, (2, -1, 1, 3), CycNum(6, [1, 1]))
    assert f * f.monomial_inverse() == TwistedElement.one(cfg)
    assert f.monomial_inverse() * f == TwistedElement.one(cfg)
