import random

import pytest

from ncprod.cyclo import CycNum
from ncprod.errors import BadIndex, NonunitPow, ParseError
from ncprod.expr import Add, Mul, Neg, Pow, Rational, Sub, Var, Zeta, format_element, parse, parse_element
from ncprod.sampling import STANDARD_CONFIGS, random_laurent
from ncprod.twisted import AlgebraConfig, TwistedElement

C2 = AlgebraConfig((2,))
C23 = AlgebraConfig((2, 3))


def test_parse_structure():
    assert parse("x1*y1 + 2", C2) == Add(Mul(Var("x", 1), Var("y", 1)), Rational(2))
    assert parse("x1^-2", C2) == Pow(Var("x", 1), -2)
    assert parse("-z - 2/3", C2) == Sub(Neg(Zeta()), Rational(2, 3))
    assert parse(" ( x1 ) ", C2) == Var("x", 1)


def test_precedence():
    assert parse("-x1^2", C2) == Neg(Pow(Var("x", 1), 2))
    assert parse("1 - 2*x1", C2) == Sub(Rational(1), Mul(Rational(2), Var("x", 1)))


@pytest.mark.parametrize("text", ["", "x", "x1 +", "2/0", "x1 y1", "(x1", "x1^y1", "1.5", "x1 ^ - "])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse(text, C2)


def test_parse_error_carries_position():
    with pytest.raises(ParseError) as exc:
        parse("x1 + * y1", C2)
    assert exc.value.position == 5


def test_bad_index():
    with pytest.raises(BadIndex):
        parse("x3", C23)
    with pytest.raises(BadIndex):
        parse("y0", C2)


def test_nonunit_pow():
    with pytest.raises(NonunitPow):
        parse("(1+x1)^-1", C2)
    assert parse_element("(2*x1*y1)^-1", C2) == TwistedElement.monomial(C2, (-1, -1), CycNum.rational(2, -1) / 2)


def test_eval_examples():
    assert parse_element("x1*y1 - z*y1*x1", C2).is_zero()
    assert parse_element("2/3", C2) == TwistedElement.constant(C2, CycNum.rational(2, 2) / 3)
    assert parse_element("y1*x1", C2) == TwistedElement.monomial(C2, (1, 1), -1)
    for blocks in [(3,), (2, 3), (4, 2)]:
        cfg = AlgebraConfig(blocks)
        for i in range(1, cfg.r + 1):
            zi = f"z^{cfg.m // cfg.blocks[i - 1]}"
            assert parse_element(f"x{i}*y{i} - {zi}*y{i}*x{i}", cfg).is_zero()


def test_format():
    f = parse_element("3 - x1 + 1/2*y1 + x1^-1*y1^2", C2)
    assert format_element(f) == "3 - x1 + 1/2*y1 + x1^-1*y1^2"
    g = parse_element("(1 + z)*x2 + z", C23)
    assert format_element(g) == "(z) + (1 + z)*x2"
    assert format_element(TwistedElement.zero(C2)) == "0"
    assert format_element(parse_element("-2*x1", C2)) == "-2*x1"


@pytest.mark.parametrize("blocks", STANDARD_CONFIGS)
def test_round_trip(blocks):
    cfg = AlgebraConfig(blocks)
    rng = random.Random(hash(blocks) & 0xFFFF)
    for _ in range(60):
        f = random_laurent(rng, cfg, 5, 3, nonzero=False)
        text = format_element(f)
        g = parse_element(text, cfg)
        assert g == f
        assert format_element(g) == text
