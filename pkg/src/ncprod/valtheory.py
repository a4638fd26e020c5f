"""Valuation, residue, leading-term factorisation, inversion and n-th roots.

The valuation of a nonzero element is the minimum of its support in the
right-to-left lexicographic order on Z^(2r); the value of 0 is infinity.
Inversion and root extraction run in the cone model graded by total
degree, where each homogeneous component is determined exactly from the
lower ones.
"""

from dataclasses import dataclass
from functools import total_ordering
from typing import Optional, Sequence, Tuple

from .cyclo import CycNum
from .errors import ConfigError, DivisionByZero, NotConeRegular, NotIntegral, NotOnePlusM, ValUncertain
from .twisted import TwistedElement, cocycle_exponent, rtl_key

__all__ = [
    "ValuationResult",
    "INFINITY",
    "rtl_lex_compare",
    "val",
    "residue",
    "leading_split",
    "inv",
    "nth_root",
    "in_valuation_ring",
    "in_maximal_ideal",
]


def rtl_lex_compare(alpha: Sequence[int], beta: Sequence[int]) -> int:
    """-1, 0 or 1 as alpha <, =, > beta, comparing the last coordinate first."""
    if len(alpha) != len(beta):
        raise ConfigError(f"cannot compare vectors of lengths {len(alpha)} and {len(beta)}")
    for a, b in zip(reversed(alpha), reversed(beta)):
        if a != b:
            return -1 if a < b else 1
    return 0


@total_ordering
@dataclass(frozen=True)
class ValuationResult:
    """An element of Gamma_D = Z^(2r), or infinity (``value is None``)."""

    value: Optional[Tuple[int, ...]]

    @property
    def is_infinite(self) -> bool:
        return self.value is None

    def __lt__(self, other):
        if not isinstance(other, ValuationResult):
            other = ValuationResult(tuple(other))
        if self.value is None:
            return False
        if other.value is None:
            return True
        return rtl_lex_compare(self.value, other.value) < 0

    def __add__(self, other):
        if self.value is None or other.value is None:
            return INFINITY
        return ValuationResult(tuple(a + b for a, b in zip(self.value, other.value)))

    def sign(self) -> int:
        """Comparison with the zero vector; infinity counts as positive."""
        if self.value is None:
            return 1
        return rtl_lex_compare(self.value, (0,) * len(self.value))

    def to_text(self) -> str:
        if self.value is None:
            return "inf"
        return "(" + ",".join(str(a) for a in self.value) + ")"

    def __str__(self):
        return self.to_text()


INFINITY = ValuationResult(None)


def val(f: TwistedElement) -> ValuationResult:
    if f.prec is not None:
        # an unseen term of higher degree may still be rtl-lex smaller,
        # unless the constant term is present (the cone's minimum)
        zero = f.config.zero_vector()
        if zero in f.terms:
            return ValuationResult(zero)
        raise ValUncertain(
            "valuation of a truncated element is only certified when its constant term is present"
        )
    if f.is_zero():
        return INFINITY
    return ValuationResult(min(f.terms, key=rtl_key))


def in_valuation_ring(f: TwistedElement) -> bool:
    return val(f).sign() >= 0


def in_maximal_ideal(f: TwistedElement) -> bool:
    return val(f).sign() > 0


def residue(f: TwistedElement) -> CycNum:
    """Image of f in the residue ring, which here is the coefficient field k."""
    if f.prec is None and val(f).sign() < 0:
        raise NotIntegral(f"v(f) = {val(f)} is negative")
    if f.prec is not None and not f.in_cone():
        raise NotIntegral("truncated element outside the cone")
    return f.coefficient(f.config.zero_vector())


def leading_split(f: TwistedElement):
    """Factor f = coeff * x^alpha * (1 + tail) with v(tail) > 0."""
    if f.prec is not None:
        raise ConfigError("leading_split needs an EXACT element")
    if f.is_zero():
        raise DivisionByZero("leading_split of zero")
    config = f.config
    alpha = val(f).value
    coeff = f.terms[alpha]
    neg = tuple(-a for a in alpha)
    # (c x^alpha)^-1 = c^-1 zeta^-e0 x^-alpha where x^-alpha x^alpha = zeta^e0
    e0 = cocycle_exponent(config, neg, alpha)
    inv_c = coeff.inverse()
    tail = {}
    for beta, b in f.terms.items():
        if beta == alpha:
            continue
        e = cocycle_exponent(config, neg, beta) - e0
        gamma = tuple(x - y for x, y in zip(beta, alpha))
        tail[gamma] = inv_c * b * CycNum.zeta(config.m, e)
    return coeff, alpha, TwistedElement(config, tail)


def inv(f: TwistedElement, N: int) -> TwistedElement:
    """Inverse of f modulo total degree > N.

    A single term c * x^alpha with alpha != 0 is inverted exactly (the
    result is EXACT, since x^-alpha leaves the cone).  Otherwise f must factor as
    c * (1 + t) with t in the nonnegative cone, and the result is
    c^-1 * sum_{k<=N} (-t)^k as a TRUNCATED(N) element.
    """
    if N < 0:
        raise ConfigError("precision must be nonnegative")
    config = f.config
    if f.prec is not None:
        if f.is_zero():
            raise DivisionByZero("inverse of a truncated zero")
        zero = config.zero_vector()
        c = f.terms.get(zero)
        if c is None:
            raise NotConeRegular("truncated input without a constant term is not a unit of the cone model")
        if N > f.prec:
            raise ConfigError(f"cannot invert to precision {N} from an input known to {f.prec}")
        tail = TwistedElement(config, {a: v / c for a, v in f.terms.items() if a != zero}, N)
        return _geometric(tail, N).scale(c.inverse())
    if f.is_zero():
        raise DivisionByZero("inverse of zero")
    if f.is_monomial():
        g = f.monomial_inverse()
        # scalars stay inside the cone model; other monomial inverses do not
        return g.truncate(N) if f.config.zero_vector() in f.terms else g
    coeff, alpha, tail = leading_split(f)
    if not tail.in_cone():
        raise NotConeRegular(f"tail {tail} leaves the nonnegative cone")
    if any(alpha):
        raise NotConeRegular(
            f"leading monomial exponent {alpha} is nonzero; its inverse leaves the nonnegative cone"
        )
    return _geometric(tail.truncate(N), N).scale(coeff.inverse())


def _geometric(tail: TwistedElement, N: int) -> TwistedElement:
    """sum_{k<=N} (-tail)^k; tail has no constant term, so k > N contributes nothing."""
    step = -tail
    total = TwistedElement.one(tail.config, N)
    power = total
    for _ in range(N):
        power = power * step
        if power.is_zero():
            break
        total = total + power
    return total


def nth_root(a: TwistedElement, n: int, N: int) -> TwistedElement:
    """The unique b in 1 + m_D with b^n = a modulo total degree > N.

    Writing b = 1 + b_1 + b_2 + ... in homogeneous components, the
    degree-d part of b^n equals n*b_d plus terms built from b_1..b_{d-1},
    so each b_d is solved for exactly (n is a unit of Q).
    """
    if n < 1:
        raise ConfigError(f"root degree must be positive, got {n}")
    if N < 0:
        raise ConfigError("precision must be nonnegative")
    config = a.config
    zero = config.zero_vector()
    if not a.in_cone():
        raise NotOnePlusM("input leaves the nonnegative cone")
    if not a.coefficient(zero).is_one():
        raise NotOnePlusM(f"constant term is {a.coefficient(zero)}, expected 1")
    if a.prec is not None and N > a.prec:
        raise ConfigError(f"cannot extract a root to precision {N} from an input known to {a.prec}")
    target = a.truncate(N)
    b = TwistedElement.one(config, N)
    inv_n = CycNum.rational(config.m, 1) / n
    for d in range(1, N + 1):
        approx = _truncated_power(b.truncate(d), n)
        correction = (target.homogeneous(d) - approx.homogeneous(d)).scale(inv_n)
        if correction:
            b = b + TwistedElement._raw(config, correction.terms, N)
    return b


def _truncated_power(b: TwistedElement, n: int) -> TwistedElement:
    result = TwistedElement.one(b.config, b.prec)
    for _ in range(n):
        result = result * b
    return result
