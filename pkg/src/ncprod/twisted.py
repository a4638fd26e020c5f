"""Normal-form arithmetic in the twisted Laurent algebra.

Generators x_1, y_1, ..., x_r, y_r over Q(zeta_m) satisfy

    x_i y_i = zeta_{n_i} y_i x_i,

and every other pair of generators commutes (scalars are central).  An
element is a finite sum of terms ``c * x^alpha`` with alpha in Z^(2r) laid
out as (i_1, j_1, ..., i_r, j_r) and the monomial written in the fixed
order x_1^i_1 y_1^j_1 ... x_r^i_r y_r^j_r with the scalar on the left.

Two storage modes exist.  EXACT elements have finite support anywhere in
Z^(2r).  TRUNCATED(N) elements live in the nonnegative cone and are known
modulo terms of total degree > N.
"""

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, reduce
from typing import Dict, Optional, Sequence, Tuple

from .cyclo import CycNum
from .errors import ConfigError, DivisionByZero

__all__ = [
    "AlgebraConfig",
    "Mode",
    "TwistedElement",
    "cocycle",
    "cocycle_exponent",
    "reduce_word",
    "monomial_word",
    "rtl_key",
    "mul",
    "add",
    "neg",
    "sub",
    "scalar_mul",
    "pow",
]

Exponent = Tuple[int, ...]


@dataclass(frozen=True)
class AlgebraConfig:
    """Block data (n_1, ..., n_r); ``m`` defaults to lcm(n_i) but may be any multiple."""

    blocks: Tuple[int, ...]
    m: int = 0
    n: int = field(init=False)

    def __post_init__(self):
        blocks = tuple(int(b) for b in self.blocks)
        if not blocks:
            raise ConfigError("at least one block is required")
        if any(b < 2 for b in blocks):
            raise ConfigError(f"every block must be >= 2, got {blocks}")
        lcm = reduce(math.lcm, blocks)
        m = self.m or lcm
        if m % lcm:
            raise ConfigError(f"m={m} is not a multiple of lcm{blocks}={lcm}")
        object.__setattr__(self, "blocks", blocks)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "n", math.prod(blocks))

    @property
    def r(self) -> int:
        return len(self.blocks)

    @property
    def dim(self) -> int:
        return 2 * len(self.blocks)

    @property
    def twist_steps(self) -> Tuple[int, ...]:
        """m / n_i: zeta_{n_i} is zeta_m raised to this."""
        return tuple(self.m // b for b in self.blocks)

    def zero_vector(self) -> Exponent:
        return (0,) * self.dim

    @cached_property
    def _basis(self):
        return tuple(tuple(int(i == k) for i in range(self.dim)) for k in range(self.dim))

    def basis_vector(self, k: int) -> Exponent:
        """Exponent of the k-th generator, 0-based over x_1, y_1, x_2, ..."""
        return self._basis[k]

    def generator_name(self, k: int) -> str:
        return f"{'xy'[k % 2]}{k // 2 + 1}"

    def check_vector(self, alpha: Sequence[int]) -> Exponent:
        if type(alpha) is not tuple:
            alpha = tuple(int(a) for a in alpha)
        if len(alpha) != self.dim:
            raise ConfigError(f"exponent vector {alpha} must have length {self.dim}")
        return alpha

    def describe(self) -> str:
        return f"Delta(Q(zeta_{self.m}); {', '.join(map(str, self.blocks))})"


def rtl_key(alpha: Sequence[int]) -> Tuple[int, ...]:
    """Sort key realising the right-to-left lexicographic order."""
    return tuple(reversed(alpha))


# ---------------------------------------------------------------------------
# cocycle and rewriting oracle
# ---------------------------------------------------------------------------

def cocycle_exponent(config: AlgebraConfig, alpha: Exponent, beta: Exponent) -> int:
    """e with x^alpha * x^beta = zeta_m^e * x^(alpha+beta).

    Only y_i^j x_i^i' swaps contribute, each giving zeta_{n_i}^(-j*i').
    """
    e = 0
    for t, step in enumerate(config.twist_steps):
        j = alpha[2 * t + 1]
        i2 = beta[2 * t]
        if j and i2:
            e -= j * i2 * step
    return e % config.m


def cocycle(config: AlgebraConfig, alpha: Sequence[int], beta: Sequence[int]) -> CycNum:
    alpha = config.check_vector(alpha)
    beta = config.check_vector(beta)
    return CycNum.zeta(config.m, cocycle_exponent(config, alpha, beta))


def monomial_word(config: AlgebraConfig, alpha: Sequence[int]):
    """Generator word (ids 1..2r, exponents +-1) spelling x^alpha in normal order."""
    alpha = config.check_vector(alpha)
    word = []
    for k, a in enumerate(alpha):
        word.extend([(k + 1, 1 if a > 0 else -1)] * abs(a))
    return word


def _swap_factor(config, left, right):
    """Exponent of zeta_m picked up when rewriting left*right as right*left.

    Only called when right must move in front of left, i.e. id(right) < id(left).
    Derived from x y = zeta y x:
        y x = zeta^-1 x y,     y^-1 x = zeta x y^-1,
        y x^-1 = zeta x^-1 y,  y^-1 x^-1 = zeta^-1 x^-1 y^-1.
    """
    (gl, el), (gr, er) = left, right
    block_l, block_r = (gl - 1) // 2, (gr - 1) // 2
    if block_l != block_r:
        return 0
    # same block, left is y_i and right is x_i
    table = {(1, 1): -1, (-1, 1): 1, (1, -1): 1, (-1, -1): -1}
    return table[(el, er)] * config.twist_steps[block_l]


def reduce_word(config: AlgebraConfig, word) -> "TwistedElement":
    """Normal-order a generator word by adjacent swaps (bubble sort).

    ``word`` is a sequence of ``(generator id, +-1)``; ids run 1..2r in the
    order x_1, y_1, ..., x_r, y_r.
    """
    letters = []
    for g, e in word:
        if not 1 <= g <= config.dim:
            raise ConfigError(f"generator id {g} outside 1..{config.dim}")
        if e not in (1, -1):
            raise ConfigError(f"letter exponent must be +-1, got {e}")
        letters.append((g, e))
    power = 0
    changed = True
    while changed:
        changed = False
        for k in range(len(letters) - 1):
            left, right = letters[k], letters[k + 1]
            if right[0] < left[0]:
                power += _swap_factor(config, left, right)
                letters[k], letters[k + 1] = right, left
                changed = True
    alpha = [0] * config.dim
    for g, e in letters:
        alpha[g - 1] += e
    coeff = CycNum.zeta(config.m, power)
    return TwistedElement(config, {tuple(alpha): coeff})


# ---------------------------------------------------------------------------
# elements
# ---------------------------------------------------------------------------

class Mode(enum.Enum):
    EXACT = "EXACT"
    TRUNCATED = "TRUNCATED"


def _meet_prec(p, q):
    if p is None:
        return q
    if q is None:
        return p
    return min(p, q)


class TwistedElement:
    """A finite sum of terms c * x^alpha.

    ``prec`` is None for EXACT elements, otherwise the total-degree bound N.
    """

    __slots__ = ("config", "terms", "prec")

    def __init__(self, config: AlgebraConfig, terms: Optional[Dict] = None, prec: Optional[int] = None):
        self.config = config
        self.prec = prec
        clean = {}
        for alpha, c in (terms or {}).items():
            alpha = config.check_vector(alpha)
            if not isinstance(c, CycNum):
                c = CycNum.rational(config.m, c)
            elif c.m != config.m:
                raise ConfigError(f"coefficient lives in Q(zeta_{c.m}), algebra uses m={config.m}")
            if c.is_zero():
                continue
            if prec is not None:
                if min(alpha) < 0:
                    raise ConfigError(f"truncated elements live in the nonnegative cone, got {alpha}")
                if sum(alpha) > prec:
                    continue
            clean[alpha] = c
        self.terms = clean

    @classmethod
    def _raw(cls, config, terms, prec):
        obj = cls.__new__(cls)
        obj.config = config
        obj.terms = terms
        obj.prec = prec
        return obj

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, config, prec=None):
        return cls._raw(config, {}, prec)

    @classmethod
    def constant(cls, config, c, prec=None):
        return cls(config, {config.zero_vector(): c}, prec)

    @classmethod
    def one(cls, config, prec=None):
        return cls.constant(config, 1, prec)

    @classmethod
    def monomial(cls, config, alpha, c=1, prec=None):
        return cls(config, {tuple(alpha): c}, prec)

    @classmethod
    def generator(cls, config, kind: str, index: int):
        """x_index or y_index (1-based)."""
        if not 1 <= index <= config.r:
            raise ConfigError(f"generator index {index} outside 1..{config.r}")
        k = 2 * (index - 1) + (0 if kind == "x" else 1)
        return cls.monomial(config, config.basis_vector(k))

    # -- basic properties ---------------------------------------------------

    @property
    def mode(self) -> Mode:
        return Mode.EXACT if self.prec is None else Mode.TRUNCATED

    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def coefficient(self, alpha) -> CycNum:
        return self.terms.get(tuple(alpha), CycNum.zero(self.config.m))

    def sorted_terms(self):
        """Terms in ascending right-to-left lexicographic order."""
        return sorted(self.terms.items(), key=lambda kv: rtl_key(kv[0]))

    def support(self):
        return [alpha for alpha, _ in self.sorted_terms()]

    def min_degree(self) -> Optional[int]:
        if not self.terms:
            return None
        return min(sum(a) for a in self.terms)

    def in_cone(self) -> bool:
        return all(min(a) >= 0 for a in self.terms)

    def truncate(self, N: int) -> "TwistedElement":
        """Reinterpret as TRUNCATED(N) (dropping terms above degree N)."""
        if self.prec is not None and N > self.prec:
            raise ConfigError(f"cannot raise precision from {self.prec} to {N}")
        return TwistedElement(self.config, self.terms, N)

    def homogeneous(self, d: int) -> "TwistedElement":
        return TwistedElement._raw(
            self.config, {a: c for a, c in self.terms.items() if sum(a) == d}, self.prec
        )

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, TwistedElement):
            if other.config != self.config:
                raise ConfigError(f"algebra mismatch: {self.config} vs {other.config}")
            return other
        if isinstance(other, (int, Fraction, CycNum)):
            return TwistedElement.constant(self.config, other)
        return NotImplemented

    def _aligned(self, other):
        """Bring both operands to the common precision."""
        prec = _meet_prec(self.prec, other.prec)
        a, b = self, other
        if prec is not None:
            if a.prec is None or a.prec > prec:
                a = _reinterpret(a, prec)
            if b.prec is None or b.prec > prec:
                b = _reinterpret(b, prec)
        return a, b, prec

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b, prec = self._aligned(other)
        terms = dict(a.terms)
        for alpha, c in b.terms.items():
            s = terms.get(alpha)
            s = c if s is None else s + c
            if s.is_zero():
                terms.pop(alpha, None)
            else:
                terms[alpha] = s
        return TwistedElement._raw(self.config, terms, prec)

    __radd__ = __add__

    def __neg__(self):
        return TwistedElement._raw(self.config, {a: -c for a, c in self.terms.items()}, self.prec)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "TwistedElement":
        """Left multiplication by a scalar (scalars are central)."""
        if not isinstance(c, CycNum):
            c = CycNum.rational(self.config.m, c)
        if c.is_zero():
            return TwistedElement.zero(self.config, self.prec)
        return TwistedElement._raw(self.config, {a: c * v for a, v in self.terms.items()}, self.prec)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, CycNum)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b, prec = self._aligned(other)
        config = self.config
        m = config.m
        steps = config.twist_steps
        zetas = [CycNum.zeta(m, e) for e in range(m)]
        acc = {}
        for alpha, ca in a.terms.items():
            da = sum(alpha)
            for beta, cb in b.terms.items():
                if prec is not None and da + sum(beta) > prec:
                    continue
                e = 0
                for t, step in enumerate(steps):
                    j = alpha[2 * t + 1]
                    if j:
                        e -= j * beta[2 * t] * step
                gamma = tuple(x + y for x, y in zip(alpha, beta))
                c = ca * cb
                if e % m:
                    c = c * zetas[e % m]
                prev = acc.get(gamma)
                acc[gamma] = c if prev is None else prev + c
        terms = {g: c for g, c in acc.items() if not c.is_zero()}
        return TwistedElement._raw(config, terms, prec)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, CycNum)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, e: int):
        if e < 0:
            if not self.is_monomial():
                raise ConfigError("negative powers are only defined for single-term units")
            return self.monomial_inverse() ** (-e)
        result = TwistedElement.one(self.config, self.prec)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def monomial_inverse(self) -> "TwistedElement":
        """Exact inverse of a single term c * x^alpha."""
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        if not self.is_monomial():
            raise ConfigError("monomial_inverse needs a single-term element")
        if self.prec is not None:
            raise ConfigError("monomial_inverse is only defined in EXACT mode")
        (alpha, c), = self.terms.items()
        neg = tuple(-a for a in alpha)
        # x^-alpha x^alpha = zeta^e, so (x^alpha)^-1 = zeta^-e x^-alpha
        e = cocycle_exponent(self.config, neg, alpha)
        coeff = c.inverse() * CycNum.zeta(self.config.m, -e)
        return TwistedElement._raw(self.config, {neg: coeff}, None)

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, CycNum)):
            other = TwistedElement.constant(self.config, other, self.prec)
        if not isinstance(other, TwistedElement):
            return NotImplemented
        return self.config == other.config and self.prec == other.prec and self.terms == other.terms

    def __hash__(self):
        return hash((self.config, self.prec, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        from .expr import format_element

        tag = "" if self.prec is None else f", prec={self.prec}"
        return f"TwistedElement({format_element(self)!r}{tag})"

    def __str__(self):
        from .expr import format_element

        return format_element(self)


def _reinterpret(f: TwistedElement, prec: int) -> TwistedElement:
    if f.prec is None and not f.in_cone():
        raise ConfigError("an EXACT element with negative exponents cannot join a truncated computation")
    return TwistedElement._raw(f.config, {a: c for a, c in f.terms.items() if sum(a) <= prec}, prec)


# functional spellings ------------------------------------------------------

def mul(f: TwistedElement, g: TwistedElement) -> TwistedElement:
    return f * g


def add(f: TwistedElement, g: TwistedElement) -> TwistedElement:
    return f + g


def sub(f: TwistedElement, g: TwistedElement) -> TwistedElement:
    return f - g


def neg(f: TwistedElement) -> TwistedElement:
    return -f


def scalar_mul(c, f: TwistedElement) -> TwistedElement:
    return f.scale(c)


def pow(f: TwistedElement, e: int) -> TwistedElement:  # noqa: A001 - mirrors the algebra op name
    if e < 0:
        raise ValueError("pow takes a nonnegative exponent; use inv for inverses")
    return f ** e
