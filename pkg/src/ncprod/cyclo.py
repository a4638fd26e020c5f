"""Exact arithmetic in the cyclotomic field Q(zeta_m).

An element is stored as its coefficient vector in the power basis
1, z, ..., z^(phi(m)-1) of Q[x]/(Phi_m), with every coefficient a
``fractions.Fraction``.  No floating point is ever used.
"""

from fractions import Fraction
from functools import lru_cache
from typing import Sequence, Tuple

from .errors import ConfigError, DivisionByZero, NcprodError

__all__ = [
    "CycNum",
    "cyclotomic_poly",
    "euler_phi",
    "cyc_add",
    "cyc_neg",
    "cyc_sub",
    "cyc_mul",
    "cyc_inv",
    "primitive_root",
]


# ---------------------------------------------------------------------------
# polynomial helpers (coefficient lists, lowest degree first)
# ---------------------------------------------------------------------------

def _trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return out


def _poly_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _trim(x - y for x, y in zip(a, b))


def _poly_divmod(a, b):
    """Quotient and remainder of a by b over Q (b nonzero)."""
    a = _trim(a)
    b = _trim(b)
    if not b:
        raise DivisionByZero("polynomial division by zero")
    lead = Fraction(b[-1])
    quot = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    rem = [Fraction(c) for c in a]
    while len(rem) >= len(b):
        c = rem[-1] / lead
        shift = len(rem) - len(b)
        quot[shift] = c
        for i, bi in enumerate(b):
            rem[shift + i] -= c * bi
        rem = _trim(rem)
    return _trim(quot), rem


@lru_cache(maxsize=None)
def cyclotomic_poly(m: int) -> Tuple[int, ...]:
    """Integer coefficients of Phi_m, lowest degree first.

    Built recursively from x^m - 1 = prod_{d | m} Phi_d.
    """
    if m < 1:
        raise ConfigError(f"cyclotomic index must be positive, got {m}")
    num = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            q, r = _poly_divmod(num, cyclotomic_poly(d))
            assert not r
            num = q
    return tuple(int(c) for c in num)


def euler_phi(m: int) -> int:
    return len(cyclotomic_poly(m)) - 1


def _reduce(m, coeffs):
    phi = cyclotomic_poly(m)
    deg = len(phi) - 1
    c = [Fraction(x) for x in coeffs]
    # Phi_m is monic, so reduction is plain subtraction from the top down.
    for top in range(len(c) - 1, deg - 1, -1):
        lead = c[top]
        if lead:
            shift = top - deg
            for i in range(deg):
                if phi[i]:
                    c[shift + i] -= lead * phi[i]
        c[top] = Fraction(0)
    c = c[:deg]
    c.extend([Fraction(0)] * (deg - len(c)))
    return tuple(c)


class CycNum:
    """An element sum_t c_t zeta_m^t of Q(zeta_m), 0 <= t < phi(m)."""

    __slots__ = ("m", "coeffs", "_hash")

    def __init__(self, m: int, coeffs: Sequence = ()):
        if m < 1:
            raise ConfigError(f"cyclotomic index must be positive, got {m}")
        self.m = m
        self.coeffs = _reduce(m, coeffs)
        self._hash = None

    @classmethod
    def _raw(cls, m, coeffs):
        obj = cls.__new__(cls)
        obj.m = m
        obj.coeffs = coeffs
        obj._hash = None
        return obj

    # -- constructors -------------------------------------------------------

    @classmethod
    def rational(cls, m: int, q) -> "CycNum":
        return cls(m, [Fraction(q)])

    @classmethod
    def zero(cls, m: int) -> "CycNum":
        return cls(m, ())

    @classmethod
    def one(cls, m: int) -> "CycNum":
        return cls(m, [1])

    @classmethod
    def zeta(cls, m: int, e: int = 1) -> "CycNum":
        """zeta_m ** e for any integer e."""
        return _zeta_power(m, e % m)

    # -- predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_one(self) -> bool:
        return self.coeffs[0] == 1 and not any(self.coeffs[1:])

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other):
        if not isinstance(other, CycNum):
            other = CycNum.rational(self.m, other)
        elif other.m != self.m:
            raise ConfigError(f"mixing Q(zeta_{self.m}) with Q(zeta_{other.m})")
        return other

    def __add__(self, other):
        other = self._check(other)
        return CycNum._raw(self.m, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycNum._raw(self.m, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._check(other)
        return CycNum._raw(self.m, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, CycNum):
            q = Fraction(other)
            return CycNum._raw(self.m, tuple(a * q for a in self.coeffs))
        other = self._check(other)
        if self.is_rational():
            q = self.coeffs[0]
            return CycNum._raw(self.m, tuple(q * b for b in other.coeffs))
        if other.is_rational():
            q = other.coeffs[0]
            return CycNum._raw(self.m, tuple(a * q for a in self.coeffs))
        return CycNum._raw(self.m, _reduce(self.m, _poly_mul(self.coeffs, other.coeffs)))

    __rmul__ = __mul__

    def inverse(self) -> "CycNum":
        """Multiplicative inverse via the extended Euclidean algorithm against Phi_m."""
        if self.is_zero():
            raise DivisionByZero(f"inverse of zero in Q(zeta_{self.m})")
        if self.is_rational():
            return CycNum._raw(self.m, (1 / self.coeffs[0],) + self.coeffs[1:])
        # invariant: s * a == r0 (mod Phi), t * a == r1 (mod Phi)
        r0, r1 = list(cyclotomic_poly(self.m)), _trim(self.coeffs)
        s0, s1 = [], [Fraction(1)]
        while len(r1) > 1:
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        if not r1:
            raise NcprodError(
                f"nontrivial gcd with Phi_{self.m}: cyclotomic polynomial not irreducible?"
            )
        c = Fraction(r1[0])
        return CycNum(self.m, [x / c for x in s1])

    def __truediv__(self, other):
        other = self._check(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return CycNum.rational(self.m, other) * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = CycNum.one(self.m)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- comparison / hashing -----------------------------------------------

    def __eq__(self, other):
        if isinstance(other, CycNum):
            return self.m == other.m and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.m, self.coeffs))
        return self._hash

    def __bool__(self):
        return not self.is_zero()

    # -- text ---------------------------------------------------------------

    def to_text(self) -> str:
        """Canonical text: ascending powers of ``z``, e.g. ``1/2 - z + 3*z^2``."""
        parts = []
        for t, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if t == 0:
                body = _frac_text(mag)
            else:
                zt = "z" if t == 1 else f"z^{t}"
                body = zt if mag == 1 else f"{_frac_text(mag)}*{zt}"
            parts.append(("-" if c < 0 else "+", body))
        if not parts:
            return "0"
        sign, body = parts[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"CycNum({self.m}, {self.to_text()!r})"


def _frac_text(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


@lru_cache(maxsize=None)
def _zeta_power(m, e):
    coeffs = [0] * e + [1]
    return CycNum(m, coeffs)


def cyc_add(a: CycNum, b: CycNum) -> CycNum:
    return a + b


def cyc_sub(a: CycNum, b: CycNum) -> CycNum:
    return a - b


def cyc_neg(a: CycNum) -> CycNum:
    return -a


def cyc_mul(a: CycNum, b: CycNum) -> CycNum:
    return a * b


def cyc_inv(a: CycNum) -> CycNum:
    return a.inverse()


def primitive_root(config, i: int) -> CycNum:
    """zeta_{n_i} = zeta_m^(m/n_i) for the 1-based block index ``i``."""
    if not 1 <= i <= len(config.blocks):
        raise ConfigError(f"block index {i} outside 1..{len(config.blocks)}")
    return CycNum.zeta(config.m, config.m // config.blocks[i - 1])
