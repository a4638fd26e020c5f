"""Integer lattices, Smith normal form and finite abelian group types.

Used to compute the value-group quotient Gamma_D / Gamma_F, the reduction
map onto it, and the commutator pairing that the twisting relations induce
on it.
"""

import math
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from .cyclo import CycNum
from .errors import ConfigError
from .twisted import AlgebraConfig, cocycle_exponent

__all__ = [
    "smith_normal_form",
    "invariant_factors",
    "IntegerLattice",
    "AbelianGroupType",
    "PairingValue",
    "quotient_type",
    "quotient_image",
    "commutator_pairing",
    "is_central_monomial",
    "rank",
    "value_group_lattice",
    "center_lattice",
    "mat_mul",
    "determinant",
]

Matrix = List[List[int]]


def _identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if not a:
        return []
    cols = len(b[0]) if b else 0
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(cols)] for i in range(len(a))]


def determinant(a: Matrix) -> int:
    """Exact integer determinant by fraction-free (Bareiss) elimination."""
    n = len(a)
    if n == 0:
        return 1
    m = [list(row) for row in a]
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def smith_normal_form(M: Sequence[Sequence[int]]) -> Tuple[Matrix, Matrix, Matrix]:
    """Return (U, S, V) with U*M*V = S, U and V unimodular.

    S is diagonal with nonnegative entries d_1 | d_2 | ... (zeros last).
    """
    S = [[int(x) for x in row] for row in M]
    rows = len(S)
    cols = len(S[0]) if rows else 0
    if any(len(row) != cols for row in S):
        raise ConfigError("matrix rows must have equal length")
    U = _identity(rows)
    V = _identity(cols)

    def swap_rows(i, j):
        S[i], S[j] = S[j], S[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for mat in (S, V):
            for row in mat:
                row[i], row[j] = row[j], row[i]

    def add_row(src, dst, q):  # row_dst += q * row_src
        for mat in (S, U):
            mat[dst] = [d + q * s for d, s in zip(mat[dst], mat[src])]

    def add_col(src, dst, q):  # col_dst += q * col_src
        for mat in (S, V):
            for row in mat:
                row[dst] += q * row[src]

    for t in range(min(rows, cols)):
        while True:
            # pivot on the smallest nonzero entry of the remaining block
            best = None
            for i in range(t, rows):
                for j in range(t, cols):
                    if S[i][j] and (best is None or abs(S[i][j]) < abs(S[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                return _finish(U, S, V)
            swap_rows(t, best[0])
            swap_cols(t, best[1])
            p = S[t][t]
            dirty = False
            for i in range(t + 1, rows):
                if S[i][t]:
                    add_row(t, i, -(S[i][t] // p))
                    dirty = dirty or S[i][t] != 0
            for j in range(t + 1, cols):
                if S[t][j]:
                    add_col(t, j, -(S[t][j] // p))
                    dirty = dirty or S[t][j] != 0
            if dirty:
                continue
            # row and column are clear; enforce divisibility of the rest
            bad = next(
                (i for i in range(t + 1, rows) for j in range(t + 1, cols) if S[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(bad, t, 1)
        if S[t][t] < 0:
            U[t] = [-x for x in U[t]]
            S[t] = [-x for x in S[t]]
    return _finish(U, S, V)


def _finish(U, S, V):
    for t in range(min(len(S), len(S[0]) if S else 0)):
        if S[t][t] < 0:
            U[t] = [-x for x in U[t]]
            S[t] = [-x for x in S[t]]
    return U, S, V


def invariant_factors(M: Sequence[Sequence[int]]) -> List[int]:
    """Diagonal of the Smith form, zeros included."""
    _, S, _ = smith_normal_form(M)
    return [S[i][i] for i in range(min(len(S), len(S[0]) if S else 0))]


@dataclass(frozen=True)
class AbelianGroupType:
    """Z_{d_1} + ... + Z_{d_k} + Z^free_rank with d_1 | d_2 | ... ."""

    invariant_factors: Tuple[int, ...]
    free_rank: int = 0

    def __post_init__(self):
        factors = tuple(int(d) for d in self.invariant_factors)
        if any(d < 1 for d in factors):
            raise ConfigError(f"invariant factors must be positive, got {factors}")
        for a, b in zip(factors, factors[1:]):
            if b % a:
                raise ConfigError(f"invariant factors {factors} do not form a divisibility chain")
        object.__setattr__(self, "invariant_factors", factors)

    @classmethod
    def from_cyclic_orders(cls, orders: Sequence[int]) -> "AbelianGroupType":
        """Normal form of Z_{o_1} + ... + Z_{o_k}, via the Smith form of diag(o)."""
        k = len(orders)
        diag = [[orders[i] if i == j else 0 for j in range(k)] for i in range(k)]
        return quotient_type(k, IntegerLattice(k, diag))

    @property
    def rank(self) -> int:
        return sum(1 for d in self.invariant_factors if d > 1) + self.free_rank

    @property
    def order(self) -> Optional[int]:
        return None if self.free_rank else math.prod(self.invariant_factors)

    def nontrivial_factors(self) -> Tuple[int, ...]:
        return tuple(d for d in self.invariant_factors if d > 1)

    def to_text(self) -> str:
        parts = [f"Z_{d}" for d in self.nontrivial_factors()]
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        return " + ".join(parts) if parts else "0"

    def __str__(self):
        return self.to_text()


def rank(t: AbelianGroupType) -> int:
    return t.rank


@dataclass(frozen=True)
class IntegerLattice:
    """Sublattice of Z^dim spanned by ``gens``."""

    dim: int
    gens: Tuple[Tuple[int, ...], ...] = field(default_factory=tuple)

    def __post_init__(self):
        gens = tuple(tuple(int(x) for x in g) for g in self.gens)
        for g in gens:
            if len(g) != self.dim:
                raise ConfigError(f"generator {g} does not have length {self.dim}")
        object.__setattr__(self, "gens", gens)

    def matrix(self) -> Matrix:
        return [list(g) for g in self.gens] or [[0] * self.dim]

    def _smith_data(self):
        cached = self.__dict__.get("_smith")
        if cached is None:
            U, S, V = smith_normal_form(self.matrix())
            diag = [S[j][j] if j < len(S) else 0 for j in range(self.dim)]
            cached = (V, diag)
            object.__setattr__(self, "_smith", cached)
        return cached

    def contains(self, v: Sequence[int]) -> bool:
        """Membership test by solving y*A = v through the Smith form of A."""
        v = tuple(int(x) for x in v)
        if len(v) != self.dim:
            raise ConfigError(f"vector {v} does not have length {self.dim}")
        if self.dim == 0:
            return True
        V, diag = self._smith_data()
        # A = U^-1 S V^-1, so v in rowspace(A) iff w = v*V lies in rowspace(S)
        for j, d in enumerate(diag):
            w = sum(v[k] * V[k][j] for k in range(self.dim))
            if (w != 0) if d == 0 else (w % d != 0):
                return False
        return True


def quotient_type(ambient: int, sub: IntegerLattice) -> AbelianGroupType:
    """Isomorphism type of Z^ambient / sub."""
    if sub.dim != ambient:
        raise ConfigError(f"sublattice of Z^{sub.dim} used in Z^{ambient}")
    if ambient == 0:
        return AbelianGroupType(())
    diag = invariant_factors(sub.matrix())
    factors = sorted(d for d in diag if d)
    return AbelianGroupType(tuple(factors), ambient - len(factors))


def value_group_lattice(config: AlgebraConfig) -> IntegerLattice:
    """Gamma_D = Z^(2r)."""
    d = config.dim
    return IntegerLattice(d, tuple(tuple(int(i == j) for j in range(d)) for i in range(d)))


def center_lattice(config: AlgebraConfig) -> IntegerLattice:
    """Gamma_F = sum_i (n_i Z + n_i Z)."""
    d = config.dim
    gens = []
    for k in range(d):
        g = [0] * d
        g[k] = config.blocks[k // 2]
        gens.append(tuple(g))
    return IntegerLattice(d, tuple(gens))


def quotient_image(config: AlgebraConfig, alpha: Sequence[int]) -> Tuple[int, ...]:
    """Class of alpha in Gamma_D / Gamma_F = sum_i (Z_{n_i} + Z_{n_i})."""
    alpha = config.check_vector(alpha)
    return tuple(a % config.blocks[k // 2] for k, a in enumerate(alpha))


@dataclass(frozen=True)
class PairingValue:
    """zeta_m ** exponent."""

    exponent: int
    m: int

    def __post_init__(self):
        object.__setattr__(self, "exponent", self.exponent % self.m)

    @property
    def is_trivial(self) -> bool:
        return self.exponent == 0

    def to_cycnum(self) -> CycNum:
        return CycNum.zeta(self.m, self.exponent)

    def __mul__(self, other):
        return PairingValue(self.exponent + other.exponent, self.m)

    def inverse(self):
        return PairingValue(-self.exponent, self.m)


def _pairing_exponent(config, alpha, beta):
    return (cocycle_exponent(config, alpha, beta) - cocycle_exponent(config, beta, alpha)) % config.m


def commutator_pairing(config: AlgebraConfig, alpha: Sequence[int], beta: Sequence[int]) -> PairingValue:
    """epsilon with x^alpha x^beta = epsilon x^beta x^alpha."""
    alpha = config.check_vector(alpha)
    beta = config.check_vector(beta)
    return PairingValue(_pairing_exponent(config, alpha, beta), config.m)


def is_central_monomial(config: AlgebraConfig, alpha: Sequence[int]) -> bool:
    """x^alpha commutes with every generator."""
    alpha = config.check_vector(alpha)
    return all(_pairing_exponent(config, alpha, config.basis_vector(k)) == 0 for k in range(config.dim))
