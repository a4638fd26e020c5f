"""The two-witness rank argument as an executable pipeline.

For n with prime factorisation p_1 ... p_r, a crossed-product group G of
order n would have to be elementary abelian of type Z_{p_1} + ... + Z_{p_r}
(forced by the first witness Delta(p_1, ..., p_r)) and also of rank at most
rank(Z_n + Z_n) = 2 (forced by the second witness Delta(n)).  The two
constraints clash exactly when some p^3 divides n.

The lemmas about the two witness algebras are taken as given; only the
arithmetic they entail is evaluated here.
"""

import enum
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .errors import ConfigError
from .lattice import AbelianGroupType, center_lattice, quotient_type
from .twisted import AlgebraConfig

__all__ = [
    "Verdict",
    "Certificate",
    "ObstructionVerdict",
    "factorize",
    "forced_group_type",
    "witness_configs",
    "obstruction",
]


class Verdict(enum.Enum):
    NONCROSSED = "NONCROSSED"
    INCONCLUSIVE = "INCONCLUSIVE"
    INAPPLICABLE = "INAPPLICABLE"


def factorize(n: int) -> List[int]:
    """Sorted prime multiset of n by trial division."""
    if n < 2:
        raise ConfigError(f"factorize needs n >= 2, got {n}")
    primes = []
    p = 2
    while p * p <= n:
        while n % p == 0:
            primes.append(p)
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        primes.append(n)
    return primes


def _is_prime(c: int) -> bool:
    return c >= 2 and factorize(c) == [c]


def forced_group_type(primes) -> AbelianGroupType:
    """Z_{p_1} + ... + Z_{p_r} in invariant-factor form."""
    primes = list(primes)
    if not primes:
        raise ConfigError("forced_group_type needs at least one prime")
    return AbelianGroupType.from_cyclic_orders(primes)


def witness_configs(n: int) -> Tuple[AlgebraConfig, AlgebraConfig]:
    """(Delta(Q(zeta_n); p_1, ..., p_r), Delta(Q(zeta_n); n))."""
    primes = factorize(n)
    return AlgebraConfig(tuple(primes), m=n), AlgebraConfig((n,), m=n)


@dataclass
class Certificate:
    n: int
    char: int
    factorization: List[int] = field(default_factory=list)
    group_type: Optional[AbelianGroupType] = None
    group_rank: Optional[int] = None
    d2_bound: Optional[int] = None
    d2_quotient: Optional[AbelianGroupType] = None
    witness_prime: Optional[int] = None
    witness_d1: Optional[AlgebraConfig] = None
    witness_d2: Optional[AlgebraConfig] = None
    trail: List[str] = field(default_factory=list)

    def to_dict(self) -> Dict:
        def cfg(c):
            return None if c is None else {"blocks": [str(b) for b in c.blocks], "m": str(c.m)}

        def grp(g):
            if g is None:
                return None
            return {
                "invariant_factors": [str(d) for d in g.invariant_factors],
                "free_rank": str(g.free_rank),
                "text": g.to_text(),
            }

        return {
            "n": str(self.n),
            "char": str(self.char),
            "factorization": [str(p) for p in self.factorization],
            "group_type": grp(self.group_type),
            "group_rank": None if self.group_rank is None else str(self.group_rank),
            "d2_bound": None if self.d2_bound is None else str(self.d2_bound),
            "d2_quotient": grp(self.d2_quotient),
            "witness_prime": None if self.witness_prime is None else str(self.witness_prime),
            "witness_d1": cfg(self.witness_d1),
            "witness_d2": cfg(self.witness_d2),
            "trail": list(self.trail),
        }


@dataclass
class ObstructionVerdict:
    verdict: Verdict
    certificate: Certificate

    def to_dict(self) -> Dict:
        return {"verdict": self.verdict.value, **self.certificate.to_dict()}


def obstruction(n: int, char: int = 0) -> ObstructionVerdict:
    if n < 2:
        raise ConfigError(f"obstruction needs n >= 2, got {n}")
    if char < 0 or (char > 0 and not _is_prime(char)):
        raise ConfigError(f"characteristic must be 0 or a prime, got {char}")
    cert = Certificate(n=n, char=char)
    cert.factorization = factorize(n)
    cert.witness_d1, cert.witness_d2 = witness_configs(n)
    cert.group_type = forced_group_type(cert.factorization)
    cert.group_rank = cert.group_type.rank
    cert.d2_quotient = quotient_type(cert.witness_d2.dim, center_lattice(cert.witness_d2))
    cert.d2_bound = cert.d2_quotient.rank
    for p in sorted(set(cert.factorization)):
        if n % (p ** 3) == 0:
            cert.witness_prime = p
            break

    d1 = cert.witness_d1.describe()
    d2 = cert.witness_d2.describe()
    cert.trail.append(f"n = {' * '.join(map(str, cert.factorization))}")
    if char and n % char == 0:
        cert.trail.append(f"char {char} divides n = {n}: hypothesis fails")
        return ObstructionVerdict(Verdict.INAPPLICABLE, cert)

    cert.trail += [
        f"assume UD(k,{n}) is a G-crossed product with |G| = {n}",
        f"D1 = {d1} is then a G-crossed product",
        "Gal(K/F) is a quotient of a subgroup of Gamma_D1/Gamma_F1, elementary abelian",
        f"so G = {' + '.join(f'Z_{p}' for p in cert.factorization)} = {cert.group_type}, rank(G) = {cert.group_rank}",
        f"D2 = {d2} is then a G-crossed product",
        f"Gamma_D2/Gamma_F2 = {cert.d2_quotient}, rank {cert.d2_bound}",
        f"rank(G) <= rank(H/F*(H cap (1+m_D))) <= rank({cert.d2_quotient}) = {cert.d2_bound}",
    ]
    if cert.group_rank > cert.d2_bound:
        assert cert.witness_prime is not None, "rank > 2 must come from a cubed prime"
        cert.trail.append(
            f"{cert.witness_prime}^3 | {n} gives rank(G) = {cert.group_rank} > {cert.d2_bound}: contradiction"
        )
        return ObstructionVerdict(Verdict.NONCROSSED, cert)
    cert.trail.append(f"rank(G) = {cert.group_rank} <= {cert.d2_bound}: no contradiction")
    return ObstructionVerdict(Verdict.INCONCLUSIVE, cert)
