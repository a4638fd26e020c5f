"""Property suites run by ``ncprod verify``.

Each suite draws from its own ``random.Random`` derived from the seed, so a
suite's outcome does not depend on which other suites ran before it.
"""

import itertools
import random
from dataclasses import dataclass
from typing import List

from .cyclo import CycNum, cyclotomic_poly, primitive_root
from .expr import format_element, parse_element
from .lattice import (
    IntegerLattice,
    center_lattice,
    commutator_pairing,
    determinant,
    is_central_monomial,
    mat_mul,
    quotient_image,
    quotient_type,
    smith_normal_form,
)
from .obstruct import Verdict, factorize, obstruction, witness_configs
from .sampling import (
    STANDARD_CONFIGS,
    random_central_one_plus,
    random_cone_tail,
    random_cone_unit,
    random_cyc,
    random_laurent,
    random_vector,
)
from .twisted import AlgebraConfig, TwistedElement, cocycle, monomial_word, reduce_word
from .valtheory import inv, leading_split, nth_root, residue, val


@dataclass
class SuiteResult:
    name: str
    passed: bool
    checks: int
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f" ({self.detail})" if self.detail else ""
        return f"{status} {self.name}: {self.checks} checks{extra}"


class _Failure(Exception):
    pass


def _expect(cond, msg):
    if not cond:
        raise _Failure(msg)


def _configs():
    return [AlgebraConfig(b) for b in STANDARD_CONFIGS]


def suite_cyclo(rng, trials):
    count = 0
    for m in range(1, 25):
        prod = [1]
        for d in range(1, m + 1):
            if m % d == 0:
                phi = cyclotomic_poly(d)
                out = [0] * (len(prod) + len(phi) - 1)
                for i, a in enumerate(prod):
                    for j, b in enumerate(phi):
                        out[i + j] += a * b
                prod = out
        _expect(prod == [-1] + [0] * (m - 1) + [1], f"prod Phi_d != x^{m} - 1")
        count += 1
    for m in (3, 4, 5, 6, 8, 12):
        for _ in range(trials):
            a, b, c = (random_cyc(rng, m) for _ in range(3))
            _expect((a * b) * c == a * (b * c), "associativity")
            _expect(a * (b + c) == a * b + a * c, "distributivity")
            if not a.is_zero():
                _expect(a * a.inverse() == CycNum.one(m), "a * a^-1 != 1")
            count += 3
    for cfg in _configs():
        for i, ni in enumerate(cfg.blocks, start=1):
            z = primitive_root(cfg, i)
            _expect(z ** ni == 1, "zeta^n_i != 1")
            for d in range(1, ni):
                if ni % d == 0:
                    _expect(z ** d != 1, "zeta_{n_i} not primitive")
            count += 1
    return count


def suite_twisted(rng, trials):
    count = 0
    for cfg in _configs():
        gens = [TwistedElement.monomial(cfg, cfg.basis_vector(k)) for k in range(cfg.dim)]
        for a, b in itertools.product(range(cfg.dim), repeat=2):
            ga, gb = gens[a], gens[b]
            if a // 2 == b // 2 and a % 2 == 0 and b == a + 1:
                z = primitive_root(cfg, a // 2 + 1)
                _expect(ga * gb - (gb * ga).scale(z) == 0, "x_i y_i != zeta y_i x_i")
            elif a // 2 != b // 2 or a == b:
                _expect(ga * gb == gb * ga, "generators should commute")
            count += 1
        s = random_cyc(rng, cfg.m, nonzero=True)
        for g in gens:
            _expect(g.scale(s) == g * TwistedElement.constant(cfg, s), "scalars not central")
        for _ in range(trials):
            al, be, ga = (random_vector(rng, cfg.dim) for _ in range(3))
            lhs = cocycle(cfg, al, be) * cocycle(cfg, tuple(x + y for x, y in zip(al, be)), ga)
            rhs = cocycle(cfg, be, ga) * cocycle(cfg, al, tuple(x + y for x, y in zip(be, ga)))
            _expect(lhs == rhs, "cocycle condition")
            word = monomial_word(cfg, al) + monomial_word(cfg, be)
            prod = TwistedElement.monomial(cfg, al) * TwistedElement.monomial(cfg, be)
            _expect(prod == reduce_word(cfg, word), f"cocycle disagrees with rewriting for {al}, {be}")
            count += 2
        for _ in range(max(1, trials // 10)):
            f, g, h = (random_laurent(rng, cfg, 3, 2) for _ in range(3))
            _expect((f * g) * h == f * (g * h), "associativity")
            _expect(not (f * g).is_zero(), "zero divisor")
            count += 2
    return count


def suite_valtheory(rng, trials):
    count = 0
    for cfg in _configs():
        for _ in range(trials):
            f, g = random_laurent(rng, cfg), random_laurent(rng, cfg)
            vf, vg = val(f), val(g)
            _expect(val(f * g) == vf + vg, "v(fg) != v(f) + v(g)")
            _expect(val(f + g) >= min(vf, vg), "ultrametric inequality")
            count += 2
        _expect(val(TwistedElement.zero(cfg)).is_infinite, "v(0) != inf")
        for _ in range(max(1, trials // 5)):
            f = random_cone_unit(rng, cfg, 3)
            g = random_cone_unit(rng, cfg, 3)
            _expect(residue(f * g) == residue(f) * residue(g), "residue not multiplicative")
            _expect(residue(f + g) == residue(f) + residue(g), "residue not additive")
            c, alpha, tail = leading_split(f)
            _expect(not any(alpha) and not c.is_zero() and val(tail).sign() > 0, "kernel characterisation")
            N = 6
            h = inv(f, N)
            one = TwistedElement.one(cfg, N)
            _expect((f * h).truncate(N) == one and (h * f).truncate(N) == one, "inverse roundtrip")
            count += 4
        for n in (2, 3):
            for _ in range(max(1, trials // 25)):
                N = 6
                t = random_cone_tail(rng, cfg, N // n, 2)
                b = TwistedElement.one(cfg) + t
                _expect(nth_root(b ** n, n, N) == b.truncate(N), f"root recovery n={n}")
                a = random_central_one_plus(rng, cfg, N)
                root = nth_root(a, n, N)
                _expect(root ** n == a.truncate(N), "central root")
                for k in range(cfg.dim):
                    gen = TwistedElement.monomial(cfg, cfg.basis_vector(k))
                    _expect(root * gen == gen * root, "root of central element is not central")
                count += 3
    return count


def suite_lattice(rng, trials):
    count = 0
    for _ in range(trials):
        rows, cols = rng.randint(1, 5), rng.randint(1, 5)
        M = [[rng.randint(-9, 9) for _ in range(cols)] for _ in range(rows)]
        U, S, V = smith_normal_form(M)
        _expect(mat_mul(mat_mul(U, M), V) == S, "U M V != S")
        _expect(abs(determinant(U)) == 1 and abs(determinant(V)) == 1, "not unimodular")
        diag = [S[i][i] for i in range(min(rows, cols))]
        _expect(all(S[i][j] == 0 for i in range(rows) for j in range(cols) if i != j), "S not diagonal")
        nz = [d for d in diag if d]
        _expect(all(b % a == 0 for a, b in zip(nz, nz[1:])), "divisibility chain")
        _expect(diag[len(nz):] == [0] * (len(diag) - len(nz)), "zeros not last")
        if rows == cols:
            _expect(abs(determinant(M)) == (0 if len(nz) < rows else _prod(nz)), "det mismatch")
        count += 1
    for blocks in [(2,), (2, 2), (2, 3), (3, 3), (4,)]:
        cfg = AlgebraConfig(blocks)
        L = center_lattice(cfg)
        qt = quotient_type(cfg.dim, L)
        _expect(qt.order == cfg.n ** 2, "|Gamma_D/Gamma_F| != n^2")
        classes = list(itertools.product(*[range(cfg.blocks[k // 2]) for k in range(cfg.dim)]))
        for a in classes:
            if any(a):
                _expect(
                    any(not commutator_pairing(cfg, a, b).is_trivial for b in classes),
                    f"pairing degenerate at {a}",
                )
            count += 1
        for _ in range(trials // 5):
            a, b = random_vector(rng, cfg.dim), random_vector(rng, cfg.dim)
            shift = [blocks[k // 2] * rng.randint(-2, 2) for k in range(cfg.dim)]
            a2 = tuple(x + s for x, s in zip(a, shift))
            _expect(commutator_pairing(cfg, a, b) == commutator_pairing(cfg, a2, b), "pairing not well defined")
            _expect(
                is_central_monomial(cfg, a) == L.contains(a) == (not any(quotient_image(cfg, a))),
                "center criterion",
            )
            count += 2
    for _ in range(trials // 5):
        d = rng.randint(1, 4)
        gens = [random_vector(rng, d, -6, 6) for _ in range(rng.randint(1, 4))]
        extra = [random_vector(rng, d, -6, 6) for _ in range(rng.randint(1, 3))]
        small = quotient_type(d, IntegerLattice(d, tuple(gens)))
        big = quotient_type(d, IntegerLattice(d, tuple(gens + extra)))
        _expect(big.rank <= small.rank, "rank not monotone under quotients")
        count += 1
    return count


def _prod(xs):
    out = 1
    for x in xs:
        out *= x
    return out


def suite_obstruct(rng, trials):
    count = 0
    for n in range(2, 1001):
        cube = any(n % (p ** 3) == 0 for p in range(2, n + 1) if all(p % q for q in range(2, p)))
        v = obstruction(n, 0)
        _expect((v.verdict is Verdict.NONCROSSED) == cube, f"decision boundary wrong at n={n}")
        primes = factorize(n)
        mult = max(primes.count(p) for p in set(primes))
        _expect(v.certificate.group_rank == mult, f"rank(G) wrong at n={n}")
        d1, d2 = witness_configs(n)
        _expect(_prod(d1.blocks) == n == d2.blocks[0], "witness blocks")
        _expect(v.certificate.d2_bound == 2, "D2 bound")
        count += 1
    _expect(obstruction(8, 2).verdict is Verdict.INAPPLICABLE, "char 2 with n = 8")
    return count


def suite_expr(rng, trials):
    count = 0
    for cfg in _configs():
        for _ in range(max(1, trials // len(STANDARD_CONFIGS))):
            f = random_laurent(rng, cfg, 5, 3, nonzero=False)
            text = format_element(f)
            g = parse_element(text, cfg)
            _expect(g == f and format_element(g) == text, f"round trip failed for {text!r}")
            count += 1
    return count


SUITES = [
    ("cyclo", suite_cyclo),
    ("twisted", suite_twisted),
    ("valtheory", suite_valtheory),
    ("lattice", suite_lattice),
    ("obstruct", suite_obstruct),
    ("expr", suite_expr),
]


def run_suites(seed: int = 0, trials: int = 500) -> List[SuiteResult]:
    results = []
    for name, fn in SUITES:
        rng = random.Random(f"{seed}:{name}")
        try:
            checks = fn(rng, trials)
            results.append(SuiteResult(name, True, checks))
        except _Failure as exc:
            results.append(SuiteResult(name, False, 0, str(exc)))
    return results
