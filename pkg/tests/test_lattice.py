import itertools
import math
import random

import pytest

from ncprod.errors import ConfigError
from ncprod.lattice import (
    AbelianGroupType,
    IntegerLattice,
    PairingValue,
    center_lattice,
    commutator_pairing,
    determinant,
    invariant_factors,
    is_central_monomial,
    mat_mul,
    quotient_image,
    quotient_type,
    rank,
    smith_normal_form,
)
from ncprod.twisted import AlgebraConfig, TwistedElement


def laplace_det(M):
    if not M:
        return 1
    return sum((-1) ** j * M[0][j] * laplace_det([row[:j] + row[j + 1:] for row in M[1:]]) for j in range(len(M)))


def determinantal_factors(M):
    """Invariant factors from gcds of k x k minors: d_k / d_{k-1}."""
    rows, cols = len(M), len(M[0])
    out, prev = [], 1
    for k in range(1, min(rows, cols) + 1):
        g = 0
        for rs in itertools.combinations(range(rows), k):
            for cs in itertools.combinations(range(cols), k):
                g = math.gcd(g, laplace_det([[M[i][j] for j in cs] for i in rs]))
        if g == 0:
            out.append(0)
            prev = 0
            continue
        out.append(g // prev)
        prev = g
    return out


def test_snf_examples():
    assert invariant_factors([[2, 0, 0, 0], [0, 2, 0, 0], [0, 0, 3, 0], [0, 0, 0, 3]]) == [1, 1, 6, 6]
    assert invariant_factors([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == [1, 1, 1]
    U, S, V = smith_normal_form([[2, 4], [6, 8]])
    assert [S[0][0], S[1][1]] == [2, 4]
    assert mat_mul(mat_mul(U, [[2, 4], [6, 8]]), V) == S
    assert abs(determinant([[2, 4], [6, 8]])) == 8


def test_snf_against_determinantal_divisors():
    rng = random.Random(3)
    for _ in range(150):
        rows, cols = rng.randint(1, 4), rng.randint(1, 4)
        M = [[rng.randint(-9, 9) for _ in range(cols)] for _ in range(rows)]
        U, S, V = smith_normal_form(M)
        assert mat_mul(mat_mul(U, M), V) == S
        assert abs(laplace_det(U)) == 1 and abs(laplace_det(V)) == 1
        assert invariant_factors(M) == determinantal_factors(M)


def test_determinant_matches_laplace():
    rng = random.Random(4)
    for _ in range(100):
        n = rng.randint(1, 5)
        M = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
        assert determinant(M) == laplace_det(M)


def test_quotient_type_examples():
    assert quotient_type(2, IntegerLattice(2, ((2, 0), (0, 2)))) == AbelianGroupType((2, 2))
    t = quotient_type(4, center_lattice(AlgebraConfig((2, 3))))
    assert t.invariant_factors == (1, 1, 6, 6) and t.order == 36 and t.rank == 2
    t = quotient_type(2, IntegerLattice(2, ((1, 0),)))
    assert t.invariant_factors == (1,) and t.free_rank == 1 and t.rank == 1
    assert quotient_type(3, IntegerLattice(3, ())).free_rank == 3


def test_group_type_validation():
    with pytest.raises(ConfigError):
        AbelianGroupType((2, 3))
    assert AbelianGroupType.from_cyclic_orders([2, 3]).invariant_factors == (1, 6)


def test_rank_examples():
    assert rank(AbelianGroupType((2, 2, 2))) == 3
    for n in (2, 5, 12):
        assert rank(AbelianGroupType((n, n))) == 2
    assert rank(AbelianGroupType(())) == 0
    assert rank(AbelianGroupType((1, 1))) == 0


def test_contains():
    L = IntegerLattice(2, ((2, 4), (6, 8)))
    assert L.contains((2, 4)) and L.contains((4, 4)) and L.contains((0, 0))
    assert L.contains((2, 0))  # -2*(2,4) + (6,8)
    assert not L.contains((0, 2)) and not L.contains((1, 2))
    line = IntegerLattice(2, ((1, 1),))
    assert line.contains((3, 3)) and not line.contains((1, 0))


def test_quotient_image_examples():
    c2 = AlgebraConfig((2,))
    assert quotient_image(c2, (1, 1)) == (1, 1)
    assert quotient_image(c2, (2, 4)) == (0, 0)
    assert quotient_image(AlgebraConfig((2, 3)), (1, 2, 4, 5)) == (1, 0, 1, 2)
    with pytest.raises(ConfigError):
        quotient_image(c2, (1,))


def test_pairing_examples():
    c2 = AlgebraConfig((2,))
    p = commutator_pairing(c2, (1, 0), (0, 1))
    assert p == PairingValue(1, 2) and p.to_cycnum() == -1
    assert commutator_pairing(c2, (3, 5), (3, 5)).is_trivial
    assert commutator_pairing(AlgebraConfig((2, 3)), (1, 0, 0, 0), (0, 0, 0, 1)).is_trivial


@pytest.mark.parametrize("blocks", [(2,), (3,), (2, 3), (4, 2)])
def test_pairing_matches_element_commutator(blocks):
    cfg = AlgebraConfig(blocks)
    rng = random.Random(9)
    for _ in range(100):
        a = tuple(rng.randint(-3, 3) for _ in range(cfg.dim))
        b = tuple(rng.randint(-3, 3) for _ in range(cfg.dim))
        xa, xb = TwistedElement.monomial(cfg, a), TwistedElement.monomial(cfg, b)
        assert xa * xb == (xb * xa).scale(commutator_pairing(cfg, a, b).to_cycnum())


@pytest.mark.parametrize("blocks", [(2,), (2, 2), (2, 3), (3, 3)])
def test_pairing_bimultiplicative_alternating(blocks):
    cfg = AlgebraConfig(blocks)
    rng = random.Random(1)
    vec = lambda: tuple(rng.randint(-4, 4) for _ in range(cfg.dim))
    for _ in range(100):
        a, a2, b = vec(), vec(), vec()
        s = tuple(x + y for x, y in zip(a, a2))
        assert commutator_pairing(cfg, s, b) == commutator_pairing(cfg, a, b) * commutator_pairing(cfg, a2, b)
        assert commutator_pairing(cfg, a, a).is_trivial
        assert commutator_pairing(cfg, b, a) == commutator_pairing(cfg, a, b).inverse()


def test_is_central_examples():
    c2 = AlgebraConfig((2,))
    assert is_central_monomial(c2, (2, 0))
    assert not is_central_monomial(c2, (1, 0))
    assert is_central_monomial(AlgebraConfig((2, 3)), (0, 0, 0, 0))


@pytest.mark.parametrize("blocks", [(2,), (2, 2), (4,)])
def test_center_criterion_exhaustive(blocks):
    cfg = AlgebraConfig(blocks)
    L = center_lattice(cfg)
    bound = 2 * cfg.n
    for a in itertools.product(range(-bound, bound + 1), repeat=cfg.dim):
        c = is_central_monomial(cfg, a)
        assert c == L.contains(a) == (not any(quotient_image(cfg, a)))


def test_rank_monotone_under_quotients():
    rng = random.Random(2)
    for _ in range(200):
        d = rng.randint(1, 4)
        gens = [tuple(rng.randint(-6, 6) for _ in range(d)) for _ in range(rng.randint(1, 4))]
        more = gens + [tuple(rng.randint(-6, 6) for _ in range(d))]
        assert quotient_type(d, IntegerLattice(d, tuple(more))).rank <= quotient_type(d, IntegerLattice(d, tuple(gens))).rank


@pytest.mark.parametrize("blocks", [(2,), (3,), (2, 3), (2, 2, 2), (8,), (4, 6)])
def test_value_group_quotient_order(blocks):
    cfg = AlgebraConfig(blocks)
    assert quotient_type(cfg.dim, center_lattice(cfg)).order == cfg.n ** 2
