import random

import pytest

from qtorus import ScalingAutomorphism, ThetaMatrix
from qtorus.bar import (InfeasibleError, bar_basis, bar_boundary, bar_oracle, oracle_dimension,
                        oracle_table, reliable)
from qtorus.koszul import box, hochschild_homology

from support import generic2, random_twist, root_of_unity2


def test_basis_is_normalized_and_graded():
    for t in bar_basis(2, (1, 0), 2, 3):
        assert all(any(g) for g in t[1:])
        assert tuple(map(sum, zip(*t))) == (1, 0)
        assert sum(max(abs(x) for x in g) for g in t) <= 3


def test_boundary_squares_to_zero():
    ctx = generic2()
    sigma = random_twist(ctx, random.Random(1))
    for t in bar_basis(2, (1, -1), 3, 3)[:40]:
        once = bar_boundary(ctx, sigma, t)
        twice = {}
        for s, c in once.items():
            for r, v in bar_boundary(ctx, sigma, s).items():
                twice[r] = twice.get(r, ctx.field.zero) + c * v
        assert all(not v for v in twice.values())


def test_n1_small_box():
    ctx = ThetaMatrix.commutative(1)
    table = oracle_table(ctx, bound=2, degrees=[0, 1])
    for mu, dims in table.items():
        if abs(mu[0]) <= 1:
            assert dims == {0: 1, 1: 1}
        else:
            assert dims[1] is None


def test_generic_small_box_matches_koszul():
    ctx = generic2()
    table = oracle_table(ctx, bound=2, degrees=[0, 1])
    hh = hochschild_homology(ctx)
    for mu, dims in table.items():
        for p, dim in dims.items():
            if dim is not None:
                assert dim == hh.dimension_at(p, mu)


def test_twisted_oracle_matches_koszul():
    ctx = root_of_unity2(3)
    sigma = ScalingAutomorphism.alpha(ctx)
    table = oracle_table(ctx, sigma, bound=2, degrees=[0, 1])
    hh = hochschild_homology(ctx, sigma)
    assert any(dims[0] for dims in table.values())
    for mu, dims in table.items():
        for p, dim in dims.items():
            if dim is not None:
                assert dim == hh.dimension_at(p, mu), (mu, p)


def test_boundary_modes_are_flagged():
    entries = bar_oracle(generic2(), bound=2, degree=1)
    assert [e.mode for e in entries if e.reliable] == [g for g in box(2, 1)]
    assert all(e.dimension is None for e in entries if not e.reliable)
    assert not any(e.reliable for e in bar_oracle(generic2(), bound=1, degree=1))


def test_top_degree_at_the_bound_is_not_trusted():
    """Degree p = B at mode 0: the truncated complex overcounts (8 instead of 1)."""
    ctx = ThetaMatrix.commutative(2)
    assert oracle_dimension(ctx, ScalingAutomorphism.identity(ctx), (0, 0), 2, 3) == 8
    assert not reliable((0, 0), 2, 2)
    assert oracle_table(ctx, bound=2)[(0, 0)][2] is None


@pytest.mark.parametrize("ctx, bound, degree", [
    (ThetaMatrix.commutative(3), 1, 0),
    (ThetaMatrix.commutative(2), 5, 0),
    (ThetaMatrix.commutative(2), 2, 4),
    (ThetaMatrix.commutative(2), 0, 0),
])
def test_infeasible(ctx, bound, degree):
    with pytest.raises(InfeasibleError):
        bar_oracle(ctx, bound=bound, degree=degree)
