import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qtorus import ThetaMatrix
from qtorus.dimensions import (
    bidimension, bidimension_certificate, full_report, global_dim_algebraic,
    max_commutative_rank, mcconnell_pettit_generic, validate_witness,
)
from qtorus.linalg import integer_kernel

from support import (contexts, elementary3, generic2, random_context, random_unimodular,
                     root_of_unity2)


def quaternionic4():
    """Three forms with no common isotropic plane; the search cannot prove it."""
    return ThetaMatrix.from_upper(4, {}, [{(0, 1): 1, (2, 3): 1},
                                          {(0, 2): 1, (1, 3): -1},
                                          {(0, 3): 1, (1, 2): 1}])


def padded_symplectic(d=1):
    return ThetaMatrix.from_upper(3, {}, [{(0, 1): 1}], d=d)


def test_no_forms_gives_full_rank():
    r = max_commutative_rank(root_of_unity2(3))
    assert (r.rank, r.complete) == (2, True)
    assert r.basis == [(3, 0), (0, 3)]
    assert global_dim_algebraic(ThetaMatrix.commutative(4)).render() == 4


def test_generic_two_torus():
    r = max_commutative_rank(generic2())
    assert (r.rank, r.complete) == (1, True)
    assert global_dim_algebraic(generic2()).render() == 1


def test_padded_symplectic_witness():
    r = max_commutative_rank(padded_symplectic())
    assert (r.rank, r.complete) == (2, True)
    assert r.basis == [(0, 0, 1), (1, 0, 0)]
    ctx6 = ThetaMatrix.from_upper(3, {(0, 2): "1/6"}, [{(0, 1): 1}])
    r6 = max_commutative_rank(ctx6)
    assert r6.basis == [(0, 0, 6), (6, 0, 0)]
    assert validate_witness(ctx6, r6.basis)
    assert not validate_witness(ctx6, [(0, 0, 1), (1, 0, 0)])


def test_elementary_forms_are_generic():
    ctx = elementary3()
    assert mcconnell_pettit_generic(ctx)
    r = max_commutative_rank(ctx)
    assert (r.rank, r.complete) == (1, True)
    assert global_dim_algebraic(ctx).render() == 1


def test_generic_criterion_examples():
    assert mcconnell_pettit_generic(generic2())
    assert not mcconnell_pettit_generic(root_of_unity2(3))
    assert not mcconnell_pettit_generic(ThetaMatrix.commutative(2))
    # the same irrational on two pairs is not generic
    assert not mcconnell_pettit_generic(
        ThetaMatrix.from_upper(3, {}, [{(0, 1): 1, (1, 2): 1}, {(0, 2): 1}, {(0, 2): 2}]))


def test_incomplete_search_reports_lower_bound():
    ctx = quaternionic4()
    r = max_commutative_rank(ctx, bound=2)
    assert (r.rank, r.complete, r.upper_bound) == (1, False, 2)
    assert global_dim_algebraic(ctx).render() == "lower-bound 1"
    rep = full_report(ctx).to_dict()
    assert rep["dg"] == rep["w_dg"] == "lower-bound 1"


def test_bound_validation():
    with pytest.raises(ValueError):
        max_commutative_rank(generic2(), bound=0)


@settings(max_examples=40, deadline=None)
@given(contexts(max_n=4))
def test_witness_validity_and_consistency(ctx):
    r = max_commutative_rank(ctx)
    assert len(r.basis) == r.rank <= ctx.n
    assert validate_witness(ctx, r.basis)
    assert r.rank <= r.upper_bound
    if ctx.s == 0:
        assert r.rank == ctx.n
    if mcconnell_pettit_generic(ctx) and ctx.n >= 2:
        assert global_dim_algebraic(ctx).render() == 1


@settings(max_examples=40, deadline=None)
@given(contexts(max_n=4), st.integers(0, 10**6))
def test_d_scaling_trivializes_rational_part(ctx, seed):
    """Any sublattice killed by every M_t commutes after scaling by d."""
    rng = random.Random(seed)
    n = ctx.n
    rows = [[M[i][j] for j in range(n)] for M in ctx.M for i in range(n)]
    kernel = integer_kernel(rows, n) if rows else [[int(i == j) for j in range(n)] for i in range(n)]
    if not kernel:
        return
    picks = []
    for _ in range(2):
        coeffs = [rng.randint(-2, 2) for _ in kernel]
        picks.append([sum(c * k[i] for c, k in zip(coeffs, kernel)) for i in range(n)])
    for h in picks:
        for g in picks:
            assert ctx.commutation_angle([ctx.d * x for x in h], [ctx.d * x for x in g]).is_trivial()


@pytest.mark.parametrize("flavor", ["regular", "holomorphic", "smooth"])
def test_report_ordering(flavor):
    rng = random.Random(5)
    for n in (1, 2, 3):
        for _ in range(4):
            rep = full_report(random_context(rng, n), flavor)
            if isinstance(rep.dg, int):
                assert rep.w_dg <= rep.dg <= rep.db
            assert rep.w_db <= rep.db == n
            if flavor != "regular":
                assert rep.dg == rep.w_dg == rep.db == rep.w_db == n
                assert "not computed" in rep.notes["dg"]


def test_reports_for_named_contexts():
    r = full_report(generic2(), "regular")
    assert (r.dg, r.w_dg, r.db, r.w_db) == (1, 1, 2, 2)
    r = full_report(ThetaMatrix.commutative(3), "holomorphic")
    assert (r.dg, r.w_dg, r.db, r.w_db) == (3, 3, 3, 3)


@pytest.mark.parametrize("n", [1, 2, 4])
def test_bidimension(n):
    ctx = ThetaMatrix.commutative(n)
    assert bidimension(ctx) == n
    cert = bidimension_certificate(ctx)
    assert cert.value == n and cert.duality_passed


def test_bidimension_certificate_generic_three_torus():
    cert = bidimension_certificate(elementary3())
    assert cert.duality_passed and cert.shift == [-1, -1, -1]


@pytest.mark.parametrize("seed", range(6))
def test_dimensions_are_gl_invariant(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 4)
    ctx = random_context(rng, n)
    U = random_unimodular(rng, n)
    ctx2 = ctx.transform(U)
    a, b = max_commutative_rank(ctx), max_commutative_rank(ctx2)
    if a.complete and b.complete:
        assert a.rank == b.rank
    assert mcconnell_pettit_generic(ctx) == mcconnell_pettit_generic(ctx2)
    assert bidimension(ctx) == bidimension(ctx2)
