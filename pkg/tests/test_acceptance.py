"""Acceptance criteria 1-10, each printing a single PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v``; the lines are written to
the terminal even when output capture is on.
"""

import io
import json
import random
import time
from math import comb
from pathlib import Path

import pytest

from qtorus import QLaurent, ScalingAutomorphism, ThetaMatrix, multiply
from qtorus.bar import oracle_table
from qtorus.cli import main
from qtorus.dimensions import (
    bidimension, full_report, global_dim_algebraic, max_commutative_rank,
    mcconnell_pettit_generic, validate_witness,
)
from qtorus.koszul import (
    KoszulElement, ModeSet, augmentation, box, duality_check, hochschild_homology,
    koszul_differential, wedge_indices,
)
from qtorus.seminorms import (
    NumericContext, NumericElement, continuity_check, numeric_multiply, relative_error,
    unimodularity_guard,
)

from support import (elementary3, generic2, mixed3, random_context, random_laurent,
                     random_twist, random_unimodular, root_of_unity2)

CONTEXTS = Path(__file__).resolve().parent.parent / "docs" / "contexts"


@pytest.fixture
def verdict(capsys):
    def emit(number, ok, detail):
        with capsys.disabled():
            print(f"\ncriterion {number}: {'PASS' if ok else 'FAIL'} ({detail})")
        return ok
    return emit


def _oracle_disagreements(ctx, sigma, bound, degrees=None):
    table = oracle_table(ctx, sigma, bound, degrees)
    hh = hochschild_homology(ctx, sigma)
    bad, compared = [], 0
    for mu, dims in table.items():
        for p, dim in dims.items():
            if dim is None:
                continue
            compared += 1
            if dim != hh.dimension_at(p, mu):
                bad.append((mu, p, dim, hh.dimension_at(p, mu)))
    return bad, compared, table


def _random_koszul_element(ctx, rng, p):
    F = ctx.field
    terms = {}
    for _ in range(3):
        I = rng.choice(wedge_indices(ctx.n, p))
        a = tuple(rng.randint(-2, 2) for _ in range(ctx.n))
        b = tuple(rng.randint(-2, 2) for _ in range(ctx.n))
        c = F.phase(rng.randrange(ctx.d), [rng.randint(-1, 1) for _ in range(ctx.s)])
        terms[(a, I, b)] = c * rng.randint(1, 3)
    return KoszulElement(ctx, p, terms)


def test_criterion_01_koszul_complex(verdict):
    start = time.perf_counter()
    failures, checked = [], 0
    for n in (1, 2, 3, 4):
        rng = random.Random(100 + n)
        for _ in range(50):
            ctx = random_context(rng, n, rng.choice(["generic", "root", "mixed", "commutative"]))
            for p in range(1, n + 1):
                e = _random_koszul_element(ctx, rng, p)
                de = koszul_differential(ctx, e)
                if p >= 2 and not koszul_differential(ctx, de).is_zero():
                    failures.append((n, p, "d o d"))
                if p == 1 and augmentation(ctx, de):
                    failures.append((n, p, "mu o d"))
                checked += 1
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < 60
    verdict(1, ok, f"{checked} elements over 200 contexts, {len(failures)} failures, "
                   f"{elapsed:.1f}s")
    assert ok, failures[:3]


def _report(path, flavor):
    out = io.StringIO()
    code = main(["report", "--input", str(path), "--flavor", flavor], out, io.StringIO())
    assert code == 0
    return json.loads(out.getvalue())["dimensions"]


def test_criterion_02_generic_two_torus_dimensions(verdict):
    path = CONTEXTS / "generic2.yaml"
    got = {f: [_report(path, f)[k] for k in ("dg", "w_dg", "db", "w_db")]
           for f in ("regular", "smooth", "holomorphic")}
    ok = (got["regular"] == [1, 1, 2, 2] and got["smooth"] == [2] * 4
          and got["holomorphic"] == [2] * 4)
    verdict(2, ok, f"(dg, w.dg, db, w.db) = {got}")
    assert ok


def test_criterion_03_generic_hochschild_homology(verdict):
    ctx = generic2()
    hh = hochschild_homology(ctx)
    origin_only = ModeSet.build(2, 1, [((1, 0), 0), ((0, 1), 0)])
    sets_ok = all(hh.modes[p] == origin_only for p in range(3))
    dims = [hh.dimension_at(p, (0, 0)) for p in range(3)]
    start = time.perf_counter()
    bad, compared, _ = _oracle_disagreements(ctx, None, 3)
    elapsed = time.perf_counter() - start
    ok = sets_ok and dims == [1, 2, 1] and not bad and compared > 0 and elapsed < 300
    verdict(3, ok, f"dims {dims}, ModeSet {hh.modes[0].describe()}, oracle B=3 agrees on "
                   f"{compared - len(bad)}/{compared} interior (mode, degree) pairs, "
                   f"{elapsed:.1f}s")
    assert ok, bad[:3]


def test_criterion_04_root_of_unity(verdict):
    ctx = root_of_unity2(3)
    dg = global_dim_algebraic(ctx)
    witness = dg.witness.basis
    lattice = ModeSet.build(2, 3, congruences=[((1, 0), 0), ((0, 1), 0)])
    hh = hochschild_homology(ctx)
    sets_ok = all(hh.modes[p] == lattice for p in range(3))
    start = time.perf_counter()
    bad, compared, table = _oracle_disagreements(ctx, None, 4)
    elapsed = time.perf_counter() - start
    nonzero_30 = table[(3, 0)][0]
    ok = (dg.render() == 2 and dg.complete and witness == [(3, 0), (0, 3)]
          and validate_witness(ctx, witness) and sets_ok and not bad and nonzero_30 == 1)
    verdict(4, ok, f"dg = {dg.render()} with witness {witness}, ModeSet "
                   f"{hh.modes[0].describe()}, oracle B=4 agrees on "
                   f"{compared - len(bad)}/{compared} interior pairs, {elapsed:.1f}s")
    assert ok, bad[:3]


def test_criterion_05_commutative(verdict):
    problems = []
    for n in (1, 2, 3):
        ctx = ThetaMatrix.commutative(n)
        rep = full_report(ctx)
        if (rep.dg, rep.db) != (n, n):
            problems.append(f"n={n}: dg, db = {rep.dg}, {rep.db}")
        hh = hochschild_homology(ctx)
        for p in range(n + 1):
            if not hh.modes[p].is_everything() or hh.multiplicity(p) != comb(n, p):
                problems.append(f"n={n}: degree {p}")
    compared = 0
    for n, bound in ((1, 3), (2, 3)):
        bad, c, _ = _oracle_disagreements(ThetaMatrix.commutative(n), None, bound)
        compared += c
        problems += [f"oracle n={n}: {b}" for b in bad]
    ok = not problems
    verdict(5, ok, f"dg = db = n and HH_p = binom(n,p) on all of Z^n for n <= 3; oracle "
                   f"agrees on {compared} interior pairs for n <= 2"
                   + (f"; problems: {problems[:3]}" if problems else ""))
    assert ok


def test_criterion_06_generic_criterion(verdict):
    ctx3 = elementary3()
    ctx2 = ThetaMatrix.from_upper(2, {(0, 1): "1/5"})
    mp3, dg3 = mcconnell_pettit_generic(ctx3), global_dim_algebraic(ctx3).render()
    mp2 = mcconnell_pettit_generic(ctx2)
    ok = mp3 and dg3 == 1 and not mp2
    verdict(6, ok, f"n=3 elementary forms: criterion {mp3}, dg {dg3}; n=2, s=0: criterion {mp2}")
    assert ok


def test_criterion_07_duality_with_alpha(verdict):
    start = time.perf_counter()
    kinds = ("generic", "root", "mixed")
    failed_contexts = {1: 0, 2: 0, 3: 0}
    first = None
    for n in (1, 2, 3):
        rng = random.Random(700 + n)
        for k in range(10):
            ctx = random_context(rng, n, kinds[k % 3])
            sigmas = [None, ScalingAutomorphism.alpha(ctx)] + [random_twist(ctx, rng)
                                                               for _ in range(3)]
            reports = [duality_check(ctx, s, degrees=range(n + 1)) for s in sigmas]
            if not all(r.passed for r in reports):
                failed_contexts[n] += 1
                if first is None:
                    r = next(r for r in reports if not r.passed)
                    first = (n, kinds[k % 3], r.counterexample)
    elapsed = time.perf_counter() - start
    ok = not any(failed_contexts.values()) and elapsed < 120
    detail = (f"failing contexts per n: {failed_contexts}, {elapsed:.1f}s")
    if first:
        detail += (f"; first failure n={first[0]} ({first[1]}): {first[2]}. With sigma = id, "
                   "HH^0(A, A) always contains mode 0 while HH_n(A, A_alpha) vanishes unless "
                   "alpha is inner, which fails for these n = 3 contexts; duality does hold "
                   "with the inner twist x_j -> prod_i q_ij x_j (see test_koszul)")
    verdict(7, ok, detail)
    assert ok, detail


def _transformed_count(S, U, n, radius):
    return sum(1 for h in box(n, radius)
               if S.contains(tuple(sum(U[i][j] * h[j] for j in range(n)) for i in range(n))))


def test_criterion_08_gl_invariance(verdict):
    named = {"generic2": generic2(), "root2": root_of_unity2(3), "mixed3": mixed3(),
             "elementary3": elementary3(), "commutative3": ThetaMatrix.commutative(3),
             "symplectic-padded3": ThetaMatrix.from_upper(3, {(0, 2): "1/2"}, [{(0, 1): 1}])}
    problems = []
    rng = random.Random(800)
    for name, ctx in named.items():
        n = ctx.n
        base_dg = global_dim_algebraic(ctx)
        base_mp = mcconnell_pettit_generic(ctx)
        base_hh = hochschild_homology(ctx)
        for _ in range(20):
            U = random_unimodular(rng, n, steps=6)
            ctx2 = ctx.transform(U)
            dg2 = global_dim_algebraic(ctx2)
            if (dg2.render(), dg2.complete) != (base_dg.render(), base_dg.complete):
                problems.append(f"{name}: dg {dg2.render()} vs {base_dg.render()}")
            if bidimension(ctx2) != bidimension(ctx):
                problems.append(f"{name}: db")
            if mcconnell_pettit_generic(ctx2) != base_mp:
                problems.append(f"{name}: generic criterion")
            hh2 = hochschild_homology(ctx2)
            for p in range(n + 1):
                new = hh2.multiplicity(p) * hh2.modes[p].count(2)
                old = base_hh.multiplicity(p) * _transformed_count(base_hh.modes[p], U, n, 2)
                if new != old:
                    problems.append(f"{name}: HH_{p} box count {new} vs {old}")
    ok = not problems
    verdict(8, ok, f"{len(named)} contexts x 20 transforms; "
                   + (f"problems: {problems[:3]}" if problems else "all invariants preserved"))
    assert ok


def test_criterion_09_seminorms(verdict):
    start = time.perf_counter()
    rng = random.Random(900)
    ctx = generic2()
    nctx = NumericContext(ctx, [0.6180339887498949])
    worst_cont, worst_prod, fails = 0.0, 0.0, 0
    for _ in range(100):
        a = NumericElement(nctx, {tuple(rng.randint(-4, 4) for _ in range(2)):
                                  complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
                                  for _ in range(rng.randint(1, 6))})
        b = NumericElement(nctx, {tuple(rng.randint(-4, 4) for _ in range(2)):
                                  complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
                                  for _ in range(rng.randint(1, 6))})
        for rho in (0.5, 1.0, 2.0):
            rep = continuity_check(nctx, a, b, rho, tol=1e-12)
            fails += not rep.passed
            worst_cont = max(worst_cont, (rep.lhs - rep.rhs) / rep.rhs)
    for n in (1, 2, 3):
        for _ in range(30):
            c = random_context(rng, n)
            nc = NumericContext(c, [rng.random() for _ in range(c.s)])
            x, y = random_laurent(c, rng), random_laurent(c, rng)
            exact = NumericElement.from_exact(nc, multiply(c, x, y))
            num = numeric_multiply(nc, NumericElement.from_exact(nc, x),
                                   NumericElement.from_exact(nc, y))
            worst_prod = max(worst_prod, relative_error(exact, num))
    guards = [unimodularity_guard(2, {(0, 1): 2.0}), unimodularity_guard(3, {(0, 1): 1.0, (0, 2): 0.5}),
              unimodularity_guard(2, {(0, 1): 1.0 + 1e-9})]
    guard_ok = (all(not g.accepted and "Arens-Michael envelope remark" in g.message for g in guards)
                and unimodularity_guard(2, {(0, 1): 1.0}).accepted)
    elapsed = time.perf_counter() - start
    ok = fails == 0 and worst_prod <= 1e-10 and guard_ok
    verdict(9, ok, f"continuity failures {fails}/300, worst relative excess {worst_cont:.2e}; "
                   f"worst exact-vs-numeric error {worst_prod:.2e}; guard rejects r != 1: "
                   f"{guard_ok}; {elapsed:.1f}s")
    assert ok


def test_criterion_10_associativity(verdict):
    failures, total = [], 0
    for n in (1, 2, 3, 4):
        rng = random.Random(1000 + n)
        for _ in range(200):
            ctx = random_context(rng, n, rng.choice(["generic", "root", "mixed", "commutative"]))
            a, b, c = (random_laurent(ctx, rng) for _ in range(3))
            total += 1
            if (a * b) * c != a * (b * c):
                failures.append((n, str(a), str(b), str(c)))
            ea, eb, ec = (tuple(rng.randint(-3, 3) for _ in range(n)) for _ in range(3))
            lhs = ctx.product_phase(ea, eb) + ctx.product_phase(
                tuple(x + y for x, y in zip(ea, eb)), ec)
            rhs = ctx.product_phase(eb, ec) + ctx.product_phase(
                ea, tuple(x + y for x, y in zip(eb, ec)))
            if lhs != rhs:
                failures.append((n, "cocycle", ea, eb, ec))
    ok = not failures
    verdict(10, ok, f"{total} random triples for n = 1..4, exact; {len(failures)} failures")
    assert ok, failures[:2]
