"""Seeded generators shared by the tests."""

from __future__ import annotations

import random
from fractions import Fraction

from hypothesis import strategies as st

from qtorus import Angle, QLaurent, ScalingAutomorphism, ThetaMatrix


def generic2():
    return ThetaMatrix.from_upper(2, {}, [{(0, 1): 1}])


def root_of_unity2(d=3):
    return ThetaMatrix.from_upper(2, {(0, 1): Fraction(1, d)}, [])


def elementary3():
    return ThetaMatrix.from_upper(3, {}, [{(0, 1): 1}, {(0, 2): 1}, {(1, 2): 1}])


def mixed3():
    return ThetaMatrix.from_upper(3, {(0, 1): Fraction(1, 2), (1, 2): Fraction(1, 4)},
                                  [{(0, 2): 1}])


def random_context(rng: random.Random, n: int, kind: str | None = None) -> ThetaMatrix:
    """kind: 'generic' (irrational only), 'root' (rational only), 'mixed', 'commutative'."""
    kind = kind or rng.choice(["generic", "root", "mixed"])
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    if kind == "commutative":
        return ThetaMatrix(n)
    d = 1 if kind == "generic" else rng.choice([2, 3, 4, 5, 6])
    c = {} if kind == "generic" else {p: Fraction(rng.randrange(d), d) for p in pairs}
    s = 0 if kind == "root" else rng.randint(1, 2)
    ms = [{p: rng.randint(-2, 2) for p in pairs} for _ in range(s)]
    return ThetaMatrix.from_upper(n, c, ms, d=d)


def random_twist(ctx: ThetaMatrix, rng: random.Random) -> ScalingAutomorphism:
    return ScalingAutomorphism(ctx, [
        Angle(Fraction(rng.randrange(ctx.d), ctx.d), [rng.randint(-1, 1) for _ in range(ctx.s)])
        for _ in range(ctx.n)])


def random_laurent(ctx: ThetaMatrix, rng: random.Random, terms=3, spread=2) -> QLaurent:
    F = ctx.field
    out = {}
    for _ in range(terms):
        g = tuple(rng.randint(-spread, spread) for _ in range(ctx.n))
        c = F.phase(rng.randrange(ctx.d), [rng.randint(-1, 1) for _ in range(ctx.s)])
        out[g] = c * rng.randint(-3, 3) + (out.get(g) or F.zero)
    return QLaurent(ctx, out)


def random_unimodular(rng: random.Random, n: int, steps: int = 4):
    U = [[int(i == j) for j in range(n)] for i in range(n)]
    if n == 1:
        return [[rng.choice([1, -1])]]
    for _ in range(steps):
        i, j = rng.sample(range(n), 2)
        k = rng.choice([-1, 1])
        for r in range(n):
            U[r][j] += k * U[r][i]
        if rng.random() < 0.3:
            for r in range(n):
                U[r][i], U[r][j] = U[r][j], U[r][i]
    return U


def unimodular_inverse(U):
    from qtorus.linalg import integer_inverse
    return integer_inverse(U)


@st.composite
def contexts(draw, n=None, max_n=4):
    n = n or draw(st.integers(1, max_n))
    seed = draw(st.integers(0, 10**6))
    kind = draw(st.sampled_from(["generic", "root", "mixed", "commutative"]))
    return random_context(random.Random(seed), n, kind)


@st.composite
def laurent_triples(draw, max_n=4):
    ctx = draw(contexts(max_n=max_n))
    seed = draw(st.integers(0, 10**6))
    rng = random.Random(seed)
    return ctx, random_laurent(ctx, rng), random_laurent(ctx, rng), random_laurent(ctx, rng)
