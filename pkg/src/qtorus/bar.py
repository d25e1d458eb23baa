"""Brute-force oracle: the normalized Hochschild bar complex, truncated and ranked exactly.

C_k = A_sigma (x) Abar^(x)k where Abar drops the constant monomial.  A basis
tensor is a tuple of monomial modes (g_0; g_1, ..., g_k) with g_1..g_k nonzero,
and its total mode is their sum.  The differential is

    b(m ; a_1..a_k) = m sigma(a_1) ; a_2..a_k
                      + sum_{i=1}^{k-1} (-1)^i  m ; .. a_i a_{i+1} ..
                      + (-1)^k  a_k m ; a_1..a_{k-1}.

Truncation keeps tensors with weight sum_i |g_i|_inf <= B + 1.  The weight
never increases under b, so the truncation is a genuine subcomplex.  A
degree-p group at total mode mu is reported only when p < B and
|mu|_inf <= B - p.  This window is an empirical rule, not a theorem: at
p = B the degree-(p+1) chains needed to kill spurious cycles at mode 0 do
not fit into the budget (for n = 2 the truncation then reports 8 instead
of 1 at B = p = 2), while inside the window the truncated and Koszul
answers agree on every context tested.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .laurent import ScalingAutomorphism
from .linalg import sparse_rank
from .phase import ThetaMatrix

MAX_N = 2
MAX_BOUND = 4
MAX_DEGREE = 3


class InfeasibleError(ValueError):
    """The requested oracle run exceeds the explicit size limits."""


def _norm(g):
    return max((abs(x) for x in g), default=0)


def reliable(mu, degree: int, bound: int) -> bool:
    """Whether the truncation at ``bound`` is trusted for this mode and degree."""
    return degree < bound and _norm(mu) <= bound - degree


def _check_feasible(ctx: ThetaMatrix, bound: int, degree: int):
    if bound < 1:
        raise InfeasibleError("oracle bound must be at least 1")
    problems = []
    if ctx.n > MAX_N:
        problems.append(f"n={ctx.n} > {MAX_N}")
    if bound > MAX_BOUND:
        problems.append(f"bound={bound} > {MAX_BOUND}")
    if degree > MAX_DEGREE:
        problems.append(f"degree={degree} > {MAX_DEGREE}")
    if degree < 0:
        problems.append("negative degree")
    if problems:
        raise InfeasibleError("bar oracle limits exceeded: " + ", ".join(problems))


def bar_basis(n: int, mu, k: int, budget: int):
    """Normalized k-tensors of total mode mu and weight <= budget."""
    mu = tuple(mu)
    legs = [g for g in itertools.product(range(-budget, budget + 1), repeat=n) if any(g)]
    legs.sort(key=_norm)
    out = []

    def rec(prefix, total, weight):
        rest = tuple(m - t for m, t in zip(mu, total))
        if len(prefix) == k:
            if weight + _norm(rest) <= budget:
                out.append((rest,) + tuple(prefix))
            return
        for g in legs:
            w = weight + _norm(g)
            if w > budget:
                break
            t2 = tuple(a + b for a, b in zip(total, g))
            # later legs plus the coefficient slot must still reach mu
            if w + _norm(tuple(m - t for m, t in zip(mu, t2))) > budget:
                continue
            prefix.append(g)
            rec(prefix, t2, w)
            prefix.pop()

    rec([], (0,) * n, 0)
    return out


def bar_boundary(ctx: ThetaMatrix, sigma: ScalingAutomorphism, tensor):
    """b of a basis tensor, as a dict tensor -> scalar."""
    k = len(tensor) - 1
    out: dict = {}

    def put(key, angle, negative):
        c = ctx.scalar(angle)
        if negative:
            c = -c
        prev = out.get(key)
        new = c if prev is None else prev + c
        if new:
            out[key] = new
        else:
            out.pop(key, None)

    if k == 0:
        return out
    g = tensor
    add = lambda a, b: tuple(x + y for x, y in zip(a, b))  # noqa: E731
    # m sigma(a_1)
    put((add(g[0], g[1]),) + g[2:],
        sigma.angle_on(g[1]) + ctx.product_phase(g[0], g[1]), False)
    for i in range(1, k):
        merged = add(g[i], g[i + 1])
        if any(merged):
            put(g[:i] + (merged,) + g[i + 2:], ctx.product_phase(g[i], g[i + 1]), i % 2 == 1)
    # a_k m
    put((add(g[k], g[0]),) + g[1:k], ctx.product_phase(g[k], g[0]), k % 2 == 1)
    return out


def _rank(ctx, sigma, basis_k):
    return sparse_rank(bar_boundary(ctx, sigma, t) for t in basis_k)


@dataclass
class OracleEntry:
    mode: tuple
    dimension: int | None  # None when truncation may bite
    reliable: bool


def bar_oracle(ctx: ThetaMatrix, sigma=None, bound: int = 3, degree: int = 0):
    """Per-mode dim HH_degree(A, A_sigma) for all |mu|_inf <= bound.

    Modes outside the reliable window are returned with dimension None
    and reliable=False.
    """
    _check_feasible(ctx, bound, degree)
    sigma = ScalingAutomorphism.identity(ctx) if sigma is None else sigma
    budget = bound + 1
    n = ctx.n
    out = []
    for mu in itertools.product(range(-bound, bound + 1), repeat=n):
        if not reliable(mu, degree, bound):
            out.append(OracleEntry(mu, None, False))
            continue
        out.append(OracleEntry(mu, oracle_dimension(ctx, sigma, mu, degree, budget), True))
    return out


def oracle_dimension(ctx, sigma, mu, degree, budget):
    basis_p = bar_basis(ctx.n, mu, degree, budget)
    rank_out = _rank(ctx, sigma, basis_p) if degree > 0 else 0
    rank_in = _rank(ctx, sigma, bar_basis(ctx.n, mu, degree + 1, budget))
    return len(basis_p) - rank_out - rank_in


def oracle_table(ctx: ThetaMatrix, sigma=None, bound: int = 3, degrees=None):
    """{mode: [dims per degree or None]} sharing rank computations across degrees."""
    n = ctx.n
    degrees = list(range(n + 1)) if degrees is None else list(degrees)
    for p in degrees:
        _check_feasible(ctx, bound, p)
    sigma = ScalingAutomorphism.identity(ctx) if sigma is None else sigma
    budget = bound + 1
    table = {}
    for mu in itertools.product(range(-bound, bound + 1), repeat=n):
        wanted = [p for p in degrees if reliable(mu, p, bound)]
        if not wanted:
            table[mu] = {p: None for p in degrees}
            continue
        top = max(wanted) + 1
        bases = {k: bar_basis(n, mu, k, budget) for k in range(top + 1)}
        ranks = {0: 0}
        for k in range(1, top + 1):
            ranks[k] = _rank(ctx, sigma, bases[k])
        table[mu] = {p: (len(bases[p]) - ranks[p] - ranks[p + 1] if p in wanted else None)
                     for p in degrees}
    return table

