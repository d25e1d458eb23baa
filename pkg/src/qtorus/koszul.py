"""Bimodule Koszul complex of the quantum torus and per-mode Hochschild (co)homology.

K_p = A (x) L^p (x) A with basis a (x) e_I (x) b for monomials a, b and
increasing index tuples I.  Everything is graded by the total mode
deg a + sum_{i in I} e_i + deg b, and the differential preserves it.

Coefficients live in the twisted bimodule A_sigma, where the right action
is twisted: m . a = m sigma(a).  Tensoring down,

    A_sigma (x)_{A-A} K_p  ~  A_sigma (x) L^p,   m (x) (a (x) e_I (x) b) -> (b m sigma(a)) (x) e_I,

and at a fixed total mode mu the induced complex has basis
v_I = x^(mu - e_I) (x) e_I.  After the rescaling f_I = v_I / c_I with

    c_I = e( sum_{i in I} p(e_i, mu) + sum_{j<l in I} theta_jl ),

the induced differential is exactly the Koszul differential of the scalars

    lambda_i(mu) = e( b_i + B(mu, e_i) ) - 1,
    d f_I = sum_k (-1)^(k-1) lambda_{i_k} f_{I minus i_k}    (k 1-based).

Over a field such a complex is exact unless every lambda_i vanishes, in
which case every differential is zero.  Cochains behave the same way with
e_I -> x^(nu + e_I), which yields the same vanishing condition at nu.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import comb

from .field import CoeffScalar
from .laurent import QLaurent, ScalingAutomorphism, compose_twists
from .linalg import dense_rank, row_hermite, solve_integer, solve_with_congruences
from .phase import Angle, ThetaMatrix


def _unit(n, i):
    return tuple(int(k == i) for k in range(n))


def _addv(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _subv(a, b):
    return tuple(x - y for x, y in zip(a, b))


def wedge_indices(n: int, p: int):
    """Increasing index tuples of size p, lexicographic order (0-based)."""
    return list(itertools.combinations(range(n), p))


class WedgeIndex(tuple):
    """Strictly increasing tuple of 0-based generator indices."""

    def __new__(cls, items, n: int | None = None):
        items = tuple(int(i) for i in items)
        if any(a >= b for a, b in zip(items, items[1:])):
            raise ValueError(f"wedge index {items} is not strictly increasing")
        if items and (items[0] < 0 or (n is not None and items[-1] >= n)):
            raise ValueError(f"wedge index {items} out of range")
        return super().__new__(cls, items)

    def mode(self, n: int):
        v = [0] * n
        for i in self:
            v[i] = 1
        return tuple(v)


class KoszulElement:
    """Finite sum of a (x) e_I (x) b over monomials, all of one degree p."""

    __slots__ = ("ctx", "degree", "terms")

    def __init__(self, ctx: ThetaMatrix, degree: int, terms=None):
        if not 0 <= degree <= ctx.n:
            raise ValueError(f"degree {degree} outside 0..{ctx.n}")
        self.ctx = ctx
        self.degree = degree
        self.terms: dict = {}
        F = ctx.field
        for (a, I, b), c in (terms or {}).items():
            I = WedgeIndex(I, ctx.n)
            if len(I) != degree:
                raise ValueError(f"wedge index {tuple(I)} has size {len(I)}, expected {degree}")
            ctx._check_index(a)
            ctx._check_index(b)
            self._accumulate((tuple(a), tuple(I), tuple(b)), F.scalar(c))

    def _accumulate(self, key, c):
        prev = self.terms.get(key)
        new = c if prev is None else prev + c
        if new:
            self.terms[key] = new
        else:
            self.terms.pop(key, None)

    @classmethod
    def basis(cls, ctx, I, a=None, b=None, coeff=1) -> KoszulElement:
        zero = (0,) * ctx.n
        return cls(ctx, len(I), {(a or zero, tuple(I), b or zero): coeff})

    @classmethod
    def pure(cls, ctx, a: QLaurent, I, b: QLaurent) -> KoszulElement:
        """a (x) e_I (x) b for Laurent polynomials a, b, expanded bilinearly."""
        out = cls(ctx, len(I))
        I = tuple(WedgeIndex(I, ctx.n))
        for ea, ca in a.terms.items():
            for eb, cb in b.terms.items():
                out._accumulate((ea, I, eb), ca * cb)
        return out

    def __add__(self, other):
        if not isinstance(other, KoszulElement):
            return NotImplemented
        if other.ctx != self.ctx or other.degree != self.degree:
            raise ValueError("Koszul elements of different contexts or degrees")
        out = self.copy()
        for k, c in other.terms.items():
            out._accumulate(k, c)
        return out

    def __neg__(self):
        out = KoszulElement(self.ctx, self.degree)
        out.terms = {k: -c for k, c in self.terms.items()}
        return out

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> KoszulElement:
        c = self.ctx.field.scalar(c)
        out = KoszulElement(self.ctx, self.degree)
        if c:
            out.terms = {k: v * c for k, v in self.terms.items()}
        return out

    def copy(self) -> KoszulElement:
        out = KoszulElement(self.ctx, self.degree)
        out.terms = dict(self.terms)
        return out

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, KoszulElement):
            return NotImplemented
        return (self.ctx == other.ctx and self.degree == other.degree
                and self.terms == other.terms)

    def modes(self) -> set:
        """Total modes deg a + e_I + deg b of the summands."""
        n = self.ctx.n
        return {_addv(_addv(a, WedgeIndex(I).mode(n)), b) for a, I, b in self.terms}

    def __str__(self):
        if not self.terms:
            return "0"

        def mono(g):
            s = " ".join(f"x{i + 1}^{e}" for i, e in enumerate(g) if e)
            return s or "1"

        parts = []
        for (a, I, b), c in sorted(self.terms.items()):
            wedge = "".join(f"e{i + 1}" for i in I) or "1"
            parts.append(f"({c}) {mono(a)} (x) {wedge} (x) {mono(b)}")
        return " + ".join(parts)

    __repr__ = __str__


def koszul_differential(ctx: ThetaMatrix, e: KoszulElement) -> KoszulElement:
    """d(a (x) e_I (x) b) = sum_k (-1)^(k-1) [ (prod_{s<k} q_{i_s i_k}) a x_{i_k} (x) e_{I-i_k} (x) b
                                         - (prod_{s>k} q_{i_k i_s}) a (x) e_{I-i_k} (x) x_{i_k} b ]."""
    if e.degree < 1:
        raise ValueError("the differential starts in degree 1; use augmentation in degree 0")
    n = ctx.n
    out = KoszulElement(ctx, e.degree - 1)
    for (a, I, b), c in e.terms.items():
        p = len(I)
        for k in range(p):
            ik = I[k]
            x = _unit(n, ik)
            rest = I[:k] + I[k + 1:]
            left = Angle.zero(ctx.s)
            for s in range(k):
                left = left + ctx.theta(I[s], ik)
            right = Angle.zero(ctx.s)
            for s in range(k + 1, p):
                right = right + ctx.theta(ik, I[s])
            sign = c if k % 2 == 0 else -c
            ph = ctx.scalar(left + ctx.product_phase(a, x))
            out._accumulate((_addv(a, x), rest, b), sign * ph)
            ph = ctx.scalar(right + ctx.product_phase(x, b))
            out._accumulate((a, rest, _addv(x, b)), -(sign * ph))
    return out


def augmentation(ctx: ThetaMatrix, e: KoszulElement) -> QLaurent:
    """Multiplication K_0 = A (x) A -> A."""
    if e.degree != 0:
        raise ValueError("augmentation is defined on degree 0 only")
    out: dict = {}
    for (a, _, b), c in e.terms.items():
        key = _addv(a, b)
        v = c * ctx.scalar(ctx.product_phase(a, b))
        prev = out.get(key)
        out[key] = v if prev is None else prev + v
    return QLaurent._wrap(ctx, {k: v for k, v in out.items() if v})


# -- per-mode complexes -------------------------------------------------------


def _sigma(ctx, sigma):
    if sigma is None:
        return ScalingAutomorphism.identity(ctx)
    if sigma.ctx != ctx:
        raise ValueError("twist belongs to a different context")
    return sigma


def mode_angles(ctx: ThetaMatrix, sigma, gamma):
    """Angles b_i + B(gamma, e_i); their phases minus one are the mode scalars."""
    sigma = _sigma(ctx, sigma)
    n = ctx.n
    return [sigma.b[i] + ctx.commutation_angle(gamma, _unit(n, i)) for i in range(n)]


def mode_scalars(ctx: ThetaMatrix, sigma, gamma) -> list[CoeffScalar]:
    """lambda_i(gamma) = e(b_i + B(gamma, e_i)) - 1.

    This is the scalar by which x_i acting from the right through sigma,
    minus the left action, moves x^(gamma - e_i) into mode gamma (after the
    basis normalization described in the module docstring).
    """
    one = ctx.field.one
    return [ctx.scalar(a) - one for a in mode_angles(ctx, sigma, gamma)]


def scalar_koszul_matrix(ctx: ThetaMatrix, lams, p: int):
    """Koszul matrix of a scalar sequence, rows e_J (|J| = p-1), columns e_I (|I| = p)."""
    n = ctx.n
    rows = wedge_indices(n, p - 1)
    cols = wedge_indices(n, p)
    ridx = {J: r for r, J in enumerate(rows)}
    F = ctx.field
    mat = [[F.zero] * len(cols) for _ in rows]
    for c, I in enumerate(cols):
        for k, ik in enumerate(I):
            J = I[:k] + I[k + 1:]
            mat[ridx[J]][c] = lams[ik] if k % 2 == 0 else -lams[ik]
    return mat


def _tensor_down(ctx, sigma, m, a, b):
    """(b . x^m . sigma(a)) as (exponent, scalar) in A_sigma."""
    ang = ctx.product_phase(b, m) + ctx.product_phase(_addv(b, m), a) + sigma.angle_on(a)
    return _addv(_addv(b, m), a), ctx.scalar(ang)


def normalization(ctx: ThetaMatrix, mu, I) -> CoeffScalar:
    """c_I with f_I = v_I / c_I."""
    n = ctx.n
    ang = Angle.zero(ctx.s)
    for i in I:
        ang = ang + ctx.product_phase(_unit(n, i), mu)
    for j, l in itertools.combinations(I, 2):
        ang = ang + ctx.theta(j, l)
    return ctx.scalar(ang)


def induced_chain_matrix(ctx: ThetaMatrix, sigma, mu, p: int, normalized: bool = True):
    """Matrix of A_sigma (x) K_p -> A_sigma (x) K_{p-1} at total mode mu.

    Computed literally: tensor down the Koszul differential of 1 (x) e_I (x) 1
    applied to x^(mu - e_I).  Rows are e_J (|J| = p-1), columns e_I, both in
    lexicographic order.
    """
    sigma = _sigma(ctx, sigma)
    n = ctx.n
    mu = tuple(mu)
    F = ctx.field
    rows = wedge_indices(n, p - 1)
    cols = wedge_indices(n, p)
    ridx = {J: r for r, J in enumerate(rows)}
    mat = [[F.zero] * len(cols) for _ in rows]
    for c, I in enumerate(cols):
        eI = WedgeIndex(I).mode(n)
        m = _subv(mu, eI)
        d = koszul_differential(ctx, KoszulElement.basis(ctx, I))
        for (a, J, b), coef in d.terms.items():
            g, ph = _tensor_down(ctx, sigma, m, a, b)
            assert _addv(g, WedgeIndex(J).mode(n)) == mu
            mat[ridx[J]][c] = mat[ridx[J]][c] + coef * ph
    if normalized:
        norm_r = [normalization(ctx, mu, J) for J in rows]
        norm_c = [normalization(ctx, mu, I).inverse() for I in cols]
        mat = [[x * norm_r[r] * norm_c[c] if x else x for c, x in enumerate(row)]
               for r, row in enumerate(mat)]
    return mat


def induced_cochain_matrix(ctx: ThetaMatrix, sigma, nu, p: int):
    """Matrix of the coboundary Hom(K_p, A_sigma) -> Hom(K_{p+1}, A_sigma) at mode nu.

    Basis cochain g_I sends e_I to x^(nu + e_I) and every other e_J to 0;
    the coboundary is (delta g)(e_J) = g(d(1 (x) e_J (x) 1)) with
    g(a (x) e_K (x) b) = a g(e_K) sigma(b).  Rows g_J (|J| = p+1), columns g_I.
    """
    sigma = _sigma(ctx, sigma)
    n = ctx.n
    nu = tuple(nu)
    F = ctx.field
    rows = wedge_indices(n, p + 1)
    cols = wedge_indices(n, p)
    cidx = {I: c for c, I in enumerate(cols)}
    mat = [[F.zero] * len(cols) for _ in rows]
    for r, J in enumerate(rows):
        d = koszul_differential(ctx, KoszulElement.basis(ctx, J))
        for (a, K, b), coef in d.terms.items():
            val = _addv(nu, WedgeIndex(K).mode(n))
            ang = (ctx.product_phase(a, val) + ctx.product_phase(_addv(a, val), b)
                   + sigma.angle_on(b))
            assert _addv(_addv(a, val), b) == _addv(nu, WedgeIndex(J).mode(n))
            c = cidx[K]
            mat[r][c] = mat[r][c] + coef * ctx.scalar(ang)
    return mat


def per_mode_homology(ctx: ThetaMatrix, sigma, mu) -> list[int]:
    """dim HH_p(A, A_sigma) at mode mu for p = 0..n, by exact ranks of the literal matrices."""
    n = ctx.n
    ranks = [0] * (n + 2)
    for p in range(1, n + 1):
        ranks[p] = dense_rank(induced_chain_matrix(ctx, sigma, mu, p, normalized=False))
    return [comb(n, p) - ranks[p] - ranks[p + 1] for p in range(n + 1)]


def per_mode_cohomology(ctx: ThetaMatrix, sigma, nu) -> list[int]:
    """dim HH^p(A, A_sigma) at mode nu for p = 0..n, by exact ranks of the literal matrices."""
    n = ctx.n
    ranks = [0] * (n + 1)  # ranks[p] = rank of delta: C^p -> C^(p+1)
    for p in range(n):
        ranks[p] = dense_rank(induced_cochain_matrix(ctx, sigma, nu, p))
    return [comb(n, p) - ranks[p] - (ranks[p - 1] if p else 0) for p in range(n + 1)]


# -- mode sets ---------------------------------------------------------------


def box(n: int, radius: int):
    """All gamma in Z^n with |gamma|_inf <= radius, lexicographic."""
    return itertools.product(range(-radius, radius + 1), repeat=n)


@dataclass(frozen=True)
class ModeSet:
    """{gamma in Z^n : L.gamma = r for each equation, N.gamma = r mod modulus for each congruence}."""

    n: int
    modulus: int
    equations: tuple = ()
    congruences: tuple = ()

    @classmethod
    def build(cls, n, modulus, equations=(), congruences=()):
        # canonical forms: Hermite form of the affine rows; for congruences,
        # of the row lattice together with modulus * (unit rows)
        rows = [[int(x) for x in L] + [int(r)] for L, r in equations]
        eqs = [(tuple(h[:n]), h[n]) for h in row_hermite(rows, n + 1)]
        cons = []
        if modulus > 1 and congruences:
            rows = [[int(x) for x in N] + [int(r)] for N, r in congruences]
            trivial = [list(L) + [r] for L, r in eqs]
            trivial += [[modulus * int(i == j) for j in range(n + 1)] for i in range(n + 1)]
            gens = [list(col) for col in zip(*trivial)]
            for h in row_hermite(rows + trivial, n + 1):
                # skip consequences of the equations
                if solve_integer(gens, h, len(trivial)) is None:
                    cons.append((tuple(h[:n]), h[n]))
        return cls(n, modulus, tuple(eqs), tuple(cons))

    @classmethod
    def everything(cls, n, modulus=1):
        return cls(n, modulus)

    def __contains__(self, gamma) -> bool:
        return self.contains(gamma)

    def contains(self, gamma) -> bool:
        for L, r in self.equations:
            if sum(a * g for a, g in zip(L, gamma)) != r:
                return False
        for N, r in self.congruences:
            if (sum(a * g for a, g in zip(N, gamma)) - r) % self.modulus:
                return False
        return True

    def is_everything(self) -> bool:
        return not self.equations and not self.congruences

    def witness(self):
        """Some member, or None when the set is empty."""
        return solve_with_congruences(self.equations, self.congruences, self.modulus, self.n)

    def is_empty(self) -> bool:
        return self.witness() is None

    def points(self, radius: int):
        return [g for g in box(self.n, radius) if self.contains(g)]

    def count(self, radius: int) -> int:
        return sum(1 for g in box(self.n, radius) if self.contains(g))

    def translate(self, t) -> ModeSet:
        """{gamma + t : gamma in self}."""
        eqs = [(L, r + sum(a * x for a, x in zip(L, t))) for L, r in self.equations]
        cons = [(N, r + sum(a * x for a, x in zip(N, t))) for N, r in self.congruences]
        return ModeSet.build(self.n, self.modulus, eqs, cons)

    def pullback(self, U) -> ModeSet:
        """{gamma : U gamma in self}, the image of the set under gamma -> U^-1 gamma."""
        n = self.n

        def tr(L):
            return tuple(sum(U[k][j] * L[k] for k in range(n)) for j in range(n))

        return ModeSet.build(n, self.modulus,
                             [(tr(L), r) for L, r in self.equations],
                             [(tr(N), r) for N, r in self.congruences])

    @staticmethod
    def _form(L):
        terms = []
        for i, a in enumerate(L):
            if not a:
                continue
            g = f"g{i + 1}"
            coef = "" if a == 1 else "-" if a == -1 else f"{a}*"
            terms.append(f"{coef}{g}")
        return " + ".join(terms).replace("+ -", "- ") or "0"

    def describe(self) -> str:
        if self.is_everything():
            return f"all of Z^{self.n}"
        if self.is_empty():
            return "empty"
        conds = [f"{self._form(L)} = {r}" for L, r in self.equations]
        conds += [f"{self._form(N)} = {r} mod {self.modulus}" for N, r in self.congruences]
        return "{g in Z^%d : %s}" % (self.n, ", ".join(conds))

    def to_dict(self) -> dict:
        return {
            "description": self.describe(),
            "modulus": self.modulus,
            "equations": [{"form": list(L), "value": r} for L, r in self.equations],
            "congruences": [{"form": list(N), "residue": r} for N, r in self.congruences],
        }


def mode_set(ctx: ThetaMatrix, sigma) -> ModeSet:
    """Modes where every angle b_j + B(gamma, e_j) is trivial."""
    sigma = _sigma(ctx, sigma)
    n, d = ctx.n, ctx.d
    eqs, cons = [], []
    for j in range(n):
        bj = sigma.b[j]
        for t, M in enumerate(ctx.M):
            eqs.append(([M[i][j] for i in range(n)], -bj.m[t]))
        form = [int(d * ctx.C[i][j]) for i in range(n)]
        cons.append((form, int(-d * bj.c)))
    return ModeSet.build(n, d, eqs, cons)


# -- homology tables ---------------------------------------------------------


@dataclass
class HomologyTable:
    flavor: str  # "homology" or "cohomology"
    ctx: ThetaMatrix
    twist: ScalingAutomorphism
    modes: list  # ModeSet per degree 0..n
    notes: list = field(default_factory=list)

    @property
    def n(self) -> int:
        return self.ctx.n

    def multiplicity(self, p: int) -> int:
        return comb(self.n, p)

    def degrees(self):
        return range(self.n + 1)

    def dimension_at(self, p: int, gamma) -> int:
        return self.multiplicity(p) if self.modes[p].contains(gamma) else 0

    def box_counts(self, radius: int) -> list[int]:
        return [self.multiplicity(p) * self.modes[p].count(radius) for p in self.degrees()]

    def support(self, p: int, radius: int):
        return self.modes[p].points(radius)

    def to_dict(self, radius: int | None = None) -> dict:
        out = {
            "flavor": self.flavor,
            "n": self.n,
            "twist": [str(a) for a in self.twist.b],
            "degrees": [],
        }
        for p in self.degrees():
            entry = {"degree": p, "multiplicity": self.multiplicity(p),
                     "modes": self.modes[p].to_dict()}
            if radius is not None:
                pts = self.modes[p].points(radius)
                entry["box_modes"] = len(pts)
                entry["box_dimension"] = self.multiplicity(p) * len(pts)
            out["degrees"].append(entry)
        if radius is not None:
            out["box"] = radius
        if self.notes:
            out["notes"] = list(self.notes)
        return out


def hochschild_homology(ctx: ThetaMatrix, sigma=None) -> HomologyTable:
    sigma = _sigma(ctx, sigma)
    S = mode_set(ctx, sigma)
    return HomologyTable("homology", ctx, sigma, [S] * (ctx.n + 1))


class ConventionError(RuntimeError):
    """Two independent computations of the same group disagree."""


def correspondence_shift(ctx: ThetaMatrix, dualizing: ScalingAutomorphism):
    """beta with B(beta, e_j) = -u_j for every j, or None.

    With such beta the cohomology mode nu of A_sigma matches the homology
    mode nu + beta of A_(u sigma).  It exists exactly when the dualizing
    twist u is inner.
    """
    n, d = ctx.n, ctx.d
    eqs, cons = [], []
    for j in range(n):
        uj = dualizing.b[j]
        for t, M in enumerate(ctx.M):
            eqs.append(([M[i][j] for i in range(n)], -uj.m[t]))
        cons.append(([int(d * ctx.C[i][j]) for i in range(n)], int(-d * uj.c)))
    beta = solve_with_congruences(eqs, cons, d, n)
    return None if beta is None else tuple(beta)


def cohomology_mode_set(ctx: ThetaMatrix, sigma) -> ModeSet:
    """Modes nu where the cochain complex has zero coboundary (direct computation)."""
    return mode_set(ctx, sigma)


def hochschild_cohomology(ctx: ThetaMatrix, sigma=None, dualizing=None,
                          check_radius: int = 2) -> HomologyTable:
    """HH^p(A, A_sigma) from the cochain complex, cross-checked through duality.

    The cross-check uses the dualizing twist ``dualizing`` (default: the
    inner twist x_j -> prod_i q_ij x_j) and compares both answers on the box
    of the given radius.  Raises ConventionError if they disagree.
    """
    sigma = _sigma(ctx, sigma)
    n = ctx.n
    direct = cohomology_mode_set(ctx, sigma)
    U = dualizing if dualizing is not None else ScalingAutomorphism.modular(ctx)
    beta = correspondence_shift(ctx, U)
    notes = []
    if beta is None:
        notes.append("duality cross-check skipped: dualizing twist is not inner")
    else:
        dual = mode_set(ctx, compose_twists(U, sigma)).translate(tuple(-x for x in beta))
        for g in box(n, check_radius):
            if direct.contains(g) != dual.contains(g):
                raise ConventionError(f"cohomology at mode {g} differs between the cochain "
                                      "computation and the duality computation")
        notes.append(f"cross-checked against homology with twist {U!r} "
                     f"shifted by {list(beta)} on |g| <= {check_radius}")
    return HomologyTable("cohomology", ctx, sigma, [direct] * (n + 1), notes)


@dataclass
class DualityReport:
    passed: bool
    dualizing: list
    shift: tuple | None
    degrees: list
    counterexample: dict | None
    radius: int
    exact_radius: int

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "dualizing_twist": self.dualizing,
            "shift": None if self.shift is None else list(self.shift),
            "degrees": self.degrees,
            "counterexample": self.counterexample,
            "box": self.radius,
            "exact_box": self.exact_radius,
        }


def duality_check(ctx: ThetaMatrix, sigma=None, degrees=None, dualizing=None,
                  radius: int = 2, exact_radius: int = 1) -> DualityReport:
    """Compare HH^i(A, A_sigma) with HH_{n-i}(A, A_(u sigma)) mode by mode.

    ``dualizing`` defaults to the twist x_j -> prod_{i>j} q_ij x_j.  Modes
    are matched by nu -> nu + beta where beta is the correspondence shift of
    the dualizing twist; when no such beta exists, beta = 0 is used and the
    report records shift = None.  Mode sets are compared on the box of
    ``radius``; on the smaller box of ``exact_radius`` both sides are also
    recomputed from literal per-mode matrices by exact rank.
    """
    sigma = _sigma(ctx, sigma)
    n = ctx.n
    U = dualizing if dualizing is not None else ScalingAutomorphism.alpha(ctx)
    rho = compose_twists(U, sigma)
    beta = correspondence_shift(ctx, U)
    shift = beta if beta is not None else (0,) * n
    degrees = list(range(n + 1)) if degrees is None else list(degrees)
    coh = cohomology_mode_set(ctx, sigma)
    hom = mode_set(ctx, rho)

    counter = None
    per_degree = []
    for i in degrees:
        mc, mh = comb(n, i), comb(n, n - i)
        ok = mc == mh
        for g in box(n, radius):
            dc = mc if coh.contains(g) else 0
            g2 = _addv(g, shift)
            dh = mh if hom.contains(g2) else 0
            if dc != dh:
                ok = False
                if counter is None:
                    counter = {"degree": i, "cohomology_mode": list(g),
                               "homology_mode": list(g2), "cohomology_dim": dc,
                               "homology_dim": dh, "source": "mode sets"}
                break
        per_degree.append({"degree": i, "passed": ok})

    if exact_radius is not None and exact_radius >= 0:
        for g in box(n, exact_radius):
            g2 = _addv(g, shift)
            dc = per_mode_cohomology(ctx, sigma, g)
            dh = per_mode_homology(ctx, rho, g2)
            for entry in per_degree:
                i = entry["degree"]
                if dc[i] != dh[n - i]:
                    if entry["passed"]:
                        entry["passed"] = False
                    if counter is None:
                        counter = {"degree": i, "cohomology_mode": list(g),
                                   "homology_mode": list(g2), "cohomology_dim": dc[i],
                                   "homology_dim": dh[n - i], "source": "exact ranks"}
    passed = all(e["passed"] for e in per_degree)
    return DualityReport(passed, [str(a) for a in U.b], beta, per_degree, counter,
                         radius, exact_radius)
