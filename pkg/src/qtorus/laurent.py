"""The algebraic quantum torus as q-twisted Laurent polynomials.

Monomials are normally ordered, x^g = x_1^g_1 ... x_n^g_n, and multiply by

    x^a * x^b = exp(2 pi i p(a, b)) x^(a+b),   p(a, b) = sum_{i>j} theta_ij a_i b_j.
"""

from __future__ import annotations

from .field import CoeffScalar
from .phase import Angle, ThetaMatrix


def monomial_product_phase(ctx: ThetaMatrix, a, b) -> Angle:
    return ctx.product_phase(a, b)


class QLaurent:
    """Finitely supported sum of normally ordered monomials with exact coefficients."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: ThetaMatrix, terms=None):
        self.ctx = ctx
        F = ctx.field
        clean = {}
        for a, c in (terms or {}).items():
            a = tuple(a)
            ctx._check_index(a)
            c = F.scalar(c)
            if c:
                clean[a] = c
        self.terms = dict(sorted(clean.items()))

    @classmethod
    def _wrap(cls, ctx, terms):
        self = object.__new__(cls)
        self.ctx = ctx
        self.terms = dict(sorted(terms.items()))
        return self

    @classmethod
    def zero(cls, ctx) -> QLaurent:
        return cls._wrap(ctx, {})

    @classmethod
    def one(cls, ctx) -> QLaurent:
        return cls.monomial(ctx, (0,) * ctx.n)

    @classmethod
    def monomial(cls, ctx, a, coeff=1) -> QLaurent:
        return cls(ctx, {tuple(a): coeff})

    @classmethod
    def generator(cls, ctx, i: int, power: int = 1) -> QLaurent:
        """x_{i+1}^power (0-based i)."""
        a = [0] * ctx.n
        a[i] = power
        return cls.monomial(ctx, a)

    def _same(self, other):
        if not isinstance(other, QLaurent):
            return False
        if other.ctx != self.ctx:
            raise ValueError("elements from different quantum tori")
        return True

    def __add__(self, other):
        if not self._same(other):
            return NotImplemented
        out = dict(self.terms)
        for a, c in other.terms.items():
            v = out.get(a)
            v = c if v is None else v + c
            if v:
                out[a] = v
            else:
                out.pop(a, None)
        return QLaurent._wrap(self.ctx, out)

    def __neg__(self):
        return QLaurent._wrap(self.ctx, {a: -c for a, c in self.terms.items()})

    def __sub__(self, other):
        if not self._same(other):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> QLaurent:
        c = self.ctx.field.scalar(c)
        if not c:
            return QLaurent.zero(self.ctx)
        return QLaurent._wrap(self.ctx, {a: c * v for a, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, QLaurent):
            return multiply(self.ctx, self, other)
        if isinstance(other, (int, CoeffScalar)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, CoeffScalar)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, QLaurent):
            return NotImplemented
        return self.ctx == other.ctx and self.terms == other.terms

    def __hash__(self):
        return hash(tuple(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def coefficient(self, a) -> CoeffScalar:
        return self.terms.get(tuple(a), self.ctx.field.zero)

    def support(self):
        return list(self.terms)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for a, c in self.terms.items():
            mono = " ".join(f"x{i + 1}^{e}" for i, e in enumerate(a) if e)
            if not mono:
                parts.append(f"({c})")
            elif c.is_one():
                parts.append(mono)
            else:
                parts.append(f"({c}) * {mono}")
        return " + ".join(parts)

    def __repr__(self):
        return f"QLaurent({self})"


def multiply(ctx: ThetaMatrix, a: QLaurent, b: QLaurent) -> QLaurent:
    out: dict = {}
    for ea, ca in a.terms.items():
        for eb, cb in b.terms.items():
            key = tuple(x + y for x, y in zip(ea, eb))
            c = ca * cb * ctx.scalar(ctx.product_phase(ea, eb))
            prev = out.get(key)
            out[key] = c if prev is None else prev + c
    return QLaurent._wrap(ctx, {k: v for k, v in out.items() if v})


def add(a: QLaurent, b: QLaurent) -> QLaurent:
    return a + b


def scalar_mul(c, a: QLaurent) -> QLaurent:
    return a.scale(c)


def equals(a: QLaurent, b: QLaurent) -> bool:
    return a == b


class ScalingAutomorphism:
    """sigma(x_j) = exp(2 pi i b_j) x_j."""

    __slots__ = ("ctx", "b")

    def __init__(self, ctx: ThetaMatrix, b):
        self.ctx = ctx
        self.b = tuple(b)
        if len(self.b) != ctx.n:
            raise ValueError(f"need {ctx.n} angles, got {len(self.b)}")
        for angle in self.b:
            if len(angle.m) != ctx.s:
                raise ValueError("twist angle has the wrong number of irrational coefficients")
            if (angle.c * ctx.d).denominator != 1:
                raise ValueError(f"twist angle {angle} is not in (1/{ctx.d})Z + irrationals; "
                                 "enlarge d in the context")

    @classmethod
    def identity(cls, ctx) -> ScalingAutomorphism:
        return cls(ctx, [Angle.zero(ctx.s)] * ctx.n)

    @classmethod
    def alpha(cls, ctx) -> ScalingAutomorphism:
        """alpha(x_j) = prod_{i>j} q_ij x_j."""
        n = ctx.n
        b = []
        for j in range(n):
            acc = Angle.zero(ctx.s)
            for i in range(j + 1, n):
                acc = acc + ctx.theta(i, j)
            b.append(acc)
        return cls(ctx, b)

    @classmethod
    def modular(cls, ctx) -> ScalingAutomorphism:
        """x_j -> prod_i q_ij x_j; conjugation by x_1 x_2 ... x_n, hence inner."""
        return cls.inner(ctx, (1,) * ctx.n)

    @classmethod
    def inner(cls, ctx, beta) -> ScalingAutomorphism:
        """Conjugation a -> x^beta a x^-beta."""
        n = ctx.n
        return cls(ctx, [ctx.commutation_angle(beta, tuple(int(i == j) for i in range(n)))
                         for j in range(n)])

    def inverse(self) -> ScalingAutomorphism:
        return ScalingAutomorphism(self.ctx, [-x for x in self.b])

    def angle_on(self, g) -> Angle:
        acc = Angle.zero(self.ctx.s)
        for bj, gj in zip(self.b, g):
            if gj:
                acc = acc + bj * gj
        return acc

    def transform(self, U, new_ctx: ThetaMatrix) -> ScalingAutomorphism:
        """The same automorphism on generators y_j = x^(U e_j) of ``new_ctx = ctx.transform(U)``."""
        n = self.ctx.n
        return ScalingAutomorphism(new_ctx, [self.angle_on([U[i][j] for i in range(n)])
                                             for j in range(n)])

    def is_identity(self) -> bool:
        return all(x.is_trivial() for x in self.b)

    def __call__(self, a: QLaurent) -> QLaurent:
        return apply_automorphism(self, a)

    def __eq__(self, other):
        if not isinstance(other, ScalingAutomorphism):
            return NotImplemented
        return self.ctx == other.ctx and self.b == other.b

    def __hash__(self):
        return hash(self.b)

    def __repr__(self):
        return "ScalingAutomorphism([" + ", ".join(str(x) for x in self.b) + "])"


def apply_automorphism(sigma: ScalingAutomorphism, a: QLaurent) -> QLaurent:
    ctx = a.ctx
    return QLaurent._wrap(ctx, {g: c * ctx.scalar(sigma.angle_on(g)) for g, c in a.terms.items()})


def compose_twists(sigma: ScalingAutomorphism, tau: ScalingAutomorphism) -> ScalingAutomorphism:
    """rho with A_sigma (x)_A A_tau = A_rho.

    a (x) b -> a sigma(b) identifies the tensor product with A_(sigma o tau);
    for scalings the angles simply add.
    """
    if sigma.ctx != tau.ctx:
        raise ValueError("twists from different contexts")
    return ScalingAutomorphism(sigma.ctx, [x + y for x, y in zip(sigma.b, tau.b)])
