"""Floating-point layer for the holomorphic and smooth completions.

Only finitely supported elements are handled.  Phases are evaluated as
exp(2 pi i theta) with user-supplied real stand-ins for the formal
irrationals, so every phase has modulus one.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .laurent import QLaurent
from .phase import ThetaMatrix

WEIGHTS = ("plain", "shifted")


class NumericContext:
    """A deformation matrix together with real values for its formal irrationals."""

    def __init__(self, ctx: ThetaMatrix, tau_hat=()):
        tau_hat = tuple(float(t) for t in tau_hat)
        if len(tau_hat) != ctx.s:
            raise ValueError(f"numeric layer needs {ctx.s} values for the formal irrationals, "
                             f"got {len(tau_hat)}")
        self.ctx = ctx
        self.tau_hat = tau_hat
        n = ctx.n
        self._lower = []
        for i in range(n):
            for j in range(i):
                a = ctx.theta(i, j)
                val = float(a.c) + sum(m * t for m, t in zip(a.m, tau_hat))
                if val:
                    self._lower.append((i, j, val))

    @property
    def n(self) -> int:
        return self.ctx.n

    def phase(self, a, b) -> complex:
        """exp(2 pi i p(a, b)) for the normal-ordering product phase."""
        ang = sum(v * a[i] * b[j] for i, j, v in self._lower)
        return cmath.exp(2j * cmath.pi * ang)


class NumericElement:
    """Finitely supported sum of c_alpha x^alpha with complex coefficients."""

    __slots__ = ("nctx", "terms")

    def __init__(self, nctx: NumericContext, terms=None):
        self.nctx = nctx
        self.terms = {}
        for a, c in (terms or {}).items():
            a = tuple(int(x) for x in a)
            if len(a) != nctx.n:
                raise ValueError(f"multi-index {a} has the wrong length")
            c = complex(c)
            if c:
                self.terms[a] = self.terms.get(a, 0j) + c

    @classmethod
    def from_exact(cls, nctx: NumericContext, a: QLaurent) -> NumericElement:
        """Image under zeta_d -> exp(2 pi i/d), u_t -> exp(2 pi i tau_hat_t)."""
        return cls(nctx, {g: c.evaluate(nctx.tau_hat) for g, c in a.terms.items()})

    def items(self):
        return sorted(self.terms.items())

    def __sub__(self, other):
        out = dict(self.terms)
        for a, c in other.terms.items():
            out[a] = out.get(a, 0j) - c
        return NumericElement(self.nctx, out)

    def __add__(self, other):
        out = dict(self.terms)
        for a, c in other.terms.items():
            out[a] = out.get(a, 0j) + c
        return NumericElement(self.nctx, out)

    def scale(self, c) -> NumericElement:
        return NumericElement(self.nctx, {a: c * v for a, v in self.terms.items()})

    def __repr__(self):
        return f"NumericElement({dict(self.items())})"


def _l1(alpha) -> int:
    return sum(abs(x) for x in alpha)


def seminorm_rho(a: NumericElement, rho: float) -> float:
    """sum |c_alpha| rho^|alpha| with |alpha| = sum |alpha_i|."""
    if not rho > 0:
        raise ValueError("rho must be positive")
    total = 0.0
    for alpha, c in a.items():
        total += abs(c) * rho ** _l1(alpha)
    return total


def seminorm_k(a: NumericElement, k: int, weight: str = "plain") -> float:
    """sum |c_alpha| w(alpha) with w = |alpha|^k (0^0 = 1) or, shifted, (1 + |alpha|)^k."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if weight not in WEIGHTS:
        raise ValueError(f"unknown weight {weight!r}")
    total = 0.0
    for alpha, c in a.items():
        size = _l1(alpha)
        w = (1 + size) ** k if weight == "shifted" else (1 if k == 0 else size ** k)
        total += abs(c) * w
    return total


def numeric_multiply(nctx: NumericContext, a: NumericElement, b: NumericElement) -> NumericElement:
    out: dict = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            key = tuple(x + y for x, y in zip(ea, eb))
            out[key] = out.get(key, 0j) + ca * cb * nctx.phase(ea, eb)
    return NumericElement(nctx, out)


def relative_error(x: NumericElement, y: NumericElement) -> float:
    """l1 distance relative to the larger l1 norm."""
    diff = seminorm_k(x - y, 0)
    scale = max(seminorm_k(x, 0), seminorm_k(y, 0))
    return diff / scale if scale else diff


@dataclass
class ContinuityReport:
    passed: bool
    rho: float
    sigma: float
    lhs: float
    rhs: float
    margin: float
    k: int | None = None
    lhs_k: float | None = None
    rhs_k: float | None = None
    margin_k: float | None = None
    tolerance: float = 1e-12

    def to_dict(self) -> dict:
        out = {"passed": self.passed, "rho": self.rho, "sigma": self.sigma,
               "product_seminorm": self.lhs, "factor_bound": self.rhs, "margin": self.margin,
               "tolerance": self.tolerance}
        if self.k is not None:
            out.update({"k": self.k, "smooth_product_seminorm": self.lhs_k,
                        "smooth_factor_bound": self.rhs_k, "smooth_margin": self.margin_k,
                        "smooth_bound_weight": "(1+|alpha|)^k"})
        return out


def continuity_check(nctx: NumericContext, a: NumericElement, b: NumericElement,
                     rho: float, k: int | None = None, tol: float = 1e-12) -> ContinuityReport:
    """||ab||_rho <= ||a||_s ||b||_s with s = max(rho, 1); optionally
    ||ab||_k <= ||a||'_k ||b||'_k with the shifted weight on the right."""
    if not rho > 0:
        raise ValueError("rho must be positive")
    sigma = max(rho, 1.0)
    ab = numeric_multiply(nctx, a, b)
    lhs = seminorm_rho(ab, rho)
    rhs = seminorm_rho(a, sigma) * seminorm_rho(b, sigma)
    ok = lhs <= rhs * (1 + tol) + tol * (rhs == 0)
    rep = ContinuityReport(ok, rho, sigma, lhs, rhs, rhs - lhs, tolerance=tol)
    if k is not None:
        lk = seminorm_k(ab, k)
        rk = seminorm_k(a, k, "shifted") * seminorm_k(b, k, "shifted")
        rep.k, rep.lhs_k, rep.rhs_k, rep.margin_k = k, lk, rk, rk - lk
        rep.passed = rep.passed and lk <= rk * (1 + tol)
    return rep


@dataclass
class GuardResult:
    accepted: bool
    message: str
    offending: list

    def to_dict(self) -> dict:
        return {"accepted": self.accepted, "message": self.message,
                "offending": [list(p) for p in self.offending]}


GUARD_MESSAGE = (
    "rejected: |q_ij| != 1 for {pairs}. Arens-Michael envelope remark: when some "
    "|q_ij| != 1 the envelope of the algebraic quantum torus is zero, so no nonzero "
    "holomorphic or smooth completion exists; refusing to build one")


def unimodularity_guard(n: int, radial=None, tol: float = 0.0) -> GuardResult:
    """Accept only radial parts r_ij = |q_ij| equal to 1.

    ``radial`` is an n x n array (or dict {(i, j): r} with 0-based i < j) of
    positive reals; missing entries mean 1.
    """
    if radial is None:
        return GuardResult(True, "accepted: all |q_ij| = 1", [])
    if isinstance(radial, dict):
        entries = {tuple(k): float(v) for k, v in radial.items()}
    else:
        entries = {(i, j): float(radial[i][j]) for i in range(n) for j in range(n) if i != j}
    bad = []
    for (i, j), r in sorted(entries.items()):
        if not (r > 0 and math.isfinite(r)):
            raise ValueError(f"radial part r_{i + 1}{j + 1} = {r} must be a positive real")
        if abs(r - 1.0) > tol and (min(i, j), max(i, j)) not in bad:
            bad.append((min(i, j), max(i, j)))
    if not bad:
        return GuardResult(True, "accepted: all |q_ij| = 1", [])
    pairs = ", ".join(f"(i, j) = ({i + 1}, {j + 1})" for i, j in bad)
    return GuardResult(False, GUARD_MESSAGE.format(pairs=pairs), bad)
