"""Angles, the deformation matrix, and their exact scalar values.

An angle a = c + sum_t m_t * tau_t is measured in full turns: it stands for
the phase exp(2 pi i a).  The tau_t are formal irrationals, declared
linearly independent over Q together with 1, so a phase is trivial exactly
when m = 0 and c is an integer.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cached_property
from math import lcm

from .field import CoeffField, CoeffScalar


class Angle:
    """Element of the phase group, written additively."""

    __slots__ = ("c", "m")

    def __init__(self, c=0, m=()):
        self.c = Fraction(c)
        self.m = tuple(int(x) for x in m)

    @classmethod
    def zero(cls, s: int) -> Angle:
        return cls(0, (0,) * s)

    def _check(self, other):
        if len(self.m) != len(other.m):
            raise ValueError(
                f"angles from different contexts (s={len(self.m)} vs s={len(other.m)})")

    def __add__(self, other: Angle) -> Angle:
        self._check(other)
        return Angle(self.c + other.c, (a + b for a, b in zip(self.m, other.m)))

    def __sub__(self, other: Angle) -> Angle:
        self._check(other)
        return Angle(self.c - other.c, (a - b for a, b in zip(self.m, other.m)))

    def __neg__(self) -> Angle:
        return Angle(-self.c, (-a for a in self.m))

    def __mul__(self, k: int) -> Angle:
        return Angle(self.c * k, (a * k for a in self.m))

    __rmul__ = __mul__

    def is_trivial(self) -> bool:
        return self.c.denominator == 1 and not any(self.m)

    def reduced(self) -> Angle:
        """Same group element with rational part in [0, 1)."""
        return Angle(self.c - (self.c.numerator // self.c.denominator), self.m)

    def __eq__(self, other):
        if not isinstance(other, Angle):
            return NotImplemented
        return self.m == other.m and (self.c - other.c).denominator == 1

    def __hash__(self):
        return hash((self.reduced().c, self.m))

    def __repr__(self):
        return f"Angle(c={self.c}, m={list(self.m)})"

    def __str__(self):
        parts = [str(self.c)] if self.c or not any(self.m) else []
        for t, k in enumerate(self.m):
            if k:
                coef = {1: "", -1: "-"}.get(k, f"{k}*")
                parts.append(f"{coef}tau{t + 1}")
        return " + ".join(parts).replace("+ -", "- ")


def angle_add(a: Angle, b: Angle) -> Angle:
    return a + b


def is_trivial(a: Angle) -> bool:
    return a.is_trivial()


def _as_fraction_matrix(rows, n):
    mat = tuple(tuple(Fraction(x) for x in row) for row in rows)
    if len(mat) != n or any(len(row) != n for row in mat):
        raise ValueError(f"expected an {n}x{n} matrix")
    return mat


def _as_int_matrix(rows, n):
    mat = tuple(tuple(int(x) for x in row) for row in rows)
    if len(mat) != n or any(len(row) != n for row in mat):
        raise ValueError(f"expected an {n}x{n} matrix")
    for row, orig in zip(mat, rows):
        for x, y in zip(row, orig):
            if x != y:
                raise ValueError("coefficient matrices of formal irrationals must be integral")
    return mat


def _check_skew(mat, what):
    n = len(mat)
    for i in range(n):
        if mat[i][i] != 0:
            raise ValueError(f"{what}: diagonal entry ({i + 1},{i + 1}) is nonzero")
        for j in range(i + 1, n):
            if mat[i][j] != -mat[j][i]:
                raise ValueError(f"{what}: entries ({i + 1},{j + 1}) and ({j + 1},{i + 1}) "
                                 "are not negatives of each other")


class ThetaMatrix:
    """Skew-symmetric angle matrix theta with q_ij = exp(2 pi i theta_ij).

    theta = C + sum_t M_t * tau_t where C is rational with denominators
    dividing ``d`` and each M_t is an integer matrix.
    """

    def __init__(self, n: int, C=None, M=(), d: int | None = None):
        if n < 1:
            raise ValueError("n must be positive")
        self.n = n
        self.C = _as_fraction_matrix(C if C is not None else [[0] * n] * n, n)
        self.M = tuple(_as_int_matrix(m, n) for m in M)
        _check_skew(self.C, "rational part C")
        for t, m in enumerate(self.M):
            _check_skew(m, f"M_{t + 1}")
        min_d = lcm(1, *(x.denominator for row in self.C for x in row))
        if d is None:
            d = min_d
        if d < 1:
            raise ValueError("d must be positive")
        if d % min_d:
            raise ValueError(f"denominators of C do not divide d={d}")
        self.d = d
        self._lower = [(i, j) for i in range(n) for j in range(i)]

    @property
    def s(self) -> int:
        return len(self.M)

    @cached_property
    def field(self) -> CoeffField:
        return CoeffField(self.d, self.s)

    def __eq__(self, other):
        if not isinstance(other, ThetaMatrix):
            return NotImplemented
        return (self.n, self.d, self.C, self.M) == (other.n, other.d, other.C, other.M)

    def __hash__(self):
        return hash((self.n, self.d, self.C, self.M))

    def __repr__(self):
        return f"ThetaMatrix(n={self.n}, d={self.d}, s={self.s})"

    def theta(self, i: int, j: int) -> Angle:
        """theta_ij as an Angle (0-based indices)."""
        return Angle(self.C[i][j], (m[i][j] for m in self.M))

    def q(self, i: int, j: int) -> CoeffScalar:
        return self.scalar(self.theta(i, j))

    def _check_index(self, a):
        if len(a) != self.n:
            raise ValueError(f"multi-index {tuple(a)} has length {len(a)}, expected {self.n}")

    def bilinear(self, a, b, lower_only=False) -> Angle:
        self._check_index(a)
        self._check_index(b)
        pairs = self._lower if lower_only else (
            (i, j) for i in range(self.n) for j in range(self.n) if i != j)
        c = Fraction(0)
        m = [0] * self.s
        for i, j in pairs:
            w = a[i] * b[j]
            if not w:
                continue
            c += w * self.C[i][j]
            for t, mt in enumerate(self.M):
                m[t] += w * mt[i][j]
        return Angle(c, m)

    def commutation_angle(self, a, b) -> Angle:
        """B(a, b) with x^a x^b = exp(2 pi i B(a, b)) x^b x^a."""
        return self.bilinear(a, b)

    def product_phase(self, a, b) -> Angle:
        """p(a, b) = sum_{i>j} theta_ij a_i b_j, so x^a x^b = e(p(a, b)) x^(a+b)."""
        return self.bilinear(a, b, lower_only=True)

    def scalar(self, a: Angle) -> CoeffScalar:
        if len(a.m) != self.s:
            raise ValueError("angle does not belong to this context")
        k = a.c * self.d
        if k.denominator != 1:
            raise ValueError(f"angle {a} has rational part outside (1/{self.d})Z")
        return self.field.phase(int(k), a.m)

    def transform(self, U) -> ThetaMatrix:
        """The context U^T theta U (change of generators x_j -> x^(U e_j))."""
        n = self.n

        def conj(mat):
            return [[sum(U[k][i] * mat[k][l] * U[l][j] for k in range(n) for l in range(n))
                     for j in range(n)] for i in range(n)]

        return ThetaMatrix(n, conj(self.C), [conj(m) for m in self.M], d=self.d)

    @classmethod
    def commutative(cls, n: int) -> ThetaMatrix:
        return cls(n)

    @classmethod
    def from_upper(cls, n: int, c_upper=None, m_upper=(), d=None) -> ThetaMatrix:
        """Build from dicts {(i, j): value} for i < j (0-based)."""
        C = [[Fraction(0)] * n for _ in range(n)]
        for (i, j), v in (c_upper or {}).items():
            C[i][j] = Fraction(v)
            C[j][i] = -Fraction(v)
        Ms = []
        for upper in m_upper:
            m = [[0] * n for _ in range(n)]
            for (i, j), v in upper.items():
                m[i][j] = v
                m[j][i] = -v
            Ms.append(m)
        return cls(n, C, Ms, d=d)


def commutation_angle(theta: ThetaMatrix, a, b) -> Angle:
    return theta.commutation_angle(a, b)


def angle_to_scalar(a: Angle, theta: ThetaMatrix) -> CoeffScalar:
    return theta.scalar(a)
