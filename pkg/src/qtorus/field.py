"""Exact arithmetic in F = Q(zeta_d)(u_1, ..., u_s).

Elements of the cyclotomic field K = Q(zeta_d) are integer tuples
(den, c_0, ..., c_{phi-1}): coefficients of 1, z, ..., z^(phi-1) modulo the
d-th cyclotomic polynomial over a common positive denominator.  Laurent polynomials over K are dicts mapping an
exponent tuple of length s to a nonzero K element.  A CoeffScalar is a
reduced fraction of two such polynomials, stored in a canonical form so
that structural equality is field equality.

Canonical form of num/den:

* den is a genuine polynomial whose minimal exponent in every variable is 0,
* gcd(num, den) = 1 in K[u],
* the coefficient of the lexicographically largest monomial of den is 1.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm


def _int_poly_divexact(num, den):
    # integer polynomials, low -> high, den monic
    num = list(num)
    q = [0] * (len(num) - len(den) + 1)
    for i in range(len(q) - 1, -1, -1):
        c = num[i + len(den) - 1]
        q[i] = c
        if c:
            for j, b in enumerate(den):
                num[i + j] -= c * b
    if any(num[: len(den) - 1]):
        raise ArithmeticError("inexact division of integer polynomials")
    return q


@lru_cache(maxsize=None)
def cyclotomic_polynomial(d: int) -> tuple[int, ...]:
    """Coefficients (low to high) of the d-th cyclotomic polynomial.

    Computed by dividing x^d - 1 by Phi_e for every proper divisor e of d.

    >>> cyclotomic_polynomial(6)
    (1, -1, 1)
    """
    if d < 1:
        raise ValueError("d must be positive")
    poly = [-1] + [0] * (d - 1) + [1]
    for e in range(1, d):
        if d % e == 0:
            poly = _int_poly_divexact(poly, cyclotomic_polynomial(e))
    return tuple(poly)


# -- univariate polynomials over Q, used for inversion in K ------------------

def _qpoly_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _qpoly_divmod(a, b):
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    inv_lead = 1 / Fraction(b[-1])
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1] * inv_lead
        q[i] = c
        if c:
            for j, bj in enumerate(b):
                a[i + j] -= c * bj
    return _qpoly_trim(q), _qpoly_trim(a[: len(b) - 1])


def _qpoly_sub_mul(a, q, b):
    # a - q*b
    out = list(a) + [Fraction(0)] * max(0, len(q) + len(b) - 1 - len(a))
    for i, qi in enumerate(q):
        if qi:
            for j, bj in enumerate(b):
                out[i + j] -= qi * bj
    return _qpoly_trim(out)


class CyclotomicField:
    """The field Q(zeta_d), zeta_d = exp(2 pi i / d).

    An element is the tuple (den, c_0, ..., c_{phi-1}) of integers standing
    for (c_0 + c_1 z + ... ) / den, with den > 0 and the gcd of all entries
    equal to 1, so tuples compare equal exactly when the elements do.
    """

    def __init__(self, d: int):
        self.d = d
        self.modulus = cyclotomic_polynomial(d)
        self.degree = len(self.modulus) - 1
        self.zero = (1,) + (0,) * self.degree
        self.one = (1, 1) + (0,) * (self.degree - 1)
        self._powers = [self._reduce(1, [0] * k + [1]) for k in range(d)]

    def _reduce(self, den, v):
        # v integral, reduce modulo the monic cyclotomic polynomial
        phi = self.degree
        mod = self.modulus
        v = list(v)
        for j in range(len(v) - 1, phi - 1, -1):
            c = v[j]
            if c:
                base = j - phi
                for i in range(phi):
                    if mod[i]:
                        v[base + i] -= c * mod[i]
        v = v[:phi]
        v.extend([0] * (phi - len(v)))
        return self._canon(den, v)

    def _canon(self, den, v):
        if not any(v):
            return self.zero
        g = gcd(den, *v)
        if den < 0:
            g = -g
        if g != 1:
            return (den // g,) + tuple(x // g for x in v)
        return (den,) + tuple(v)

    def coefficients(self, a):
        """Rational coefficients of 1, z, ..., z^(phi-1)."""
        return tuple(Fraction(x, a[0]) for x in a[1:])

    def from_coefficients(self, coeffs):
        coeffs = [Fraction(c) for c in coeffs]
        den = lcm(1, *(c.denominator for c in coeffs))
        return self._reduce(den, [int(c * den) for c in coeffs])

    def zeta_power(self, k: int):
        return self._powers[k % self.d]

    def from_rational(self, c):
        c = Fraction(c)
        return self._canon(c.denominator, [c.numerator] + [0] * (self.degree - 1))

    def add(self, a, b):
        da, db = a[0], b[0]
        if da == db:
            return self._canon(da, [x + y for x, y in zip(a[1:], b[1:])])
        return self._canon(da * db, [x * db + y * da for x, y in zip(a[1:], b[1:])])

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def neg(self, a):
        return (a[0],) + tuple(-x for x in a[1:])

    def scale(self, a, c):
        return self.mul(a, self.from_rational(c))

    def mul(self, a, b):
        if self.degree == 1:
            return self._canon(a[0] * b[0], [a[1] * b[1]])
        prod = [0] * (2 * self.degree - 1)
        for i, x in enumerate(a[1:]):
            if x:
                for j, y in enumerate(b[1:]):
                    if y:
                        prod[i + j] += x * y
        return self._reduce(a[0] * b[0], prod)

    def is_zero(self, a) -> bool:
        return not any(a[1:])

    def is_rational(self, a) -> bool:
        return not any(a[2:])

    def inv(self, a):
        if self.is_zero(a):
            raise ZeroDivisionError("inverse of zero in cyclotomic field")
        if self.degree == 1:
            return self._canon(a[1], [a[0]])
        a_poly = _qpoly_trim(list(self.coefficients(a)))
        # extended Euclid: s*a + t*Phi = g
        r0, r1 = [Fraction(c) for c in self.modulus], a_poly
        s0, s1 = [], [Fraction(1)]
        while r1:
            q, r = _qpoly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _qpoly_sub_mul(s0, q, s1)
        if len(r0) != 1:
            raise ArithmeticError("cyclotomic modulus is not irreducible")  # pragma: no cover
        inv_g = 1 / r0[0]
        coeffs = [c * inv_g for c in s0] or [Fraction(0)]
        den = lcm(1, *(c.denominator for c in coeffs))
        return self._reduce(den, [int(c * den) for c in coeffs])

    def evaluate(self, a) -> complex:
        z = cmath.exp(2j * cmath.pi / self.d)
        return sum(x * z ** k for k, x in enumerate(a[1:]) if x) / a[0]

    def format(self, a) -> str:
        parts = []
        for k, c in enumerate(self.coefficients(a)):
            if not c:
                continue
            mono = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        if not parts:
            return "0"
        return " + ".join(parts).replace("+ -", "- ")


# -- polynomials over K in s variables --------------------------------------


def _lead(f):
    return max(f)


class CoeffField:
    """F = Q(zeta_d)(u_1, ..., u_s) with exact, canonical elements."""

    def __init__(self, d: int, s: int):
        self.d = d
        self.s = s
        self.K = CyclotomicField(d)
        self.zero_exp = (0,) * s
        self._one_poly = {self.zero_exp: self.K.one}
        self.zero = CoeffScalar._raw(self, {}, self._one_poly)
        self.one = CoeffScalar._raw(self, {self.zero_exp: self.K.one}, self._one_poly)
        self._phase_cache: dict = {}

    def __repr__(self):
        return f"CoeffField(d={self.d}, s={self.s})"

    def __eq__(self, other):
        return isinstance(other, CoeffField) and (self.d, self.s) == (other.d, other.s)

    def __hash__(self):
        return hash((self.d, self.s))

    # element constructors

    def scalar(self, value) -> CoeffScalar:
        if isinstance(value, CoeffScalar):
            if value.field != self:
                raise ValueError("scalar from a different coefficient field")
            return value
        value = Fraction(value)
        if not value:
            return self.zero
        return CoeffScalar._raw(self, {self.zero_exp: self.K.from_rational(value)}, self._one_poly)

    def phase(self, k: int, m) -> CoeffScalar:
        """zeta_d^k * prod_t u_t^m_t."""
        key = (k % self.d, tuple(m))
        hit = self._phase_cache.get(key)
        if hit is None:
            if len(key[1]) != self.s:
                raise ValueError("exponent vector has the wrong length")
            hit = CoeffScalar._raw(self, {key[1]: self.K.zeta_power(k)}, self._one_poly)
            self._phase_cache[key] = hit
        return hit

    def zeta(self) -> CoeffScalar:
        return self.phase(1, self.zero_exp)

    def u(self, t: int) -> CoeffScalar:
        m = [0] * self.s
        m[t] = 1
        return self.phase(0, m)

    # polynomial layer

    def _padd(self, f, g, sign=1):
        K = self.K
        out = dict(f)
        for m, c in g.items():
            prev = out.get(m)
            if prev is None:
                out[m] = c if sign == 1 else K.neg(c)
            else:
                v = K.add(prev, c) if sign == 1 else K.sub(prev, c)
                if K.is_zero(v):
                    del out[m]
                else:
                    out[m] = v
        return out

    def _pmul(self, f, g):
        K = self.K
        if len(f) > len(g):
            f, g = g, f
        out = {}
        for m1, c1 in f.items():
            for m2, c2 in g.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                c = K.mul(c1, c2)
                prev = out.get(m)
                out[m] = c if prev is None else K.add(prev, c)
        return {m: c for m, c in out.items() if not K.is_zero(c)}

    def _pscale(self, f, c):
        K = self.K
        return {m: K.mul(v, c) for m, v in f.items()}

    def _pshift(self, f, shift):
        return {tuple(a + b for a, b in zip(m, shift)): c for m, c in f.items()}

    def _min_exps(self, f):
        return tuple(min(m[i] for m in f) for i in range(self.s))

    def _monic(self, f):
        if not f:
            return f
        lc = f[_lead(f)]
        if lc == self.K.one:
            return f
        return self._pscale(f, self.K.inv(lc))

    # -- multivariate gcd over K, nonnegative exponents, k variables

    def _split_last(self, f, k):
        out: dict = {}
        for m, c in f.items():
            out.setdefault(m[k - 1], {})[m[: k - 1]] = c
        return out

    def _lift(self, f, e=0):
        return {m + (e,): c for m, c in f.items()}

    def _deg_last(self, f, k):
        return max(m[k - 1] for m in f)

    def _divexact(self, f, g, k):
        K = self.K
        if not f:
            return {}
        if k == 0:
            return {(): K.mul(f[()], K.inv(g[()]))}
        G = self._split_last(g, k)
        dg = max(G)
        lg = G[dg]
        rem = dict(f)
        quot: dict = {}
        while rem:
            dr = self._deg_last(rem, k)
            if dr < dg:
                raise ArithmeticError("inexact polynomial division")
            lr = {m[: k - 1]: c for m, c in rem.items() if m[k - 1] == dr}
            qc = self._divexact(lr, lg, k - 1)
            term = self._lift(qc, dr - dg)
            quot = self._padd(quot, term)
            rem = self._padd(rem, self._pmul(term, g), sign=-1)
        return quot

    def _content(self, f, k):
        g: dict = {}
        for coeff in self._split_last(f, k).values():
            g = self._gcd(g, coeff, k - 1)
            if len(g) == 1 and k - 1 >= 0 and all(e == 0 for e in next(iter(g))):
                break
        return g

    def _primpart(self, f, k):
        return self._divexact(f, self._lift(self._content(f, k)), k)

    def _prem(self, f, g, k):
        G = self._split_last(g, k)
        dg = max(G)
        lg = self._lift(G[dg])
        r = f
        while r:
            dr = self._deg_last(r, k)
            if dr < dg:
                break
            lr = {m[: k - 1] + (dr - dg,): c for m, c in r.items() if m[k - 1] == dr}
            r = self._padd(self._pmul(lg, r), self._pmul(lr, g), sign=-1)
        return r

    def _euclid1(self, f, g):
        K = self.K
        a, b = f, g
        while b:
            db = _lead(b)[0]
            inv_lb = K.inv(b[_lead(b)])
            r = dict(a)
            while r:
                dr = _lead(r)[0]
                if dr < db:
                    break
                c = K.mul(r[(dr,)], inv_lb)
                r = self._padd(r, self._pmul({(dr - db,): c}, b), sign=-1)
            a, b = b, r
        return self._monic(a)

    def _gcd(self, f, g, k):
        if not f:
            return self._monic(g)
        if not g:
            return self._monic(f)
        if k == 0:
            return {(): self.K.one}
        if k == 1:
            return self._euclid1(f, g)
        cf, cg = self._content(f, k), self._content(g, k)
        c = self._gcd(cf, cg, k - 1)
        pf = self._divexact(f, self._lift(cf), k)
        pg = self._divexact(g, self._lift(cg), k)
        if self._deg_last(pf, k) < self._deg_last(pg, k):
            pf, pg = pg, pf
        while True:
            if self._deg_last(pg, k) == 0:
                return self._monic(self._lift(c))
            r = self._prem(pf, pg, k)
            if not r:
                break
            pf, pg = pg, self._primpart(r, k)
        return self._monic(self._pmul(self._lift(c), self._primpart(pg, k)))

    def poly_gcd(self, f, g):
        """Monic gcd of two polynomials with nonnegative exponents."""
        return self._gcd(f, g, self.s)

    # canonical fraction

    def _normalize(self, num, den):
        K = self.K
        if not num:
            return self.zero
        if not den:
            raise ZeroDivisionError("zero denominator")
        if len(den) == 1:
            (m, c), = den.items()
            if c != K.one:
                num = self._pscale(num, K.inv(c))
            if any(m):
                num = self._pshift(num, tuple(-e for e in m))
            return CoeffScalar._raw(self, num, self._one_poly)
        num_shift = self._min_exps(num)
        den_shift = self._min_exps(den)
        n0 = self._pshift(num, tuple(-e for e in num_shift))
        d0 = self._pshift(den, tuple(-e for e in den_shift))
        g = self.poly_gcd(n0, d0)
        if len(g) > 1:
            n0 = self._divexact(n0, g, self.s)
            d0 = self._divexact(d0, g, self.s)
        # num/den = (n0 u^a) / (d0 u^b)
        offset = tuple(a - b for a, b in zip(num_shift, den_shift))
        if len(d0) == 1:
            return self._normalize(self._pshift(n0, offset), d0)
        lc = d0[_lead(d0)]
        if lc != K.one:
            inv = K.inv(lc)
            n0 = self._pscale(n0, inv)
            d0 = self._pscale(d0, inv)
        return CoeffScalar._raw(self, self._pshift(n0, offset), d0)


class CoeffScalar:
    """An element of Q(zeta_d)(u_1..u_s); immutable."""

    __slots__ = ("field", "num", "den", "_hash")

    @classmethod
    def _raw(cls, field, num, den):
        self = object.__new__(cls)
        self.field = field
        self.num = num
        self.den = den
        self._hash = None
        return self

    def _coerce(self, other):
        if isinstance(other, CoeffScalar):
            if other.field is not self.field and other.field != self.field:
                raise ValueError("scalars from different coefficient fields")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.scalar(other)
        return NotImplemented

    def _den_is_one(self):
        return self.den is self.field._one_poly or (
            len(self.den) == 1 and self.field.zero_exp in self.den
            and self.den[self.field.zero_exp] == self.field.K.one)

    def is_zero(self) -> bool:
        return not self.num

    def __bool__(self):
        return bool(self.num)

    def is_one(self) -> bool:
        return self == self.field.one

    def is_monomial(self) -> bool:
        """True for c * zeta^k * u^m, i.e. a unit of the Laurent ring."""
        return self._den_is_one() and len(self.num) == 1

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        F = self.field
        if not self.num:
            return other
        if not other.num:
            return self
        if self._den_is_one() and other._den_is_one():
            num = F._padd(self.num, other.num)
            return CoeffScalar._raw(F, num, F._one_poly) if num else F.zero
        num = F._padd(F._pmul(self.num, other.den), F._pmul(other.num, self.den))
        return F._normalize(num, F._pmul(self.den, other.den))

    __radd__ = __add__

    def __neg__(self):
        F = self.field
        return CoeffScalar._raw(F, {m: F.K.neg(c) for m, c in self.num.items()}, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        F = self.field
        if not self.num or not other.num:
            return F.zero
        num = F._pmul(self.num, other.num)
        if self._den_is_one() and other._den_is_one():
            return CoeffScalar._raw(F, num, F._one_poly) if num else F.zero
        return F._normalize(num, F._pmul(self.den, other.den))

    __rmul__ = __mul__

    def inverse(self) -> CoeffScalar:
        if not self.num:
            raise ZeroDivisionError("inverse of zero in coefficient field")
        return self.field._normalize(self.den, self.num)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result, base = self.field.one, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field.scalar(other)
        if not isinstance(other, CoeffScalar):
            return NotImplemented
        return self.field == other.field and self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((frozenset(self.num.items()), frozenset(self.den.items())))
        return self._hash

    def evaluate(self, tau_hat=()) -> complex:
        """Numeric value under zeta -> exp(2 pi i/d), u_t -> exp(2 pi i tau_hat[t])."""
        F = self.field
        if len(tau_hat) != F.s:
            raise ValueError(f"need {F.s} numeric values for the formal irrationals")
        us = [cmath.exp(2j * cmath.pi * t) for t in tau_hat]

        def ev(poly):
            total = 0j
            for m, c in poly.items():
                term = F.K.evaluate(c)
                for u, e in zip(us, m):
                    term *= u ** e
                total += term
            return total

        return ev(self.num) / ev(self.den)

    def _format_poly(self, poly):
        F = self.field
        parts = []
        for m in sorted(poly, reverse=True):
            kexpr = F.K.format(poly[m])
            umono = "*".join(
                f"u{t + 1}" if e == 1 else f"u{t + 1}^{e}" for t, e in enumerate(m) if e)
            compound = " " in kexpr
            if not umono:
                parts.append(f"({kexpr})" if compound and len(poly) > 1 else kexpr)
            elif kexpr == "1":
                parts.append(umono)
            elif kexpr == "-1":
                parts.append("-" + umono)
            else:
                parts.append(f"({kexpr})*{umono}" if compound else f"{kexpr}*{umono}")
        return " + ".join(parts).replace("+ -", "- ") if parts else "0"

    def __str__(self):
        num = self._format_poly(self.num)
        if self._den_is_one():
            return num
        den = self._format_poly(self.den)
        if " " in num:
            num = f"({num})"
        return f"{num}/({den})"

    def __repr__(self):
        return f"CoeffScalar({self})"
