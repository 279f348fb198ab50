"""Dense univariate polynomials with exact coefficients.

A polynomial is an immutable tuple of coefficients, index = degree, with no
trailing zeros; the zero polynomial is the empty tuple.  ``IntPoly`` holds
Python ints, ``RatPoly`` holds ``Fraction``.  The two never mix implicitly:
use ``IntPoly.to_rational`` / ``RatPoly.to_integer``.
"""
from __future__ import annotations

import functools
import os
from fractions import Fraction
from itertools import repeat
from numbers import Integral
from operator import add as _add, mul as _mul, sub as _sub

from .numtheory import DomainError

KARATSUBA_THRESHOLD = int(os.environ.get("INVCYCLO_KARATSUBA_THRESHOLD", "32"))


class InexactDivisionError(ArithmeticError):
    """A division that must be exact left a nonzero remainder."""


@functools.total_ordering
class _MinusInfinity:
    """Degree of the zero polynomial.  Compares below every int; no arithmetic."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return other is not self

    def __hash__(self):
        return hash("-inf-degree")

    def __repr__(self):
        return "MINUS_INFINITY"


MINUS_INFINITY = _MinusInfinity()


def _strip(cs: list) -> tuple:
    end = len(cs)
    while end and not cs[end - 1]:
        end -= 1
    return tuple(cs[:end])


class _Poly:
    __slots__ = ("_c",)

    def __init__(self, coeffs=()):
        object.__setattr__(self, "_c", _strip([self._coerce(c) for c in coeffs]))

    @classmethod
    def _raw(cls, cs):
        # trusted constructor: cs already coerced, possibly with trailing zeros
        obj = object.__new__(cls)
        object.__setattr__(obj, "_c", _strip(cs) if cs and not cs[-1] else tuple(cs))
        return obj

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    @property
    def coeffs(self) -> tuple:
        return self._c

    @property
    def degree(self):
        return len(self._c) - 1 if self._c else MINUS_INFINITY

    @property
    def lead(self):
        if not self._c:
            raise DomainError("the zero polynomial has no leading coefficient")
        return self._c[-1]

    def is_zero(self) -> bool:
        return not self._c

    def __len__(self):
        return len(self._c)

    def __getitem__(self, k):
        """Coefficient of X**k; zero beyond the degree."""
        return self._c[k] if 0 <= k < len(self._c) else self._zero

    def __iter__(self):
        return iter(self._c)

    def __eq__(self, other):
        if type(other) is type(self):
            return self._c == other._c
        return NotImplemented

    def __hash__(self):
        return hash((type(self).__name__, self._c))

    def __repr__(self):
        return f"{type(self).__name__}({list(self._c)!r})"

    def __str__(self):
        return render(self)

    def __call__(self, x):
        acc = self._zero
        for c in reversed(self._c):
            acc = acc * x + c
        return acc

    def _same(self, other):
        if type(other) is not type(self):
            raise TypeError(f"cannot combine {type(self).__name__} with {type(other).__name__}")

    def __add__(self, other):
        return add(self, other)

    def __sub__(self, other):
        return sub(self, other)

    def __neg__(self):
        return neg(self)

    def __mul__(self, other):
        if isinstance(other, _Poly):
            return mul(self, other)
        c = self._coerce(other)
        return self._raw([x * c for x in self._c]) if c else type(self)()

    __rmul__ = __mul__


class IntPoly(_Poly):
    __slots__ = ()
    _zero = 0

    @staticmethod
    def _coerce(c):
        if isinstance(c, Integral):
            return int(c)
        if isinstance(c, Fraction) and c.denominator == 1:
            return c.numerator
        raise TypeError(f"IntPoly coefficients must be integers, got {c!r}")

    def to_rational(self) -> RatPoly:
        return RatPoly._raw([Fraction(c) for c in self._c])


class RatPoly(_Poly):
    __slots__ = ()
    _zero = Fraction(0)

    @staticmethod
    def _coerce(c):
        if isinstance(c, (Integral, Fraction)):
            return Fraction(c)
        raise TypeError(f"RatPoly coefficients must be int or Fraction, got {c!r}")

    def to_integer(self) -> IntPoly:
        if any(c.denominator != 1 for c in self._c):
            raise DomainError("polynomial has non-integral coefficients")
        return IntPoly._raw([c.numerator for c in self._c])

    def monic(self) -> RatPoly:
        return self * (1 / self.lead)


def monomial(k: int, coeff=1, kind=IntPoly):
    return kind([0] * k + [coeff])


def binomial(m: int, sign: int = -1, kind=IntPoly):
    """X**m + sign."""
    if m < 1 or sign not in (1, -1):
        raise DomainError(f"binomial needs m >= 1 and sign = +-1, got m={m}, sign={sign}")
    return kind([sign] + [0] * (m - 1) + [1])


# -- ring operations ---------------------------------------------------------

def add(f, g):
    f._same(g)
    a, b = f._c, g._c
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    out[: len(b)] = map(_add, a, b)
    return f._raw(out)


def sub(f, g):
    f._same(g)
    a, b = f._c, g._c
    if len(a) >= len(b):
        out = list(a)
        out[: len(b)] = map(_sub, a, b)
    else:
        out = [-x for x in b]
        out[: len(a)] = map(_sub, a, b)
    return f._raw(out)


def neg(f):
    return f._raw([-c for c in f._c])


def _school(a, b) -> list:
    if len(a) < len(b):
        a, b = b, a
    la = len(a)
    out = [0] * (la + len(b) - 1)
    for j, c in enumerate(b):
        if not c:
            continue
        seg = out[j : j + la]
        if c == 1:
            out[j : j + la] = map(_add, seg, a)
        elif c == -1:
            out[j : j + la] = map(_sub, seg, a)
        else:
            out[j : j + la] = map(_add, seg, map(_mul, a, repeat(c)))
    return out


def _accumulate(out, part, at):
    out[at : at + len(part)] = map(_add, out[at : at + len(part)], part)


def _ladd(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    out[: len(b)] = map(_add, a, b)
    return out


def _kara(a, b, threshold) -> list:
    if len(a) < len(b):
        a, b = b, a
    la, lb = len(a), len(b)
    if lb <= threshold:
        return _school(a, b)
    out = [0] * (la + lb - 1)
    if 2 * lb <= la:
        # unbalanced: cut the long operand into pieces of the short one's length
        for at in range(0, la, lb):
            _accumulate(out, _kara(a[at : at + lb], b, threshold), at)
        return out
    m = la // 2
    a0, a1, b0, b1 = a[:m], a[m:], b[:m], b[m:]
    z0 = _kara(a0, b0, threshold)
    z2 = _kara(a1, b1, threshold)
    z1 = _kara(_ladd(a0, a1), _ladd(b0, b1), threshold)
    z1[: len(z0)] = map(_sub, z1[: len(z0)], z0)
    z1[: len(z2)] = map(_sub, z1[: len(z2)], z2)
    _accumulate(out, z0, 0)
    _accumulate(out, z2, 2 * m)
    # z1 may carry trailing zeros past the true product length
    _accumulate(out, z1[: len(out) - m], m)
    return out


def mul_schoolbook(f, g):
    f._same(g)
    if not f._c or not g._c:
        return type(f)()
    return f._raw(_school(f._c, g._c))


def mul_karatsuba(f, g, threshold: int = 1):
    """Karatsuba product, recursing down to operands of ``threshold`` coefficients."""
    f._same(g)
    if not f._c or not g._c:
        return type(f)()
    return f._raw(_kara(f._c, g._c, max(1, threshold)))


def mul(f, g, threshold: int | None = None):
    f._same(g)
    if not f._c or not g._c:
        return type(f)()
    t = KARATSUBA_THRESHOLD if threshold is None else threshold
    if min(len(f._c), len(g._c)) <= t:
        return f._raw(_school(f._c, g._c))
    return f._raw(_kara(f._c, g._c, t))


# -- division ----------------------------------------------------------------

def _long_division(f, g, exact: bool):
    f._same(g)
    if not g._c:
        raise DomainError("division by the zero polynomial")
    integral = isinstance(f, IntPoly)
    lg = g._c[-1]
    dg = len(g._c) - 1
    r = list(f._c)
    nq = len(r) - dg
    if nq <= 0:
        return type(f)(), f
    q = [f._zero] * nq
    gc = g._c
    sparse = [(j, c) for j, c in enumerate(gc[:-1]) if c]
    use_sparse = 4 * len(sparse) < dg
    for i in range(nq - 1, -1, -1):
        c = r[i + dg]
        if not c:
            continue
        if integral:
            qc, rem = divmod(c, lg)
            if rem:
                if exact:
                    raise InexactDivisionError(f"{render(g)} does not divide {render(f)}")
                raise DomainError("integer division needs a unit leading coefficient; promote to RatPoly")
        else:
            qc = c / lg
        q[i] = qc
        r[i + dg] = 0
        if use_sparse:
            for j, gj in sparse:
                r[i + j] -= qc * gj
        elif qc == 1:
            r[i : i + dg] = map(_sub, r[i : i + dg], gc)
        elif qc == -1:
            r[i : i + dg] = map(_add, r[i : i + dg], gc)
        else:
            r[i : i + dg] = map(_sub, r[i : i + dg], map(_mul, gc, repeat(qc)))
    return f._raw(q), f._raw(r[:dg])


def div_exact(f, g):
    """Quotient f / g; raises ``InexactDivisionError`` unless g divides f."""
    q, r = _long_division(f, g, exact=True)
    if r._c:
        raise InexactDivisionError(f"{render(g)} does not divide {render(f)}")
    return q


def div_rem(f, g):
    """(q, r) with f = q*g + r and deg r < deg g.

    Integer polynomials are only divided by divisors with leading coefficient +-1.
    """
    if isinstance(f, IntPoly) and g._c and g._c[-1] not in (1, -1):
        raise DomainError("integer division needs a unit leading coefficient; promote to RatPoly")
    return _long_division(f, g, exact=False)


def mul_binomial(f, m: int, sign: int):
    """f * (X**m + sign) in linear time."""
    binomial(m, sign)  # validates m, sign
    a = f._c
    if not a:
        return f
    out = [f._zero] * m + list(a)
    op = _add if sign == 1 else _sub
    out[: len(a)] = map(op, out[: len(a)], a)
    return f._raw(out)


def div_binomial(f, m: int, sign: int):
    """f / (X**m + sign), which must be exact."""
    binomial(m, sign)
    a = f._c
    if not a:
        return f
    nq = len(a) - m
    if nq <= 0:
        raise InexactDivisionError(f"X^{m}{sign:+d} does not divide {render(f)}")
    # f[k] = q[k-m] + sign*q[k]  =>  q[k-m] = f[k] - sign*q[k], solved top down
    # in blocks of m so each block only reads the one above it
    q = [f._zero] * (nq + m)
    op = _sub if sign == 1 else _add
    hi = nq
    while hi > 0:
        lo = max(0, hi - m)
        q[lo:hi] = map(op, a[lo + m : hi + m], q[lo + m : hi + m])
        hi = lo
    del q[nq:]
    low = a[:m]
    for k in range(m):
        fk = low[k] if k < len(low) else 0
        qk = q[k] if k < nq else 0
        if fk != sign * qk:
            raise InexactDivisionError(f"X^{m}{sign:+d} does not divide {render(f)}")
    return f._raw(q)


# -- the coefficient pairing and shifts --------------------------------------

def inner_product(f, g):
    """Sum of a_k * b_k; the shorter operand is implicitly zero-padded."""
    f._same(g)
    return sum(map(_mul, f._c, g._c), f._zero)


def shift(f, l: int):
    """X**l * f."""
    if l < 0:
        raise DomainError(f"shift must be nonnegative, got {l}")
    if not f._c or l == 0:
        return f
    return f._raw([f._zero] * l + list(f._c))


def cyclic_reduce(f, n: int):
    """Representative of f modulo X**n - 1 with degree < n."""
    if n < 1:
        raise DomainError(f"cyclic order must be positive, got {n}")
    a = f._c
    if len(a) <= n:
        return f
    out = list(a[:n])
    for at in range(n, len(a), n):
        chunk = a[at : at + n]
        out[: len(chunk)] = map(_add, out[: len(chunk)], chunk)
    return f._raw(out)


def extended_gcd(a: RatPoly, b: RatPoly):
    """(g, s, t) with s*a + t*b = g and g the monic gcd."""
    a._same(b)
    if not isinstance(a, RatPoly):
        raise TypeError("extended_gcd works over the rationals; promote with to_rational()")
    if a.is_zero() and b.is_zero():
        raise DomainError("gcd(0, 0) is undefined")
    one, zero = RatPoly([1]), RatPoly()
    r0, r1 = a, b
    s0, s1 = one, zero
    t0, t1 = zero, one
    while not r1.is_zero():
        q, r = div_rem(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - mul(q, s1)
        t0, t1 = t1, t0 - mul(q, t1)
    inv = 1 / r0.lead
    return r0 * inv, s0 * inv, t0 * inv


# -- rendering ---------------------------------------------------------------

def render(f, var: str = "X") -> str:
    """Descending powers with explicit signs, e.g. ``X^4 - X^2 + 1``."""
    parts = []
    for k in range(len(f._c) - 1, -1, -1):
        c = f._c[k]
        if not c:
            continue
        mag = abs(c)
        if k == 0:
            term = str(mag)
        else:
            power = var if k == 1 else f"{var}^{k}"
            term = power if mag == 1 else f"{mag}*{power}"
        if not parts:
            parts.append(("-" if c < 0 else "") + term)
        else:
            parts.append((" - " if c < 0 else " + ") + term)
    return "".join(parts) or "0"
