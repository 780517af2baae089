"""Exact scalars: rationals, the rational-function field Q(k) and Q(k)[i].

``Rational`` is ``gmpy2.mpq``.  Polynomials in the parameter are stored as
dense tuples of rationals (index = power of k).  Everything here is
immutable, so values can be shared freely between threads.
"""
from __future__ import annotations

from functools import reduce
from math import lcm as _int_lcm

import gmpy2
from gmpy2 import mpq, mpz

Rational = type(mpq(0))

_ZERO = mpq(0)
_ONE = mpq(1)


class PoleError(ZeroDivisionError):
    """A denominator vanished: division by zero or specialization at a pole."""


def to_rational(x) -> Rational:
    """Coerce int / Fraction / mpq / 'a/b' string to an exact rational.

    Floats are rejected on purpose; decimal strings too.
    """
    if isinstance(x, Rational):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a rational")
    if isinstance(x, int) or type(x) is type(mpz(0)):
        return mpq(x)
    if isinstance(x, str):
        return parse_rational(x)
    if hasattr(x, "numerator") and hasattr(x, "denominator") and not isinstance(x, float):
        return mpq(int(x.numerator), int(x.denominator))
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


def parse_rational(s: str) -> Rational:
    s = s.strip()
    if not s:
        raise ValueError("empty rational string")
    if "." in s or "e" in s.lower():
        raise ValueError(f"decimal input is not accepted: {s!r}")
    if "/" in s:
        a, b = s.split("/")
        den = int(b)
        if den == 0:
            raise PoleError(f"zero denominator in {s!r}")
        return mpq(int(a), den)
    return mpq(int(s))


def format_rational(q: Rational) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


# ---------------------------------------------------------------------------
# Q[k]
# ---------------------------------------------------------------------------


def _trim(coeffs) -> tuple:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class KappaPoly:
    """Dense univariate polynomial in k over Q; ``coeffs[i]`` multiplies k**i."""

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs=(), *, _trusted: bool = False):
        if _trusted:
            self.coeffs = coeffs
        else:
            self.coeffs = _trim(to_rational(c) for c in coeffs)
        self._hash = None

    @classmethod
    def constant(cls, c) -> "KappaPoly":
        c = to_rational(c)
        return cls((c,) if c else (), _trusted=True)

    @classmethod
    def linear(cls, c0, c1) -> "KappaPoly":
        """c0 + c1*k"""
        return cls((c0, c1))

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return len(self.coeffs) == 1 and self.coeffs[0] == 1

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> Rational:
        return self.coeffs[-1] if self.coeffs else _ZERO

    def __eq__(self, other):
        if isinstance(other, KappaPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.coeffs)
        return self._hash

    def __repr__(self):
        return f"KappaPoly({format_kappa_poly(self)!r})"

    def __neg__(self):
        return KappaPoly(tuple(-c for c in self.coeffs), _trusted=True)

    def __add__(self, other: "KappaPoly") -> "KappaPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        if not b:
            return KappaPoly(a, _trusted=True)
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        if len(a) == len(b):
            return KappaPoly(_trim(out), _trusted=True)
        return KappaPoly(tuple(out), _trusted=True)

    def __sub__(self, other: "KappaPoly") -> "KappaPoly":
        return self + (-other)

    def __mul__(self, other: "KappaPoly") -> "KappaPoly":
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO_POLY
        if len(b) == 1:
            c = b[0]
            return KappaPoly(tuple(x * c for x in a), _trusted=True)
        if len(a) == 1:
            c = a[0]
            return KappaPoly(tuple(x * c for x in b), _trusted=True)
        out = [_ZERO] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return KappaPoly(tuple(out), _trusted=True)

    def scale(self, c) -> "KappaPoly":
        c = to_rational(c)
        if not c:
            return ZERO_POLY
        return KappaPoly(tuple(x * c for x in self.coeffs), _trusted=True)

    def shift(self, k: int = 1) -> "KappaPoly":
        """Multiply by k**shift."""
        if not self.coeffs:
            return self
        return KappaPoly((_ZERO,) * k + self.coeffs, _trusted=True)

    def __call__(self, value):
        value = to_rational(value)
        acc = _ZERO
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def compose_linear(self, a, b) -> "KappaPoly":
        """p(a + b*k) for rationals a, b (used for g-polynomial evaluation)."""
        lin = KappaPoly.linear(a, b)
        acc = ZERO_POLY
        for c in reversed(self.coeffs):
            acc = acc * lin + KappaPoly.constant(c)
        return acc

    def compose(self, q: "KappaPoly") -> "KappaPoly":
        acc = ZERO_POLY
        for c in reversed(self.coeffs):
            acc = acc * q + KappaPoly.constant(c)
        return acc

    def divmod(self, other: "KappaPoly") -> tuple["KappaPoly", "KappaPoly"]:
        if other.is_zero():
            raise PoleError("polynomial division by zero")
        r = list(self.coeffs)
        d = other.coeffs
        dl = len(d) - 1
        inv = 1 / d[-1]
        if len(r) - 1 < dl:
            return ZERO_POLY, self
        q = [_ZERO] * (len(r) - dl)
        for i in range(len(r) - 1, dl - 1, -1):
            c = r[i] * inv
            if c:
                q[i - dl] = c
                for j in range(dl + 1):
                    r[i - dl + j] -= c * d[j]
        return KappaPoly(_trim(q), _trusted=True), KappaPoly(_trim(r[:dl]), _trusted=True)

    def exact_div(self, other: "KappaPoly") -> "KappaPoly":
        q, r = self.divmod(other)
        assert r.is_zero(), "inexact polynomial division"
        return q

    def monic(self) -> "KappaPoly":
        if not self.coeffs or self.coeffs[-1] == 1:
            return self
        return self.scale(1 / self.coeffs[-1])

    def content_and_primitive(self) -> tuple[Rational, tuple]:
        """Split into rational content times a primitive integer vector."""
        if not self.coeffs:
            return _ZERO, ()
        den = reduce(_int_lcm, (int(c.denominator) for c in self.coeffs), 1)
        ints = [mpz(c * den) for c in self.coeffs]
        g = reduce(gmpy2.gcd, ints, mpz(0))
        prim = tuple(x // g for x in ints)
        return mpq(g, den), prim

    def to_int_coeffs(self) -> tuple:
        return self.content_and_primitive()[1]


ZERO_POLY = KappaPoly((), _trusted=True)
ONE_POLY = KappaPoly((_ONE,), _trusted=True)
K_POLY = KappaPoly((_ZERO, _ONE), _trusted=True)


def _int_prem(a: list, b: list) -> list:
    """Pseudo-remainder of integer coefficient lists (low degree first)."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(r) - 1 >= db and r:
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [x * lb for x in r]
        for j in range(db + 1):
            r[shift + j] -= lr * b[j]
        while r and r[-1] == 0:
            r.pop()
    return r


def _primitive_int(v: list) -> list:
    g = reduce(gmpy2.gcd, v, mpz(0))
    if g == 0:
        return []
    if v[-1] < 0:
        g = -g
    return [x // g for x in v]


def poly_gcd(a: KappaPoly, b: KappaPoly) -> KappaPoly:
    """Monic gcd over Q[k] via the primitive polynomial remainder sequence."""
    if a.is_zero():
        return b.monic()
    if b.is_zero():
        return a.monic()
    if a.degree == 0 or b.degree == 0:
        return ONE_POLY
    u = _primitive_int(list(a.to_int_coeffs()))
    v = _primitive_int(list(b.to_int_coeffs()))
    if len(u) < len(v):
        u, v = v, u
    while v:
        r = _int_prem(u, v)
        u, v = v, (_primitive_int(r) if r else [])
    if len(u) == 1:
        return ONE_POLY
    lead = u[-1]
    return KappaPoly(tuple(mpq(x, lead) for x in u), _trusted=True)


# ---------------------------------------------------------------------------
# Q(k)
# ---------------------------------------------------------------------------


class KappaScalar:
    """Element num/den of Q(k), kept reduced with a monic denominator."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=None, *, _normalized: bool = False):
        if not isinstance(num, KappaPoly):
            num = KappaPoly.constant(num)
        if den is None:
            den = ONE_POLY
        elif not isinstance(den, KappaPoly):
            den = KappaPoly.constant(den)
        self._hash = None
        if _normalized or (den is ONE_POLY):
            self.num, self.den = num, den
            return
        if den.is_zero():
            raise PoleError("KappaScalar with zero denominator")
        if num.is_zero():
            self.num, self.den = ZERO_POLY, ONE_POLY
            return
        if den.degree > 0:
            g = poly_gcd(num, den)
            if not g.is_one():
                num = num.exact_div(g)
                den = den.exact_div(g)
        lead = den.lead
        if lead != 1:
            inv = 1 / lead
            num = num.scale(inv)
            den = den.scale(inv)
        self.num, self.den = num, (ONE_POLY if den.is_one() else den)

    # construction helpers -------------------------------------------------
    @classmethod
    def coerce(cls, x) -> "KappaScalar":
        if isinstance(x, KappaScalar):
            return x
        if isinstance(x, KappaPoly):
            return cls(x)
        return cls(KappaPoly.constant(x))

    @classmethod
    def kappa(cls) -> "KappaScalar":
        return cls(K_POLY)

    @classmethod
    def linear(cls, c0, c1) -> "KappaScalar":
        """c0 + c1*k"""
        return cls(KappaPoly.linear(c0, c1))

    # predicates -----------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.num.coeffs

    def __bool__(self):
        return bool(self.num.coeffs)

    def is_polynomial(self) -> bool:
        return self.den is ONE_POLY or self.den.is_one()

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def constant_value(self) -> Rational:
        if not self.is_constant():
            raise ValueError("scalar depends on k")
        return self.num.coeffs[0] if self.num.coeffs else _ZERO

    # equality / hashing ---------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, KappaScalar):
            try:
                other = KappaScalar.coerce(other)
            except TypeError:
                return NotImplemented
        # canonical form makes this structural, cross-multiplication agrees
        return self.num == other.num and self.den == other.den

    def cross_equal(self, other: "KappaScalar") -> bool:
        """Equality by cross-multiplication, independent of normal form."""
        return (self.num * other.den - other.num * self.den).is_zero()

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num.coeffs, self.den.coeffs))
        return self._hash

    def __repr__(self):
        return f"KappaScalar({format_kappa_scalar(self)!r})"

    def __str__(self):
        return format_kappa_scalar(self)

    # arithmetic -----------------------------------------------------------
    def __neg__(self):
        return KappaScalar(-self.num, self.den, _normalized=True)

    def __add__(self, other):
        if not isinstance(other, KappaScalar):
            if isinstance(other, GaussianKappa):
                return NotImplemented
            other = KappaScalar.coerce(other)
        if not other.num.coeffs:
            return self
        if not self.num.coeffs:
            return other
        if self.den is ONE_POLY and other.den is ONE_POLY:
            return KappaScalar(self.num + other.num, ONE_POLY, _normalized=True)
        if self.den == other.den:
            return KappaScalar(self.num + other.num, self.den)
        return KappaScalar(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, KappaScalar):
            if isinstance(other, GaussianKappa):
                return NotImplemented
            other = KappaScalar.coerce(other)
        return self + (-other)

    def __rsub__(self, other):
        return KappaScalar.coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, KappaScalar):
            if isinstance(other, GaussianKappa):
                return NotImplemented
            other = KappaScalar.coerce(other)
        if not self.num.coeffs or not other.num.coeffs:
            return ZERO
        if self.den is ONE_POLY and other.den is ONE_POLY:
            return KappaScalar(self.num * other.num, ONE_POLY, _normalized=True)
        if other.is_constant():
            c = other.constant_value()
            return KappaScalar(self.num.scale(c), self.den, _normalized=True)
        if self.is_constant():
            c = self.constant_value()
            return KappaScalar(other.num.scale(c), other.den, _normalized=True)
        return KappaScalar(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "KappaScalar":
        if self.is_zero():
            raise PoleError("division by zero in Q(k)")
        return KappaScalar(self.den, self.num)

    def __truediv__(self, other):
        if not isinstance(other, KappaScalar):
            if isinstance(other, GaussianKappa):
                return NotImplemented
            other = KappaScalar.coerce(other)
        if other.is_zero():
            raise PoleError("division by zero in Q(k)")
        if other.is_constant():
            return KappaScalar(self.num.scale(1 / other.constant_value()), self.den, _normalized=True)
        return KappaScalar(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return KappaScalar.coerce(other) / self

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        acc = ONE
        base = self
        while n:
            if n & 1:
                acc = acc * base
            base = base * base
            n >>= 1
        return acc

    def scale_int(self, c) -> "KappaScalar":
        if not c:
            return ZERO
        return KappaScalar(self.num.scale(c), self.den, _normalized=True)

    def mul_kappa(self) -> "KappaScalar":
        """Multiply by k."""
        if self.den is ONE_POLY:
            return KappaScalar(self.num.shift(1), ONE_POLY, _normalized=True)
        return KappaScalar(self.num.shift(1), self.den)

    def specialize(self, value) -> Rational:
        return specialize_kappa(self, value)


ZERO = KappaScalar(ZERO_POLY, ONE_POLY, _normalized=True)
ONE = KappaScalar(ONE_POLY, ONE_POLY, _normalized=True)
KAPPA = KappaScalar(K_POLY, ONE_POLY, _normalized=True)


def kappa_scalar_arith(a: KappaScalar, b: KappaScalar, op: str) -> KappaScalar:
    """Field operation selected by symbol; ``/`` by zero raises PoleError."""
    a, b = KappaScalar.coerce(a), KappaScalar.coerce(b)
    if op == "+":
        return a + b
    if op == "-":
        return a - b
    if op in ("*", "x"):
        return a * b
    if op == "/":
        return a / b
    raise ValueError(f"unknown operator {op!r}")


def pochhammer(a, n: int):
    """Rising factorial (a)_n = a (a+1) ... (a+n-1); (a)_0 = 1.

    Works for KappaScalar, GaussianKappa-free rationals and ints alike; the
    result has the type of ``a`` (ints are promoted to rationals).
    """
    if n < 0:
        raise ValueError("pochhammer index must be nonnegative")
    if isinstance(a, KappaScalar):
        if a.is_polynomial():
            acc = ONE_POLY
            for k in range(n):
                acc = acc * (a.num + KappaPoly.constant(k))
            return KappaScalar(acc, ONE_POLY, _normalized=True)
        acc = ONE
        for k in range(n):
            acc = acc * (a + k)
        return acc
    a = to_rational(a)
    acc = _ONE
    for k in range(n):
        acc *= a + k
    return acc


def specialize_kappa(s: KappaScalar, value) -> Rational:
    """Evaluate at a rational value of k; a vanishing denominator is a PoleError."""
    s = KappaScalar.coerce(s)
    value = to_rational(value)
    d = s.den(value)
    if d == 0:
        raise PoleError(f"pole at k = {format_rational(value)} (denominator {format_kappa_poly(s.den)})")
    return s.num(value) / d


# ---------------------------------------------------------------------------
# Q(k)[i]
# ---------------------------------------------------------------------------


class GaussianKappa:
    """re + i*im with re, im in Q(k) and i**2 = -1."""

    __slots__ = ("re", "im")

    def __init__(self, re=ZERO, im=ZERO):
        self.re = KappaScalar.coerce(re)
        self.im = KappaScalar.coerce(im)

    @classmethod
    def coerce(cls, x) -> "GaussianKappa":
        if isinstance(x, GaussianKappa):
            return x
        return cls(KappaScalar.coerce(x), ZERO)

    @classmethod
    def i(cls) -> "GaussianKappa":
        return cls(ZERO, ONE)

    def is_zero(self) -> bool:
        return self.re.is_zero() and self.im.is_zero()

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        try:
            other = GaussianKappa.coerce(other)
        except TypeError:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        if self.im.is_zero():
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self):
        return f"GaussianKappa({format_gaussian(self)!r})"

    def __str__(self):
        return format_gaussian(self)

    def __neg__(self):
        return GaussianKappa(-self.re, -self.im)

    def __add__(self, other):
        other = GaussianKappa.coerce(other)
        return GaussianKappa(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = GaussianKappa.coerce(other)
        return GaussianKappa(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return GaussianKappa.coerce(other) - self

    def __mul__(self, other):
        other = GaussianKappa.coerce(other)
        a, b, c, d = self.re, self.im, other.re, other.im
        if b.is_zero():
            return GaussianKappa(a * c, a * d)
        if d.is_zero():
            return GaussianKappa(a * c, b * c)
        return GaussianKappa(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def conjugate(self) -> "GaussianKappa":
        return GaussianKappa(self.re, -self.im)

    def norm(self) -> KappaScalar:
        return self.re * self.re + self.im * self.im

    def inverse(self) -> "GaussianKappa":
        n = self.norm()
        if n.is_zero():
            raise PoleError("division by zero in Q(k)[i]")
        return GaussianKappa(self.re / n, -self.im / n)

    def __truediv__(self, other):
        return self * GaussianKappa.coerce(other).inverse()

    def __rtruediv__(self, other):
        return GaussianKappa.coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        acc = GaussianKappa(ONE)
        for _ in range(n):
            acc = acc * self
        return acc


# ---------------------------------------------------------------------------
# string forms
# ---------------------------------------------------------------------------

VAR = "k"


def format_kappa_poly(p: KappaPoly) -> str:
    if p.is_zero():
        return "0"
    parts = []
    for i, c in enumerate(p.coeffs):
        if not c:
            continue
        r = format_rational(c)
        if i == 0:
            parts.append(r)
        elif i == 1:
            parts.append(f"{r}*{VAR}")
        else:
            parts.append(f"{r}*{VAR}^{i}")
    return " + ".join(parts)


def parse_kappa_poly(s: str) -> KappaPoly:
    s = s.strip()
    if s == "0":
        return ZERO_POLY
    coeffs: dict[int, Rational] = {}
    for part in s.split(" + "):
        part = part.strip()
        if "*" in part:
            c, v = part.split("*")
            v = v.strip()
            if v == VAR:
                e = 1
            elif v.startswith(VAR + "^"):
                e = int(v[len(VAR) + 1:])
            else:
                raise ValueError(f"bad term {part!r}")
        else:
            c, e = part, 0
        if e in coeffs:
            raise ValueError(f"repeated power {e} in {s!r}")
        coeffs[e] = parse_rational(c)
    out = [_ZERO] * (max(coeffs) + 1)
    for e, c in coeffs.items():
        out[e] = c
    return KappaPoly(out)


def format_kappa_scalar(s: KappaScalar) -> str:
    if s.is_polynomial():
        return format_kappa_poly(s.num)
    return f"{format_kappa_poly(s.num)} | {format_kappa_poly(s.den)}"


def parse_kappa_scalar(s: str) -> KappaScalar:
    if "|" in s:
        a, b = s.split("|")
        return KappaScalar(parse_kappa_poly(a), parse_kappa_poly(b))
    return KappaScalar(parse_kappa_poly(s))


def format_gaussian(g: GaussianKappa) -> str:
    if g.im.is_zero():
        return format_kappa_scalar(g.re)
    return f"{format_kappa_scalar(g.re)} ; {format_kappa_scalar(g.im)}"


def parse_gaussian(s: str) -> GaussianKappa:
    if ";" in s:
        a, b = s.split(";")
        return GaussianKappa(parse_kappa_scalar(a), parse_kappa_scalar(b))
    return GaussianKappa(parse_kappa_scalar(s))


def format_scalar(x) -> str:
    if isinstance(x, GaussianKappa):
        return format_gaussian(x)
    return format_kappa_scalar(KappaScalar.coerce(x))


def parse_scalar(s: str):
    if ";" in s:
        return parse_gaussian(s)
    return parse_kappa_scalar(s)
