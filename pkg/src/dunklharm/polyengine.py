"""Sparse multivariate polynomials over Q(k) (or Q(k)[i]).

A polynomial is a dict ``exponent tuple -> scalar`` plus a representation
tag: ``"X"`` for ordinary polynomials in x_1..x_N and ``"P"`` for the
symbolic p-variables.  The tag is plain data; arithmetic refuses to mix
tags.  Variable indices in the public API are 1-based, as in the math.
"""
from __future__ import annotations

import json
from functools import reduce
from typing import Iterable, Mapping

from .scalars import (
    ONE,
    ONE_POLY,
    ZERO,
    GaussianKappa,
    KappaPoly,
    KappaScalar,
    format_scalar,
    parse_scalar,
    poly_gcd,
)

REPS = ("X", "P")


class RepMismatch(ValueError):
    pass


def grlex_key(exp: tuple) -> tuple:
    return (sum(exp), exp)


def _coerce(c):
    if isinstance(c, (KappaScalar, GaussianKappa)):
        return c
    return KappaScalar.coerce(c)


class MultiPoly:
    __slots__ = ("terms", "rep", "nvars")

    def __init__(self, terms: Mapping | None = None, nvars: int = 1, rep: str = "X", *, _clean: bool = False):
        if rep not in REPS:
            raise ValueError(f"rep must be one of {REPS}, got {rep!r}")
        self.rep = rep
        self.nvars = nvars
        if _clean:
            self.terms = terms
            return
        clean = {}
        for e, c in (terms or {}).items():
            e = tuple(int(x) for x in e)
            if len(e) != nvars or any(x < 0 for x in e):
                raise ValueError(f"bad exponent {e} for nvars={nvars}")
            c = _coerce(c)
            if c:
                clean[e] = clean[e] + c if e in clean else c
                if not clean[e]:
                    del clean[e]
        self.terms = clean

    # constructors ---------------------------------------------------------
    @classmethod
    def zero(cls, nvars: int, rep: str = "X") -> "MultiPoly":
        return cls({}, nvars, rep, _clean=True)

    @classmethod
    def constant(cls, c, nvars: int, rep: str = "X") -> "MultiPoly":
        c = _coerce(c)
        if not c:
            return cls.zero(nvars, rep)
        return cls({(0,) * nvars: c}, nvars, rep, _clean=True)

    @classmethod
    def var(cls, i: int, nvars: int, rep: str = "X") -> "MultiPoly":
        return cls.monomial(tuple(1 if k == i - 1 else 0 for k in range(nvars)), nvars=nvars, rep=rep)

    @classmethod
    def monomial(cls, exp: Iterable[int], coeff=ONE, nvars: int | None = None, rep: str = "X") -> "MultiPoly":
        exp = tuple(exp)
        return cls({exp: coeff}, nvars if nvars is not None else len(exp), rep)

    # basic properties -----------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def coeff(self, exp) -> KappaScalar:
        return self.terms.get(tuple(exp), ZERO)

    def constant_term(self):
        return self.terms.get((0,) * self.nvars, ZERO)

    def sorted_terms(self) -> list:
        return sorted(self.terms.items(), key=lambda t: grlex_key(t[0]))

    def homogeneous_part(self, d: int) -> "MultiPoly":
        return self._new({e: c for e, c in self.terms.items() if sum(e) == d})

    def _new(self, terms: dict) -> "MultiPoly":
        return MultiPoly(terms, self.nvars, self.rep, _clean=True)

    def _check(self, other: "MultiPoly"):
        if other.rep != self.rep:
            raise RepMismatch(f"cannot combine rep {self.rep} with rep {other.rep}")
        if other.nvars != self.nvars:
            raise RepMismatch(f"nvars mismatch: {self.nvars} vs {other.nvars}")

    # equality -------------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.rep == other.rep and self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, KappaScalar)):
            return self == MultiPoly.constant(other, self.nvars, self.rep)
        return NotImplemented

    def __hash__(self):
        return hash((self.rep, self.nvars, frozenset(self.terms.items())))

    def __repr__(self):
        return f"MultiPoly({self.rep}, nvars={self.nvars}, {to_string(self)})"

    # ring operations ------------------------------------------------------
    def __neg__(self):
        return self._new({e: -c for e, c in self.terms.items()})

    def __add__(self, other):
        if not isinstance(other, MultiPoly):
            other = MultiPoly.constant(other, self.nvars, self.rep)
        self._check(other)
        if len(self.terms) < len(other.terms):
            small, big = self.terms, other.terms
        else:
            small, big = other.terms, self.terms
        out = dict(big)
        for e, c in small.items():
            if e in out:
                s = out[e] + c
                if s:
                    out[e] = s
                else:
                    del out[e]
            else:
                out[e] = c
        return self._new(out)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, MultiPoly):
            other = MultiPoly.constant(other, self.nvars, self.rep)
        return self + (-other)

    def __rsub__(self, other):
        return MultiPoly.constant(other, self.nvars, self.rep) - self

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            return self.scale(other)
        self._check(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = c1 * c2
                if e in out:
                    out[e] = out[e] + c
                else:
                    out[e] = c
        return self._new({e: c for e, c in out.items() if c})

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, n: int):
        acc = MultiPoly.constant(ONE, self.nvars, self.rep)
        for _ in range(n):
            acc = acc * self
        return acc

    def scale(self, c) -> "MultiPoly":
        c = _coerce(c)
        if not c:
            return MultiPoly.zero(self.nvars, self.rep)
        out = {}
        for e, v in self.terms.items():
            p = v * c
            if p:
                out[e] = p
        return self._new(out)

    def __truediv__(self, c):
        return self.scale(1 / _coerce(c))

    def map_coeffs(self, fn) -> "MultiPoly":
        out = {}
        for e, c in self.terms.items():
            v = fn(c)
            if v:
                out[e] = v
        return self._new(out)

    def with_rep(self, rep: str) -> "MultiPoly":
        """Reinterpret the same exponent data under another tag (no conversion)."""
        return MultiPoly(self.terms, self.nvars, rep, _clean=True)

    # denominators ---------------------------------------------------------
    def clear_denominators(self) -> tuple["MultiPoly", KappaPoly]:
        """Return (g, d) with self = g / d and every coefficient of g in Q[k]."""
        dens = [c.den for c in self.terms.values() if isinstance(c, KappaScalar) and not c.is_polynomial()]
        if not dens:
            return self, ONE_POLY
        d = reduce(lambda a, b: (a * b).exact_div(poly_gcd(a, b)), dens)
        out = {}
        for e, c in self.terms.items():
            out[e] = KappaScalar(c.num * d.exact_div(c.den), ONE_POLY, _normalized=True)
        return self._new(out), d

    def divide_by(self, d: KappaPoly) -> "MultiPoly":
        if d.is_one():
            return self
        s = KappaScalar(ONE_POLY, d)
        return self.scale(s)


# ---------------------------------------------------------------------------
# operations on variables
# ---------------------------------------------------------------------------


def poly_arith(f: MultiPoly, g: MultiPoly, op: str) -> MultiPoly:
    if op == "+":
        return f + g
    if op == "-":
        return f - g
    if op in ("*", "x"):
        return f * g
    raise ValueError(f"unknown operator {op!r}")


def _check_index(f: MultiPoly, *idx: int):
    for i in idx:
        if not 1 <= i <= f.nvars:
            raise IndexError(f"variable index {i} out of range 1..{f.nvars}")


def _swap(e: tuple, a: int, b: int) -> tuple:
    lst = list(e)
    lst[a], lst[b] = lst[b], lst[a]
    return tuple(lst)


def transpose_vars(f: MultiPoly, i: int, j: int) -> MultiPoly:
    """f evaluated at x(i,j): entries i and j interchanged."""
    _check_index(f, i, j)
    if i == j:
        raise ValueError("transposition needs two distinct indices")
    a, b = i - 1, j - 1
    return f._new({_swap(e, a, b): c for e, c in f.terms.items()})


def monomial_divided_difference(e: tuple, a: int, b: int) -> list[tuple[tuple, int]]:
    """(x^e - x^{e(a,b)})/(x_a - x_b) for 0-based a != b, as (exponent, ±1) pairs."""
    p, q = e[a], e[b]
    if p == q:
        return []
    sign = 1
    if p < q:
        p, q = q, p
        sign = -1
    # x_a^q x_b^q * (x_a^(p-q) - x_b^(p-q)) / (x_a - x_b), up to sign
    out = []
    base = list(e)
    for k in range(p - q):
        base[a] = q + k
        base[b] = p - 1 - k
        out.append((tuple(base), sign))
    return out


def divided_difference(f: MultiPoly, i: int, j: int) -> MultiPoly:
    """Exact quotient (f - f(x(i,j))) / (x_i - x_j)."""
    if f.rep != "X":
        raise RepMismatch("divided_difference is defined on the X representation")
    _check_index(f, i, j)
    if i == j:
        raise ValueError("need distinct indices")
    a, b = i - 1, j - 1
    out: dict = {}
    for e, c in f.terms.items():
        for m, s in monomial_divided_difference(e, a, b):
            v = c if s > 0 else -c
            out[m] = out[m] + v if m in out else v
    return f._new({m: c for m, c in out.items() if c})


def divide_by_difference(f: MultiPoly, i: int, j: int) -> MultiPoly:
    """Exact quotient f / (x_i - x_j) by synthetic division in x_i.

    The caller guarantees f vanishes on x_i = x_j; a nonzero remainder means
    an arithmetic bug and trips an assertion.
    """
    _check_index(f, i, j)
    a, b = i - 1, j - 1
    # group by power of x_a: f = sum_k c_k x_a^k, c_k free of x_a
    by_power: dict[int, dict] = {}
    for e, c in f.terms.items():
        k = e[a]
        rest = e[:a] + (0,) + e[a + 1:]
        by_power.setdefault(k, {})[rest] = c
    if not by_power:
        return f
    top = max(by_power)
    q: dict[int, dict] = {}
    carry: dict = {}
    # q_{k-1} = c_k + x_b q_k, from the top down
    for k in range(top, 0, -1):
        cur = dict(by_power.get(k, {}))
        for e, c in carry.items():
            cur[e] = cur[e] + c if e in cur else c
        cur = {e: c for e, c in cur.items() if c}
        q[k - 1] = cur
        carry = {e[:b] + (e[b] + 1,) + e[b + 1:]: c for e, c in cur.items()}
    rem = dict(by_power.get(0, {}))
    for e, c in carry.items():
        rem[e] = rem[e] + c if e in rem else c
    assert not any(rem.values()), "non-exact division by (x_i - x_j)"
    out = {}
    for k, part in q.items():
        for e, c in part.items():
            out[e[:a] + (k,) + e[a + 1:]] = c
    return f._new(out)


def partial_derivative(f: MultiPoly, i: int) -> MultiPoly:
    _check_index(f, i)
    a = i - 1
    out = {}
    for e, c in f.terms.items():
        k = e[a]
        if k:
            out[e[:a] + (k - 1,) + e[a + 1:]] = c.scale_int(k) if isinstance(c, KappaScalar) else c * k
    return f._new(out)


def substitute_zero(f: MultiPoly, i: int) -> MultiPoly:
    """f with variable i set to 0."""
    a = i - 1
    return f._new({e: c for e, c in f.terms.items() if e[a] == 0})


def substitute_var(f: MultiPoly, i: int, j: int) -> MultiPoly:
    """f with variable i replaced by variable j."""
    a, b = i - 1, j - 1
    out: dict = {}
    for e, c in f.terms.items():
        lst = list(e)
        lst[b] += lst[a]
        lst[a] = 0
        m = tuple(lst)
        out[m] = out[m] + c if m in out else c
    return f._new({m: c for m, c in out.items() if c})


def divide_by_var(f: MultiPoly, i: int) -> MultiPoly:
    """Exact quotient f / x_i (every term must contain x_i)."""
    a = i - 1
    out = {}
    for e, c in f.terms.items():
        assert e[a] > 0, "non-exact division by a variable"
        out[e[:a] + (e[a] - 1,) + e[a + 1:]] = c
    return f._new(out)


def evaluate(f: MultiPoly, point) -> GaussianKappa:
    """Exact value at a point with coordinates in Q(k)[i]."""
    if f.rep != "X":
        raise RepMismatch("evaluate expects the X representation")
    if len(point) != f.nvars:
        raise ValueError(f"point has length {len(point)}, expected {f.nvars}")
    point = [GaussianKappa.coerce(p) for p in point]
    powers: list[dict[int, GaussianKappa]] = [{0: GaussianKappa(ONE)} for _ in point]

    def pw(a: int, k: int) -> GaussianKappa:
        cache = powers[a]
        if k not in cache:
            cache[k] = pw(a, k - 1) * point[a]
        return cache[k]

    acc = GaussianKappa(ZERO)
    for e, c in f.terms.items():
        term = GaussianKappa.coerce(c)
        for a, k in enumerate(e):
            if k:
                if point[a].is_zero():
                    term = GaussianKappa(ZERO)
                    break
                term = term * pw(a, k)
        acc = acc + term
    return acc


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------


def to_string(f: MultiPoly) -> str:
    if f.is_zero():
        return "0"
    name = "x" if f.rep == "X" else "p"
    parts = []
    for e, c in sorted(f.terms.items(), key=lambda t: grlex_key(t[0]), reverse=True):
        mono = "*".join(f"{name}{k + 1}" + (f"^{x}" if x > 1 else "") for k, x in enumerate(e) if x)
        parts.append(f"({format_scalar(c)})" + (f"*{mono}" if mono else ""))
    return " + ".join(parts)


def to_json_obj(f: MultiPoly) -> dict:
    return {
        "rep": f.rep,
        "nvars": f.nvars,
        "terms": [{"exp": list(e), "coeff": format_scalar(c)} for e, c in f.sorted_terms()],
    }


def from_json_obj(obj: dict) -> MultiPoly:
    terms = {}
    for t in obj["terms"]:
        e = tuple(t["exp"])
        if e in terms:
            raise ValueError(f"duplicate exponent {e}")
        terms[e] = parse_scalar(t["coeff"])
    return MultiPoly(terms, int(obj["nvars"]), obj["rep"])


def to_json(f: MultiPoly) -> str:
    return json.dumps(to_json_obj(f), separators=(",", ":"))


def from_json(s: str) -> MultiPoly:
    return from_json_obj(json.loads(s))
