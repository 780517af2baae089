"""Planar polynomials: the phi/psi basis, the g-families and h_n^{+/-}.

Planar means "a polynomial in p_1, p_2 only".  Symmetric elements are
expanded in ``phi_{n,j}`` and antisymmetric ones in ``psi_{n,j}``; these are
the coefficients of t^n s^j in

    u_1 = (1 - s t (p1+p2) + t^2 p1 p2) / ((1 - 2 s t p1 + t^2 p1^2)(1 - 2 s t p2 + t^2 p2^2))
    u_2 = t (p1 - p2) / (same denominator).

``PlanarPoly`` keeps the basis expansion (cheap to manipulate) and builds the
P-representation on demand.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import factorial

from .dunkl import DunklContext, psi_inverse
from .polyengine import MultiPoly, transpose_vars
from .scalars import (
    ONE,
    ONE_POLY,
    ZERO,
    KappaPoly,
    KappaScalar,
    mpq,
    pochhammer,
)

PHI = "phi"
PSI = "psi"
SYMMETRY = {PHI: "+", PSI: "-"}


# ---------------------------------------------------------------------------
# g-polynomials
# ---------------------------------------------------------------------------

_G_SHIFT = {"o": (1, lambda n: n * (2 * n - 1)), "e": (2, lambda n: n * (2 * n + 1))}


@lru_cache(maxsize=None)
def g_poly(kind: str, n: int) -> KappaPoly:
    """Monic g_n^o / g_n^e in an abstract variable v (stored as a KappaPoly).

    g_{n+1}(v) = (v + 3n + c) g_n(v) - n(2n -/+ 1) g_{n-1}(v), c = 1 (odd) or 2 (even).
    """
    if kind not in _G_SHIFT:
        raise ValueError("kind must be 'o' or 'e'")
    if n < 0:
        raise ValueError("index must be nonnegative")
    if n == 0:
        return ONE_POLY
    c, b = _G_SHIFT[kind]
    m = n - 1
    prev = g_poly(kind, m - 1) if m >= 1 else KappaPoly(())
    return KappaPoly.linear(3 * m + c, 1) * g_poly(kind, m) - prev.scale(b(m))


def format_g(p: KappaPoly) -> str:
    terms = []
    for i in range(p.degree, -1, -1):
        c = p.coeffs[i]
        if not c:
            continue
        mono = "" if i == 0 else ("v" if i == 1 else f"v^{i}")
        if c == 1 and mono:
            terms.append(mono)
        else:
            terms.append(f"{c}{mono}")
    return "+".join(terms).replace("+-", "-")


def g_value(ctx: DunklContext, kind: str, j: int, shift: int) -> KappaScalar:
    """g_j(N k - k + shift) as an element of Q(k)."""
    v = ctx.scalar(shift, ctx.N - 1)
    return KappaScalar(g_poly(kind, j).compose(v.num))


# ---------------------------------------------------------------------------
# basis elements
# ---------------------------------------------------------------------------


def in_range(kind: str, n: int, j: int) -> bool:
    if j < 0 or n < 0:
        return False
    if kind == PHI:
        return j <= n and (n - j) % 2 == 0
    return n >= 1 and j <= n - 1 and (n - 1 - j) % 2 == 0


def _pmono(a: int, b: int, N: int) -> tuple:
    return (a, b) + (0,) * (N - 2)


@lru_cache(maxsize=None)
def _phi_terms(n: int, j: int) -> tuple:
    """phi_{n,j} as ((a, b), coeff) pairs meaning coeff * p1^a p2^b."""
    if not in_range(PHI, n, j):
        return ()
    jj = (n - j) // 2  # phi_{n, n-2jj}
    out: dict = {}
    scale = mpq(2) ** (n - 1 - 2 * jj)
    for i in range(jj + 1):
        c = scale * pochhammer(n + 1 - 2 * jj, 2 * i) / (factorial(i) * pochhammer(1 - n + 2 * jj - 2 * i, i))
        for ab in ((n - jj + i, jj - i), (jj - i, n - jj + i)):
            out[ab] = out.get(ab, 0) + c
    return tuple((ab, c) for ab, c in sorted(out.items()) if c)


@lru_cache(maxsize=None)
def _psi_terms(n: int, j: int) -> tuple:
    if not in_range(PSI, n, j):
        return ()
    jj = (n - 1 - j) // 2  # psi_{n, n-1-2jj}
    out: dict = {}
    scale = mpq(2) ** (n - 1 - 2 * jj)
    for i in range(jj + 1):
        c = scale * pochhammer(n - 2 * jj, i) / factorial(i) * (-1) ** i
        out[(n - jj + i, jj - i)] = out.get((n - jj + i, jj - i), 0) + c
        out[(jj - i, n - jj + i)] = out.get((jj - i, n - jj + i), 0) - c
    return tuple((ab, c) for ab, c in sorted(out.items()) if c)


def basis_p_rep(kind: str, n: int, j: int, N: int) -> MultiPoly:
    terms = _phi_terms(n, j) if kind == PHI else _psi_terms(n, j)
    return MultiPoly({_pmono(a, b, N): c for (a, b), c in terms}, N, "P")


@dataclass
class PlanarPoly:
    """sum_j basis[j] * (phi or psi)_{n,j}, in N variables."""

    ctx: DunklContext
    kind: str
    n: int
    basis: dict = field(default_factory=dict)
    _p_rep: MultiPoly | None = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        clean = {}
        for j, c in self.basis.items():
            c = KappaScalar.coerce(c)
            if not c:
                continue
            if not in_range(self.kind, self.n, j):
                raise ValueError(f"{self.kind}_{{{self.n},{j}}} is not a basis element")
            clean[j] = c
        self.basis = dict(sorted(clean.items()))

    @property
    def symmetry(self) -> str:
        return SYMMETRY[self.kind]

    @property
    def degree(self) -> int:
        return self.n

    def is_zero(self) -> bool:
        return not self.basis

    def coef(self, j: int) -> KappaScalar:
        return self.basis.get(j, ZERO)

    @property
    def p_rep(self) -> MultiPoly:
        if self._p_rep is None:
            acc = MultiPoly.zero(self.ctx.N, "P")
            for j, c in self.basis.items():
                acc = acc + basis_p_rep(self.kind, self.n, j, self.ctx.N).scale(c)
            self._p_rep = acc
        return self._p_rep

    def x_rep(self) -> MultiPoly:
        return psi_inverse(self.ctx, self.p_rep)

    def __eq__(self, other):
        if not isinstance(other, PlanarPoly):
            return NotImplemented
        if self.is_zero() and other.is_zero():
            return True
        return (self.kind, self.n, self.basis) == (other.kind, other.n, other.basis)

    def _like(self, basis: dict) -> "PlanarPoly":
        return PlanarPoly(self.ctx, self.kind, self.n, basis)

    def scale(self, c) -> "PlanarPoly":
        c = KappaScalar.coerce(c)
        return self._like({j: v * c for j, v in self.basis.items()})

    def __add__(self, other: "PlanarPoly") -> "PlanarPoly":
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        if (self.kind, self.n) != (other.kind, other.n):
            raise ValueError("cannot add planar polynomials of different type or degree")
        out = dict(self.basis)
        for j, c in other.basis.items():
            out[j] = out.get(j, ZERO) + c
        return self._like(out)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def specialize(self, value) -> dict:
        return {j: c.specialize(value) for j, c in self.basis.items()}


def zero_planar(ctx: DunklContext, kind: str, n: int) -> PlanarPoly:
    return PlanarPoly(ctx, kind, max(n, 0), {})


def phi(ctx: DunklContext, n: int, j: int) -> PlanarPoly:
    """phi_{n,j}; the zero element when (n, j) is out of range or parity."""
    if not in_range(PHI, n, j):
        return zero_planar(ctx, PHI, n)
    return PlanarPoly(ctx, PHI, n, {j: ONE})


def psi(ctx: DunklContext, n: int, j: int) -> PlanarPoly:
    if not in_range(PSI, n, j):
        return zero_planar(ctx, PSI, n)
    return PlanarPoly(ctx, PSI, n, {j: ONE})


# ---------------------------------------------------------------------------
# harmonic families
# ---------------------------------------------------------------------------


def harmonic_coefficients(ctx: DunklContext, n: int, sign: str) -> tuple[str, dict]:
    """Basis kind and expansion of h_n^sign."""
    if sign not in ("+", "-"):
        raise ValueError("sign must be '+' or '-'")
    if n < 0:
        raise ValueError("degree must be nonnegative")
    N, k = ctx.N, ctx.k
    m = n // 2
    coeffs: dict = {}
    half = mpq(1, 2)
    if sign == "-":
        if n == 0:
            return PSI, {}
        if n % 2:
            for j in range(m + 1):
                coeffs[2 * j] = g_value(ctx, "o", j, m) * half**j / pochhammer(k * N + m + 2, j)
        else:
            for j in range(m):
                coeffs[2 * j + 1] = g_value(ctx, "e", j, m) * half**j / pochhammer(k * N + m + 2, j)
        return PSI, coeffs
    if n % 2:
        for j in range(m + 1):
            coeffs[2 * j + 1] = g_value(ctx, "e", j, m + 1) * half**j / pochhammer(k * N + m + 2, j)
    else:
        for j in range(m + 1):
            coeffs[2 * j] = g_value(ctx, "o", j, m) * half**j / pochhammer(k * N + m + 1, j)
    return PHI, coeffs


def harmonic(ctx: DunklContext, n: int, sign: str) -> PlanarPoly:
    """h_n^+ (symmetric) or h_n^- (antisymmetric); h_0^- is zero."""
    kind, coeffs = harmonic_coefficients(ctx, n, sign)
    return PlanarPoly(ctx, kind, n, coeffs)


# ---------------------------------------------------------------------------
# T_1 +/- T_2 on basis expansions
# ---------------------------------------------------------------------------


def apply_sum_diff(ctx: DunklContext, f: PlanarPoly, op: str) -> PlanarPoly:
    """(T_1 + T_2) f for op='+', (T_1 - T_2) f for op='-', by the basis rules."""
    if op not in ("+", "-"):
        raise ValueError("op must be '+' or '-'")
    n = f.n
    target = f.kind if op == "+" else (PSI if f.kind == PHI else PHI)
    if n == 0 or f.is_zero():
        return zero_planar(ctx, target, n - 1)
    twoNk = ctx.k * (2 * ctx.N)
    twok = ctx.k * 2
    out: dict = {}

    def add(j, c):
        if in_range(target, n - 1, j) and c:
            out[j] = out.get(j, ZERO) + c

    for j, c in f.basis.items():
        if f.kind == PHI and op == "+":
            add(j + 1, c * (-(j + 1)))
            add(j - 1, c * (twoNk + (n + j)))
        elif f.kind == PHI:
            add(j, c * -(twoNk - twok + (n + j + 1)))
            add(j - 2, c * (twoNk + (n + j)))
        elif op == "+":
            add(j + 1, c * (-(j + 1)))
            add(j - 1, c * (twoNk + (n + j + 1)))
        else:
            add(j, c * (twoNk + (n + j + 1)))
    return PlanarPoly(ctx, target, n - 1, out)


def sum_diff_power(ctx: DunklContext, f: PlanarPoly, ops: str) -> PlanarPoly:
    """Apply a word of '+'/'-' operators, rightmost first."""
    for op in reversed(ops):
        f = apply_sum_diff(ctx, f, op)
    return f


# ---------------------------------------------------------------------------
# invariant audits
# ---------------------------------------------------------------------------


def check_symmetry(f: PlanarPoly) -> bool:
    """(1,2) acts by +1 on phi-expansions and by -1 on psi-expansions."""
    p = f.p_rep
    swapped = transpose_vars(p, 1, 2)
    return swapped == (p if f.kind == PHI else -p)


def check_parity(f: PlanarPoly) -> bool:
    return all(in_range(f.kind, f.n, j) for j in f.basis)


def check_planar(f: PlanarPoly) -> bool:
    """Only p_1, p_2 occur and the P-rep is homogeneous of degree n."""
    return all(all(x == 0 for x in e[2:]) and sum(e) == f.n for e in f.p_rep.terms)


# ---------------------------------------------------------------------------
# series oracle for phi / psi (Chebyshev route)
# ---------------------------------------------------------------------------


def _cheb_t(k: int) -> dict:
    """Power coefficients s^p of T_k(s) from the explicit hypergeometric sum."""
    if k == 0:
        return {0: mpq(1)}
    out = {}
    for j in range(k // 2 + 1):
        c = pochhammer(-k, 2 * j) / (factorial(j) * pochhammer(1 - k, j)) * mpq(2) ** (k - 1 - 2 * j)
        if c:
            out[k - 2 * j] = c
    return out


def _cheb_u(k: int) -> dict:
    if k < 0:
        return {}
    if k == 0:
        return {0: mpq(1)}
    out = {}
    for j in range(k // 2 + 1):
        c = pochhammer(-k, 2 * j) / (factorial(j) * pochhammer(-k, j)) * mpq(2) ** (k - 2 * j)
        if c:
            out[k - 2 * j] = c
    return out


def u_series_oracle(ctx: DunklContext, which: int, n_max: int) -> dict:
    """Coefficient table (n, j) -> MultiPoly[P] of t^n s^j in u_1 or u_2.

    Expands the geometric series in (t, z), pairs z^{+-k} into T_k / U_{k-1}
    of s and collects powers of s.
    """
    if which not in (1, 2):
        raise ValueError("which must be 1 or 2")
    N = ctx.N
    table: dict = {}
    for n in range(n_max + 1):
        acc: dict[int, dict] = {}
        for m in range(n // 2 + 1):
            if which == 1:
                eps = mpq(1, 2) if 2 * m == n else mpq(1)
                pairs = [((n - m, m), eps), ((m, n - m), eps)]
                cheb = _cheb_t(n - 2 * m)
            else:
                if 2 * m == n:
                    continue
                pairs = [((n - m, m), mpq(1)), ((m, n - m), mpq(-1))]
                cheb = _cheb_u(n - 1 - 2 * m)
            for spow, cc in cheb.items():
                slot = acc.setdefault(spow, {})
                for (a, b), c in pairs:
                    e = _pmono(a, b, N)
                    slot[e] = slot.get(e, 0) + c * cc
        for j, terms in acc.items():
            poly = MultiPoly(terms, N, "P")
            if poly:
                table[(n, j)] = poly
    return table
