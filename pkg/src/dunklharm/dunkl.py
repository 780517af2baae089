"""Type-A Dunkl operators, the p-basis and the p-variable calculus.

On ordinary polynomials

    T_i f = df/dx_i + k * sum_{j != i} (f - f(x(i,j))) / (x_i - x_j),

and ``Delta = sum_i T_i^2``.  The p-basis comes from the generating function
``sum_n p_n(x_i; x) r^n = (1 - r x_i)^{-1} prod_j (1 - r x_j)^{-k}``; the map
``psi`` sends ``p_alpha`` to the monomial ``p_1^a1 ... p_N^aN`` (rep "P").

Heavy loops run on a private "poly-coefficient" form ``{exp: KappaPoly}``
after clearing denominators; the operators are Q[k]-linear so the common
denominator is divided back in at the end.
"""
from __future__ import annotations

import threading
import warnings
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations_with_replacement

from .polyengine import (
    MultiPoly,
    RepMismatch,
    divide_by_difference,
    divide_by_var,
    monomial_divided_difference,
    partial_derivative,
    substitute_var,
    substitute_zero,
    transpose_vars,
)
from .scalars import (
    K_POLY,
    KAPPA,
    ONE,
    ONE_POLY,
    ZERO_POLY,
    KappaPoly,
    KappaScalar,
    PoleError,
    Rational,
    to_rational,
)

DEFAULT_DEGREE_CAP = 12


class SingularBasisError(PoleError):
    """The p-basis change of basis is singular at the specialized k."""


@dataclass(frozen=True)
class DunklContext:
    """Number of variables and the parameter k (``None`` means symbolic)."""

    N: int
    kappa: Rational | None = None
    degree_cap: int = DEFAULT_DEGREE_CAP
    _cache: dict = field(default_factory=dict, compare=False, repr=False)
    _lock: threading.RLock = field(default_factory=threading.RLock, compare=False, repr=False)

    def __post_init__(self):
        if self.N < 2:
            raise ValueError("need N >= 2")
        if self.kappa is not None:
            k = to_rational(self.kappa)
            object.__setattr__(self, "kappa", k)
            if not k > -1 / to_rational(self.N):
                warnings.warn(f"k = {k} is not > -1/N; positivity results do not apply", stacklevel=2)
        if self.degree_cap < 0:
            raise ValueError("degree_cap must be >= 0")

    @property
    def symbolic(self) -> bool:
        return self.kappa is None

    @property
    def k(self) -> KappaScalar:
        return KAPPA if self.kappa is None else KappaScalar.coerce(self.kappa)

    @property
    def kpoly(self) -> KappaPoly:
        return K_POLY if self.kappa is None else KappaPoly.constant(self.kappa)

    def scalar(self, c0, c1=0) -> KappaScalar:
        """c0 + c1*k as a scalar of this context."""
        return KappaScalar.coerce(c0) + self.k * c1

    def mul_k(self, p: KappaPoly) -> KappaPoly:
        return p.shift(1) if self.kappa is None else p.scale(self.kappa)

    def cached(self, key, build):
        """Once-only population of an internal table entry."""
        try:
            return self._cache[key]
        except KeyError:
            pass
        with self._lock:
            if key not in self._cache:
                self._cache[key] = build()
            return self._cache[key]

    def check_degree(self, d: int):
        if d > self.degree_cap:
            raise ValueError(f"degree {d} exceeds the context degree cap {self.degree_cap}")


# ---------------------------------------------------------------------------
# poly-coefficient form
# ---------------------------------------------------------------------------


def _to_pc(f: MultiPoly) -> tuple[dict, KappaPoly]:
    g, d = f.clear_denominators()
    return {e: c.num for e, c in g.terms.items()}, d


def _from_pc(pc: dict, den: KappaPoly, nvars: int, rep: str = "X") -> MultiPoly:
    if den.is_one():
        terms = {e: KappaScalar(p, ONE_POLY, _normalized=True) for e, p in pc.items() if not p.is_zero()}
    else:
        terms = {e: KappaScalar(p, den) for e, p in pc.items() if not p.is_zero()}
    return MultiPoly(terms, nvars, rep, _clean=True)


def _acc(out: dict, e, p: KappaPoly):
    q = out.get(e)
    out[e] = p if q is None else q + p


@lru_cache(maxsize=None)
def _x_action(e: tuple, a: int) -> tuple[tuple, tuple]:
    """T_a on x^e as (derivative part, k-part) lists of (exponent, integer)."""
    deriv = ()
    if e[a]:
        deriv = ((e[:a] + (e[a] - 1,) + e[a + 1:], e[a]),)
    dd: dict = {}
    for b in range(len(e)):
        if b != a:
            for m, s in monomial_divided_difference(e, a, b):
                dd[m] = dd.get(m, 0) + s
    return deriv, tuple((m, s) for m, s in dd.items() if s)


def _tx_pc(ctx: DunklContext, pc: dict, a: int) -> dict:
    D: dict = {}
    V: dict = {}
    for e, c in pc.items():
        deriv, dd = _x_action(e, a)
        for m, k in deriv:
            _acc(D, m, c.scale(k) if k != 1 else c)
        for m, s in dd:
            _acc(V, m, c if s == 1 else c.scale(s))
    for m, v in V.items():
        if not v.is_zero():
            _acc(D, m, ctx.mul_k(v))
    return {m: v for m, v in D.items() if not v.is_zero()}


def _require_x(f: MultiPoly):
    if f.rep != "X":
        raise RepMismatch("expected a polynomial in the X representation")


def apply_dunkl_x(ctx: DunklContext, i: int, f: MultiPoly) -> MultiPoly:
    """T_i f for an ordinary polynomial f (1-based i)."""
    _require_x(f)
    if f.nvars != ctx.N:
        raise ValueError(f"polynomial has {f.nvars} variables, context has N={ctx.N}")
    if not 1 <= i <= ctx.N:
        raise IndexError(f"operator index {i} out of range")
    pc, den = _to_pc(f)
    return _from_pc(_tx_pc(ctx, pc, i - 1), den, f.nvars)


def apply_dunkl_word(ctx: DunklContext, word, f: MultiPoly) -> MultiPoly:
    """Apply T_{word[-1]} first, ..., T_{word[0]} last."""
    _require_x(f)
    pc, den = _to_pc(f)
    for i in reversed(list(word)):
        if not pc:
            break
        pc = _tx_pc(ctx, pc, i - 1)
    return _from_pc(pc, den, f.nvars)


def apply_laplacian(ctx: DunklContext, f: MultiPoly) -> MultiPoly:
    """sum_i T_i^2 f."""
    _require_x(f)
    pc, den = _to_pc(f)
    out: dict = {}
    for a in range(ctx.N):
        for e, c in _tx_pc(ctx, _tx_pc(ctx, pc, a), a).items():
            _acc(out, e, c)
    return _from_pc({e: c for e, c in out.items() if not c.is_zero()}, den, f.nvars)


def apply_sum_of(ctx: DunklContext, coeffs: dict, f: MultiPoly) -> MultiPoly:
    """(sum_i c_i T_i) f for integer coefficients c_i, e.g. T_1 + T_2 or T_1 - T_2."""
    _require_x(f)
    pc, den = _to_pc(f)
    out: dict = {}
    for i, c in coeffs.items():
        if c:
            for e, v in _tx_pc(ctx, pc, i - 1).items():
                _acc(out, e, v.scale(c))
    return _from_pc({e: c for e, c in out.items() if not c.is_zero()}, den, f.nvars)


# ---------------------------------------------------------------------------
# p-basis
# ---------------------------------------------------------------------------


def _power_sum(N: int, k: int) -> dict:
    return {tuple(k if b == a else 0 for b in range(N)): ONE_POLY for a in range(N)}


def _pc_mul(f: dict, g: dict) -> dict:
    out: dict = {}
    for e1, c1 in f.items():
        for e2, c2 in g.items():
            _acc(out, tuple(x + y for x, y in zip(e1, e2)), c1 * c2)
    return {e: c for e, c in out.items() if not c.is_zero()}


def _symmetric_factor(ctx: DunklContext, n: int) -> dict:
    """Coefficient of r^n in prod_j (1 - r x_j)^{-k}, via n a_n = k sum_m P_m a_{n-m}."""

    def build():
        if n == 0:
            return {(0,) * ctx.N: ONE_POLY}
        acc: dict = {}
        for m in range(1, n + 1):
            for e, c in _pc_mul(_power_sum(ctx.N, m), _symmetric_factor(ctx, n - m)).items():
                _acc(acc, e, c)
        inv = to_rational(1) / n
        return {e: ctx.mul_k(c).scale(inv) for e, c in acc.items() if not c.is_zero()}

    return ctx.cached(("a", n), build)


def _p_basis_pc(ctx: DunklContext, n: int, i: int) -> dict:
    def build():
        out: dict = {}
        for m in range(n + 1):
            shift = m
            for e, c in _symmetric_factor(ctx, n - m).items():
                _acc(out, e[: i - 1] + (e[i - 1] + shift,) + e[i:], c)
        return {e: c for e, c in out.items() if not c.is_zero()}

    return ctx.cached(("p", n, i), build)


def p_basis_poly(ctx: DunklContext, n: int, i: int) -> MultiPoly:
    """p_n(x_i; x): homogeneous of degree n with coefficients in Q[k]."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    if not 1 <= i <= ctx.N:
        raise IndexError(f"variable index {i} out of range")
    ctx.check_degree(n)
    return _from_pc(_p_basis_pc(ctx, n, i), ONE_POLY, ctx.N)


def _p_alpha_pc(ctx: DunklContext, alpha: tuple) -> dict:
    def build():
        nz = [a for a, x in enumerate(alpha) if x]
        if not nz:
            return {(0,) * ctx.N: ONE_POLY}
        last = nz[-1]
        rest = alpha[:last] + (0,) + alpha[last + 1:]
        return _pc_mul(_p_alpha_pc(ctx, rest), _p_basis_pc(ctx, alpha[last], last + 1))

    return ctx.cached(("palpha", alpha), build)


def p_alpha(ctx: DunklContext, alpha) -> MultiPoly:
    alpha = tuple(alpha)
    ctx.check_degree(sum(alpha))
    return _from_pc(_p_alpha_pc(ctx, alpha), ONE_POLY, ctx.N)


def psi_inverse(ctx: DunklContext, g: MultiPoly) -> MultiPoly:
    """Expand a polynomial in the p-variables into ordinary x-polynomials."""
    if g.rep != "P":
        raise RepMismatch("psi_inverse expects the P representation")
    if g.nvars != ctx.N:
        raise ValueError("nvars does not match the context")
    pc, den = _to_pc(g)
    out: dict = {}
    for alpha, c in pc.items():
        ctx.check_degree(sum(alpha))
        for e, v in _p_alpha_pc(ctx, alpha).items():
            _acc(out, e, v * c)
    return _from_pc({e: c for e, c in out.items() if not c.is_zero()}, den, ctx.N)


def monomials_of_degree(N: int, d: int) -> list[tuple]:
    """All exponent vectors of total degree d, in descending lex order."""
    out = []
    for combo in combinations_with_replacement(range(N), d):
        e = [0] * N
        for a in combo:
            e[a] += 1
        out.append(tuple(e))
    return sorted(out, reverse=True)


def _inverse_matrix(ctx: DunklContext, d: int) -> tuple[list, dict, list]:
    """Inverse of the degree-d block of the p-basis over the monomial basis."""

    def build():
        monos = monomials_of_degree(ctx.N, d)
        index = {m: r for r, m in enumerate(monos)}
        n = len(monos)
        # column c holds the monomial coefficients of p_{monos[c]}
        A = [[KappaScalar(ZERO_POLY, ONE_POLY, _normalized=True)] * n + [ONE if r == c else KappaScalar(0) for c in range(n)] for r in range(n)]
        for c, alpha in enumerate(monos):
            for e, v in _p_alpha_pc(ctx, alpha).items():
                A[index[e]][c] = KappaScalar(v, ONE_POLY, _normalized=True)
        for col in range(n):
            piv = next((r for r in range(col, n) if A[r][col]), None)
            if piv is None:
                raise SingularBasisError(f"p-basis is singular in degree {d} at k = {ctx.kappa}")
            A[col], A[piv] = A[piv], A[col]
            inv = A[col][col].inverse()
            A[col] = [x * inv if x else x for x in A[col]]
            pivot_row = A[col]
            for r in range(n):
                if r != col and A[r][col]:
                    factor = A[r][col]
                    A[r] = [x - factor * y if y else x for x, y in zip(A[r], pivot_row)]
        inverse = [row[n:] for row in A]
        return monos, index, inverse

    return ctx.cached(("inv", d), build)


def psi_forward(ctx: DunklContext, f: MultiPoly) -> MultiPoly:
    """Write an x-polynomial in the p-basis; returns the P-rep image."""
    _require_x(f)
    if f.nvars != ctx.N:
        raise ValueError("nvars does not match the context")
    out: dict = {}
    for d in sorted({sum(e) for e in f.terms}):
        ctx.check_degree(d)
        monos, index, inv = _inverse_matrix(ctx, d)
        rhs = [None] * len(monos)
        for e, c in f.terms.items():
            if sum(e) == d:
                rhs[index[e]] = c
        nz = [(r, c) for r, c in enumerate(rhs) if c is not None]
        for row_i, alpha in enumerate(monos):
            row = inv[row_i]
            acc = KappaScalar(0)
            for r, c in nz:
                if row[r]:
                    acc = acc + row[r] * c
            if acc:
                out[alpha] = acc
    return MultiPoly(out, ctx.N, "P", _clean=True)


# ---------------------------------------------------------------------------
# T_i in the p-variables
# ---------------------------------------------------------------------------


def apply_dunkl_p(ctx: DunklContext, i: int, g: MultiPoly) -> MultiPoly:
    """T_i acting on a function of (p_1..p_N), by the substitution formula."""
    if g.rep != "P":
        raise RepMismatch("apply_dunkl_p expects the P representation")
    if not 1 <= i <= ctx.N:
        raise IndexError(f"operator index {i} out of range")
    k = ctx.k
    out = partial_derivative(g, i)
    out = out + divide_by_var(g - substitute_zero(g, i), i).scale(k * ctx.N)
    for j in range(1, ctx.N + 1):
        if j == i:
            continue
        num = substitute_var(g, i, j) + substitute_var(g, j, i) - g - transpose_vars(g, i, j)
        if num:
            out = out + divide_by_difference(num, i, j).scale(k)
    return out


def dunkl_on_p_monomial(ctx: DunklContext, i: int, alpha) -> MultiPoly:
    """Psi(T_i p_alpha) from the explicit expansion of T_i on the p-basis."""
    alpha = tuple(alpha)
    N = ctx.N
    if len(alpha) != N:
        raise ValueError("multi-index length must equal N")
    a = i - 1
    if alpha[a] == 0:
        return MultiPoly.zero(N, "P")
    out: dict = {}
    lead = alpha[:a] + (alpha[a] - 1,) + alpha[a + 1:]
    _acc(out, lead, KappaPoly.constant(alpha[a]) + ctx.mul_k(KappaPoly.constant(N)))
    for b in range(N):
        if b == a:
            continue
        top = alpha[a] + alpha[b] - 1
        for m in range(alpha[b]):
            e1 = list(alpha)
            e1[a], e1[b] = top - m, m
            e2 = list(alpha)
            e2[a], e2[b] = m, top - m
            kp = ctx.mul_k(ONE_POLY)
            _acc(out, tuple(e1), kp)
            _acc(out, tuple(e2), -kp)
    return _from_pc({e: c for e, c in out.items() if not c.is_zero()}, ONE_POLY, N, "P")


def apply_dunkl_p_via_monomials(ctx: DunklContext, i: int, g: MultiPoly) -> MultiPoly:
    """Linear extension of :func:`dunkl_on_p_monomial`."""
    out = MultiPoly.zero(ctx.N, "P")
    for alpha, c in g.terms.items():
        out = out + dunkl_on_p_monomial(ctx, i, alpha).scale(c)
    return out
