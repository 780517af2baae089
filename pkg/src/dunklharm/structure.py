"""Pairings of planar harmonics and their exact structure constants.

Three pairings are in play.  ``<f, g>_k`` applies f(T_1, ..., T_N) to g and
reads off the constant term.  The Gaussian pairing satisfies
``<f, g>_k = <exp(-Delta/2) f, exp(-Delta/2) g>_G`` and is computed here via the
inverse relation.  For harmonic homogeneous f, g of degree n the sphere
pairing is ``<f, g>_k / (2^n ((N/2)((N-1)k + 1))_n)``.

The normalizing constants of the weighted Gaussian and sphere measures are
the Macdonald-Mehta-Selberg values

    c_k = prod_{j=2}^{N} Gamma(k + 1) / Gamma(j k + 1),
    c'_k = 2^{N(N-1)k/2} Gamma((N/2)((N-1)k + 1)) / Gamma(N/2) * c_k.

They never enter the computations below, which stay inside Q(k).
"""
from __future__ import annotations

from math import factorial

from .dunkl import DunklContext, _to_pc, _tx_pc, apply_laplacian, p_basis_poly, psi_inverse
from .planar import PHI, PSI, PlanarPoly, g_value, harmonic, sum_diff_power
from .polyengine import MultiPoly, evaluate
from .scalars import (
    ONE,
    ZERO,
    GaussianKappa,
    KappaScalar,
    mpq,
    pochhammer,
)

INNER_PRODUCT_KINDS = ("kappa", "gaussian", "sphere-factor")


class NotHarmonicError(ValueError):
    pass


# ---------------------------------------------------------------------------
# pairings
# ---------------------------------------------------------------------------


def kappa_inner(ctx: DunklContext, f: MultiPoly, g: MultiPoly) -> KappaScalar:
    """f(T_1..T_N) g evaluated at x = 0."""
    if f.rep != "X" or g.rep != "X":
        raise ValueError("kappa_inner expects X-representation polynomials")
    pc, den = _to_pc(g)
    g_by_degree: dict[int, dict] = {}
    for e, c in pc.items():
        g_by_degree.setdefault(sum(e), {})[e] = c
    f_by_degree: dict[int, list] = {}
    for e, c in f.terms.items():
        f_by_degree.setdefault(sum(e), []).append((e, c))
    zero_exp = (0,) * ctx.N
    total = ZERO
    for d, items in f_by_degree.items():
        gd = g_by_degree.get(d)
        if not gd:
            continue
        # T^beta g_d, memoized on beta; the lowest-index operator is applied
        # last, so operators on high-index variables reach g first.
        memo: dict = {zero_exp: gd}

        def word(beta: tuple) -> dict:
            if beta in memo:
                return memo[beta]
            a = next(i for i, x in enumerate(beta) if x)
            inner = word(beta[:a] + (beta[a] - 1,) + beta[a + 1:])
            res = _tx_pc(ctx, inner, a) if inner else {}
            memo[beta] = res
            return res

        for e, c in items:
            val = word(e).get(zero_exp)
            if val is not None and not val.is_zero():
                total = total + c * KappaScalar(val)
    return total / KappaScalar(den)


def exp_laplacian(ctx: DunklContext, f: MultiPoly, t) -> MultiPoly:
    """exp(t Delta) f; the series terminates on polynomials."""
    t = KappaScalar.coerce(t)
    out = f
    term = f
    j = 0
    while True:
        j += 1
        term = apply_laplacian(ctx, term)
        if term.is_zero():
            return out
        term = term.scale(t / j)
        out = out + term


def gaussian_inner(ctx: DunklContext, f: MultiPoly, g: MultiPoly) -> KappaScalar:
    """<f, g>_G = <exp(Delta/2) f, exp(Delta/2) g>_k."""
    half = mpq(1, 2)
    return kappa_inner(ctx, exp_laplacian(ctx, f, half), exp_laplacian(ctx, g, half))


def sphere_norm_factor(ctx: DunklContext, n: int) -> KappaScalar:
    """2^n ((N/2)((N-1)k + 1))_n, the ratio <f,f>_k / <f,f>_S in degree n."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    a = (ctx.k * (ctx.N - 1) + 1) * mpq(ctx.N, 2)
    return pochhammer(a, n) * (mpq(2) ** n)


def sphere_inner(ctx: DunklContext, f: MultiPoly, g: MultiPoly) -> KappaScalar:
    """Sphere pairing of harmonic homogeneous polynomials, via the degree factor."""
    for h in (f, g):
        if not h.is_homogeneous():
            raise ValueError("sphere pairing is only available for homogeneous inputs")
    df, dg = f.degree(), g.degree()
    if df != dg or f.is_zero() or g.is_zero():
        return ZERO
    return kappa_inner(ctx, f, g) / sphere_norm_factor(ctx, df)


# ---------------------------------------------------------------------------
# S(n, j; a, b)
# ---------------------------------------------------------------------------


def s_constant(n: int, j: int, alpha, beta) -> KappaScalar:
    """The double sum S(n, j; alpha, beta), 0 <= j <= floor(n/2)."""
    if n < 0 or not 0 <= j <= n // 2:
        raise IndexError(f"need 0 <= j <= floor(n/2), got n={n}, j={j}")
    alpha = KappaScalar.coerce(alpha)
    beta = KappaScalar.coerce(beta)
    h = n // 2
    total = ZERO
    for ell in range(h + 1):
        a_part = pochhammer(alpha + 1, ell)
        base = alpha * 2 + beta + 2 * ell
        for i in range(max(0, ell + j - h), min(ell, j) + 1):
            den = factorial(i) * factorial(ell - i) * factorial(j - i) * factorial(n - 2 * ell - 2 * j + 2 * i)
            sign = -1 if (ell + j) % 2 else 1
            c = mpq(sign * 2 ** (n - j + i), den)
            total = total + a_part * pochhammer(base, n - 2 * ell - j + i) * c
    return total


# bivariate truncated series in (t, s): {t_power: {s_power: scalar}}


def _series_mul(a: dict, b: dict, n_max: int) -> dict:
    out: dict = {}
    for ta, sa in a.items():
        for tb, sb in b.items():
            t = ta + tb
            if t > n_max:
                continue
            slot = out.setdefault(t, {})
            for pa, ca in sa.items():
                for pb, cb in sb.items():
                    p = pa + pb
                    slot[p] = slot[p] + ca * cb if p in slot else ca * cb
    return {t: {p: c for p, c in s.items() if c} for t, s in out.items()}


def _binomial_series(x: dict, c, n_max: int) -> dict:
    """(1 + x)^c truncated at t^n_max; x must have no t^0 term."""
    assert 0 not in x
    c = KappaScalar.coerce(c)
    out = {0: {0: ONE}}
    power = {0: {0: ONE}}
    binom = ONE
    for k in range(1, n_max + 1):
        binom = binom * (c - (k - 1)) / k
        power = _series_mul(power, x, n_max)
        if not power:
            break
        if not binom:
            continue
        for t, s in power.items():
            slot = out.setdefault(t, {})
            for p, v in s.items():
                slot[p] = slot[p] + v * binom if p in slot else v * binom
    return out


def g_series_oracle(alpha, beta, n_max: int) -> dict:
    """(n, j) -> coefficient of t^n s^(n-2j) in
    (1 - 2st + 2t^2)^(2-beta) / (1 - 4st + 8s^2t^2 - 8st^3 + 4t^4)^(alpha+1),
    by direct binomial expansion of both factors.
    """
    alpha = KappaScalar.coerce(alpha)
    beta = KappaScalar.coerce(beta)
    quad = {1: {1: KappaScalar(-2)}, 2: {0: KappaScalar(2)}}
    quartic = {1: {1: KappaScalar(-4)}, 2: {2: KappaScalar(8)}, 3: {1: KappaScalar(-8)}, 4: {0: KappaScalar(4)}}
    num = _binomial_series(quad, 2 - beta, n_max)
    den = _binomial_series(quartic, -alpha - 1, n_max)
    prod = _series_mul(num, den, n_max)
    table = {}
    for n in range(n_max + 1):
        row = prod.get(n, {})
        for j in range(n // 2 + 1):
            table[(n, j)] = row.get(n - 2 * j, ZERO)
        stray = [p for p in row if p > n or (n - p) % 2]
        assert not stray, "unexpected powers of s"
    return table


def gegenbauer_variant_series(lam, n_max: int) -> dict:
    """(1 - 2st + 2t^2)^(-lam) as {(n, m): coefficient of t^n s^(n-2m)} from the closed sum."""
    lam = KappaScalar.coerce(lam)
    out = {}
    for n in range(n_max + 1):
        for m in range(n // 2 + 1):
            out[(n, m)] = pochhammer(lam, n - m) * mpq((-1) ** m * 2 ** (n - m), factorial(n - 2 * m) * factorial(m))
    return out


def binomial_series_table(lam, n_max: int) -> dict:
    """(1 - 2st + 2t^2)^(-lam) in the same indexing, by binomial expansion."""
    quad = {1: {1: KappaScalar(-2)}, 2: {0: KappaScalar(2)}}
    ser = _binomial_series(quad, -KappaScalar.coerce(lam), n_max)
    return {(n, m): ser.get(n, {}).get(n - 2 * m, ZERO) for n in range(n_max + 1) for m in range(n // 2 + 1)}


# ---------------------------------------------------------------------------
# special point (1+i, 1-i, 0, ..., 0)
# ---------------------------------------------------------------------------


def special_point(ctx: DunklContext) -> list[GaussianKappa]:
    return [GaussianKappa(1, 1), GaussianKappa(1, -1)] + [GaussianKappa(0)] * (ctx.N - 2)


def _p_value(ctx: DunklContext, a: int, i: int) -> GaussianKappa:
    return ctx.cached(("pval", a, i), lambda: evaluate(p_basis_poly(ctx, a, i), special_point(ctx)))


def special_point_eval(ctx: DunklContext, f: PlanarPoly) -> GaussianKappa:
    """Value of psi^{-1}(f) at (1+i, 1-i, 0, ...).

    Evaluation is multiplicative, so p_{a,b} is evaluated as p_a(x_1) p_b(x_2).
    """
    acc = GaussianKappa(ZERO)
    for e, c in f.p_rep.terms.items():
        a, b = e[0], e[1]
        acc = acc + _p_value(ctx, a, 1) * _p_value(ctx, b, 2) * c
    return acc


def special_point_eval_direct(ctx: DunklContext, f: PlanarPoly) -> GaussianKappa:
    """Same value, by full expansion into x-polynomials first."""
    return evaluate(psi_inverse(ctx, f.p_rep), special_point(ctx))


# ---------------------------------------------------------------------------
# closed forms
# ---------------------------------------------------------------------------


def _pieces(ctx: DunklContext):
    k, N = ctx.k, ctx.N
    return k * (N - 1), k * N  # (N-1)k, Nk


def power_chain_closed(ctx: DunklContext, n: int, sign: str) -> KappaScalar:
    """Closed value of (T1+T2)^n h_n^+ or (T1+T2)^(n-1)(T1-T2) h_n^-."""
    nm1k, nk = _pieces(ctx)
    m = n // 2
    two = mpq(2)
    if sign == "+":
        if n % 2 == 0:
            return two**m * pochhammer(nm1k + 1, m) * pochhammer(nk + 1, m)
        return two ** (m + 1) * pochhammer(nm1k + 1, m) * pochhammer(nk + 1, m + 1)
    if n == 0:
        return ZERO
    if n % 2 == 0:
        return two ** (m + 1) * pochhammer(nm1k + 1, m - 1) * pochhammer(nk + 1, m + 1)
    return two ** (m + 1) * pochhammer(nm1k + 1, m) * pochhammer(nk + 1, m + 1)


def power_chain_word(n: int, sign: str) -> str:
    """The operator word whose value power_chain_closed gives ('+' = T1+T2)."""
    if sign == "+":
        return "+" * n
    return "+" * (n - 1) + "-"


def closed_norm(ctx: DunklContext, n: int, sign: str) -> KappaScalar:
    """<h_n^sign, h_n^sign>_k from the special-point values and the power chains."""
    if sign == "-" and n < 1:
        raise ValueError("h_n^- needs n >= 1")
    if n < 0:
        raise ValueError("degree must be nonnegative")
    nm1k, nk = _pieces(ctx)
    m = n // 2
    total = ZERO
    half = mpq(1, 2)
    if sign == "+":
        if n % 2 == 0:
            for j in range(m + 1):
                c = g_value(ctx, "o", j, m) * half**j / pochhammer(nk + m + 1, j)
                total = total + c * s_constant(2 * m, m - j, ctx.k, 1)
            return total * half**m * pochhammer(nm1k + 1, m) * pochhammer(nk + 1, m)
        for j in range(m + 1):
            c = g_value(ctx, "e", j, m + 1) * half**j / pochhammer(nk + m + 2, j)
            total = total + c * s_constant(2 * m + 1, m - j, ctx.k, 1)
        return total * half**m * pochhammer(nm1k + 1, m) * pochhammer(nk + 1, m + 1)
    if n % 2 == 0:
        for j in range(m):
            c = g_value(ctx, "e", j, m) * half**j / pochhammer(nk + m + 2, j)
            total = total + c * s_constant(2 * m - 1, m - 1 - j, ctx.k, 2)
        return total * mpq(2) ** (2 - m) * pochhammer(nm1k + 1, m - 1) * pochhammer(nk + 1, m + 1)
    for j in range(m + 1):
        c = g_value(ctx, "o", j, m) * half**j / pochhammer(nk + m + 2, j)
        total = total + c * s_constant(2 * m, m - j, ctx.k, 2)
    return total * mpq(2) ** (1 - m) * pochhammer(nm1k + 1, m) * pochhammer(nk + 1, m + 1)


def closed_norm_as_printed(ctx: DunklContext, n: int, sign: str) -> KappaScalar:
    """Antisymmetric norms with the alternative S-indices and powers of two,
    S(2m, m-j-1) and S(2m+1, m-j) with 2^(2-m).  It does not agree with the
    direct value; kept so the discrepancy stays reproducible.
    """
    if sign == "+":
        return closed_norm(ctx, n, sign)
    nm1k, nk = _pieces(ctx)
    m = n // 2
    total = ZERO
    half = mpq(1, 2)
    if n % 2 == 0:
        for j in range(m):
            c = g_value(ctx, "e", j, m) * half**j / pochhammer(nk + m + 2, j)
            total = total + c * s_constant(2 * m, m - j - 1, ctx.k, 2)
        return total * mpq(2) ** (2 - m) * pochhammer(nm1k + 1, m - 1) * pochhammer(nk + 1, m + 1)
    for j in range(m + 1):
        c = g_value(ctx, "o", j, m) * half**j / pochhammer(nk + m + 2, j)
        total = total + c * s_constant(2 * m + 1, m - j, ctx.k, 2)
    return total * mpq(2) ** (2 - m) * pochhammer(nm1k + 1, m) * pochhammer(nk + 1, m + 1)


def is_harmonic_planar(ctx: DunklContext, f: PlanarPoly) -> bool:
    """2 (T1^2 + T2^2) f = ((T1+T2)^2 + (T1-T2)^2) f vanishes, by the basis rules."""
    a = sum_diff_power(ctx, f, "++")
    b = sum_diff_power(ctx, f, "--")
    return (a + b).is_zero()


def symmetry_reduction_eval(ctx: DunklContext, f: PlanarPoly) -> KappaScalar:
    """<f, f>_k for a planar harmonic of definite (1,2)-symmetry via the special point."""
    if f.kind not in (PHI, PSI):
        raise ValueError("f must be a phi- or psi-expansion")
    if not is_harmonic_planar(ctx, f):
        raise NotHarmonicError("symmetry reduction requires a harmonic input")
    n = f.n
    if f.is_zero():
        return ZERO
    value = special_point_eval(ctx, f)
    two_n = mpq(2) ** n
    if f.kind == PHI:
        chain = sum_diff_power(ctx, f, "+" * n)
        const = chain.coef(0) if n else f.coef(0)
        out = value * const * (1 / two_n)
    else:
        chain = sum_diff_power(ctx, f, power_chain_word(n, "-"))
        const = chain.coef(0)
        out = value * GaussianKappa(ZERO, -ONE) * const * (1 / two_n)
    assert out.im.is_zero(), "special-point shortcut produced a non-real value"
    return out.re


def direct_norm(ctx: DunklContext, n: int, sign: str) -> KappaScalar:
    """<h, h>_k by applying h(T) to h in the x-variables (the reference oracle)."""
    x = harmonic(ctx, n, sign).x_rep()
    return kappa_inner(ctx, x, x)
