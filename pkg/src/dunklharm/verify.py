"""Named identity checks driven by ``dunklharm verify``.

Each suite yields ``Check`` records; a suite never raises on a failed
identity, it reports it.  Suite names are the
usual short labels of the identities (``tth-action``, ``val1pI``, ``genfunS``, ...).
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Iterator

from . import planar
from .clifford import CliffordPoly, dirac, laplacian_componentwise, monogenic
from .dunkl import (
    DunklContext,
    apply_dunkl_p,
    apply_dunkl_p_via_monomials,
    apply_dunkl_x,
    apply_laplacian,
    apply_sum_of,
    monomials_of_degree,
    psi_forward,
    psi_inverse,
)
from .planar import PHI, PSI, apply_sum_diff, harmonic, in_range, sum_diff_power, u_series_oracle
from .polyengine import MultiPoly
from .scalars import GaussianKappa, KappaScalar, mpq
from .structure import (
    closed_norm,
    direct_norm,
    g_series_oracle,
    power_chain_closed,
    power_chain_word,
    s_constant,
    special_point_eval,
)

G_GOLDEN = {
    ("o", 1): (1, 1),
    ("o", 2): (3, 5, 1),
    ("o", 3): (15, 32, 12, 1),
    ("e", 1): (2, 1),
    ("e", 2): (7, 7, 1),
    ("e", 3): (36, 53, 15, 1),
}


@dataclass(frozen=True)
class Check:
    suite: str
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f"  ({self.detail})" if self.detail else ""
        return f"[{status}] {self.suite}: {self.name}{extra}"


def _guard(suite: str, name: str, fn: Callable[[], bool]) -> Check:
    try:
        return Check(suite, name, bool(fn()))
    except Exception as exc:  # report, keep going
        return Check(suite, name, False, f"{type(exc).__name__}: {exc}")


def suite_g_family(ctx: DunklContext, max_degree: int) -> Iterator[Check]:
    for (kind, n), coeffs in G_GOLDEN.items():
        yield _guard("g-family", f"g_{n}^{kind}", lambda kind=kind, n=n, coeffs=coeffs: planar.g_poly(kind, n).coeffs == tuple(mpq(c) for c in coeffs))


def suite_harmonicity(ctx: DunklContext, max_degree: int) -> Iterator[Check]:
    for n in range(1, max_degree + 1):
        for sign in "+-":
            yield _guard("harmonicity", f"Delta h_{n}^{sign} = 0", lambda n=n, sign=sign: apply_laplacian(ctx, harmonic(ctx, n, sign).x_rep()).is_zero())


def suite_annihilation(ctx: DunklContext, max_degree: int) -> Iterator[Check]:
    for n in range(1, max_degree + 1):
        for sign in "+-":
            def check(n=n, sign=sign):
                x = harmonic(ctx, n, sign).x_rep()
                return all(apply_dunkl_x(ctx, j, x).is_zero() for j in range(3, ctx.N + 1))

            yield _guard("planar-annihilation", f"T_j h_{n}^{sign} = 0 (j > 2)", check)


def _basis(ctx, kind, n, j):
    return planar.phi(ctx, n, j) if kind == PHI else planar.psi(ctx, n, j)


def suite_recurrences(ctx: DunklContext, max_degree: int) -> Iterator[Check]:
    """T1 +/- T2 on phi/psi: basis rules against operators through psi^{-1}."""
    for kind in (PHI, PSI):
        for n in range(1, max_degree + 1):
            for j in range(n + 1):
                if not in_range(kind, n, j):
                    continue
                for op in "+-":
                    def check(kind=kind, n=n, j=j, op=op):
                        f = _basis(ctx, kind, n, j)
                        by_rule = apply_sum_diff(ctx, f, op)
                        by_ops = apply_sum_of(ctx, {1: 1, 2: 1 if op == "+" else -1}, f.x_rep())
                        return by_ops == psi_inverse(ctx, by_rule.p_rep)

                    yield _guard("recurrences", f"(T1{op}T2) {kind}_{{{n},{j}}}", check)


def tth_identities(ctx: DunklContext, m: int) -> list[tuple[int, str, Callable[[], tuple]]]:
    """The T1 +/- T2 actions on h^{+/-} at index m as (degree, label, thunk -> (lhs, rhs))."""
    k, N = ctx.k, ctx.N
    a = k * N + (m + 1)  # N k + m + 1
    b = k * (N - 1) + m  # N k - k + m
    h = lambda n, s: harmonic(ctx, n, s)  # noqa: E731
    T = lambda f, op: apply_sum_diff(ctx, f, op)  # noqa: E731
    ids = [
        (2 * m + 1, f"(T1-T2)h_{2*m+1}^- = 2(Nk+m+1)h_{2*m}^+", lambda: (T(h(2 * m + 1, "-"), "-"), h(2 * m, "+").scale(a * 2))),
        (2 * m + 1, f"(T1+T2)h_{2*m+1}^- = (Nk-k+m)h_{2*m}^-", lambda: (T(h(2 * m + 1, "-"), "+"), h(2 * m, "-").scale(b))),
        (2 * m + 1, f"(T1-T2)h_{2*m+1}^+ = -(Nk-k+m)h_{2*m}^-", lambda: (T(h(2 * m + 1, "+"), "-"), h(2 * m, "-").scale(-b))),
        (2 * m + 1, f"(T1+T2)h_{2*m+1}^+ = 2(Nk+m+1)h_{2*m}^+", lambda: (T(h(2 * m + 1, "+"), "+"), h(2 * m, "+").scale(a * 2))),
    ]
    if m >= 1:
        ids += [
            (2 * m, f"(T1-T2)h_{2*m}^- = 2(Nk+m+1)h_{2*m-1}^+", lambda: (T(h(2 * m, "-"), "-"), h(2 * m - 1, "+").scale(a * 2))),
            (2 * m, f"(T1+T2)h_{2*m}^- = 2(Nk+m+1)h_{2*m-1}^-", lambda: (T(h(2 * m, "-"), "+"), h(2 * m - 1, "-").scale(a * 2))),
            (2 * m, f"(T1-T2)h_{2*m}^+ = -(Nk-k+m)h_{2*m-1}^-", lambda: (T(h(2 * m, "+"), "-"), h(2 * m - 1, "-").scale(-b))),
            (2 * m, f"(T1+T2)h_{2*m}^+ = (Nk-k+m)h_{2*m-1}^+", lambda: (T(h(2 * m, "+"), "+"), h(2 * m - 1, "+").scale(b))),
        ]
    return ids


def suite_tth_action(ctx: DunklContext, max_degree: int) -> Iterator[Check]:
    for m in range(0, max_degree // 2 + 1):
        for degree, label, thunk in tth_identities(ctx, m):
            if degree > max_degree:
                continue
            def check(thunk=thunk):
                lhs, rhs = thunk()
                return lhs == rhs

            yield _guard("tth-action", label, check)


def suite_power_chains(ctx: DunklContext, max_degree: int) -> Iterator[Check]:
    for n in range(1, max_degree + 1):
        for sign in "+-":
            def check(n=n, sign=sign):
                out = sum_diff_power(ctx, harmonic(ctx, n, sign), power_chain_word(n, sign))
                return out.n == 0 and out.coef(0) == power_chain_closed(ctx, n, sign)

            yield _guard("power-chains", f"chain h_{n}^{sign}", check)


def suite_val1pI(ctx: DunklContext, max_degree: int) -> Iterator[Check]:
    two_i = GaussianKappa(0, 2)
    for n in range(0, max_degree + 1):
        for j in range(n // 2 + 1):
            yield _guard("val1pI", f"phi_{{{n},{n-2*j}}}(1+i,1-i,0..) = S({n},{j};k,1)",
                         lambda n=n, j=j: special_point_eval(ctx, planar.phi(ctx, n, n - 2 * j)) == GaussianKappa(s_constant(n, j, ctx.k, 1)))
            yield _guard("val1pI", f"psi_{{{n+1},{n-2*j}}}(1+i,1-i,0..) = 2i S({n},{j};k,2)",
                         lambda n=n, j=j: special_point_eval(ctx, planar.psi(ctx, n + 1, n - 2 * j)) == two_i * s_constant(n, j, ctx.k, 2))


def suite_genfunS(ctx: DunklContext, max_degree: int, seed: int = 2016) -> Iterator[Check]:
    rng = random.Random(seed)
    params = [(mpq(rng.randint(-9, 9), rng.randint(1, 5)), mpq(rng.randint(-9, 9), rng.randint(1, 5))) for _ in range(5)]
    params += [(KappaScalar.kappa(), 1), (KappaScalar.kappa(), 2)]
    for alpha, beta in params:
        def check(alpha=alpha, beta=beta):
            table = g_series_oracle(alpha, beta, max_degree)
            return all(table[(n, j)] == s_constant(n, j, alpha, beta) for (n, j) in table)

        yield _guard("genfunS", f"series of G(s,t;{alpha},{beta}) up to t^{max_degree}", check)


def suite_norms(ctx: DunklContext, max_degree: int) -> Iterator[Check]:
    for n in range(0, max_degree + 1):
        for sign in "+-":
            if sign == "-" and n == 0:
                continue
            yield _guard("norms", f"<h_{n}^{sign}, h_{n}^{sign}>_k closed form", lambda n=n, sign=sign: closed_norm(ctx, n, sign) == direct_norm(ctx, n, sign))
    from .structure import kappa_inner

    for n in range(1, max_degree + 1):
        yield _guard("norms", f"<h_{n}^+, h_{n}^->_k = 0",
                     lambda n=n: kappa_inner(ctx, harmonic(ctx, n, "+").x_rep(), harmonic(ctx, n, "-").x_rep()).is_zero())


def suite_monogenics(ctx: DunklContext, max_degree: int) -> Iterator[Check]:
    for n in range(1, max_degree + 1):
        yield _guard("monogenics", f"D f_{n} = 0", lambda n=n: dirac(ctx, monogenic(ctx, n)).is_zero())
    rng = random.Random(7)
    for t in range(5):
        f = random_clifford(rng, ctx.N, min(max_degree, 4))
        yield _guard("monogenics", f"D^2 = -Delta on random sample {t}",
                     lambda f=f: dirac(ctx, dirac(ctx, f)) == -laplacian_componentwise(ctx, f))


def suite_oracles(ctx: DunklContext, max_degree: int) -> Iterator[Check]:
    u1 = u_series_oracle(ctx, 1, max_degree)
    u2 = u_series_oracle(ctx, 2, max_degree)
    for which, table, kind in ((1, u1, PHI), (2, u2, PSI)):
        def check(table=table, kind=kind):
            for n in range(max_degree + 1):
                for j in range(n + 1):
                    f = _basis(ctx, kind, n, j)
                    expected = f.p_rep if not f.is_zero() else None
                    if table.get((n, j)) != expected:
                        return False
            return True

        yield _guard("oracles", f"u_{which} series = closed-form {kind}", check)
    deg = min(max_degree, 4)
    for d in range(deg + 1):
        for alpha in monomials_of_degree(ctx.N, d):
            g = MultiPoly.monomial(alpha, rep="P")
            for i in range(1, ctx.N + 1):
                yield _guard("oracles", f"T_{i} on p^{alpha}: substitution formula = psi T psi^-1 = monomial rule",
                             lambda g=g, i=i: _three_way(ctx, i, g))


def _three_way(ctx, i, g) -> bool:
    a = apply_dunkl_p(ctx, i, g)
    b = psi_forward(ctx, apply_dunkl_x(ctx, i, psi_inverse(ctx, g)))
    c = apply_dunkl_p_via_monomials(ctx, i, g)
    return a == b == c


def suite_commutativity(ctx: DunklContext, max_degree: int, samples: int = 10) -> Iterator[Check]:
    rng = random.Random(11)
    for t in range(samples):
        f = random_poly(rng, ctx.N, min(max_degree, 5))
        for i in range(1, ctx.N + 1):
            for j in range(i + 1, ctx.N + 1):
                yield _guard("commutativity", f"T_{i}T_{j} = T_{j}T_{i} on sample {t}",
                             lambda f=f, i=i, j=j: apply_dunkl_x(ctx, i, apply_dunkl_x(ctx, j, f)) == apply_dunkl_x(ctx, j, apply_dunkl_x(ctx, i, f)))


def random_poly(rng: random.Random, N: int, max_degree: int, n_terms: int = 6) -> MultiPoly:
    """Random X-polynomial with small rational-in-k coefficients."""
    terms = {}
    for _ in range(n_terms):
        d = rng.randint(0, max_degree)
        e = [0] * N
        for _ in range(d):
            e[rng.randrange(N)] += 1
        c = KappaScalar.linear(mpq(rng.randint(-5, 5), rng.randint(1, 3)), rng.randint(-2, 2))
        terms[tuple(e)] = c
    return MultiPoly(terms, N, "X")


def random_clifford(rng: random.Random, N: int, max_degree: int) -> CliffordPoly:
    comps = {}
    for _ in range(rng.randint(1, 3)):
        size = rng.randint(0, N)
        blade = tuple(sorted(rng.sample(range(1, N + 1), size)))
        comps[blade] = random_poly(rng, N, max_degree, n_terms=3)
    return CliffordPoly(N, comps)


SUITES: dict[str, Callable] = {
    "g-family": suite_g_family,
    "harmonicity": suite_harmonicity,
    "planar-annihilation": suite_annihilation,
    "recurrences": suite_recurrences,
    "tth-action": suite_tth_action,
    "power-chains": suite_power_chains,
    "val1pI": suite_val1pI,
    "genfunS": suite_genfunS,
    "norms": suite_norms,
    "monogenics": suite_monogenics,
    "oracles": suite_oracles,
    "commutativity": suite_commutativity,
}


def run_suites(ctx: DunklContext, max_degree: int, selected: list[str] | None = None) -> list[Check]:
    names = list(SUITES) if not selected or selected == ["all"] else selected
    unknown = [s for s in names if s not in SUITES]
    if unknown:
        raise ValueError(f"unknown suite(s): {', '.join(unknown)}; choose from {', '.join(SUITES)}")
    results: list[Check] = []
    for name in names:
        results.extend(SUITES[name](ctx, max_degree))
    return results
