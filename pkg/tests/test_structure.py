from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dunklharm.dunkl import DunklContext
from dunklharm.planar import harmonic, phi, psi
from dunklharm.polyengine import MultiPoly
from dunklharm.scalars import KAPPA, ONE, KappaPoly, KappaScalar, mpq, specialize_kappa
from dunklharm.structure import (
    NotHarmonicError,
    binomial_series_table,
    closed_norm,
    closed_norm_as_printed,
    direct_norm,
    exp_laplacian,
    g_series_oracle,
    gaussian_inner,
    gegenbauer_variant_series,
    kappa_inner,
    s_constant,
    special_point_eval,
    special_point_eval_direct,
    sphere_inner,
    sphere_norm_factor,
    symmetry_reduction_eval,
)

from conftest import rationals, x_polys


def test_fischer_product_at_zero_kappa():
    ctx = DunklContext(3, mpq(0))
    for a in [(2, 1, 0), (0, 0, 3), (1, 1, 1)]:
        for b in [(2, 1, 0), (1, 1, 1)]:
            fa, fb = MultiPoly.monomial(a), MultiPoly.monomial(b)
            expected = (factorial(a[0]) * factorial(a[1]) * factorial(a[2])) if a == b else 0
            assert kappa_inner(ctx, fa, fb) == KappaScalar(expected)


def test_small_norms_by_hand(ctx2):
    # h_1^- = x1 - x2; (T1 - T2)(x1 - x2) = 2 + 4k at N = 2
    assert direct_norm(ctx2, 1, "-") == KappaScalar.linear(2, 4)
    assert closed_norm(ctx2, 1, "-") == KappaScalar.linear(2, 4)
    assert closed_norm(ctx2, 0, "+") == ONE


@given(x_polys(max_degree=3), x_polys(max_degree=3))
def test_kappa_inner_symmetric(f, g):
    ctx = DunklContext(3)
    assert kappa_inner(ctx, f, g) == kappa_inner(ctx, g, f)


@pytest.mark.parametrize("N", [2, 3])
def test_closed_norms_match_oracle(N):
    ctx = DunklContext(N)
    for n in range(0, 6):
        for sign in "+-":
            if sign == "-" and n == 0:
                continue
            h = harmonic(ctx, n, sign)
            assert closed_norm(ctx, n, sign) == direct_norm(ctx, n, sign) == symmetry_reduction_eval(ctx, h)


def test_printed_antisymmetric_norms_differ(ctx3):
    # the alternative S-indexing for h^- does not reproduce the direct value
    assert closed_norm_as_printed(ctx3, 2, "+") == direct_norm(ctx3, 2, "+")
    assert closed_norm_as_printed(ctx3, 2, "-") != direct_norm(ctx3, 2, "-")
    assert closed_norm_as_printed(ctx3, 3, "-") != direct_norm(ctx3, 3, "-")


def test_symmetry_reduction_needs_harmonic(ctx3):
    with pytest.raises(NotHarmonicError):
        symmetry_reduction_eval(ctx3, phi(ctx3, 2, 0))


def test_sphere_factor_values(ctx3):
    assert sphere_norm_factor(ctx3, 0) == ONE
    expected = (KAPPA * 3 + mpq(3, 2)) * (KAPPA * 3 + mpq(5, 2)) * 4
    assert sphere_norm_factor(ctx3, 2) == expected


def test_sphere_inner(ctx3):
    h = harmonic(ctx3, 2, "+").x_rep()
    assert sphere_inner(ctx3, h, h) == closed_norm(ctx3, 2, "+") / sphere_norm_factor(ctx3, 2)
    with pytest.raises(ValueError):
        sphere_inner(ctx3, h + 1, h)


@pytest.mark.parametrize("n,sign", [(1, "+"), (2, "-"), (3, "+"), (4, "-")])
def test_gaussian_equals_kappa_on_harmonics(ctx3, n, sign):
    h = harmonic(ctx3, n, sign).x_rep()
    assert exp_laplacian(ctx3, h, mpq(1, 2)) == h
    assert gaussian_inner(ctx3, h, h) == kappa_inner(ctx3, h, h)


def test_gaussian_differs_off_harmonics(ctx2):
    r2 = MultiPoly.var(1, 2) ** 2 + MultiPoly.var(2, 2) ** 2
    assert gaussian_inner(ctx2, r2, r2) != kappa_inner(ctx2, r2, r2)


@pytest.mark.parametrize("v", [mpq(0), mpq(1, 2), mpq(1), mpq(5)])
def test_norms_positive_for_nonnegative_kappa(v):
    ctx = DunklContext(3)
    for n in range(1, 7):
        for sign in "+-":
            assert specialize_kappa(closed_norm(ctx, n, sign), v) > 0


def test_mixed_pairing_vanishes(ctx3):
    for n in range(1, 6):
        plus, minus = harmonic(ctx3, n, "+").x_rep(), harmonic(ctx3, n, "-").x_rep()
        assert kappa_inner(ctx3, plus, minus).is_zero()


def test_s_constant_small():
    # t s coefficient of the series by hand: -2(2 - b) + 4(a + 1) = 4a + 2b
    a = KAPPA
    assert s_constant(0, 0, a, 1) == ONE
    assert s_constant(1, 0, a, 2) == KappaScalar.linear(4, 4)
    assert s_constant(1, 0, a, 1) == KappaScalar.linear(2, 4)
    with pytest.raises(IndexError):
        s_constant(3, 2, a, 1)


@given(rationals, rationals)
def test_generating_series_matches_double_sum(alpha, beta):
    table = g_series_oracle(alpha, beta, 6)
    for (n, j), v in table.items():
        assert v == s_constant(n, j, alpha, beta)


@given(rationals)
def test_gegenbauer_variant(lam):
    assert gegenbauer_variant_series(lam, 7) == binomial_series_table(lam, 7)


def test_gegenbauer_variant_symbolic():
    lam = KappaScalar(KappaPoly([1, 2]))
    assert gegenbauer_variant_series(lam, 6) == binomial_series_table(lam, 6)


@pytest.mark.parametrize("n", range(0, 5))
def test_special_point_paths_agree(ctx3, n):
    for j in range(n + 1):
        for f in (phi(ctx3, n, j), psi(ctx3, n, j)):
            if not f.is_zero():
                assert special_point_eval(ctx3, f) == special_point_eval_direct(ctx3, f)


@pytest.mark.parametrize("n", [3, 4])
def test_psi_special_values_imaginary(ctx3, n):
    for j in range(n):
        f = psi(ctx3, n, j)
        if not f.is_zero():
            assert special_point_eval(ctx3, f).re.is_zero()


@given(st.integers(2, 4))
def test_constants_symbolic_vs_specialized(N):
    sym, one = DunklContext(N), DunklContext(N, mpq(1))
    for n in range(0, 4):
        assert specialize_kappa(closed_norm(sym, n, "+"), 1) == closed_norm(one, n, "+").constant_value()
