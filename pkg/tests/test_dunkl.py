import warnings

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dunklharm.dunkl import (
    DunklContext,
    SingularBasisError,
    apply_dunkl_p,
    apply_dunkl_p_via_monomials,
    apply_dunkl_word,
    apply_dunkl_x,
    apply_laplacian,
    dunkl_on_p_monomial,
    monomials_of_degree,
    p_alpha,
    p_basis_poly,
    psi_forward,
    psi_inverse,
)
from dunklharm.polyengine import MultiPoly, divided_difference, partial_derivative, transpose_vars
from dunklharm.scalars import KAPPA, KappaScalar, mpq

from conftest import x_polys


def naive_dunkl(ctx, i, f):
    """Definition straight from the divided differences, no caching."""
    out = partial_derivative(f, i)
    for j in range(1, ctx.N + 1):
        if j != i:
            out = out + divided_difference(f, i, j).scale(ctx.k)
    return out


def test_first_degree_actions(ctx2):
    x1, x2 = MultiPoly.var(1, 2), MultiPoly.var(2, 2)
    assert apply_dunkl_x(ctx2, 1, x1) == MultiPoly.constant(KAPPA + 1, 2)
    assert apply_dunkl_x(ctx2, 1, x2) == MultiPoly.constant(-KAPPA, 2)


@pytest.mark.parametrize("N", [2, 3, 4])
def test_laplacian_of_norm_squared(N):
    ctx = DunklContext(N)
    r2 = sum((MultiPoly.var(i, N) ** 2 for i in range(1, N + 1)), MultiPoly.zero(N))
    expected = KappaScalar.linear(2 * N, 2 * N * (N - 1))
    assert apply_laplacian(ctx, r2) == MultiPoly.constant(expected, N)


@given(x_polys(max_degree=4))
def test_matches_naive_definition(f):
    ctx = DunklContext(3)
    for i in (1, 2, 3):
        assert apply_dunkl_x(ctx, i, f) == naive_dunkl(ctx, i, f)


@given(x_polys(max_degree=4))
def test_commutativity(f):
    ctx = DunklContext(3)
    assert apply_dunkl_word(ctx, [1, 2], f) == apply_dunkl_word(ctx, [2, 1], f)
    assert apply_dunkl_word(ctx, [3, 1], f) == apply_dunkl_word(ctx, [1, 3], f)


@given(x_polys(max_degree=4), st.sampled_from([(1, 2), (1, 3), (2, 3)]))
def test_equivariance(f, ij):
    # s T_i s = T_j for the transposition s = (i j)
    ctx = DunklContext(3)
    i, j = ij
    lhs = transpose_vars(apply_dunkl_x(ctx, i, transpose_vars(f, i, j)), i, j)
    assert lhs == apply_dunkl_x(ctx, j, f)


@given(x_polys(max_degree=3, symbolic=False), st.sampled_from([mpq(0), mpq(1, 2), mpq(-1, 5), mpq(3)]))
def test_specialized_context_agrees(f, v):
    sym, num = DunklContext(3), DunklContext(3, v)
    a = apply_dunkl_x(sym, 2, f).map_coeffs(lambda c: KappaScalar(c.specialize(v)))
    assert a == apply_dunkl_x(num, 2, f)


def test_p_basis_degree_one(ctx2):
    x1, x2 = MultiPoly.var(1, 2), MultiPoly.var(2, 2)
    assert p_basis_poly(ctx2, 1, 1) == x1.scale(KAPPA + 1) + x2.scale(KAPPA)
    assert p_basis_poly(ctx2, 0, 2) == MultiPoly.constant(1, 2)


@pytest.mark.parametrize("n", range(1, 6))
def test_p_basis_annihilation_and_lowering(ctx3, n):
    p = p_basis_poly(ctx3, n, 2)
    assert apply_dunkl_x(ctx3, 1, p).is_zero()
    assert apply_dunkl_x(ctx3, 3, p).is_zero()
    assert apply_dunkl_x(ctx3, 2, p) == p_basis_poly(ctx3, n - 1, 2).scale(KAPPA * 3 + n)


def test_p_alpha_is_product(ctx3):
    assert p_alpha(ctx3, (2, 0, 1)) == p_basis_poly(ctx3, 2, 1) * p_basis_poly(ctx3, 1, 3)


@pytest.mark.parametrize("d", range(0, 4))
def test_psi_round_trip(ctx3, d):
    for alpha in monomials_of_degree(3, d):
        g = MultiPoly.monomial(alpha, rep="P")
        assert psi_forward(ctx3, psi_inverse(ctx3, g)) == g


@given(x_polys(max_degree=3))
def test_psi_forward_inverts(f):
    ctx = DunklContext(3)
    assert psi_inverse(ctx, psi_forward(ctx, f)) == f


def test_singular_p_basis():
    # degree-1 Gram determinant (1 + N k) vanishes at k = -1/N
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        ctx = DunklContext(2, mpq(-1, 2))
    with pytest.raises(SingularBasisError):
        psi_forward(ctx, MultiPoly.var(1, 2))


def test_warns_below_positivity_threshold():
    with pytest.warns(UserWarning):
        DunklContext(3, mpq(-1, 2))


def test_degree_cap():
    ctx = DunklContext(2, degree_cap=2)
    with pytest.raises(ValueError):
        psi_inverse(ctx, MultiPoly.monomial((3, 0), rep="P"))


@pytest.mark.parametrize("i", [1, 2, 3])
def test_p_rep_formulas_agree(ctx3, i):
    for d in range(0, 4):
        for alpha in monomials_of_degree(3, d):
            g = MultiPoly.monomial(alpha, rep="P")
            a = apply_dunkl_p(ctx3, i, g)
            assert a == dunkl_on_p_monomial(ctx3, i, alpha)
            assert a == psi_forward(ctx3, apply_dunkl_x(ctx3, i, psi_inverse(ctx3, g)))


def test_p_rep_linear_combination(ctx3):
    g = MultiPoly({(1, 1, 0): KAPPA, (0, 2, 1): KappaScalar(mpq(2, 3))}, 3, rep="P")
    assert apply_dunkl_p(ctx3, 2, g) == apply_dunkl_p_via_monomials(ctx3, 2, g)
