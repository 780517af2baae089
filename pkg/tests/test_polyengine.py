import pytest
from hypothesis import given
from hypothesis import strategies as st

from dunklharm.polyengine import (
    MultiPoly,
    RepMismatch,
    divide_by_difference,
    divided_difference,
    evaluate,
    from_json,
    partial_derivative,
    substitute_var,
    substitute_zero,
    to_json,
    to_string,
    transpose_vars,
)
from dunklharm.scalars import KAPPA, GaussianKappa, KappaScalar, mpq

from conftest import x_polys

x1, x2, x3 = (MultiPoly.var(i, 3) for i in (1, 2, 3))


def test_basic_arithmetic():
    f = (x1 + x2) ** 2
    assert f == x1 * x1 + x1 * x2 * 2 + x2 * x2
    assert f.degree() == 2 and f.is_homogeneous()
    assert (f - f).is_zero() and (f - f).degree() == -1
    assert (f + 1).constant_term() == 1
    assert not (f + 1).is_homogeneous()


def test_grlex_order():
    f = x1 * x1 + x2 + 3 + x1 * x3
    exps = [e for e, _ in f.sorted_terms()]
    assert exps == [(0, 0, 0), (0, 1, 0), (1, 0, 1), (2, 0, 0)]


def test_representations_do_not_mix():
    p1 = MultiPoly.var(1, 3, rep="P")
    with pytest.raises(RepMismatch):
        x1 + p1
    with pytest.raises(RepMismatch):
        x1 * MultiPoly.var(1, 2)


def test_zero_coefficients_are_dropped():
    f = MultiPoly({(1, 0, 0): KappaScalar(0), (0, 1, 0): KAPPA}, 3)
    assert len(f) == 1


@given(x_polys(), x_polys())
def test_transposition_is_a_ring_homomorphism(f, g):
    s = lambda h: transpose_vars(h, 1, 3)  # noqa: E731
    assert s(f * g) == s(f) * s(g)
    assert s(f + g) == s(f) + s(g)
    assert s(s(f)) == f


@given(x_polys(max_degree=4))
def test_divided_difference_identity(f):
    d = divided_difference(f, 1, 2)
    assert (x1 - x2) * d == f - transpose_vars(f, 1, 2)
    assert divide_by_difference(f - transpose_vars(f, 1, 2), 1, 2) == d


@given(x_polys(), x_polys())
def test_leibniz_rule(f, g):
    d = lambda h: partial_derivative(h, 2)  # noqa: E731
    assert d(f * g) == d(f) * g + f * d(g)


def test_substitutions():
    f = x1 * x1 * x2 + x3
    assert substitute_zero(f, 1) == x3
    assert substitute_var(f, 1, 2) == x2**3 + x3


def test_evaluate_at_complex_point():
    f = x1 * x2 + x3
    v = evaluate(f, [GaussianKappa(1, 1), GaussianKappa(1, -1), GaussianKappa(KAPPA)])
    assert v == GaussianKappa(KAPPA + 2)


@given(x_polys())
def test_json_round_trip(f):
    assert from_json(to_json(f)) == f


def test_json_round_trip_p_rep():
    g = MultiPoly({(2, 1, 0): KAPPA / 3, (0, 0, 0): KappaScalar(mpq(-1, 2))}, 3, rep="P")
    assert from_json(to_json(g)) == g


def test_to_string():
    f = x1 * x1 * 2 + x3 * KAPPA
    assert to_string(f) == "(2)*x1^2 + (1*k)*x3"


@given(st.integers(1, 3), st.integers(1, 3))
def test_index_errors(i, j):
    if i == j:
        with pytest.raises(ValueError):
            transpose_vars(x1, i, j)
    with pytest.raises(IndexError):
        partial_derivative(x1, 4)
