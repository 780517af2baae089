import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dunklharm.clifford import (
    CliffordPoly,
    blade_product,
    clifford_from_json,
    clifford_to_json,
    dirac,
    laplacian_componentwise,
    monogenic,
    monogenic_epsilon,
)
from dunklharm.dunkl import DunklContext
from dunklharm.polyengine import MultiPoly
from dunklharm.scalars import KAPPA
from dunklharm.verify import random_clifford

blades = st.lists(st.integers(1, 4), max_size=4, unique=True).map(lambda b: tuple(sorted(b)))


def test_generator_rules():
    assert blade_product((1,), (1,)) == (-1, ())
    assert blade_product((1,), (2,)) == (1, (1, 2))
    assert blade_product((2,), (1,)) == (-1, (1, 2))
    assert blade_product((1, 2), (1, 2)) == (-1, ())
    assert blade_product((), (1, 3)) == (1, (1, 3))


@given(blades, blades, blades)
def test_blade_product_associative(a, b, c):
    s1, ab = blade_product(a, b)
    s2, ab_c = blade_product(ab, c)
    t1, bc = blade_product(b, c)
    t2, a_bc = blade_product(a, bc)
    assert (s1 * s2, ab_c) == (t1 * t2, a_bc)


def test_blade_validation():
    x = MultiPoly.var(1, 3)
    with pytest.raises(ValueError):
        CliffordPoly(3, {(2, 1): x})
    with pytest.raises(ValueError):
        CliffordPoly(3, {(4,): x})


def test_dirac_of_linear(ctx2):
    x1 = MultiPoly.var(1, 2)
    out = dirac(ctx2, CliffordPoly.scalar(x1))
    assert out.component((1,)) == MultiPoly.constant(KAPPA + 1, 2)
    assert out.component((2,)) == MultiPoly.constant(-KAPPA, 2)


@pytest.mark.parametrize("seed", range(5))
def test_dirac_squares_to_minus_laplacian(ctx3, seed):
    f = random_clifford(random.Random(seed), 3, 4)
    assert dirac(ctx3, dirac(ctx3, f)) == -laplacian_componentwise(ctx3, f)


@pytest.mark.parametrize("N", [2, 3, 4])
def test_monogenics(N):
    ctx = DunklContext(N)
    for n in range(1, 6):
        assert dirac(ctx, monogenic(ctx, n)).is_zero()


def test_monogenic_epsilon(ctx3):
    assert monogenic_epsilon(ctx3, 3) == 1
    assert monogenic_epsilon(ctx3, 2) == (KAPPA * 2 + 1) / (KAPPA * 6 + 4)
    with pytest.raises(ValueError):
        monogenic_epsilon(ctx3, 0)


def test_wrong_epsilon_is_not_monogenic(ctx3):
    f = monogenic(ctx3, 2)
    g = CliffordPoly(3, {(): f.component(()), (1, 2): f.component((1, 2)).scale(2)})
    assert not dirac(ctx3, g).is_zero()


@pytest.mark.parametrize("seed", range(5))
def test_json_round_trip(seed):
    f = random_clifford(random.Random(seed), 3, 3)
    assert clifford_from_json(clifford_to_json(f)) == f
    zero = CliffordPoly(3, {})
    assert clifford_from_json(clifford_to_json(zero)) == zero
