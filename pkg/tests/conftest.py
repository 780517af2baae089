import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from dunklharm.dunkl import DunklContext
from dunklharm.polyengine import MultiPoly
from dunklharm.scalars import KappaPoly, KappaScalar, mpq

settings.register_profile(
    "exact",
    deadline=None,
    max_examples=40,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.function_scoped_fixture],
)
settings.load_profile("exact")

rationals = st.builds(mpq, st.integers(-20, 20), st.integers(1, 7))
nonzero_rationals = rationals.filter(lambda q: q != 0)


@st.composite
def kappa_scalars(draw, max_deg=2):
    num = [draw(rationals) for _ in range(draw(st.integers(0, max_deg + 1)))]
    den = [draw(rationals) for _ in range(draw(st.integers(0, max_deg)))] + [mpq(1)]
    return KappaScalar(KappaPoly(num), KappaPoly(den))


@st.composite
def x_polys(draw, nvars=3, max_degree=3, max_terms=4, symbolic=True):
    terms = {}
    for _ in range(draw(st.integers(0, max_terms))):
        d = draw(st.integers(0, max_degree))
        parts = draw(st.lists(st.integers(0, nvars - 1), min_size=d, max_size=d))
        e = [0] * nvars
        for p in parts:
            e[p] += 1
        c0, c1 = draw(rationals), (draw(st.integers(-2, 2)) if symbolic else 0)
        terms[tuple(e)] = KappaScalar.linear(c0, c1)
    return MultiPoly(terms, nvars, "X")


@pytest.fixture(scope="session")
def ctx2():
    return DunklContext(2)


@pytest.fixture(scope="session")
def ctx3():
    return DunklContext(3)


@pytest.fixture(scope="session")
def ctx4():
    return DunklContext(4)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
