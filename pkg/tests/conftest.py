import hypothesis.strategies as st
import pytest
from hypothesis import settings

from equivhilb.poly import MultiPoly, VarSet

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

VS3 = VarSet(("s1", "s2", "t"))


@st.composite
def small_polys(draw, varset=VS3, max_terms=4, max_deg=2, max_coeff=4):
    """Sparse polynomials with small integer coefficients."""
    n = draw(st.integers(0, max_terms))
    p = MultiPoly.zero(varset)
    for _ in range(n):
        exps = [draw(st.integers(0, max_deg)) for _ in varset.names]
        c = draw(st.integers(-max_coeff, max_coeff))
        p = p + MultiPoly.monomial(varset, exps, c)
    return p


def nonzero_polys(**kw):
    return small_polys(**kw).filter(lambda p: not p.is_zero())


@pytest.fixture
def vs3():
    return VS3


@pytest.fixture
def svars():
    return tuple(MultiPoly.var(VS3, n) for n in VS3.names)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
