import itertools
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from equivhilb.model import FixedFacet, ReducedSpec
from equivhilb.oracle import (
    DimensionQuery,
    EnumerationLimit,
    binom,
    brute_force_monomials,
    check_roots_of_unity,
    check_series,
    roots_formula,
    segre_dimension,
)
from equivhilb.poly import MultiPoly
from equivhilb.ratfunc import RatFunc
from equivhilb.transfer import equiv_hilbert, series_varset


@given(st.integers(-1, 30), st.integers(-2, 30))
def test_binom_matches_math_comb(n, k):
    expect = 1 if k == 0 else (comb(n, k) if n >= 0 and k >= 0 else 0)
    assert binom(n, k) == expect


def test_segre_examples():
    assert segre_dimension(DimensionQuery((1, 1), (2, 2), 1)) == 4
    assert segre_dimension(DimensionQuery((3, 2), (4, 1), 0)) == 1
    assert segre_dimension(DimensionQuery((2, 2), (1, 1), 2)) == 9


def test_brute_force_examples():
    assert brute_force_monomials((1, 1), (2, 2), 1) == 4
    assert brute_force_monomials((2, 3), (1, 2), 0) == 1
    assert brute_force_monomials((1,), (2,), 2) == 3
    assert brute_force_monomials((2, 2), (1, 1), 2) == 9
    with pytest.raises(EnumerationLimit):
        brute_force_monomials((3, 3), (3, 3), 6, cap=1000)


@pytest.mark.parametrize(
    "c,n,d",
    [(c, n, d) for c in [(1,), (2,), (1, 2), (2, 2)] for n in itertools.product(range(1, 3), repeat=len(c)) for d in range(4)],
)
def test_brute_force_equals_segre(c, n, d):
    assert brute_force_monomials(c, n, d) == segre_dimension(DimensionQuery(c, n, d))


def independence_H():
    vs = series_varset(2)
    s1, s2, t = (MultiPoly.var(vs, x) for x in vs.names)
    return RatFunc(s1 * s2, (1 - s1) * (1 - s2) - t)


def test_check_series_passes_on_closed_form():
    report = check_series(ReducedSpec((1, 1)), independence_H(), (4, 4), 4)
    assert report.passed
    assert len(report.cells) == 5 * 5 * 5
    assert report.text().splitlines()[-1] == "series check: 125/125 cells pass"


def test_check_series_catches_injected_fault():
    H = independence_H()
    bad = H + RatFunc.var(H.varset, "t")
    report = check_series(ReducedSpec((1, 1)), bad, (2, 2), 2)
    assert not report.passed
    assert [(c.n, c.d) for c in report.mismatches] == [((0, 0), 1)]
    assert report.mismatches[0].line() == "FAIL n=(0,0) d=1 expected=0 actual=1"


def test_check_series_on_ex55():
    assert check_series(ReducedSpec((2, 2)), equiv_hilbert((2, 2)), (4, 4), 4).passed


def test_expected_coefficient_uses_fixed_facets():
    red = ReducedSpec((1,), (FixedFacet((1, 2), 2),))
    vs = series_varset(1)
    s, t = MultiPoly.var(vs, "s1"), MultiPoly.var(vs, "t")
    wrong = RatFunc(s, 1 - s - t)
    assert not check_series(red, wrong, (2,), 2).passed


def test_roots_formula_reduces_to_closed_form():
    w, t = (0.2 + 0.1j, -0.15j), 0.05
    s1, s2 = w
    assert roots_formula((1, 1), w, t) == pytest.approx(s1 * s2 / ((1 - s1) * (1 - s2) - t))


@pytest.mark.parametrize("cprime", [(1,), (3,), (1, 1), (2, 2), (2, 1), (1, 1, 1)])
def test_roots_of_unity_agrees(cprime):
    report = check_roots_of_unity(ReducedSpec(cprime), equiv_hilbert(cprime), trials=20, tol=1e-9)
    assert report.passed, report.text()
    assert report.trials == 20


def test_roots_of_unity_zero_tolerance_fails():
    report = check_roots_of_unity(ReducedSpec((2, 2)), equiv_hilbert((2, 2)), trials=20, tol=0.0)
    assert not report.passed


def test_roots_of_unity_detects_wrong_function():
    report = check_roots_of_unity(ReducedSpec((2, 2)), equiv_hilbert((1, 1)), trials=5)
    assert not report.passed
    assert report.text().startswith("FAIL")
