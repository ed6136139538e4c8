import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from equivhilb.poly import (
    MultiPoly,
    NotDivisible,
    VarSet,
    VarSetMismatch,
    parse_poly,
    poly_arith,
    poly_gcd,
)

from conftest import VS3, nonzero_polys, small_polys

SYMS = sympy.symbols("s1 s2 t")


def to_sympy(p: MultiPoly):
    out = sympy.Integer(0)
    for exps, c in p.terms.items():
        term = sympy.Rational(c.numerator, c.denominator) if isinstance(c, Fraction) else sympy.Integer(c)
        for x, e in zip(SYMS, exps):
            term *= x**e
        out += term
    return sympy.expand(out)


def test_difference_of_squares():
    s = MultiPoly.var(VarSet.of("s"), "s")
    assert (1 - s) * (1 + s) == 1 - s**2


def test_add_zero_identity(svars):
    s1, s2, t = svars
    f = s1 * s2 - 3 * t + 1
    assert f + MultiPoly.zero(VS3) == f
    assert poly_arith(f, MultiPoly.zero(VS3), "add") == f


def test_hand_expansion_matches_at_random_points(svars):
    s1, s2, t = svars
    expanded = (1 - s1) * (1 - s2) - t
    assert str(expanded) == "s1*s2 - s1 - s2 - t + 1"
    rng = random.Random(5)
    for _ in range(5):
        a, b, c = (Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(3))
        assert expanded.subs("s1", a).subs("s2", b).subs("t", c).constant_term() == (1 - a) * (1 - b) - c


def test_mismatched_varsets_raise():
    a = MultiPoly.var(VarSet.of("s"), "s")
    b = MultiPoly.var(VarSet.of("u"), "u")
    with pytest.raises(VarSetMismatch):
        a + b


def test_gcd_examples(svars):
    s = MultiPoly.var(VarSet.of("s"), "s")
    assert poly_gcd(s**2 - 1, s - 1) == s - 1
    s1, s2, t = svars
    f = (1 - s1) * (1 - s2) - t
    assert poly_gcd(f, MultiPoly.one(VS3)) == 1
    a, b = s1 * s2 - s1, s1 * t
    g = poly_gcd(a, b)
    assert g == s1
    assert a.divides(a) and g.divides(a) and g.divides(b)
    assert a.divexact(g) == s2 - 1 and b.divexact(g) == t


def test_gcd_with_zero_is_normalized_input(svars):
    s1, _, t = svars
    assert poly_gcd(-4 * s1 + 2 * t, MultiPoly.zero(VS3)) == 2 * s1 - t
    assert poly_gcd(MultiPoly.zero(VS3), MultiPoly.zero(VS3)).is_zero()


def test_divexact_rejects_remainder(svars):
    s1, s2, _ = svars
    with pytest.raises(NotDivisible):
        (s1 + 1).divexact(s2 + 1)


@given(small_polys(), small_polys(), small_polys())
def test_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a - a == 0


@given(small_polys(), small_polys())
def test_arithmetic_agrees_with_sympy(a, b):
    assert to_sympy(a * b) == sympy.expand(to_sympy(a) * to_sympy(b))
    assert to_sympy(a - b) == sympy.expand(to_sympy(a) - to_sympy(b))


@given(nonzero_polys(), nonzero_polys())
def test_product_divides_back(a, b):
    assert (a * b).divexact(b) == a


@given(nonzero_polys(max_terms=3), nonzero_polys(max_terms=3), nonzero_polys(max_terms=3))
def test_gcd_contains_common_factor(a, b, g):
    h = poly_gcd(a * g, b * g)
    assert g.divides(h)
    assert h.divides(a * g) and h.divides(b * g)


@given(nonzero_polys(max_terms=3), nonzero_polys(max_terms=3))
def test_gcd_agrees_with_sympy_up_to_unit(a, b):
    ours = to_sympy(poly_gcd(a, b))
    theirs = sympy.gcd(to_sympy(a), to_sympy(b))
    ratio = sympy.cancel(ours / theirs)
    assert ratio.is_number and ratio != 0


@given(small_polys(max_coeff=9))
def test_render_parse_round_trip(p):
    assert parse_poly(str(p), VS3) == p


def test_rational_coefficients_render():
    s = MultiPoly.var(VarSet.of("s"), "s")
    p = Fraction(1, 2) * s - 3 * s**2
    assert str(p) == "-3*s^2 + 1/2*s"
    assert parse_poly(str(p), VarSet.of("s")) == p


@given(small_polys())
def test_subs_then_evaluate_consistent(p):
    point = {"s1": 0.3, "s2": -0.2, "t": 0.7}
    partial = p.subs("s1", Fraction(3, 10))
    assert abs(partial.evaluate(point) - p.evaluate(point)) < 1e-9


def test_graded_lex_order_of_terms(svars):
    s1, s2, t = svars
    p = t + s1**2 + s2 * t + 1 + s1
    assert str(p) == "s1^2 + s2*t + s1 + t + 1"
