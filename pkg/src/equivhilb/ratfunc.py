"""Rational functions in canonical form, truncated expansion, coefficient extraction."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .poly import Coeff, MultiPoly, VarSet, _norm, parse_poly, poly_gcd


class PoleAtOrigin(ArithmeticError):
    pass


class NumericPole(ArithmeticError):
    pass


class RatFunc:
    """Quotient of two polynomials, always stored in canonical form.

    Canonical means: ``gcd(num, den) == 1``; ``den`` has integer coefficients
    with content 1 and positive graded-lex leading coefficient; zero is 0/1.
    Build instances with :func:`ratfunc_normalize` or the arithmetic operators.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: MultiPoly, den: MultiPoly | None = None):
        canon = ratfunc_normalize(num, den if den is not None else MultiPoly.one(num.varset))
        self.num, self.den = canon.num, canon.den

    @classmethod
    def _canonical(cls, num: MultiPoly, den: MultiPoly) -> "RatFunc":
        r = cls.__new__(cls)
        r.num, r.den = num, den
        return r

    @property
    def varset(self) -> VarSet:
        return self.num.varset

    @classmethod
    def const(cls, varset: VarSet, c) -> "RatFunc":
        return cls._canonical(MultiPoly.const(varset, c), MultiPoly.one(varset))

    @classmethod
    def var(cls, varset: VarSet, name) -> "RatFunc":
        return cls._canonical(MultiPoly.var(varset, name), MultiPoly.one(varset))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def _lift(self, other) -> "RatFunc":
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, MultiPoly):
            return RatFunc(other)
        if isinstance(other, (int, Fraction)):
            return RatFunc.const(self.varset, other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return ratfunc_normalize(self.num + other.num, self.den)
        return ratfunc_normalize(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc._canonical(-self.num, self.den)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return ratfunc_normalize(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if other.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return ratfunc_normalize(self.num * other.den, self.den * other.num)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatFunc):
            other = self._lift(other)
            if other is NotImplemented:
                return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def cross_equal(self, other: "RatFunc") -> bool:
        """Equality by cross-multiplication, independent of canonical form."""
        return self.num * other.den == other.num * self.den

    def subs(self, var, value) -> "RatFunc":
        den = self.den.subs(var, value)
        if den.is_zero():
            raise ZeroDivisionError(f"denominator vanishes at {var}={value}")
        return ratfunc_normalize(self.num.subs(var, value), den)

    def rename(self, varset: VarSet, mapping=None) -> "RatFunc":
        return ratfunc_normalize(self.num.rename(varset, mapping), self.den.rename(varset, mapping))

    def __str__(self) -> str:
        return f"({self.num})/({self.den})"

    def __repr__(self) -> str:
        return f"RatFunc({self}, vars={self.varset.names})"


def ratfunc_normalize(num: MultiPoly, den: MultiPoly) -> RatFunc:
    num._check(den)
    if den.is_zero():
        raise ZeroDivisionError("zero denominator")
    vs = num.varset
    if num.is_zero():
        return RatFunc._canonical(MultiPoly.zero(vs), MultiPoly.one(vs))
    if not den.is_constant():
        g = poly_gcd(num, den)
        if not g.is_constant():
            num = num.divexact(g)
            den = den.divexact(g)
    c = den.rational_content()
    if den.leading_coefficient() < 0:
        c = -c
    c = _norm(c)
    return RatFunc._canonical(num.scale_div(c), den.scale_div(c))


def parse_ratfunc(text: str, varset: VarSet) -> RatFunc:
    """Inverse of ``str(RatFunc)``: ``(num)/(den)``."""
    text = text.strip()
    depth = 0
    for pos, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "/" and depth == 0:
            return ratfunc_normalize(parse_poly(text[:pos], varset), parse_poly(text[pos + 1 :], varset))
    return RatFunc(parse_poly(text, varset))


# -- truncated expansion -------------------------------------------------------


@dataclass(frozen=True)
class SeriesTable:
    varset: VarSet
    bound: tuple[int, ...]
    coeffs: Mapping[tuple[int, ...], Coeff] = field(default_factory=dict)

    def __getitem__(self, exps: Sequence[int]) -> Coeff:
        exps = tuple(exps)
        if len(exps) != len(self.bound) or any(e > b or e < 0 for e, b in zip(exps, self.bound)):
            raise IndexError(f"{exps} outside truncation box {self.bound}")
        return self.coeffs.get(exps, 0)

    def __add__(self, other: "SeriesTable") -> "SeriesTable":
        if self.varset != other.varset or self.bound != other.bound:
            raise ValueError("incompatible series tables")
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = _norm(out.get(k, 0) + c)
        return SeriesTable(self.varset, self.bound, {k: c for k, c in out.items() if c})

    def __mul__(self, other: "SeriesTable") -> "SeriesTable":
        if self.varset != other.varset or self.bound != other.bound:
            raise ValueError("incompatible series tables")
        out: dict[tuple[int, ...], Coeff] = {}
        for ka, ca in self.coeffs.items():
            for kb, cb in other.coeffs.items():
                k = tuple(x + y for x, y in zip(ka, kb))
                if all(e <= b for e, b in zip(k, self.bound)):
                    out[k] = out.get(k, 0) + ca * cb
        return SeriesTable(self.varset, self.bound, {k: _norm(c) for k, c in out.items() if c})

    def __eq__(self, other) -> bool:
        if not isinstance(other, SeriesTable):
            return NotImplemented
        return (
            self.varset == other.varset
            and self.bound == other.bound
            and {k: c for k, c in self.coeffs.items() if c} == {k: c for k, c in other.coeffs.items() if c}
        )

    def as_poly(self) -> MultiPoly:
        return MultiPoly(self.varset, dict(self.coeffs))


def _truncate(p: MultiPoly, bound: Sequence[int]) -> dict[tuple[int, ...], Coeff]:
    return {e: c for e, c in p.terms.items() if all(x <= b for x, b in zip(e, bound))}


def series_expand(f: RatFunc, bound: Sequence[int] | Mapping[str, int]) -> SeriesTable:
    """Taylor coefficients of ``f`` at the origin inside the box ``e <= bound``."""
    vs = f.varset
    if isinstance(bound, Mapping):
        bound = tuple(bound.get(n, 0) for n in vs.names)
    bound = tuple(bound)
    if len(bound) != len(vs):
        raise ValueError(f"bound {bound} does not match variables {vs.names}")
    d0 = f.den.constant_term()
    if not d0:
        raise PoleAtOrigin("not expandable at origin: denominator has zero constant term")
    num = _truncate(f.num, bound)
    den = [(e, c) for e, c in _truncate(f.den, bound).items() if any(e)]
    out: dict[tuple[int, ...], Coeff] = {}
    # total-degree order guarantees every e - e' with e' > 0 is already known
    cells = sorted(itertools.product(*(range(b + 1) for b in bound)), key=sum)
    for e in cells:
        acc = num.get(e, 0)
        for de, dc in den:
            prev = tuple(x - y for x, y in zip(e, de))
            if min(prev) < 0:
                continue
            pc = out.get(prev)
            if pc:
                acc -= dc * pc
        if acc:
            v = _norm(Fraction(acc) / d0) if not (type(acc) is int and acc % d0 == 0) else acc // d0
            if v:
                out[e] = v
    return SeriesTable(vs, bound, out)


def coeff_extract(f: RatFunc, var: str | int, k: int) -> RatFunc:
    """Coefficient of ``var**k`` in the expansion of ``f`` in ``var``.

    The result is a rational function in the other variables (same VarSet,
    ``var`` no longer occurring). Computed by ``k + 1`` rounds of: take the
    value at ``var = 0``, subtract it, divide by ``var``.
    """
    if k < 0:
        raise ValueError("order must be non-negative")
    i = f.varset.index(var) if isinstance(var, str) else var
    if f.den.subs(i, 0).is_zero():
        raise PoleAtOrigin(f"pole at origin in {f.varset.names[i]}")
    g = f
    while True:
        at0 = g.subs(i, 0)
        if k == 0:
            return at0
        rest = g - at0
        g = RatFunc._canonical(rest.num.div_var(i), rest.den) if not rest.is_zero() else rest
        k -= 1


def ratfunc_eval_numeric(f: RatFunc, point: Mapping[str, complex] | Sequence[complex]) -> complex:
    den = f.den.evaluate(point)
    if abs(den) < 1e-12:
        raise NumericPole(f"denominator {abs(den):.3e} at sample point")
    return f.num.evaluate(point) / den
