"""Independent ground truth: Segre dimension counts, brute-force monomial
enumeration and a floating-point check of the roots-of-unity formula."""

from __future__ import annotations

import cmath
import itertools
import math
import random
from collections import Counter
from dataclasses import dataclass, field
from typing import Sequence

from .model import ReducedSpec
from .ratfunc import NumericPole, RatFunc, ratfunc_eval_numeric, series_expand


class EnumerationLimit(RuntimeError):
    pass


def binom(n: int, k: int) -> int:
    """Binomial coefficient by the multiplicative formula; zero unless 0 <= k <= n,
    except binom(-1, 0) = 1."""
    if k < 0:
        return 0
    if k == 0:
        return 1
    if n < k:
        return 0
    out = 1
    for r in range(1, k + 1):
        out = out * (n - k + r) // r
    return out


@dataclass(frozen=True)
class DimensionQuery:
    c: tuple[int, ...]
    n: tuple[int, ...]
    d: int


def segre_dimension(qy: DimensionQuery) -> int:
    """prod_j binom(c_j n_j + d - 1, d)."""
    return math.prod(binom(cj * nj + qy.d - 1, qy.d) for cj, nj in zip(qy.c, qy.n))


def brute_force_monomials(c: Sequence[int], n: Sequence[int], d: int, cap: int = 2_000_000) -> int:
    """Number of distinct products of d generators prod_j y[j, i_j, k_j],
    (i, k) ranging over [c] x [n]."""
    gens = list(itertools.product(*(range(1, cj + 1) for cj in c), *(range(1, nj + 1) for nj in n)))
    q = len(c)
    work = math.comb(len(gens) + d - 1, d)
    if work > cap:
        raise EnumerationLimit(f"{work} multisets exceed cap {cap}")
    seen = set()
    for combo in itertools.combinations_with_replacement(gens, d):
        exps = Counter()
        for g in combo:
            for j in range(q):
                exps[(j, g[j], g[q + j])] += 1
        seen.add(frozenset(exps.items()))
    return len(seen)


def expected_coefficient(red: ReducedSpec, n: Sequence[int], d: int) -> int:
    """Dimension of the degree-d piece at n, including facets disjoint from T."""
    if any(nj == 0 for nj in n):
        return 0
    val = segre_dimension(DimensionQuery(red.cprime, tuple(n), d))
    for ff in red.nu_fixed:
        val *= binom(ff.states + d - 1, d)
    return val


@dataclass
class CellResult:
    n: tuple[int, ...]
    d: int
    expected: int
    actual: object

    @property
    def ok(self) -> bool:
        return self.expected == self.actual

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        n = ",".join(map(str, self.n))
        return f"{status} n=({n}) d={self.d} expected={self.expected} actual={self.actual}"


@dataclass
class SeriesReport:
    cells: list[CellResult] = field(default_factory=list)

    @property
    def mismatches(self) -> list[CellResult]:
        return [c for c in self.cells if not c.ok]

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def text(self) -> str:
        lines = [c.line() for c in self.cells]
        lines.append(f"series check: {len(self.cells) - len(self.mismatches)}/{len(self.cells)} cells pass")
        return "\n".join(lines) + "\n"


def check_series(red: ReducedSpec, H: RatFunc, nmax: Sequence[int], dmax: int) -> SeriesReport:
    """Compare every coefficient of s^n t^d in the box 0 <= n <= nmax, d <= dmax.

    Cells with some n_j = 0 must vanish; all others must equal the product of
    binomials.
    """
    q = red.q
    nmax = tuple(nmax)
    if len(nmax) != q:
        raise ValueError(f"nmax needs {q} entries")
    table = series_expand(H, nmax + (dmax,))
    report = SeriesReport()
    for n in itertools.product(*(range(b + 1) for b in nmax)):
        for d in range(dmax + 1):
            report.cells.append(CellResult(n, d, expected_coefficient(red, n, d), table[n + (d,)]))
    return report


def roots_formula(cprime: Sequence[int], w: Sequence[complex], t: complex) -> complex:
    """Roots-of-unity sum evaluated at s_j = w_j ** c_j (w_j plays s_j^(1/c_j))."""
    total = 0j
    for ms in itertools.product(*(range(1, cj + 1) for cj in cprime)):
        num = 1 + 0j
        den = 1 + 0j
        for cj, m, wj in zip(cprime, ms, w):
            x = cmath.exp(2j * math.pi * m / cj) * wj
            num *= x
            den *= 1 - x
        total += num / (den - t)
    return total / math.prod(cprime)


@dataclass
class RootsReport:
    max_error: float
    trials: int
    tol: float
    samples: list[tuple[tuple[complex, ...], complex, complex, complex]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.max_error <= self.tol

    def text(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} roots-of-unity check: {self.trials} samples, max |diff| = {self.max_error:.3e}, tol = {self.tol:.1e}\n"


def _disc(rng: random.Random, radius: float) -> complex:
    r = radius * math.sqrt(rng.random())
    return cmath.rect(r, 2 * math.pi * rng.random())


def check_roots_of_unity(
    red: ReducedSpec, H: RatFunc, trials: int = 20, tol: float = 1e-9, seed: int = 0, max_retries: int = 100
) -> RootsReport:
    """Evaluate H and the explicit roots-of-unity sum at random small points."""
    if red.nu_fixed:
        raise ValueError("roots-of-unity formula covers models without fixed facets")
    rng = random.Random(seed)
    names = H.varset.names
    report = RootsReport(0.0, 0, tol)
    retries = 0
    while report.trials < trials:
        w = [_disc(rng, 0.3) for _ in red.cprime]
        t = _disc(rng, 0.2)
        s = [wj**cj for wj, cj in zip(w, red.cprime)]
        point = dict(zip(names, s + [t]))
        try:
            got = ratfunc_eval_numeric(H, point)
        except NumericPole:
            retries += 1
            if retries > max_retries:
                raise
            continue
        want = roots_formula(red.cprime, w, t)
        report.trials += 1
        report.max_error = max(report.max_error, abs(got - want))
        report.samples.append((tuple(s), t, got, want))
    return report
