"""Generating functions of weighted automata via the transfer-matrix method."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Mapping, Sequence

from .automaton import Dfa, build_automaton, minimize
from .language import Letter, Tau, Zeta
from .poly import MultiPoly, VarSet
from .ratfunc import RatFunc, ratfunc_normalize

log = logging.getLogger(__name__)


class SingularSystem(ArithmeticError):
    pass


@dataclass(frozen=True)
class TransitionMatrix:
    """0-1 matrix with entry (i, j) = 1 iff delta(state_j, a) = state_i.

    Stored by column: ``cols[j] = i``; at most one entry per column.
    """

    size: int
    cols: Mapping[int, int]

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return int(self.cols.get(j) == i)

    def matvec(self, x: Sequence) -> list:
        out = [0] * self.size
        for j, i in self.cols.items():
            out[i] += x[j]
        return out

    def to_dense(self) -> list[list[int]]:
        m = [[0] * self.size for _ in range(self.size)]
        for j, i in self.cols.items():
            m[i][j] = 1
        return m


def transition_matrices(dfa: Dfa) -> dict[Letter, TransitionMatrix]:
    index = {p: n for n, p in enumerate(dfa.states)}
    out = {}
    for a in dfa.letters:
        cols = {index[p]: index[dfa.delta[(p, a)]] for p in dfa.states if (p, a) in dfa.delta}
        out[a] = TransitionMatrix(len(dfa.states), cols)
    return out


def standard_weights(q: int, c: Sequence[int], varset: VarSet | None = None) -> dict[Letter, MultiPoly]:
    """tau_j -> s_j, every zeta -> t."""
    from .language import alphabet

    vs = varset or series_varset(q)
    out = {}
    for a in alphabet(q, c):
        name = f"s{a.j}" if isinstance(a, Tau) else "t"
        out[a] = MultiPoly.var(vs, name)
    return out


def series_varset(q: int, extra: Sequence[str] = ()) -> VarSet:
    return VarSet(tuple(f"s{j}" for j in range(1, q + 1)) + ("t",) + tuple(extra))


def _check_weights(weights: Mapping[Letter, MultiPoly]) -> VarSet:
    vs = None
    for a, w in weights.items():
        if len(w) != 1 or list(w.terms.values())[0] != 1:
            raise ValueError(f"weight of {a} must be a monomial, got {w}")
        if w.is_constant():
            raise ValueError(f"weight of {a} is 1; only the empty word may have weight 1")
        vs = vs or w.varset
        if w.varset != vs:
            raise ValueError("weights use different variable sets")
    if vs is None:
        raise ValueError("no weights given")
    return vs


def generating_function(dfa: Dfa, weights: Mapping[Letter, MultiPoly]) -> RatFunc:
    """Sum of weight(w) over all words accepted by ``dfa``, as a canonical RatFunc.

    With A = Id - sum_a weight(a) M_a, the sum equals u^T A^{-1} e_start, where u
    marks accepting states. We eliminate the bordered matrix [[A, e], [u^T, 0]]
    fraction-free: after all pivots of A are used, the corner entry is
    det[[A, e], [u^T, 0]] = -det(A) * u^T A^{-1} e_start.
    """
    vs = _check_weights(weights)
    reach = _reachable_states(dfa)
    idx = {p: n for n, p in enumerate(reach)}
    N = len(reach)
    one = MultiPoly.one(vs)
    zero = MultiPoly.zero(vs)
    # rows[i][j]: entry of A restricted to reachable states, plus border column N
    rows: list[dict[int, MultiPoly]] = [{i: one} for i in range(N)]
    for (p, a), r in dfa.delta.items():
        if p in idx and r in idx:
            i, j = idx[r], idx[p]
            w = weights[a]
            rows[i][j] = rows[i].get(j, zero) - w
            if rows[i][j].is_zero():
                del rows[i][j]
    rows[idx[dfa.start]][N] = one
    border = {idx[p]: one for p in reach if p in dfa.accepting}
    if not border:
        return RatFunc.const(vs, 0)
    rows.append(border)

    corner, det = _bareiss_bordered(rows, N)
    if det.constant_term() not in (1, -1):
        raise SingularSystem(f"unexpected determinant constant term {det.constant_term()}")
    return ratfunc_normalize(-corner, det)


def _reachable_states(dfa: Dfa) -> list:
    from .automaton import _reachable

    return _reachable(dfa)


def _bareiss_bordered(rows: list[dict[int, MultiPoly]], N: int) -> tuple[MultiPoly, MultiPoly]:
    """Fraction-free elimination pivoting only inside the leading N x N block.

    Returns (corner entry, last pivot), i.e. up to a common sign
    (det of the full bordered matrix, det of the block).
    """
    vs = next(iter(rows[0].values())).varset
    one = MultiPoly.one(vs)
    active_rows = set(range(N))
    active_cols = set(range(N))
    prev = one
    last_pivot = one
    for _ in range(N):
        # column counts for a Markowitz-style choice
        colcount: dict[int, int] = {}
        for r in active_rows:
            for j in rows[r]:
                if j in active_cols:
                    colcount[j] = colcount.get(j, 0) + 1
        best = None
        for r in active_rows:
            rn = sum(1 for j in rows[r] if j in active_cols)
            for j, v in rows[r].items():
                if j not in active_cols:
                    continue
                score = ((rn - 1) * (colcount[j] - 1), len(v), v.total_degree(), r, j)
                if best is None or score < best[0]:
                    best = (score, r, j)
        if best is None:
            raise SingularSystem("matrix is singular")
        _, pr, pc = best
        pivot = rows[pr][pc]
        prow = rows[pr]
        active_rows.discard(pr)
        active_cols.discard(pc)
        for r in list(active_rows) + [N]:
            row = rows[r]
            f = row.pop(pc, None)
            new: dict[int, MultiPoly] = {}
            keys = set(row) | (set(prow) if f is not None else set())
            for j in keys:
                if j == pc or (j not in active_cols and j != N):
                    continue
                v = row.get(j)
                acc = v * pivot if v is not None else None
                if f is not None and j in prow:
                    t = f * prow[j]
                    acc = -t if acc is None else acc - t
                if acc is None or acc.is_zero():
                    continue
                new[j] = acc.divexact(prev) if not prev.is_constant() else acc.scale_div(prev.constant_term())
            rows[r] = new
        prev = pivot
        last_pivot = pivot
    corner = rows[N].get(N, MultiPoly.zero(vs))
    return corner, last_pivot


def equiv_hilbert(cprime: Sequence[int], extra: Sequence[str] = (), do_minimize: bool = True) -> RatFunc:
    """Equivariant Hilbert series for q two-element facets with fixed-state counts ``cprime``.

    Returns s_1 ... s_q * P where P is the generating function of the language
    with tau_j -> s_j and zeta -> t. Variables are s_1..s_q, t followed by
    ``extra`` (unused here, reserved for the caller).
    """
    q = len(cprime)
    vs = series_varset(q, extra)
    dfa = build_automaton(q, cprime)
    if do_minimize:
        dfa = minimize(dfa)
    log.debug("automaton for c=%s has %d states", tuple(cprime), len(dfa.states))
    P = generating_function(dfa, standard_weights(q, cprime, vs))
    shift = MultiPoly.one(vs)
    for j in range(q):
        shift = shift.mul_var(j)
    return RatFunc._canonical(P.num * shift, P.den)
