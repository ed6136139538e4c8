"""Deterministic finite automaton recognizing the word language.

States of the constructed machine:

* ``PJ(j)``, ``0 <= j <= q`` -- no zeta read yet, last tau was ``tau_j``
  (``j = 0``: nothing read);
* ``PI(i)`` -- last letter was ``zeta_i``;
* ``PIC(i, C, k)`` -- after ``zeta_i`` a nonempty run of taus with support
  ``C`` was read, the last one ``tau_k``.

The chain ``C`` is the support of the tau-run read so far, so it grows
while the run is processed: ``tau_k`` with ``k > max(C)`` moves to
``PIC(i, C + (k,), k)``, ``tau_{max C}`` loops. This keeps the transition
map deterministic. States with ``k != max(C)`` are part of the state set
but unreachable.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Hashable, Iterable, Mapping, Sequence

from .language import Letter, Tau, Zeta, alphabet, check_letter, letter_key


@dataclass(frozen=True, order=True)
class PJ:
    j: int

    def __str__(self) -> str:
        return f"p{self.j}"


@dataclass(frozen=True, order=True)
class PI:
    i: tuple[int, ...]

    def __str__(self) -> str:
        return "p(" + ",".join(map(str, self.i)) + ")"


@dataclass(frozen=True, order=True)
class PIC:
    i: tuple[int, ...]
    C: tuple[int, ...]
    k: int

    def __post_init__(self):
        if self.k not in self.C:
            raise ValueError(f"{self.k} is not in chain {self.C}")

    def __str__(self) -> str:
        return "p(" + ",".join(map(str, self.i)) + ";{" + ",".join(map(str, self.C)) + "}," + str(self.k) + ")"


def chains(q: int) -> list[tuple[int, ...]]:
    """Nonempty increasing chains in 1..q, ordered by length then lexicographically."""
    return [C for r in range(1, q + 1) for C in itertools.combinations(range(1, q + 1), r)]


def _state_key(p) -> tuple:
    if isinstance(p, PJ):
        return (0, p.j)
    if isinstance(p, PI):
        return (1, p.i)
    if isinstance(p, PIC):
        return (2, p.i, len(p.C), p.C, p.k)
    return (3, p)


@dataclass(frozen=True)
class Dfa:
    """Partial deterministic automaton; a missing transition halts and rejects."""

    q: int
    c: tuple[int, ...]
    states: tuple
    start: Hashable
    accepting: frozenset
    delta: Mapping[tuple[Hashable, Letter], Hashable] = field(repr=False)

    def __post_init__(self):
        sset = set(self.states)
        if len(sset) != len(self.states):
            raise ValueError("duplicate states")
        if self.start not in sset:
            raise ValueError(f"start state {self.start} not among states")
        if not self.accepting <= sset:
            raise ValueError("accepting states must be states")
        for (p, a), r in self.delta.items():
            if p not in sset or r not in sset:
                raise ValueError(f"transition {p} --{a}--> {r} leaves the state set")

    @property
    def letters(self) -> list[Letter]:
        return alphabet(self.q, self.c)

    def step(self, p, a: Letter):
        return self.delta.get((p, a))

    def run(self, w: Iterable[Letter]):
        """Final state, or ``None`` if the machine halts."""
        p = self.start
        for a in w:
            p = self.delta.get((p, a))
            if p is None:
                return None
        return p

    def transitions(self) -> list[tuple[Hashable, Letter, Hashable]]:
        """All transitions in deterministic (state, letter) order."""
        index = {p: n for n, p in enumerate(self.states)}
        return sorted(
            ((p, a, r) for (p, a), r in self.delta.items()),
            key=lambda tr: (index[tr[0]], letter_key(tr[1])),
        )


def build_automaton(q: int, c: Sequence[int]) -> Dfa:
    c = tuple(c)
    if q < 1 or len(c) != q or any(cj < 1 for cj in c):
        raise ValueError(f"need q >= 1 and q positive state counts, got q={q}, c={c}")
    idx = list(itertools.product(*(range(1, cj + 1) for cj in c)))
    ch = chains(q)
    states: list = [PJ(j) for j in range(q + 1)]
    states += [PI(i) for i in idx]
    states += [PIC(i, C, k) for i in idx for C in ch for k in C]
    accepting = frozenset(
        [PJ(j) for j in range(q + 1)] + [PI(i) for i in idx] + [PIC(i, C, C[-1]) for i in idx for C in ch]
    )
    delta: dict = {}
    for j in range(q + 1):
        # no zeta yet: taus weakly increase, any zeta moves on
        for jj in range(max(j, 1), q + 1):
            delta[(PJ(j), Tau(jj))] = PJ(jj)
        for i in idx:
            delta[(PJ(j), Zeta(i))] = PI(i)
    for i in idx:
        for j in range(1, q + 1):
            delta[(PI(i), Tau(j))] = PIC(i, (j,), j)
        for i2 in idx:
            if all(x <= y for x, y in zip(i, i2)):
                delta[(PI(i), Zeta(i2))] = PI(i2)
        for C in ch:
            top = C[-1]
            p = PIC(i, C, top)
            delta[(p, Tau(top))] = p
            for k in range(top + 1, q + 1):
                delta[(p, Tau(k))] = PIC(i, C + (k,), k)
            for i2 in idx:
                if all(i[m - 1] <= i2[m - 1] for m in range(1, q + 1) if m not in C):
                    delta[(p, Zeta(i2))] = PI(i2)
    return Dfa(q, c, tuple(states), PJ(0), accepting, delta)


def accepts(dfa: Dfa, w: Iterable[Letter]) -> bool:
    w = tuple(w)
    for a in w:
        check_letter(a, dfa.q, dfa.c)
    p = dfa.run(w)
    return p is not None and p in dfa.accepting


# -- minimization -------------------------------------------------------------------


def _reachable(dfa: Dfa) -> list:
    letters = dfa.letters
    seen = {dfa.start}
    order = [dfa.start]
    queue = deque([dfa.start])
    while queue:
        p = queue.popleft()
        for a in letters:
            r = dfa.delta.get((p, a))
            if r is not None and r not in seen:
                seen.add(r)
                order.append(r)
                queue.append(r)
    return order


def _coreachable(dfa: Dfa, among: Iterable) -> set:
    among = set(among)
    back: dict = {}
    for (p, a), r in dfa.delta.items():
        if p in among and r in among:
            back.setdefault(r, []).append(p)
    live = {p for p in among if p in dfa.accepting}
    queue = deque(live)
    while queue:
        r = queue.popleft()
        for p in back.get(r, ()):
            if p not in live:
                live.add(p)
                queue.append(p)
    return live


def minimize(dfa: Dfa, labels: Callable[[Hashable], Hashable] | None = None) -> Dfa:
    """Minimal partial DFA for the same language (Moore partition refinement).

    Unreachable states and states from which no accepting state is reachable
    are dropped (the latter all behave like the implicit sink). The result
    has integer states numbered in breadth-first order from the start state,
    so minimizing a minimal automaton returns an identical object.

    ``labels`` optionally assigns an extra observable to each state; states
    with different labels are never merged (minimization of the automaton
    with state outputs rather than of the bare language).
    """
    letters = dfa.letters
    reach = _reachable(dfa)
    live = _coreachable(dfa, reach)
    if dfa.start not in live:
        return Dfa(dfa.q, dfa.c, (0,), 0, frozenset(), {})
    states = [p for p in reach if p in live]

    def label(p):
        return (p in dfa.accepting, labels(p) if labels else None)

    # block ids: dense ints assigned in first-seen order
    ids: dict = {}
    block = {p: ids.setdefault(label(p), len(ids)) for p in states}
    while True:
        ids = {}
        new = {}
        for p in states:
            sig = (block[p],) + tuple(
                block.get(dfa.delta.get((p, a)), -1) if dfa.delta.get((p, a)) in live else -1
                for a in letters
            )
            new[p] = ids.setdefault(sig, len(ids))
        if len(ids) == len(set(block.values())):
            block = new
            break
        block = new

    # canonical numbering: BFS from start over letters in fixed order
    number: dict = {block[dfa.start]: 0}
    rep: dict = {block[p]: p for p in reversed(states)}
    queue = deque([block[dfa.start]])
    delta = {}
    while queue:
        b = queue.popleft()
        p = rep[b]
        for a in letters:
            r = dfa.delta.get((p, a))
            if r is None or r not in live:
                continue
            rb = block[r]
            if rb not in number:
                number[rb] = len(number)
                queue.append(rb)
            delta[(number[b], a)] = number[rb]
    acc = frozenset(number[block[p]] for p in states if p in dfa.accepting)
    return Dfa(dfa.q, dfa.c, tuple(range(len(number))), 0, acc, delta)


def entered_by_zeta(p) -> bool:
    """Label for :func:`minimize` that keeps zeta-entered states apart."""
    return isinstance(p, PI)


def rename_states(dfa: Dfa, mapping: Mapping) -> Dfa:
    return Dfa(
        dfa.q,
        dfa.c,
        tuple(mapping[p] for p in dfa.states),
        mapping[dfa.start],
        frozenset(mapping[p] for p in dfa.accepting),
        {(mapping[p], a): mapping[r] for (p, a), r in dfa.delta.items()},
    )


# -- export --------------------------------------------------------------------------


def _dot_id(p) -> str:
    return '"' + str(p).replace('"', '\\"') + '"'


def to_dot(dfa: Dfa, name: str = "automaton") -> str:
    """Graphviz digraph; accepting states drawn as double circles and all
    letters sharing an edge joined into one comma-separated label."""
    lines = [f"digraph {name} {{", "  rankdir=LR;", '  __start [shape=point, label=""];']
    for p in dfa.states:
        shape = "doublecircle" if p in dfa.accepting else "circle"
        lines.append(f"  {_dot_id(p)} [shape={shape}];")
    lines.append(f"  __start -> {_dot_id(dfa.start)};")
    edges: dict = {}
    order = []
    for p, a, r in dfa.transitions():
        if (p, r) not in edges:
            edges[(p, r)] = []
            order.append((p, r))
        edges[(p, r)].append(str(a))
    for p, r in order:
        lines.append(f'  {_dot_id(p)} -> {_dot_id(r)} [label="{", ".join(edges[(p, r)])}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_table(dfa: Dfa) -> str:
    """One ``state letter state`` line per transition, in fixed order."""
    head = [
        f"# states: {len(dfa.states)}",
        f"# start: {dfa.start}",
        "# accepting: " + " ".join(str(p) for p in dfa.states if p in dfa.accepting),
    ]
    return "\n".join(head + [f"{p}\t{a}\t{r}" for p, a, r in dfa.transitions()]) + "\n"


def state_count_formula(q: int, c: Sequence[int]) -> int:
    """(q + 1) + prod(c) + prod(c) * q * 2**(q - 1)."""
    pc = 1
    for cj in c:
        pc *= cj
    return (q + 1) + pc + pc * q * 2 ** (q - 1)
