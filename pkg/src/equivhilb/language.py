"""Words over the letters tau_j / zeta_i and their monomial encodings.

A word with ``n_j`` copies of ``tau_j`` and ``d`` zeta letters that lies in
the language corresponds to exactly one degree-``d`` monomial of the toric
algebra generated by ``prod_j y[j, i_j, k_j]`` with ``k_j <= n_j + 1``.
"""

from __future__ import annotations

import itertools
import math
import re
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, Union


class NotInLanguage(ValueError):
    pass


class NotInMonA(ValueError):
    """Monomial does not factor into generators prod_j y[j, i_j, k_j]."""


class EnumerationLimit(RuntimeError):
    pass


@dataclass(frozen=True, order=True)
class Tau:
    j: int

    def __str__(self) -> str:
        return f"t{self.j}"


@dataclass(frozen=True, order=True)
class Zeta:
    i: tuple[int, ...]

    def __str__(self) -> str:
        return "z(" + ",".join(map(str, self.i)) + ")"


Letter = Union[Tau, Zeta]
Word = tuple  # tuple[Letter, ...]


def letter_key(a: Letter) -> tuple:
    """tau_1 < ... < tau_q < zeta_i (zetas in lexicographic index order)."""
    if isinstance(a, Tau):
        return (0, (a.j,))
    return (1, a.i)


def alphabet(q: int, c: Sequence[int]) -> list[Letter]:
    """All letters in the fixed output order."""
    if len(c) != q:
        raise ValueError(f"c={tuple(c)} must have length q={q}")
    taus: list[Letter] = [Tau(j) for j in range(1, q + 1)]
    zetas: list[Letter] = [Zeta(i) for i in itertools.product(*(range(1, cj + 1) for cj in c))]
    return taus + zetas


def check_letter(a: Letter, q: int, c: Sequence[int]) -> None:
    if isinstance(a, Tau):
        if not 1 <= a.j <= q:
            raise ValueError(f"{a} out of range for q={q}")
    elif isinstance(a, Zeta):
        if len(a.i) != q or any(not 1 <= x <= cj for x, cj in zip(a.i, c)):
            raise ValueError(f"{a} out of range for c={tuple(c)}")
    else:
        raise TypeError(f"not a letter: {a!r}")


_TOKEN = re.compile(r"t(\d+)|z\(([\d,\s]*)\)")


def parse_word(text: str) -> Word:
    """``"t1 t2 z(1,2) t2 z(1,1) t1"`` -> word. The empty string is the empty word."""
    letters = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m:
            raise ValueError(f"cannot parse word at column {pos}: {text[pos:]!r}")
        if m.group(1) is not None:
            letters.append(Tau(int(m.group(1))))
        else:
            letters.append(Zeta(tuple(int(x) for x in m.group(2).split(","))))
        pos = m.end()
    return tuple(letters)


def format_word(w: Iterable[Letter]) -> str:
    return " ".join(map(str, w))


# -- membership -------------------------------------------------------------------


def is_in_L(w: Sequence[Letter], q: int, c: Sequence[int]) -> bool:
    """Direct membership test.

    Condition (1): every adjacent ``tau_i tau_j`` has ``i <= j``.
    Condition (2): for consecutive zeta letters and each coordinate ``j`` such
    that no ``tau_j`` lies between them, the ``j``-th indices weakly increase.
    """
    prev_tau = None
    last_zeta = None
    seen: set[int] = set()
    for a in w:
        check_letter(a, q, c)
        if isinstance(a, Tau):
            if prev_tau is not None and prev_tau > a.j:
                return False
            prev_tau = a.j
            seen.add(a.j)
        else:
            prev_tau = None
            if last_zeta is not None:
                for j in range(q):
                    if (j + 1) not in seen and last_zeta[j] > a.i[j]:
                        return False
            last_zeta = a.i
            seen = set()
    return True


# -- canonical form ---------------------------------------------------------------


@dataclass(frozen=True)
class CanonicalWord:
    """``tau^{k_1} zeta_{i_1} tau^{k_2} ... zeta_{i_d} tau^{k_{d+1}}``."""

    k_vectors: tuple[tuple[int, ...], ...]
    i_tuples: tuple[tuple[int, ...], ...]

    @property
    def d(self) -> int:
        return len(self.i_tuples)

    def __post_init__(self):
        if len(self.k_vectors) != len(self.i_tuples) + 1:
            raise ValueError("need exactly d+1 tau blocks for d zeta letters")
        for l in range(1, self.d):
            k = self.k_vectors[l]
            for j, kj in enumerate(k):
                if kj == 0 and self.i_tuples[l - 1][j] > self.i_tuples[l][j]:
                    raise ValueError(f"monotonicity violated at block {l + 1}, coordinate {j + 1}")


def to_canonical(w: Sequence[Letter], q: int, c: Sequence[int]) -> CanonicalWord:
    if not is_in_L(w, q, c):
        raise NotInLanguage(format_word(w))
    ks: list[tuple[int, ...]] = []
    its: list[tuple[int, ...]] = []
    cur = [0] * q
    for a in w:
        if isinstance(a, Tau):
            cur[a.j - 1] += 1
        else:
            ks.append(tuple(cur))
            its.append(a.i)
            cur = [0] * q
    ks.append(tuple(cur))
    return CanonicalWord(tuple(ks), tuple(its))


def tau_power(k: Sequence[int]) -> list[Letter]:
    return [Tau(j + 1) for j, kj in enumerate(k) for _ in range(kj)]


def from_canonical(cw: CanonicalWord) -> Word:
    out: list[Letter] = []
    for k, i in zip(cw.k_vectors, cw.i_tuples):
        out += tau_power(k)
        out.append(Zeta(i))
    out += tau_power(cw.k_vectors[-1])
    return tuple(out)


def tau_counts(w: Sequence[Letter], q: int) -> tuple[int, ...]:
    n = [0] * q
    for a in w:
        if isinstance(a, Tau):
            n[a.j - 1] += 1
    return tuple(n)


def zeta_count(w: Sequence[Letter]) -> int:
    return sum(isinstance(a, Zeta) for a in w)


# -- monomials ----------------------------------------------------------------------


class YMonomial:
    """Monomial in the variables y[j, i, k]; exponents keyed by ``(j, i, k)``."""

    __slots__ = ("exps",)

    def __init__(self, exps: dict[tuple[int, int, int], int] | None = None):
        self.exps = {v: e for v, e in (exps or {}).items() if e}

    @classmethod
    def from_factors(cls, factors: Iterable[tuple[int, int, int]]) -> "YMonomial":
        return cls(dict(Counter(factors)))

    def __mul__(self, other: "YMonomial") -> "YMonomial":
        out = dict(self.exps)
        for v, e in other.exps.items():
            out[v] = out.get(v, 0) + e
        return YMonomial(out)

    def shift(self, j: int) -> "YMonomial":
        """The shift operator T_j: k -> k + 1 on variables with first index j."""
        return YMonomial({(l, i, k + 1 if l == j else k): e for (l, i, k), e in self.exps.items()})

    def degree(self) -> int:
        return sum(self.exps.values())

    def __eq__(self, other) -> bool:
        return isinstance(other, YMonomial) and self.exps == other.exps

    def __hash__(self) -> int:
        return hash(frozenset(self.exps.items()))

    def __str__(self) -> str:
        if not self.exps:
            return "1"
        parts = []
        for (j, i, k) in sorted(self.exps):
            e = self.exps[(j, i, k)]
            parts.append(f"y[{j},{i},{k}]" + (f"^{e}" if e > 1 else ""))
        return "*".join(parts)

    __repr__ = __str__


_YVAR = re.compile(r"y\[(\d+),(\d+),(\d+)\](?:\^(\d+))?")


def parse_monomial(text: str) -> YMonomial:
    text = text.replace(" ", "")
    if text in ("", "1"):
        return YMonomial()
    exps: dict[tuple[int, int, int], int] = {}
    for factor in text.split("*"):
        m = _YVAR.fullmatch(factor)
        if not m:
            raise ValueError(f"cannot parse monomial factor {factor!r}")
        v = (int(m.group(1)), int(m.group(2)), int(m.group(3)))
        exps[v] = exps.get(v, 0) + (int(m.group(4)) if m.group(4) else 1)
    return YMonomial(exps)


def word_to_monomial(w: Sequence[Letter], q: int, a: Sequence[int] | None = None) -> YMonomial:
    """The map m (or its variant with exponents ``a`` on each zeta generator).

    Processing from the left, a zeta letter contributes y[j, i_j, 1 + #tau_j
    before it]: every tau_j to its left applies one shift T_j to it.
    """
    a = tuple(a) if a is not None else (1,) * q
    before = [0] * q
    exps: dict[tuple[int, int, int], int] = {}
    for letter in w:
        if isinstance(letter, Tau):
            before[letter.j - 1] += 1
        else:
            for j in range(q):
                v = (j + 1, letter.i[j], before[j] + 1)
                exps[v] = exps.get(v, 0) + a[j]
    return YMonomial(exps)


Generator = tuple[tuple[int, ...], tuple[int, ...]]  # (i, k)


def monomial_normal_form(mono: YMonomial, q: int, a: Sequence[int] | None = None) -> list[Generator]:
    """Sort each y_j-block by (k, i) and read off generators position by position."""
    a = tuple(a) if a is not None else (1,) * q
    blocks: list[list[tuple[int, int]]] = [[] for _ in range(q)]
    for (j, i, k), e in sorted(mono.exps.items()):
        if not 1 <= j <= q:
            raise NotInMonA(f"y[{j},{i},{k}] has first index outside 1..{q}")
        if e % a[j - 1]:
            raise NotInMonA(f"exponent of y[{j},{i},{k}] is not a multiple of {a[j - 1]}")
        blocks[j - 1] += [(k, i)] * (e // a[j - 1])
    d = len(blocks[0])
    for j, b in enumerate(blocks):
        if len(b) != d:
            raise NotInMonA(
                f"block y[{j + 1},.,.] has {len(b)} factors but block y[1,.,.] has {d}; "
                f"first unmatched variable y[{j + 1},{b[-1][1] if b else '?'},{b[-1][0] if b else '?'}]"
            )
        b.sort()
    return [
        (tuple(blocks[j][l][1] for j in range(q)), tuple(blocks[j][l][0] for j in range(q)))
        for l in range(d)
    ]


def monomial_to_word(mono: YMonomial, n: Sequence[int], a: Sequence[int] | None = None) -> Word:
    """Preimage of ``mono`` in the words with ``n_j`` copies of ``tau_j``."""
    q = len(n)
    gens = monomial_normal_form(mono, q, a)
    prev = (1,) * q
    out: list[Letter] = []
    for i, k in gens:
        for j in range(q):
            if k[j] < 1 or k[j] > n[j] + 1:
                raise IndexError(f"index k={k[j]} of y[{j + 1},{i[j]},{k[j]}] outside 1..{n[j] + 1}")
        out += tau_power([k[j] - prev[j] for j in range(q)])
        out.append(Zeta(i))
        prev = k
    out += tau_power([n[j] + 1 - prev[j] for j in range(q)])
    return tuple(out)


# -- enumeration -------------------------------------------------------------------


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Weak compositions of ``total`` into ``parts`` parts."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _coordinate_options(nj: int, cj: int, d: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Per-coordinate (k-sequence, i-sequence) pairs allowed by the canonical form."""
    out = []
    for ks in _compositions(nj, d + 1):
        def fill(prefix: tuple[int, ...]):
            l = len(prefix)
            if l == d:
                out.append((ks, prefix))
                return
            lo = prefix[-1] if (l >= 1 and ks[l] == 0) else 1
            for v in range(lo, cj + 1):
                fill(prefix + (v,))

        fill(())
    return out


def count_Ln(n: Sequence[int], d: int, c: Sequence[int]) -> int:
    """|L_n| with d zeta letters, from the per-coordinate factorization."""
    return math.prod(len(_coordinate_options(nj, cj, d)) for nj, cj in zip(n, c))


def enumerate_Ln(n: Sequence[int], d: int, c: Sequence[int], limit: int = 200_000) -> list[Word]:
    """All words of the language with ``n_j`` taus of each kind and ``d`` zetas.

    Built from canonical forms; coordinates are independent, so the words are
    the product of per-coordinate choices.
    """
    q = len(n)
    if len(c) != q:
        raise ValueError("n and c must have equal length")
    per = [_coordinate_options(nj, cj, d) for nj, cj in zip(n, c)]
    total = math.prod(len(p) for p in per)
    if total > limit:
        raise EnumerationLimit(f"{total} words exceed limit {limit}")
    words = []
    for combo in itertools.product(*per):
        ks = tuple(tuple(combo[j][0][l] for j in range(q)) for l in range(d + 1))
        its = tuple(tuple(combo[j][1][l] for j in range(q)) for l in range(d))
        words.append(from_canonical(CanonicalWord(ks, its)))
    return words


def all_words(q: int, c: Sequence[int], max_len: int) -> Iterator[Word]:
    """Every word over the alphabet of length at most ``max_len``."""
    sigma = alphabet(q, c)
    for length in range(max_len + 1):
        yield from itertools.product(sigma, repeat=length)
