"""Hierarchical models with varying coordinates, and the series pipeline."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Sequence

from .poly import VarSet
from .ratfunc import RatFunc, coeff_extract
from .transfer import equiv_hilbert, series_varset


class ModelParseError(ValueError):
    pass


class InvalidModel(ValueError):
    def __init__(self, violations: list[str]):
        super().__init__("; ".join(violations))
        self.violations = violations


@dataclass(frozen=True)
class ModelSpec:
    """Facets on vertices 1..m, the varying vertices T, and state counts of the rest."""

    m: int
    facets: tuple[tuple[int, ...], ...]
    T: tuple[int, ...]
    fixed_states: dict[int, int] = field(default_factory=dict)

    @classmethod
    def make(cls, m: int, facets, T, fixed_states=None) -> "ModelSpec":
        return cls(
            m,
            tuple(tuple(F) for F in facets),
            tuple(T),
            dict(fixed_states or {}),
        )

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "facets": [list(F) for F in self.facets],
            "T": list(self.T),
            "states": {str(v): c for v, c in sorted(self.fixed_states.items())},
        }


@dataclass(frozen=True)
class FixedFacet:
    facet: tuple[int, ...]
    states: int  # product of the state counts of its vertices


@dataclass(frozen=True)
class ReducedSpec:
    cprime: tuple[int, ...]
    nu_fixed: tuple[FixedFacet, ...] = ()

    @property
    def q(self) -> int:
        return len(self.cprime)

    def describe(self) -> str:
        lines = [f"q = {self.q}", "cprime = (" + ", ".join(map(str, self.cprime)) + ")"]
        if self.nu_fixed:
            for ff in self.nu_fixed:
                lines.append(f"fixed facet {{{','.join(map(str, ff.facet))}}} states {ff.states}")
        else:
            lines.append("fixed facets: none")
        return "\n".join(lines) + "\n"


def validate(spec: ModelSpec) -> list[str]:
    """Every reason the model is unusable for the pipeline (empty list: valid)."""
    out = []
    verts = set(range(1, spec.m + 1))
    if spec.m < 1:
        out.append("m must be positive")
    for n, F in enumerate(spec.facets, 1):
        if not F:
            out.append(f"facet {n} is empty")
        if len(set(F)) != len(F):
            out.append(f"facet {n} repeats a vertex")
        bad = [v for v in F if v not in verts]
        if bad:
            out.append(f"facet {n} uses vertices outside 1..{spec.m}: {bad}")
    covered = set().union(*map(set, spec.facets)) if spec.facets else set()
    missing = sorted(verts - covered)
    if missing:
        out.append(f"vertices not covered by any facet: {missing}")
    for a, Fa in enumerate(spec.facets, 1):
        for b, Fb in enumerate(spec.facets, 1):
            if a != b and set(Fa) <= set(Fb) and (set(Fa) != set(Fb) or a < b):
                out.append(f"facet {a} is contained in facet {b}")
    for a in range(len(spec.facets)):
        for b in range(a + 1, len(spec.facets)):
            if set(spec.facets[a]) & set(spec.facets[b]):
                out.append(f"facets {a + 1} and {b + 1} intersect")
    bad_T = [v for v in spec.T if v not in verts]
    if bad_T:
        out.append(f"T contains vertices outside 1..{spec.m}: {bad_T}")
    if len(set(spec.T)) != len(spec.T):
        out.append("T repeats a vertex")
    for n, F in enumerate(spec.facets, 1):
        hit = set(F) & set(spec.T)
        if len(hit) >= 2:
            out.append(f"facet {n} meets T in {len(hit)} vertices {sorted(hit)}")
    for v in sorted(verts - set(spec.T)):
        c = spec.fixed_states.get(v)
        if c is None:
            out.append(f"vertex {v} is not in T and has no state count")
        elif not isinstance(c, int) or c < 1:
            out.append(f"vertex {v} has invalid state count {c!r}")
    return out


def reduce(spec: ModelSpec) -> ReducedSpec:
    problems = validate(spec)
    if problems:
        raise InvalidModel(problems)
    T = set(spec.T)
    cprime = []
    fixed = []
    for F in spec.facets:
        rest = [v for v in F if v not in T]
        prod = math.prod(spec.fixed_states[v] for v in rest)
        if len(rest) < len(F):
            cprime.append(prod)
        else:
            fixed.append(FixedFacet(tuple(F), prod))
    return ReducedSpec(tuple(cprime), tuple(fixed))


def hilbert_series(spec: ModelSpec) -> RatFunc:
    """Equivariant Hilbert series in s_1..s_q, t (s_j belongs to the j-th facet meeting T).

    Each facet disjoint from T is handled by making its smallest vertex v vary
    as well (a fresh variable u, appended after t) and then taking the
    coefficient of ``u**c_v``: the series of the original model is the
    ``c_v``-th Taylor coefficient in u of the enlarged one.
    """
    red = reduce(spec)
    steps = []
    for ff in red.nu_fixed:
        v = min(ff.facet)
        cv = spec.fixed_states[v]
        steps.append((ff.states // cv, cv))
    return _series_with_fixed(red.cprime, steps)


def _series_with_fixed(cprime: Sequence[int], steps: Sequence[tuple[int, int]]) -> RatFunc:
    """``steps``: per fixed facet, (state product of its other vertices, order to extract)."""
    q = len(cprime)
    fresh = [f"u{n}" for n in range(1, len(steps) + 1)]
    full = tuple(cprime) + tuple(rest for rest, _ in steps)
    if not full:
        raise ValueError("model has no facets")
    H = equiv_hilbert(full)
    # equiv_hilbert names its variables s1..s_{q+nu}, t; move the fixed-facet ones after t
    big = series_varset(q, fresh)
    mapping = {j: j for j in range(q)}
    mapping.update({q + n: q + 1 + n for n in range(len(steps))})
    mapping[len(full)] = q
    H = H.rename(big, mapping)
    for n, (_, order) in enumerate(steps):
        H = coeff_extract(H, fresh[n], order)
    return H.rename(series_varset(q))


def series_varnames(spec: ModelSpec) -> list[str]:
    """Which facet each output variable belongs to, for display."""
    T = set(spec.T)
    names = []
    j = 0
    for F in spec.facets:
        if set(F) & T:
            j += 1
            names.append(f"s{j}: facet {{{','.join(map(str, F))}}}")
    return names


# -- model files --------------------------------------------------------------------


def parse_model(text: str) -> ModelSpec:
    """Parse the JSON model format ``{"m", "facets", "T", "states"}``."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ModelParseError(f"line {e.lineno}, column {e.colno}: {e.msg}") from None
    if not isinstance(data, dict):
        raise ModelParseError("top level must be a JSON object")
    for key in ("m", "facets", "T"):
        if key not in data:
            raise ModelParseError(f"missing field {key!r}")
    unknown = set(data) - {"m", "facets", "T", "states"}
    if unknown:
        raise ModelParseError(f"unknown fields {sorted(unknown)}")
    m = data["m"]
    if not isinstance(m, int) or isinstance(m, bool) or m < 1:
        raise ModelParseError(f"field 'm': expected positive integer, got {m!r}")
    facets = data["facets"]
    if not isinstance(facets, list) or not facets:
        raise ModelParseError("field 'facets': expected a non-empty list of lists")
    for n, F in enumerate(facets):
        if not isinstance(F, list) or not F:
            raise ModelParseError(f"field 'facets'[{n}]: expected a non-empty list")
        for v in F:
            if not isinstance(v, int) or isinstance(v, bool) or not 1 <= v <= m:
                raise ModelParseError(f"field 'facets'[{n}]: vertex {v!r} outside 1..{m}")
    T = data["T"]
    if not isinstance(T, list):
        raise ModelParseError("field 'T': expected a list")
    for v in T:
        if not isinstance(v, int) or isinstance(v, bool) or not 1 <= v <= m:
            raise ModelParseError(f"field 'T': vertex {v!r} outside 1..{m}")
    states_raw = data.get("states", {})
    if not isinstance(states_raw, dict):
        raise ModelParseError("field 'states': expected an object mapping vertex to count")
    states = {}
    for key, c in states_raw.items():
        try:
            v = int(key)
        except ValueError:
            raise ModelParseError(f"field 'states': key {key!r} is not a vertex number") from None
        if not 1 <= v <= m:
            raise ModelParseError(f"field 'states': vertex {v} outside 1..{m}")
        if not isinstance(c, int) or isinstance(c, bool) or c < 1:
            raise ModelParseError(f"field 'states'[{key}]: expected positive integer, got {c!r}")
        states[v] = c
    return ModelSpec.make(m, facets, T, states)


def load_model(path) -> ModelSpec:
    with open(path, encoding="utf-8") as fh:
        return parse_model(fh.read())
