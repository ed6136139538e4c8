import itertools
import json
from math import comb
from pathlib import Path

import pytest

from equivhilb.model import (
    FixedFacet,
    InvalidModel,
    ModelParseError,
    ModelSpec,
    _series_with_fixed,
    hilbert_series,
    load_model,
    parse_model,
    reduce,
    validate,
)
from equivhilb.oracle import check_series
from equivhilb.ratfunc import series_expand
from equivhilb.transfer import equiv_hilbert, series_varset

from test_transfer import closed_form

MODELS = Path(__file__).parent.parent / "models"


def test_validate_examples():
    assert validate(ModelSpec.make(2, [[1], [2]], [1, 2])) == []
    assert validate(ModelSpec.make(3, [[1, 2], [2, 3]], [3], {1: 2, 2: 2})) == ["facets 1 and 2 intersect"]
    problems = validate(ModelSpec.make(2, [[1, 2]], [1, 2]))
    assert problems == ["facet 1 meets T in 2 vertices [1, 2]"]


def test_validate_structural_defects():
    spec = ModelSpec.make(4, [[1], [1, 2]], [2])
    problems = validate(spec)
    assert "facet 1 is contained in facet 2" in problems
    assert "vertices not covered by any facet: [3, 4]" in problems
    assert "vertex 1 is not in T and has no state count" in problems


def test_reduce_examples():
    c1, c2, c3 = 2, 3, 5
    fig = ModelSpec.make(6, [[1, 2, 4], [5], [3, 6]], [4, 5, 6], {1: c1, 2: c2, 3: c3})
    assert reduce(fig).cprime == (c1 * c2, 1, c3) and reduce(fig).nu_fixed == ()
    assert reduce(ModelSpec.make(1, [[1]], [1])).cprime == (1,)
    red = reduce(ModelSpec.make(4, [[1, 2], [3, 4]], [4], {1: 2, 2: 3, 3: 5}))
    assert red.cprime == (5,)
    assert red.nu_fixed == (FixedFacet((1, 2), 6),)


def test_reduce_rejects_invalid():
    with pytest.raises(InvalidModel) as err:
        reduce(ModelSpec.make(3, [[1, 2], [2, 3]], [3], {1: 2, 2: 2}))
    assert err.value.violations == ["facets 1 and 2 intersect"]


def test_reduce_preserves_counts_and_products():
    spec = ModelSpec.make(7, [[1, 5], [2, 3], [4, 6, 7]], [5, 6], {1: 2, 2: 3, 3: 2, 4: 4, 7: 3})
    red = reduce(spec)
    assert red.q == 2
    assert red.cprime == (2, 12)
    assert [ff.states for ff in red.nu_fixed] == [6]


@pytest.mark.parametrize("m", [1, 2, 3])
def test_independence_model_series(m):
    spec = ModelSpec.make(m, [[v] for v in range(1, m + 1)], list(range(1, m + 1)))
    assert hilbert_series(spec) == closed_form(m)


def test_single_vertex_series_rendering():
    assert str(hilbert_series(ModelSpec.make(1, [[1]], [1]))) == "(-s1)/(s1 + t - 1)"


def test_induction_example():
    spec = ModelSpec.make(4, [[1, 2], [3, 4]], [4], {1: 1, 2: 2, 3: 1})
    H = hilbert_series(spec)
    table = series_expand(H, (4, 4))
    for n in range(1, 5):
        for d in range(5):
            assert table[(n, d)] == comb(2 + d - 1, d) * comb(n + d - 1, d)


@pytest.mark.parametrize(
    "states",
    [{1: 2, 2: 1, 3: 1}, {1: 3, 2: 2, 3: 2}, {1: 1, 2: 3, 3: 1}],
)
def test_induction_step_any_vertex_counts(states):
    spec = ModelSpec.make(4, [[1, 2], [3, 4]], [4], states)
    red = reduce(spec)
    report = check_series(red, hilbert_series(spec), (4,), 4)
    assert report.passed, report.text()


def test_two_fixed_facets_and_elimination_order():
    spec = ModelSpec.make(5, [[1, 2], [3], [4, 5]], [5], {1: 2, 2: 1, 3: 3, 4: 2})
    red = reduce(spec)
    H = hilbert_series(spec)
    assert check_series(red, H, (3,), 3).passed
    # extracting the fixed facets in the other order, or through another vertex, changes nothing
    assert _series_with_fixed(red.cprime, [(3 // 3, 3), (2 // 2, 2)]) == H
    assert _series_with_fixed(red.cprime, [(3 // 3, 3), (2 // 1, 1)]) == H


def test_permuting_facets_permutes_variables():
    facets = [[1, 4], [2, 5], [3]]
    base = ModelSpec.make(5, facets, [4, 5], {1: 2, 2: 1, 3: 2})
    H = hilbert_series(base)
    for perm in itertools.permutations(range(3)):
        spec = ModelSpec.make(5, [facets[p] for p in perm], [4, 5], {1: 2, 2: 1, 3: 2})
        G = hilbert_series(spec)
        order = [p for p in perm if p < 2]  # which original facet each s_j now belongs to
        mapping = {j: order[j] for j in range(2)}
        mapping[2] = 2
        assert G.rename(series_varset(2), mapping) == H


def test_two_varying_facets_equal_equiv_hilbert():
    spec = ModelSpec.make(4, [[1, 3], [2, 4]], [3, 4], {1: 2, 2: 2})
    assert hilbert_series(spec) == equiv_hilbert((2, 2))


def test_parse_examples():
    spec = parse_model('{"m": 2, "facets": [[1], [2]], "T": [1, 2]}')
    assert spec == ModelSpec.make(2, [[1], [2]], [1, 2])
    with pytest.raises(ModelParseError, match="vertex 0"):
        parse_model('{"m": 2, "facets": [[0], [2]], "T": [1, 2]}')
    fig = load_model(MODELS / "figure.json")
    assert reduce(fig).cprime == (6, 1, 5)


@pytest.mark.parametrize(
    "text,fragment",
    [
        ("{", "line 1"),
        ("[]", "JSON object"),
        ('{"facets": [[1]], "T": [1]}', "'m'"),
        ('{"m": 1, "facets": [[1]], "T": [1], "extra": 1}', "unknown"),
        ('{"m": 1, "facets": [[1]], "T": [1], "states": {"x": 1}}', "not a vertex"),
        ('{"m": 2, "facets": [[1], [2]], "T": [2], "states": {"1": 0}}', "positive integer"),
    ],
)
def test_parse_errors(text, fragment):
    with pytest.raises(ModelParseError, match=fragment):
        parse_model(text)


def test_json_round_trip():
    spec = load_model(MODELS / "ex55.json")
    assert parse_model(json.dumps(spec.to_json())) == spec


@pytest.mark.parametrize("path", sorted(MODELS.glob("*.json")))
def test_shipped_models_parse(path):
    spec = load_model(path)
    if path.stem == "overlap":
        assert validate(spec)
    else:
        assert validate(spec) == []
