import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from equivhilb.language import (
    CanonicalWord,
    NotInLanguage,
    NotInMonA,
    Tau,
    YMonomial,
    Zeta,
    count_Ln,
    enumerate_Ln,
    format_word,
    from_canonical,
    is_in_L,
    monomial_normal_form,
    monomial_to_word,
    parse_monomial,
    parse_word,
    tau_counts,
    to_canonical,
    word_to_monomial,
    zeta_count,
)
from equivhilb.oracle import DimensionQuery, segre_dimension

WORKED = "t1 t2 z(1,2) t2 z(1,1) t1"


def W(text):
    return parse_word(text)


def test_word_syntax_round_trip():
    assert format_word(W(WORKED)) == WORKED
    assert W("") == ()


def test_tau_runs_must_increase():
    assert is_in_L(W("t1 t2"), 2, (1, 1))
    assert not is_in_L(W("t2 t1"), 2, (1, 1))
    assert is_in_L((), 2, (1, 1))


def test_zeta_coordinates_weakly_increase():
    assert is_in_L(W("z(1,1) z(2,2)"), 2, (2, 2))
    assert not is_in_L(W("z(2,1) z(1,2)"), 2, (2, 2))
    # a tau_1 between them frees coordinate 1 only
    assert is_in_L(W("z(2,1) t1 z(1,2)"), 2, (2, 2))
    assert not is_in_L(W("z(2,2) t1 z(1,1)"), 2, (2, 2))


def test_canonical_form_of_worked_word():
    cw = to_canonical(W(WORKED), 2, (1, 2))
    assert cw.k_vectors == ((1, 1), (0, 1), (1, 0))
    assert cw.i_tuples == ((1, 2), (1, 1))
    assert from_canonical(cw) == W(WORKED)


def test_canonical_form_trivial_cases():
    assert to_canonical((), 2, (1, 1)) == CanonicalWord(((0, 0),), ())
    assert to_canonical(W("t2 t2"), 2, (1, 1)) == CanonicalWord(((0, 2),), ())
    with pytest.raises(NotInLanguage):
        to_canonical(W("t2 t1"), 2, (1, 1))


def test_worked_word_monomial():
    got = word_to_monomial(W(WORKED), 2)
    assert got == parse_monomial("y[1,1,2]*y[2,2,2]*y[1,1,2]*y[2,1,3]")
    assert word_to_monomial((), 2) == YMonomial()


def test_exponent_vector_on_zeta():
    assert word_to_monomial(W("z(1,1)"), 2, a=(2, 1)) == YMonomial({(1, 1, 1): 2, (2, 1, 1): 1})


def test_sorting_example():
    mono = parse_monomial("y[1,2,2]*y[2,2,1]*y[1,1,4]*y[2,1,1]*y[1,3,1]*y[2,2,1]")
    # (y131 y211)(y122 y221)(y114 y221), each block as (i-tuple, k-tuple)
    assert monomial_normal_form(mono, 2) == [((3, 1), (1, 1)), ((2, 2), (2, 1)), ((1, 2), (4, 1))]
    assert monomial_normal_form(YMonomial(), 2) == []


def test_normal_form_rejects_non_generators():
    with pytest.raises(NotInMonA):
        monomial_normal_form(parse_monomial("y[1,1,1]*y[1,1,2]*y[2,1,1]"), 2)


def test_monomial_to_word_examples():
    mono = parse_monomial("y[1,1,2]*y[2,2,2]*y[1,1,2]*y[2,1,3]")
    assert format_word(monomial_to_word(mono, (2, 3))) == "t1 t2 z(1,2) t2 z(1,1) t1 t2"
    assert format_word(monomial_to_word(mono, (2, 2))) == WORKED
    assert monomial_to_word(YMonomial(), (0, 0)) == ()
    assert monomial_to_word(parse_monomial("y[1,1,1]*y[2,1,1]"), (0, 0)) == (Zeta((1, 1)),)
    with pytest.raises(IndexError):
        monomial_to_word(mono, (0, 0))


def test_enumerate_examples():
    assert sorted(format_word(w) for w in enumerate_Ln((1,), 1, (1,))) == ["t1 z(1)", "z(1) t1"]
    assert enumerate_Ln((0,), 3, (1,)) == [(Zeta((1,)),) * 3]
    assert len(enumerate_Ln((1, 1), 1, (1, 1))) == 4


CASES = [(c, n, d) for c in [(1,), (2,), (3,), (1, 1), (2, 1), (1, 2), (2, 2)]
         for n in itertools.product(range(3), repeat=len(c)) for d in range(3)]


@pytest.mark.parametrize("c,n,d", CASES)
def test_enumeration_is_exactly_the_language_slice(c, n, d):
    words = enumerate_Ln(n, d, c)
    keys = {tuple(words_key(w)) for w in words}
    assert len(keys) == len(words)
    for w in words:
        assert is_in_L(w, len(c), c)
        assert tau_counts(w, len(c)) == tuple(n) and zeta_count(w) == d
    assert len(words) == count_Ln(n, d, c)
    n1 = tuple(x + 1 for x in n)
    assert len(words) == segre_dimension(DimensionQuery(tuple(c), n1, d))


def words_key(w):
    return [str(a) for a in w]


def brute_language_slice(q, c, n, d):
    """Filter every arrangement of the letters: independent of the generator."""
    taus = [Tau(j + 1) for j in range(q) for _ in range(n[j])]
    zetas = [Zeta(i) for i in itertools.product(*(range(1, cj + 1) for cj in c))]
    out = set()
    for zs in itertools.product(zetas, repeat=d):
        letters = taus + list(zs)
        for perm in set(itertools.permutations(letters)):
            if is_in_L(perm, q, c):
                out.add(tuple(perm))
    return out


@pytest.mark.parametrize("c,n,d", [((1, 1), (1, 1), 1), ((2,), (2,), 2), ((2, 1), (1, 0), 2), ((1, 2), (1, 1), 1)])
def test_enumeration_matches_filtering(c, n, d):
    assert {tuple(w) for w in enumerate_Ln(n, d, c)} == brute_language_slice(len(c), c, n, d)


@pytest.mark.parametrize("c,n,d", [(c, n, d) for c, n, d in CASES if len(c) == 2 and max(n) <= 2])
def test_word_monomial_round_trip(c, n, d):
    images = set()
    for w in enumerate_Ln(n, d, c):
        mono = word_to_monomial(w, 2)
        assert monomial_to_word(mono, n) == w
        images.add(mono)
    assert len(images) == count_Ln(n, d, c)


@st.composite
def generator_products(draw):
    """Random elements of Mon(A_{n+1}) given as products of generators."""
    c = draw(st.tuples(st.integers(1, 2), st.integers(1, 2)))
    n = draw(st.tuples(st.integers(0, 2), st.integers(0, 2)))
    d = draw(st.integers(0, 3))
    factors = []
    for _ in range(d):
        for j in range(2):
            i = draw(st.integers(1, c[j]))
            k = draw(st.integers(1, n[j] + 1))
            factors.append((j + 1, i, k))
    return c, n, YMonomial.from_factors(factors)


@given(generator_products())
def test_monomial_word_round_trip(data):
    c, n, mono = data
    w = monomial_to_word(mono, n)
    assert is_in_L(w, 2, c)
    assert tau_counts(w, 2) == n
    assert word_to_monomial(w, 2) == mono


@given(st.lists(st.sampled_from(["t1", "t2", "z(1,1)", "z(1,2)", "z(2,1)", "z(2,2)"]), max_size=7))
def test_canonical_round_trip_property(tokens):
    w = W(" ".join(tokens))
    if is_in_L(w, 2, (2, 2)):
        assert from_canonical(to_canonical(w, 2, (2, 2))) == w
