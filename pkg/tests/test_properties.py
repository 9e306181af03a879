"""Randomised checks at ranks beyond the exhaustive range."""
from hypothesis import given, settings
from hypothesis import strategies as st

from excforest.bijections import (
    ces_to_factorization,
    ces_to_forest,
    ces_tops,
    compose_transpositions,
    factorization_to_ces,
    forest_to_ces,
    is_parking_function,
    long_cycle,
    parking_prufer,
    parking_to_ces,
    prufer_parking,
)
from excforest.forest import (
    apply_braid_word_forest,
    delta_forest,
    full_twist_forest,
    prufer_decode,
    prufer_encode,
)
from excforest.modules import IntervalModule, chi, ext_dim, hom_dim
from excforest.sequences import BraidWord, apply_braid_word, is_exceptional_sequence, named_braid, relative_flags


@st.composite
def forests(draw, max_n=12):
    n = draw(st.integers(1, max_n))
    code = draw(st.lists(st.integers(0, n), min_size=n - 1, max_size=n - 1))
    return prufer_decode(code, n)


@st.composite
def parking_functions(draw, max_n=10):
    n = draw(st.integers(1, max_n))
    code = draw(st.lists(st.integers(0, n), min_size=n - 1, max_size=n - 1))
    return prufer_parking(code, n)


@st.composite
def forest_and_word(draw, max_n=9, max_len=8):
    f = draw(forests(max_n))
    if f.n == 1:
        return f, BraidWord()
    letters = draw(st.lists(st.integers(1, f.n - 1).flatmap(lambda i: st.sampled_from((i, -i))), max_size=max_len))
    return f, BraidWord(tuple(letters))


@st.composite
def module_pairs(draw, max_n=30):
    n = draw(st.integers(1, max_n))

    def module():
        a = draw(st.integers(1, n))
        return IntervalModule(a, draw(st.integers(a, n)), n)

    return module(), module()


@given(forests())
def test_forest_sequence_round_trip(f):
    s = forest_to_ces(f)
    assert is_exceptional_sequence(s.objects)
    assert ces_to_forest(s) == f
    assert prufer_decode(prufer_encode(f), f.n) == f


@settings(max_examples=60)
@given(forest_and_word())
def test_word_action_commutes_with_bijection(pair):
    f, word = pair
    s = apply_braid_word(forest_to_ces(f), word)
    assert is_exceptional_sequence(s.objects)
    assert ces_to_forest(s) == apply_braid_word_forest(f, word)
    assert apply_braid_word_forest(apply_braid_word_forest(f, word), word.inverse()) == f


@given(parking_functions())
def test_parking_round_trip(p):
    assert is_parking_function(p)
    s = parking_to_ces(p)
    assert ces_tops(s) == p
    assert prufer_parking(parking_prufer(p), len(p)) == p


@given(forests())
def test_factorization(f):
    s = forest_to_ces(f)
    pairs = ces_to_factorization(s)
    assert compose_transpositions(pairs, f.n + 1) == long_cycle(f.n)
    assert factorization_to_ces(pairs) == s


@settings(max_examples=40)
@given(forests(max_n=9))
def test_delta_and_full_twist(f):
    n = f.n
    assert delta_forest(f) == apply_braid_word_forest(f, named_braid(n, "delta"))
    g = named_braid(n, "garside")
    assert apply_braid_word_forest(f, g * g) == full_twist_forest(f)


@settings(max_examples=40)
@given(forests(max_n=8))
def test_flags_follow_classification(f):
    expected = {"root": (True, True), "ascending": (True, False), "descending": (False, True)}
    flags = relative_flags(forest_to_ces(f))
    assert flags == [expected[f.classification(v)] for v in range(1, f.n + 1)]


@given(module_pairs())
def test_hom_ext_euler(pair):
    x, y = pair
    assert hom_dim(x, y) - ext_dim(x, y) == chi(x, y)
    assert hom_dim(x, y) * ext_dim(x, y) == 0
