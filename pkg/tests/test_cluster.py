import math

import pytest

from excforest.cluster import (
    SignedObject,
    c_vector_check,
    c_vectors,
    cluster_to_signed_sequence,
    count_signed,
    enumerate_clusters,
    garside_signed,
    is_cluster_tilting,
    is_signed_exceptional_sequence,
    pairing_matrix,
    parse_signed_sequence,
    render_signed_sequence,
)
from excforest.modules import IntervalModule


def signed(text, n=None):
    return parse_signed_sequence(text, n)


def test_tilting_examples():
    assert is_cluster_tilting(signed("S(1);S(3);M(2,3)[1]"))
    assert is_cluster_tilting(signed("S(2);M(1,2);S(3)[1]"))
    s1, s2 = signed("S(1);S(2)", 3)
    for x in IntervalModule(1, 3, 3), IntervalModule(2, 3, 3), IntervalModule(3, 3, 3):
        assert not is_cluster_tilting([s1, s2, SignedObject(x)])
        assert not is_cluster_tilting([s1, s2, SignedObject(x, True)])


def test_shift_only_projectives():
    assert not is_cluster_tilting(signed("S(1)[1];S(2)"))


@pytest.mark.parametrize("n,count", [(1, 2), (2, 5), (3, 14), (4, 42)])
def test_catalan_counts(n, count):
    assert len(list(enumerate_clusters(n))) == count


def test_ordering():
    s = cluster_to_signed_sequence(set(signed("S(3)[1];S(2);M(1,2)")))
    assert render_signed_sequence(s) == "M(2,2);M(1,2);M(3,3)[1]"
    allshift = cluster_to_signed_sequence(set(signed("M(1,3)[1];M(2,3)[1];M(3,3)[1]")))
    assert render_signed_sequence(allshift) == "M(3,3)[1];M(2,3)[1];M(1,3)[1]"


def test_worked_example():
    s = signed("S(2);M(1,2);S(3)[1]")
    g = garside_signed(s)
    assert render_signed_sequence(g) == "M(1,3)[1];M(1,1);M(2,2)"
    assert c_vector_check(s, g)
    assert pairing_matrix(s, g) == [[0, 0, 1], [0, 1, 0], [1, 0, 0]]


def test_all_shifted_projectives():
    s = signed("M(3,3)[1];M(2,3)[1];M(1,3)[1]")
    g = garside_signed(s)
    assert all(x.shifted for x in g)
    assert is_signed_exceptional_sequence(g)


def test_flipped_sign_fails():
    s = signed("S(2);M(1,2);S(3)[1]")
    g = list(garside_signed(s))
    g[1] = SignedObject(g[1].module, not g[1].shifted)
    assert not c_vector_check(s, g)


def test_c_vectors():
    g = garside_signed(signed("S(2);M(1,2);S(3)[1]"))
    assert c_vectors(g) == [(1, 1, 1), (-1, 0, 0), (0, -1, 0)]


def test_invalid_signed_sequence():
    assert not is_signed_exceptional_sequence(signed("M(1,2);S(1)[1]"))
    assert is_signed_exceptional_sequence(signed("M(1,2)[1];S(1)"))
    with pytest.raises(ValueError):
        cluster_to_signed_sequence(signed("S(1);S(2)"))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_every_cluster(n):
    seen = set()
    for c in enumerate_clusters(n):
        s = cluster_to_signed_sequence(c)
        assert s not in seen
        seen.add(s)
        assert is_signed_exceptional_sequence(s)
        g = garside_signed(s)
        assert is_signed_exceptional_sequence(g)
        assert c_vector_check(s, g)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_count_signed(n):
    expected = math.factorial(n) * math.comb(2 * n + 2, n + 1) // (n + 2)
    assert count_signed(n) == expected == count_signed(n, oracle=True)


@pytest.mark.parametrize("n", [5, 6])
def test_count_signed_larger(n):
    assert count_signed(n) == math.factorial(n) * math.comb(2 * n + 2, n + 1) // (n + 2)
