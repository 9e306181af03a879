import math

import pytest

from excforest.genfun import (
    TrivariatePolynomial,
    formula_poly,
    recursion_poly,
    statistic_poly,
)

P = TrivariatePolynomial


def test_small_cases():
    c = P.linear(0, 0, 1)
    assert formula_poly(1) == c
    assert recursion_poly(1) == c
    assert recursion_poly(2) == c * P.linear(1, 1, 1)
    assert formula_poly(3) == c * P.linear(1, 2, 1) * P.linear(2, 1, 1)
    assert formula_poly(3).coefficient(0, 0, 3) == 1


def test_rank2_forests_by_hand():
    # edgeless, ascending chain, descending chain
    assert statistic_poly(2, "forests") == P({(0, 0, 2): 1, (1, 0, 1): 1, (0, 1, 1): 1})


def test_evaluations():
    assert formula_poly(3).evaluate(2, 1, 2) == 84
    assert formula_poly(4).evaluate(2, 1, 2) == 1008
    assert formula_poly(5).evaluate(0, 0, 0) == 0
    assert P.constant(7).evaluate(0, 0, 0) == 7


@pytest.mark.parametrize("n", range(1, 8))
def test_formula_recursion_forests(n):
    f = formula_poly(n)
    assert f == recursion_poly(n)
    assert f.evaluate(1, 1, 1) == (n + 1) ** (n - 1)
    assert f.evaluate(2, 1, 2) == 2 * math.factorial(2 * n + 1) // math.factorial(n + 2)
    if n <= 6:
        assert f == statistic_poly(n, "forests")


@pytest.mark.parametrize("n", range(1, 5))
def test_sequence_statistics(n):
    assert statistic_poly(n, "sequences") == formula_poly(n)


def test_arithmetic():
    a, b = P.linear(1, 0, 0), P.linear(0, 1, 0)
    assert (a + b) * (a - b) == a * a - b * b
    assert (a * 3).coefficient(1, 0, 0) == 3
    assert (a - a).terms == {}
    assert P({(0, 0, 0): 0}) == 0


def test_division_by_b_plus_c():
    b, c = P.linear(0, 1, 0), P.linear(0, 0, 1)
    q = P.linear(2, 1, 5) * c
    assert (q * (b + c)).divide_by_b_plus_c() == q
    with pytest.raises(ArithmeticError):
        (c + P.constant(1)).divide_by_b_plus_c()


def test_substitution():
    c = P.linear(0, 0, 1)
    assert (c * c).substitute_c() == P.linear(0, 1, 1) * P.linear(0, 1, 1)


def test_render_and_json():
    p = formula_poly(2)
    assert p.render() == "1 a^0 b^0 c^2 + 1 a^0 b^1 c^1 + 1 a^1 b^0 c^1"
    assert p.dumps() == "[[0,0,2,1],[0,1,1,1],[1,0,1,1]]"
    assert P().render() == "0"


def test_bad_inputs():
    with pytest.raises(ValueError):
        P({(1, 2): 1})
    with pytest.raises(ValueError):
        formula_poly(0)
    with pytest.raises(ValueError):
        statistic_poly(3, "nope")
