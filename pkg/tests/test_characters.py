import pytest
from hypothesis import given, settings, strategies as st

from stringcone.cartan import all_reduced_words, build_cartan, longest_word
from stringcone.characters import (
    WeightPolynomial,
    demazure_character,
    demazure_operator,
    dimension_of,
    monomial,
    weyl_character,
    weyl_dim,
)
from stringcone.errors import WeightError, WordError


def test_polynomial_basics():
    poly = WeightPolynomial.from_dict({(1, 0): 2, (0, 1): 0, (-1, 1): 1})
    # zero coefficients are dropped
    assert poly.as_dict() == {(1, 0): 2, (-1, 1): 1}
    assert poly.coefficient((0, 1)) == 0
    assert dimension_of(poly) == 3
    assert dimension_of(WeightPolynomial.from_dict({})) == 0
    assert dimension_of(monomial((3, 1))) == 1


WEYL_DIMS = [
    ("A", 2, (1, 1), 8),
    ("A", 3, (1, 0, 0), 4),
    ("A", 3, (1, 0, 1), 15),
    ("B", 2, (1, 0), 5),
    ("B", 2, (0, 1), 4),
    ("G", 2, (1, 0), 14),
    ("G", 2, (0, 1), 7),
]


@pytest.mark.parametrize("label,rank,lam,dim", WEYL_DIMS)
def test_weyl_dim_oracles(label, rank, lam, dim):
    assert weyl_dim(build_cartan(label, rank), lam) == dim


def test_weyl_dim_rejects_bad_weights():
    datum = build_cartan("A", 2)
    with pytest.raises(WeightError):
        weyl_dim(datum, (-1, 0))
    with pytest.raises(WeightError):
        weyl_dim(datum, (1, 0, 0))


def test_demazure_operator_string_cases():
    datum = build_cartan("A", 1)
    # mu >= 0: full string down to the reflection
    up = demazure_operator(datum, 1, monomial((2,)))
    assert up.as_dict() == {(2,): 1, (0,): 1, (-2,): 1}
    # mu = -1: annihilated
    assert demazure_operator(datum, 1, monomial((-1,))).as_dict() == {}
    # mu <= -2: minus the strict interior string
    down = demazure_operator(datum, 1, monomial((-3,)))
    assert down.as_dict() == {(1,): -1, (-1,): -1}


def test_demazure_character_a2_first_fundamental():
    datum = build_cartan("A", 2)
    ch = demazure_character(datum, (1, 0), (1, 2, 1))
    assert ch.as_dict() == {(1, 0): 1, (-1, 1): 1, (0, -1): 1}


def test_demazure_character_prefix_growth():
    datum = build_cartan("A", 2)
    lam = (1, 1)
    sizes = [
        dimension_of(demazure_character(datum, lam, w))
        for w in [(), (1,), (1, 2), (1, 2, 1)]
    ]
    # each extra letter can only grow the module
    assert sizes == sorted(sizes)
    assert sizes[0] == 1 and sizes[-1] == 8


@pytest.mark.parametrize("label,rank", [("A", 2), ("A", 3), ("B", 2)])
def test_character_independent_of_reduced_word(label, rank):
    datum = build_cartan(label, rank)
    words = all_reduced_words(datum, longest_word(datum))
    lam = (1,) * rank
    reference = demazure_character(datum, lam, words[0])
    for word in words[1:]:
        assert demazure_character(datum, lam, word) == reference


def test_weyl_character_matches_dimension():
    datum = build_cartan("B", 2)
    for lam in [(0, 0), (1, 0), (0, 1), (2, 1)]:
        ch = weyl_character(datum, lam)
        assert dimension_of(ch) == weyl_dim(datum, lam)
        assert all(c > 0 for c in ch.as_dict().values())


def test_demazure_character_rejects_bad_input():
    datum = build_cartan("A", 2)
    with pytest.raises(WeightError):
        demazure_character(datum, (-1, 0), (1,))
    with pytest.raises(WordError):
        demazure_character(datum, (1, 0), (1, 1))


@st.composite
def polynomials(draw):
    rank = draw(st.integers(min_value=1, max_value=3))
    n_terms = draw(st.integers(min_value=1, max_value=4))
    terms = {}
    for _ in range(n_terms):
        w = tuple(draw(st.integers(min_value=-4, max_value=4)) for _ in range(rank))
        terms[w] = terms.get(w, 0) + draw(st.integers(min_value=-3, max_value=3))
    return rank, WeightPolynomial.from_dict(terms)


@settings(max_examples=150, deadline=None)
@given(polynomials(), st.data())
def test_demazure_operator_idempotent(poly, data):
    rank, p = poly
    datum = build_cartan("A", rank)
    i = data.draw(st.integers(min_value=1, max_value=rank))
    once = demazure_operator(datum, i, p)
    assert demazure_operator(datum, i, once) == once
