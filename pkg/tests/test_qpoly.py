import itertools
import json
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from covsym.qpoly import DomainError, QPoly, degree, render, word_count_of_degree, words_of_degree


def brute_force_compositions(n):
    """Count cut sets of 1..n-1 whose parts are all ≥ 2."""
    count = 0
    for cuts in itertools.product([0, 1], repeat=n - 1):
        edges = [0] + [i + 1 for i, c in enumerate(cuts) if c] + [n]
        if all(b - a >= 2 for a, b in zip(edges, edges[1:])):
            count += 1
    return count


q2, q3, q4 = QPoly.letter(2), QPoly.letter(3), QPoly.letter(4)


def test_mul_is_concatenation():
    assert q2 * q3 == QPoly({(2, 3): 1})
    assert q2 * q2 == QPoly({(2, 2): 1})
    assert str(q2 * q2) == "q2^2"


def test_cancellation():
    assert q2 + (-q2) == QPoly()
    assert not (q2 - q2)
    assert str(q2 - q2) == "0"


def test_letters_below_two_rejected():
    with pytest.raises(DomainError):
        QPoly.letter(1)


@pytest.mark.parametrize("n,expected", [(4, 2), (5, 3)])
def test_word_count_small(n, expected):
    assert brute_force_compositions(n) == expected
    assert word_count_of_degree(n) == expected


def test_word_count_matches_brute_force():
    for n in range(2, 16):
        assert word_count_of_degree(n) == brute_force_compositions(n) == len(words_of_degree(n))


def test_word_count_20():
    assert word_count_of_degree(20) == 4181


def test_word_count_recurrence():
    assert word_count_of_degree(2) == word_count_of_degree(3) == 1
    for n in range(4, 40):
        assert word_count_of_degree(n) == word_count_of_degree(n - 1) + word_count_of_degree(n - 2)


@pytest.mark.parametrize("n", [1, 0, -3])
def test_word_count_domain(n):
    with pytest.raises(DomainError):
        word_count_of_degree(n)


def test_text_roundtrip_and_order():
    p = QPoly.parse("3/5 q4 + 7/15 q2^2")
    assert str(p) == "7/15 q2^2 + 3/5 q4"
    assert QPoly.parse(str(p)) == p
    assert QPoly.parse("2/3 q5 + q3q2 + 4/3 q2q3") == QPoly({(5,): Fraction(2, 3), (3, 2): 1, (2, 3): Fraction(4, 3)})
    assert QPoly.parse("-q2 + 1 - 1/2 q10q2^3")[(10, 2, 2, 2)] == Fraction(-1, 2)
    assert str(QPoly.one()) == "1"


def test_latex_and_json():
    p = QPoly.parse("7/15 q2^2 + 3/5 q4 + 47 q3q4q2 + q10")
    assert p.to_latex() == r"\frac{7}{15}q_2^2+\frac{3}{5}q_4+47q_3q_4q_2+q_{10}"
    doc = json.loads(render(p, 4, "json"))
    assert doc["terms"][0] == {"num": "7", "den": "15", "word": [2, 2]}
    assert QPoly.from_json_terms(doc["terms"]) == p
    assert render(QPoly(), 1, "json") == '{"n":1,"terms":[]}'


qwords = st.lists(st.integers(2, 5), max_size=3).map(tuple)
qpolys = st.dictionaries(qwords, st.fractions(max_denominator=7).filter(bool), max_size=4).map(QPoly)


@settings(max_examples=80, deadline=None)
@given(qpolys, qpolys, qpolys)
def test_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a + b) * c == a * c + b * c
    assert a + b == b + a
    assert QPoly.one() * a == a == a * QPoly.one()


@settings(max_examples=80, deadline=None)
@given(qpolys, qpolys)
def test_grading(a, b):
    prod = a * b
    for w in prod:
        assert any(degree(w) == degree(u) + degree(v) for u in a for v in b if u + v == w)
