import random

import pytest

from covsym import identities
from covsym.identities import (
    action_coproduct,
    action_module,
    action_product,
    coalgebra_morphism,
    cocycle,
    derivation_coproduct,
    hopf_selfcheck,
    k_roundtrip,
    random_element,
    words_up_to,
)
from covsym.magma import TensorPoly

WORDS3 = [TensorPoly({w: 1}) for w in words_up_to(2, 3)]
WORDS2 = [TensorPoly({w: 1}) for w in words_up_to(2, 2)]


def test_words_up_to_counts():
    assert len(words_up_to(2, 3)) == 15
    assert len(words_up_to(1, 2)) == 3


@pytest.mark.parametrize("a", WORDS3, ids=str)
def test_coalgebra_morphism_exhaustive(a):
    lhs, rhs = coalgebra_morphism(a)
    assert lhs == rhs


@pytest.mark.parametrize("x", [0, 1, (0, 1), (1, (0, 0))], ids=str)
def test_derivation_coproduct_exhaustive(x):
    for a in WORDS3:
        lhs, rhs = derivation_coproduct(x, a)
        assert lhs == rhs


@pytest.mark.parametrize("A", WORDS3, ids=str)
def test_cocycle_exhaustive(A):
    for B in WORDS2:
        lhs, rhs = cocycle(A, B)
        assert lhs == rhs


@pytest.mark.parametrize("a", WORDS3, ids=str)
def test_action_squares_exhaustive(a):
    for b in WORDS3:
        lhs, rhs = action_coproduct(a, b)
        assert lhs == rhs
    for b1 in WORDS2:
        for b2 in WORDS2:
            lhs, rhs = action_product(a, b1, b2)
            assert lhs == rhs
            lhs, rhs = action_module(a, b1, b2)
            assert lhs == rhs


def test_k_roundtrip_random():
    rng = random.Random(7)
    for _ in range(30):
        a = random_element(rng, 2, rng.randint(0, 5))
        lhs, rhs = k_roundtrip(a)
        assert lhs == rhs


def test_cocycle_detects_wrong_k(monkeypatch):
    x, y = TensorPoly.word(0), TensorPoly.word(1)
    monkeypatch.setattr(identities, "k_apply", lambda p: p)
    lhs, rhs = cocycle(x, y)
    assert lhs != rhs


def test_selfcheck_reports_failure(monkeypatch):
    monkeypatch.setattr(identities, "k_apply", lambda p: p + p)
    results = hopf_selfcheck(1, 2)
    assert not all(r.passed for r in results)
    failed = next(r for r in results if not r.passed)
    assert failed.first_failure


def test_selfcheck_single_generator_includes_basic_k():
    results = hopf_selfcheck(1, 2, 0, 0)
    assert all(r.passed for r in results)
    assert {r.name for r in results} >= {"cocycle[exhaustive]", "k_roundtrip[exhaustive]"}


def test_selfcheck_random_is_reproducible():
    a = [(r.name, r.cases, r.failures) for r in hopf_selfcheck(2, 4, 10, 42)]
    b = [(r.name, r.cases, r.failures) for r in hopf_selfcheck(2, 4, 10, 42)]
    assert a == b
    assert all(f == 0 for _, _, f in a)


def test_selfcheck_rejects_bad_arguments():
    with pytest.raises(ValueError):
        hopf_selfcheck(0, 3)
