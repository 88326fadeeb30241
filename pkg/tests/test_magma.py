from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from covsym.magma import (
    TensorBiPoly,
    TensorPoly,
    action_dot,
    coproduct,
    k_apply,
    k_inverse,
    magma_product,
    tau_derivation,
    tau_hom,
    weight,
    word_weight,
)

x, y, z = 0, 1, 2
xy = magma_product(x, y)
xx = magma_product(x, x)
W = TensorPoly.word
ONE = TensorPoly.one()


def bi(*pairs):
    """TensorBiPoly from (coeff, left_word, right_word) triples."""
    return TensorBiPoly({(l, r): c for c, l, r in pairs})


def test_magma_product():
    assert magma_product(x, y) == (x, y)
    assert magma_product(x, xy) == (x, (x, y))
    assert weight(magma_product(xy, x)) == 3
    assert weight(x) == 1


def test_coproduct_unit():
    assert coproduct(ONE) == bi((1, (), ()))


def test_coproduct_two_letters():
    expected = bi((1, (), (x, y)), (1, (x,), (y,)), (1, (y,), (x,)), (1, (x, y), ()))
    assert coproduct(W(x, y)) == expected


def test_coproduct_binomial_power():
    v3 = (x, x, x)
    expected = bi(*[(c, v3[:m], v3[m:]) for m, c in enumerate([1, 3, 3, 1])])
    assert coproduct(W(*v3)) == expected


@pytest.mark.parametrize("n", range(0, 7))
def test_coproduct_of_distinct_word_has_2_to_n_terms(n):
    assert len(coproduct(W(*range(n)))) == 2 ** n


def test_tau_derivation():
    assert tau_derivation(x, ONE) == TensorPoly()
    assert tau_derivation(x, W(y)) == W(xy)
    assert tau_derivation(x, W(y, z)) == W(xy, z) + W(y, (x, z))


def test_tau_hom_and_action():
    b = W(y, z) + W(z).scale(Fraction(1, 2))
    assert tau_hom(ONE, b) == b
    assert tau_hom(W(x), W(y)) == W(xy)
    assert tau_hom(W(x, y), W(z)) == W((x, (y, z)))
    assert action_dot(ONE, b) == b
    assert action_dot(W(x), W(y)) == W(xy)
    assert action_dot(W(x, y), W(z)) == W((x, (y, z)))


def test_k_apply_examples():
    assert k_apply(W(x)) == W(x)
    assert k_apply(W(x, y)) == W(x, y) - W(xy)
    # unfolded by hand from K(x⊗a) = x⊗K(a) - K(tau_x a)
    expected = (W(x, x, x) - W(x, xx).scale(2) - W(xx, x)
                + W(magma_product(xx, x)) + W(magma_product(x, xx)))
    assert k_apply(W(x, x, x)) == expected


def test_k_inverse_examples():
    assert k_inverse(W(x)) == W(x)
    assert k_inverse(W(x, y)) == W(x, y) + W(xy)
    assert k_apply(W(x, y) + W(xy)) == W(x, y)
    assert k_inverse(k_apply(W(x, x, x))) == W(x, x, x)


def test_k_is_unitriangular():
    for word in [(x, y, z), (x, x, y, y), (xy, z, x)]:
        diff = k_apply(W(*word)) - W(*word)
        assert all(len(w) < len(word) for w in diff)


def test_coproduct_rejects_bare_tuples():
    with pytest.raises(TypeError):
        coproduct((x, y))


def test_str_is_canonical():
    p = W(y, x) + W(x) - W(xy)
    assert str(p) == "x - x*y + y⊗x"
    assert str(TensorPoly()) == "0"


# --- weight homogeneity ---

magma = st.recursive(st.integers(0, 2), lambda e: st.tuples(e, e), max_leaves=3)
words = st.lists(magma, max_size=4).map(tuple)


@st.composite
def homogeneous(draw):
    length = draw(st.integers(0, 4))
    base = draw(st.lists(st.integers(0, 2), min_size=length, max_size=length))
    terms = {}
    # permuting factors and reassociating keeps the weight fixed
    for _ in range(draw(st.integers(1, 3))):
        perm = draw(st.permutations(base))
        terms[tuple(perm)] = Fraction(draw(st.integers(-4, 4).filter(bool)), draw(st.integers(1, 3)))
    return TensorPoly(terms)


@settings(max_examples=60, deadline=None)
@given(homogeneous(), magma)
def test_weight_homogeneity(p, e):
    (wt,) = p.weight_set()
    assert k_apply(p).weight_set() <= {wt}
    assert k_inverse(p).weight_set() <= {wt}
    assert coproduct(p).weight_set() <= {wt}
    assert tau_derivation(e, p).weight_set() <= {wt + weight(e)}


@settings(max_examples=60, deadline=None)
@given(words)
def test_k_roundtrip_property(word):
    p = TensorPoly({word: 1})
    assert k_apply(k_inverse(p)) == p
    assert k_inverse(k_apply(p)) == p
    assert word_weight(word) == sum(weight(e) for e in word)
