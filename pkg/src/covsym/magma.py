"""Free nonassociative algebra over Q and its tensor algebra.

Magma elements are binary trees: a generator is a non-negative ``int``, a
product ``a ⋄ b`` is the pair ``(a, b)``. Tensor words are tuples of magma
elements; the empty tuple is the unit of T(g).

The tensor algebra carries the unshuffle coproduct, the derivations
``tau_x`` extending ``y -> x ⋄ y``, their multiplicative extension ``tau``
and the K-operator defined by ``K(1) = 1``, ``K(x ⊗ a + tau_x a) = x ⊗ K(a)``.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Union

from .linear import LinearCombination, accumulate

MagmaElement = Union[int, tuple]
TensorWord = tuple

_NAMES = "xyzuvw"


def generator(index: int) -> int:
    if index < 0:
        raise ValueError("generator index must be non-negative")
    return index


def magma_product(a: MagmaElement, b: MagmaElement) -> tuple:
    return (a, b)


def weight(e: MagmaElement) -> int:
    """Number of generator leaves of a magma element."""
    if isinstance(e, int):
        return 1
    return weight(e[0]) + weight(e[1])


def word_weight(word: TensorWord) -> int:
    return sum(weight(e) for e in word)


def magma_key(e: MagmaElement) -> tuple:
    # generators first, ordered by index; then products by (left, right)
    if isinstance(e, int):
        return (0, e)
    return (1, magma_key(e[0]), magma_key(e[1]))


def word_key(word: TensorWord) -> tuple:
    return (len(word), tuple(magma_key(e) for e in word))


def format_magma(e: MagmaElement, top: bool = True) -> str:
    if isinstance(e, int):
        return _NAMES[e] if e < len(_NAMES) else f"g{e}"
    s = f"{format_magma(e[0], False)}*{format_magma(e[1], False)}"
    return s if top else f"({s})"


def format_word(word: TensorWord) -> str:
    if not word:
        return "1"
    if len(word) == 1:
        return format_magma(word[0])
    return "⊗".join(format_magma(e, False) for e in word)


class TensorPoly(LinearCombination):
    """Element of T(g): rational combination of tensor words."""

    __slots__ = ()
    sort_key = staticmethod(word_key)
    format_key = staticmethod(format_word)

    @staticmethod
    def _mul_keys(k1, k2):
        return k1 + k2

    @classmethod
    def one(cls) -> "TensorPoly":
        return cls({(): 1})

    @classmethod
    def zero(cls) -> "TensorPoly":
        return cls()

    @classmethod
    def word(cls, *factors: MagmaElement) -> "TensorPoly":
        return cls({tuple(factors): 1})

    def length_set(self) -> set[int]:
        return {len(w) for w in self._terms}

    def weight_set(self) -> set[int]:
        return {word_weight(w) for w in self._terms}


class TensorBiPoly(LinearCombination):
    """Element of T(g) ⊗̆ T(g), keyed by pairs of tensor words."""

    __slots__ = ()

    @staticmethod
    def sort_key(key):
        return (word_key(key[0]), word_key(key[1]))

    @staticmethod
    def format_key(key):
        left, right = key
        if not left and not right:
            return "1"
        return f"{_paren(left)}⊗̆{_paren(right)}"

    @staticmethod
    def _mul_keys(k1, k2):
        return (k1[0] + k2[0], k1[1] + k2[1])

    @classmethod
    def pure(cls, a: TensorPoly, b: TensorPoly) -> "TensorBiPoly":
        """The simple tensor ``a ⊗̆ b``."""
        terms: dict = {}
        for w1, c1 in a.raw_items():
            for w2, c2 in b.raw_items():
                accumulate(terms, (w1, w2), c1 * c2)
        return cls._wrap(terms)

    def weight_set(self) -> set[int]:
        return {word_weight(l) + word_weight(r) for l, r in self._terms}


def _paren(word: TensorWord) -> str:
    s = format_word(word)
    return f"({s})" if len(word) > 1 else s


def _as_poly(p) -> TensorPoly:
    if isinstance(p, TensorPoly):
        return p
    # a bare tuple could be a word or a product tree, so refuse to guess
    raise TypeError(f"expected a TensorPoly, got {type(p).__name__}")


# --- coproduct ---

@lru_cache(maxsize=None)
def _word_coproduct(word: TensorWord) -> tuple:
    n = len(word)
    out: dict = {}
    for mask in range(1 << n):
        left = tuple(word[i] for i in range(n) if mask >> i & 1)
        right = tuple(word[i] for i in range(n) if not mask >> i & 1)
        accumulate(out, (left, right), 1)
    return tuple(out.items())


def word_coproduct(word: TensorWord) -> list[tuple[TensorWord, TensorWord, int]]:
    """Sweedler legs ``(a1, a2, multiplicity)`` of a single word."""
    return [(l, r, c) for (l, r), c in _word_coproduct(word)]


def coproduct(p) -> TensorBiPoly:
    """Unshuffle coproduct: sum over the 2^n order-preserving splits of each word."""
    terms: dict = {}
    for word, c in _as_poly(p).raw_items():
        for key, m in _word_coproduct(word):
            accumulate(terms, key, c * m)
    return TensorBiPoly._wrap(terms)


# --- tau action ---

def _tau_word(x: MagmaElement, word: TensorWord, coeff, out: dict) -> None:
    for k, y in enumerate(word):
        accumulate(out, word[:k] + ((x, y),) + word[k + 1:], coeff)


def tau_derivation(x: MagmaElement, p) -> TensorPoly:
    """Derivation of T(g) extending ``y -> x ⋄ y`` (Leibniz rule on factors)."""
    out: dict = {}
    for word, c in _as_poly(p).raw_items():
        _tau_word(x, word, c, out)
    return TensorPoly._wrap(out)


def tau_hom(a, b) -> TensorPoly:
    """``tau(a) b``: the algebra map sending a word x1⊗…⊗xn to tau_x1∘…∘tau_xn."""
    a, b = _as_poly(a), _as_poly(b)
    out: dict = {}
    for aw, ac in a.raw_items():
        cur = b.to_dict()
        for x in reversed(aw):
            nxt: dict = {}
            for word, c in cur.items():
                _tau_word(x, word, c, nxt)
            cur = nxt
            if not cur:
                break
        for word, c in cur.items():
            accumulate(out, word, ac * c)
    return TensorPoly._wrap(out)


# Bialgebra-action reading of the same map: a · b = tau(a) b.
action_dot = tau_hom


# --- K-operator ---

@lru_cache(maxsize=None)
def _k_word(word: TensorWord) -> tuple:
    if len(word) <= 1:
        return ((word, 1),)
    x, rest = word[0], word[1:]
    out: dict = {}
    for w, c in _k_word(rest):
        accumulate(out, (x,) + w, c)
    shifted: dict = {}
    _tau_word(x, rest, 1, shifted)
    for w, c in shifted.items():
        for w2, c2 in _k_word(w):
            accumulate(out, w2, -c * c2)
    return tuple(out.items())


@lru_cache(maxsize=None)
def _kinv_word(word: TensorWord) -> tuple:
    if len(word) <= 1:
        return ((word, 1),)
    x, rest = word[0], word[1:]
    out: dict = {}
    for w, c in _kinv_word(rest):
        accumulate(out, (x,) + w, c)
        _tau_word(x, w, c, out)
    return tuple(out.items())


def _apply_cached(table, p) -> TensorPoly:
    out: dict = {}
    for word, c in _as_poly(p).raw_items():
        for w, c2 in table(word):
            accumulate(out, w, c * c2)
    return TensorPoly._wrap(out)


def k_apply(p) -> TensorPoly:
    """K-operator via K(x⊗a) = x⊗K(a) - K(tau_x a); words of length ≤ 1 are fixed."""
    return _apply_cached(_k_word, p)


def k_inverse(p) -> TensorPoly:
    """Inverse K-operator via K⁻¹(x⊗b) = x⊗K⁻¹(b) + tau_x(K⁻¹(b))."""
    return _apply_cached(_kinv_word, p)


# --- maps on T(g) ⊗̆ T(g) ---

def bi_apply(f, g, bp: TensorBiPoly) -> TensorBiPoly:
    """``(f ⊗̆ g)(bp)`` for linear maps f, g on T(g)."""
    out: dict = {}
    for (l, r), c in bp.raw_items():
        fl, gr = f(TensorPoly._wrap({l: 1})), g(TensorPoly._wrap({r: 1}))
        for w1, c1 in fl.raw_items():
            for w2, c2 in gr.raw_items():
                accumulate(out, (w1, w2), c * c1 * c2)
    return TensorBiPoly._wrap(out)


def multiply_legs(bp: TensorBiPoly) -> TensorPoly:
    """The multiplication ``m: b1 ⊗̆ b2 -> b1 ⊗ b2``."""
    out: dict = {}
    for (l, r), c in bp.raw_items():
        accumulate(out, l + r, c)
    return TensorPoly._wrap(out)
