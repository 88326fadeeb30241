"""Covariant symmetrization of v^{⊗n} ⊗ w on a torsion-free manifold.

Working terms are special monomials ``v^{⊗i} ⊗ (Q w) ⊗ v^{⊗j}`` where ``Q``
is a q-word. One reduction round writes each monomial as its normalized
position-symmetrization plus a telescoping sum of neighbour differences
``M_p - M_{p+1}``, and trades every difference for the curvature correction
that makes it vanish under ``mu``. Corrections have at least two fewer ``v``
factors, so the remainder dies after ⌊n/2⌋ + 1 rounds.

Two routes produce H_n:

* :func:`theta_special` + :func:`h_from_theta` run the rounds literally on
  dictionaries of monomials. Reference route, fine up to n ≈ 14.
* :func:`compute_h` uses the fact that corrections only prepend letters to
  ``Q``: the reduction of ``(i, Q, j)`` is the reduction of ``(i, (), j)``
  with ``Q`` appended to every output word. H_n therefore factors through
  transfer matrices between (left, right) states of equal v-count, applied
  to one row per partial word. This is what reaches n = 30.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, NamedTuple

import numpy as np

from .linear import accumulate
from .qpoly import QPoly, QWord, degree

SpecialPoly = dict  # SpecialMonomial -> Fraction
SymPoly = dict      # (vcount N, QWord) -> Fraction, for (1/(N+1)) Σ_p M_p


class SpecialMonomial(NamedTuple):
    left: int
    word: QWord
    right: int

    @property
    def vcount(self) -> int:
        return self.left + self.right

    @property
    def vdegree(self) -> int:
        return self.left + self.right + degree(self.word)

    def __str__(self) -> str:
        parts = []
        if self.left:
            parts.append("v" if self.left == 1 else f"v^{self.left}")
        payload = "w" if not self.word else "".join(f"q{d}" for d in self.word) + "w"
        parts.append(payload)
        if self.right:
            parts.append("v" if self.right == 1 else f"v^{self.right}")
        return "⊗".join(parts)


def sym_to_positions(sym: SymPoly) -> SpecialPoly:
    """Expand normalized symmetrizations into per-position monomial coefficients."""
    out: SpecialPoly = {}
    for (n, word), c in sym.items():
        share = c / (n + 1)
        for p in range(n + 1):
            accumulate(out, SpecialMonomial(p, word, n - p), share)
    return out


def positional_split(mono: SpecialMonomial, coeff=1) -> tuple[SymPoly, list[tuple[int, Fraction]]]:
    """Write ``coeff * mono`` as ``coeff * Sym(N, Q) + Σ_p d_p (M_p - M_{p+1})``.

    Returns the symmetric part and the list of ``(p, d_p)`` for p = 0..N-1,
    with ``d_p = coeff * ([p >= i] - (p+1)/(N+1))``. Zero ``d_p`` are kept so
    the list always has N entries.
    """
    coeff = Fraction(coeff)
    n = mono.vcount
    sym = {(n, mono.word): coeff} if coeff else {}
    diffs = [(p, coeff * (int(p >= mono.left) - Fraction(p + 1, n + 1))) for p in range(n)]
    return sym, diffs


def expand_split(word: QWord, n: int, sym: SymPoly, diffs) -> SpecialPoly:
    """Re-expand the output of :func:`positional_split` into monomials."""
    out = sym_to_positions(sym)
    for p, c in diffs:
        accumulate(out, SpecialMonomial(p, word, n - p), c)
        accumulate(out, SpecialMonomial(p + 1, word, n - p - 1), -c)
    return out


@lru_cache(maxsize=None)
def _correction_shape(p: int, m: int) -> tuple:
    # (left, letter, right, multiplicity) of the double sum, word-independent
    out: dict = {}
    for k in range(p + 1):
        b = math.comb(p, k)
        for l in range(1, m + 1):
            accumulate(out, (p + l - k - 1, k + 2, m - l), b)
    return tuple((l, d, r, c) for (l, d, r), c in out.items())


def lemma4_correction(p: int, m: int, word: QWord) -> SpecialPoly:
    """Σ_{k=0..p} Σ_{l=1..m} C(p,k) v^{⊗p+l-k-1} ⊗ (q_{k+2} Q w) ⊗ v^{⊗m-l}.

    Modulo ker mu, ``M_p - M_{p+1} ≡ -lemma4_correction(p, m, Q)`` where
    ``M_p = v^{⊗p} ⊗ Qw ⊗ v^{⊗m+1}``. Empty for m = 0.
    """
    if p < 0 or m < 0:
        raise ValueError("p and m must be non-negative")
    return {SpecialMonomial(l, (d,) + tuple(word), r): Fraction(c)
            for l, d, r, c in _correction_shape(p, m)}


def reduce_once(poly: SpecialPoly) -> tuple[SymPoly, SpecialPoly]:
    """One reduction round: symmetric part plus congruent remainder."""
    sym: SymPoly = {}
    rem: SpecialPoly = {}
    for mono in sorted(poly, key=_mono_key):
        c = poly[mono]
        n = mono.vcount
        if n == 0:
            accumulate(sym, (0, mono.word), c)
            continue
        part, diffs = positional_split(mono, c)
        for key, v in part.items():
            accumulate(sym, key, v)
        for p, d in diffs:
            if not d:
                continue
            for l, letter, r, mult in _correction_shape(p, n - p - 1):
                accumulate(rem, SpecialMonomial(l, (letter,) + mono.word, r), -d * mult)
    return sym, rem


def _mono_key(m: SpecialMonomial):
    return (m.left + m.right, m.left, degree(m.word), m.word)


def iter_reduction(poly: SpecialPoly) -> Iterator[tuple[SymPoly, SpecialPoly]]:
    """Yield ``(sym, remainder)`` for each round until the remainder is empty."""
    rem = dict(poly)
    while rem:
        sym, rem = reduce_once(rem)
        yield sym, rem


def theta_special(n: int) -> SymPoly:
    """Covariant symmetrization of v^{⊗n} ⊗ w as a combination of Sym(N, Q)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    total: SymPoly = {}
    for sym, _ in iter_reduction({SpecialMonomial(n, (), 0): Fraction(1)}):
        for key, c in sym.items():
            accumulate(total, key, c)
    return total


def h_from_theta(theta: SymPoly) -> QPoly:
    """Tensor-degree-one part (vcount 0) of a symmetrization result."""
    return QPoly({word: c for (n, word), c in theta.items() if n == 0})


# --- factored engine ---

@lru_cache(maxsize=None)
def transfer_matrix(level: int, letter: int) -> np.ndarray:
    """Integer matrix ``T[i, i2]`` for prepending ``letter`` from v-count ``level``.

    State ``i`` is the monomial ``v^{⊗i} ⊗ Qw ⊗ v^{⊗level-i}``. Dividing by
    ``level + 1`` gives the exact weight with which it feeds
    ``v^{⊗i2} ⊗ (q_letter Q w) ⊗ v^{⊗level-letter-i2}`` after one round.
    """
    k = letter - 2
    target = level - letter
    if k < 0 or target < 0:
        raise ValueError("letter must satisfy 2 <= letter <= level")
    t = np.zeros((level + 1, target + 1), dtype=object)
    for i in range(level + 1):
        for i2 in range(target + 1):
            t[i, i2] = sum(math.comb(p, k) * ((p + 1) - (level + 1) * (p >= i))
                           for p in range(k, i2 + k + 1))
    t.setflags(write=False)
    return t


def compute_h(n: int) -> QPoly:
    """The operator H_n = π₁ Θ(v^{⊗n} ⊗ w) as a polynomial in q-words.

    Rows at level L hold, for one partial word each, the weights of the
    states with v-count L, scaled by (n+1)!/(L+1)! so that every entry stays
    an integer. Levels are processed from n down to 0; words that land on
    level 1 can never be symmetrized into tensor degree one and are dropped.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return QPoly.one()
    start = np.zeros((1, n + 1), dtype=object)
    start[0, n] = 1
    pending: dict[int, list] = {n: [([()], start)]}
    result: dict = {}
    for level in range(n, -1, -1):
        chunks = pending.pop(level, None)
        if not chunks:
            continue
        words = [w for ws, _ in chunks for w in ws]
        rows = chunks[0][1] if len(chunks) == 1 else np.concatenate([r for _, r in chunks])
        del chunks
        if level == 0:
            denom = math.factorial(n + 1)
            for w, x in zip(words, rows[:, 0]):
                if x:
                    result[w] = Fraction(x, denom)
            break
        for letter in range(2, level + 1):
            target = level - letter
            if target == 1:
                continue
            rescale = math.prod(range(target + 2, level + 1))
            new_rows = rows.dot(transfer_matrix(level, letter)) * rescale
            pending.setdefault(target, []).append(([(letter,) + w for w in words], new_rows))
    return QPoly(result)


def h_series(max_n: int) -> list[QPoly]:
    """``[H_0, ..., H_max_n]``."""
    return [compute_h(n) for n in range(max_n + 1)]
