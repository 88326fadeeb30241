"""Covariant symmetrization of v⊗v⊗v⊗v⊗w, round by round.

Run: python demos/02_symmetrize_v4_w.py
"""
from fractions import Fraction

from covsym.symmetrizer import (
    SpecialMonomial,
    iter_reduction,
    lemma4_correction,
    positional_split,
    sym_to_positions,
    theta_special,
)


def show(poly):
    return " + ".join(f"{c} {m}" for m, c in sorted(poly.items(), key=lambda t: str(t[0]))) or "0"


start = SpecialMonomial(4, (), 0)

## Split v^4⊗w into its symmetrization plus neighbour differences M_p - M_{p+1}
sym, diffs = positional_split(start)
print("symmetric part:", sym)
print("difference coefficients:", [(p, str(c)) for p, c in diffs])

## Each difference is congruent to minus a curvature correction
for p, _ in diffs:
    print(f"  p={p}: correction =", show(lemma4_correction(p, 3 - p, ())))

## Rounds until nothing is left
for k, (sym, rem) in enumerate(iter_reduction({start: Fraction(1)}), 1):
    print(f"round {k}: sym = {sym}")
    print(f"         remainder = {show(rem)}")

## Final answer per tensor position
theta = theta_special(4)
for mono, c in sorted(sym_to_positions(theta).items(), key=lambda t: (t[0].vcount, str(t[0]))):
    print(f"  {str(c):>5}  {mono}")
