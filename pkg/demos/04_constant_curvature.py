"""Checking Σ H_n/n! against geometry on the sphere and the hyperbolic plane.

Run: python demos/04_constant_curvature.py
"""
import math

from covsym.oracle import (
    SURFACES,
    closed_form,
    h_series_linear,
    linear_response,
    scalar_eval,
    standard_frame,
    zsinz_coeff,
)
from covsym.symmetrizer import compute_h

## With q2 -> 1 and higher q's -> 0, H_n/n! are the coefficients of z/sin z
for n in range(0, 13, 2):
    print(n, scalar_eval(compute_h(n), 1) / math.factorial(n), zsinz_coeff(n))

## The derivative of the double exponential map along w ⟂ v
print(f"{'surface':>10} {'|v|':>5} {'finite diff':>14} {'series N=10':>14} {'closed form':>14}")
for name in ("sphere", "hyperbolic", "flat"):
    s = SURFACES[name]
    for vnorm in (0.1, 0.2, 0.3, 0.4):
        x, v, w = standard_frame(s, vnorm)
        fd = s.inner(linear_response(s, x, v, w), w)
        print(f"{name:>10} {vnorm:5.1f} {fd:14.10f} {h_series_linear(s.curvature, vnorm, 10):14.10f} "
              f"{closed_form(s.curvature, vnorm):14.10f}")

## Truncation: how the series error falls with the order at |v| = 0.4
for order in range(0, 14, 2):
    err = abs(h_series_linear(1, 0.4, order) - closed_form(1, 0.4))
    print(f"order {order:2d}: error {err:.2e}")
