"""Taylor operators H_n of the double exponential map, linear in w.

Run: python demos/03_h_operators.py [N]
"""
import sys
import time

from covsym.fixtures import load_fixtures
from covsym.qpoly import render, word_count_of_degree
from covsym.symmetrizer import compute_h

N = int(sys.argv[1]) if len(sys.argv) > 1 else 24

## The first operators, as text and as LaTeX
for n in range(0, 8):
    print(f"H_{n} =", compute_h(n))
print(render(compute_h(6), 6, "latex"))

## Agreement with the published tables
fixtures = load_fixtures()
print("tables 1..10 reproduced:", all(compute_h(n) == fixtures[n] for n in range(1, 11)))

## The number of words grows like Fibonacci numbers; the q_n coefficient is (n-1)/(n+1)
for n in range(2, N + 1, 2):
    t = time.perf_counter()
    h = compute_h(n)
    print(f"n={n:2d}  terms={len(h):7d}  φ={word_count_of_degree(n):7d}  "
          f"coef(q{n})={h[(n,)]}  {time.perf_counter() - t:.2f}s")
