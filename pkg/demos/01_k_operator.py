"""The K-operator on the tensor algebra of a free nonassociative algebra.

Run: python demos/01_k_operator.py
"""
from covsym.identities import cocycle, coalgebra_morphism, hopf_selfcheck
from covsym.magma import TensorPoly, coproduct, k_apply, k_inverse, magma_product, tau_hom

x, y = 0, 1
W = TensorPoly.word

## K peels one letter at a time: K(x⊗a) = x⊗K(a) - K(tau_x a)
print("K(x⊗y)    =", k_apply(W(x, y)))
print("K(x⊗x⊗x)  =", k_apply(W(x, x, x)))
print("K⁻¹(x⊗y)  =", k_inverse(W(x, y)))

## The unshuffle coproduct, and K commuting with it
print("Δ(x⊗y)    =", coproduct(W(x, y)))
lhs, rhs = coalgebra_morphism(W(x, y, x))
print("Δ∘K == (K⊗̆K)∘Δ on x⊗y⊗x:", lhs == rhs)

## tau turns words into compositions of left multiplications
print("tau(x⊗y) z =", tau_hom(W(x, y), W(2)))

## The cocycle identity K(A)⊗K(B) = Σ K(A₁ ⊗ tau(K A₂) B)
A, B = W(x, y) + W(magma_product(y, y)), W(x)
lhs, rhs = cocycle(A, B)
print("cocycle holds for A =", A, ", B =", B, ":", lhs == rhs)

## Everything at once, exhaustively and on random elements
for r in hopf_selfcheck(generators=2, max_degree=4, trials=20, seed=1):
    print(f"  {r.name:32s} {r.cases:4d} cases  {'ok' if r.passed else 'FAILED'}")
