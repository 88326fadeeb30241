"""Exact checks of the bialgebra identities satisfied by K and tau.

Every check returns ``(lhs, rhs)`` so a failing case can be reported in
full; :func:`hopf_selfcheck` drives them over an exhaustive word range and a
seeded random sample.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .linear import accumulate
from .magma import (
    TensorBiPoly,
    TensorPoly,
    bi_apply,
    coproduct,
    k_apply,
    k_inverse,
    tau_derivation,
    tau_hom,
)

EXHAUSTIVE_CAP = 3


def _identity(p):
    return p


def coalgebra_morphism(a: TensorPoly):
    """Δ(K a) versus (K ⊗̆ K)(Δ a)."""
    return coproduct(k_apply(a)), bi_apply(k_apply, k_apply, coproduct(a))


def derivation_coproduct(x, a: TensorPoly):
    """Δ(δa) versus Σ δa₁ ⊗̆ a₂ + a₁ ⊗̆ δa₂ for δ = tau_x."""
    def delta(p):
        return tau_derivation(x, p)

    da = coproduct(a)
    return coproduct(delta(a)), bi_apply(delta, _identity, da) + bi_apply(_identity, delta, da)


def cocycle(A: TensorPoly, B: TensorPoly):
    """K(A) ⊗ K(B) versus Σ K(A₁ ⊗ tau(K A₂) B)."""
    rhs = TensorPoly()
    for (a1, a2), c in coproduct(A).raw_items():
        inner = tau_hom(k_apply(TensorPoly({a2: 1})), B)
        rhs = rhs + k_apply(TensorPoly({a1: 1}) * inner).scale(c)
    return k_apply(A) * k_apply(B), rhs


def action_coproduct(a: TensorPoly, b: TensorPoly):
    """Δ(tau(a) b) versus Σ tau(a₁)b₁ ⊗̆ tau(a₂)b₂."""
    out: dict = {}
    db = coproduct(b).raw_items()
    for (a1, a2), ca in coproduct(a).raw_items():
        for (b1, b2), cb in db:
            left = tau_hom(TensorPoly({a1: 1}), TensorPoly({b1: 1}))
            right = tau_hom(TensorPoly({a2: 1}), TensorPoly({b2: 1}))
            for key, c in TensorBiPoly.pure(left, right).raw_items():
                accumulate(out, key, ca * cb * c)
    return coproduct(tau_hom(a, b)), TensorBiPoly(out)


def action_product(a: TensorPoly, b1: TensorPoly, b2: TensorPoly):
    """tau(a)(b₁ ⊗ b₂) versus Σ tau(a₁)b₁ ⊗ tau(a₂)b₂."""
    rhs = TensorPoly()
    for (a1, a2), c in coproduct(a).raw_items():
        term = tau_hom(TensorPoly({a1: 1}), b1) * tau_hom(TensorPoly({a2: 1}), b2)
        rhs = rhs + term.scale(c)
    return tau_hom(a, b1 * b2), rhs


def action_module(a1: TensorPoly, a2: TensorPoly, b: TensorPoly):
    """(a₁ ⊗ a₂)·b versus a₁·(a₂·b)."""
    return tau_hom(a1 * a2, b), tau_hom(a1, tau_hom(a2, b))


def k_roundtrip(a: TensorPoly):
    """(K∘K⁻¹ a, K⁻¹∘K a) versus (a, a), packed as pairs of TensorPoly."""
    return (k_apply(k_inverse(a)), k_inverse(k_apply(a))), (a, a)


# --- generators of test elements ---

def words_up_to(generators: int, max_len: int) -> list[tuple]:
    """All words over the first ``generators`` generators of length ≤ max_len."""
    out = []
    for n in range(max_len + 1):
        out.extend(itertools.product(range(generators), repeat=n))
    return out


def random_magma(rng: random.Random, generators: int, max_weight: int = 2):
    if max_weight <= 1 or rng.random() < 0.6:
        return rng.randrange(generators)
    split = rng.randint(1, max_weight - 1)
    return (random_magma(rng, generators, split), random_magma(rng, generators, max_weight - split))


def random_element(rng: random.Random, generators: int, length: int, terms: int = 3) -> TensorPoly:
    """Random combination of words of exactly ``length`` factors with small rational coefficients."""
    out: dict = {}
    for _ in range(rng.randint(1, terms)):
        word = tuple(random_magma(rng, generators) for _ in range(length))
        num = rng.choice([n for n in range(-5, 6) if n])
        accumulate(out, word, Fraction(num, rng.randint(1, 4)))
    if not out:
        return random_element(rng, generators, length, terms)
    return TensorPoly(out)


def _split_budget(rng: random.Random, total: int, parts: int) -> list[int]:
    lengths = []
    for _ in range(parts):
        n = rng.randint(0, total)
        lengths.append(n)
        total -= n
    rng.shuffle(lengths)
    return lengths


# --- driver ---

@dataclass
class CheckResult:
    name: str
    cases: int = 0
    failures: int = 0
    first_failure: str | None = None
    extra: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.failures == 0 and self.cases > 0

    def record(self, ok: bool, describe) -> None:
        self.cases += 1
        if not ok:
            self.failures += 1
            if self.first_failure is None:
                self.first_failure = describe()


def _run(result: CheckResult, check, *args) -> None:
    lhs, rhs = check(*args)
    result.record(lhs == rhs, lambda: f"args={[str(a) for a in args]} lhs={lhs} rhs={rhs}")


def hopf_selfcheck(generators: int = 2, max_degree: int = 3, trials: int = 0, seed: int = 0) -> list[CheckResult]:
    """Run every identity exhaustively on short words, then on random elements.

    The exhaustive range is all generator words of length ≤ min(max_degree, 3);
    cocycle and action checks pair them with second arguments one letter
    shorter. Random trials use elements whose lengths add up to ≤ max_degree,
    with factors drawn from magma elements of weight ≤ 2.
    """
    if generators < 1 or max_degree < 1:
        raise ValueError("generators and max_degree must be positive")
    d = min(max_degree, EXHAUSTIVE_CAP)
    words = [TensorPoly({w: 1}) for w in words_up_to(generators, d)]
    shorter = [TensorPoly({w: 1}) for w in words_up_to(generators, max(d - 1, 0))]
    magmas = list(range(generators)) + [(i, j) for i in range(generators) for j in range(generators)]

    names = ["coalgebra_morphism", "derivation_coproduct", "cocycle", "action_coproduct",
             "action_product", "action_module", "k_roundtrip"]
    ex = {n: CheckResult(f"{n}[exhaustive]") for n in names}
    for a in words:
        _run(ex["coalgebra_morphism"], coalgebra_morphism, a)
        _run(ex["k_roundtrip"], k_roundtrip, a)
        for x in magmas:
            _run(ex["derivation_coproduct"], derivation_coproduct, x, a)
        for b in shorter:
            _run(ex["cocycle"], cocycle, a, b)
            _run(ex["action_coproduct"], action_coproduct, a, b)
            _run(ex["action_module"], action_module, a, b, b)
        for b1, b2 in itertools.product(shorter, repeat=2):
            if len(next(iter(b1))) + len(next(iter(b2))) <= d:
                _run(ex["action_product"], action_product, a, b1, b2)
    results = list(ex.values())

    if trials > 0:
        rng = random.Random(seed)
        rnd = {n: CheckResult(f"{n}[random]") for n in names}
        for _ in range(trials):
            a = random_element(rng, generators, rng.randint(0, max_degree))
            _run(rnd["coalgebra_morphism"], coalgebra_morphism, a)
            _run(rnd["k_roundtrip"], k_roundtrip, a)
            _run(rnd["derivation_coproduct"], derivation_coproduct, random_magma(rng, generators), a)
            la, lb = _split_budget(rng, max_degree, 2)
            A, B = random_element(rng, generators, la), random_element(rng, generators, lb)
            _run(rnd["cocycle"], cocycle, A, B)
            _run(rnd["action_coproduct"], action_coproduct, A, B)
            la, l1, l2 = _split_budget(rng, max_degree, 3)
            a, b1, b2 = (random_element(rng, generators, n) for n in (la, l1, l2))
            _run(rnd["action_product"], action_product, a, b1, b2)
            _run(rnd["action_module"], action_module, a, b1, b2)
        results.extend(rnd.values())
    return results
