"""Exact covariant symmetrization and the Taylor operators H_n of the double exponential map."""
from .fixtures import load_fixtures
from .magma import (
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
)
from .oracle import h_numeric, h_series_linear, run_oracle, scalar_eval, zsinz_coeff
from .qpoly import DomainError, QPoly, word_count_of_degree
from .symmetrizer import (
    SpecialMonomial,
    compute_h,
    h_from_theta,
    lemma4_correction,
    positional_split,
    reduce_once,
    theta_special,
)

__version__ = "0.1.0"
