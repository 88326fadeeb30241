"""Constant-curvature checks for the H_n operators.

On a surface of constant curvature κ the covariant derivatives of R vanish,
so every q_d with d ≥ 3 is zero and q_2(v) acts on w ⟂ v as κ|v|². The
series Σ H_n/n! then collapses to a scalar power series in κ|v|², which is
compared with z/sin z (κ = 1), 1 (κ = 0) and z/sinh z (κ = -1), and with a
finite-difference derivative of the double exponential map computed from
closed-form geodesics.
"""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .qpoly import DomainError, QPoly
from .symmetrizer import compute_h

ROUNDTRIP_TOL = 1e-12


def scalar_eval(p: QPoly, c) -> Fraction:
    """Substitute q_2 -> c and q_d -> 0 for d ≥ 3."""
    c = Fraction(c)
    total = Fraction(0)
    for word, coeff in p.raw_items():
        if all(d == 2 for d in word):
            total += coeff * c ** len(word)
    return total


@lru_cache(maxsize=None)
def _zsinz_series(order: int) -> tuple[Fraction, ...]:
    # sin z / z = Σ (-1)^k z^{2k} / (2k+1)!, inverted by long division in z^2
    denom = [Fraction((-1) ** k, math.factorial(2 * k + 1)) for k in range(order + 1)]
    inv = [Fraction(1)]
    for k in range(1, order + 1):
        inv.append(-sum(denom[j] * inv[k - j] for j in range(1, k + 1)))
    return tuple(inv)


def zsinz_coeff(n: int) -> Fraction:
    """Maclaurin coefficient of z^n in z / sin z (n even)."""
    if n < 0 or n % 2:
        raise DomainError("z/sin z has only even, non-negative powers")
    return _zsinz_series(n // 2)[n // 2]


def closed_form(kappa: int, z: float) -> float:
    """Eigenvalue of H(v) on w ⟂ v for |v| = z on a surface of curvature κ."""
    if z == 0 or kappa == 0:
        return 1.0
    return z / math.sin(z) if kappa > 0 else z / math.sinh(z)


def h_series_linear(kappa: int, vnorm: float, order: int) -> float:
    """Σ_{n ≤ order} scalar_eval(H_n, κ|v|²)/n!, evaluated exactly then rounded."""
    c = kappa * Fraction(vnorm) ** 2
    total = sum((scalar_eval(compute_h(n), c) / math.factorial(n) for n in range(order + 1)),
                Fraction(0))
    return float(total)


# --- surfaces ---

class Surface:
    """A 2-dimensional model surface embedded in 3 coordinates."""

    name = ""
    curvature = 0

    def inner(self, a, b) -> float:
        return float(np.dot(a, b))

    def norm(self, a) -> float:
        return math.sqrt(max(self.inner(a, a), 0.0))

    def point_residual(self, x) -> float:
        raise NotImplementedError

    def tangent_residual(self, x, v) -> float:
        raise NotImplementedError

    def exp(self, x, v):
        raise NotImplementedError

    def log(self, x, y):
        raise NotImplementedError

    def transport(self, x, v, w):
        """Parallel transport of w from x to exp(x, v) along the geodesic."""
        raise NotImplementedError


class Plane(Surface):
    name = "flat"
    curvature = 0

    def point_residual(self, x):
        return abs(float(x[2]))

    def tangent_residual(self, x, v):
        return abs(float(v[2]))

    def exp(self, x, v):
        return np.asarray(x, float) + v

    def log(self, x, y):
        return np.asarray(y, float) - x

    def transport(self, x, v, w):
        return np.array(w, float)


class Sphere(Surface):
    name = "sphere"
    curvature = 1

    def point_residual(self, x):
        return abs(self.inner(x, x) - 1.0)

    def tangent_residual(self, x, v):
        return abs(self.inner(x, v))

    def exp(self, x, v):
        t = self.norm(v)
        if t == 0:
            return np.array(x, float)
        if t >= math.pi:
            raise DomainError(f"|v| = {t} is beyond the injectivity radius")
        return math.cos(t) * x + math.sin(t) * (v / t)

    def log(self, x, y):
        c = self.inner(x, y)
        u = y - c * x
        s = self.norm(u)
        if s < 1e-15:
            if c > 0:
                return np.zeros(3)
            raise DomainError("log of an antipodal point is undefined")
        return math.atan2(s, c) * (u / s)

    def transport(self, x, v, w):
        t = self.norm(v)
        if t == 0:
            return np.array(w, float)
        u = v / t
        a = self.inner(w, u)
        return w + a * ((math.cos(t) - 1.0) * u - math.sin(t) * x)


class Hyperboloid(Surface):
    """Upper sheet of ⟨x, x⟩ = -1 in Minkowski space, signature (-, +, +)."""

    name = "hyperbolic"
    curvature = -1

    def inner(self, a, b):
        return float(-a[0] * b[0] + a[1] * b[1] + a[2] * b[2])

    def point_residual(self, x):
        return abs(self.inner(x, x) + 1.0) + max(0.0, -float(x[0]))

    def tangent_residual(self, x, v):
        return abs(self.inner(x, v))

    def exp(self, x, v):
        t = self.norm(v)
        if t == 0:
            return np.array(x, float)
        return math.cosh(t) * x + math.sinh(t) * (v / t)

    def log(self, x, y):
        c = -self.inner(x, y)
        u = y - c * x
        s = self.norm(u)
        if s < 1e-15:
            return np.zeros(3)
        return math.asinh(s) * (u / s)

    def transport(self, x, v, w):
        t = self.norm(v)
        if t == 0:
            return np.array(w, float)
        u = v / t
        a = self.inner(w, u)
        return w + a * ((math.cosh(t) - 1.0) * u + math.sinh(t) * x)


SURFACES: dict[str, Surface] = {s.name: s for s in (Sphere(), Hyperboloid(), Plane())}


def get_surface(name: str) -> Surface:
    try:
        return SURFACES[name]
    except KeyError:
        raise DomainError(f"unknown surface {name!r}; choose from {sorted(SURFACES)}") from None


def surf_exp(surface: Surface, x, v):
    return surface.exp(np.asarray(x, float), np.asarray(v, float))


def surf_log(surface: Surface, x, y):
    return surface.log(np.asarray(x, float), np.asarray(y, float))


def surf_transport(surface: Surface, x, v, w):
    return surface.transport(np.asarray(x, float), np.asarray(v, float), np.asarray(w, float))


def h_numeric(surface: Surface, x, v, w):
    """log_x(exp_{exp_x v}(transported w)): the double exponential map pulled back to T_x."""
    y = surf_exp(surface, x, v)
    return surf_log(surface, x, surf_exp(surface, y, surf_transport(surface, x, v, w)))


def linear_response(surface: Surface, x, v, w, eps: float = 1e-4):
    """Central difference (h(v, εw) - h(v, -εw)) / 2ε."""
    w = np.asarray(w, float)
    return (h_numeric(surface, x, v, eps * w) - h_numeric(surface, x, v, -eps * w)) / (2 * eps)


def standard_frame(surface: Surface, vnorm: float):
    """Base point, v of length ``vnorm`` and a unit w ⟂ v used by the oracle."""
    if isinstance(surface, Plane):
        x = np.array([0.3, -0.2, 0.0])
        return x, np.array([vnorm, 0.0, 0.0]), np.array([0.0, 1.0, 0.0])
    x = np.array([1.0, 0.0, 0.0])
    return x, np.array([0.0, vnorm, 0.0]), np.array([0.0, 0.0, 1.0])


@dataclass
class OracleResult:
    surface: str
    vnorm: float
    order: int
    eps: float
    tol: float
    finite_difference: float
    series: float
    closed_form: float
    err_fd_series: float
    err_fd_closed: float
    err_series_closed: float

    @property
    def passed(self) -> bool:
        return max(self.err_fd_series, self.err_fd_closed, self.err_series_closed) <= self.tol

    def to_dict(self) -> dict:
        d = asdict(self)
        d["passed"] = self.passed
        return d


def run_oracle(surface_name: str, vnorm: float, order: int = 10, eps: float = 1e-4,
               tol: float = 1e-6) -> OracleResult:
    """Compare the finite-difference, truncated-series and closed-form values of H(v) on w ⟂ v."""
    surface = get_surface(surface_name)
    if not math.isfinite(vnorm) or vnorm < 0:
        raise DomainError("vnorm must be finite and non-negative")
    if surface.name == "sphere" and vnorm >= 1.0:
        raise DomainError("sphere oracle requires vnorm < 1")
    if order < 0 or eps <= 0:
        raise DomainError("order must be ≥ 0 and eps > 0")
    x, v, w = standard_frame(surface, vnorm)
    resp = linear_response(surface, x, v, w, eps)
    fd = surface.inner(resp, w) / surface.inner(w, w)
    series = h_series_linear(surface.curvature, vnorm, order)
    exact = closed_form(surface.curvature, vnorm)
    return OracleResult(surface.name, vnorm, order, eps, tol, fd, series, exact,
                        abs(fd - series), abs(fd - exact), abs(series - exact))
