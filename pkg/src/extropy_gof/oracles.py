"""Reference values for extropy of parent and record-value distributions.

Closed forms hold for the exponential parent only; the quadrature routines
work for any family in :mod:`extropy_gof.distributions` and are what the
closed forms (and the sample estimators) are checked against.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Optional

import numpy as np
from scipy import integrate
from scipy.special import gammaln

from extropy_gof.distributions import Distribution, Exponential
from extropy_gof.errors import DomainError, QuadratureError

# Upper truncation point for unbounded supports: integrand below this fraction of its peak.
TAIL_FRACTION = 1e-14
QUAD_ATOL = 1e-9


class Orientation(str, Enum):
    UPPER = "upper"
    LOWER = "lower"


def _check_index(name: str, value) -> int:
    if isinstance(value, bool) or int(value) != value or value < 1:
        raise DomainError(f"{name} must be a positive integer, got {value!r}")
    return int(value)


def _check_rate(lam: float) -> float:
    if not (lam > 0 and math.isfinite(lam)):
        raise DomainError(f"rate must be positive and finite, got {lam!r}")
    return float(lam)


@dataclass(frozen=True)
class RecordSpec:
    """Selects the ``n``-th upper (or lower) ``k``-record value."""

    n: int
    k: int
    orientation: Orientation = Orientation.UPPER

    def __post_init__(self):
        object.__setattr__(self, "n", _check_index("n", self.n))
        object.__setattr__(self, "k", _check_index("k", self.k))
        object.__setattr__(self, "orientation", Orientation(self.orientation))

    @classmethod
    def upper(cls, n: int, k: int) -> "RecordSpec":
        return cls(n, k, Orientation.UPPER)

    @classmethod
    def lower(cls, n: int, k: int) -> "RecordSpec":
        return cls(n, k, Orientation.LOWER)


def _log_gamma_ratio(n: int) -> float:
    """log of Gamma(2n - 1) / Gamma(n)**2."""
    return float(gammaln(2 * n - 1) - 2.0 * gammaln(n))


def coefficient(n: int, k: int) -> float:
    """Multiplier of J(X) in the exponential characterization.

    ``k * Gamma(2n-1) / (2**(2n-2) * Gamma(n)**2)``, evaluated in log space.
    """
    n = _check_index("n", n)
    k = _check_index("k", k)
    return math.exp(math.log(k) + _log_gamma_ratio(n) - (2 * n - 2) * math.log(2.0))


def extropy_exponential(lam: float) -> float:
    """Extropy of Exponential(lam), which is ``-lam / 4``."""
    return -_check_rate(lam) / 4.0


def extropy_upper_record_exp(spec: RecordSpec, lam: float) -> float:
    """Extropy of the n-th upper k-record of an Exponential(lam) parent."""
    lam = _check_rate(lam)
    if spec.orientation is not Orientation.UPPER:
        raise DomainError("extropy_upper_record_exp needs an upper record spec")
    n, k = spec.n, spec.k
    return -lam * math.exp(math.log(k) + _log_gamma_ratio(n) - 2 * n * math.log(2.0))


def extropy_lower_record_exp(spec: RecordSpec, lam: float) -> float:
    """Extropy of the n-th lower k-record of an Exponential(lam) parent."""
    lam = _check_rate(lam)
    if spec.orientation is not Orientation.LOWER:
        raise DomainError("extropy_lower_record_exp needs a lower record spec")
    n, k = spec.n, spec.k
    base = math.exp(math.log(k) + _log_gamma_ratio(n) - 2 * n * math.log(2.0))
    bracket = math.expm1((2 * n - 1) * math.log(2 * k / (2 * k - 1)))
    return -lam * base * bracket


def cre_upper_record_exp(spec: RecordSpec, lam: float) -> float:
    """Cumulative residual extropy of the n-th upper k-record, exponential parent.

    Uses ``-1 / (4 lam k) * sum_{i,j < n} C(i+j, i) / 2**(i+j)``.
    """
    lam = _check_rate(lam)
    if spec.orientation is not Orientation.UPPER:
        raise DomainError("cre_upper_record_exp needs an upper record spec")
    n, k = spec.n, spec.k
    total = sum(math.comb(i + j, i) * 0.5 ** (i + j) for i in range(n) for j in range(n))
    return -total / (4.0 * lam * k)


def cre_upper_record_exp_via_extropy(spec: RecordSpec, lam: float) -> float:
    """Same quantity written as ``sum / (16 k J(X))`` with ``J(X) = -lam/4``."""
    n, k = spec.n, spec.k
    total = sum(math.comb(i + j, i) * 0.5 ** (i + j) for i in range(n) for j in range(n))
    return total / (16.0 * k * extropy_exponential(lam))


# ---------------------------------------------------------------- record laws


def _boundary_zero(mask: np.ndarray, n: int, dens: np.ndarray) -> np.ndarray:
    # (-log p)^(n-1) * p^(k-1) with p -> 0 is assigned its limit 0 for n >= 2
    return np.where(mask, 0.0, dens) if n >= 2 else dens


def record_pdf(dist: Distribution, spec: RecordSpec, x) -> np.ndarray:
    """Density of the selected record value at ``x`` (0 outside the support)."""
    x = np.asarray(x, dtype=float)
    n, k = spec.n, spec.k
    f = dist.pdf(x)
    p = dist.sf(x) if spec.orientation is Orientation.UPPER else dist.cdf(x)
    lo, hi = dist.support
    inside = (x >= lo) & (x <= hi)
    with np.errstate(divide="ignore", invalid="ignore"):
        logp = np.log(p)
        log_norm = n * math.log(k) - math.lgamma(n)
        dens = math.exp(log_norm) * (-logp) ** (n - 1) * p ** (k - 1) * f
    dens = _boundary_zero(p <= 0, n, dens)
    dens = np.where(inside, dens, 0.0)
    return np.where(np.isnan(dens), 0.0, dens)


def _poisson_partial_sum(t: np.ndarray, n: int) -> np.ndarray:
    """sum_{i<n} t**i / i!"""
    total = np.zeros_like(t)
    term = np.ones_like(t)
    for i in range(n):
        if i:
            term = term * t / i
        total = total + term
    return total


def record_sf(dist: Distribution, spec: RecordSpec, x) -> np.ndarray:
    """Survival function of the selected record value."""
    return 1.0 - record_cdf(dist, spec, x) if spec.orientation is Orientation.LOWER else _upper_sf(dist, spec, x)


def _upper_sf(dist: Distribution, spec: RecordSpec, x) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    s = dist.sf(x)
    with np.errstate(divide="ignore", invalid="ignore"):
        t = -spec.k * np.log(s)
        out = s**spec.k * _poisson_partial_sum(t, spec.n)
    return np.where(s <= 0, 0.0, out)


def record_cdf(dist: Distribution, spec: RecordSpec, x) -> np.ndarray:
    """Distribution function of the selected record value."""
    x = np.asarray(x, dtype=float)
    if spec.orientation is Orientation.UPPER:
        return 1.0 - _upper_sf(dist, spec, x)
    F = dist.cdf(x)
    with np.errstate(divide="ignore", invalid="ignore"):
        t = -spec.k * np.log(F)
        out = F**spec.k * _poisson_partial_sum(t, spec.n)
    return np.where(F <= 0, 0.0, out)


# ----------------------------------------------------------------- quadrature


def _integration_limits(dist: Distribution, integrand: Callable[[np.ndarray], np.ndarray]) -> tuple[float, float, list[float]]:
    lo, hi = dist.support
    probes = dist.ppf(np.array([1e-9, 1e-6, 1e-3, 0.05, 0.25, 0.5, 0.75, 0.95, 0.999]))
    probes = probes[np.isfinite(probes)]
    if np.isfinite(hi):
        return lo, hi, sorted(set(float(p) for p in probes if lo < p < hi))
    grid = np.linspace(lo, max(probes[-1], lo + 1.0) * 4.0, 4001)[1:]
    peak = float(np.max(integrand(grid)))
    upper = float(dist.ppf(1.0 - 1e-12))
    while integrand(np.array([upper]))[0] > TAIL_FRACTION * peak:
        upper *= 2.0
    return lo, upper, sorted(set(float(p) for p in probes if lo < p < upper))


def _integrate(dist: Distribution, integrand: Callable[[np.ndarray], np.ndarray], what: str) -> float:
    lo, hi, breaks = _integration_limits(dist, integrand)
    edges = [lo, *breaks, hi]
    total = 0.0
    err = 0.0
    for a, b in zip(edges[:-1], edges[1:]):
        with warnings.catch_warnings():
            warnings.simplefilter("error", integrate.IntegrationWarning)
            try:
                val, abserr = integrate.quad(
                    lambda t: float(integrand(np.array([t]))[0]), a, b, epsabs=1e-14, epsrel=1e-12, limit=500
                )
            except integrate.IntegrationWarning as exc:
                raise QuadratureError(f"{what}: quadrature on [{a:.6g}, {b:.6g}] did not converge ({exc})") from None
        total += val
        err += abserr
    if not math.isfinite(total) or err > QUAD_ATOL:
        raise QuadratureError(f"{what}: integral {total!r} with error estimate {err:.3g} over [{lo:.6g}, {hi:.6g}]")
    return total


def _density(dist: Distribution, spec: Optional[RecordSpec]) -> Callable[[np.ndarray], np.ndarray]:
    if spec is None:
        return dist.pdf
    return lambda x: record_pdf(dist, spec, x)


def extropy_numeric(dist: Distribution, spec: Optional[RecordSpec] = None) -> float:
    """``-1/2 * integral g(x)**2 dx`` for the parent density or a record density."""
    g = _density(dist, spec)
    return -0.5 * _integrate(dist, lambda x: g(x) ** 2, "extropy")


def cre_numeric(dist: Distribution, spec: Optional[RecordSpec] = None) -> float:
    """Cumulative residual extropy ``-1/2 * integral S(x)**2 dx``."""
    if spec is None:
        sf = dist.sf
    else:
        sf = lambda x: record_sf(dist, spec, x)  # noqa: E731
    return -0.5 * _integrate(dist, lambda x: sf(x) ** 2, "cumulative residual extropy")


def delta_true(dist: Distribution, n: int, k: int) -> float:
    """Population value of J(U_{n,k}) - coefficient(n, k) * J(X).

    Zero for every exponential parent.
    """
    return extropy_numeric(dist, RecordSpec.upper(n, k)) - coefficient(n, k) * extropy_numeric(dist)


def pdf_normalization(dist: Distribution, spec: RecordSpec) -> float:
    """Integral of the record density over the support."""
    return _integrate(dist, lambda x: record_pdf(dist, spec, x), "record pdf mass")


__all__ = [
    "Exponential",
    "Orientation",
    "RecordSpec",
    "coefficient",
    "cre_numeric",
    "cre_upper_record_exp",
    "cre_upper_record_exp_via_extropy",
    "delta_true",
    "extropy_exponential",
    "extropy_lower_record_exp",
    "extropy_numeric",
    "extropy_upper_record_exp",
    "pdf_normalization",
    "record_cdf",
    "record_pdf",
    "record_sf",
]
