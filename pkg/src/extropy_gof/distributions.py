"""Parametric families used as the null and the alternatives.

Every family is a frozen dataclass with vectorised ``pdf``, ``cdf``, ``sf``
and ``ppf`` methods. Sampling is always by inverse transform of uniform
variates (:meth:`from_uniform`) so that a fixed uniform stream maps to the
same sample in every family that shares a quantile function.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

import numpy as np

from extropy_gof.errors import DomainError

ArrayLike = Union[float, np.ndarray]


class _Family:
    """Shared helpers; subclasses define the four distribution functions."""

    support: tuple[float, float]

    def sf(self, x: ArrayLike) -> np.ndarray:
        return 1.0 - self.cdf(x)

    def from_uniform(self, u: ArrayLike) -> np.ndarray:
        """Map uniform variates on [0, 1) to draws from this family."""
        return self.ppf(u)

    def sample(self, size, rng: np.random.Generator) -> np.ndarray:
        return self.from_uniform(rng.random(size))


@dataclass(frozen=True)
class Exponential(_Family):
    """Exponential distribution with ``rate`` (density rate * exp(-rate * x))."""

    rate: float = 1.0

    def __post_init__(self):
        if not (self.rate > 0 and np.isfinite(self.rate)):
            raise DomainError(f"exponential rate must be positive and finite, got {self.rate}")

    @property
    def support(self) -> tuple[float, float]:
        return (0.0, np.inf)

    def pdf(self, x: ArrayLike) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        return np.where(x >= 0, self.rate * np.exp(-self.rate * np.maximum(x, 0.0)), 0.0)

    def cdf(self, x: ArrayLike) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        return np.where(x > 0, -np.expm1(-self.rate * np.maximum(x, 0.0)), 0.0)

    def sf(self, x: ArrayLike) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        return np.where(x > 0, np.exp(-self.rate * np.maximum(x, 0.0)), 1.0)

    def ppf(self, u: ArrayLike) -> np.ndarray:
        u = np.asarray(u, dtype=float)
        return -np.log1p(-u) / self.rate


@dataclass(frozen=True)
class Uniform(_Family):
    """Uniform distribution on ``[low, high]``."""

    low: float = 0.0
    high: float = 1.0

    def __post_init__(self):
        if not (np.isfinite(self.low) and np.isfinite(self.high) and self.low < self.high):
            raise DomainError(f"uniform endpoints need low < high, got [{self.low}, {self.high}]")

    @property
    def support(self) -> tuple[float, float]:
        return (self.low, self.high)

    def pdf(self, x: ArrayLike) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        inside = (x >= self.low) & (x <= self.high)
        return np.where(inside, 1.0 / (self.high - self.low), 0.0)

    def cdf(self, x: ArrayLike) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        return np.clip((x - self.low) / (self.high - self.low), 0.0, 1.0)

    def sf(self, x: ArrayLike) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        return np.clip((self.high - x) / (self.high - self.low), 0.0, 1.0)

    def ppf(self, u: ArrayLike) -> np.ndarray:
        u = np.asarray(u, dtype=float)
        return self.low + u * (self.high - self.low)


@dataclass(frozen=True)
class Weibull(_Family):
    """Weibull distribution with cdf ``1 - exp(-(x / scale) ** shape)``.

    ``Weibull(1, 1)`` is the unit-rate exponential.
    """

    shape: float = 1.0
    scale: float = 1.0

    def __post_init__(self):
        for name, value in (("shape", self.shape), ("scale", self.scale)):
            if not (value > 0 and np.isfinite(value)):
                raise DomainError(f"weibull {name} must be positive and finite, got {value}")

    @property
    def support(self) -> tuple[float, float]:
        return (0.0, np.inf)

    def _z(self, x: np.ndarray) -> np.ndarray:
        return (np.maximum(x, 0.0) / self.scale) ** self.shape

    def pdf(self, x: ArrayLike) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        xs = np.maximum(x, 0.0) / self.scale
        with np.errstate(divide="ignore", invalid="ignore"):
            dens = self.shape / self.scale * xs ** (self.shape - 1.0) * np.exp(-(xs**self.shape))
        return np.where(x >= 0, dens, 0.0)

    def cdf(self, x: ArrayLike) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        return np.where(x > 0, -np.expm1(-self._z(x)), 0.0)

    def sf(self, x: ArrayLike) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        return np.where(x > 0, np.exp(-self._z(x)), 1.0)

    def ppf(self, u: ArrayLike) -> np.ndarray:
        u = np.asarray(u, dtype=float)
        return self.scale * (-np.log1p(-u)) ** (1.0 / self.shape)


Distribution = Union[Exponential, Uniform, Weibull]


def from_spec(kind: str, **params) -> Distribution:
    """Build a family from a name such as ``"uniform"`` and keyword parameters."""
    kinds = {"exponential": Exponential, "uniform": Uniform, "weibull": Weibull}
    try:
        cls = kinds[kind.lower()]
    except KeyError:
        raise DomainError(f"unknown distribution {kind!r}; expected one of {sorted(kinds)}") from None
    return cls(**params)
