"""Spacing estimators of extropy and the exponentiality statistic.

All estimators share the window spacing ``X[i+m] - X[i-m]`` of the order
statistics, with indices clamped to ``[1, N]``. Single-sample functions
raise :class:`DegenerateSampleError` on a zero spacing; the batched
:func:`delta_statistics` marks such rows with NaN instead so Monte Carlo
callers can count and drop them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

from extropy_gof.errors import DegenerateSampleError, DomainError, ValidationError
from extropy_gof.oracles import coefficient

MIN_SAMPLE_SIZE = 3


@dataclass(frozen=True, eq=False)
class SortedSample:
    """Ascending order statistics of a raw sample."""

    values: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.values, dtype=float)
        if v.ndim != 1:
            raise ValidationError("a sample must be one-dimensional")
        if v.size < MIN_SAMPLE_SIZE:
            raise ValidationError(f"need at least {MIN_SAMPLE_SIZE} observations, got {v.size}")
        if not np.all(np.isfinite(v)):
            raise ValidationError("sample contains NaN or infinite entries")
        if np.any(np.diff(v) < 0):
            raise ValidationError("SortedSample values must be ascending; use sort_sample()")
        v = v.copy()
        v.setflags(write=False)
        object.__setattr__(self, "values", v)

    @property
    def N(self) -> int:
        return int(self.values.size)

    def __len__(self) -> int:
        return self.N

    def __eq__(self, other) -> bool:
        return isinstance(other, SortedSample) and np.array_equal(self.values, other.values)


SampleLike = Union[SortedSample, Sequence[float], np.ndarray]


def sort_sample(raw: Sequence[float], nonnegative: bool = False) -> SortedSample:
    """Sort ``raw`` ascending (stable); optionally reject negative values."""
    v = np.asarray(raw, dtype=float)
    if v.ndim != 1:
        raise ValidationError("a sample must be one-dimensional")
    if v.size < MIN_SAMPLE_SIZE:
        raise ValidationError(f"need at least {MIN_SAMPLE_SIZE} observations, got {v.size}")
    if not np.all(np.isfinite(v)):
        bad = int(np.flatnonzero(~np.isfinite(v))[0])
        raise ValidationError(f"non-finite value {v[bad]!r} at position {bad}")
    if nonnegative and np.any(v < 0):
        bad = int(np.flatnonzero(v < 0)[0])
        raise ValidationError(f"negative value {v[bad]!r} at position {bad}; exponentiality needs x >= 0")
    return SortedSample(np.sort(v, kind="stable"))


def _as_sorted(sample: SampleLike) -> SortedSample:
    return sample if isinstance(sample, SortedSample) else sort_sample(sample)


def check_window(N: int, m: int) -> int:
    """Validate a window size against a sample size: ``1 <= m < N/2``."""
    if isinstance(m, bool) or int(m) != m:
        raise DomainError(f"window size must be an integer, got {m!r}")
    m = int(m)
    if m < 1 or 2 * m >= N:
        raise DomainError(f"window size m={m} must satisfy 1 <= m < N/2 for N={N}")
    return m


def c_coefficients(N: int, m: int) -> np.ndarray:
    """Boundary weights ``c_i``: ramp 1 -> 2, plateau 2, ramp 2 -> 1."""
    m = check_window(N, m)
    i = np.arange(1, N + 1, dtype=float)
    return np.where(i <= m, 1.0 + (i - 1) / m, np.where(i <= N - m, 2.0, 1.0 + (N - i) / m))


def _window_bounds(N: int, m: int) -> tuple[np.ndarray, np.ndarray]:
    i = np.arange(1, N + 1)
    return np.minimum(i + m, N) - 1, np.maximum(i - m, 1) - 1


def _spacings(x: np.ndarray, m: int) -> np.ndarray:
    hi, lo = _window_bounds(x.shape[-1], m)
    return x[..., hi] - x[..., lo]


def spacing(sample: SampleLike, i: int, m: int) -> float:
    """``X[min(i+m, N)] - X[max(i-m, 1)]`` for a 1-based index ``i``."""
    s = _as_sorted(sample)
    if not 1 <= i <= s.N:
        raise DomainError(f"index {i} outside 1..{s.N}")
    x = s.values
    return float(x[min(i + m, s.N) - 1] - x[max(i - m, 1) - 1])


def _checked_spacings(s: SortedSample, m: int) -> np.ndarray:
    d = _spacings(s.values, check_window(s.N, m))
    zero = np.flatnonzero(d <= 0)
    if zero.size:
        raise DegenerateSampleError(int(zero[0]) + 1, m)
    return d


# Each estimator is sum_i w_i / spacing_i; these return the w_i. Weights and
# sums are carried in extended precision: the statistic is a small difference
# of two sums of similar size, so double rounding would cost several digits.

_EXT = np.longdouble


def _ratio(num: int, den: int):
    if max(num, den).bit_length() < 1000:
        return _EXT(num) / _EXT(den)
    return _EXT(num / den)


def _record_scale(n: int, k: int):
    # k^(2n) / Gamma(n)^2 exactly for moderate n
    if n <= 150:
        return _ratio(k ** (2 * n), math.factorial(n - 1) ** 2)
    return _EXT(math.exp(2 * n * math.log(k) - 2.0 * math.lgamma(n)))


def _coefficient_ext(n: int, k: int):
    coefficient(n, k)  # validates n, k
    if n <= 150:
        # k Gamma(2n-1) / (2^(2n-2) Gamma(n)^2) = k C(2n-2, n-1) / 4^(n-1)
        return _ratio(k * math.comb(2 * n - 2, n - 1), 4 ** (n - 1))
    return _EXT(coefficient(n, k))


def _positions(N: int):
    return _EXT(1) - np.arange(1, N + 1, dtype=_EXT) / _EXT(N + 1)


def _extropy_weights(N: int, m: int) -> np.ndarray:
    return -c_coefficients(N, m).astype(_EXT) * (_EXT(m) / N) / (_EXT(2) * N)


def _record_weights(N: int, m: int, n: int, k: int) -> np.ndarray:
    p = _positions(N)
    scale = _record_scale(n, k) / (_EXT(2) * N)
    return -scale * np.log(p) ** (2 * n - 2) * p ** (2 * k - 2) * (_EXT(2 * m) / N)


def _fused22_weights(N: int, m: int) -> np.ndarray:
    p = _positions(N)
    return -(32 * np.log(p) ** 2 * p**2 - c_coefficients(N, m).astype(_EXT)) * (_EXT(m) / N) / (_EXT(2) * N)


def _delta_weights(N: int, m: int, n: int, k: int) -> np.ndarray:
    if (n, k) == (2, 2):
        return _fused22_weights(N, m)
    return _record_weights(N, m, n, k) - _coefficient_ext(n, k) * _extropy_weights(N, m)


def _weighted_sum(w: np.ndarray, d: np.ndarray):
    return np.sum(w / d.astype(_EXT))


@dataclass(frozen=True)
class DeltaStatistic:
    """Estimated J(U_{n,k}) - coefficient(n, k) * J(X) for one sample."""

    value: float
    n: int
    k: int
    m: int
    N: int

    def __post_init__(self):
        if not math.isfinite(self.value):
            raise ValidationError(f"statistic must be finite, got {self.value!r}")

    def __float__(self) -> float:
        return float(self.value)

    def __abs__(self) -> float:
        return abs(self.value)


def extropy_estimate(sample: SampleLike, m: int) -> float:
    """Spacing estimator of J(X); strictly negative."""
    s = _as_sorted(sample)
    d = _checked_spacings(s, m)
    return float(_weighted_sum(_extropy_weights(s.N, m), d))


def record_extropy_estimate(sample: SampleLike, m: int, n: int, k: int) -> float:
    """Spacing estimator of J(U_{n,k}) with plotting positions ``i/(N+1)``."""
    s = _as_sorted(sample)
    coefficient(n, k)  # validates n, k
    d = _checked_spacings(s, m)
    return float(_weighted_sum(_record_weights(s.N, m, n, k), d))


def delta_estimate(sample: SampleLike, m: int, n: int = 2, k: int = 2) -> DeltaStatistic:
    """Composed statistic: record extropy estimate minus the scaled extropy estimate."""
    s = _as_sorted(sample)
    coef = _coefficient_ext(n, k)
    d = _checked_spacings(s, m)
    value = _weighted_sum(_record_weights(s.N, m, n, k), d) - coef * _weighted_sum(_extropy_weights(s.N, m), d)
    return DeltaStatistic(float(value), n, k, m, s.N)


def delta22_fused(sample: SampleLike, m: int) -> DeltaStatistic:
    """The (n, k) = (2, 2) statistic as one sum with weights ``32 L_i - c_i``."""
    s = _as_sorted(sample)
    d = _checked_spacings(s, m)
    return DeltaStatistic(float(_weighted_sum(_fused22_weights(s.N, m), d)), 2, 2, m, s.N)


def delta_statistic(sample: SampleLike, m: int, n: int = 2, k: int = 2) -> DeltaStatistic:
    """The statistic as used for testing: fused form for (2, 2), composed otherwise."""
    return delta22_fused(sample, m) if (n, k) == (2, 2) else delta_estimate(sample, m, n, k)


def delta_statistics(samples: np.ndarray, m: int, n: int = 2, k: int = 2, presorted: bool = False) -> np.ndarray:
    """Signed statistic for every row of a 2-D array of samples.

    Rows whose spacings include a zero come back as NaN.
    """
    x = np.asarray(samples, dtype=float)
    if x.ndim != 2:
        raise ValidationError("samples must be a 2-D array (replications x N)")
    if not presorted:
        x = np.sort(x, axis=1)
    N = x.shape[1]
    m = check_window(N, m)
    w = _delta_weights(N, m, n, k)
    d = _spacings(x, m).astype(_EXT)
    bad = np.any(d <= 0, axis=1)
    with np.errstate(divide="ignore", invalid="ignore"):
        out = (w / d).sum(axis=1)
    out = out.astype(float)
    out[bad] = np.nan
    return out
