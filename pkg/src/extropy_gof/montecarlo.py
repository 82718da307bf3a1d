"""Seeded Monte Carlo machinery: critical values, power, size and bootstrap p-values.

Random streams
--------------
Replications are grouped in fixed blocks of :data:`BLOCK_SIZE`. Block ``b``
of a simulation draws its uniforms from a PCG64 generator seeded with
``SeedSequence(master_seed, spawn_key=(purpose, N, b))``, so replication
``r`` always sees the same uniforms (row ``r % BLOCK_SIZE`` of block
``r // BLOCK_SIZE``) whatever the number of workers. Samples are produced by
inverse transform of those uniforms.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Iterable, Optional, Sequence

import numpy as np

from extropy_gof.distributions import Distribution, Exponential
from extropy_gof.errors import DomainError, SimulationError, ValidationError
from extropy_gof.estimators import DeltaStatistic, check_window, delta_statistic, delta_statistics, sort_sample

DEFAULT_SEED = 20240517
DEFAULT_REPLICATIONS = 10_000
BLOCK_SIZE = 500
MAX_NULL_DEGENERATE = 0.01
MAX_ALT_DEGENERATE = 0.05

_PURPOSES = {"null": 0, "alternative": 1, "bootstrap": 2}


class QuantileConvention(str, Enum):
    """How a significance level maps to a quantile of |statistic|."""

    ONE_SIDED = "one-sided"
    TWO_SIDED_STYLE = "two-sided-style"

    def level(self, alpha: float) -> float:
        if not 0 < alpha < 1:
            raise DomainError(f"alpha must lie in (0, 1), got {alpha}")
        return 1.0 - alpha if self is QuantileConvention.ONE_SIDED else 1.0 - alpha / 2.0


class Decision(str, Enum):
    REJECT = "RejectExponentiality"
    FAIL_TO_REJECT = "FailToReject"


def _check_seed(seed: int) -> int:
    if isinstance(seed, bool) or int(seed) != seed or not 0 <= seed < 2**64:
        raise DomainError(f"master seed must be an unsigned 64-bit integer, got {seed!r}")
    return int(seed)


@dataclass(frozen=True)
class SimulationConfig:
    """One Monte Carlo cell: sample size, window, replications and seeding."""

    N: int
    m: int
    replications: int = DEFAULT_REPLICATIONS
    master_seed: int = DEFAULT_SEED
    convention: QuantileConvention = QuantileConvention.ONE_SIDED
    n: int = 2
    k: int = 2

    def __post_init__(self):
        if self.replications < 100:
            raise DomainError(f"need at least 100 replications, got {self.replications}")
        check_window(self.N, self.m)
        object.__setattr__(self, "master_seed", _check_seed(self.master_seed))
        object.__setattr__(self, "convention", QuantileConvention(self.convention))

    def with_cell(self, N: int, m: int) -> "SimulationConfig":
        return SimulationConfig(N, m, self.replications, self.master_seed, self.convention, self.n, self.k)


# ------------------------------------------------------------------- streams


def replication_stream(master_seed: int, purpose: str, N: int, block: int) -> np.random.Generator:
    """Generator for one block of replications."""
    seq = np.random.SeedSequence(_check_seed(master_seed), spawn_key=(_PURPOSES[purpose], int(N), int(block)))
    return np.random.Generator(np.random.PCG64(seq))


def sample_from(dist: Distribution, N: int, stream: np.random.Generator) -> np.ndarray:
    """N inverse-cdf draws from ``dist`` using uniforms from ``stream``."""
    return dist.from_uniform(stream.random(N))


def _block_statistics(args) -> np.ndarray:
    config, dist, purpose, block, scale_free = args
    rows = min(BLOCK_SIZE, config.replications - block * BLOCK_SIZE)
    u = replication_stream(config.master_seed, purpose, config.N, block).random((rows, config.N))
    x = dist.from_uniform(u)
    stats = delta_statistics(x, config.m, config.n, config.k)
    return stats * x.mean(axis=1) if scale_free else stats


def simulate_statistics(
    config: SimulationConfig,
    dist: Distribution,
    purpose: str = "null",
    workers: int = 1,
    scale_free: bool = False,
) -> np.ndarray:
    """Signed statistic for each of ``config.replications`` samples (NaN = degenerate).

    With ``scale_free`` each statistic is multiplied by its own sample mean,
    which removes the dependence on the exponential rate.
    """
    blocks = [(config, dist, purpose, b, scale_free) for b in range(math.ceil(config.replications / BLOCK_SIZE))]
    if workers <= 1:
        parts = [_block_statistics(a) for a in blocks]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_block_statistics, blocks))
    return np.concatenate(parts)


def empirical_quantile(values: np.ndarray, level: float) -> float:
    """Value at 1-based position ``ceil(level * R)`` of the ascending values."""
    v = np.sort(np.asarray(values, dtype=float))
    if v.size == 0:
        raise ValidationError("no values to take a quantile of")
    pos = math.ceil(round(level * v.size, 9))
    return float(v[min(max(pos, 1), v.size) - 1])


def _null_magnitudes(config: SimulationConfig, null: Distribution, workers: int) -> np.ndarray:
    stats = simulate_statistics(config, null, "null", workers)
    bad = int(np.isnan(stats).sum())
    if bad > MAX_NULL_DEGENERATE * config.replications:
        raise SimulationError(f"{bad} of {config.replications} null replications had zero spacings")
    return np.abs(stats[~np.isnan(stats)])


def critical_values(
    config: SimulationConfig,
    alphas: Sequence[float],
    null: Optional[Distribution] = None,
    workers: int = 1,
) -> dict[float, float]:
    """Critical values for several levels from one shared null simulation."""
    mags = _null_magnitudes(config, null or Exponential(1.0), workers)
    return {a: empirical_quantile(mags, config.convention.level(a)) for a in alphas}


def critical_value(
    config: SimulationConfig, alpha: float, null: Optional[Distribution] = None, workers: int = 1
) -> float:
    """Monte Carlo critical value of |statistic| under the exponential null."""
    return critical_values(config, [alpha], null, workers)[alpha]


@dataclass(frozen=True)
class PowerResult:
    rejection_rate: float
    alternative: Distribution
    config: SimulationConfig
    degenerate_count: int
    alpha: float
    critical: float
    rejections: int


def power(
    config: SimulationConfig,
    alpha: float,
    alternative: Distribution,
    critical: float,
    workers: int = 1,
) -> PowerResult:
    """Fraction of alternative samples whose |statistic| exceeds ``critical``."""
    stats = simulate_statistics(config, alternative, "alternative", workers)
    bad = np.isnan(stats)
    degenerate = int(bad.sum())
    if degenerate > MAX_ALT_DEGENERATE * config.replications:
        raise SimulationError(
            f"{degenerate} of {config.replications} replications under {alternative} had zero spacings"
        )
    rejections = int((np.abs(stats[~bad]) > critical).sum())
    rate = rejections / (config.replications - degenerate)
    return PowerResult(rate, alternative, config, degenerate, alpha, critical, rejections)


# ---------------------------------------------------------------- bootstrap


@dataclass(frozen=True)
class TestReport:
    """Outcome of the parametric-bootstrap exponentiality test on one sample."""

    __test__ = False  # not a pytest class

    statistic: DeltaStatistic
    lambda_hat: float
    p_value: float
    alpha: float
    decision: Decision
    replications: int
    master_seed: int
    exceedances: int
    degenerate_count: int

    def __post_init__(self):
        if (self.decision is Decision.REJECT) != (self.p_value < self.alpha):
            raise ValidationError("decision is inconsistent with p-value and alpha")


def p_value(
    data: Iterable[float],
    m: int,
    replications: int = DEFAULT_REPLICATIONS,
    seed: int = DEFAULT_SEED,
    alpha: float = 0.05,
    n: int = 2,
    k: int = 2,
    workers: int = 1,
) -> TestReport:
    """Parametric-bootstrap test of exponentiality.

    The rate is fitted as ``1 / mean`` and ``replications`` samples of the
    same size are drawn from the fitted exponential. Each bootstrap sample
    has its rate refitted, so observed and simulated statistics are compared
    on the rate-free scale ``|statistic| / rate_hat``:
    ``p = (1 + #{|sim| / rate_sim >= |obs| / rate_hat}) / (R_used + 1)``.
    """
    if not 0 < alpha < 1:
        raise DomainError(f"alpha must lie in (0, 1), got {alpha}")
    sample = sort_sample(list(data), nonnegative=True)
    mean = float(sample.values.mean())
    if mean <= 0:
        raise ValidationError("sample mean is zero; cannot fit an exponential rate")
    observed = delta_statistic(sample, m, n, k)
    lam = 1.0 / mean
    config = SimulationConfig(sample.N, m, replications, seed, QuantileConvention.ONE_SIDED, n, k)
    sims = simulate_statistics(config, Exponential(lam), "bootstrap", workers, scale_free=True)
    bad = np.isnan(sims)
    degenerate = int(bad.sum())
    if degenerate > MAX_NULL_DEGENERATE * replications:
        raise SimulationError(f"{degenerate} of {replications} bootstrap replications had zero spacings")
    exceed = int((np.abs(sims[~bad]) >= abs(observed.value) * mean).sum())
    p = (1 + exceed) / (replications - degenerate + 1)
    decision = Decision.REJECT if p < alpha else Decision.FAIL_TO_REJECT
    return TestReport(observed, lam, p, alpha, decision, replications, config.master_seed, exceed, degenerate)


# Sample size upper bound -> proposed window.
_WINDOW_TABLE = ((10, 4), (20, 7), (40, 12), (60, 16), (99, 21))


def recommend_window(N: int) -> int:
    """Proposed window size for a sample of size ``N``, kept below N/2."""
    if N < 3:
        raise DomainError(f"need N >= 3, got {N}")
    m = next((w for bound, w in _WINDOW_TABLE if N <= bound), 25)
    return min(m, (N - 1) // 2)


# --------------------------------------------------------- critical tables


@dataclass(frozen=True)
class Provenance:
    master_seed: int
    replications: int
    convention: QuantileConvention
    n: int = 2
    k: int = 2

    def header(self) -> str:
        return (
            f"# seed={self.master_seed} R={self.replications} convention={self.convention.value} "
            f"n={self.n} k={self.k}"
        )

    @classmethod
    def parse_header(cls, line: str) -> "Provenance":
        fields = dict(tok.split("=", 1) for tok in line.lstrip("#").split())
        return cls(
            int(fields["seed"]),
            int(fields["R"]),
            QuantileConvention(fields["convention"]),
            int(fields["n"]),
            int(fields["k"]),
        )


def _sig6(x: float) -> float:
    return float(f"{x:.6g}")


def _alpha_key(alpha: float) -> str:
    return f"{alpha:g}"


@dataclass
class CriticalValueTable:
    """Critical values keyed by ``(N, m, alpha)``, all rounded to 6 significant digits."""

    provenance: Provenance
    entries: dict[tuple[int, int, str], float] = field(default_factory=dict)

    def get(self, N: int, m: int, alpha: float) -> Optional[float]:
        return self.entries.get((N, m, _alpha_key(alpha)))

    def __getitem__(self, key: tuple[int, int, float]) -> float:
        N, m, alpha = key
        value = self.get(N, m, alpha)
        if value is None:
            raise KeyError(key)
        return value

    def set(self, N: int, m: int, alpha: float, value: float) -> None:
        self.entries[(N, m, _alpha_key(alpha))] = _sig6(value)

    def to_text(self) -> str:
        rows = sorted(self.entries.items(), key=lambda kv: (kv[0][0], kv[0][1], -float(kv[0][2])))
        lines = [self.provenance.header()]
        lines += [f"{N},{m},{a},{v:.6g}" for (N, m, a), v in rows]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "CriticalValueTable":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines or not lines[0].startswith("#"):
            raise ValidationError("critical-value cache is missing its header line")
        table = cls(Provenance.parse_header(lines[0]))
        for ln in lines[1:]:
            N, m, a, v = ln.split(",")
            table.entries[(int(N), int(m), _alpha_key(float(a)))] = float(v)
        return table

    def save(self, path: os.PathLike) -> None:
        Path(path).write_text(self.to_text(), encoding="utf-8")

    @classmethod
    def load(cls, path: os.PathLike, provenance: Provenance) -> "CriticalValueTable":
        """Cached rows when the file header matches ``provenance``, else an empty table."""
        p = Path(path)
        if p.exists():
            try:
                cached = cls.from_text(p.read_text(encoding="utf-8"))
            except (ValidationError, ValueError, KeyError):
                cached = None
            if cached is not None and cached.provenance == provenance:
                return cached
        return cls(provenance)


def critical_table(
    cells: Iterable[tuple[int, int]],
    alphas: Sequence[float],
    replications: int = DEFAULT_REPLICATIONS,
    seed: int = DEFAULT_SEED,
    convention: QuantileConvention = QuantileConvention.ONE_SIDED,
    n: int = 2,
    k: int = 2,
    cache: Optional[os.PathLike] = None,
    workers: int = 1,
) -> CriticalValueTable:
    """Fill a table for every ``(N, m)`` cell, reusing and updating ``cache``."""
    prov = Provenance(_check_seed(seed), replications, QuantileConvention(convention), n, k)
    table = CriticalValueTable.load(cache, prov) if cache else CriticalValueTable(prov)
    dirty = False
    for N, m in cells:
        missing = [a for a in alphas if table.get(N, m, a) is None]
        if not missing:
            continue
        config = SimulationConfig(N, m, replications, seed, prov.convention, n, k)
        for a, c in critical_values(config, missing, workers=workers).items():
            table.set(N, m, a, c)
        dirty = True
    if cache and (dirty or not Path(cache).exists()):
        table.save(cache)
    return table
