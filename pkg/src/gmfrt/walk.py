"""Seeded Monte Carlo estimates of first return times.

``sample_frt`` is a plain-Python walker; ``estimate_mfrt`` and
``frt_histogram`` run the same walk, draw for draw, in a numba kernel over
many trials. Both consume the streams defined in :mod:`gmfrt.rng`, so
trial ``t`` of ``estimate_mfrt(..., seed=s)`` equals
``sample_frt(..., seed=derive_seed(s, t))``.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

import numba
import numpy as np

from .errors import BadStartError, GmfrtError, NotConnectedError, TooSmallError, WalkTruncatedError
from .graph import Graph, is_connected
from .rng import GAMMA, MASK, SplitMix64, derive_seed

# the bundled TBB is too old for numba; skip it rather than warn on every run
numba.config.THREADING_LAYER_PRIORITY = ["omp", "workqueue", "tbb"]

DEFAULT_MAX_STEPS = 10**8
TRUNCATED = -1

_GAMMA = np.uint64(GAMMA)
_C1 = np.uint64(0xBF58476D1CE4E5B9)
_C2 = np.uint64(0x94D049BB133111EB)


@numba.njit(inline="always")
def _mix(z):
    z = (z ^ (z >> np.uint64(30))) * _C1
    z = (z ^ (z >> np.uint64(27))) * _C2
    return z ^ (z >> np.uint64(31))


@numba.njit(parallel=True, cache=True)
def _frt_kernel(indptr, indices, start, seed, trials, max_steps, out):
    for t in numba.prange(trials):
        state = _mix(seed + np.uint64(t + 1) * _GAMMA)
        pos = start
        steps = 0
        while True:
            state += _GAMMA
            r = _mix(state)
            lo = indptr[pos]
            deg = np.uint64(indptr[pos + 1] - lo)
            pos = indices[lo + np.int64(((r >> np.uint64(32)) * deg) >> np.uint64(32))]
            steps += 1
            if pos == start:
                break
            if steps >= max_steps:
                steps = -1
                break
        out[t] = steps


def _validate(g: Graph, start: int, max_steps: int) -> None:
    if g.n < 2:
        raise TooSmallError(f"walks need n >= 2, got n={g.n}")
    if not is_connected(g):
        raise NotConnectedError("graph is not connected")
    if not 0 <= start < g.n:
        raise BadStartError(f"start vertex {start} outside 0..{g.n - 1}")
    if max_steps < 1:
        raise GmfrtError(f"max_steps must be >= 1, got {max_steps}")


def _csr(g: Graph) -> tuple[np.ndarray, np.ndarray]:
    indptr = np.zeros(g.n + 1, dtype=np.int64)
    indptr[1:] = np.cumsum(g.degrees)
    indices = np.array([v for u in range(g.n) for v in g.neighbors(u)], dtype=np.int64)
    return indptr, indices


def sample_frt(g: Graph, start: int, seed: int, max_steps: int = DEFAULT_MAX_STEPS) -> int | None:
    """Steps until the walk from ``start`` first comes back; None if ``max_steps`` is exceeded."""
    _validate(g, start, max_steps)
    rng = SplitMix64(seed)
    nbrs = [g.neighbors(u) for u in range(g.n)]
    pos, steps = start, 0
    while True:
        row = nbrs[pos]
        pos = row[rng.below(len(row))]
        steps += 1
        if pos == start:
            return steps
        if steps >= max_steps:
            return None


def sample_many(
    g: Graph, start: int, trials: int, seed: int, max_steps: int = DEFAULT_MAX_STEPS
) -> np.ndarray:
    """Return times of trials ``0..trials-1``; truncated walks are ``-1``."""
    _validate(g, start, max_steps)
    if trials < 1:
        raise GmfrtError(f"trials must be >= 1, got {trials}")
    indptr, indices = _csr(g)
    out = np.empty(trials, dtype=np.int64)
    _frt_kernel(indptr, indices, np.int64(start), np.uint64(seed & MASK), trials, np.int64(max_steps), out)
    return out


@dataclass(frozen=True)
class WalkStats:
    start: int
    samples: int
    mean_frt: float
    std_error: float
    predicted: Fraction
    max_steps_hit: int
    seed: int

    @property
    def valid(self) -> bool:
        return self.max_steps_hit == 0

    @property
    def z_score(self) -> float:
        diff = self.mean_frt - float(self.predicted)
        if self.std_error == 0:
            return 0.0 if diff == 0 else math.copysign(math.inf, diff)
        return diff / self.std_error

    def to_json(self) -> dict:
        return {
            "start": self.start,
            "samples": self.samples,
            "mean_frt": self.mean_frt,
            "std_error": self.std_error,
            "predicted": f"{self.predicted.numerator}/{self.predicted.denominator}",
            "predicted_decimal": f"{float(self.predicted):.12g}",
            "z_score": self.z_score,
            "max_steps_hit": self.max_steps_hit,
            "seed": self.seed,
        }


def _stats(g: Graph, start: int, seed: int, times: np.ndarray) -> WalkStats:
    done = times[times >= 0]
    count = int(done.size)
    if count == 0:
        raise WalkTruncatedError("every walk hit max_steps")
    total = int(done.sum())
    sd = float(np.std(done, ddof=1)) if count > 1 else 0.0
    return WalkStats(
        start=start,
        samples=count,
        mean_frt=total / count,
        std_error=sd / math.sqrt(count),
        predicted=Fraction(2 * g.m, g.degree(start)),
        max_steps_hit=int(times.size - count),
        seed=seed,
    )


def estimate_mfrt(
    g: Graph,
    start: int,
    trials: int,
    seed: int,
    max_steps: int = DEFAULT_MAX_STEPS,
    strict: bool = True,
) -> WalkStats:
    """Empirical mean return time to ``start`` beside its Kac prediction ``2m / d``.

    With ``strict`` any truncated walk raises :class:`WalkTruncatedError`;
    otherwise the mean covers completed walks and ``max_steps_hit`` says how
    many were dropped.
    """
    stats = _stats(g, start, seed, sample_many(g, start, trials, seed, max_steps))
    if strict and not stats.valid:
        raise WalkTruncatedError(f"{stats.max_steps_hit} walks exceeded max_steps={max_steps}")
    return stats


def estimate_all_vertices(
    g: Graph, trials: int, seed: int, max_steps: int = DEFAULT_MAX_STEPS, strict: bool = True
) -> list[WalkStats]:
    """One :class:`WalkStats` per vertex; vertex ``v`` is seeded with ``derive_seed(seed, v)``."""
    return [estimate_mfrt(g, v, trials, derive_seed(seed, v), max_steps, strict) for v in range(g.n)]


@dataclass(frozen=True)
class FrtHistogram:
    counts: dict[int, int]
    truncated: int

    @property
    def trials(self) -> int:
        return sum(self.counts.values()) + self.truncated

    @property
    def mean(self) -> float:
        done = sum(self.counts.values())
        return sum(k * c for k, c in self.counts.items()) / done


def frt_histogram(
    g: Graph, start: int, trials: int, seed: int, max_steps: int = DEFAULT_MAX_STEPS
) -> FrtHistogram:
    times = sample_many(g, start, trials, seed, max_steps)
    counts = Counter(int(x) for x in times[times >= 0])
    return FrtHistogram(dict(sorted(counts.items())), int((times < 0).sum()))
