"""Exact stationary distribution, mean first return times, and their global average.

For the simple random walk on a connected graph the stationary weight of
vertex ``i`` is ``d_i / 2m`` and, by Kac's lemma, the mean first return time
to ``i`` is its reciprocal ``2m / d_i``. Everything here is exact
(:class:`fractions.Fraction`); floats appear only when rendering.
"""

from __future__ import annotations

import math
from collections import Counter
from collections.abc import Iterable
from dataclasses import dataclass
from fractions import Fraction

from .errors import NotConnectedError, TooSmallError, ZeroDegreeError
from .graph import Graph, is_connected


def _check_walkable(g: Graph) -> None:
    if g.n < 2:
        raise TooSmallError(f"random walk metrics need n >= 2, got n={g.n}")
    if not is_connected(g):
        raise NotConnectedError("graph is not connected")


def stationary(g: Graph) -> list[Fraction]:
    _check_walkable(g)
    total = 2 * g.m
    return [Fraction(d, total) for d in g.degrees]


def mfrt(g: Graph) -> list[Fraction]:
    _check_walkable(g)
    total = 2 * g.m
    return [Fraction(total, d) for d in g.degrees]


def gmfrt_of_degrees(degrees: Iterable[int]) -> Fraction:
    """GMFRT from a degree multiset alone: ``(2m/n) * sum(1/d_i)``."""
    degs = list(degrees)
    if not degs:
        raise TooSmallError("empty degree multiset")
    if min(degs) < 1:
        raise ZeroDegreeError(f"degree multiset has a zero entry: {sorted(degs, reverse=True)}")
    counts = Counter(degs)
    lcm = math.lcm(*counts)
    harmonic = sum(c * (lcm // d) for d, c in counts.items())
    return Fraction(sum(degs) * harmonic, len(degs) * lcm)


def gmfrt(g: Graph) -> Fraction:
    _check_walkable(g)
    return gmfrt_of_degrees(g.degrees)


def decimal(x: Fraction, digits: int = 12) -> str:
    """Fixed 12-significant-digit rendering used in every report."""
    return f"{float(x):.{digits}g}"


def fraction_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class GmfrtReport:
    n: int
    m: int
    mfrt: tuple[Fraction, ...]
    stationary: tuple[Fraction, ...]
    gmfrt: Fraction

    def to_json(self) -> dict:
        pair = lambda x: [x.numerator, x.denominator]  # noqa: E731
        return {
            "n": self.n,
            "m": self.m,
            "mfrt": [pair(x) for x in self.mfrt],
            "stationary": [pair(x) for x in self.stationary],
            "gmfrt": pair(self.gmfrt),
            "gmfrt_decimal": decimal(self.gmfrt),
        }


def report(g: Graph) -> GmfrtReport:
    mu = mfrt(g)
    return GmfrtReport(
        n=g.n,
        m=g.m,
        mfrt=tuple(mu),
        stationary=tuple(stationary(g)),
        gmfrt=sum(mu, Fraction(0)) / g.n,
    )
