"""Brute-force ground truth for the extremal constructions.

Two independent enumerations:

* every connected labeled graph with ``n <= 7`` vertices and ``m`` edges
  (edge subsets of popcount ``m`` filtered by connectivity);
* every non-increasing sequence of ``n <= 14`` degrees in ``[1, n-1]`` summing
  to ``2m`` that passes Erdős–Gallai. With ``m >= n-1`` and no zero degree
  such a sequence always has a connected realization, which the certifier
  spot-checks by realizing a random sample.

Since the GMFRT is a function of the degree multiset, the extrema over both
universes must coincide. Comparisons use ``sum(L // d)`` with
``L = lcm(1..n-1)``, an exact integer proportional to ``sum(1/d)``.
"""

from __future__ import annotations

import itertools
import math
import random
from collections.abc import Callable, Iterable, Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from fractions import Fraction

from .errors import EdgeCountOutOfRangeError, GmfrtError, TooLargeError
from .extremal import ExtremalResult, build_max_gmfrt_graph, build_min_gmfrt_graph
from .graph import DegreeSequence, Graph, from_edge_list, is_connected, realize_connected, rewire
from .metrics import gmfrt

LABELED_MAX_N = 7
SEQUENCE_MAX_N = 14

Profile = tuple[int, ...]
Builder = Callable[[int, int], ExtremalResult]


def _check_range(n: int, m: int) -> None:
    if n < 1 or not n - 1 <= m <= n * (n - 1) // 2:
        raise EdgeCountOutOfRangeError(f"no connected simple graph with n={n}, m={m}")


def _labeled_degree_tuples(n: int, m: int) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Degree vector of each connected labeled (n, m) graph, with its edge subset."""
    pairs = [(u, v) for v in range(1, n) for u in range(v)]
    full = (1 << n) - 1
    for combo in itertools.combinations(range(len(pairs)), m):
        adj = [0] * n
        for e in combo:
            u, v = pairs[e]
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        seen = frontier = 1
        while frontier:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= adj[low.bit_length() - 1]
                f ^= low
            frontier = nxt & ~seen
            seen |= nxt
        if seen == full:
            yield combo, tuple(a.bit_count() for a in adj)


def enumerate_connected_labeled(n: int, m: int) -> Iterator[Graph]:
    """Every connected labeled simple graph on ``n`` vertices with ``m`` edges, once each."""
    if n > LABELED_MAX_N:
        raise TooLargeError(f"labeled enumeration is capped at n={LABELED_MAX_N}, got {n}")
    _check_range(n, m)
    pairs = [(u, v) for v in range(1, n) for u in range(v)]
    for combo, _ in _labeled_degree_tuples(n, m):
        yield from_edge_list(n, [pairs[e] for e in combo])


def _candidate_sequences(n: int, total: int, largest: int | None) -> Iterator[list[int]]:
    """Non-increasing length-``n`` lists over ``[1, n-1]`` summing to ``total``."""
    d = [0] * n

    def rec(i: int, remaining: int, cap: int) -> Iterator[list[int]]:
        left = n - i
        if left == 0:
            if remaining == 0:
                yield d
            return
        hi = min(cap, remaining - (left - 1))
        for v in range(hi, 0, -1):
            if v * left < remaining:
                break
            d[i] = v
            yield from rec(i + 1, remaining - v, v)

    if largest is None:
        yield from rec(0, total, n - 1)
    elif 1 <= largest <= n - 1:
        d[0] = largest
        yield from rec(1, total - largest, largest)


def _erdos_gallai(d: list[int]) -> bool:
    """Erdős–Gallai on an already non-increasing list with even sum, every ``k`` checked."""
    n = len(d)
    lhs = 0
    for k in range(1, n + 1):
        lhs += d[k - 1]
        rhs = k * (k - 1)
        for x in d[k:]:
            rhs += x if x < k else k
        if lhs > rhs:
            return False
    return True


def enumerate_connected_degree_sequences(
    n: int, m: int, largest: int | None = None
) -> Iterator[DegreeSequence]:
    """Every connected-realizable degree multiset for ``(n, m)``.

    ``largest`` restricts the stream to sequences whose first (largest)
    degree equals it; the partitions over ``largest`` are disjoint and cover
    the whole stream.
    """
    if n > SEQUENCE_MAX_N:
        raise TooLargeError(f"degree-sequence enumeration is capped at n={SEQUENCE_MAX_N}, got {n}")
    _check_range(n, m)
    for prof in _graphical_profiles(n, m, largest):
        yield DegreeSequence(prof)


def _graphical_profiles(n: int, m: int, largest: int | None = None) -> Iterator[Profile]:
    if n == 1:
        return
    for d in _candidate_sequences(n, 2 * m, largest):
        if _erdos_gallai(d):
            yield tuple(d)


@dataclass(frozen=True)
class ExtremaCertificate:
    n: int
    m: int
    min_gmfrt: Fraction
    max_gmfrt: Fraction
    min_profiles: tuple[Profile, ...]
    max_profiles: tuple[Profile, ...]
    sequence_count: int
    method: str  # "degree_sequences" | "labeled_graphs"
    graph_count: int = 0

    def __post_init__(self) -> None:
        if not self.n <= self.min_gmfrt <= self.max_gmfrt:
            raise GmfrtError(
                f"certificate for ({self.n}, {self.m}) violates n <= min <= max: "
                f"{self.min_gmfrt}, {self.max_gmfrt}"
            )
        for prof in self.min_profiles + self.max_profiles:
            if len(prof) != self.n or sum(prof) != 2 * self.m or min(prof) < 1:
                raise GmfrtError(f"profile {prof} does not belong to ({self.n}, {self.m})")

    def merge(self, other: ExtremaCertificate) -> ExtremaCertificate:
        """Associative combination of certificates over disjoint partitions."""
        if (self.n, self.m, self.method) != (other.n, other.m, other.method):
            raise GmfrtError("cannot merge certificates for different (n, m, method)")

        def pick(a, pa, b, pb, better):
            if a == b:
                return a, tuple(sorted(set(pa) | set(pb), reverse=True))
            return (a, pa) if better(a, b) else (b, pb)

        lo, lo_p = pick(self.min_gmfrt, self.min_profiles, other.min_gmfrt, other.min_profiles, lambda a, b: a < b)
        hi, hi_p = pick(self.max_gmfrt, self.max_profiles, other.max_gmfrt, other.max_profiles, lambda a, b: a > b)
        return replace(
            self,
            min_gmfrt=lo,
            max_gmfrt=hi,
            min_profiles=lo_p,
            max_profiles=hi_p,
            sequence_count=self.sequence_count + other.sequence_count,
            graph_count=self.graph_count + other.graph_count,
        )


def _scan(n: int, m: int, profiles: Iterable[Profile], method: str) -> ExtremaCertificate | None:
    lcm = math.lcm(*range(1, n)) if n > 1 else 1
    best_lo = best_hi = None
    lo_p: set[Profile] = set()
    hi_p: set[Profile] = set()
    seen: set[Profile] = set()
    graphs = 0
    for prof in profiles:
        graphs += 1
        if prof in seen:
            continue
        seen.add(prof)
        score = sum(lcm // d for d in prof)
        if best_lo is None or score < best_lo:
            best_lo, lo_p = score, {prof}
        elif score == best_lo:
            lo_p.add(prof)
        if best_hi is None or score > best_hi:
            best_hi, hi_p = score, {prof}
        elif score == best_hi:
            hi_p.add(prof)
    if best_lo is None:
        return None
    scale = Fraction(2 * m, n * lcm)
    return ExtremaCertificate(
        n=n,
        m=m,
        min_gmfrt=scale * best_lo,
        max_gmfrt=scale * best_hi,
        min_profiles=tuple(sorted(lo_p, reverse=True)),
        max_profiles=tuple(sorted(hi_p, reverse=True)),
        sequence_count=len(seen),
        method=method,
        graph_count=graphs if method == "labeled_graphs" else 0,
    )


def _partition_certificate(args: tuple[int, int, int]) -> ExtremaCertificate | None:
    n, m, largest = args
    return _scan(n, m, _graphical_profiles(n, m, largest), "degree_sequences")


def brute_force_extrema(
    n: int,
    m: int,
    method: str = "degree_sequences",
    workers: int = 1,
) -> ExtremaCertificate:
    """Exact GMFRT minimum and maximum over all connected ``(n, m)`` graphs, with every attaining profile."""
    if n < 2:
        raise GmfrtError(f"GMFRT extrema need n >= 2, got {n}")
    _check_range(n, m)
    if method == "labeled_graphs":
        if n > LABELED_MAX_N:
            raise TooLargeError(f"labeled enumeration is capped at n={LABELED_MAX_N}, got {n}")
        profiles = (tuple(sorted(d, reverse=True)) for _, d in _labeled_degree_tuples(n, m))
        cert = _scan(n, m, profiles, method)
    elif method == "degree_sequences":
        if n > SEQUENCE_MAX_N:
            raise TooLargeError(f"degree-sequence enumeration is capped at n={SEQUENCE_MAX_N}, got {n}")
        jobs = [(n, m, top) for top in range(n - 1, 0, -1)]
        if workers > 1:
            with ProcessPoolExecutor(workers) as pool:
                parts = list(pool.map(_partition_certificate, jobs))
        else:
            parts = [_partition_certificate(job) for job in jobs]
        cert = None
        for part in parts:
            if part is not None:
                cert = part if cert is None else cert.merge(part)
    else:
        raise GmfrtError(f"unknown enumeration method {method!r}")
    if cert is None:  # pragma: no cover - the range check guarantees a connected graph exists
        raise GmfrtError(f"no connected graph found for ({n}, {m})")
    return cert


@dataclass
class CertificationRow:
    n: int
    m: int
    certificate: ExtremaCertificate
    built_min: Fraction | None
    built_max: Fraction | None
    problems: list[str] = field(default_factory=list)

    @property
    def construction_match(self) -> bool:
        return not self.problems


@dataclass
class CertificationReport:
    n_max: int
    method: str
    rows: list[CertificationRow]
    realization_checks: int
    realization_failures: list[Profile]

    @property
    def violations(self) -> list[CertificationRow]:
        return [r for r in self.rows if not r.construction_match]

    @property
    def ok(self) -> bool:
        return not self.violations and not self.realization_failures


def _assess(builder: Builder, n: int, m: int, expected: Fraction, label: str) -> tuple[Fraction | None, list[str]]:
    try:
        result = builder(n, m)
    except GmfrtError as exc:
        return None, [f"{label} builder raised {type(exc).__name__}: {exc}"]
    g = result.graph
    problems = []
    if g.n != n or g.m != m:
        problems.append(f"{label} builder returned n={g.n}, m={g.m}")
    if not is_connected(g):
        problems.append(f"{label} builder returned a disconnected graph")
        return None, problems
    value = gmfrt(g)
    if value != expected:
        problems.append(f"{label} gmfrt {value} != certified {expected} (profile {sorted(g.degrees, reverse=True)})")
    if result.predicted_gmfrt != value:
        problems.append(f"{label} predicted {result.predicted_gmfrt} != actual {value}")
    return value, problems


def random_degree_sequence(n: int, m: int, rng: random.Random, moves: int | None = None) -> Profile:
    """A random connected-realizable profile: near-regular start, random unit transfers, EG rejection."""
    _check_range(n, m)
    if n < 2:
        raise GmfrtError("need n >= 2")
    while True:
        low, extra = divmod(2 * m, n)
        d = [low + (i < extra) for i in range(n)]
        for _ in range(moves if moves is not None else 5 * n):
            i, j = rng.randrange(n), rng.randrange(n)
            if i != j and d[i] > 1 and d[j] < n - 1:
                d[i] -= 1
                d[j] += 1
        d.sort(reverse=True)
        if _erdos_gallai(d):
            return tuple(d)


def spot_realize(n_range: tuple[int, int], count: int, rng: random.Random) -> tuple[int, list[Profile]]:
    """Realize ``count`` random profiles as connected graphs; return (checked, failures)."""
    failures = []
    for _ in range(count):
        n = rng.randint(*n_range)
        m = rng.randint(n - 1, n * (n - 1) // 2)
        prof = random_degree_sequence(n, m, rng)
        try:
            g = realize_connected(list(prof))
            ok = is_connected(g) and tuple(sorted(g.degrees, reverse=True)) == prof
        except GmfrtError:
            ok = False
        if not ok:
            failures.append(prof)
    return count, failures


def certify_constructions(
    n_max: int,
    method: str = "degree_sequences",
    min_builder: Builder = build_min_gmfrt_graph,
    max_builder: Builder = build_max_gmfrt_graph,
    n_min: int = 3,
    spot_checks: int = 100,
    seed: int = 0,
    workers: int = 1,
    progress: Callable[[int, int], None] | None = None,
) -> CertificationReport:
    """Check both builders against brute-force extrema for every legal ``(n, m)``.

    Violations are collected into the report, never raised.
    """
    cap = LABELED_MAX_N if method == "labeled_graphs" else SEQUENCE_MAX_N
    if n_max > cap:
        raise TooLargeError(f"{method} certification is capped at n={cap}, got {n_max}")
    rows = []
    for n in range(n_min, n_max + 1):
        for m in range(n - 1, n * (n - 1) // 2 + 1):
            if progress:
                progress(n, m)
            cert = brute_force_extrema(n, m, method, workers)
            lo, p_lo = _assess(min_builder, n, m, cert.min_gmfrt, "min")
            hi, p_hi = _assess(max_builder, n, m, cert.max_gmfrt, "max")
            rows.append(CertificationRow(n, m, cert, lo, hi, p_lo + p_hi))
    checked, failures = spot_realize((max(n_min, 2), max(n_max, 2)), spot_checks, random.Random(seed))
    return CertificationReport(n_max, method, rows, checked, failures)


def perturb_one_degree(g: Graph) -> Graph | None:
    """Move one edge end so the degree multiset changes while staying connected; None if impossible."""
    base = sorted(g.degrees)
    for u in range(g.n):
        if g.degree(u) < 2:
            continue
        for w in sorted(g.adj[u]):
            for r in range(g.n):
                if r in (u, w) or g.has_edge(w, r):
                    continue
                h = rewire(g, remove=[(u, w)], add=[(w, r)])
                if sorted(h.degrees) != base and is_connected(h):
                    return h
    return None


def mutate_builder(builder: Builder) -> Builder:
    """Wrap ``builder`` so each output has one degree perturbed (negative control)."""

    def mutated(n: int, m: int) -> ExtremalResult:
        res = builder(n, m)
        h = perturb_one_degree(res.graph)
        return res if h is None else replace(res, graph=h)

    return mutated


__all__ = [
    "ExtremaCertificate",
    "CertificationReport",
    "CertificationRow",
    "brute_force_extrema",
    "certify_constructions",
    "enumerate_connected_degree_sequences",
    "enumerate_connected_labeled",
    "mutate_builder",
    "perturb_one_degree",
    "random_degree_sequence",
    "spot_realize",
]
