"""Minimal- and maximal-GMFRT connected graphs for given ``(n, m)``.

Minimum: every degree is ``floor(2m/n)`` or ``ceil(2m/n)``. Maximum: one of
four edge-count regimes,

* I   ``m = n(n-1)/2``: the complete graph;
* II  ``(n-1)(n-2)/2 + 1 < m < n(n-1)/2``: ``K_{n-1}`` plus a vertex joined to ``k`` of it;
* III ``n-1 < m <= (n-1)(n-2)/2 + 1``: ``K_{n-k-1}``, a vertex of degree ``l`` and
  ``k`` pendant leaves on the top hub;
* IV  ``m = n-1``: the star.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    AlreadyExtremalError,
    ConsistencyError,
    EdgeCountOutOfRangeError,
    NotConnectedError,
    NoValidMoveError,
    TooSmallError,
)
from .graph import Graph, from_edge_list, is_connected, realize_connected, rewire
from .metrics import gmfrt, gmfrt_of_degrees


@dataclass(frozen=True)
class ExtremalResult:
    graph: Graph
    objective: str  # "min" | "max"
    case_id: str  # I | II | III | IV | regular | near_regular
    k: int | Fraction | None
    l: int | None
    predicted_gmfrt: Fraction

    @property
    def profile(self) -> tuple[int, ...]:
        return tuple(sorted(self.graph.degrees, reverse=True))


def _check_range(n: int, m: int, n_min: int = 2) -> None:
    if n < n_min:
        raise TooSmallError(f"n >= {n_min} required, got {n}")
    if not n - 1 <= m <= n * (n - 1) // 2:
        raise EdgeCountOutOfRangeError(
            f"m={m} outside the connected range [{n - 1}, {n * (n - 1) // 2}] for n={n}"
        )


def min_degree_counts(n: int, m: int) -> tuple[int, int]:
    """``(count_ceil, count_floor)``: how many vertices get ``ceil(2m/n)`` and ``floor(2m/n)``."""
    _check_range(n, m, n_min=1)
    low = 2 * m // n
    ceil_count = 2 * m - low * n
    return ceil_count, n - ceil_count


def min_profile(n: int, m: int) -> tuple[int, ...]:
    ceil_count, floor_count = min_degree_counts(n, m)
    low = 2 * m // n
    return (low + 1,) * ceil_count + (low,) * floor_count


def _near_regular_targets(n: int, m: int) -> list[int]:
    """Per-vertex target degrees with the ``ceil`` vertices spread evenly round the ring."""
    ceil_count, _ = min_degree_counts(n, m)
    low = 2 * m // n
    return [low + ((i + 1) * ceil_count // n - i * ceil_count // n) for i in range(n)]


def _circulant(targets: list[int]) -> Graph | None:
    """Ring lattice on ``2h`` nearest neighbours, then greedy longest chords; None if it misses."""
    n = len(targets)
    h = min(targets) // 2
    adj = [set() for _ in range(n)]
    for i in range(n):
        for s in range(1, h + 1):
            j = (i + s) % n
            adj[i].add(j)
            adj[j].add(i)
    residual = [t - len(a) for t, a in zip(targets, adj)]
    if min(residual) < 0:
        return None
    for i in range(n):
        while residual[i] > 0:
            options = [
                j for j in range(n)
                if j != i and residual[j] > 0 and j not in adj[i]
            ]
            if not options:
                return None
            j = max(options, key=lambda j: (min(abs(i - j), n - abs(i - j)), -j))
            adj[i].add(j)
            adj[j].add(i)
            residual[i] -= 1
            residual[j] -= 1
    return Graph(n, tuple(frozenset(a) for a in adj))


def build_min_gmfrt_graph(n: int, m: int) -> ExtremalResult:
    """Connected near-regular graph: degrees all ``floor(2m/n)`` or ``ceil(2m/n)``."""
    _check_range(n, m)
    ceil_count, floor_count = min_degree_counts(n, m)
    low = 2 * m // n
    targets = _near_regular_targets(n, m)
    if m == n - 1:
        g = from_edge_list(n, [(i, i + 1) for i in range(n - 1)])
    else:
        g = _circulant(targets)
        if g is None or g.degrees != tuple(targets) or not is_connected(g):
            g = realize_connected(targets)
    predicted = Fraction(2 * m, n) * (
        (Fraction(ceil_count, low + 1) if ceil_count else 0) + Fraction(floor_count, low)
    )
    if gmfrt(g) != predicted or g.m != m:
        raise ConsistencyError(f"near-regular build for ({n}, {m}) missed its prediction")
    return ExtremalResult(
        graph=g,
        objective="min",
        case_id="regular" if ceil_count == 0 else "near_regular",
        k=Fraction(2 * m, n),
        l=None,
        predicted_gmfrt=predicted,
    )


def max_case(n: int, m: int) -> tuple[str, int | None, int | None]:
    """Which regime ``(n, m)`` falls in, with its ``k`` and ``l`` parameters."""
    _check_range(n, m, n_min=3)
    complete = n * (n - 1) // 2
    if m == complete:
        return "I", None, None
    if m == n - 1:
        return "IV", None, None
    if m > (n - 1) * (n - 2) // 2 + 1:
        return "II", m - (n - 1) * (n - 2) // 2, None
    for k in range(1, n - 2):
        if (n - k - 1) * (n - k - 2) // 2 + k + 1 < m <= (n - k) * (n - k - 1) // 2 + k:
            l = m - (n - k - 1) * (n - k - 2) // 2 - k
            if l < 2:
                raise ConsistencyError(f"case III at ({n}, {m}) gives l={l} < 2")
            return "III", k, l
    raise ConsistencyError(f"({n}, {m}) matched no case")  # pragma: no cover


def max_profile(n: int, m: int) -> tuple[int, ...]:
    """Target degree multiset of the maximal-GMFRT graph, non-increasing."""
    case, k, l = max_case(n, m)
    if case == "I":
        degs = [n - 1] * n
    elif case == "IV":
        degs = [n - 1] + [1] * (n - 1)
    elif case == "II":
        degs = [n - 1] * k + [n - 2] * (n - 1 - k) + [k]
    else:
        degs = [n - 1] + [n - k - 1] * (l - 1) + [n - k - 2] * (n - k - 1 - l) + [l] + [1] * k
    return tuple(sorted(degs, reverse=True))


def build_max_gmfrt_graph(n: int, m: int) -> ExtremalResult:
    case, k, l = max_case(n, m)
    if case == "I":
        edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
    elif case == "IV":
        edges = [(0, v) for v in range(1, n)]
    elif case == "II":
        edges = [(u, v) for u in range(n - 1) for v in range(u + 1, n - 1)]
        edges += [(v, n - 1) for v in range(k)]
    else:
        core = n - k - 1
        edges = [(u, v) for u in range(core) for v in range(u + 1, core)]
        edges += [(v, core) for v in range(l)]
        edges += [(0, v) for v in range(core + 1, n)]
    g = from_edge_list(n, edges)
    profile = max_profile(n, m)
    predicted = gmfrt_of_degrees(profile)
    if tuple(sorted(g.degrees, reverse=True)) != profile or gmfrt(g) != predicted or g.m != m:
        raise ConsistencyError(f"case {case} build for ({n}, {m}) does not match its profile")
    return ExtremalResult(g, "max", case, k, l, predicted)


def _shift_one(g: Graph, donor: int) -> Graph | None:
    """Move one edge end off ``donor`` onto a vertex of degree >= the donor's.

    Removes ``(donor, w)`` and adds ``(w, r)``. With ``deg(r) >= deg(donor) >= 2``
    the GMFRT strictly increases. The highest-degree admissible receiver wins,
    then the lowest ``w``, then the lowest ``r``; shifts that disconnect are skipped.
    """
    a = g.degree(donor)
    if a < 2:
        return None
    receivers = sorted(
        (r for r in range(g.n) if r != donor and a <= g.degree(r) < g.n - 1),
        key=lambda r: (-g.degree(r), r),
    )
    for r in receivers:
        for w in sorted(g.adj[donor]):
            if w == r or g.has_edge(w, r):
                continue
            h = rewire(g, remove=[(donor, w)], add=[(w, r)])
            if is_connected(h):
                return h
    return None


def _best_exchange(g: Graph) -> Graph | None:
    """Remove one edge and add one non-edge, taking the largest GMFRT gain that stays connected."""
    deg = g.degrees
    non_edges = [(c, d) for c in range(g.n) for d in range(c + 1, g.n) if not g.has_edge(c, d)]
    candidates = []
    for a, b in g.edges:
        if deg[a] < 2 or deg[b] < 2:
            continue
        for c, d in non_edges:
            new = {a: deg[a] - 1, b: deg[b] - 1}
            new[c] = new.get(c, deg[c]) + 1
            new[d] = new.get(d, deg[d]) + 1
            gain = sum(Fraction(1, new[v]) - Fraction(1, deg[v]) for v in new)
            if gain > 0:
                candidates.append((-gain, (a, b), (c, d)))
    for _, rem, add in sorted(candidates):
        h = rewire(g, remove=[rem], add=[add])
        if is_connected(h):
            return h
    return None


def concentrate_step(g: Graph) -> Graph:
    """One degree-concentration move towards the maximal-GMFRT profile.

    Vertices are ranked by degree (descending, ties by index) against the
    target profile. The lowest-ranked vertex whose degree exceeds its target
    is stripped towards that target, each stripped edge end going to a
    higher-degree vertex. If that donor admits no move, the remaining
    vertices are tried in order of (degree, index), and failing that the
    single edge exchange with the largest gain is taken.
    """
    if not is_connected(g):
        raise NotConnectedError("concentrate_step needs a connected graph")
    if g.n < 3:
        raise AlreadyExtremalError("graphs with fewer than 3 vertices are unique")
    target = max_profile(g.n, g.m)
    ranked = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    current = tuple(g.degree(v) for v in ranked)
    if current == target:
        raise AlreadyExtremalError(f"degree multiset already equals {list(target)}")

    plan: list[tuple[int, int]] = []
    i0 = max(i for i in range(g.n) if current[i] != target[i])
    if current[i0] > target[i0]:
        plan.append((ranked[i0], target[i0]))
    plan += [(v, 1) for v in sorted(range(g.n), key=lambda v: (g.degree(v), v)) if (v, 1) not in plan]

    before = gmfrt(g)
    for donor, floor in plan:
        h = g
        while h.degree(donor) > floor:
            nxt = _shift_one(h, donor)
            if nxt is None:
                break
            h = nxt
        if h is not g:
            if gmfrt(h) <= before:  # pragma: no cover - excluded by the receiver rule
                raise ConsistencyError("concentration move failed to raise the GMFRT")
            return h
    h = _best_exchange(g)
    if h is not None:
        return h
    raise NoValidMoveError(f"no improving move from degree multiset {list(current)}")
