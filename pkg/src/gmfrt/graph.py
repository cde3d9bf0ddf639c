"""Immutable simple undirected graphs, degree sequences, and rewiring primitives.

Vertices are the contiguous integers ``0..n-1``. A :class:`Graph` is never
mutated; :func:`rewire` and the realization helpers return new values.
"""

from __future__ import annotations

import random
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import cached_property

from .errors import (
    DuplicateEdgeError,
    GmfrtError,
    IndexOutOfRangeError,
    MissingEdgeError,
    SelfLoopError,
    ZeroDegreeError,
)

Edge = tuple[int, int]


def _key(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on ``n`` vertices.

    ``adj[v]`` is the frozenset of neighbours of ``v``. Construct through
    :func:`from_edge_list` (validating) rather than directly.
    """

    n: int
    adj: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise GmfrtError(f"graph needs at least one vertex, got n={self.n}")
        if len(self.adj) != self.n:
            raise GmfrtError("adjacency length does not match n")
        for u, nbrs in enumerate(self.adj):
            for v in nbrs:
                if u == v:
                    raise SelfLoopError(f"self-loop at {u}")
                if not 0 <= v < self.n:
                    raise IndexOutOfRangeError(f"neighbour {v} of {u} outside 0..{self.n - 1}")
                if u not in self.adj[v]:
                    raise GmfrtError(f"asymmetric adjacency between {u} and {v}")

    @cached_property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    @cached_property
    def edges(self) -> tuple[Edge, ...]:
        """Sorted ``(u, v)`` pairs with ``u < v``."""
        return tuple(sorted((u, v) for u in range(self.n) for v in self.adj[u] if u < v))

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(map(len, self.adj))

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Neighbour sets as integer bitmasks (bit ``v`` set iff ``v`` adjacent)."""
        out = []
        for nbrs in self.adj:
            mask = 0
            for v in nbrs:
                mask |= 1 << v
            out.append(mask)
        return tuple(out)

    @cached_property
    def connected(self) -> bool:
        """True iff a traversal from vertex 0 reaches every vertex."""
        masks = self.masks
        seen = frontier = 1
        while frontier:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= masks[low.bit_length() - 1]
                f ^= low
            frontier = nxt & ~seen
            seen |= nxt
        return seen == (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> list[int]:
        """Sorted neighbour list (the order random walks index into)."""
        return sorted(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges)})"


@dataclass(frozen=True)
class DegreeSequence:
    """Non-increasing multiset of positive degrees with an even sum."""

    degrees: tuple[int, ...]

    def __post_init__(self) -> None:
        degs = tuple(sorted((int(d) for d in self.degrees), reverse=True))
        if not degs:
            raise GmfrtError("empty degree sequence")
        if degs[-1] < 1:
            raise ZeroDegreeError(f"degree sequence contains a non-positive entry: {degs}")
        if sum(degs) % 2:
            raise GmfrtError(f"degree sum {sum(degs)} is odd")
        object.__setattr__(self, "degrees", degs)

    @classmethod
    def of(cls, degrees: Iterable[int]) -> DegreeSequence:
        return cls(tuple(degrees))

    @property
    def n(self) -> int:
        return len(self.degrees)

    @property
    def m(self) -> int:
        return sum(self.degrees) // 2

    def is_graphical(self) -> bool:
        return is_graphical(self.degrees)

    def is_connected_realizable(self) -> bool:
        return self.m >= self.n - 1 and self.is_graphical()

    def __iter__(self):
        return iter(self.degrees)

    def __len__(self) -> int:
        return len(self.degrees)


def from_edge_list(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a graph from explicit pairs; duplicates are an error, not deduplicated."""
    if n < 1:
        raise GmfrtError(f"n must be positive, got {n}")
    sets: list[set[int]] = [set() for _ in range(n)]
    for pair in edges:
        u, v = int(pair[0]), int(pair[1])
        if not (0 <= u < n and 0 <= v < n):
            raise IndexOutOfRangeError(f"edge ({u}, {v}) outside 0..{n - 1}")
        if u == v:
            raise SelfLoopError(f"self-loop at {u}")
        if v in sets[u]:
            raise DuplicateEdgeError(f"edge ({u}, {v}) given twice")
        sets[u].add(v)
        sets[v].add(u)
    return Graph(n, tuple(frozenset(s) for s in sets))


def is_connected(g: Graph) -> bool:
    return g.connected


def components(g: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by smallest vertex."""
    label = [-1] * g.n
    comps: list[list[int]] = []
    for s in range(g.n):
        if label[s] >= 0:
            continue
        label[s] = len(comps)
        stack, comp = [s], [s]
        while stack:
            u = stack.pop()
            for v in g.adj[u]:
                if label[v] < 0:
                    label[v] = len(comps)
                    stack.append(v)
                    comp.append(v)
        comps.append(sorted(comp))
    return comps


def is_tree(g: Graph) -> bool:
    return g.m == g.n - 1 and is_connected(g)


def degree_sequence(g: Graph) -> DegreeSequence:
    return DegreeSequence(g.degrees)


def rewire(g: Graph, remove: Iterable[Sequence[int]] = (), add: Iterable[Sequence[int]] = ()) -> Graph:
    """Return a copy of ``g`` with ``remove`` deleted and then ``add`` inserted."""
    sets = [set(a) for a in g.adj]
    for pair in remove:
        u, v = int(pair[0]), int(pair[1])
        if not (0 <= u < g.n and 0 <= v < g.n) or v not in sets[u]:
            raise MissingEdgeError(f"cannot remove absent edge ({u}, {v})")
        sets[u].discard(v)
        sets[v].discard(u)
    for pair in add:
        u, v = int(pair[0]), int(pair[1])
        if not (0 <= u < g.n and 0 <= v < g.n):
            raise IndexOutOfRangeError(f"edge ({u}, {v}) outside 0..{g.n - 1}")
        if u == v:
            raise SelfLoopError(f"self-loop at {u}")
        if v in sets[u]:
            raise DuplicateEdgeError(f"edge ({u}, {v}) already present")
        sets[u].add(v)
        sets[v].add(u)
    return Graph(g.n, tuple(frozenset(s) for s in sets))


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Apply the vertex permutation ``v -> perm[v]``."""
    return from_edge_list(g.n, [(perm[u], perm[v]) for u, v in g.edges])


def is_graphical(degrees: Sequence[int]) -> bool:
    """Erdős–Gallai test; ``degrees`` need not be sorted. Zeros are allowed."""
    d = sorted(degrees, reverse=True)
    n = len(d)
    if any(x < 0 for x in d) or sum(d) % 2:
        return False
    if d and d[0] > n - 1:
        return False
    lhs = 0
    for k in range(1, n + 1):
        lhs += d[k - 1]
        rhs = k * (k - 1) + sum(x if x < k else k for x in d[k:])
        if lhs > rhs:
            return False
    return True


def havel_hakimi(degrees: Sequence[int]) -> Graph:
    """Realize ``degrees`` (vertex ``i`` gets ``degrees[i]``) by Havel–Hakimi.

    Ties are broken by lowest vertex index, so the output is deterministic.
    """
    n = len(degrees)
    if not is_graphical(degrees):
        raise GmfrtError(f"degree sequence {list(degrees)} is not graphical")
    residual = list(degrees)
    edges: list[Edge] = []
    while True:
        order = sorted(range(n), key=lambda v: (-residual[v], v))
        u = order[0]
        d = residual[u]
        if d == 0:
            break
        residual[u] = 0
        for v in order[1 : d + 1]:
            residual[v] -= 1
            edges.append((u, v))
    return from_edge_list(n, edges)


def _cycle_edge(g: Graph, comp: list[int]) -> Edge | None:
    """An edge of ``comp`` lying on a cycle, or None if ``comp`` is a tree."""
    members = set(comp)
    m_comp = sum(len(g.adj[v]) for v in comp) // 2
    if m_comp < len(comp):
        return None
    for u, v in g.edges:
        if u in members and not _is_bridge(g, u, v):
            return (u, v)
    return None


def _is_bridge(g: Graph, u: int, v: int) -> bool:
    seen = {u}
    stack = [u]
    while stack:
        x = stack.pop()
        for y in g.adj[x]:
            if (x, y) in ((u, v), (v, u)):
                continue
            if y == v:
                return False
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return True


def connect_by_swaps(g: Graph) -> Graph:
    """Merge components with degree-preserving double edge swaps.

    Requires every vertex to have degree >= 1 and ``m >= n - 1``; under those
    conditions a disconnected realization always has a component with a cycle,
    and swapping a cycle edge ``(a, b)`` with any edge ``(x, y)`` of another
    component into ``(a, x), (b, y)`` joins the two without breaking either.
    """
    if min(g.degrees) < 1 or g.m < g.n - 1:
        raise GmfrtError("connected realization needs all degrees >= 1 and m >= n - 1")
    while True:
        comps = components(g)
        if len(comps) == 1:
            return g
        for i, comp in enumerate(comps):
            ce = _cycle_edge(g, comp)
            if ce is not None:
                break
        else:  # pragma: no cover - impossible when m >= n - 1
            raise GmfrtError("no component contains a cycle")
        other = comps[1] if i == 0 else comps[0]
        x = other[0]
        y = min(g.adj[x])
        a, b = ce
        g = rewire(g, remove=[(a, b), (x, y)], add=[(a, x), (b, y)])


def realize_connected(degrees: Sequence[int]) -> Graph:
    """Connected realization: Havel–Hakimi followed by swap repair."""
    return connect_by_swaps(havel_hakimi(degrees))


def random_tree_with_degrees(degrees: Sequence[int], rng: random.Random) -> Graph:
    """Uniformly random labeled tree in which vertex ``i`` has ``degrees[i]``.

    Decodes a shuffled Prüfer sequence containing ``i`` exactly ``degrees[i] - 1`` times.
    """
    n = len(degrees)
    if n < 2 or sum(degrees) != 2 * (n - 1) or min(degrees) < 1:
        raise GmfrtError(f"{list(degrees)} is not a tree degree sequence")
    if n == 2:
        return from_edge_list(2, [(0, 1)])
    code = [v for v, d in enumerate(degrees) for _ in range(d - 1)]
    rng.shuffle(code)
    remaining = list(degrees)
    edges: list[Edge] = []
    for v in code:
        leaf = min(u for u in range(n) if remaining[u] == 1)
        edges.append((leaf, v))
        remaining[leaf] = 0
        remaining[v] -= 1
    u, w = (x for x in range(n) if remaining[x] == 1)
    edges.append((u, w))
    return from_edge_list(n, edges)


def random_connected_graph(n: int, m: int, rng: random.Random) -> Graph:
    """Random connected graph: a random spanning tree plus ``m - n + 1`` random extra edges."""
    if n < 1 or not n - 1 <= m <= n * (n - 1) // 2:
        raise GmfrtError(f"no connected simple graph with n={n}, m={m}")
    perm = list(range(n))
    rng.shuffle(perm)
    edges = {_key(perm[i], perm[rng.randrange(i)]) for i in range(1, n)}
    rest = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in edges]
    edges.update(rng.sample(rest, m - len(edges)))
    return from_edge_list(n, sorted(edges))
