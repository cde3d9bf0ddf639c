"""Extremal trees (path and star) and the two GMFRT-monotone tree transforms.

``flatten_step`` lowers the GMFRT by pulling a vertex of degree >= 3 down to
degree 2; ``starify_step`` raises it by folding one hub into another. Both
carry an exact predicted change that depends on degrees only, and both check
that prediction against a direct recomputation.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterator
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    ConsistencyError,
    DegreeTooLowError,
    NoEligibleLeavesError,
    NotATreeError,
    SameVertexError,
    TooSmallError,
)
from .graph import Graph, from_edge_list, is_tree, rewire
from .metrics import gmfrt_of_degrees


def build_path(n: int) -> Graph:
    if n < 2:
        raise TooSmallError(f"path needs n >= 2, got {n}")
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def build_star(n: int) -> Graph:
    """Star centred at vertex 0."""
    if n < 3:
        raise TooSmallError(f"star needs n >= 3, got {n}")
    return from_edge_list(n, [(0, i) for i in range(1, n)])


def min_tree_gmfrt(n: int) -> Fraction:
    if n < 2:
        raise TooSmallError(f"n >= 2 required, got {n}")
    return n + Fraction(n - 2, n)


def max_tree_gmfrt(n: int) -> Fraction:
    if n < 3:
        raise TooSmallError(f"n >= 3 required, got {n}")
    return 2 * n - 4 + Fraction(4, n)


def flatten_delta(n: int, d0: int) -> Fraction:
    """Exact GMFRT decrease when a degree-``d0`` vertex is flattened to degree 2."""
    return Fraction(2 * (n - 1) + (n - 1) * (d0 - 3) * d0, n * d0)


def starify_delta(n: int, d1: int, d2: int) -> Fraction:
    """Exact ``old - new`` GMFRT when a degree-``d2`` hub is folded into a degree-``d1`` hub (negative)."""
    return Fraction(
        2 * (n - 1) * (d1 + d2) * (1 - d2) * (d1 - 1), n * d1 * d2 * (d1 + d2 - 1)
    )


@dataclass(frozen=True)
class TreeTransformOutcome:
    before: Graph
    after: Graph
    predicted_delta: Fraction
    pivot: int


def _require_tree(t: Graph) -> None:
    if not is_tree(t):
        raise NotATreeError(f"expected a tree, got n={t.n}, m={t.m}")


def _side(t: Graph, root: int, banned: int) -> set[int]:
    """Vertices reachable from ``root`` without passing through ``banned``."""
    seen = {root}
    stack = [root]
    while stack:
        u = stack.pop()
        for v in t.adj[u]:
            if v != banned and v not in seen:
                seen.add(v)
                stack.append(v)
    return seen


def _checked(before: Graph, after: Graph, predicted: Fraction, pivot: int) -> TreeTransformOutcome:
    # both sides are trees here, so the degree-only formula applies
    if not is_tree(after):
        raise ConsistencyError(f"transform at {pivot} did not produce a tree")
    actual = gmfrt_of_degrees(before.degrees) - gmfrt_of_degrees(after.degrees)
    if actual != predicted:
        raise ConsistencyError(
            f"transform at {pivot}: predicted delta {predicted}, recomputed {actual}"
        )
    return TreeTransformOutcome(before, after, predicted, pivot)


def flatten_step(t: Graph, v0: int) -> TreeTransformOutcome:
    """Cut ``v0`` down to degree 2 and hang each detached branch from a former leaf.

    The ``d0 - 2`` branches with the fewest vertices are detached (ties: lowest
    neighbour index). Branches are re-hung in that order, each onto the
    lowest-indexed unused original leaf already in ``v0``'s component.
    """
    _require_tree(t)
    d0 = t.degree(v0)
    if d0 < 3:
        raise DegreeTooLowError(f"vertex {v0} has degree {d0}; flattening needs >= 3")
    branches = {w: _side(t, w, v0) for w in t.adj[v0]}
    order = sorted(t.adj[v0], key=lambda w: (len(branches[w]), w))
    detached = order[: d0 - 2]
    leaves = {v for v in range(t.n) if t.degree(v) == 1}

    component = {v0}
    for w in order[d0 - 2 :]:
        component |= branches[w]
    used: set[int] = set()
    add = []
    for w in detached:
        eligible = sorted(v for v in leaves if v in component and v not in used)
        if not eligible:
            raise NoEligibleLeavesError(f"no free leaf to receive branch at {w}")
        target = eligible[0]
        used.add(target)
        add.append((w, target))
        component |= branches[w]
    after = rewire(t, remove=[(v0, w) for w in detached], add=add)
    return _checked(t, after, flatten_delta(t.n, d0), v0)


def _next_on_path(t: Graph, src: int, dst: int) -> int:
    """Neighbour of ``src`` on the unique tree path to ``dst``."""
    parent = {dst: dst}
    queue = deque([dst])
    while queue:
        u = queue.popleft()
        for v in t.adj[u]:
            if v not in parent:
                parent[v] = u
                if v == src:
                    return u
                queue.append(v)
    raise NotATreeError(f"{dst} unreachable from {src}")


def starify_step(t: Graph, v1: int, v2: int) -> TreeTransformOutcome:
    """Move every branch of ``v2`` except the one towards ``v1`` onto ``v1``."""
    _require_tree(t)
    if v1 == v2:
        raise SameVertexError(f"v1 and v2 are both {v1}")
    d1, d2 = t.degree(v1), t.degree(v2)
    if d2 < 2:
        raise DegreeTooLowError(f"vertex {v2} has degree {d2}; needs >= 2")
    if d1 < d2:
        raise DegreeTooLowError(f"v1={v1} (degree {d1}) must have degree >= v2={v2} (degree {d2})")
    keep = v1 if t.has_edge(v1, v2) else _next_on_path(t, v2, v1)
    moved = sorted(x for x in t.adj[v2] if x != keep)
    after = rewire(t, remove=[(v2, x) for x in moved], add=[(v1, x) for x in moved])
    return _checked(t, after, starify_delta(t.n, d1, d2), v2)


def flatten_to_path(t: Graph) -> Iterator[TreeTransformOutcome]:
    """Apply ``flatten_step`` at the lowest-indexed vertex of degree >= 3 until none is left."""
    _require_tree(t)
    while True:
        hubs = [v for v in range(t.n) if t.degree(v) >= 3]
        if not hubs:
            return
        step = flatten_step(t, hubs[0])
        yield step
        t = step.after


def starify_to_star(t: Graph) -> Iterator[TreeTransformOutcome]:
    """Fold the second-largest hub into the largest until one vertex has degree >= 2."""
    _require_tree(t)
    while True:
        hubs = sorted((v for v in range(t.n) if t.degree(v) >= 2), key=lambda v: (-t.degree(v), v))
        if len(hubs) < 2:
            return
        step = starify_step(t, hubs[0], hubs[1])
        yield step
        t = step.after
