"""Brute-force walk enumeration, independent of the algebra.

Every census here comes from a depth-first search with a visited bitmask.
Keys are the sets of *entered* vertices: the start vertex is only included
when the walk returns to it.  So a k-path ``i -> j`` is keyed by a k-set
containing ``j`` but not ``i``, a k-cycle at ``v`` by a k-set containing
``v``, and a PWIC (path with initial cycle) by a set containing its start.
"""

from __future__ import annotations

from .graph import Graph, WalkCensus

__all__ = [
    "oracle_paths",
    "oracle_all_paths",
    "oracle_cycles",
    "oracle_all_cycles",
    "oracle_pwics",
    "oracle_paths_and_pwics",
]


def _adjacency(G: Graph) -> list[list[int]]:
    adj = [[] for _ in range(G.m + 1)]
    for a, b in G.edges:
        adj[a].append(b)
        adj[b].append(a)
    return adj


def _key(mask: int) -> frozenset:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return frozenset(out)


def _walks(G: Graph, start: int, *, returns: int, max_len: int | None = None):
    """Yield ``(end, length, entered_mask)`` for self-avoiding walks from ``start``.

    ``returns`` is how many times the walk may re-enter ``start`` (0 or 1).
    Vertex ``v`` is bit ``v`` of the mask.
    """
    adj = _adjacency(G)
    limit = G.m + 1 if max_len is None else max_len
    stack = [(start, 0, 0, 0)]  # vertex, length, entered mask, returns used
    sbit = 1 << start
    while stack:
        v, length, mask, used = stack.pop()
        if length:
            yield v, length, mask
        if length >= limit:
            continue
        # after returning to the start the walk must leave it for good
        for w in adj[v]:
            bit = 1 << w
            if w == start:
                if used < returns and not mask & sbit:
                    stack.append((w, length + 1, mask | bit, used + 1))
            elif not mask & bit:
                stack.append((w, length + 1, mask | bit, used))


def oracle_paths(G: Graph, i: int, j: int, k: int) -> WalkCensus:
    """k-edge self-avoiding walks ``i -> j``, keyed by the k entered vertices.

    The algebraic census keys the same paths by all ``k + 1`` vertices;
    add ``i`` to each key (``census.shifted(i)``) to compare.
    """
    if i == j:
        raise ValueError("paths need distinct endpoints; use oracle_cycles")
    table: dict = {}
    for end, length, mask in _walks(G, i, returns=0, max_len=k):
        if end == j and length == k:
            key = _key(mask)
            table[key] = table.get(key, 0) + 1
    return WalkCensus("paths", (i, j), table)


def oracle_all_paths(G: Graph, i: int, j: int) -> WalkCensus:
    """Paths ``i -> j`` of every length (lengths are recoverable from key sizes)."""
    table: dict = {}
    for end, _, mask in _walks(G, i, returns=0):
        if end == j:
            key = _key(mask)
            table[key] = table.get(key, 0) + 1
    return WalkCensus("paths", (i, j), table)


def oracle_cycles(G: Graph, v: int, k: int) -> WalkCensus:
    """Closed k-walks at ``v`` repeating no vertex except the base.

    Traversal directions count separately, and the back-and-forth walk
    along an edge is a 2-cycle.
    """
    table: dict = {}
    for end, length, mask in _walks(G, v, returns=1, max_len=k):
        if end == v and length == k:
            key = _key(mask)
            table[key] = table.get(key, 0) + 1
    return WalkCensus("cycles", (v,), table)


def oracle_all_cycles(G: Graph, v: int) -> WalkCensus:
    table: dict = {}
    for end, _, mask in _walks(G, v, returns=1):
        if end == v:
            key = _key(mask)
            table[key] = table.get(key, 0) + 1
    return WalkCensus("cycles", (v,), table)


def oracle_pwics(G: Graph, i: int, j: int) -> WalkCensus:
    """Walks ``i -> j`` that revisit ``i`` exactly once and repeat nothing else."""
    if i == j:
        raise ValueError("PWICs need distinct endpoints")
    table: dict = {}
    ibit = 1 << i
    for end, _, mask in _walks(G, i, returns=1):
        if end == j and mask & ibit:
            key = _key(mask)
            table[key] = table.get(key, 0) + 1
    return WalkCensus("pwics", (i, j), table)


def oracle_paths_and_pwics(G: Graph, i: int, j: int) -> WalkCensus:
    """Paths and PWICs ``i -> j`` together.

    The two never share a key: only PWIC keys contain ``i``.
    """
    return oracle_all_paths(G, i, j).merged(oracle_pwics(G, i, j), kind="paths+pwics")
