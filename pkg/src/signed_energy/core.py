"""Signed graph data model.

A :class:`SignedGraph` is an immutable simple graph on vertices ``0..n-1``
whose edges carry a sign ``+1`` or ``-1``.  All operations here are pure and
return new graphs.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

import numpy as np


class GraphError(ValueError):
    """Raised for malformed graphs or violated preconditions."""


Edge = tuple[int, int, int]


def _parse_sign(s) -> int:
    if s in (1, "+", "+1"):
        return 1
    if s in (-1, "-", "-1"):
        return -1
    raise GraphError(f"invalid sign {s!r}")


@dataclass(frozen=True)
class SignedGraph:
    """Simple signed graph.

    ``edges`` holds ``(u, v, sign)`` triples with ``u < v``, sorted.  Use
    :func:`from_edge_list` to build one from arbitrary input.
    """

    order: int
    edges: tuple[Edge, ...] = ()

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @cached_property
    def signs(self) -> dict[tuple[int, int], int]:
        return {(u, v): s for u, v, s in self.edges}

    @cached_property
    def adjacency(self) -> tuple[dict[int, int], ...]:
        adj: list[dict[int, int]] = [{} for _ in range(self.order)]
        for u, v, s in self.edges:
            adj[u][v] = s
            adj[v][u] = s
        return tuple(adj)

    def sign(self, u: int, v: int) -> int:
        try:
            return self.signs[(u, v) if u < v else (v, u)]
        except KeyError:
            raise GraphError(f"no edge between {u} and {v}") from None

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.signs

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def neighbors(self, v: int) -> list[int]:
        return sorted(self.adjacency[v])

    def underlying(self) -> "SignedGraph":
        """All-positive copy with the same underlying graph."""
        return SignedGraph(self.order, tuple((u, v, 1) for u, v, _ in self.edges))

    def pairs(self) -> list[tuple[int, int]]:
        return [(u, v) for u, v, _ in self.edges]


@dataclass(frozen=True)
class CycleData:
    vertices: tuple[int, ...]
    sign: int

    def __len__(self) -> int:
        return len(self.vertices)

    def edge_pairs(self) -> list[tuple[int, int]]:
        vs = self.vertices
        return [tuple(sorted((vs[i], vs[(i + 1) % len(vs)]))) for i in range(len(vs))]


def from_edge_list(n: int, triples: Iterable[Sequence]) -> SignedGraph:
    """Build a validated :class:`SignedGraph` from ``(u, v, sign)`` triples.

    Signs may be given as ``+1``/``-1`` or ``"+"``/``"-"``.
    """
    if n < 0:
        raise GraphError(f"negative vertex count {n}")
    seen: dict[tuple[int, int], int] = {}
    for t in triples:
        if len(t) != 3:
            raise GraphError(f"expected (u, v, sign), got {tuple(t)!r}")
        u, v, s = t
        if not (isinstance(u, (int, np.integer)) and isinstance(v, (int, np.integer))):
            raise GraphError(f"non-integer vertex in {tuple(t)!r}")
        u, v = int(u), int(v)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"vertex out of range in {tuple(t)!r} (n={n})")
        if u == v:
            raise GraphError(f"self-loop in {tuple(t)!r}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise GraphError(f"duplicate edge {tuple(t)!r}")
        seen[key] = _parse_sign(s)
    return SignedGraph(n, tuple(sorted((u, v, s) for (u, v), s in seen.items())))


def adjacency_matrix(g: SignedGraph) -> np.ndarray:
    a = np.zeros((g.order, g.order), dtype=np.int64)
    for u, v, s in g.edges:
        a[u, v] = a[v, u] = s
    return a


def _check_vertex_set(g: SignedGraph, vs: Iterable[int]) -> frozenset[int]:
    out = frozenset(int(v) for v in vs)
    bad = [v for v in out if not 0 <= v < g.order]
    if bad:
        raise GraphError(f"vertices {sorted(bad)} out of range (n={g.order})")
    return out


def switch(g: SignedGraph, u: Iterable[int]) -> SignedGraph:
    """Flip the sign of every edge with exactly one endpoint in ``u``."""
    us = _check_vertex_set(g, u)
    return SignedGraph(
        g.order,
        tuple((a, b, -s if (a in us) != (b in us) else s) for a, b, s in g.edges),
    )


def negate(g: SignedGraph) -> SignedGraph:
    return SignedGraph(g.order, tuple((u, v, -s) for u, v, s in g.edges))


def relabel(g: SignedGraph, perm: Sequence[int]) -> SignedGraph:
    """Return the graph with vertex ``v`` renamed ``perm[v]``."""
    if sorted(perm) != list(range(g.order)):
        raise GraphError("relabeling is not a permutation")
    return SignedGraph(
        g.order,
        tuple(sorted((min(perm[u], perm[v]), max(perm[u], perm[v]), s) for u, v, s in g.edges)),
    )


def disjoint_union(*graphs: SignedGraph) -> SignedGraph:
    edges: list[Edge] = []
    offset = 0
    for h in graphs:
        edges.extend((u + offset, v + offset, s) for u, v, s in h.edges)
        offset += h.order
    return SignedGraph(offset, tuple(sorted(edges)))


def add_edge(g: SignedGraph, u: int, v: int, sign: int = 1) -> SignedGraph:
    return from_edge_list(g.order, [*g.edges, (u, v, sign)])


def _spanning_labels(g: SignedGraph) -> list[int]:
    """BFS over a spanning forest; label each vertex so tree edges are positive
    after switching at the vertices labelled -1."""
    label = [0] * g.order
    for root in range(g.order):
        if label[root]:
            continue
        label[root] = 1
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y in sorted(g.adjacency[x]):
                if not label[y]:
                    label[y] = label[x] * g.adjacency[x][y]
                    queue.append(y)
    return label


def _normalized(g: SignedGraph) -> tuple[SignedGraph, list[int]]:
    label = _spanning_labels(g)
    h = SignedGraph(g.order, tuple((u, v, label[u] * s * label[v]) for u, v, s in g.edges))
    return h, label


def is_balanced(g: SignedGraph) -> bool:
    h, _ = _normalized(g)
    return all(s == 1 for _, _, s in h.edges)


def switching_set(g1: SignedGraph, g2: SignedGraph) -> frozenset[int] | None:
    """A vertex set ``U`` with ``switch(g1, U) == g2``, or ``None``.

    Both graphs must share the same labelled underlying graph.
    """
    if g1.order != g2.order or g1.pairs() != g2.pairs():
        raise GraphError("switching equivalence needs identical underlying graphs")
    h1, l1 = _normalized(g1)
    h2, l2 = _normalized(g2)
    if h1 != h2:
        return None
    return frozenset(v for v in range(g1.order) if l1[v] != l2[v])


def switching_equivalent(g1: SignedGraph, g2: SignedGraph) -> bool:
    return switching_set(g1, g2) is not None


def delete_vertices(g: SignedGraph, s: Iterable[int]) -> SignedGraph:
    """Induced subgraph on the remaining vertices, relabelled in order."""
    gone = _check_vertex_set(g, s)
    keep = [v for v in range(g.order) if v not in gone]
    new = {v: i for i, v in enumerate(keep)}
    return SignedGraph(
        len(keep),
        tuple((new[u], new[v], sgn) for u, v, sgn in g.edges if u in new and v in new),
    )


def delete_edge(g: SignedGraph, u: int, v: int) -> SignedGraph:
    key = (u, v) if u < v else (v, u)
    if key not in g.signs:
        raise GraphError(f"no edge between {u} and {v}")
    return SignedGraph(g.order, tuple(e for e in g.edges if (e[0], e[1]) != key))


def _iter_cycles(g: SignedGraph) -> Iterator[CycleData]:
    adj = g.adjacency
    for start in range(g.order):
        path = [start]
        on_path = {start}
        stack = [iter(sorted(w for w in adj[start] if w > start))]
        while stack:
            nxt = next(stack[-1], None)
            if nxt is None:
                stack.pop()
                on_path.discard(path.pop())
                continue
            if nxt in on_path:
                continue
            path.append(nxt)
            on_path.add(nxt)
            # close the cycle; path[1] < path[-1] keeps one orientation
            if len(path) >= 3 and start in adj[nxt] and path[1] < nxt:
                sign = adj[nxt][start]
                for a, b in zip(path, path[1:]):
                    sign *= adj[a][b]
                yield CycleData(tuple(path), sign)
            stack.append(iter(sorted(w for w in adj[nxt] if w > start)))


def all_cycles(g: SignedGraph) -> list[CycleData]:
    """Every simple cycle once, anchored at its smallest vertex."""
    return list(_iter_cycles(g))


def connected_components(g: SignedGraph) -> list[list[int]]:
    seen = [False] * g.order
    comps = []
    for root in range(g.order):
        if seen[root]:
            continue
        seen[root] = True
        comp, queue = [], deque([root])
        while queue:
            x = queue.popleft()
            comp.append(x)
            for y in g.adjacency[x]:
                if not seen[y]:
                    seen[y] = True
                    queue.append(y)
        comps.append(sorted(comp))
    return comps


def is_connected(g: SignedGraph) -> bool:
    return g.order > 0 and len(connected_components(g)) == 1


def is_forest(g: SignedGraph) -> bool:
    return g.num_edges == g.order - len(connected_components(g))


def is_unicyclic(g: SignedGraph) -> bool:
    return g.num_edges == g.order and is_connected(g)


def unique_cycle(g: SignedGraph) -> CycleData:
    if not is_unicyclic(g):
        raise GraphError("graph is not unicyclic")
    # strip leaves until only the cycle remains
    deg = [g.degree(v) for v in range(g.order)]
    alive = set(range(g.order))
    leaves = deque(v for v in alive if deg[v] == 1)
    while leaves:
        v = leaves.popleft()
        alive.discard(v)
        for w in g.adjacency[v]:
            if w in alive:
                deg[w] -= 1
                if deg[w] == 1:
                    leaves.append(w)
    start = min(alive)
    path = [start]
    prev, cur = None, start
    while True:
        nxt = min(w for w in g.adjacency[cur] if w in alive and w != prev)
        if nxt == start:
            break
        path.append(nxt)
        prev, cur = cur, nxt
    if path[1] > path[-1]:
        path = [path[0], *reversed(path[1:])]
    sign = 1
    for i in range(len(path)):
        sign *= g.sign(path[i], path[(i + 1) % len(path)])
    return CycleData(tuple(path), sign)


def girth(g: SignedGraph) -> int | None:
    """Length of a shortest cycle, ``None`` for forests."""
    best = None
    for root in range(g.order):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y in g.adjacency[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif parent[x] != y:
                    length = dist[x] + dist[y] + 1
                    if best is None or length < best:
                        best = length
    return best
