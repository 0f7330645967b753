"""Matching numbers ``m(G, k)`` and path-union dominance chains."""
from __future__ import annotations

from dataclasses import dataclass

from .charpoly import QuasiOrderResult, Relation, compare_sequences
from .core import GraphError, SignedGraph, disjoint_union, is_forest
from .families import path


def _convolve(p: list[int], q: list[int]) -> list[int]:
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


def matching_numbers(g: SignedGraph) -> tuple[int, ...]:
    """``(m(G,0), m(G,1), ..., m(G, n//2))``; signs are ignored.

    Uses ``m(G, k) = m(G - e, k) + m(G - u - v, k - 1)`` with leaf edges
    preferred, memoised on edge sets, and convolution over components.
    """
    memo: dict[frozenset[tuple[int, int]], list[int]] = {}

    def vec(edges: frozenset[tuple[int, int]]) -> list[int]:
        if not edges:
            return [1]
        hit = memo.get(edges)
        if hit is not None:
            return hit
        adj: dict[int, set[int]] = {}
        for u, v in edges:
            adj.setdefault(u, set()).add(v)
            adj.setdefault(v, set()).add(u)
        # split into components first
        start = min(adj)
        comp, stack = {start}, [start]
        while stack:
            x = stack.pop()
            for y in adj[x] - comp:
                comp.add(y)
                stack.append(y)
        if len(comp) < len(adj):
            inside = frozenset(e for e in edges if e[0] in comp)
            out = _convolve(vec(inside), vec(edges - inside))
        else:
            leaf = next((x for x in sorted(adj) if len(adj[x]) == 1), None)
            if leaf is not None:
                u, v = leaf, next(iter(adj[leaf]))
            else:
                u, v = min(edges)
            e = (min(u, v), max(u, v))
            without = vec(edges - {e})
            gone = frozenset(f for f in edges if u not in f and v not in f)
            shifted = [0] + vec(gone)
            size = max(len(without), len(shifted))
            out = [
                (without[i] if i < len(without) else 0) + (shifted[i] if i < len(shifted) else 0)
                for i in range(size)
            ]
        memo[edges] = out
        return out

    raw = vec(frozenset(g.pairs()))
    size = g.order // 2 + 1
    return tuple(raw[k] if k < len(raw) else 0 for k in range(size))


def path_union(*sizes: int) -> SignedGraph:
    return disjoint_union(*(path(s) for s in sizes))


def forest_quasi_compare(f1: SignedGraph, f2: SignedGraph) -> QuasiOrderResult:
    for f in (f1, f2):
        if not is_forest(f):
            raise GraphError("forest_quasi_compare needs acyclic inputs")
    if f1.order != f2.order:
        raise GraphError(f"order mismatch: {f1.order} vs {f2.order}")
    return compare_sequences(matching_numbers(f1), matching_numbers(f2))


@dataclass(frozen=True)
class ChainResult:
    n: int
    holds: bool
    chain: tuple[tuple[int, ...], ...]
    """Path-union shapes in descending order, e.g. ``(8,), (2, 6), ...``."""
    failures: tuple[int, ...] = ()
    """Positions ``i`` where ``chain[i]`` does not strictly dominate ``chain[i+1]``."""


def path_union_chain(n: int) -> list[tuple[int, ...]]:
    """Ordering of ``P_n`` and ``P_j u P_{n-j}`` from largest to smallest.

    Even ``j`` run upward from 2 to ``2k``, then odd ``j`` run downward from
    ``2k+1`` to 1, where ``k = n // 4``.  Shapes are unordered, so a union
    that repeats its predecessor (``P_5 u P_3`` after ``P_3 u P_5``) is dropped.
    """
    if n < 4:
        raise GraphError("path-union chain needs n >= 4")
    k = n // 4
    chain: list[tuple[int, ...]] = [(n,)]
    chain += [(j, n - j) for j in range(2, 2 * k + 1, 2)]
    chain += [(j, n - j) for j in range(2 * k + 1, 0, -2)]
    out: list[tuple[int, ...]] = []
    for shape in chain:
        shape = tuple(sorted(shape))
        if not out or out[-1] != shape:
            out.append(shape)
    return out


def verify_path_union_chain(n: int) -> ChainResult:
    chain = path_union_chain(n)
    vectors = [matching_numbers(path_union(*shape)) for shape in chain]
    failures = tuple(
        i
        for i in range(len(chain) - 1)
        if compare_sequences(vectors[i], vectors[i + 1]).relation is not Relation.GREATER
    )
    return ChainResult(n, not failures, tuple(chain), failures)


__all__ = [
    "ChainResult",
    "forest_quasi_compare",
    "matching_numbers",
    "path_union",
    "path_union_chain",
    "verify_path_union_chain",
]
