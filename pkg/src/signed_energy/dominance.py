"""Fixed-``n`` checks of the quasi-order dominance chains around the
unbalanced girth-4 lollipop.

Each function returns the raw :class:`QuasiOrderResult` values so callers
decide what to assert.
"""
from __future__ import annotations

from dataclasses import dataclass

from .charpoly import QuasiOrderResult, Relation, b_sequence, quasi_compare
from .core import SignedGraph, disjoint_union
from .enumeration import TREE_CAP, canonical_code, enumerate_trees, enumerate_unicyclic, signed_classes
from .families import cycle, lollipop, path


@dataclass(frozen=True)
class Comparison:
    left: str
    right: str
    result: QuasiOrderResult

    @property
    def less(self) -> bool:
        return self.result.relation is Relation.LESS


def _target(n: int) -> SignedGraph:
    return lollipop(n, 4, balanced=False)


def trees_vs_lollipop(n: int, cap: int = TREE_CAP) -> list[Comparison]:
    """Every tree on ``n`` vertices against the unbalanced girth-4 lollipop."""
    target = _target(n)
    return [
        Comparison(f"tree {canonical_code(t)}", "lollipop4-", quasi_compare(t, target))
        for t in enumerate_trees(n, cap)
    ]


def girth4_unbalanced_vs_lollipop(n: int) -> list[Comparison]:
    """Every unbalanced girth-4 unicyclic graph other than the lollipop itself."""
    target = _target(n)
    own = canonical_code(target)
    out = []
    for g in enumerate_unicyclic(n):
        _, neg = signed_classes(g)
        if neg.girth != 4 or neg.code == own:
            continue
        out.append(Comparison(f"{neg.code}-", "lollipop4-", quasi_compare(neg.graph, target)))
    return out


def negative_cycle_vs_lollipop(n: int) -> Comparison:
    return Comparison(f"C_{n}^-", "lollipop4-", quasi_compare(cycle(n, balanced=False), _target(n)))


def long_girth_vs_lollipop(n: int, g: int) -> Comparison:
    """Unbalanced girth-``g`` lollipop against the girth-4 one."""
    return Comparison(
        f"lollipop{g}-", "lollipop4-", quasi_compare(lollipop(n, g, balanced=False), _target(n))
    )


def balanced_girth6_vs_lollipop(n: int) -> Comparison:
    return Comparison("lollipop6+", "lollipop4-", quasi_compare(lollipop(n, 6), _target(n)))


def path_decomposition(n: int, cycle_weight: int = 2) -> tuple[tuple[int, ...], list[int]]:
    """``b``-sequence of the unbalanced girth-4 lollipop on ``n >= 5``
    vertices and its expansion along the negative edge at the attachment
    vertex: ``b_2i(P_n) + b_(2i-2)(P_(n-4) u P_2) + w * b_(2i-4)(P_(n-4))``.

    Deleting that edge leaves ``P_n``, deleting both ends leaves
    ``P_(n-4) u P_2`` and deleting the 4-cycle leaves ``P_(n-4)``; the
    cycle term carries weight ``w = 2`` from the edge recurrence.
    """
    lhs = b_sequence(_target(n))
    pn = b_sequence(path(n))
    mid = b_sequence(disjoint_union(path(n - 4), path(2)))
    tail = b_sequence(path(n - 4))

    def at(seq, i):
        return seq[i] if 0 <= i < len(seq) else 0

    rhs = [at(pn, i) + at(mid, i - 1) + cycle_weight * at(tail, i - 2) for i in range(len(lhs))]
    return lhs, rhs


def path_decomposition_holds(n: int) -> bool:
    """The expansion above is exact and ``b_2i(L) > b_2i(P_n)`` for ``i >= 1``."""
    lhs, rhs = path_decomposition(n)
    pn = b_sequence(path(n))
    return list(lhs) == rhs and all(lhs[i] > pn[i] for i in range(1, len(lhs)))
