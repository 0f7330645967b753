"""Exact characteristic polynomials of signed graphs.

Three engines compute the same polynomial by unrelated routes:

* :func:`charpoly_sachs` sums signed weights over basic figures,
* :func:`charpoly_recurrence` expands along edges (pendant edges first),
* :func:`charpoly_exact_traces` runs Faddeev-LeVerrier in integer arithmetic.

All arithmetic is over Python integers.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable, Iterator, Sequence

from .core import CycleData, GraphError, SignedGraph, all_cycles

DEFAULT_ORACLE_LIMIT = 14


class PairingPropertyError(GraphError):
    """The graph's spectrum is not symmetric about the origin."""


class OracleLimitError(GraphError):
    pass


@dataclass(frozen=True)
class IntPolynomial:
    """Monic polynomial ``x^n + a_1 x^(n-1) + ... + a_n``.

    ``coeffs[k]`` is ``a_k``; ``coeffs[0] == 1``.
    """

    coeffs: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    @classmethod
    def from_low_first(cls, low: Sequence[int]) -> "IntPolynomial":
        return cls(tuple(int(c) for c in reversed(low)))

    def low_first(self) -> list[int]:
        return list(reversed(self.coeffs))

    def __call__(self, x):
        acc = 0
        for c in self.coeffs:
            acc = acc * x + c
        return acc

    def reflected(self) -> "IntPolynomial":
        """``(-1)^n phi(-x)``: coefficients of the negated graph."""
        return IntPolynomial(tuple(c if k % 2 == 0 else -c for k, c in enumerate(self.coeffs)))

    def __str__(self) -> str:
        n = self.degree
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            p = n - k
            mag = abs(c)
            mono = "" if p == 0 else ("x" if p == 1 else f"x^{p}")
            body = str(mag) if p == 0 or mag != 1 else ""
            body += mono
            if not terms:
                terms.append(("-" if c < 0 else "") + body)
            else:
                terms.append(("- " if c < 0 else "+ ") + body)
        return " ".join(terms) if terms else "0"


def _poly_mul(p: list[int], q: list[int]) -> list[int]:
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return out


def _poly_axpy(acc: list[int], c: int, p: list[int], shift: int = 0) -> None:
    """acc += c * x^shift * p, in place (low-first lists)."""
    for i, a in enumerate(p):
        acc[i + shift] += c * a


# ---------------------------------------------------------------- Sachs engine


@dataclass(frozen=True)
class BasicFigure:
    """Vertex-disjoint union of single edges and cycles."""

    edges: tuple[tuple[int, int], ...]
    cycles: tuple[CycleData, ...]

    @property
    def order(self) -> int:
        return 2 * len(self.edges) + sum(len(c) for c in self.cycles)

    @property
    def components(self) -> int:
        return len(self.edges) + len(self.cycles)

    @property
    def weight(self) -> int:
        w = (-1) ** self.components * 2 ** len(self.cycles)
        for c in self.cycles:
            w *= c.sign
        return w


def basic_figures(g: SignedGraph) -> Iterator[BasicFigure]:
    """Enumerate every basic figure of ``g`` (including the empty one).

    Brute force over component subsets; only for very small graphs.
    """
    parts: list[tuple[frozenset[int], object]] = [
        (frozenset((u, v)), (u, v)) for u, v, _ in g.edges
    ]
    parts += [(frozenset(c.vertices), c) for c in all_cycles(g)]

    def rec(i: int, used: frozenset[int], chosen: list):
        if i == len(parts):
            edges = tuple(p for p in chosen if isinstance(p, tuple))
            cycles = tuple(p for p in chosen if isinstance(p, CycleData))
            yield BasicFigure(edges, cycles)
            return
        yield from rec(i + 1, used, chosen)
        vs, obj = parts[i]
        if not vs & used:
            chosen.append(obj)
            yield from rec(i + 1, used | vs, chosen)
            chosen.pop()

    yield from rec(0, frozenset(), [])


def charpoly_sachs(g: SignedGraph, oracle_limit: int = DEFAULT_ORACLE_LIMIT) -> IntPolynomial:
    """Coefficients from the signed Sachs formula.

    ``a_j`` is the sum over basic figures ``L`` of order ``j`` of
    ``(-1)^p(L) * 2^|c(L)| * prod(sign of each cycle)``.  The sum is
    organised as a memoised recursion on the set of still-free vertices:
    the smallest free vertex is left uncovered, matched to a free neighbour,
    or placed on a cycle through it.
    """
    n = g.order
    if n > oracle_limit:
        raise OracleLimitError(f"Sachs engine limited to n <= {oracle_limit}, got n = {n}")
    cycles_at: list[list[tuple[int, int, int]]] = [[] for _ in range(n)]
    for c in all_cycles(g):
        mask = 0
        for v in c.vertices:
            mask |= 1 << v
        cycles_at[c.vertices[0]].append((mask, len(c), -2 * c.sign))
    nbr_mask = [sum(1 << w for w in g.adjacency[v]) for v in range(n)]
    memo: dict[int, list[int]] = {0: [1]}

    def figures(mask: int) -> list[int]:
        # low-first in figure order: out[j] = signed weight of order-j figures
        hit = memo.get(mask)
        if hit is not None:
            return hit
        v = (mask & -mask).bit_length() - 1
        rest = mask & ~(1 << v)
        out = [0] * (bin(mask).count("1") + 1)
        _poly_axpy(out, 1, figures(rest))
        m = nbr_mask[v] & rest
        while m:
            w_bit = m & -m
            m ^= w_bit
            _poly_axpy(out, -1, figures(rest & ~w_bit), 2)
        for cmask, length, weight in cycles_at[v]:
            if cmask & mask == cmask:
                _poly_axpy(out, weight, figures(mask & ~cmask), length)
        memo[mask] = out
        return out

    by_order = figures((1 << n) - 1)
    return IntPolynomial(tuple(by_order[j] if j < len(by_order) else 0 for j in range(n + 1)))


# ----------------------------------------------------------- recurrence engine


def _components(vertices: frozenset[int], adj: dict[int, dict[int, int]]) -> list[frozenset[int]]:
    seen: set[int] = set()
    comps = []
    for r in sorted(vertices):
        if r in seen:
            continue
        seen.add(r)
        stack, comp = [r], [r]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y in vertices and y not in seen:
                    seen.add(y)
                    stack.append(y)
                    comp.append(y)
        comps.append(frozenset(comp))
    return comps


def charpoly_recurrence(g: SignedGraph) -> IntPolynomial:
    """Characteristic polynomial by edge expansion.

    For a pendant edge ``uv`` with leaf ``v``:
    ``phi(G) = x phi(G - v) - phi(G - u - v)``.  Otherwise, for any edge:
    ``phi(G) = phi(G - uv) - phi(G - u - v) - 2 sum_C sign(C) phi(G - C)``
    over cycles ``C`` through ``uv``.  Disconnected graphs factor over
    components; results are memoised on the component's edge set.
    """
    memo: dict[frozenset[tuple[int, int, int]], list[int]] = {}

    def induced(edges: frozenset, keep: frozenset[int]) -> frozenset:
        return frozenset(e for e in edges if e[0] in keep and e[1] in keep)

    def phi(vertices: frozenset[int], edges: frozenset) -> list[int]:
        adj: dict[int, dict[int, int]] = {v: {} for v in vertices}
        for u, v, s in edges:
            adj[u][v] = s
            adj[v][u] = s
        out = [1]
        for comp in _components(vertices, adj):
            if len(comp) == 1:
                out = [0] + out
            else:
                out = _poly_mul(out, phi_connected(comp, induced(edges, comp), adj))
        return out

    def phi_connected(vertices: frozenset[int], edges: frozenset, adj) -> list[int]:
        hit = memo.get(edges)
        if hit is not None:
            return hit
        n = len(vertices)
        out = [0] * (n + 1)
        leaf = next((v for v in sorted(vertices) if len(adj[v]) == 1), None)
        if leaf is not None:
            u = next(iter(adj[leaf]))
            rest = vertices - {leaf}
            _poly_axpy(out, 1, phi(rest, induced(edges, rest)), 1)
            rest2 = rest - {u}
            _poly_axpy(out, -1, phi(rest2, induced(edges, rest2)))
        else:
            u, v, s = min(edges)
            _poly_axpy(out, 1, phi(vertices, edges - {(u, v, s)}))
            rest2 = vertices - {u, v}
            _poly_axpy(out, -1, phi(rest2, induced(edges, rest2)))
            for path, sign in _paths(adj, v, u, exclude_edge=(u, v)):
                cyc_sign = sign * s
                rest3 = vertices - set(path)
                _poly_axpy(out, -2 * cyc_sign, phi(rest3, induced(edges, rest3)))
        memo[edges] = out
        return out

    vs = frozenset(range(g.order))
    return IntPolynomial.from_low_first(phi(vs, frozenset(g.edges)))


def _paths(adj, src: int, dst: int, exclude_edge: tuple[int, int]):
    """Simple paths src -> dst avoiding the given edge, with sign products."""
    a, b = exclude_edge
    path = [src]
    on = {src}

    def rec(x: int, sign: int):
        for y, s in adj[x].items():
            if {x, y} == {a, b} or y in on:
                continue
            if y == dst:
                yield path + [y], sign * s
                continue
            path.append(y)
            on.add(y)
            yield from rec(y, sign * s)
            path.pop()
            on.discard(y)

    yield from rec(src, 1)


# --------------------------------------------------------------- trace engine


def charpoly_exact_traces(g: SignedGraph) -> IntPolynomial:
    """Faddeev-LeVerrier on the integer adjacency matrix.

    ``M_k = A M_{k-1} + a_{k-1} I`` and ``a_k = -tr(A M_k) / k``; every
    division is exact for integer matrices.
    """
    n = g.order
    adj = g.adjacency
    coeffs = [1]
    m = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        prev = coeffs[-1]
        for i in range(n):
            m[i][i] += prev
        # A is sparse: (A M)[i][j] = sum over neighbours w of i of s * M[w][j]
        am = [[0] * n for _ in range(n)]
        for i in range(n):
            row = am[i]
            for w, s in adj[i].items():
                mw = m[w]
                for j in range(n):
                    row[j] += s * mw[j]
        tr = sum(am[i][i] for i in range(n))
        if tr % k:
            raise ArithmeticError("non-integral Faddeev-LeVerrier step")
        coeffs.append(-tr // k)
        m = am
    return IntPolynomial(tuple(coeffs))


ENGINES: dict[str, Callable[[SignedGraph], IntPolynomial]] = {
    "sachs": charpoly_sachs,
    "recurrence": charpoly_recurrence,
    "traces": charpoly_exact_traces,
}


def charpoly(g: SignedGraph) -> IntPolynomial:
    """Default engine (recurrence)."""
    return charpoly_recurrence(g)


# --------------------------------------------------------- b-sequence, order


def has_pairing_property(g: SignedGraph) -> bool:
    p = charpoly(g)
    return all(p[k] == 0 for k in range(1, p.degree + 1, 2))


def b_coefficients(p: IntPolynomial | SignedGraph) -> list[int]:
    """All ``b_j``: ``b_{2j} = (-1)^j a_{2j}`` and ``b_{2j+1} = (-1)^j a_{2j+1}``."""
    if isinstance(p, SignedGraph):
        p = charpoly(p)
    return [(-1) ** (j // 2) * p[j] for j in range(p.degree + 1)]


def b_sequence(g: SignedGraph | IntPolynomial) -> tuple[int, ...]:
    """``(b_0, b_2, b_4, ...)`` for a graph with the pairing property."""
    p = charpoly(g) if isinstance(g, SignedGraph) else g
    if any(p[k] for k in range(1, p.degree + 1, 2)):
        raise PairingPropertyError("spectrum is not symmetric about 0")
    seq = tuple((-1) ** k * p[2 * k] for k in range(p.degree // 2 + 1))
    if any(b < 0 for b in seq):
        raise ArithmeticError(f"negative b-coefficient in {seq}")
    return seq


class Relation(enum.Enum):
    LESS = "Less"
    GREATER = "Greater"
    EQUAL = "Equal"
    INCOMPARABLE = "Incomparable"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class QuasiOrderResult:
    relation: Relation
    index: int | None = None
    """Index ``k`` (of ``b_{2k}``) first witnessing strictness or incomparability."""

    @property
    def strict(self) -> bool:
        return self.relation in (Relation.LESS, Relation.GREATER)


def compare_sequences(b1: Sequence[int], b2: Sequence[int]) -> QuasiOrderResult:
    """Componentwise comparison of two nonnegative sequences."""
    size = max(len(b1), len(b2))
    b1 = list(b1) + [0] * (size - len(b1))
    b2 = list(b2) + [0] * (size - len(b2))
    first_lt = next((k for k in range(size) if b1[k] < b2[k]), None)
    first_gt = next((k for k in range(size) if b1[k] > b2[k]), None)
    if first_lt is None and first_gt is None:
        return QuasiOrderResult(Relation.EQUAL)
    if first_gt is None:
        return QuasiOrderResult(Relation.LESS, first_lt)
    if first_lt is None:
        return QuasiOrderResult(Relation.GREATER, first_gt)
    return QuasiOrderResult(Relation.INCOMPARABLE, max(first_lt, first_gt))


def quasi_compare(g1: SignedGraph, g2: SignedGraph) -> QuasiOrderResult:
    if g1.order != g2.order:
        raise GraphError(f"order mismatch: {g1.order} vs {g2.order}")
    return compare_sequences(b_sequence(g1), b_sequence(g2))


def engines_agree(g: SignedGraph, oracle_limit: int = DEFAULT_ORACLE_LIMIT) -> dict[str, IntPolynomial]:
    """Run all three engines; return the per-engine results."""
    return {
        "sachs": charpoly_sachs(g, oracle_limit),
        "recurrence": charpoly_recurrence(g),
        "traces": charpoly_exact_traces(g),
    }


__all__ = [
    "BasicFigure",
    "IntPolynomial",
    "PairingPropertyError",
    "OracleLimitError",
    "QuasiOrderResult",
    "Relation",
    "b_coefficients",
    "b_sequence",
    "basic_figures",
    "charpoly",
    "charpoly_exact_traces",
    "charpoly_recurrence",
    "charpoly_sachs",
    "compare_sequences",
    "engines_agree",
    "has_pairing_property",
    "quasi_compare",
]
