"""Exhaustive generation of trees and connected unicyclic graphs up to
isomorphism, signed classes, and the extremal-energy verifiers."""
from __future__ import annotations

import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from .charpoly import PairingPropertyError, b_sequence, charpoly
from .core import GraphError, SignedGraph, is_unicyclic, relabel, unique_cycle
from .families import cycle, lollipop
from .spectral import DEFAULT_EIGEN_TOL, energy

log = logging.getLogger(__name__)

TREE_CAP = 12
UNICYCLIC_CAP = 11
CANON_CAP = 14
ENERGY_TOL = 1e-9

CanonicalCode = str


# ------------------------------------------------------------ canonical form


def _refine(partition: list[list[int]], nbrs: list[set[int]]) -> list[list[int]]:
    """Equitable refinement of an ordered partition.

    Cells are split by the count of neighbours in every cell; the split order
    depends only on those counts, so the result is labelling-invariant.
    """
    changed = True
    while changed:
        changed = False
        where = {}
        for i, cell in enumerate(partition):
            for v in cell:
                where[v] = i
        out = []
        for cell in partition:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                sig = [0] * len(partition)
                for w in nbrs[v]:
                    sig[where[w]] += 1
                groups.setdefault(tuple(sig), []).append(v)
            if len(groups) > 1:
                changed = True
            out.extend(groups[k] for k in sorted(groups))
        partition = out
    return partition


def canonical_form(g: SignedGraph, cap: int = CANON_CAP) -> tuple[CanonicalCode, list[int]]:
    """Canonical code of the underlying graph and a relabelling that attains it.

    The code is the upper-triangle adjacency bit string minimised over every
    labelling reachable by refine-and-individualise search.  Twin vertices
    (same neighbourhood apart from each other) are branched on only once,
    since swapping them is an automorphism.
    """
    n = g.order
    if n > cap:
        raise GraphError(f"canonical form limited to n <= {cap}, got n = {n}")
    nbrs = [set(g.adjacency[v]) for v in range(n)]
    best: list = [None, None]

    def code_of(order: list[int]) -> str:
        return "".join(
            "1" if order[j] in nbrs[order[i]] else "0" for i in range(n) for j in range(i + 1, n)
        )

    def search(partition: list[list[int]]) -> None:
        partition = _refine(partition, nbrs)
        target = next((i for i, c in enumerate(partition) if len(c) > 1), None)
        if target is None:
            order = [c[0] for c in partition]
            code = code_of(order)
            if best[0] is None or code < best[0]:
                best[0], best[1] = code, order
            return
        cell = partition[target]
        reps: list[int] = []
        for v in cell:
            if not any(nbrs[v] - {w} == nbrs[w] - {v} for w in reps):
                reps.append(v)
        for v in reps:
            rest = [w for w in cell if w != v]
            search(partition[:target] + [[v], rest] + partition[target + 1 :])

    degrees: dict[int, list[int]] = {}
    for v in range(n):
        degrees.setdefault(len(nbrs[v]), []).append(v)
    search([degrees[d] for d in sorted(degrees)] if n else [])
    if n == 0:
        return "0:", []
    order = best[1]
    perm = [0] * n
    for new, old in enumerate(order):
        perm[old] = new
    return f"{n}:{best[0]}", perm


def canonical_code(g: SignedGraph, cap: int = CANON_CAP) -> CanonicalCode:
    return canonical_form(g, cap)[0]


def canonical_graph(g: SignedGraph) -> SignedGraph:
    """``g`` relabelled into canonical vertex order (signs carried along)."""
    return relabel(g, canonical_form(g)[1])


# ---------------------------------------------------------------- generation


def _dedupe(candidates: Iterable[SignedGraph]) -> list[SignedGraph]:
    seen: dict[str, SignedGraph] = {}
    for h in candidates:
        code, perm = canonical_form(h)
        if code not in seen:
            seen[code] = relabel(h, perm)
    return [seen[c] for c in sorted(seen)]


@lru_cache(maxsize=None)
def _trees(n: int) -> tuple[SignedGraph, ...]:
    if n == 1:
        return (SignedGraph(1),)
    smaller = _trees(n - 1)
    return tuple(
        _dedupe(
            SignedGraph(n, tuple(sorted(t.edges + ((v, n - 1, 1),))))
            for t in smaller
            for v in range(n - 1)
        )
    )


def enumerate_trees(n: int, cap: int = TREE_CAP) -> list[SignedGraph]:
    """One all-positive representative per isomorphism class of trees on ``n`` vertices."""
    if not 1 <= n <= cap:
        raise GraphError(f"tree enumeration needs 1 <= n <= {cap}, got {n}")
    return list(_trees(n))


@lru_cache(maxsize=None)
def _unicyclic(n: int) -> tuple[SignedGraph, ...]:
    candidates = (
        SignedGraph(n, tuple(sorted(t.edges + ((u, v, 1),))))
        for t in _trees(n)
        for u in range(n)
        for v in range(u + 1, n)
        if not t.has_edge(u, v)
    )
    return tuple(_dedupe(candidates))


def enumerate_unicyclic(n: int, cap: int = UNICYCLIC_CAP) -> list[SignedGraph]:
    """One representative per isomorphism class of connected unicyclic graphs."""
    if not 3 <= n <= cap:
        raise GraphError(f"unicyclic enumeration needs 3 <= n <= {cap}, got {n}")
    return list(_unicyclic(n))


# ------------------------------------------------------------ signed classes


@dataclass(frozen=True)
class SignedClass:
    graph: SignedGraph
    code: CanonicalCode
    cycle_sign: int
    girth: int

    @property
    def label(self) -> str:
        return f"{self.code}{'+' if self.cycle_sign > 0 else '-'}"


def signed_classes(g: SignedGraph) -> tuple[SignedClass, SignedClass]:
    """Balanced and unbalanced switching classes on a unicyclic graph.

    The unbalanced representative has exactly one negative edge, the first
    edge of the cycle.
    """
    if not is_unicyclic(g):
        raise GraphError("signed_classes needs a connected unicyclic graph")
    base = g.underlying()
    code = canonical_code(base)
    cyc = unique_cycle(base)
    a, b = cyc.vertices[0], cyc.vertices[1]
    key = (min(a, b), max(a, b))
    neg = SignedGraph(g.order, tuple((u, v, -1 if (u, v) == key else 1) for u, v, _ in base.edges))
    length = len(cyc)
    return SignedClass(base, code, 1, length), SignedClass(neg, code, -1, length)


def all_signed_classes(n: int, cap: int = UNICYCLIC_CAP) -> list[SignedClass]:
    out: list[SignedClass] = []
    for g in enumerate_unicyclic(n, cap):
        out.extend(signed_classes(g))
    return out


def class_of(g: SignedGraph) -> tuple[CanonicalCode, int]:
    """``(canonical code, cycle sign)``: a complete switching-isomorphism
    invariant for unicyclic signed graphs."""
    return canonical_code(g), unique_cycle(g).sign


# ------------------------------------------------------------------ reports


@dataclass(frozen=True)
class ClassRecord:
    code: CanonicalCode
    girth: int
    cycle_sign: int
    b_sequence: tuple[int, ...] | None
    energy: float
    edges: tuple[tuple[int, int, int], ...]

    def as_dict(self) -> dict:
        return {
            "code": self.code,
            "girth": self.girth,
            "cycle_sign": self.cycle_sign,
            "b_sequence": list(self.b_sequence) if self.b_sequence is not None else None,
            "energy": self.energy,
            "edges": [list(e) for e in self.edges],
        }


def _record(cls: SignedClass, tol: float = DEFAULT_EIGEN_TOL) -> ClassRecord:
    try:
        b = b_sequence(charpoly(cls.graph))
    except PairingPropertyError:
        b = None
    return ClassRecord(cls.code, cls.girth, cls.cycle_sign, b, energy(cls.graph, tol).value, cls.graph.edges)


_RECORD_CACHE: dict[tuple[int, int, float], list[ClassRecord]] = {}


def class_records(n: int, workers: int = 1, tol: float = DEFAULT_EIGEN_TOL, cap: int = UNICYCLIC_CAP) -> list[ClassRecord]:
    """Records for every signed class of order ``n``, sorted by (code, sign).

    Cached per ``(n, cap, tol)``; the worker count does not affect results.
    """
    key = (n, cap, tol)
    if key not in _RECORD_CACHE:
        _RECORD_CACHE[key] = _records(all_signed_classes(n, cap), workers, tol)
    return list(_RECORD_CACHE[key])


def _records(classes: Sequence[SignedClass], workers: int = 1, tol: float = DEFAULT_EIGEN_TOL) -> list[ClassRecord]:
    if workers > 1 and len(classes) > 1:
        chunk = max(1, len(classes) // (4 * workers))
        with ProcessPoolExecutor(max_workers=workers) as pool:
            out = list(pool.map(_record, classes, [tol] * len(classes), chunksize=chunk))
    else:
        out = [_record(c, tol) for c in classes]
    return sorted(out, key=lambda r: (r.code, -r.cycle_sign))


def expected_maximiser(n: int) -> tuple[CanonicalCode, int, str]:
    """Class the extremal theorem predicts: ``C_n^+`` for n = 5, 7, else the
    unbalanced girth-4 lollipop."""
    if n in (5, 7):
        return canonical_code(cycle(n)), 1, f"C_{n}^+"
    return canonical_code(lollipop(n, 4)), -1, f"lollipop(n={n},g=4,unbalanced)"


@dataclass
class EnumerationReport:
    n: int
    trees: int
    unicyclic: int
    signed_classes: int
    records: list[ClassRecord]
    argmax: ClassRecord
    runner_up: ClassRecord | None
    margin: float
    ties: list[ClassRecord]
    expected: str
    matches_theorem: bool
    notes: list[str] = field(default_factory=list)

    def summary(self) -> str:
        verdict = "PASS" if self.matches_theorem else "FAIL"
        sign = "+" if self.argmax.cycle_sign > 0 else "-"
        return (
            f"n={self.n} trees={self.trees} unicyclic={self.unicyclic} signed={self.signed_classes} "
            f"argmax={self.argmax.code}{sign} girth={self.argmax.girth} E={self.argmax.energy:.10g} "
            f"margin={self.margin:.3e} expected={self.expected} {verdict}"
        )


def verify_max_energy(
    n: int, workers: int = 1, tol: float = DEFAULT_EIGEN_TOL, cap: int = UNICYCLIC_CAP
) -> EnumerationReport:
    """Energy of every signed unicyclic class on ``n`` vertices and its argmax."""
    if not 4 <= n <= cap:
        raise GraphError(f"verify_max_energy needs 4 <= n <= {cap}, got {n}")
    classes = all_signed_classes(n, cap)
    records = class_records(n, workers, tol, cap)
    peak = max(r.energy for r in records)
    # classes within ENERGY_TOL of the peak are tied; pick canonically among them
    maxima = sorted(
        (r for r in records if peak - r.energy <= ENERGY_TOL), key=lambda r: (r.code, -r.cycle_sign)
    )
    rest = sorted(
        (r for r in records if peak - r.energy > ENERGY_TOL), key=lambda r: (-r.energy, r.code, -r.cycle_sign)
    )
    top, ties = maxima[0], maxima[1:]
    # margin is measured to the best class outside the tied set
    runner = rest[0] if rest else None
    margin = top.energy - runner.energy if runner else math.inf
    code, sign, label = expected_maximiser(n)
    # a tie is acceptable only between the two signings of the predicted graph
    ok = any(r.code == code and r.cycle_sign == sign for r in maxima) and all(r.code == code for r in maxima)
    notes = []
    if ties:
        notes.append(
            f"{len(ties)} class(es) tie the maximum within {ENERGY_TOL}: "
            + ", ".join(f"{r.code}{'+' if r.cycle_sign > 0 else '-'}" for r in ties)
        )
    if margin <= 1e-6:
        notes.append(f"winner margin {margin:.3e} below 1e-6")
    report = EnumerationReport(
        n,
        len(enumerate_trees(n)),
        len(classes) // 2,
        len(classes),
        records,
        top,
        runner,
        margin,
        ties,
        label,
        ok,
        notes,
    )
    log.info(report.summary())
    return report


@dataclass(frozen=True)
class ParityCheck:
    code: CanonicalCode
    girth: int
    balanced_energy: float
    unbalanced_energy: float
    expectation: str
    """``unbalanced>balanced``, ``balanced>unbalanced`` or ``equal``."""
    holds: bool


@dataclass
class CheckReport:
    n: int
    checks: list
    passed: bool

    @property
    def failures(self) -> list:
        return [c for c in self.checks if not c.holds]


def _pairs(n: int, workers: int, cap: int) -> list[tuple[ClassRecord, ClassRecord]]:
    records = class_records(n, workers, cap=cap)
    by_code: dict[str, dict[int, ClassRecord]] = {}
    for r in records:
        by_code.setdefault(r.code, {})[r.cycle_sign] = r
    return [(v[1], v[-1]) for _, v in sorted(by_code.items())]


def verify_girth_parity(n: int, workers: int = 1, cap: int = UNICYCLIC_CAP) -> CheckReport:
    """Balanced vs unbalanced energy on every unicyclic graph of order ``n``.

    Girth 0 mod 4: unbalanced strictly larger.  Girth 2 mod 4: balanced
    strictly larger.  Odd girth: equal within ``1e-9``.
    """
    if not 4 <= n <= cap:
        raise GraphError(f"verify_girth_parity needs 4 <= n <= {cap}, got {n}")
    checks = []
    for bal, unb in _pairs(n, workers, cap):
        g = bal.girth
        eb, eu = bal.energy, unb.energy
        if g % 2:
            expect, holds = "equal", abs(eb - eu) <= ENERGY_TOL
        elif g % 4 == 0:
            expect, holds = "unbalanced>balanced", eu > eb + ENERGY_TOL
        else:
            expect, holds = "balanced>unbalanced", eb > eu + ENERGY_TOL
        checks.append(ParityCheck(bal.code, g, eb, eu, expect, holds))
    return CheckReport(n, checks, all(c.holds for c in checks))


def cycle_bound_reference(n: int) -> tuple[str, SignedGraph]:
    """Unsigned unicyclic energy maximiser: ``C_n`` for n <= 7 and
    n in {9, 10, 11, 13, 15}, otherwise the girth-6 lollipop."""
    if n <= 7 or n in (9, 10, 11, 13, 15):
        return f"C_{n}^+", cycle(n)
    return f"lollipop(n={n},g=6,balanced)", lollipop(n, 6)


@dataclass(frozen=True)
class BoundCheck:
    code: CanonicalCode
    girth: int
    cycle_sign: int
    energy: float
    bound: float
    holds: bool


def verify_cycle_bound(n: int, workers: int = 1, cap: int = UNICYCLIC_CAP) -> CheckReport:
    """Every class of odd girth or girth 2 mod 4 has energy at most that of
    the unsigned unicyclic maximiser (tolerance ``1e-9``)."""
    if not 4 <= n <= cap:
        raise GraphError(f"verify_cycle_bound needs 4 <= n <= {cap}, got {n}")
    _, ref = cycle_bound_reference(n)
    bound = energy(ref).value
    checks = [
        BoundCheck(r.code, r.girth, r.cycle_sign, r.energy, bound, r.energy <= bound + ENERGY_TOL)
        for r in class_records(n, workers, cap=cap)
        if r.girth % 2 or r.girth % 4 == 2
    ]
    return CheckReport(n, checks, all(c.holds for c in checks))


def cycle_vs_lollipop(n: int) -> tuple[float, float]:
    """``(E(C_n^+), E(unbalanced girth-4 lollipop))`` for a single ``n``."""
    return energy(cycle(n)).value, energy(lollipop(n, 4, balanced=False)).value


__all__ = [
    "CanonicalCode",
    "CheckReport",
    "ClassRecord",
    "EnumerationReport",
    "SignedClass",
    "all_signed_classes",
    "canonical_code",
    "class_records",
    "canonical_form",
    "canonical_graph",
    "class_of",
    "cycle_bound_reference",
    "cycle_vs_lollipop",
    "enumerate_trees",
    "enumerate_unicyclic",
    "expected_maximiser",
    "signed_classes",
    "verify_cycle_bound",
    "verify_girth_parity",
    "verify_max_energy",
]
