"""Named graph families: paths, signed cycles, lollipops.

Layout: cycle vertices ``0..g-1``, path vertices ``g..n-1`` hanging off
vertex 0, and the single negative edge of an unbalanced graph at
``(0, g-1)``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from .charpoly import b_coefficients
from .core import GraphError, SignedGraph, delete_vertices, from_edge_list


@dataclass(frozen=True)
class FamilySpec:
    family: str
    n: int
    g: int | None = None
    balanced: bool = True

    def __post_init__(self):
        if self.family == "path":
            if self.n < 1:
                raise GraphError("path needs n >= 1")
        elif self.family == "cycle":
            if self.n < 3:
                raise GraphError("cycle needs n >= 3")
            if self.g not in (None, self.n):
                raise GraphError("cycle girth must equal n")
        elif self.family == "lollipop":
            if self.g is None or not self.n >= self.g >= 3:
                raise GraphError(f"lollipop needs n >= g >= 3, got n={self.n}, g={self.g}")
        else:
            raise GraphError(f"unknown family {self.family!r}")

    def __str__(self) -> str:
        parts = [f"n={self.n}"]
        if self.family == "lollipop":
            parts.append(f"g={self.g}")
        if self.family != "path":
            parts.append("balanced" if self.balanced else "unbalanced")
        return f"{self.family}:" + ",".join(parts)


def path(n: int) -> SignedGraph:
    return build(FamilySpec("path", n))


def cycle(n: int, balanced: bool = True) -> SignedGraph:
    return build(FamilySpec("cycle", n, balanced=balanced))


def lollipop(n: int, g: int, balanced: bool = True) -> SignedGraph:
    """``C_g`` with a pendant path on ``n - g`` vertices at one cycle vertex."""
    return build(FamilySpec("lollipop", n, g, balanced))


def build(spec: FamilySpec) -> SignedGraph:
    n = spec.n
    if spec.family == "path":
        return from_edge_list(n, [(i, i + 1, 1) for i in range(n - 1)])
    g = n if spec.family == "cycle" else spec.g
    edges = [(i, i + 1, 1) for i in range(g - 1)]
    edges.append((0, g - 1, 1 if spec.balanced else -1))
    if n > g:
        edges.append((0, g, 1))
        edges += [(i, i + 1, 1) for i in range(g, n - 1)]
    return from_edge_list(n, edges)


_SPEC_RE = re.compile(r"^\s*(path|cycle|lollipop)\s*:(.*)$")


def parse_family(text: str) -> FamilySpec:
    """Parse ``tag:key=value,...`` such as ``lollipop:n=10,g=4,unbalanced``.

    Recognised keys are ``n`` and ``g``; bare words ``balanced`` /
    ``unbalanced`` (or ``sign=+`` / ``sign=-``) pick the cycle sign.
    """
    m = _SPEC_RE.match(text)
    if not m:
        raise GraphError(f"not a family spec: {text!r}")
    family, body = m.groups()
    n = g = None
    balanced = True
    for item in filter(None, (s.strip() for s in body.split(","))):
        if item in ("balanced", "+", "positive"):
            balanced = True
        elif item in ("unbalanced", "-", "negative"):
            balanced = False
        elif "=" in item:
            key, value = (s.strip() for s in item.split("=", 1))
            if key == "n":
                n = int(value)
            elif key == "g":
                g = int(value)
            elif key == "sign":
                balanced = value in ("+", "+1", "1")
            else:
                raise GraphError(f"unknown key {key!r} in {text!r}")
        else:
            raise GraphError(f"cannot parse {item!r} in {text!r}")
    if n is None:
        raise GraphError(f"missing n in {text!r}")
    return FamilySpec(family, n, g, balanced)


def b_recurrence_check(n: int, g: int, balanced: bool = False) -> bool:
    """Check ``b_j(G) = b_j(G - v) + b_{j-2}(G - v - u)`` on the lollipop
    family, where ``v`` is the end of the pendant path and ``u`` its neighbour.

    ``G - v`` and ``G - v - u`` are the lollipops on ``n - 1`` and ``n - 2``
    vertices; both identities are checked.
    """
    if n < g + 2:
        raise GraphError(f"need n >= g + 2 for a pendant edge with a pendant neighbour, got n={n}, g={g}")
    whole = lollipop(n, g, balanced)
    v, u = n - 1, n - 2
    minus_v = delete_vertices(whole, [v])
    minus_uv = delete_vertices(whole, [u, v])
    if minus_v != lollipop(n - 1, g, balanced) or minus_uv != lollipop(n - 2, g, balanced):
        return False
    b = b_coefficients(whole)
    b1 = b_coefficients(minus_v)
    b2 = b_coefficients(minus_uv)
    get = lambda seq, j: seq[j] if 0 <= j < len(seq) else 0  # noqa: E731
    return all(b[j] == get(b1, j) + get(b2, j - 2) for j in range(n + 1))
