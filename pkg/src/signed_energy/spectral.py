"""Eigenvalues, energy, and the Coulson integral cross-checks."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .charpoly import IntPolynomial, Relation, b_sequence, charpoly, has_pairing_property, quasi_compare
from .core import GraphError, SignedGraph, adjacency_matrix

DEFAULT_EIGEN_TOL = 1e-12
DEFAULT_QUAD_TOL = 1e-8
SWEEP_CAP = 100
TIE_TOL = 1e-9


class ConvergenceError(ArithmeticError):
    pass


class QuadratureError(ArithmeticError):
    pass


@dataclass(frozen=True)
class Spectrum:
    eigenvalues: tuple[float, ...]
    tolerance: float

    def __len__(self) -> int:
        return len(self.eigenvalues)

    def __iter__(self):
        return iter(self.eigenvalues)


@dataclass(frozen=True)
class EnergyValue:
    value: float
    method: str

    def __float__(self) -> float:
        return self.value


def jacobi_eigenvalues(a: np.ndarray, tol: float = DEFAULT_EIGEN_TOL, max_sweeps: int = SWEEP_CAP) -> np.ndarray:
    """Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations.

    Stops when the Frobenius norm of the off-diagonal part drops below
    ``tol``; raises :class:`ConvergenceError` after ``max_sweeps`` sweeps.
    """
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    a = np.array(a, dtype=float)
    n = a.shape[0]
    for _ in range(max_sweeps + 1):
        off = math.sqrt(float(np.sum(np.triu(a, 1) ** 2)) * 2.0)
        if off < tol:
            return np.diag(a).copy()
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                h = a[q, q] - a[p, p]
                if abs(apq) < 1e-36 * abs(h):
                    t = apq / h
                else:
                    theta = h / (2.0 * apq)
                    t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                rp, rq = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * rp - s * rq
                a[q, :] = s * rp + c * rq
                cp, cq = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * cp - s * cq
                a[:, q] = s * cp + c * cq
                a[p, q] = a[q, p] = 0.0
    raise ConvergenceError(f"Jacobi iteration did not reach tol={tol} in {max_sweeps} sweeps")


def eigenvalues(g: SignedGraph, tol: float = DEFAULT_EIGEN_TOL) -> Spectrum:
    vals = jacobi_eigenvalues(adjacency_matrix(g), tol)
    return Spectrum(tuple(sorted((float(v) for v in vals), reverse=True)), tol)


def energy(g: SignedGraph, tol: float = DEFAULT_EIGEN_TOL) -> EnergyValue:
    """Sum of absolute eigenvalues."""
    return EnergyValue(math.fsum(abs(x) for x in eigenvalues(g, tol)), "eigen-sum")


def adaptive_simpson(
    f: Callable[[float], float], a: float, b: float, tol: float = DEFAULT_QUAD_TOL, max_depth: int = 50
) -> float:
    """Adaptive Simpson quadrature with Richardson correction."""
    if tol <= 0:
        raise ValueError("tolerance must be positive")

    def simpson(fa, fm, fb, h):
        return h * (fa + 4.0 * fm + fb) / 6.0

    def rec(a, b, fa, fm, fb, whole, tol, depth):
        m = 0.5 * (a + b)
        lm, rm = 0.5 * (a + m), 0.5 * (m + b)
        flm, frm = f(lm), f(rm)
        left = simpson(fa, flm, fm, m - a)
        right = simpson(fm, frm, fb, b - m)
        delta = left + right - whole
        if abs(delta) <= 15.0 * tol:
            return left + right + delta / 15.0
        if depth <= 0:
            raise QuadratureError(f"no convergence on [{a:.6g}, {b:.6g}]")
        return rec(a, m, fa, flm, fm, left, tol / 2.0, depth - 1) + rec(
            m, b, fm, frm, fb, right, tol / 2.0, depth - 1
        )

    # fixed initial split so a symmetric integrand cannot fool the first estimate
    pieces = np.linspace(a, b, 9)
    total = 0.0
    for lo, hi in zip(pieces[:-1], pieces[1:]):
        flo, fhi, fmid = f(lo), f(hi), f(0.5 * (lo + hi))
        total += rec(lo, hi, flo, fmid, fhi, simpson(flo, fmid, fhi, hi - lo), tol / 8.0, max_depth)
    return total


def _theta_integral(low: list[int], limit_at_zero: float, tol: float) -> float:
    """``int_{-inf}^{inf} x^-2 log Q(x) dx`` for an even polynomial ``Q``
    with ``Q(0) = 1`` and ``Q >= 1`` on the real line.

    Substituting ``x = tan(t)`` gives ``int log Q(tan t) / sin(t)^2 dt`` over
    ``(-pi/2, pi/2)``.  With ``2d = deg Q`` the logarithmic endpoint growth
    is split off as ``-2d log(cos t)``, whose integral is exactly
    ``2 d pi``.  What remains is ``log(cos(t)^(2d) Q(tan t)) / sin(t)^2``,
    smooth on the closed interval; ``limit_at_zero`` is its value at 0.
    """
    top = max(k for k, c in enumerate(low) if c)
    d = top // 2

    def smooth(t: float) -> float:
        if t == 0.0:
            return limit_at_zero
        s, c = math.sin(t), math.cos(t)
        # cos^(2d) Q(tan t) - 1, keeping the O(t^2) part accurate near 0
        if t < 1.0:
            excess = math.expm1(2 * d * math.log1p(-2.0 * math.sin(0.5 * t) ** 2))
        else:
            excess = c ** (2 * d) - 1.0
        for k in range(1, top + 1):
            if low[k]:
                excess += low[k] * s**k * c ** (2 * d - k)
        return math.log1p(excess) / (s * s)

    half = adaptive_simpson(smooth, 0.0, math.pi / 2.0, tol / 2.0)
    return 2.0 * d * math.pi + 2.0 * half


def energy_coulson(
    g: SignedGraph | IntPolynomial, quad_tol: float = DEFAULT_QUAD_TOL
) -> EnergyValue:
    """Energy from the Coulson integral over the characteristic coefficients.

    ``E = 1/(2 pi) int x^-2 log[(sum_j (-1)^j a_2j x^2j)^2
    + (sum_j (-1)^j a_(2j+1) x^(2j+1))^2] dx`` with every defined
    coefficient included in both sums.
    """
    p = charpoly(g) if isinstance(g, SignedGraph) else g
    n = p.degree
    even = [0] * (n + 1)
    odd = [0] * (n + 1)
    for k in range(n + 1):
        term = (-1) ** (k // 2) * p[k]
        (even if k % 2 == 0 else odd)[k] = term
    square = _square_sum(even, odd)
    top = max((k for k, c in enumerate(square) if c), default=0)
    if top == 0:
        return EnergyValue(0.0, "coulson")
    limit = float(p[1] ** 2 - 2 * p[2] - top // 2)
    integral = _theta_integral(square, limit, 2.0 * math.pi * quad_tol)
    return EnergyValue(integral / (2.0 * math.pi), "coulson")


def _square_sum(even: list[int], odd: list[int]) -> list[int]:
    n = len(even)
    out = [0] * (2 * n - 1)
    for i in range(n):
        for j in range(n):
            out[i + j] += even[i] * even[j] + odd[i] * odd[j]
    return out


def energy_pairing(g: SignedGraph, quad_tol: float = DEFAULT_QUAD_TOL) -> EnergyValue:
    """Energy from ``1/pi int x^-2 log[1 + sum_j b_2j x^2j] dx``."""
    b = b_sequence(g)
    low = [0] * (2 * len(b) - 1)
    for j, bj in enumerate(b):
        low[2 * j] = bj
    top = max((k for k, c in enumerate(low) if c), default=0)
    if top == 0:
        return EnergyValue(0.0, "coulson-pairing")
    limit = float(b[1] - top // 2)
    integral = _theta_integral(low, limit, math.pi * quad_tol)
    return EnergyValue(integral / math.pi, "coulson-pairing")


@dataclass(frozen=True)
class EnergyComparison:
    relation: Relation
    method: str
    """``quasi-order`` or ``numeric``."""
    energies: tuple[float, float] | None = None
    tolerance: float | None = None
    note: str = ""

    def __str__(self) -> str:
        s = f"{self.relation} ({self.method})"
        return s + (f" [{self.note}]" if self.note else "")


def compare_energy(g1: SignedGraph, g2: SignedGraph, tol: float = TIE_TOL) -> EnergyComparison:
    """Order two graphs by energy, exactly when the quasi-order decides it."""
    if g1.order != g2.order:
        raise GraphError(f"order mismatch: {g1.order} vs {g2.order}")
    if has_pairing_property(g1) and has_pairing_property(g2):
        q = quasi_compare(g1, g2)
        if q.strict:
            return EnergyComparison(q.relation, "quasi-order")
    e1, e2 = energy(g1).value, energy(g2).value
    if abs(e1 - e2) <= tol:
        return EnergyComparison(Relation.EQUAL, "numeric", (e1, e2), tol, "numeric-tie")
    rel = Relation.LESS if e1 < e2 else Relation.GREATER
    return EnergyComparison(rel, "numeric", (e1, e2), tol)
