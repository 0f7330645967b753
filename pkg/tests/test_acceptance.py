"""One test per acceptance criterion; each appends a PASS/FAIL line that
is printed in the terminal summary."""
import random
import time
from math import comb, factorial

import pytest

from conftest import ACCEPTANCE_LINES, random_signed_graph
from oracles import (
    augmented_unicyclic_classes,
    automorphism_count,
    connected_graphs,
    labeled_unicyclic_classes,
    labeled_unicyclic_count,
    numpy_energy,
    polya_unicyclic_count,
)
from signed_energy.charpoly import (
    IntPolynomial,
    Relation,
    b_sequence,
    charpoly,
    engines_agree,
    has_pairing_property,
    quasi_compare,
)
from signed_energy.core import adjacency_matrix, from_edge_list, is_balanced, switch
from signed_energy.dominance import (
    balanced_girth6_vs_lollipop,
    girth4_unbalanced_vs_lollipop,
    long_girth_vs_lollipop,
    negative_cycle_vs_lollipop,
    trees_vs_lollipop,
)
from signed_energy.enumeration import (
    all_signed_classes,
    cycle_vs_lollipop,
    enumerate_trees,
    enumerate_unicyclic,
    verify_girth_parity,
    verify_max_energy,
)
from signed_energy.families import cycle, lollipop, path
from signed_energy.graphfile import format_graph, parse_graph
from signed_energy.matchings import matching_numbers, verify_path_union_chain
from signed_energy.spectral import eigenvalues, energy, energy_coulson, energy_pairing

SEED = 20261016


def record(number: int, ok: bool, detail: str) -> None:
    ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {detail}")


def poly(*c):
    return IntPolynomial(tuple(c))


def test_fixture_polynomials():
    start = time.perf_counter()
    fixtures = {
        "P_6^6": (cycle(6), poly(1, 0, -6, 0, 9, 0, -4)),
        "P_7^6": (lollipop(7, 6), poly(1, 0, -7, 0, 13, 0, -7, 0)),
        "lollipop(6,4,-)": (lollipop(6, 4, False), poly(1, 0, -6, 0, 10, 0, -4)),
        "lollipop(7,4,-)": (lollipop(7, 4, False), poly(1, 0, -7, 0, 15, 0, -10, 0)),
    }
    bad = []
    for name, (g, expected) in fixtures.items():
        results = engines_agree(g)
        if set(results.values()) != {expected}:
            bad.append(name)
    printed = poly(1, 0, 7, 0, -15, 0, -10, 0)
    elapsed = time.perf_counter() - start
    ok = not bad and printed != fixtures["lollipop(7,4,-)"][1] and elapsed < 1.0
    record(
        1,
        ok,
        f"4 fixtures x 3 engines exact; lollipop(7,4,-) = x^7 - 7x^5 + 15x^3 - 10x "
        f"(printed x^7 + 7x^5 - 15x^3 - 10x has a_2 = +7 != -m, discrepancy logged) [{elapsed:.2f}s]",
    )
    assert not bad and ok


def test_engine_agreement():
    start = time.perf_counter()
    rng = random.Random(SEED)
    corpus = []
    for n in range(1, 9):
        for edges in connected_graphs(n):
            if n < 8:
                corpus.append(from_edge_list(n, [(u, v, 1) for u, v in edges]))
            corpus.append(from_edge_list(n, [(u, v, rng.choice([1, -1])) for u, v in edges]))
    corpus += [random_signed_graph(rng, 8, rng.uniform(0.3, 0.9), connected=True) for _ in range(50)]
    for n in range(3, 11):
        corpus += [c.graph for c in all_signed_classes(n)]
    mismatched = [g for g in corpus if len(set(engines_agree(g).values())) != 1]
    elapsed = time.perf_counter() - start
    ok = not mismatched and elapsed < 300
    record(
        2,
        ok,
        f"{len(corpus)} graphs (all connected n<=8: n<=7 all-positive and randomly signed, n=8 randomly signed; 50 random n=8, all signed unicyclic classes n<=10), "
        f"{len(mismatched)} mismatches [{elapsed:.1f}s]",
    )
    assert ok


def test_extremal_theorem():
    start = time.perf_counter()
    reports = [verify_max_energy(n) for n in range(4, 12)]
    pairs = {n: cycle_vs_lollipop(n) for n in (13, 15)}
    elapsed = time.perf_counter() - start
    failing = [r.n for r in reports if not r.matches_theorem]
    two_graph = all(c < lp - 1e-9 for c, lp in pairs.values())
    ok = not failing and two_graph and elapsed < 600
    ties = "; ".join(f"n={r.n}: {r.notes[0]}" for r in reports if r.notes)
    record(
        3,
        ok,
        "argmax C_n^+ for n=5,7 and lollipop(n,4,-) otherwise, n=4..11; "
        + ", ".join(f"E(C_{n}^+)={c:.6f} < {lp:.6f}" for n, (c, lp) in pairs.items())
        + f" [{elapsed:.1f}s]"
        + (f"; ties: {ties}" if ties else ""),
    )
    assert ok, failing


def test_girth_parity_sweep():
    start = time.perf_counter()
    reports = [verify_girth_parity(n) for n in range(4, 11)]
    elapsed = time.perf_counter() - start
    checks = sum(len(r.checks) for r in reports)
    failures = [(r.n, f.code) for r in reports for f in r.failures]
    ok = not failures and elapsed < 300
    record(4, ok, f"{checks} unicyclic graphs n=4..10, {len(failures)} violations [{elapsed:.1f}s]")
    assert ok, failures


def test_coulson_cross_check():
    start = time.perf_counter()
    worst = worst_pairing = 0.0
    count = 0
    for n in range(3, 10):
        for cls in all_signed_classes(n):
            e = energy(cls.graph).value
            worst = max(worst, abs(energy_coulson(cls.graph).value - e))
            if has_pairing_property(cls.graph):
                worst_pairing = max(worst_pairing, abs(energy_pairing(cls.graph).value - e))
            count += 1
    elapsed = time.perf_counter() - start
    ok = worst <= 1e-6 and worst_pairing <= 1e-6 and elapsed < 300
    record(
        5,
        ok,
        f"{count} classes n<=9, max |coulson - eigen| = {worst:.2e}, "
        f"max |pairing - eigen| = {worst_pairing:.2e} [{elapsed:.1f}s]",
    )
    assert ok


def test_matchings():
    closed = all(
        matching_numbers(path(n)) == tuple(comb(n - k, k) for k in range(n // 2 + 1)) for n in range(1, 13)
    )
    chains = {n: verify_path_union_chain(n).holds for n in range(4, 14)}
    forests = all(b_sequence(t) == matching_numbers(t) for n in range(1, 11) for t in enumerate_trees(n))
    ok = closed and all(chains.values()) and forests
    record(
        6,
        ok,
        f"m(P_n,k)=C(n-k,k) n<=12: {closed}; path-union chain n=4..13: {all(chains.values())} "
        f"(consecutive repeated unions collapsed); tree b-sequence = matching vector n<=10: {forests}",
    )
    assert ok


def test_quasi_order_suite():
    groups = {
        "trees n=12..14": [c.result.relation for n in range(12, 15) for c in trees_vs_lollipop(n, cap=14)],
        "P_n n=12..14": [quasi_compare(path(n), lollipop(n, 4, False)).relation for n in range(12, 15)],
        "unbalanced girth-4 members n=6..9": [
            c.result.relation for n in range(6, 10) for c in girth4_unbalanced_vs_lollipop(n)
        ],
        "C_n^- n=8,12": [negative_cycle_vs_lollipop(n).result.relation for n in (8, 12)],
        "lollipop(n,8,-) n=9..14": [long_girth_vs_lollipop(n, 8).result.relation for n in range(9, 15)],
        "lollipop(n,6,+) n=6..12": [balanced_girth6_vs_lollipop(n).result.relation for n in range(6, 13)],
    }
    bad = [k for k, v in groups.items() if any(r is not Relation.LESS for r in v)]
    n4 = negative_cycle_vs_lollipop(4).result.relation
    detail = "; ".join(f"{k}: {v.count(Relation.LESS)}/{len(v)} Less" for k, v in groups.items())
    record(
        7,
        not bad and n4 is Relation.LESS,
        f"against lollipop(n,4,-): {detail}; C_4^- at n=4: {n4} "
        "(the two graphs coincide, so strict Less is unattainable; strict xfail below)",
    )
    assert not bad, bad


@pytest.mark.xfail(strict=True, reason="C_4^- is the girth-4 lollipop on 4 vertices, so the pair is Equal")
def test_negative_c4_strictly_below_lollipop():
    assert negative_cycle_vs_lollipop(4).result.relation is Relation.LESS


def test_census():
    start = time.perf_counter()
    expected = (1, 2, 5, 13, 33, 89, 240, 657)
    ours = tuple(len(enumerate_unicyclic(n)) for n in range(3, 11))
    labelled = {n: labeled_unicyclic_classes(n) for n in range(3, 8)}
    direct = all(labelled[n] == (labeled_unicyclic_count(n), ours[n - 3]) for n in labelled)
    orbits = all(
        sum(factorial(n) // automorphism_count(g) for g in enumerate_unicyclic(n)) == labeled_unicyclic_count(n)
        for n in range(3, 11)
    )
    augmented = tuple(augmented_unicyclic_classes(n) for n in range(3, 11))
    polya = tuple(polya_unicyclic_count(n) for n in range(3, 11))
    elapsed = time.perf_counter() - start
    ok = ours == expected == augmented == polya and direct and orbits
    record(
        8,
        ok,
        f"counts {ours}; labelled brute-force dedupe n=3..7 {direct}; "
        f"orbit sum n!/|Aut| = labelled count n=3..10 {orbits}; networkx tree+edge route and "
        f"Polya necklace count agree [{elapsed:.1f}s]",
    )
    assert ok


def test_property_harness():
    rng = random.Random(SEED)
    failures = []
    for trial in range(300):
        n = rng.randint(1, 10)
        g = random_signed_graph(rng, n, rng.uniform(0.1, 0.8))
        u = {v for v in range(n) if rng.random() < 0.5}
        h = switch(g, u)
        if charpoly(h) != charpoly(g) or abs(energy(h).value - energy(g).value) > 1e-9:
            failures.append((trial, "switching"))
        if is_balanced(g) and charpoly(g) != charpoly(g.underlying()):
            failures.append((trial, "balanced not cospectral"))
        spec = eigenvalues(g)
        if abs(sum(spec)) > n * 1e-9 or abs(energy(g).value - numpy_energy(g)) > 1e-9:
            failures.append((trial, "spectrum"))
        if parse_graph(format_graph(g)) != g:
            failures.append((trial, "round-trip"))
        if int(adjacency_matrix(g).trace()) != 0:
            failures.append((trial, "trace"))
    # balance <=> cospectral with the underlying graph, on every unicyclic class
    for n in range(3, 10):
        for cls in all_signed_classes(n):
            if is_balanced(cls.graph) != (charpoly(cls.graph) == charpoly(cls.graph.underlying())):
                failures.append((n, cls.label))
    record(
        9,
        not failures,
        f"300 random graphs (seed {SEED}): switching invariance, balance => cospectral, trace ~ 0, "
        f"round-trip; balance <=> cospectral on all unicyclic classes n<=9; {len(failures)} failures",
    )
    assert not failures
