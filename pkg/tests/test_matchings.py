from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import signed_graphs
from oracles import brute_force_matchings
from signed_energy.charpoly import Relation, compare_sequences
from signed_energy.core import GraphError, delete_edge, from_edge_list, negate, switch
from signed_energy.families import cycle, path
from signed_energy.matchings import (
    forest_quasi_compare,
    matching_numbers,
    path_union,
    path_union_chain,
    verify_path_union_chain,
)


def star(leaves):
    return from_edge_list(leaves + 1, [(0, i, 1) for i in range(1, leaves + 1)])


def test_examples():
    assert matching_numbers(path(4)) == (1, 3, 1)
    assert matching_numbers(cycle(6)) == (1, 6, 9, 2)
    assert matching_numbers(path(1)) == (1,)
    assert matching_numbers(path_union(2, 2)) == (1, 2, 1)


@pytest.mark.parametrize("n", range(1, 13))
def test_path_closed_form(n):
    assert matching_numbers(path(n)) == tuple(comb(n - k, k) for k in range(n // 2 + 1))


@given(signed_graphs(max_n=7))
def test_against_brute_force(g):
    assert list(matching_numbers(g)) == brute_force_matchings(g)


@given(signed_graphs(), st.data())
def test_signature_independent(g, data):
    u = data.draw(st.sets(st.integers(0, g.order - 1))) if g.order else set()
    m = matching_numbers(g)
    assert matching_numbers(negate(g)) == m == matching_numbers(switch(g, u))
    assert m[0] == 1 and (len(m) < 2 or m[1] == g.num_edges)


@given(signed_graphs(min_n=2), st.data())
def test_subgraph_monotone(g, data):
    if not g.num_edges:
        return
    u, v, _ = data.draw(st.sampled_from(g.edges))
    h = delete_edge(g, u, v)
    # deleting an edge loses at least the 1-matching it formed
    assert compare_sequences(matching_numbers(h), matching_numbers(g)).relation is Relation.LESS


class TestForestCompare:
    def test_examples(self):
        assert forest_quasi_compare(star(4), path(5)).relation is Relation.LESS
        assert forest_quasi_compare(path(5), path(5)).relation is Relation.EQUAL
        assert forest_quasi_compare(path_union(1, 7), path_union(3, 5)).relation is Relation.LESS

    def test_errors(self):
        with pytest.raises(GraphError):
            forest_quasi_compare(cycle(4), path(4))
        with pytest.raises(GraphError):
            forest_quasi_compare(path(4), path(5))


class TestChain:
    def test_n8_shape(self):
        assert path_union_chain(8) == [(8,), (2, 6), (4, 4), (3, 5), (1, 7)]

    def test_n4(self):
        assert path_union_chain(4) == [(4,), (2, 2), (1, 3)]

    @pytest.mark.parametrize("n", range(4, 14))
    def test_holds(self, n):
        res = verify_path_union_chain(n)
        assert res.holds, res

    def test_literal_chain_repeats_a_union(self):
        # for n = 4k the literal pattern lists P_(2k+1) u P_(2k-1) right after P_(2k-1) u P_(2k+1)
        shapes = path_union_chain(12)
        assert len(shapes) == len(set(shapes))
        assert (5, 7) in shapes

    def test_small_n_rejected(self):
        with pytest.raises(GraphError):
            path_union_chain(3)
