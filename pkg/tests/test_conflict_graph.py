from itertools import combinations

import pytest

import duomap as dm
from duomap.conflict_graph import conflict_graph_to_dot

from conftest import random_instances


@pytest.mark.parametrize(
    "e1,e2,expected",
    [
        ((3, 1), (4, 2), False),  # consecutive on both sides
        ((5, 3), (6, 3), True),  # shared right endpoint
        ((2, 5), (3, 1), True),  # left consecutive, right not
        ((3, 1), (3, 4), True),  # shared left endpoint
        ((1, 1), (2, 2), False),
        ((1, 2), (2, 2), True),
        ((4, 4), (2, 2), False),  # far apart on both sides
        ((5, 5), (4, 4), False),  # consecutive on both sides, descending
        ((5, 5), (4, 6), True),
    ],
)
def test_conflicts_pairs(e1, e2, expected):
    assert dm.conflicts(e1, e2) is expected
    assert dm.conflicts(e2, e1) is expected  # symmetric


def test_fig2_conflict_pairs(fig2):
    gc = dm.build_conflict_graph(dm.build_duo_graph(fig2))
    assert len(gc) == 5
    pairs = {(u, v) for u in range(len(gc)) for v in gc.neighbors[u] if u < v}
    assert pairs == {(0, 1), (2, 4), (3, 4)}


def test_single_edge_graph():
    inst = dm.validate_instance("ab", "ab", dm.WeightSpec.unit())
    gc = dm.build_conflict_graph(dm.build_duo_graph(inst))
    assert len(gc) == 1
    assert gc.neighbors[0] == ()


def test_aaa_adjacency(aaa):
    gc = dm.build_conflict_graph(dm.build_duo_graph(aaa))
    # edge order: (1,1), (1,2), (2,1), (2,2); all pairs conflict except 0-3
    assert len(gc) == 4
    non_adjacent = {
        (u, v)
        for u, v in combinations(range(4), 2)
        if not gc.adjacent(u, v)
    }
    assert non_adjacent == {(0, 3)}


def test_empty_graph():
    inst = dm.validate_instance("ab", "ba", dm.WeightSpec.unit())
    gc = dm.build_conflict_graph(dm.build_duo_graph(inst))
    assert len(gc) == 0


def test_vertex_weights_follow_edges(fig2):
    gc = dm.build_conflict_graph(dm.build_duo_graph(fig2))
    for v in gc.vertices:
        assert v.weight == v.edge.weight


def test_clique_family_fig2(fig2):
    gc = dm.build_conflict_graph(dm.build_duo_graph(fig2))
    fam = dm.clique_family(gc, 3)  # edge (5, 3)
    assert fam.left_at == (3,)
    assert fam.left_above == (4,)
    assert fam.left_below == ()
    assert fam.right_at == (3, 4)
    assert fam.right_above == ()
    assert fam.right_below == ()


def test_clique_family_isolated_vertex():
    inst = dm.validate_instance("ab", "ab", dm.WeightSpec.unit())
    gc = dm.build_conflict_graph(dm.build_duo_graph(inst))
    fam = dm.clique_family(gc, 0)
    assert fam.left_at == (0,)
    assert fam.right_at == (0,)
    assert fam.left_above == fam.left_below == ()
    assert fam.right_above == fam.right_below == ()


def test_clique_family_aaa(aaa):
    gc = dm.build_conflict_graph(dm.build_duo_graph(aaa))
    fam = dm.clique_family(gc, 0)  # edge (1, 1)
    assert fam.left_at == (0, 1)
    assert fam.left_above == (2,)  # (2,2) is compatible, only (2,1) conflicts
    assert fam.right_at == (0, 2)
    assert fam.right_above == (1,)
    assert fam.left_below == fam.right_below == ()


def test_closed_neighborhood_examples(fig2, aaa):
    gi = dm.build_conflict_graph(dm.build_duo_graph(fig2))
    assert dm.closed_neighborhood(gi, 2) == {2, 4}
    ga = dm.build_conflict_graph(dm.build_duo_graph(aaa))
    assert dm.closed_neighborhood(ga, 1) == {0, 1, 2, 3}
    single = dm.build_conflict_graph(
        dm.build_duo_graph(dm.validate_instance("ab", "ab", dm.WeightSpec.unit()))
    )
    assert dm.closed_neighborhood(single, 0) == {0}


def test_adjacency_matches_predicate_random():
    for inst in random_instances(20, n_max=8, seed=5):
        gc = dm.build_conflict_graph(dm.build_duo_graph(inst))
        edges = [v.edge for v in gc.vertices]
        for u, v in combinations(range(len(gc)), 2):
            assert gc.adjacent(u, v) == dm.conflicts(edges[u], edges[v])
            assert gc.adjacent(u, v) == gc.adjacent(v, u)  # symmetry
        for u in range(len(gc)):
            assert not gc.adjacent(u, u)  # irreflexive


def test_observation_soundness_random():
    # conflicting edges are always anchored within one position on some side
    for inst in random_instances(20, n_max=8, seed=17):
        gc = dm.build_conflict_graph(dm.build_duo_graph(inst))
        for u in range(len(gc)):
            i, j = gc.vertices[u].edge.left_pos, gc.vertices[u].edge.right_pos
            for v in gc.neighbors[u]:
                k, l = gc.vertices[v].edge.left_pos, gc.vertices[v].edge.right_pos
                assert k in (i - 1, i, i + 1) or l in (j - 1, j, j + 1)


def test_clique_family_properties_random():
    for inst in random_instances(15, n_max=7, seed=29):
        gc = dm.build_conflict_graph(dm.build_duo_graph(inst))
        for u in range(len(gc)):
            fam = dm.clique_family(gc, u)
            nbhd = dm.closed_neighborhood(gc, u)
            # u sits in exactly the two at-anchor sets
            assert u in fam.left_at and u in fam.right_at
            for s in (fam.left_below, fam.left_above, fam.right_below, fam.right_above):
                assert u not in s
            # every set is a clique; members lie in N[u]; the union covers N[u]
            for s in fam.all_sets():
                assert set(s) <= nbhd
                for a, b in combinations(s, 2):
                    assert gc.adjacent(a, b)
            assert fam.members() == nbhd


def brute_force_matchings(edges):
    """All valid constrained matchings as index sets, by pairwise check."""
    out = []
    for r in range(len(edges) + 1):
        for sub in combinations(range(len(edges)), r):
            if all(
                not dm.conflicts(edges[a], edges[b]) for a, b in combinations(sub, 2)
            ):
                out.append(frozenset(sub))
    return out


def test_independent_sets_are_exactly_matchings_random():
    # both reduction directions, with equal weight
    for inst in random_instances(10, n_max=6, seed=41):
        g = dm.build_duo_graph(inst)
        gc = dm.build_conflict_graph(g)
        if len(gc) > 12:
            continue
        edges = [v.edge for v in gc.vertices]
        matchings = set(brute_force_matchings(edges))
        independents = set()
        for r in range(len(gc) + 1):
            for sub in combinations(range(len(gc)), r):
                if all(not gc.adjacent(a, b) for a, b in combinations(sub, 2)):
                    independents.add(frozenset(sub))
        assert independents == matchings
        for s in independents:
            check = dm.verify_constrained_matching(g, [edges[k] for k in s])
            assert check.valid
            assert check.weight == pytest.approx(
                sum(gc.vertices[k].weight for k in s)
            )


def test_dot_export_shape(fig2):
    gc = dm.build_conflict_graph(dm.build_duo_graph(fig2))
    dot = conflict_graph_to_dot(gc)
    assert dot.startswith("graph conflict_graph {")
    assert '"(2,5) w=1"' in dot
    assert dot.count(" -- ") == 3
