import pytest

import duomap as dm
from duomap.duo_graph import GEdge, duo_graph_to_dot

from conftest import random_instances


def brute_force_equal_pairs(s1, s2):
    """Independent enumeration of equal-duo position pairs."""
    return [
        (i, j)
        for i in range(1, len(s1))
        for j in range(1, len(s2))
        if s1[i - 1 : i + 1] == s2[j - 1 : j + 1]
    ]


def test_fig2_edges_match_brute_force(fig2):
    g = dm.build_duo_graph(fig2)
    assert len(g.left) == 6
    assert len(g.right) == 6
    got = [(e.left_pos, e.right_pos) for e in g.edges]
    assert got == brute_force_equal_pairs(fig2.s1, fig2.s2)
    assert got == [(2, 5), (3, 1), (4, 2), (5, 3), (6, 3)]


def test_single_shared_duo():
    inst = dm.validate_instance("ab", "ab", dm.WeightSpec.unit())
    g = dm.build_duo_graph(inst)
    assert [(e.left_pos, e.right_pos) for e in g.edges] == [(1, 1)]


def test_no_shared_duo():
    inst = dm.validate_instance("ab", "ba", dm.WeightSpec.unit())
    assert dm.build_duo_graph(inst).edges == ()


def test_edges_carry_evaluated_weights():
    inst = dm.validate_instance("abab", "abab", dm.WeightSpec.proximity("inverse"))
    g = dm.build_duo_graph(inst)
    for e in g.edges:
        assert e.weight == dm.eval_weight(inst.weight, e.left_pos, e.right_pos, inst.n)
        assert e.weight > 0.0


def test_edges_join_identical_duos_random():
    for inst in random_instances(30, n_max=10, seed=11):
        g = dm.build_duo_graph(inst)
        pairs = [(e.left_pos, e.right_pos) for e in g.edges]
        assert pairs == brute_force_equal_pairs(inst.s1, inst.s2)
        assert pairs == sorted(pairs)
        assert len(set(pairs)) == len(pairs)
        assert len(pairs) <= (inst.n - 1) ** 2


def test_edge_count_bound_attained_by_single_letter():
    inst = dm.validate_instance("aaaaa", "aaaaa", dm.WeightSpec.unit())
    g = dm.build_duo_graph(inst)
    assert len(g.edges) == (inst.n - 1) ** 2


def test_verify_valid_matching(fig2):
    g = dm.build_duo_graph(fig2)
    by_pos = {(e.left_pos, e.right_pos): e for e in g.edges}
    m = [by_pos[(3, 1)], by_pos[(4, 2)], by_pos[(5, 3)]]
    check = dm.verify_constrained_matching(g, m)
    assert check.valid
    assert check.weight == pytest.approx(3.0)
    assert check.violation is None


def test_verify_shared_endpoint(fig2):
    g = dm.build_duo_graph(fig2)
    by_pos = {(e.left_pos, e.right_pos): e for e in g.edges}
    check = dm.verify_constrained_matching(g, [by_pos[(5, 3)], by_pos[(6, 3)]])
    assert not check.valid
    assert check.violation == (by_pos[(5, 3)], by_pos[(6, 3)])


def test_verify_consecutive_one_side_only(fig2):
    g = dm.build_duo_graph(fig2)
    by_pos = {(e.left_pos, e.right_pos): e for e in g.edges}
    check = dm.verify_constrained_matching(g, [by_pos[(2, 5)], by_pos[(3, 1)]])
    assert not check.valid
    assert check.violation == (by_pos[(2, 5)], by_pos[(3, 1)])


def test_verify_rejects_foreign_edges(fig2):
    g = dm.build_duo_graph(fig2)
    with pytest.raises(ValueError):
        dm.verify_constrained_matching(g, [GEdge(1, 1, 1.0)])


def test_matching_weight_equals_mapping_weight_random():
    # a valid selection scores the same through the bipartite graph as
    # through the extended bijection (which may only add preserved duos)
    for inst in random_instances(25, n_max=8, seed=23):
        report = dm.solve_mwdsm(inst)
        g = dm.build_duo_graph(inst)
        check = dm.verify_constrained_matching(g, report.selected_pairs)
        assert check.valid
        assert check.weight == pytest.approx(report.selected_weight)
        realized, preserved = dm.score_mapping(inst, report.mapping)
        assert realized >= check.weight - 1e-9
        assert {e.left_pos for e in report.selected_pairs} <= set(preserved)


def test_dot_export_shape(fig2):
    g = dm.build_duo_graph(fig2)
    dot = duo_graph_to_dot(g)
    assert dot.startswith("graph duo_graph {")
    assert 'a2 -- b5 [label="1.000000"]' in dot
    assert dot.count(" -- ") == len(g.edges)
