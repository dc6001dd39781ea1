import pytest

import duomap as dm

from conftest import random_instances


def test_extend_fig2_selection(fig2):
    mapping = dm.extend_to_bijection(fig2, [(3, 1), (4, 2), (5, 3)])
    assert mapping.perm == (6, 5, 1, 2, 3, 4, 7)
    realized, preserved = dm.score_mapping(fig2, mapping)
    assert realized == pytest.approx(3.0)
    assert preserved == (3, 4, 5)


def test_extend_identity_pairs():
    inst = dm.validate_instance("abcab", "abcab", dm.WeightSpec.unit())
    pairs = [(p, p) for p in range(1, 5)]
    mapping = dm.extend_to_bijection(inst, pairs)
    assert mapping.perm == (1, 2, 3, 4, 5)


def test_extend_empty_selection_forced_by_characters():
    inst = dm.validate_instance("ab", "ba", dm.WeightSpec.unit())
    mapping = dm.extend_to_bijection(inst, [])
    assert mapping.perm == (2, 1)
    realized, preserved = dm.score_mapping(inst, mapping)
    assert realized == 0.0
    assert preserved == ()


def test_extend_accepts_gedges(fig2):
    report = dm.solve_mwdsm(fig2)
    mapping = dm.extend_to_bijection(fig2, report.selected_pairs)
    assert mapping == report.mapping


def test_identity_mapping_preserves_all_duos():
    inst = dm.validate_instance("aabba", "aabba", dm.WeightSpec.unit())
    mapping = dm.Mapping(perm=(1, 2, 3, 4, 5))
    realized, preserved = dm.score_mapping(inst, mapping)
    assert realized == pytest.approx(inst.n - 1)
    assert preserved == (1, 2, 3, 4)


def test_extend_rejects_conflicting_selection(fig2):
    with pytest.raises(dm.InconsistentSelectionError):
        dm.extend_to_bijection(fig2, [(5, 3), (6, 3)])
    with pytest.raises(dm.InconsistentSelectionError):
        dm.extend_to_bijection(fig2, [(2, 5), (3, 1)])


def test_extend_requires_strict_mode():
    inst = dm.validate_instance("ab", "cd", dm.WeightSpec.unit(), strict=False)
    with pytest.raises(ValueError):
        dm.extend_to_bijection(inst, [])


def test_score_rejects_wrong_dimension(fig2):
    with pytest.raises(ValueError):
        dm.score_mapping(fig2, dm.Mapping(perm=(1, 2)))


def test_extension_round_trip_random():
    for inst in random_instances(40, n_max=10, seed=61):
        report = dm.solve_mwdsm(inst)
        mapping = report.mapping
        n = inst.n
        # a valid permutation that preserves characters
        assert sorted(mapping.perm) == list(range(1, n + 1))
        for p in range(1, n + 1):
            assert inst.s1[p - 1] == inst.s2[mapping.perm[p - 1] - 1]
        realized, preserved = dm.score_mapping(inst, mapping)
        # extension keeps every selected duo and can only add weight
        assert {e.left_pos for e in report.selected_pairs} <= set(preserved)
        assert realized >= report.selected_weight - 1e-9
