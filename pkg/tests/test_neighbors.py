"""Neighbour generation: frozen worked examples plus oracle-backed properties."""

import pytest
from hypothesis import given, settings

from boolhood.core import (FunctionRep, infimum, precedes, supremum,
                           true_set_size)
from boolhood.neighbors import (Direction, NeighborResult, Rule,
                                immediate_children, immediate_parents,
                                rule_delta)
from boolhood.oracle import enumerate_all, hasse_edges

from _oracles import covers, rep


def as_pairs(results):
    return [(r.neighbor.index_sets, r.rule.value) for r in results]


class TestWorkedExamples:
    def test_parents_with_all_three_shapes_absent_or_present(self):
        got = as_pairs(immediate_parents(rep(4, [1, 2, 3], [1, 3, 4], [2, 3, 4])))
        assert got == [
            (((1, 3), (2, 3, 4)), "R2"),
            (((2, 3), (1, 3, 4)), "R2"),
            (((3, 4), (1, 2, 3)), "R2"),
            (((1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)), "R1"),
        ]

    def test_parents_of_two_clause_function(self):
        got = as_pairs(immediate_parents(rep(4, [1, 2, 3], [3, 4])))
        assert got == [
            (((1, 3), (2, 3), (3, 4)), "R3"),
            (((3, 4), (1, 2, 3), (1, 2, 4)), "R1"),
        ]

    def test_children_with_drop_and_extend(self):
        got = as_pairs(immediate_children(rep(4, [1, 2, 3], [1, 2, 4], [3, 4])))
        assert got == [
            (((3, 4), (1, 2, 3)), "R1"),
            (((3, 4), (1, 2, 4)), "R1"),
            (((1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)), "R2"),
        ]

    def test_children_all_merges(self):
        got = as_pairs(immediate_children(rep(4, [1, 3], [2, 3], [3, 4])))
        assert got == [
            (((1, 3), (2, 3, 4)), "R3"),
            (((2, 3), (1, 3, 4)), "R3"),
            (((3, 4), (1, 2, 3)), "R3"),
        ]

    def test_parents_of_infimum_are_splits(self):
        # {1,2,3} -> two facets; a single facet never covers, so every edge
        # out of the bottom is a split with true-set delta +2
        got = as_pairs(immediate_parents(infimum(3)))
        assert got == [
            (((1, 2), (1, 3)), "R3"),
            (((1, 2), (2, 3)), "R3"),
            (((1, 3), (2, 3)), "R3"),
        ]

    def test_single_edge_at_p2(self):
        up = immediate_parents(rep(2, [1, 2]))
        assert as_pairs(up) == [(((1,), (2,)), "R3")]
        assert up[0].true_set_delta == 2
        down = immediate_children(rep(2, [1], [2]))
        assert as_pairs(down) == [(((1, 2),), "R3")]
        assert down[0].true_set_delta == -2

    def test_extremes_have_no_neighbours_outward(self):
        for p in (1, 2, 3, 4, 5):
            assert immediate_parents(supremum(p)) == ()
            assert immediate_children(infimum(p)) == ()
        assert immediate_parents(supremum(1)) == immediate_children(infimum(1))


class TestResultShape:
    def test_delta_table(self):
        f = rep(2, [1, 2])
        assert NeighborResult(f, Rule.R1, Direction.PARENT).true_set_delta == 1
        assert NeighborResult(f, Rule.R2, Direction.PARENT).true_set_delta == 1
        assert NeighborResult(f, Rule.R3, Direction.PARENT).true_set_delta == 2
        assert NeighborResult(f, Rule.R1, Direction.CHILD).true_set_delta == -1
        assert NeighborResult(f, Rule.R2, Direction.CHILD).true_set_delta == -1
        assert rule_delta(NeighborResult(f, Rule.R3, Direction.CHILD)) == -2

    def test_results_are_hashable_and_frozen(self):
        r = immediate_parents(rep(2, [1, 2]))[0]
        assert r in {r}
        with pytest.raises(AttributeError):
            r.rule = Rule.R1

    @given(covers(max_p=6))
    @settings(deadline=None)
    def test_output_is_sorted_and_duplicate_free(self, f):
        for results in (immediate_parents(f), immediate_children(f)):
            keys = [(r.neighbor.sort_key, r.rule.value) for r in results]
            assert keys == sorted(keys)
            assert len({r.neighbor for r in results}) == len(results)


class TestSoundness:
    @given(covers(max_p=6))
    @settings(deadline=None)
    def test_parents_are_valid_and_above(self, f):
        for r in immediate_parents(f):
            # rebuild through the validating constructor
            assert FunctionRep.from_masks(r.neighbor.masks, f.p) == r.neighbor
            assert r.direction is Direction.PARENT
            assert precedes(f, r.neighbor) and not precedes(r.neighbor, f)

    @given(covers(max_p=6))
    @settings(deadline=None)
    def test_children_are_valid_and_below(self, f):
        for r in immediate_children(f):
            assert FunctionRep.from_masks(r.neighbor.masks, f.p) == r.neighbor
            assert r.direction is Direction.CHILD
            assert precedes(r.neighbor, f) and not precedes(f, r.neighbor)

    @given(covers(max_p=6))
    @settings(deadline=None)
    def test_true_set_delta_is_exact(self, f):
        base = true_set_size(f)
        for r in immediate_parents(f):
            assert true_set_size(r.neighbor) - base == r.true_set_delta
        for r in immediate_children(f):
            assert true_set_size(r.neighbor) - base == r.true_set_delta


class TestDuality:
    @pytest.mark.parametrize("p", [1, 2, 3, 4])
    def test_parent_child_mirror_exhaustive(self, p):
        nodes = list(enumerate_all(p))
        child_tags = {}
        for s in nodes:
            for r in immediate_children(s):
                child_tags[(r.neighbor, s)] = r.rule
        parent_tags = {}
        for s in nodes:
            for r in immediate_parents(s):
                parent_tags[(s, r.neighbor)] = r.rule
        assert parent_tags == child_tags

    @given(covers(max_p=6))
    @settings(deadline=None, max_examples=40)
    def test_parent_child_mirror_random(self, f):
        for r in immediate_parents(f):
            back = [c for c in immediate_children(r.neighbor) if c.neighbor == f]
            assert len(back) == 1 and back[0].rule is r.rule
        for r in immediate_children(f):
            back = [c for c in immediate_parents(r.neighbor) if c.neighbor == f]
            assert len(back) == 1 and back[0].rule is r.rule


class TestCompleteness:
    @pytest.mark.parametrize("p", [1, 2, 3, 4])
    def test_generated_edges_equal_brute_cover_relation(self, p):
        generated = set()
        for s in enumerate_all(p):
            for r in immediate_parents(s):
                generated.add((s, r.neighbor))
        assert generated == hasse_edges(p)
