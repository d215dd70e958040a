import random

import pytest

from treelabel import (
    CycleDetected,
    InternalNodeWithoutChildren,
    LeafWithChildren,
    MultipleRoots,
    NoRoot,
    UnreachableNode,
    build_tree,
    is_binary,
    postorder,
    preorder,
    random_topology,
)

N = None  # absent parent marker, for readability


def single_node():
    return build_tree([N], [True])


def cherry():
    return build_tree([N, 0, 0], [False, True, True])


def five_node():
    # root 0, internal 1 with leaves 3 and 4, leaf 2
    return build_tree([N, 0, 0, 1, 1], [False, False, True, True, True])


class TestBuildTree:
    def test_single_node(self):
        t = single_node()
        assert t.node_count == 1
        assert t.leaf_count == 1
        assert t.root == 0
        assert t.is_leaf(0)

    def test_cherry(self):
        t = cherry()
        assert t.root == 0
        assert t.children[0] == (1, 2)
        assert t.leaves() == (1, 2)

    def test_five_node(self):
        t = five_node()
        assert t.children[0] == (1, 2)
        assert t.children[1] == (3, 4)
        assert t.parents[3] == 1

    def test_children_sorted_ascending(self):
        t = build_tree([2, 2, N], [True, True, False])
        assert t.children[2] == (0, 1)

    def test_self_loop_is_cycle(self):
        with pytest.raises(CycleDetected):
            build_tree([0, N], [True, False])

    def test_two_cycle_off_root(self):
        with pytest.raises(CycleDetected):
            build_tree([N, 2, 1], [True, False, False])

    def test_no_root(self):
        with pytest.raises(NoRoot):
            build_tree([1, 0], [True, True])

    def test_empty_input(self):
        with pytest.raises(NoRoot):
            build_tree([], [])

    def test_multiple_roots(self):
        with pytest.raises(MultipleRoots):
            build_tree([N, N, 0], [False, True, True])

    def test_parent_out_of_range(self):
        with pytest.raises(UnreachableNode):
            build_tree([N, 5], [False, True])

    def test_leaf_with_children(self):
        with pytest.raises(LeafWithChildren):
            build_tree([N, 0, 1], [False, True, True])

    def test_internal_without_children(self):
        with pytest.raises(InternalNodeWithoutChildren):
            build_tree([N, 0], [False, False])

    def test_single_child_chain_is_legal(self):
        t = build_tree([N, 0, 1], [False, False, True])
        assert not is_binary(t)
        assert postorder(t) == [2, 1, 0]

    def test_mismatched_lengths(self):
        with pytest.raises(ValueError):
            build_tree([N, 0], [False])


class TestTraversals:
    @pytest.mark.parametrize(
        "make,expected",
        [
            (single_node, [0]),
            (cherry, [1, 2, 0]),
            (five_node, [3, 4, 1, 2, 0]),
        ],
    )
    def test_postorder(self, make, expected):
        assert postorder(make()) == expected

    @pytest.mark.parametrize(
        "make,expected",
        [
            (single_node, [0]),
            (cherry, [0, 1, 2]),
            (five_node, [0, 1, 3, 4, 2]),
        ],
    )
    def test_preorder(self, make, expected):
        assert preorder(make()) == expected

    def test_permutation_and_ordering_properties(self):
        rng = random.Random(20240811)
        for _ in range(60):
            n = rng.randint(1, 40)
            arity = "binary" if rng.random() < 0.5 else rng.randint(2, 5)
            t = random_topology(n, rng, arity=arity)
            post = postorder(t)
            pre = preorder(t)
            assert sorted(post) == list(range(t.node_count))
            assert sorted(pre) == list(range(t.node_count))
            post_pos = {v: i for i, v in enumerate(post)}
            pre_pos = {v: i for i, v in enumerate(pre)}
            for v in range(t.node_count):
                p = t.parents[v]
                if p is not None:
                    assert post_pos[p] > post_pos[v]
                    assert pre_pos[p] < pre_pos[v]

    def test_deep_tree_no_recursion_limit(self):
        # caterpillar far deeper than Python's default recursion limit:
        # internal 2k has leaf 2k+1 and internal 2k+2; the last node is a leaf
        depth = 5000
        total = 2 * depth + 1
        parent_of = [N] * total
        flags = [False] * total
        for level in range(depth):
            internal = 2 * level
            parent_of[internal + 1] = internal
            parent_of[internal + 2] = internal
            flags[internal + 1] = True
        flags[2 * depth] = True
        t = build_tree(parent_of, flags)
        assert is_binary(t)
        assert len(postorder(t)) == total
        assert len(preorder(t)) == total


class TestIsBinary:
    def test_cherry_true(self):
        assert is_binary(cherry())

    def test_three_leaf_star_false(self):
        t = build_tree([N, 0, 0, 0], [False, True, True, True])
        assert not is_binary(t)

    def test_single_node_vacuously_true(self):
        assert is_binary(single_node())
