import math
import random

import pytest

from helpers import binary_dp_rows, random_strict_table, star_tree
from treelabel import (
    CostFunction,
    DifferenceOutOfRange,
    LeafLabeling,
    brute_force_min,
    dp_down,
    dp_up,
    eval_total,
    min_total,
    parse_newick,
    random_document,
    solve_dp,
)
from treelabel.dp import cost_table_csv

INF = math.inf
MANHATTAN = CostFunction.manhattan()
SQUARE = CostFunction.power(2)


class TestDpUp:
    def test_cherry_table(self):
        doc = parse_newick("(2,7);")
        ct = dp_up(doc.tree, doc.leaf_labels, MANHATTAN)
        assert (ct.g_min, ct.g_max) == (2, 7)
        assert ct.rows[1] == (0, INF, INF, INF, INF, INF)
        assert ct.rows[2] == (INF, INF, INF, INF, INF, 0)
        # S_root(i) = |i-2| + |i-7| = 5 across the whole range
        assert ct.rows[0] == (5, 5, 5, 5, 5, 5)

    def test_single_node_table(self):
        doc = parse_newick("3;")
        ct = dp_up(doc.tree, doc.leaf_labels, MANHATTAN)
        assert ct.rows == ((0,),)

    def test_star_row_is_sum_of_distances(self):
        t = star_tree(3)
        leaves = LeafLabeling.for_tree(t, {1: 1, 2: 3, 3: 8})
        ct = dp_up(t, leaves, MANHATTAN)
        expected = tuple(abs(i - 1) + abs(i - 3) + abs(i - 8) for i in range(1, 9))
        assert ct.rows[0] == expected
        # minimized at the median leaf label
        cost, labels = min_total(ct, t.root)
        assert (cost, labels) == (7, [3])
        optimum = brute_force_min(t, leaves, MANHATTAN)
        assert (optimum.cost, optimum.root_labels) == (7, [3])

    def test_internal_rows_finite_everywhere(self):
        rng = random.Random(11)
        for _ in range(20):
            doc = random_document(rng.randint(2, 7), 0, 9, rng, arity=rng.randint(2, 4))
            ct = dp_up(doc.tree, doc.leaf_labels, SQUARE)
            for v in range(doc.tree.node_count):
                if not doc.tree.is_leaf(v):
                    assert all(x != INF for x in ct.rows[v])

    def test_custom_table_too_short_rejected_up_front(self):
        doc = parse_newick("(0,9);")  # needs differences up to 9
        with pytest.raises(DifferenceOutOfRange):
            dp_up(doc.tree, doc.leaf_labels, CostFunction.from_table([0, 1, 2]))

    def test_matches_two_term_binary_recurrence(self):
        # the general child-sum recurrence must equal the explicit
        # two-term binary form on binary trees
        rng = random.Random(12)
        for _ in range(25):
            doc = random_document(rng.randint(2, 8), 0, 8, rng, arity="binary")
            for cost in (MANHATTAN, SQUARE, random_strict_table(rng, 9)):
                ct = dp_up(doc.tree, doc.leaf_labels, cost)
                reference = binary_dp_rows(doc.tree, doc.leaf_labels, cost)
                for v in range(doc.tree.node_count):
                    assert ct.rows[v] == reference[v]


class TestMinTotal:
    def test_cherry_full_interval_of_optima(self):
        doc = parse_newick("(2,7);")
        ct = dp_up(doc.tree, doc.leaf_labels, MANHATTAN)
        assert min_total(ct, doc.tree.root) == (5, [2, 3, 4, 5, 6, 7])

    def test_single_leaf(self):
        doc = parse_newick("3;")
        ct = dp_up(doc.tree, doc.leaf_labels, MANHATTAN)
        assert min_total(ct, doc.tree.root) == (0, [3])

    def test_root_row_minimum_is_global_optimum(self):
        rng = random.Random(13)
        for _ in range(20):
            doc = random_document(rng.randint(2, 6), 0, 6, rng, arity=rng.randint(2, 3))
            ct = dp_up(doc.tree, doc.leaf_labels, MANHATTAN)
            cost, _ = min_total(ct, doc.tree.root)
            assert cost == brute_force_min(doc.tree, doc.leaf_labels, MANHATTAN).cost
            # every node's best-case subtree cost never exceeds the optimum
            for v in range(doc.tree.node_count):
                assert min(ct.rows[v]) <= cost


class TestDpDown:
    def test_cherry_smallest_tie(self):
        doc = parse_newick("(2,7);")
        ct = dp_up(doc.tree, doc.leaf_labels, MANHATTAN)
        labeling = dp_down(doc.tree, ct, MANHATTAN)
        assert labeling.values[0] == 2
        assert labeling.total_cost == 5

    def test_cherry_highest_tie(self):
        doc = parse_newick("(2,7);")
        ct = dp_up(doc.tree, doc.leaf_labels, MANHATTAN)
        assert dp_down(doc.tree, ct, MANHATTAN, tie="highest").values[0] == 7

    def test_five_node_reconstruction(self):
        doc = parse_newick("((1,5),9);")
        ct = dp_up(doc.tree, doc.leaf_labels, MANHATTAN)
        labeling = dp_down(doc.tree, ct, MANHATTAN)
        assert labeling.total_cost == 8
        assert labeling.values[0] == 5  # root
        assert labeling.values[1] == 5  # inner

    def test_equal_leaves_zero_cost(self):
        doc = parse_newick("(4,4);")
        ct = dp_up(doc.tree, doc.leaf_labels, SQUARE)
        labeling = dp_down(doc.tree, ct, SQUARE)
        assert labeling.total_cost == 0
        assert set(labeling.values.values()) == {4}

    def test_leaves_keep_observed_labels(self):
        rng = random.Random(14)
        for _ in range(20):
            doc = random_document(rng.randint(2, 8), 0, 9, rng, arity=rng.randint(2, 4))
            labeling = solve_dp(doc.tree, doc.leaf_labels, SQUARE)
            for leaf, p in doc.leaf_labels.labels.items():
                assert labeling.values[leaf] == p

    def test_bad_tie_rejected(self):
        doc = parse_newick("(2,7);")
        ct = dp_up(doc.tree, doc.leaf_labels, MANHATTAN)
        with pytest.raises(ValueError):
            dp_down(doc.tree, ct, MANHATTAN, tie="midpoint")


class TestSolveDp:
    @pytest.mark.parametrize(
        "newick,cost,expected",
        [
            ("((1,5),9);", MANHATTAN, 8),
            ("((1,5),9);", SQUARE, 23),
            ("(4,4);", SQUARE, 0),
            ("(4,4);", MANHATTAN, 0),
        ],
    )
    def test_worked_costs(self, newick, cost, expected):
        doc = parse_newick(newick)
        labeling = solve_dp(doc.tree, doc.leaf_labels, cost)
        assert labeling.total_cost == expected
        # cross-check against exhaustive enumeration
        assert brute_force_min(doc.tree, doc.leaf_labels, cost).cost == expected

    def test_oracle_equivalence_random(self):
        rng = random.Random(15)
        for _ in range(60):
            n = rng.randint(2, 6)
            lo = rng.randint(-4, 4)
            doc = random_document(n, lo, lo + rng.randint(0, 6), rng,
                                  arity="binary" if rng.random() < 0.6 else 3)
            for cost in (MANHATTAN, SQUARE, random_strict_table(rng, doc.leaf_labels.m)):
                labeling = solve_dp(doc.tree, doc.leaf_labels, cost)
                assert labeling.total_cost == brute_force_min(
                    doc.tree, doc.leaf_labels, cost
                ).cost

    def test_labels_stay_in_leaf_range(self):
        rng = random.Random(16)
        for _ in range(40):
            doc = random_document(rng.randint(2, 8), -3, 9, rng, arity=rng.randint(2, 4))
            labeling = solve_dp(doc.tree, doc.leaf_labels, SQUARE)
            lo, hi = doc.leaf_labels.g_min, doc.leaf_labels.g_max
            assert all(lo <= x <= hi for x in labeling.values.values())

    def test_cached_cost_matches_recomputation(self):
        rng = random.Random(17)
        for _ in range(30):
            doc = random_document(rng.randint(2, 8), 0, 12, rng, arity=rng.randint(2, 4))
            for tie in ("lowest", "highest"):
                labeling = solve_dp(doc.tree, doc.leaf_labels, MANHATTAN, tie=tie)
                assert labeling.total_cost == eval_total(doc.tree, MANHATTAN, labeling)

    def test_translation_equivariance(self):
        rng = random.Random(18)
        for _ in range(25):
            doc = random_document(rng.randint(2, 7), 0, 9, rng, arity=rng.randint(2, 4))
            shift = rng.choice([-5, 17])
            shifted_labels = {v: x + shift for v, x in doc.leaf_labels.labels.items()}
            shifted = LeafLabeling.for_tree(doc.tree, shifted_labels)
            for cost in (MANHATTAN, SQUARE):
                base = solve_dp(doc.tree, doc.leaf_labels, cost)
                moved = solve_dp(doc.tree, shifted, cost)
                assert moved.total_cost == base.total_cost
                assert all(
                    moved.values[v] == base.values[v] + shift
                    for v in range(doc.tree.node_count)
                )

    def test_manhattan_lower_bound(self):
        rng = random.Random(19)
        for _ in range(30):
            doc = random_document(rng.randint(2, 9), 0, 15, rng, arity=rng.randint(2, 4))
            labeling = solve_dp(doc.tree, doc.leaf_labels, MANHATTAN)
            assert labeling.total_cost >= doc.leaf_labels.g_max - doc.leaf_labels.g_min

    def test_huge_exact_arithmetic(self):
        doc = parse_newick("(0,(0,64));")
        cost = CostFunction.power(11)
        labeling = solve_dp(doc.tree, doc.leaf_labels, cost)
        assert labeling.total_cost == brute_force_min(doc.tree, doc.leaf_labels, cost).cost
        assert labeling.total_cost > 2 ** 53  # beyond float precision

    def test_power_one_equals_manhattan(self):
        rng = random.Random(21)
        power_one = CostFunction.power(1)
        for _ in range(25):
            doc = random_document(rng.randint(2, 7), 0, 10, rng, arity=rng.randint(2, 4))
            a = solve_dp(doc.tree, doc.leaf_labels, MANHATTAN)
            b = solve_dp(doc.tree, doc.leaf_labels, power_one)
            assert a.total_cost == b.total_cost
            assert a.values == b.values

    def test_single_node_tree(self):
        doc = parse_newick("3;")
        labeling = solve_dp(doc.tree, doc.leaf_labels, SQUARE)
        assert labeling.values == {0: 3}
        assert labeling.total_cost == 0

    def test_single_child_chain(self):
        # the child-sum recurrence handles unary internal nodes naturally
        doc = parse_newick("((1),9);")
        labeling = solve_dp(doc.tree, doc.leaf_labels, MANHATTAN)
        assert labeling.total_cost == 8
        assert labeling.total_cost == brute_force_min(
            doc.tree, doc.leaf_labels, MANHATTAN
        ).cost
        chain = parse_newick("((5));")
        assert solve_dp(chain.tree, chain.leaf_labels, SQUARE).values == {
            0: 5, 1: 5, 2: 5,
        }


def test_cost_table_csv_shape():
    doc = parse_newick("(2,7);")
    csv = cost_table_csv(dp_up(doc.tree, doc.leaf_labels, MANHATTAN))
    lines = csv.strip().split("\n")
    assert lines[0] == "node,2,3,4,5,6,7"
    assert lines[1] == "0,5,5,5,5,5,5"
    assert lines[2] == "1,0,inf,inf,inf,inf,inf"
    assert len(lines) == 4
