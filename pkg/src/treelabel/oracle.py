"""Exhaustive brute-force minimizer: the ground truth for everything else.

Enumerates every assignment of internal-node labels over the box
[g_min, g_max] ^ (#internal nodes), evaluates each one from scratch and
keeps the minimum. Restricting to the box is safe because every optimal
label lies in [g_min, g_max]. No pruning, no incremental tricks: this
code must stay obviously correct, it is what the real solvers are judged
against.

The search is refused up front (BudgetExceeded) when the assignment count
m ** k would exceed the evaluation budget: 10_000_000 by default,
overridable via the TREELABEL_BUDGET environment variable or the
``budget`` argument. A count budget, not a wall-clock one, keeps runs
reproducible.

Enumeration order is deterministic: lexicographic over the internal nodes
in postorder, labels ascending, so "the first optimal labeling" is a
stable notion across runs.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import product

from .costs import CostFunction, Labeling, LeafLabeling, theta
from .errors import BudgetExceeded
from .tree import Tree, postorder

DEFAULT_BUDGET = 10_000_000
DEFAULT_LABELING_CAP = 1000


def resolve_budget(budget: int | None = None) -> int:
    """Explicit argument, else TREELABEL_BUDGET from the environment, else default."""
    if budget is not None:
        return budget
    env = os.environ.get("TREELABEL_BUDGET")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise ValueError(f"TREELABEL_BUDGET must be an integer, got {env!r}")
    return DEFAULT_BUDGET


@dataclass
class OptimumSet:
    """Everything the exhaustive scan learned about the optimum.

    labelings holds optimal labelings in enumeration order, truncated at
    the cap (truncated says whether anything was dropped); root_labels is
    always complete.
    """

    cost: int
    labelings: list[Labeling]
    root_labels: list[int]
    truncated: bool


def _scan_setup(t: Tree, l: LeafLabeling, budget: int | None):
    internal = [v for v in postorder(t) if not t.is_leaf(v)]
    allowed = resolve_budget(budget)
    count = l.m ** len(internal)
    if count > allowed:
        raise BudgetExceeded(
            f"{l.m}^{len(internal)} = {count} assignments exceed budget {allowed}"
        )
    edges = list(t.edges())
    return internal, edges


def brute_force_min(
    t: Tree,
    l: LeafLabeling,
    c: CostFunction,
    budget: int | None = None,
    max_labelings: int = DEFAULT_LABELING_CAP,
) -> OptimumSet:
    """Exact global optimum over the search box, by full enumeration."""
    internal, edges = _scan_setup(t, l, budget)
    th = [theta(c, d) for d in range(l.m)]

    best = None
    best_labelings: list[dict[int, int]] = []
    root_labels: set[int] = set()
    truncated = False
    root = t.root

    values = dict(l.labels)
    for assignment in product(range(l.g_min, l.g_max + 1), repeat=len(internal)):
        for v, label in zip(internal, assignment):
            values[v] = label
        cost = 0
        for parent, child in edges:
            cost += th[abs(values[parent] - values[child])]
        if best is None or cost < best:
            best = cost
            best_labelings = []
            root_labels = set()
            truncated = False
        if cost == best:
            root_labels.add(values[root])
            if len(best_labelings) < max_labelings:
                best_labelings.append(dict(values))
            else:
                truncated = True

    return OptimumSet(
        cost=best,
        labelings=[Labeling(values=v, total_cost=best) for v in best_labelings],
        root_labels=sorted(root_labels),
        truncated=truncated,
    )


def optimal_label_sets(
    t: Tree, l: LeafLabeling, c: CostFunction, budget: int | None = None
) -> list[list[int]]:
    """For every node, all labels it takes in at least one optimal labeling.

    One exhaustive pass; entry [v] is ascending. Leaf entries are their
    observed labels.
    """
    internal, edges = _scan_setup(t, l, budget)
    th = [theta(c, d) for d in range(l.m)]

    best = None
    seen: list[set[int]] = [set() for _ in range(t.node_count)]

    values = dict(l.labels)
    for assignment in product(range(l.g_min, l.g_max + 1), repeat=len(internal)):
        for v, label in zip(internal, assignment):
            values[v] = label
        cost = 0
        for parent, child in edges:
            cost += th[abs(values[parent] - values[child])]
        if best is None or cost < best:
            best = cost
            seen = [set() for _ in range(t.node_count)]
        if cost == best:
            for v in range(t.node_count):
                seen[v].add(values[v])

    return [sorted(s) for s in seen]


def enumerate_optimal(
    t: Tree, l: LeafLabeling, c: CostFunction, node: int, budget: int | None = None
) -> list[int]:
    """All labels of ``node`` appearing in at least one optimal labeling."""
    return optimal_label_sets(t, l, c, budget=budget)[node]
