"""Immutable rooted trees with deterministic traversals.

A tree is stored as parallel tuples indexed by node id (dense ints in
[0, N)). Children are kept in ascending id order so that every traversal,
and therefore every solver output, is deterministic. Trees of arbitrary
arity are accepted, including internal nodes with a single child; the
binary-only restriction belongs to the interval solver, not to the data
model. A single node that is both root and leaf is a valid tree.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .errors import (
    CycleDetected,
    InternalNodeWithoutChildren,
    LeafWithChildren,
    MultipleRoots,
    NoRoot,
    UnreachableNode,
)


@dataclass(frozen=True)
class Tree:
    """Rooted tree over node ids 0..N-1.

    Attributes
    ----------
    parents     : parent id per node; None exactly for the root.
    children    : per-node tuple of child ids, ascending.
    leaf_flags  : True for leaves (no children), False for internal nodes.
    root        : id of the unique parentless node.
    """

    parents: tuple[Optional[int], ...]
    children: tuple[tuple[int, ...], ...]
    leaf_flags: tuple[bool, ...]
    root: int

    @property
    def node_count(self) -> int:
        return len(self.parents)

    @property
    def leaf_count(self) -> int:
        return sum(self.leaf_flags)

    def is_leaf(self, v: int) -> bool:
        return self.leaf_flags[v]

    def leaves(self) -> tuple[int, ...]:
        return tuple(v for v in range(self.node_count) if self.leaf_flags[v])

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield (parent, child) pairs, parents in ascending id order."""
        for v, kids in enumerate(self.children):
            for c in kids:
                yield v, c


def build_tree(parent_of: Sequence[Optional[int]], leaf_flags: Sequence[bool]) -> Tree:
    """Construct and validate a Tree from parent pointers and leaf flags.

    ``parent_of[v]`` is the parent id of node v, or None for the root.
    Children end up sorted by ascending id regardless of input order.

    Raises NoRoot, MultipleRoots, UnreachableNode, CycleDetected,
    LeafWithChildren or InternalNodeWithoutChildren on malformed input.
    """
    n = len(parent_of)
    if n != len(leaf_flags):
        raise ValueError(
            f"parent_of has {n} entries but leaf_flags has {len(leaf_flags)}"
        )

    roots = [v for v in range(n) if parent_of[v] is None]
    if not roots:
        raise NoRoot("no node without a parent" if n else "empty node list")
    if len(roots) > 1:
        raise MultipleRoots(f"nodes {roots} all lack a parent")
    root = roots[0]

    for v in range(n):
        p = parent_of[v]
        if p is not None and not 0 <= p < n:
            raise UnreachableNode(f"node {v} has parent {p} outside [0, {n})")

    # Walk every parent chain once; a chain that revisits an in-progress
    # node is a cycle, anything else terminates at the root.
    state = [0] * n  # 0 unvisited, 1 on current chain, 2 done
    for start in range(n):
        v = start
        chain = []
        while state[v] == 0:
            state[v] = 1
            chain.append(v)
            p = parent_of[v]
            if p is None:
                break
            v = p
        if state[v] == 1 and parent_of[v] is not None:
            raise CycleDetected(f"parent chain through node {v} loops")
        for u in chain:
            state[u] = 2

    kids: list[list[int]] = [[] for _ in range(n)]
    for v in range(n):
        p = parent_of[v]
        if p is not None:
            kids[p].append(v)

    for v in range(n):
        if leaf_flags[v] and kids[v]:
            raise LeafWithChildren(f"leaf {v} has children {kids[v]}")
        if not leaf_flags[v] and not kids[v]:
            raise InternalNodeWithoutChildren(f"internal node {v} has no children")

    return Tree(
        parents=tuple(parent_of),
        children=tuple(tuple(sorted(c)) for c in kids),
        leaf_flags=tuple(bool(f) for f in leaf_flags),
        root=root,
    )


def postorder(t: Tree) -> list[int]:
    """Node ids with every node after all of its descendants.

    Children are visited in stored (ascending id) order. Iterative, so
    arbitrarily deep trees are fine.
    """
    order: list[int] = []
    stack: list[tuple[int, bool]] = [(t.root, False)]
    while stack:
        v, expanded = stack.pop()
        if expanded:
            order.append(v)
            continue
        stack.append((v, True))
        for c in reversed(t.children[v]):
            stack.append((c, False))
    return order


def preorder(t: Tree) -> list[int]:
    """Node ids with every node before all of its descendants."""
    order: list[int] = []
    stack = [t.root]
    while stack:
        v = stack.pop()
        order.append(v)
        stack.extend(reversed(t.children[v]))
    return order


def is_binary(t: Tree) -> bool:
    """True iff every internal node has exactly two children.

    Vacuously true for a single-node tree.
    """
    return all(
        len(t.children[v]) == 2
        for v in range(t.node_count)
        if not t.leaf_flags[v]
    )
