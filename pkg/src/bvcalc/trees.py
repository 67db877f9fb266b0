"""Rooted binary trees: the two halves of every tree-braid-tree diagram.

A tree is either a leaf or a caret with a left and a right subtree.  Leaves
are numbered 1..m from left to right; a tree with n carets has n + 1 leaves.
Trees serialize as balanced parentheses, ``"."`` for a leaf and ``"(L,R)"``
for a caret.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from typing import Dict, Iterator, Optional, Tuple

#: leaf index (1-based, in the coarse tree) -> subtree replacing that leaf.
#: Leaves that are not refined are omitted.
LeafRefinement = Dict[int, "Tree"]


@dataclass(frozen=True, eq=True)
class Tree:
    left: Optional["Tree"] = None
    right: Optional["Tree"] = None
    # cached sizes; excluded from equality and hashing
    _leaves: int = field(default=0, init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if (self.left is None) != (self.right is None):
            raise ValueError("a caret needs exactly two children")
        n = 1 if self.left is None else self.left.leaves + self.right.leaves
        object.__setattr__(self, "_leaves", n)

    @property
    def is_leaf(self) -> bool:
        return self.left is None

    @property
    def leaves(self) -> int:
        return self._leaves

    @property
    def carets(self) -> int:
        return self._leaves - 1

    def __str__(self) -> str:
        return "".join(_tokens(self))

    def __repr__(self) -> str:
        return f"Tree({str(self)!r})"

    def __hash__(self) -> int:
        return hash(str(self))

    def depths(self) -> Tuple[int, ...]:
        """Depth of every leaf, in left-to-right order."""
        out = []

        def walk(t: Tree, d: int) -> None:
            if t.is_leaf:
                out.append(d)
            else:
                walk(t.left, d + 1)
                walk(t.right, d + 1)

        walk(self, 0)
        return tuple(out)


LEAF = Tree()
CARET = Tree(LEAF, LEAF)


def _tokens(t: Tree) -> Iterator[str]:
    # iterative so that deep all-right trees do not hit the recursion limit
    stack: list = [t]
    while stack:
        item = stack.pop()
        if isinstance(item, str):
            yield item
        elif item.is_leaf:
            yield "."
        else:
            yield "("
            stack.extend((")", item.right, ",", item.left))


def caret(left: Tree, right: Tree) -> Tree:
    return Tree(left, right)


def parse_tree(text: str) -> Tree:
    """Parse ``tree := "." | "(" tree "," tree ")"``; whitespace is ignored."""
    s = "".join(text.split())
    pos = 0

    def expect(ch: str) -> None:
        nonlocal pos
        if pos >= len(s) or s[pos] != ch:
            found = s[pos] if pos < len(s) else "end of input"
            raise ValueError(f"expected {ch!r} at position {pos}, found {found!r}")
        pos += 1

    def node() -> Tree:
        nonlocal pos
        if pos < len(s) and s[pos] == ".":
            pos += 1
            return LEAF
        expect("(")
        left = node()
        expect(",")
        right = node()
        expect(")")
        return Tree(left, right)

    t = node()
    if pos != len(s):
        raise ValueError(f"trailing characters at position {pos}: {s!r}")
    return t


@functools.lru_cache(maxsize=None)
def all_right(leaves: int) -> Tree:
    """The tree with ``leaves`` leaves whose every left child is a leaf."""
    if leaves < 1:
        raise ValueError(f"a tree needs at least one leaf, got {leaves}")
    t = LEAF
    for _ in range(leaves - 1):
        t = Tree(LEAF, t)
    return t


def graft(t: Tree, leaf: int, sub: Tree) -> Tree:
    """Replace leaf number ``leaf`` of ``t`` by the tree ``sub``."""
    if not 1 <= leaf <= t.leaves:
        raise IndexError(f"leaf {leaf} out of range 1..{t.leaves}")
    if t.is_leaf:
        return sub
    if leaf <= t.left.leaves:
        return Tree(graft(t.left, leaf, sub), t.right)
    return Tree(t.left, graft(t.right, leaf - t.left.leaves, sub))


def collapse(t: Tree, leaf: int) -> Tree:
    """Remove the caret whose two children are leaves ``leaf`` and ``leaf + 1``."""
    if t.is_leaf:
        raise ValueError("no caret to collapse in a single leaf")
    if t.left.is_leaf and t.right.is_leaf:
        if leaf != 1:
            raise ValueError(f"leaves {leaf}, {leaf + 1} are not siblings")
        return LEAF
    nl = t.left.leaves
    if leaf + 1 <= nl:
        return Tree(collapse(t.left, leaf), t.right)
    if leaf > nl:
        return Tree(t.left, collapse(t.right, leaf - nl))
    raise ValueError(f"leaves {leaf}, {leaf + 1} are not siblings")


def sibling_leaves(t: Tree) -> Tuple[int, ...]:
    """Indices p such that leaves p and p + 1 are the two children of one caret."""
    out = []
    offset = 0
    stack = [t]
    while stack:
        node = stack.pop()
        if node.is_leaf:
            offset += 1
            continue
        if node.left.is_leaf and node.right.is_leaf:
            out.append(offset + 1)
            offset += 2
            continue
        stack.append(node.right)
        stack.append(node.left)
    return tuple(out)


def union(t1: Tree, t2: Tree) -> Tree:
    """Smallest tree containing the carets of both arguments."""
    if t1.is_leaf:
        return t2
    if t2.is_leaf:
        return t1
    return Tree(union(t1.left, t2.left), union(t1.right, t2.right))


def refinement(coarse: Tree, fine: Tree) -> LeafRefinement:
    """Per-leaf subtrees turning ``coarse`` into ``fine``.

    Raises ValueError if ``fine`` does not contain ``coarse``.
    """
    out: LeafRefinement = {}
    index = 0

    def walk(c: Tree, f: Tree) -> None:
        nonlocal index
        if c.is_leaf:
            index += 1
            if not f.is_leaf:
                out[index] = f
            return
        if f.is_leaf:
            raise ValueError(f"{fine} does not refine {coarse}")
        walk(c.left, f.left)
        walk(c.right, f.right)

    walk(coarse, fine)
    return out


def apply_refinement(t: Tree, ref: LeafRefinement) -> Tree:
    for leaf in sorted(ref, reverse=True):
        t = graft(t, leaf, ref[leaf])
    return t


def common_refinement(t1: Tree, t2: Tree) -> Tuple[Tree, LeafRefinement, LeafRefinement]:
    """Coarsest tree refining both inputs, with the leaf maps from each input."""
    r = union(t1, t2)
    return r, refinement(t1, r), refinement(t2, r)


def rotation_indices(t: Tree) -> Tuple[int, ...]:
    """Indices i such that ``t = x_{i_1} x_{i_2} ... (all-right)`` as trees.

    Repeatedly right-rotates the shallowest spine caret whose left child is a
    caret; the spine depth of that caret is the emitted index.  Indices come
    out non-decreasing and there is one per caret off the right spine.
    """
    # left subtrees hanging off the right spine, top to bottom
    hanging = []
    while not t.is_leaf:
        hanging.append(t.left)
        t = t.right
    out = []
    i = 0
    while i < len(hanging):
        sub = hanging[i]
        if sub.is_leaf:
            i += 1
            continue
        # c(L(a, b), rest) -> c(a, c'(b, rest))
        hanging[i:i + 1] = [sub.left, sub.right]
        out.append(i)
    return tuple(out)
