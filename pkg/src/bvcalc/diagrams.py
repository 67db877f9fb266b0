"""Tree-braid-tree diagrams and the group law of BV.

A diagram ``(top, braid, bottom)`` joins leaf p of the top tree to leaf
``permutation(braid)[p - 1]`` of the bottom tree.  Products stack the first
factor above the second, so words are read left to right.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator, Optional, Tuple

from . import braids as br
from . import trees as tr
from .braids import BraidWord
from .trees import Tree


@dataclass(frozen=True)
class Diagram:
    top: Tree
    braid: BraidWord
    bottom: Tree

    def __post_init__(self) -> None:
        if not self.top.leaves == self.braid.strands == self.bottom.leaves:
            raise ValueError(
                f"leaf counts disagree: top {self.top.leaves}, "
                f"braid {self.braid.strands}, bottom {self.bottom.leaves}"
            )

    @property
    def carets(self) -> int:
        return self.top.carets

    @property
    def strands(self) -> int:
        return self.braid.strands

    def serialize(self) -> str:
        return f"{self.top}\n{self.braid}\n{self.bottom}"

    def __str__(self) -> str:
        return self.serialize()


def parse_diagram(text: str) -> Diagram:
    lines = [ln for ln in text.strip().splitlines() if ln.strip()]
    if len(lines) != 3:
        raise ValueError(f"a diagram has three lines, got {len(lines)}")
    return Diagram(tr.parse_tree(lines[0]), br.parse_braid(lines[1]), tr.parse_tree(lines[2]))


def identity_diagram() -> Diagram:
    return IDENTITY


IDENTITY = Diagram(tr.LEAF, BraidWord(1), tr.LEAF)


def expand_by(d: Diagram, p: int, sub: Tree) -> Diagram:
    """Replace strand p by a cable shaped like ``sub`` on both trees."""
    if not 1 <= p <= d.strands:
        raise IndexError(f"leaf {p} out of range 1..{d.strands}")
    if sub.is_leaf:
        return d
    q = br.permutation(d.braid)[p - 1]
    return Diagram(
        tr.graft(d.top, p, sub),
        br.cable(d.braid, p, sub.leaves),
        tr.graft(d.bottom, q, sub),
    )


def expand(d: Diagram, p: int) -> Diagram:
    """Split top leaf p, its strand, and the bottom leaf it ends at."""
    return expand_by(d, p, tr.CARET)


def _collapsible(d: Diagram) -> Iterator[Tuple[int, int]]:
    """(top position, bottom position) of every admissible collapse, left to right."""
    bottom_pairs = set(tr.sibling_leaves(d.bottom))
    if not bottom_pairs:
        return
    perm = br.permutation(d.braid)
    for p in tr.sibling_leaves(d.top):
        q = perm[p - 1]
        if perm[p] == q + 1 and q in bottom_pairs and br.is_parallel_pair(d.braid, p):
            yield p, q


def _collapse(d: Diagram, p: int, q: int) -> Diagram:
    return Diagram(
        tr.collapse(d.top, p),
        br.free_reduce(br.delete_strand(d.braid, p + 1)),
        tr.collapse(d.bottom, q),
    )


def reduce(d: Diagram, rng: Optional[random.Random] = None) -> Diagram:
    """Minimal representative of the element represented by ``d``.

    Collapses are taken left to right unless ``rng`` is given, in which case a
    random admissible collapse is taken at every step.
    """
    d = Diagram(d.top, br.free_reduce(d.braid), d.bottom)
    while True:
        if rng is None:
            step = next(_collapsible(d), None)
        else:
            options = list(_collapsible(d))
            step = rng.choice(options) if options else None
        if step is None:
            return d
        d = _collapse(d, *step)


def stack(d1: Diagram, d2: Diagram) -> Diagram:
    """Unreduced product: expand both factors to a common middle tree and concatenate."""
    common, ref1, ref2 = tr.common_refinement(d1.bottom, d2.top)
    # highest leaves first so lower indices stay valid
    for q in sorted(ref1, reverse=True):
        inv = br.inverse_permutation(br.permutation(d1.braid))
        d1 = expand_by(d1, inv[q - 1], ref1[q])
    for p in sorted(ref2, reverse=True):
        d2 = expand_by(d2, p, ref2[p])
    assert d1.bottom == common == d2.top
    return Diagram(d1.top, br.concat(d1.braid, d2.braid), d2.bottom)


def multiply(d1: Diagram, d2: Diagram) -> Diagram:
    """Product ``d1 * d2``: d1 stacked above d2, then reduced."""
    return reduce(stack(d1, d2))


def invert(d: Diagram) -> Diagram:
    return reduce(Diagram(d.bottom, br.invert(d.braid), d.top))


def diagram_equal(d1: Diagram, d2: Diagram) -> bool:
    r1, r2 = reduce(d1), reduce(d2)
    if r1.top != r2.top or r1.bottom != r2.bottom:
        return False
    return br.braid_equal(r1.braid, r2.braid)


def is_identity(d: Diagram) -> bool:
    r = reduce(d)
    return r.carets == 0


def in_bv_hat(d: Diagram) -> bool:
    """Whether the last strand of the reduced diagram is unbraided."""
    r = reduce(d)
    m = r.strands
    if m == 1:
        return True
    if br.permutation(r.braid)[m - 1] != m:
        return False
    rest = br.delete_strand(r.braid, m)
    return br.braid_equal(r.braid, BraidWord(m, rest.letters))
