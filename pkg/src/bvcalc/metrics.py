"""Diagram statistics and certified word-length bounds.

For a reduced diagram with n carets, k crossings and at most s crossings
between any pair of strands:

* every finite generator adds at most one crossing per strand pair, so a
  word of length N has s <= N;
* a generator adds at most 2 carets to a diagram with a root caret, and at
  most 3 to the identity (x1 has 3 carets), so n <= 2N + 1;
* k <= n(n+1)/2 * s, since there are n(n+1)/2 strand pairs;
* ``synthesize_word`` gives an explicit word of at most
  ``UPPER_BOUND_CONSTANT * (n + n*k)`` letters.

The lower bound reported is max(floor(n/2), s), which follows from the two
facts above.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Dict, List, Optional, Tuple

import numpy as np

from . import braids as br
from .diagrams import Diagram, reduce
from .words import GeneratorWord, evaluate, evaluate_steps, parse, synthesize_word, t, word, x

#: C with |synthesize_word(d)| <= C (n + n k): each positive F part costs at most
#: 3n letters after x0 powers telescope, each braid letter at most 2n.
UPPER_BOUND_CONSTANT = 6


@dataclass(frozen=True)
class Metrics:
    nodes: int
    strands: int
    crossings: int
    max_pair_crossings: int
    crossing_matrix: np.ndarray
    lower_bound: int
    upper_bound_letters: int
    pair_bound: int
    permutation: Tuple[int, ...]
    top_tree: str
    bottom_tree: str

    def record(self) -> Dict[str, object]:
        """Flat key-value form used for JSON output."""
        return {
            "nodes": self.nodes,
            "strands": self.strands,
            "crossings": self.crossings,
            "max_pair_crossings": self.max_pair_crossings,
            "lower_bound": self.lower_bound,
            "upper_bound_letters": self.upper_bound_letters,
            "pair_bound": self.pair_bound,
            "permutation": list(self.permutation),
            "top_tree": self.top_tree,
            "bottom_tree": self.bottom_tree,
        }


def pair_bound(n: int, s: int) -> int:
    return n * (n + 1) // 2 * s


def metrics(d: Diagram, with_upper: bool = True) -> Metrics:
    r = reduce(d)
    b = br.free_reduce(r.braid)
    stats = br.crossing_stats(b)
    n = r.carets
    s = stats.max_pair
    upper = len(synthesize_word(r)) if with_upper else -1
    return Metrics(
        nodes=n,
        strands=r.strands,
        crossings=len(b),
        max_pair_crossings=s,
        crossing_matrix=stats.geometric,
        lower_bound=max(n // 2, s),
        upper_bound_letters=upper,
        pair_bound=pair_bound(n, s),
        permutation=br.permutation(b),
        top_tree=str(r.top),
        bottom_tree=str(r.bottom),
    )


def xtau_word(n: int) -> GeneratorWord:
    return word(x(1), t(1)) * (2 * n)


def xtau_counts(n: int) -> Tuple[int, int]:
    """(carets, crossings) of the reduced diagram of (x1 t1)^(2n)."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    m = metrics(evaluate(xtau_word(n)), with_upper=False)
    return m.nodes, m.crossings


@dataclass(frozen=True)
class XtauRow:
    n: int
    word_length: int
    nodes: int
    crossings: int

    @property
    def passed(self) -> bool:
        return self.nodes == 2 * self.n + 3 and self.crossings == 2 * self.n * (self.n + 2) ** 2


def xtau_experiment(max_n: int) -> List[XtauRow]:
    if max_n < 1:
        raise ValueError(f"max_n must be >= 1, got {max_n}")
    rows = []
    for n in range(1, max_n + 1):
        nodes, crossings = xtau_counts(n)
        rows.append(XtauRow(n, 4 * n, nodes, crossings))
    return rows


@dataclass
class BoundsReport:
    length: int
    nodes: int
    crossings: int
    max_pair_crossings: int
    pair_bound: int
    cubic_bound: int
    lower_bound: int
    upper_bound_letters: int
    upper_bound_constant: int
    s_within_length: bool
    nodes_within_twice_length: bool
    crossings_within_pair_bound: bool
    pair_bound_within_cubic: bool
    lower_within_upper: bool
    upper_within_constant: bool
    # n <= 2N + 1: the first letter may add 3 carets to the 0-caret identity (x1 does)
    nodes_within_root_bound: bool

    @property
    def passed(self) -> bool:
        return all(
            (
                self.s_within_length,
                self.nodes_within_twice_length,
                self.crossings_within_pair_bound,
                self.pair_bound_within_cubic,
                self.lower_within_upper,
                self.upper_within_constant,
            )
        )

    def record(self) -> Dict[str, object]:
        out = asdict(self)
        out["passed"] = self.passed
        return out


def check_bounds(w: GeneratorWord | str) -> BoundsReport:
    """Compare the word length N of ``w`` with the statistics of its diagram."""
    if isinstance(w, str):
        w = parse(w)
    if not w.is_finite():
        raise ValueError("check_bounds expects a word over x0, x1, s1, t1")
    big_n = len(w)
    m = metrics(evaluate(w))
    n, k, s = m.nodes, m.crossings, m.max_pair_crossings
    cubic = (2 * big_n) * (2 * big_n + 1) // 2 * big_n
    return BoundsReport(
        length=big_n,
        nodes=n,
        crossings=k,
        max_pair_crossings=s,
        pair_bound=m.pair_bound,
        cubic_bound=cubic,
        lower_bound=m.lower_bound,
        upper_bound_letters=m.upper_bound_letters,
        upper_bound_constant=UPPER_BOUND_CONSTANT,
        s_within_length=s <= big_n,
        nodes_within_twice_length=n <= 2 * big_n,
        crossings_within_pair_bound=k <= m.pair_bound,
        pair_bound_within_cubic=m.pair_bound <= cubic,
        lower_within_upper=m.lower_bound <= m.upper_bound_letters,
        upper_within_constant=m.upper_bound_letters <= UPPER_BOUND_CONSTANT * (n + n * k),
        nodes_within_root_bound=n <= 2 * big_n + 1,
    )


@dataclass(frozen=True)
class StepGrowth:
    """Largest per-letter increase of carets and of s along a word."""

    max_node_growth: int
    max_s_growth_braid: int
    max_s_growth_x: int
    first_step_node_growth: Optional[int]


def step_growth(w: GeneratorWord) -> StepGrowth:
    steps = evaluate_steps(w)
    node_g = s_braid = s_x = 0
    first = None
    prev_n, prev_s = 0, 0
    for idx, (a, d) in enumerate(zip(w.letters, steps[1:])):
        n = d.carets
        s = br.crossing_stats(d.braid).max_pair
        if idx == 0:
            first = n - prev_n
        node_g = max(node_g, n - prev_n)
        if a.family == "x":
            s_x = max(s_x, s - prev_s)
        else:
            s_braid = max(s_braid, s - prev_s)
        prev_n, prev_s = n, s
    return StepGrowth(node_g, s_braid, s_x, first)
