"""Braid words on a fixed number of strands.

A letter is a nonzero integer: ``+i`` is the Artin generator sigma_i (the strand
at position i passes over the strand at position i + 1) and ``-i`` its inverse.
Strands are named by their top endpoint throughout; cabling, deletion and the
crossing statistics all take top positions.

Equality of braids is decided exactly by Dehornoy handle reduction, preceded
by cheap invariants (the permutation, pairwise signed crossing counts and a
Burau image over a prime field) that can only ever reject.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

import numpy as np

Permutation = Tuple[int, ...]


class StrandCountError(ValueError):
    """Raised when two braids on different numbers of strands are combined."""


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.strands < 1:
            raise ValueError(f"a braid needs at least one strand, got {self.strands}")
        object.__setattr__(self, "letters", tuple(self.letters))
        top = self.strands - 1
        for x in self.letters:
            if x == 0 or abs(x) > top:
                raise ValueError(f"letter {x} out of range for {self.strands} strands")

    @classmethod
    def sigma(cls, strands: int, i: int, sign: int = 1) -> "BraidWord":
        return cls(strands, (i if sign > 0 else -i,))

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        body = " ".join(_letter_text(x) for x in self.letters)
        return f"strands={self.strands}" + (f" {body}" if body else "")

    def pairs(self) -> List[Tuple[int, int]]:
        """Letters as (position, sign) pairs."""
        return [(abs(x), 1 if x > 0 else -1) for x in self.letters]


def _letter_text(x: int) -> str:
    return f"s{x}" if x > 0 else f"s{-x}^-1"


_BRAID_TOKEN = re.compile(r"s(\d+)(?:\^(-?\d+))?$")


def parse_braid(text: str, strands: int | None = None) -> BraidWord:
    """Parse ``strands=M s1 s2^-1 ...``; the header may be given separately."""
    tokens = text.split()
    if tokens and tokens[0].startswith("strands="):
        strands = int(tokens.pop(0).split("=", 1)[1])
    if strands is None:
        raise ValueError("braid text needs a strands=M header")
    letters: List[int] = []
    for tok in tokens:
        m = _BRAID_TOKEN.match(tok)
        if not m:
            raise ValueError(f"bad braid letter {tok!r}")
        i = int(m.group(1))
        e = int(m.group(2)) if m.group(2) else 1
        letters.extend([i if e > 0 else -i] * abs(e))
    return BraidWord(strands, tuple(letters))


def _check_same(b1: BraidWord, b2: BraidWord) -> None:
    if b1.strands != b2.strands:
        raise StrandCountError(f"strand counts differ: {b1.strands} vs {b2.strands}")


def concat(b1: BraidWord, b2: BraidWord) -> BraidWord:
    _check_same(b1, b2)
    return BraidWord(b1.strands, b1.letters + b2.letters)


def invert(b: BraidWord) -> BraidWord:
    return BraidWord(b.strands, tuple(-x for x in reversed(b.letters)))


def _free_reduce(letters: Iterable[int]) -> List[int]:
    out: List[int] = []
    for x in letters:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return out


def free_reduce(b: BraidWord) -> BraidWord:
    return BraidWord(b.strands, tuple(_free_reduce(b.letters)))


def permutation(b: BraidWord) -> Permutation:
    """Image list: entry ``p - 1`` is the bottom position of the strand starting at top ``p``."""
    at = list(range(b.strands + 1))  # at[position] = strand (top index)
    for x in b.letters:
        i = abs(x)
        at[i], at[i + 1] = at[i + 1], at[i]
    perm = [0] * b.strands
    for pos in range(1, b.strands + 1):
        perm[at[pos] - 1] = pos
    return tuple(perm)


def inverse_permutation(perm: Sequence[int]) -> Permutation:
    inv = [0] * len(perm)
    for i, p in enumerate(perm, start=1):
        inv[p - 1] = i
    return tuple(inv)


@dataclass(frozen=True)
class CrossingMatrix:
    """Pairwise crossing counts, indexed by top position minus one."""

    geometric: np.ndarray
    algebraic: np.ndarray

    @property
    def total(self) -> int:
        return int(np.triu(self.geometric, 1).sum())

    @property
    def max_pair(self) -> int:
        return int(self.geometric.max()) if self.geometric.size else 0


def crossing_stats(b: BraidWord) -> CrossingMatrix:
    m = b.strands
    geo = np.zeros((m, m), dtype=np.int64)
    alg = np.zeros((m, m), dtype=np.int64)
    at = list(range(m + 1))
    for x in b.letters:
        i = abs(x)
        u, v = at[i] - 1, at[i + 1] - 1
        geo[u, v] += 1
        geo[v, u] += 1
        e = 1 if x > 0 else -1
        alg[u, v] += e
        alg[v, u] += e
        at[i], at[i + 1] = at[i + 1], at[i]
    return CrossingMatrix(geo, alg)


def _pair_algebraic(b: BraidWord) -> dict:
    # sparse signed counts; cheaper than crossing_stats for many strands
    at = list(range(b.strands + 1))
    out: dict = {}
    for x in b.letters:
        i = abs(x)
        u, v = at[i], at[i + 1]
        key = (u, v) if u < v else (v, u)
        out[key] = out.get(key, 0) + (1 if x > 0 else -1)
        at[i], at[i + 1] = v, u
    return {k: c for k, c in out.items() if c}


def garside_delta(m: int) -> BraidWord:
    """Positive half twist sigma_1..sigma_{m-1} sigma_1..sigma_{m-2} ... sigma_1."""
    if m < 1:
        raise ValueError(f"need at least one strand, got {m}")
    letters = [i for top in range(m - 1, 0, -1) for i in range(1, top + 1)]
    return BraidWord(m, tuple(letters))


def cable(b: BraidWord, p: int, mult: int) -> BraidWord:
    """Replace the strand with top endpoint ``p`` by ``mult`` parallel strands."""
    if not 1 <= p <= b.strands:
        raise ValueError(f"strand {p} out of range 1..{b.strands}")
    if mult < 1:
        raise ValueError(f"cable multiplicity must be positive, got {mult}")
    if mult == 1:
        return b
    shift = mult - 1
    q = p
    out: List[int] = []
    for x in b.letters:
        i = abs(x)
        e = 1 if x > 0 else -1
        if i + 1 < q:
            out.append(x)
        elif i > q:
            out.append(x + e * shift)
        elif i == q:
            # cable on the left moves right past one strand
            out.extend(e * j for j in range(i + shift, i - 1, -1))
            q = i + 1
        else:
            # cable on the right moves left past one strand
            out.extend(e * j for j in range(i, i + mult))
            q = i
    return BraidWord(b.strands + shift, tuple(out))


def delete_strand(b: BraidWord, p: int) -> BraidWord:
    """Remove the strand with top endpoint ``p`` together with its crossings."""
    if b.strands < 2:
        raise ValueError("cannot delete the only strand")
    if not 1 <= p <= b.strands:
        raise ValueError(f"strand {p} out of range 1..{b.strands}")
    q = p
    out: List[int] = []
    for x in b.letters:
        i = abs(x)
        if i == q:
            q = i + 1
        elif i + 1 == q:
            q = i
        elif i + 1 < q:
            out.append(x)
        else:
            out.append(x - 1 if x > 0 else x + 1)
    return BraidWord(b.strands - 1, tuple(out))


# -- word problem -------------------------------------------------------------

_PRIME = (1 << 61) - 1
_BURAU_T = (123456789, 987654321987)


def _burau_signature(b: BraidWord, t: int) -> Tuple[int, ...]:
    """Burau image of ``b`` at ``t`` over GF(p), applied to a fixed row vector."""
    p = _PRIME
    tinv = pow(t, p - 2, p)
    one_t = (1 - t) % p
    one_tinv = (1 - tinv) % p
    # generic starting vector; any vector works, distinct braids rarely collide
    v = [0] + [pow(7, k + 3, p) for k in range(b.strands)]
    for x in b.letters:
        i = abs(x)
        a, c = v[i], v[i + 1]
        if x > 0:
            v[i], v[i + 1] = (a * one_t + c) % p, (a * t) % p
        else:
            v[i], v[i + 1] = (c * tinv) % p, (a + c * one_tinv) % p
    return tuple(v[1:])


def handle_reduce(letters: Sequence[int]) -> List[int]:
    """Apply Dehornoy handle reduction until the word has no handles.

    A sigma_i-handle is a subword sigma_i^e v sigma_i^-e where v contains no
    sigma_i^{+-1} and no sigma_{i-1}^{+-1}.  The handle ending leftmost is
    reduced first, which makes it permitted (it contains no inner handle).
    """
    w = _free_reduce(letters)
    while True:
        found = _first_handle(w)
        if found is None:
            return w
        p, q = found
        head = w[p]
        i = abs(head)
        e = 1 if head > 0 else -1
        inner: List[int] = []
        for x in w[p + 1:q]:
            if abs(x) == i + 1:
                d = 1 if x > 0 else -1
                inner.extend((-e * (i + 1), d * i, e * (i + 1)))
            else:
                inner.append(x)
        w = _free_reduce(w[:p] + _free_reduce(inner) + w[q + 1:])


def _first_handle(w: Sequence[int]):
    last: dict = {}
    for q, x in enumerate(w):
        i = abs(x)
        p = last.get(i)
        if p is not None and w[p] == -x:
            return p, q
        last[i] = q
        last.pop(i + 1, None)
    return None


def is_trivial(b: BraidWord) -> bool:
    """Exact test for ``b`` being the identity braid."""
    if any(permutation(b)[k] != k + 1 for k in range(b.strands)):
        return False
    return not handle_reduce(b.letters)


def braid_equal(b1: BraidWord, b2: BraidWord) -> bool:
    _check_same(b1, b2)
    if b1.letters == b2.letters:
        return True
    w = _free_reduce(b1.letters + invert(b2).letters)
    if not w:
        return True
    if permutation(b1) != permutation(b2):
        return False
    if _pair_algebraic(b1) != _pair_algebraic(b2):
        return False
    for t in _BURAU_T:
        if _burau_signature(b1, t) != _burau_signature(b2, t):
            return False
    return not handle_reduce(w)


def is_parallel_pair(b: BraidWord, p: int) -> bool:
    """Whether strands ``p`` and ``p + 1`` form an untwisted 2-cable."""
    if not 1 <= p <= b.strands - 1:
        raise ValueError(f"pair ({p}, {p + 1}) out of range for {b.strands} strands")
    perm = permutation(b)
    if perm[p] != perm[p - 1] + 1:
        return False
    candidate = cable(delete_strand(b, p + 1), p, 2)
    return braid_equal(b, candidate)
