"""Words in the generators x_i, sigma_i, tau_i and their diagrams.

Text syntax: whitespace-separated letters ``x<i>``, ``s<i>``, ``t<i>`` with an
optional integer exponent, e.g. ``"x1 t1 s2^-1 x0^3"``.  ``s`` stands for
sigma and ``t`` for tau.  The finite generating set is {x0, x1, s1, t1}.
"""

from __future__ import annotations

import functools
import random
import re
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from . import diagrams as dg
from . import trees as tr
from .braids import BraidWord
from .diagrams import Diagram

FAMILIES = ("x", "s", "t")


class WordSyntaxError(ValueError):
    """Malformed word text; ``position`` is the character offset of the bad token."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


@dataclass(frozen=True, order=True)
class GeneratorLetter:
    family: str
    index: int
    sign: int = 1

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(f"unknown generator family {self.family!r}")
        lowest = 0 if self.family == "x" else 1
        if self.index < lowest:
            raise ValueError(f"{self.family}{self.index}: index must be >= {lowest}")
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")

    def inverse(self) -> "GeneratorLetter":
        return GeneratorLetter(self.family, self.index, -self.sign)

    def __str__(self) -> str:
        base = f"{self.family}{self.index}"
        return base if self.sign > 0 else base + "^-1"


@dataclass(frozen=True)
class GeneratorWord:
    letters: Tuple[GeneratorLetter, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "letters", tuple(self.letters))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __add__(self, other: "GeneratorWord") -> "GeneratorWord":
        return GeneratorWord(self.letters + other.letters)

    def __mul__(self, power: int) -> "GeneratorWord":
        return GeneratorWord(self.letters * power)

    def __str__(self) -> str:
        return " ".join(str(a) for a in self.letters)

    def inverse(self) -> "GeneratorWord":
        return GeneratorWord(tuple(a.inverse() for a in reversed(self.letters)))

    def is_finite(self) -> bool:
        """Whether only x0, x1, s1, t1 occur."""
        return all(a.index <= 1 for a in self.letters)


def letter(family: str, index: int, sign: int = 1) -> GeneratorLetter:
    return GeneratorLetter(family, index, sign)


def x(i: int, e: int = 1) -> GeneratorWord:
    return _power("x", i, e)


def s(i: int, e: int = 1) -> GeneratorWord:
    return _power("s", i, e)


def t(i: int, e: int = 1) -> GeneratorWord:
    return _power("t", i, e)


def _power(family: str, i: int, e: int) -> GeneratorWord:
    sign = 1 if e >= 0 else -1
    return GeneratorWord((GeneratorLetter(family, i, sign),) * abs(e))


def word(*parts: GeneratorWord) -> GeneratorWord:
    out: Tuple[GeneratorLetter, ...] = ()
    for part in parts:
        out += part.letters
    return GeneratorWord(out)


_TOKEN = re.compile(r"([xst])(\d+)(?:\^([+-]?\d+))?")


def parse(text: str) -> GeneratorWord:
    letters: List[GeneratorLetter] = []
    for m in re.finditer(r"\S+", text):
        tok = m.group(0)
        mt = _TOKEN.fullmatch(tok)
        if mt is None:
            raise WordSyntaxError(f"bad letter {tok!r}", m.start())
        family, idx, exp = mt.group(1), int(mt.group(2)), mt.group(3)
        e = int(exp) if exp is not None else 1
        try:
            one = GeneratorLetter(family, idx, 1 if e >= 0 else -1)
        except ValueError as err:
            raise WordSyntaxError(str(err), m.start()) from None
        letters.extend([one] * abs(e))
    return GeneratorWord(tuple(letters))


def free_reduce(w: GeneratorWord) -> GeneratorWord:
    """Cancel adjacent inverse pairs."""
    out: List[GeneratorLetter] = []
    for a in w.letters:
        if out and out[-1] == a.inverse():
            out.pop()
        else:
            out.append(a)
    return GeneratorWord(tuple(out))


# -- generator diagrams and evaluation -----------------------------------------


@functools.lru_cache(maxsize=None)
def generator_diagram(a: GeneratorLetter) -> Diagram:
    i = a.index
    if a.family == "s":
        r = tr.all_right(i + 2)
        d = Diagram(r, BraidWord(i + 2, (i,)), r)
    elif a.family == "t":
        r = tr.all_right(i + 1)
        d = Diagram(r, BraidWord(i + 1, (i,)), r)
    else:
        top = tr.graft(tr.all_right(i + 2), i + 1, tr.CARET)
        d = Diagram(top, BraidWord(i + 3), tr.all_right(i + 3))
    if a.sign < 0:
        d = dg.invert(d)
    return d


def evaluate(w: GeneratorWord | str) -> Diagram:
    """Reduced diagram of the product of the letters, read left to right."""
    if isinstance(w, str):
        w = parse(w)
    d = dg.identity_diagram()
    for a in w.letters:
        d = dg.multiply(d, generator_diagram(a))
    return d


def evaluate_steps(w: GeneratorWord) -> List[Diagram]:
    """Reduced diagrams of every prefix of ``w``, the empty prefix first."""
    d = dg.identity_diagram()
    out = [d]
    for a in w.letters:
        d = dg.multiply(d, generator_diagram(a))
        out.append(d)
    return out


# -- rewriting into the finite generating set ----------------------------------


def _x0(e: int) -> Tuple[GeneratorLetter, ...]:
    return x(0, e).letters


def rewrite_to_finite(a: GeneratorLetter) -> GeneratorWord:
    """Express one letter over {x0, x1, s1, t1}.

    x_n     = x0^(1-n) x1 x0^(n-1)                (n >= 2)
    sigma_2 = x0^-1 s1 x1 s1^-1
    sigma_n = x0^(2-n) sigma_2 x0^(n-2)           (n >= 3)
    tau_n   = x0^(2-n) (x0^-1 t1 s1^-1) x0^(n-2)  (n >= 2)
    """
    if a.sign < 0:
        return rewrite_to_finite(a.inverse()).inverse()
    n = a.index
    if n <= 1:
        return GeneratorWord((a,))
    if a.family == "x":
        return GeneratorWord(_x0(1 - n) + x(1).letters + _x0(n - 1))
    if a.family == "s":
        sigma2 = word(x(0, -1), s(1), x(1), s(1, -1))
        if n == 2:
            return sigma2
        return GeneratorWord(_x0(2 - n) + sigma2.letters + _x0(n - 2))
    tau2 = word(x(0, -1), t(1), s(1, -1))
    return GeneratorWord(_x0(2 - n) + tau2.letters + _x0(n - 2))


def to_finite(w: GeneratorWord) -> GeneratorWord:
    """Rewrite every letter, then cancel adjacent inverse pairs."""
    out: List[GeneratorLetter] = []
    for a in w.letters:
        out.extend(rewrite_to_finite(a).letters)
    return free_reduce(GeneratorWord(tuple(out)))


def tree_to_positive_word(t_: tr.Tree) -> GeneratorWord:
    """Positive x-word whose diagram is (t, trivial braid, all-right)."""
    return GeneratorWord(tuple(GeneratorLetter("x", i) for i in tr.rotation_indices(t_)))


def synthesize_word(d: Diagram) -> GeneratorWord:
    """A word over {x0, x1, s1, t1} evaluating to ``d``.

    The reduced diagram (T1, b, T2) on m strands factors as a positive element
    of F with top tree T1, the braid b between all-right trees, and a negative
    element of F with bottom tree T2.  Braid letters at position m - 1 are tau's,
    all others sigma's.
    """
    r = dg.reduce(d)
    m = r.strands
    head = tree_to_positive_word(r.top)
    middle = []
    for i in r.braid.letters:
        pos, sign = abs(i), (1 if i > 0 else -1)
        family = "t" if pos == m - 1 else "s"
        middle.append(GeneratorLetter(family, pos, sign))
    tail = tree_to_positive_word(r.bottom).inverse()
    return to_finite(head + GeneratorWord(tuple(middle)) + tail)


def delta_word(n: int) -> GeneratorWord:
    """Finite-generator word for the half twist on n + 1 strands.

    Uses tau_1 tau_2 ... tau_n = x0^(n-1) Delta_{n+1}, with
    tau_k = x0^(2-k) tau_2 x0^(k-2) and tau_2 = x0^-1 t1 s1^-1.  Adjacent
    x0 powers cancel, leaving 6n - 7 letters for n >= 2.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n == 1:
        return t(1)
    tau2 = word(x(0, -1), t(1), s(1, -1))
    parts = [x(0, 1 - n), t(1), tau2]
    for k in range(1, n - 1):
        parts.extend((x(0, -k), tau2, x(0, k)))
    return free_reduce(word(*parts))


# -- random words ---------------------------------------------------------------

FINITE_BV = tuple(
    GeneratorLetter(f, i, e) for f, i in (("x", 0), ("x", 1), ("s", 1), ("t", 1)) for e in (1, -1)
)
FINITE_BV_HAT = tuple(a for a in FINITE_BV if a.family != "t")


def random_word(
    rng: random.Random,
    length: int,
    alphabet: Sequence[GeneratorLetter] = FINITE_BV,
) -> GeneratorWord:
    """Uniform random word of exactly ``length`` letters (not freely reduced)."""
    return GeneratorWord(tuple(rng.choice(alphabet) for _ in range(length)))

