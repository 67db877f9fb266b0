"""The infinite presentation of BV, checked by evaluating both sides."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Dict, Iterator, List, Optional, Tuple

from .diagrams import diagram_equal, in_bv_hat
from .words import GeneratorWord, evaluate, s, t, word, x

FAMILIES = ("A", "B1", "B2", "B3", "B4", "C1", "C2", "C3", "C4", "D1", "D2", "D3")

# family -> (uses j, constraint on (i, j), description of the constraint)
_CONSTRAINTS: Dict[str, Tuple[bool, Callable[[int, int], bool], str]] = {
    "A": (True, lambda i, j: i >= 0 and j > i, "0 <= i < j"),
    "B1": (True, lambda i, j: i >= 1 and j - i >= 2, "i >= 1, j - i >= 2"),
    "B2": (False, lambda i, j: i >= 1, "i >= 1"),
    "B3": (True, lambda i, j: i >= 1 and j - i >= 2, "i >= 1, j - i >= 2"),
    "B4": (False, lambda i, j: i >= 1, "i >= 1"),
    "C1": (True, lambda i, j: i >= 1 and i < j, "1 <= i < j"),
    "C2": (False, lambda i, j: i >= 1, "i >= 1"),
    "C3": (True, lambda i, j: j >= 0 and i >= j + 2, "j >= 0, i >= j + 2"),
    "C4": (False, lambda i, j: i >= 0, "i >= 0"),
    "D1": (True, lambda i, j: j >= 0 and i - j >= 2, "j >= 0, i - j >= 2"),
    "D2": (False, lambda i, j: i >= 1, "i >= 1"),
    "D3": (False, lambda i, j: i >= 1, "i >= 1"),
}


def _sides(family: str, i: int, j: int) -> Tuple[GeneratorWord, GeneratorWord]:
    if family == "A":
        return word(x(j), x(i)), word(x(i), x(j + 1))
    if family == "B1":
        return word(s(i), s(j)), word(s(j), s(i))
    if family == "B2":
        return word(s(i), s(i + 1), s(i)), word(s(i + 1), s(i), s(i + 1))
    if family == "B3":
        return word(s(i), t(j)), word(t(j), s(i))
    if family == "B4":
        return word(s(i), t(i + 1), s(i)), word(t(i + 1), s(i), t(i + 1))
    if family == "C1":
        return word(s(i), x(j)), word(x(j), s(i))
    if family == "C2":
        return word(s(i), x(i)), word(x(i - 1), s(i + 1), s(i))
    if family == "C3":
        return word(s(i), x(j)), word(x(j), s(i + 1))
    if family == "C4":
        return word(s(i + 1), x(i)), word(x(i + 1), s(i + 1), s(i + 2))
    if family == "D1":
        return word(t(i), x(j)), word(x(j), t(i + 1))
    if family == "D2":
        return word(t(i), x(i - 1)), word(s(i), t(i + 1))
    if family == "D3":
        return t(i), word(x(i - 1), t(i + 1), s(i))
    raise ValueError(f"unknown relator family {family!r}")


@dataclass(frozen=True)
class RelatorInstance:
    family: str
    i: int
    j: Optional[int]
    left: GeneratorWord
    right: GeneratorWord

    @property
    def key(self) -> Tuple[int, int, int]:
        return (FAMILIES.index(self.family), self.i, -1 if self.j is None else self.j)

    @property
    def involves_tau(self) -> bool:
        return any(a.family == "t" for a in self.left.letters + self.right.letters)


def relator_instance(family: str, i: int, j: Optional[int] = None) -> RelatorInstance:
    if family not in _CONSTRAINTS:
        raise ValueError(f"unknown relator family {family!r}")
    uses_j, ok, text = _CONSTRAINTS[family]
    if uses_j and j is None:
        raise ValueError(f"relator {family} needs both i and j ({text})")
    jj = j if uses_j else 0
    if not ok(i, jj):
        raise ValueError(f"relator {family} violates {text}: i={i}, j={j}")
    left, right = _sides(family, i, jj)
    return RelatorInstance(family, i, j if uses_j else None, left, right)


def instances(max_index: int) -> Iterator[RelatorInstance]:
    """Every admissible instance with all named indices <= max_index."""
    for family in FAMILIES:
        uses_j, ok, _ = _CONSTRAINTS[family]
        for i in range(max_index + 1):
            for j in range(max_index + 1) if uses_j else (0,):
                if ok(i, j):
                    yield relator_instance(family, i, j if uses_j else None)


def verify(family: str, i: int, j: Optional[int] = None) -> bool:
    rel = relator_instance(family, i, j)
    return diagram_equal(evaluate(rel.left), evaluate(rel.right))


@dataclass
class RelatorReport:
    results: List[Tuple[RelatorInstance, bool]] = field(default_factory=list)

    @property
    def failures(self) -> List[RelatorInstance]:
        return [r for r, ok in self.results if not ok]

    @property
    def passed(self) -> bool:
        return not self.failures

    def lines(self) -> List[str]:
        out = []
        for rel, ok in self.results:
            j = "-" if rel.j is None else str(rel.j)
            out.append(f"{rel.family} {rel.i} {j} {'PASS' if ok else 'FAIL'}")
        n = len(self.results)
        out.append(f"{n - len(self.failures)}/{n} passed, {len(self.failures)} failed")
        return out

    def __str__(self) -> str:
        return "\n".join(self.lines())


def verify_all(max_index: int = 8) -> RelatorReport:
    if max_index < 3:
        raise ValueError(f"max_index must be >= 3, got {max_index}")
    report = RelatorReport()
    for rel in sorted(instances(max_index), key=lambda r: r.key):
        ok = diagram_equal(evaluate(rel.left), evaluate(rel.right))
        report.results.append((rel, ok))
    return report


def bv_hat_instances_closed(max_index: int = 8) -> List[RelatorInstance]:
    """Tau-free instances with a side that leaves BV-hat (expected empty)."""
    bad = []
    for rel in instances(max_index):
        if rel.involves_tau:
            continue
        if not (in_bv_hat(evaluate(rel.left)) and in_bv_hat(evaluate(rel.right))):
            bad.append(rel)
    return bad
