"""KOG- and KLG-tableaux on rims, and their signed counts.

Labels are compared through an integer rank: ``i'`` ranks ``2i - 1`` and
``i`` ranks ``2i``, giving the order 1' < 1 < 2' < 2 < ...  "South-west of
a box" is read weakly: any other box in a row at or below it and a column
at or left of it.  The strict reading overcounts, e.g. a primed label at
the right end of a row would escape comparison with its row.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .shapes import Box, ShapeError, SkewShape, is_rim

KOG = "KOG"
KLG = "KLG"


class NegativeContent(ShapeError):
    code = "negative-content"


class Label(NamedTuple):
    value: int
    primed: bool = False

    @property
    def rank(self) -> int:
        return 2 * self.value - self.primed

    def __str__(self):
        return f"{self.value}'" if self.primed else str(self.value)

    @classmethod
    def from_rank(cls, rank: int) -> "Label":
        return cls((rank + 1) // 2, rank % 2 == 1)


@dataclass(frozen=True)
class Tableau:
    shape: SkewShape
    entries: tuple[tuple[Box, Label], ...]
    mode: str

    def __getitem__(self, box: Box) -> Label:
        return dict(self.entries)[box]

    def labels(self) -> tuple[Label, ...]:
        return tuple(label for _, label in self.entries)

    @property
    def content(self) -> frozenset[int]:
        return frozenset(label.value for _, label in self.entries)

    def render(self) -> str:
        return render(self)


def _southwest(box: Box, other: Box) -> bool:
    return other != box and other[0] >= box[0] and other[1] <= box[1]


def is_valid(tab: Tableau) -> bool:
    """Check every tableau condition from scratch, independently of the generator."""
    theta = tab.shape
    entries = dict(tab.entries)
    if set(entries) != set(theta.boxes) or not is_rim(theta):
        return False
    for (r, c), lab in entries.items():
        if lab.value < 1:
            return False
        if lab.primed and (tab.mode != KLG or theta.is_diagonal((r, c))):
            return False
        right = entries.get((r, c + 1))
        below = entries.get((r + 1, c))
        if right is not None and not lab.rank < right.rank:
            return False
        if below is not None and not lab.rank < below.rank:
            return False
        sw = [o.rank for b, o in entries.items() if _southwest((r, c), b)]
        below_all = all(lab.rank <= x for x in sw)
        above_all = all(lab.rank >= x for x in sw)
        if tab.mode == KOG and not (below_all or above_all):
            return False
        if tab.mode == KLG and not (below_all if lab.primed else above_all):
            return False
    return True


def enumerate_tableaux(theta: SkewShape, p: int, mode: str = KOG) -> list[Tableau]:
    """All KOG/KLG tableaux of shape theta with content exactly {1, ..., p}."""
    if p < 0:
        raise NegativeContent(f"content size must be non-negative, got {p}")
    if mode not in (KOG, KLG):
        raise ValueError(f"unknown tableau mode {mode!r}")
    if not is_rim(theta) or p > len(theta):
        return []
    boxes = sorted(theta.boxes)
    ranks = list(range(2, 2 * p + 1, 2)) if mode == KOG else list(range(1, 2 * p + 1))
    # (j, i): box i is south-west of box j; (i, k): box k is south-west of box i
    relations = [
        [(j, i) for j in range(i) if _southwest(boxes[j], boxes[i])]
        + [(i, k) for k in range(i) if _southwest(boxes[i], boxes[k])]
        for i in range(len(boxes))
    ]
    index = {b: i for i, b in enumerate(boxes)}
    filled: list[int] = []
    # per box: whether "<= everything south-west" / ">= everything south-west" can still hold
    low_ok = [True] * len(boxes)
    high_ok = [True] * len(boxes)
    counts = [0] * (p + 1)
    found = []

    def missing():
        return sum(1 for v in range(1, p + 1) if counts[v] == 0)

    def alive(j):
        if mode == KOG:
            return low_ok[j] or high_ok[j]
        return low_ok[j] if filled[j] % 2 else high_ok[j]

    def place(i):
        if i == len(boxes):
            if missing() == 0:
                entries = tuple((b, Label.from_rank(x)) for b, x in zip(boxes, filled))
                found.append(Tableau(theta, entries, mode))
            return
        r, c = boxes[i]
        lo = 0
        for nb in ((r, c - 1), (r - 1, c)):
            j = index.get(nb)
            if j is not None:
                lo = max(lo, filled[j])
        for x in ranks:
            if x <= lo:
                continue
            if x % 2 == 1 and theta.is_diagonal(boxes[i]):
                continue
            filled.append(x)
            low_ok[i] = high_ok[i] = True
            saved = []
            ok = True
            for upper, lower in relations[i]:
                saved.append((upper, low_ok[upper], high_ok[upper]))
                low_ok[upper] = low_ok[upper] and filled[upper] <= filled[lower]
                high_ok[upper] = high_ok[upper] and filled[upper] >= filled[lower]
                if not alive(upper):
                    ok = False
                    break
            v = (x + 1) // 2
            if ok:
                counts[v] += 1
                if missing() <= len(boxes) - i - 1:
                    place(i + 1)
                counts[v] -= 1
            for j, lo_j, hi_j in reversed(saved):
                low_ok[j], high_ok[j] = lo_j, hi_j
            filled.pop()

    place(0)
    for tab in found:
        if not is_valid(tab):
            raise AssertionError(f"generator produced an invalid tableau: {tab.entries}")
    found.sort(key=lambda t: [lab.rank for lab in t.labels()])
    return found


def signed_count(theta: SkewShape, p: int, mode: str = KOG) -> int:
    """(-1)^(|theta| - p) times the number of tableaux with content {1..p}."""
    return (-1) ** ((len(theta) - p) % 2) * len(enumerate_tableaux(theta, p, mode))


def render(tab: Tableau) -> str:
    """One line per row; each skipped column is indented by one blank cell."""
    theta = tab.shape
    if not theta:
        return ""
    entries = dict(tab.entries)
    width = max(len(str(lab)) for lab in entries.values())
    c0 = min(c for _, c in theta.boxes)
    rows = range(min(r for r, _ in theta.boxes), max(r for r, _ in theta.boxes) + 1)
    lines = []
    for r in rows:
        cols = sorted(c for rr, c in theta.boxes if rr == r)
        if not cols:
            lines.append("")
            continue
        cells = [" " * width] * (cols[0] - c0) + [str(entries[(r, c)]).ljust(width) for c in cols]
        lines.append(" ".join(cells).rstrip())
    return "\n".join(lines)
