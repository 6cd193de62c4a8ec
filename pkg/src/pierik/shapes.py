"""Partitions, shifted and ordinary skew diagrams, and their statistics.

Partitions are plain tuples of positive integers with no trailing zeros.
Boxes are ``(row, col)`` pairs, 1-indexed.  In shifted coordinates row ``i``
of a strict partition occupies columns ``i, ..., i + part - 1``, so the
diagonal boxes are exactly those with ``row == col``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator

Box = tuple[int, int]
Partition = tuple[int, ...]


class ShapeError(ValueError):
    """Base class for invalid partitions, spaces and diagrams."""

    code = "shape"


class ParseError(ShapeError):
    code = "parse"


class MonotonicityError(ShapeError):
    code = "monotonicity"


class StrictnessError(ShapeError):
    code = "strictness"


class OutOfBounds(ShapeError):
    code = "out-of-bounds"


class NotContained(ShapeError):
    code = "not-contained"


class EmptyShape(ShapeError):
    code = "empty-shape"


class NotARim(ShapeError):
    code = "not-a-rim"


# -- spaces -----------------------------------------------------------------


@dataclass(frozen=True)
class Space:
    """Base class for the three families of cominuscule Grassmannians."""

    kind = ""

    @property
    def shifted(self) -> bool:
        return self.kind in ("og", "lg")

    def fits(self, part: Partition) -> bool:
        raise NotImplementedError

    def box_fits(self, box: Box) -> bool:
        raise NotImplementedError

    def partitions(self) -> list[Partition]:
        """All partitions indexing Schubert classes, sorted by (weight, parts)."""
        raise NotImplementedError

    @property
    def max_p(self) -> int:
        raise NotImplementedError


@dataclass(frozen=True)
class RectA(Space):
    m: int
    k: int
    kind = "a"

    def __post_init__(self):
        if self.m < 1 or self.k < 1:
            raise ShapeError(f"rectangle dimensions must be positive, got {self.m}x{self.k}")

    def __str__(self):
        return f"a:{self.m}x{self.k}"

    def fits(self, part):
        return len(part) <= self.m and (not part or part[0] <= self.k)

    def box_fits(self, box):
        return 1 <= box[0] <= self.m and 1 <= box[1] <= self.k

    def partitions(self):
        out = []

        def rec(prefix, cap):
            out.append(tuple(prefix))
            if len(prefix) == self.m:
                return
            for part in range(1, cap + 1):
                rec(prefix + [part], part)

        rec([], self.k)
        return sorted(out, key=partition_key)

    @property
    def max_p(self):
        return self.k


@dataclass(frozen=True)
class _Staircase(Space):
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ShapeError(f"staircase size must be positive, got {self.n}")

    def __str__(self):
        return f"{self.kind}:{self.n}"

    def fits(self, part):
        return not part or part[0] <= self.n

    def box_fits(self, box):
        return 1 <= box[0] <= box[1] <= self.n

    def partitions(self):
        out = []
        for size in range(self.n + 1):
            for parts in combinations(range(self.n, 0, -1), size):
                out.append(parts)
        return sorted(out, key=partition_key)

    @property
    def max_p(self):
        return self.n


@dataclass(frozen=True)
class OG(_Staircase):
    kind = "og"


@dataclass(frozen=True)
class LG(_Staircase):
    kind = "lg"


def parse_space(text: str) -> Space:
    """Parse ``a:MxK``, ``og:N`` or ``lg:N``."""
    kind, sep, rest = text.strip().lower().partition(":")
    if not sep:
        raise ParseError(f"space must look like a:MxK, og:N or lg:N, got {text!r}")
    try:
        if kind == "a":
            m, _, k = rest.partition("x")
            return RectA(int(m), int(k))
        if kind == "og":
            return OG(int(rest))
        if kind == "lg":
            return LG(int(rest))
    except ValueError as exc:
        if isinstance(exc, ShapeError):
            raise
        raise ParseError(f"bad space dimensions in {text!r}") from None
    raise ParseError(f"unknown space kind {kind!r}")


# -- partitions ---------------------------------------------------------------


def partition_key(part: Partition) -> tuple:
    return (sum(part), part)


def normalize_partition(parts: Iterable[int], strict: bool = False) -> Partition:
    """Validate a sequence of parts and drop zeros."""
    parts = tuple(int(x) for x in parts)
    if any(x < 0 for x in parts):
        raise ParseError(f"negative part in {parts}")
    for a, b in zip(parts, parts[1:]):
        if b > a:
            raise MonotonicityError(f"parts must be decreasing: {parts}")
        if strict and a == b and a > 0:
            raise StrictnessError(f"repeated part {a} in strict partition {parts}")
    return tuple(x for x in parts if x > 0)


def parse_partition(text: str, strict: bool = False) -> Partition:
    """Parse ``"a,b,c"`` (or ``"-"`` for the empty partition)."""
    text = text.strip()
    if text in ("-", ""):
        return ()
    try:
        parts = [int(tok) for tok in text.split(",")]
    except ValueError:
        raise ParseError(f"partition must be comma-separated integers, got {text!r}") from None
    return normalize_partition(parts, strict=strict)


def format_partition(part: Partition) -> str:
    return ",".join(map(str, part)) if part else "-"


def contains(outer: Partition, inner: Partition) -> bool:
    """True if the diagram of ``inner`` lies inside that of ``outer``."""
    if len(inner) > len(outer):
        return False
    return all(a <= b for a, b in zip(inner, outer))


def dual_partition(mu: Partition, space: Space) -> Partition:
    """The Poincare dual of ``mu`` in the rectangle or staircase of ``space``."""
    if not space.fits(mu):
        raise OutOfBounds(f"{format_partition(mu)} does not fit in {space}")
    if space.shifted:
        return tuple(x for x in range(space.n, 0, -1) if x not in mu)
    padded = list(mu) + [0] * (space.m - len(mu))
    return normalize_partition(space.k - x for x in reversed(padded))


# -- skew shapes ------------------------------------------------------------


@dataclass(frozen=True)
class SkewShape:
    """A finite set of boxes, either in ordinary or in shifted coordinates.

    Only ``boxes`` and ``shifted`` take part in equality and hashing, so two
    shapes built from different partition pairs compare equal when they
    occupy the same cells.
    """

    boxes: frozenset[Box]
    shifted: bool = False
    inner: Partition | None = field(default=None, compare=False)
    outer: Partition | None = field(default=None, compare=False)
    space: Space | None = field(default=None, compare=False)

    @classmethod
    def from_boxes(cls, boxes: Iterable[Box], shifted: bool = False) -> "SkewShape":
        return cls(frozenset(boxes), shifted)

    def __len__(self):
        return len(self.boxes)

    def __iter__(self) -> Iterator[Box]:
        return iter(sorted(self.boxes))

    def __contains__(self, box):
        return box in self.boxes

    def __bool__(self):
        return bool(self.boxes)

    def is_diagonal(self, box: Box) -> bool:
        return self.shifted and box[0] == box[1]

    def without(self, boxes: Iterable[Box]) -> "SkewShape":
        return SkewShape(self.boxes.difference(boxes), self.shifted)

    def rows(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {}
        for r, c in sorted(self.boxes):
            out.setdefault(r, []).append(c)
        return out

    def columns(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {}
        for r, c in sorted(self.boxes):
            out.setdefault(c, []).append(r)
        return out


def make_skew(lam: Partition, nu: Partition, space: Space) -> SkewShape:
    """The skew diagram nu/lam, shifted for OG/LG spaces."""
    for part in (lam, nu):
        if not space.fits(part):
            raise OutOfBounds(f"{format_partition(part)} does not fit in {space}")
    if not contains(nu, lam):
        raise NotContained(f"{format_partition(lam)} is not contained in {format_partition(nu)}")
    padded = list(lam) + [0] * (len(nu) - len(lam))
    boxes = set()
    for i, (a, b) in enumerate(zip(padded, nu), start=1):
        offset = i - 1 if space.shifted else 0
        boxes.update((i, offset + j) for j in range(a + 1, b + 1))
    return SkewShape(frozenset(boxes), space.shifted, lam, nu, space)


def fits_space(theta: SkewShape, space: Space) -> bool:
    return theta.shifted == space.shifted and all(space.box_fits(b) for b in theta.boxes)


# -- statistics ---------------------------------------------------------------


def _neighbors(box: Box) -> tuple[Box, ...]:
    r, c = box
    return ((r - 1, c), (r + 1, c), (r, c - 1), (r, c + 1))


def components(theta: SkewShape) -> list[frozenset[Box]]:
    """Side-connected components, ordered by their smallest box."""
    seen: set[Box] = set()
    out = []
    for start in sorted(theta.boxes):
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        while stack:
            for nb in _neighbors(stack.pop()):
                if nb in theta.boxes and nb not in comp:
                    comp.add(nb)
                    stack.append(nb)
        seen |= comp
        out.append(frozenset(comp))
    return out


def southeast_rim(theta: SkewShape) -> frozenset[Box]:
    """Boxes with no box of theta strictly south and strictly east."""
    return frozenset(
        (r, c)
        for r, c in theta.boxes
        if not any(r2 > r and c2 > c for r2, c2 in theta.boxes)
    )


def southeast_corners(theta: SkewShape) -> list[Box]:
    """Boxes with nothing directly below and nothing directly to the right."""
    return sorted(
        (r, c)
        for r, c in theta.boxes
        if (r + 1, c) not in theta.boxes and (r, c + 1) not in theta.boxes
    )


@dataclass(frozen=True)
class DiagramStats:
    weight: int
    c: int
    d: int
    N: int
    Nminus: int
    Nprime: int
    r: int
    isRim: bool
    isHorizontalStrip: bool
    isVerticalStrip: bool
    isRookStrip: bool
    meetsDiagonal: bool


def diagram_stats(theta: SkewShape) -> DiagramStats:
    rows = theta.rows()
    cols = theta.columns()
    comps = components(theta)
    d = len(southeast_rim(theta))
    horizontal = all(len(v) == 1 for v in cols.values())
    vertical = all(len(v) == 1 for v in rows.values())
    return DiagramStats(
        weight=len(theta),
        c=len(cols),
        d=d,
        N=len(comps),
        Nminus=max(len(comps) - 1, 0),
        Nprime=sum(1 for comp in comps if not any(theta.is_diagonal(b) for b in comp)),
        r=len(rows),
        isRim=d == len(theta),
        isHorizontalStrip=horizontal,
        isVerticalStrip=vertical,
        isRookStrip=horizontal and vertical,
        meetsDiagonal=any(theta.is_diagonal(b) for b in theta.boxes),
    )


def is_rim(theta: SkewShape) -> bool:
    return len(southeast_rim(theta)) == len(theta)


def is_horizontal_strip(theta: SkewShape) -> bool:
    return len({c for _, c in theta.boxes}) == len(theta)


def corner_subsets(theta: SkewShape) -> list[SkewShape]:
    """Every shape obtained by removing a subset of the south-east corners.

    Corners are sorted by (row, col); bit ``i`` of the counter removes corner
    ``i``.  The first shape yielded is theta itself.
    """
    corners = southeast_corners(theta)
    out = []
    for mask in range(1 << len(corners)):
        removed = [b for i, b in enumerate(corners) if mask >> i & 1]
        out.append(theta.without(removed))
    return out


# -- decompositions used by the recursions ---------------------------------------


def remove_top_row(theta: SkewShape) -> tuple[SkewShape, int]:
    """Split off the topmost non-empty row; return the rest and the row length."""
    if not theta:
        raise EmptyShape("cannot remove the top row of an empty diagram")
    top = min(r for r, _ in theta.boxes)
    rest = SkewShape(frozenset(b for b in theta.boxes if b[0] != top), theta.shifted)
    return rest, len(theta) - len(rest)


@dataclass(frozen=True)
class ArmDecomposition:
    arm: frozenset[Box]
    rest: SkewShape
    a: int
    armIsRow: bool
    armIsColumn: bool
    connected: bool


def _is_row(boxes) -> bool:
    return len({r for r, _ in boxes}) == 1


def _is_column(boxes) -> bool:
    return len({c for _, c in boxes}) == 1


def upper_right_box(theta: SkewShape) -> Box:
    top = min(r for r, _ in theta.boxes)
    return top, max(c for r, c in theta.boxes if r == top)


def northeast_arm(theta: SkewShape, require_rim: bool = True) -> ArmDecomposition:
    """Largest row or column cut out of theta by a square anchored at its upper-right box.

    A single-box arm counts as a row.
    """
    if not theta:
        raise EmptyShape("the north-east arm of an empty diagram is undefined")
    if require_rim and not is_rim(theta):
        raise NotARim("the north-east arm is only defined for rims")
    r0, c0 = upper_right_box(theta)
    span = max(c0 - min(c for _, c in theta.boxes), max(r for r, _ in theta.boxes) - r0) + 1
    arm = frozenset([(r0, c0)])
    for s in range(1, span + 1):
        cut = frozenset(
            (r, c) for r, c in theta.boxes if r0 <= r < r0 + s and c0 - s < c <= c0
        )
        if (_is_row(cut) or _is_column(cut)) and len(cut) > len(arm):
            arm = cut
    rest = theta.without(arm)
    connected = any(nb in rest.boxes for b in arm for nb in _neighbors(b))
    as_row = _is_row(arm)
    return ArmDecomposition(
        arm=arm,
        rest=rest,
        a=len(arm),
        armIsRow=as_row,
        armIsColumn=not as_row,
        connected=connected,
    )
