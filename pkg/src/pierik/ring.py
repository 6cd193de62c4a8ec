"""Sparse integer vectors over the Schubert basis and Pieri products."""

from __future__ import annotations

import json
from itertools import permutations
from typing import Iterable, Mapping

from .euler import coeff_direct
from .recursion import WrongSpace, coeff_recursive, lenart_closed_form
from .shapes import (
    OutOfBounds,
    Partition,
    ShapeError,
    Space,
    contains,
    diagram_stats,
    dual_partition,
    format_partition,
    make_skew,
    normalize_partition,
    parse_space,
    partition_key,
)
from .tableaux import KLG, KOG, signed_count

ENGINES = ("direct", "recursive", "tableau", "lenart")


class OutOfRangeP(ShapeError):
    code = "p-out-of-range"


def engines_for(space: Space) -> tuple[str, ...]:
    if space.kind == "a":
        return ("direct", "recursive", "lenart")
    return ("direct", "recursive", "tableau")


def coefficient(lam: Partition, p: int, nu: Partition, space: Space, engine: str = "recursive") -> int:
    """c^nu_{lam,p} computed by the named engine."""
    if engine == "direct":
        return coeff_direct(lam, p, nu, space)
    if engine == "recursive":
        return coeff_recursive(lam, p, nu, space)
    if engine == "lenart":
        return lenart_closed_form(lam, p, nu, space)
    if engine == "tableau":
        if space.kind == "a":
            raise WrongSpace("the tableau engine covers OG and LG spaces only")
        mode = KOG if space.kind == "og" else KLG
        return signed_count(make_skew(lam, nu, space), p, mode)
    raise ValueError(f"unknown engine {engine!r}")


class KVector:
    """Integer combination of Schubert classes O^lam of one space."""

    __slots__ = ("space", "terms")

    def __init__(self, space: Space, terms: Mapping[Partition, int] | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Partition, int] = {}
        for part, coeff in items:
            part = normalize_partition(part)
            if not space.fits(part):
                raise OutOfBounds(f"{format_partition(part)} does not fit in {space}")
            clean[part] = clean.get(part, 0) + int(coeff)
        self.space = space
        self.terms = {k: clean[k] for k in sorted(clean, key=partition_key) if clean[k]}

    @classmethod
    def unit(cls, space: Space) -> "KVector":
        return cls(space, {(): 1})

    @classmethod
    def basis(cls, space: Space, lam: Partition) -> "KVector":
        return cls(space, {lam: 1})

    def __getitem__(self, part: Partition) -> int:
        return self.terms.get(tuple(part), 0)

    def __iter__(self):
        return iter(self.terms.items())

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if not isinstance(other, KVector):
            return NotImplemented
        return self.space == other.space and self.terms == other.terms

    def __hash__(self):
        return hash((self.space, tuple(self.terms.items())))

    def _check(self, other):
        if self.space != other.space:
            raise WrongSpace(f"cannot combine vectors over {self.space} and {other.space}")

    def __add__(self, other):
        self._check(other)
        return KVector(self.space, list(self.terms.items()) + list(other.terms.items()))

    def __neg__(self):
        return KVector(self.space, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, scalar: int):
        return KVector(self.space, {k: scalar * v for k, v in self.terms.items()})

    def __repr__(self):
        if not self.terms:
            return f"KVector({self.space}, 0)"
        body = " + ".join(f"{v}*O[{format_partition(k)}]" for k, v in self.terms.items())
        return f"KVector({self.space}, {body})"

    def to_json(self) -> dict:
        return {
            "space": str(self.space),
            "terms": [{"nu": list(k), "coeff": v} for k, v in self.terms.items()],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    @classmethod
    def from_json(cls, data: dict | str) -> "KVector":
        if isinstance(data, str):
            data = json.loads(data)
        space = parse_space(data["space"])
        return cls(space, [(tuple(t["nu"]), int(t["coeff"])) for t in data["terms"]])


def pieri_row(lam: Partition, p: int, space: Space, engine: str = "recursive") -> KVector:
    """O^lam * O^p expanded in the Schubert basis."""
    if not 0 <= p <= space.max_p:
        raise OutOfRangeP(f"p must lie in [0, {space.max_p}] for {space}, got {p}")
    terms = {}
    for nu in space.partitions():
        if not contains(nu, lam):
            continue
        st = diagram_stats(make_skew(lam, nu, space))
        if (st.isHorizontalStrip if space.kind == "a" else st.isRim) is False:
            continue
        terms[nu] = coefficient(lam, p, nu, space, engine)
    return KVector(space, terms)


def pieri_multiply(v: KVector, p: int, engine: str = "recursive") -> KVector:
    out = KVector(v.space)
    for lam, coeff in v:
        out = out + coeff * pieri_row(lam, p, v.space, engine)
    return out


def dual_class(nu: Partition, space: Space) -> KVector:
    """The dual class of O^nu: signed rook-strip sum of Richardson classes.

    Each Richardson class O_tau is the class of an opposite Schubert variety
    and is written in the Schubert basis as O^(tau dual).
    """
    if not space.fits(nu):
        raise OutOfBounds(f"{format_partition(nu)} does not fit in {space}")
    terms = {}
    for tau in space.partitions():
        if not contains(nu, tau):
            continue
        st = diagram_stats(make_skew(tau, nu, space))
        if st.isRookStrip:
            terms[dual_partition(tau, space)] = (-1) ** st.weight
    return KVector(space, terms)


def special_chain(space: Space, ps: Iterable[int], engine: str = "recursive") -> KVector:
    """O^{p1} * O^{p2} * ... starting from the unit."""
    v = KVector.unit(space)
    for p in ps:
        v = pieri_multiply(v, p, engine)
    return v


def chain_is_order_independent(space: Space, ps: Iterable[int], engine: str = "recursive") -> bool:
    ps = tuple(ps)
    first = special_chain(space, ps, engine)
    return all(special_chain(space, perm, engine) == first for perm in set(permutations(ps)))
