"""Sheaf Euler characteristics of Richardson classes times special classes.

``coeff_direct`` expands a Pieri coefficient as the alternating sum over
south-east corner subsets.  It is the reference every other engine in the
package is checked against, so it deliberately avoids any caching of
shapes or reuse of the recursive machinery.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .shapes import (
    OutOfBounds,
    Partition,
    SkewShape,
    Space,
    corner_subsets,
    diagram_stats,
    fits_space,
    format_partition,
    make_skew,
)


class NegativeA(ValueError):
    code = "negative-a"


@lru_cache(maxsize=None)
def h(a: int, b: int) -> int:
    """sum_{j=0}^{b} (-1)^j 2^(a-j) C(a, j), with C(a, j) = 0 off 0 <= j <= a."""
    if a < 0:
        raise NegativeA(f"h(a, b) needs a >= 0, got a={a}")
    return sum((-1) ** j * 2 ** (a - j) * comb(a, j) for j in range(0, min(a, b) + 1))


def chi(theta: SkewShape, p: int, space: Space) -> int:
    """Euler characteristic of O_theta * O^p.

    For p < 0 the special class is read as the unit, which the closed forms
    already encode.
    """
    if not fits_space(theta, space):
        raise OutOfBounds(f"diagram does not fit in {space}")
    st = diagram_stats(theta)
    if space.kind == "a":
        return 1 if p <= st.c else 0
    if space.kind == "og":
        return h(st.Nminus, st.d - p)
    return h(st.Nprime, st.d - p)


def corner_sum(theta: SkewShape, p: int, space: Space) -> int:
    """The alternating corner-subset sum A/B/C(theta, p)."""
    n = len(theta)
    return sum((-1) ** (n - len(phi)) * chi(phi, p, space) for phi in corner_subsets(theta))


def coeff_direct(lam: Partition, p: int, nu: Partition, space: Space) -> int:
    """c^nu_{lam, p} from the corner-subset expansion."""
    return corner_sum(make_skew(lam, nu, space), p, space)


@dataclass(frozen=True)
class Coefficient:
    """A Pieri coefficient together with the inputs and engine that produced it."""

    value: int
    space: Space
    lam: Partition
    p: int
    nu: Partition
    engine: str

    def __int__(self):
        return self.value

    def __str__(self):
        return (
            f"c[{self.space}]^({format_partition(self.nu)})_"
            f"({format_partition(self.lam)}),{self.p} = {self.value}"
        )
