"""Recursive Pieri rules for the three families, plus Lenart's closed form."""

from __future__ import annotations

from functools import lru_cache
from math import comb

from .shapes import (
    Partition,
    ShapeError,
    SkewShape,
    Space,
    diagram_stats,
    is_horizontal_strip,
    is_rim,
    make_skew,
    northeast_arm,
    remove_top_row,
)


class WrongSpace(ShapeError):
    code = "wrong-space"


def _delta(x, y) -> int:
    return 1 if x == y else 0


def _translate(theta: SkewShape) -> SkewShape:
    # type A values depend only on relative box positions
    if not theta:
        return theta
    r0 = min(r for r, _ in theta.boxes) - 1
    c0 = min(c for _, c in theta.boxes) - 1
    return SkewShape(frozenset((r - r0, c - c0) for r, c in theta.boxes), False)


def _rule_a(theta: SkewShape, p: int, rec) -> int:
    if not is_horizontal_strip(theta):
        return 0
    if p <= 0:
        return _delta(len(theta), 0)
    if not theta:
        return 0
    rest, a = remove_top_row(theta)
    if not rest:
        return _delta(len(theta), p)
    return rec(rest, p - a) - rec(rest, p - a + 1)


def _rule_b(theta: SkewShape, p: int, rec) -> int:
    if not is_rim(theta):
        return 0
    if p <= 0:
        return _delta(len(theta), 0)
    if not theta:
        return 0
    arm = northeast_arm(theta)
    rest, a = arm.rest, arm.a
    if not rest:
        return _delta(len(theta), p)
    if arm.connected:
        return rec(rest, p - a) - rec(rest, p - a + 1)
    if p < a:
        return 0
    return (2 - _delta(p, a)) * (rec(rest, p - a) - rec(rest, p - a + 1)) + (
        1 - _delta(a, 1)
    ) * (rec(rest, p - a + 2) - rec(rest, p - a + 1))


def _rule_c(theta: SkewShape, p: int, rec) -> int:
    if not is_rim(theta):
        return 0
    if p <= 0:
        return _delta(len(theta), 0)
    if not theta:
        return 0
    arm = northeast_arm(theta)
    rest, a = arm.rest, arm.a
    size = len(theta)
    if not rest:
        if any(theta.is_diagonal(b) for b in theta.boxes):
            if arm.armIsColumn:
                return _delta(p, size) - _delta(p, size - 1)
            return _delta(p, size)
        return 2 * _delta(p, size) - _delta(p, size - 1)
    if arm.connected:
        return rec(rest, p - a) - rec(rest, p - a + 1)
    if a == 1:
        return 2 * rec(rest, p - 1) - 2 * rec(rest, p)
    return 2 * rec(rest, p - a) - 3 * rec(rest, p - a + 1) + rec(rest, p - a + 2)


_RULES = {"a": _rule_a, "og": _rule_b, "lg": _rule_c}


def _make_cached(rule, normalize=None):
    @lru_cache(maxsize=None)
    def cached(theta, p):
        return rule(theta, p, rec)

    def rec(theta, p):
        return cached(normalize(theta) if normalize else theta, p)

    rec.cache_clear = cached.cache_clear
    rec.cache_info = cached.cache_info
    return rec


def _make_plain(rule):
    def rec(theta, p):
        return rule(theta, p, rec)

    return rec


_CACHED = {
    "a": _make_cached(_rule_a, _translate),
    "og": _make_cached(_rule_b),
    "lg": _make_cached(_rule_c),
}
_PLAIN = {kind: _make_plain(rule) for kind, rule in _RULES.items()}


def clear_cache() -> None:
    for rec in _CACHED.values():
        rec.cache_clear()


def recursive_value(theta: SkewShape, p: int, kind: str, memo: bool = True) -> int:
    """A(theta, p), B(theta, p) or C(theta, p) for ``kind`` in a/og/lg."""
    table = _CACHED if memo else _PLAIN
    return table[kind](theta, p)


def coeff_recursive(lam: Partition, p: int, nu: Partition, space: Space, memo: bool = True) -> int:
    theta = make_skew(lam, nu, space)
    return recursive_value(SkewShape(theta.boxes, theta.shifted), p, space.kind, memo=memo)


def lenart_closed_form(lam: Partition, p: int, nu: Partition, space: Space) -> int:
    """Lenart's signed binomial for type A Grassmannians."""
    if space.kind != "a":
        raise WrongSpace(f"Lenart's formula applies to type A spaces, not {space}")
    theta = make_skew(lam, nu, space)
    st = diagram_stats(theta)
    if not st.isHorizontalStrip:
        return 0
    if st.weight == 0:
        return _delta(p, 0)
    top = st.weight - p
    if not 0 <= top <= st.r - 1:
        return 0
    return (-1) ** top * comb(st.r - 1, top)
