from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pierik.shapes import (
    LG,
    OG,
    EmptyShape,
    MonotonicityError,
    NotARim,
    NotContained,
    OutOfBounds,
    ParseError,
    RectA,
    SkewShape,
    StrictnessError,
    contains,
    corner_subsets,
    diagram_stats,
    dual_partition,
    make_skew,
    northeast_arm,
    parse_partition,
    parse_space,
    remove_top_row,
    southeast_corners,
)


# -- parsing --------------------------------------------------------------------


def test_parse_strict_partition():
    assert parse_partition("7,6,3,1", strict=True) == (7, 6, 3, 1)


def test_parse_empty():
    assert parse_partition("-") == ()


def test_parse_drops_zeros():
    assert parse_partition("3,1,0,0") == (3, 1)


@pytest.mark.parametrize(
    "text,strict,error",
    [
        ("3,3", True, StrictnessError),
        ("1,2", False, MonotonicityError),
        ("1,2", True, MonotonicityError),
        ("a,b", False, ParseError),
        ("3,,1", False, ParseError),
        ("2,-1", False, ParseError),
    ],
)
def test_parse_errors(text, strict, error):
    with pytest.raises(error):
        parse_partition(text, strict=strict)


def test_parse_repeat_ok_when_not_strict():
    assert parse_partition("3,3") == (3, 3)


@pytest.mark.parametrize(
    "text,space", [("a:2x3", RectA(2, 3)), ("og:7", OG(7)), ("lg:5", LG(5)), (" LG:2 ", LG(2))]
)
def test_parse_space(text, space):
    assert parse_space(text) == space
    assert parse_space(str(space)) == space


@pytest.mark.parametrize("text", ["a:2", "og:x", "b:3", "og", "a:0x2", "lg:0"])
def test_parse_space_errors(text):
    with pytest.raises(ValueError):
        parse_space(text)


def test_og_and_lg_are_distinct_spaces():
    assert OG(3) != LG(3)


# -- duals ----------------------------------------------------------------------


def test_dual_rect_pads_with_zeros():
    assert dual_partition((1,), RectA(2, 2)) == (2, 1)


def test_dual_og12_example():
    # complement of {10, 8, 7, 4} in {1, ..., 12}
    assert dual_partition((10, 8, 7, 4), OG(12)) == (12, 11, 9, 6, 5, 3, 2, 1)


def test_dual_of_empty_is_staircase():
    assert dual_partition((), LG(5)) == (5, 4, 3, 2, 1)


def test_dual_out_of_bounds():
    with pytest.raises(OutOfBounds):
        dual_partition((3,), RectA(2, 2))
    with pytest.raises(OutOfBounds):
        dual_partition((8,), OG(7))


@pytest.mark.parametrize("space", [RectA(m, k) for m in range(1, 6) for k in range(1, 6)])
def test_dual_involution_rect(space):
    for part in space.partitions():
        assert dual_partition(dual_partition(part, space), space) == part


@pytest.mark.parametrize("space", [cls(n) for cls in (OG, LG) for n in range(1, 8)])
def test_dual_involution_staircase(space):
    for part in space.partitions():
        dual = dual_partition(part, space)
        assert dual_partition(dual, space) == part
        assert sum(part) + sum(dual) == space.n * (space.n + 1) // 2


def test_partition_counts():
    assert len(RectA(4, 5).partitions()) == 126
    assert len(OG(6).partitions()) == 64


# -- skew shapes ----------------------------------------------------------------


def test_make_skew_rect():
    theta = make_skew((1,), (2, 1), RectA(2, 2))
    assert theta.boxes == {(1, 2), (2, 1)}


def test_make_skew_shifted_worked_shape():
    theta = make_skew((6, 4, 1), (7, 6, 3, 1), OG(7))
    assert len(theta) == 6
    assert theta.boxes == {(1, 7), (2, 6), (2, 7), (3, 4), (3, 5), (4, 4)}
    assert [b for b in theta if theta.is_diagonal(b)] == [(4, 4)]


@pytest.mark.parametrize("space", [RectA(3, 3), OG(4)])
def test_make_skew_not_contained(space):
    with pytest.raises(NotContained):
        make_skew((2, 1), (2,), space)


def test_make_skew_out_of_bounds():
    with pytest.raises(OutOfBounds):
        make_skew((), (3,), RectA(2, 2))


@pytest.mark.parametrize("space", [RectA(3, 4), OG(5), LG(4)])
def test_skew_size_is_weight_difference(space):
    parts = space.partitions()
    for lam in parts:
        for nu in parts:
            if contains(nu, lam):
                assert len(make_skew(lam, nu, space)) == sum(nu) - sum(lam)


# -- statistics -------------------------------------------------------------------


def test_stats_og12_example():
    theta = make_skew((11, 9, 8, 5, 2), (12, 11, 9, 6, 5, 3, 2, 1), OG(12))
    st = diagram_stats(theta)
    assert (st.d, st.N, st.Nminus, st.Nprime) == (10, 2, 1, 1)
    assert sum(1 for b in theta if theta.is_diagonal(b)) == 3


def test_stats_single_diagonal_box():
    st = diagram_stats(SkewShape.from_boxes([(2, 2)], shifted=True))
    assert (st.d, st.N, st.Nminus, st.Nprime, st.isRim) == (1, 1, 0, 0, True)


def test_stats_empty():
    st = diagram_stats(SkewShape.from_boxes([], shifted=True))
    assert (st.weight, st.d, st.N, st.Nminus, st.Nprime) == (0, 0, 0, 0, 0)
    assert st.isRim and st.isRookStrip and st.isHorizontalStrip


def test_stats_column_count():
    # skew (3,1)/(1): boxes (1,2),(1,3),(2,1); three columns, one box each
    st = diagram_stats(make_skew((1,), (3, 1), RectA(2, 3)))
    assert st.c == 3 and st.isHorizontalStrip and not st.isVerticalStrip


def _all_skews(space):
    parts = space.partitions()
    return [make_skew(l, n, space) for l in parts for n in parts if contains(n, l)]


@pytest.mark.parametrize("space", [RectA(3, 3), OG(5), LG(4)])
def test_stats_definitional_checks(space):
    for theta in _all_skews(space):
        st = diagram_stats(theta)
        rows = [r for r, _ in theta.boxes]
        cols = [c for _, c in theta.boxes]
        assert st.isRookStrip == (len(set(rows)) == len(rows) and len(set(cols)) == len(cols))
        assert st.isRim == (st.d == st.weight)
        assert st.Nminus == max(st.N - 1, 0)
        assert 0 <= st.Nprime <= st.N
        if not st.meetsDiagonal:
            assert st.Nprime == st.N
        if st.isRookStrip:
            assert st.isHorizontalStrip and st.isVerticalStrip
        # bottom-box removal count equals the number of non-empty columns
        assert st.c == len(set(cols))
        # re-deriving from raw boxes gives the same statistics
        assert diagram_stats(SkewShape.from_boxes(theta.boxes, theta.shifted)) == st


# -- corner subsets -------------------------------------------------------------------


def test_corners_shifted_staircase():
    theta = make_skew((), (2, 1), OG(2))
    assert theta.boxes == {(1, 1), (1, 2), (2, 2)}
    assert southeast_corners(theta) == [(2, 2)]
    assert len(corner_subsets(theta)) == 2


def test_corners_empty():
    theta = SkewShape.from_boxes([])
    assert corner_subsets(theta) == [theta]


def test_corners_rook_strip():
    theta = SkewShape.from_boxes([(1, 3), (2, 1)])
    assert len(corner_subsets(theta)) == 4


def test_corner_subsets_order_is_binary_counter():
    theta = SkewShape.from_boxes([(1, 3), (2, 1)])
    subsets = corner_subsets(theta)
    assert [sorted(s.boxes) for s in subsets] == [
        [(1, 3), (2, 1)],
        [(2, 1)],
        [(1, 3)],
        [],
    ]


@pytest.mark.parametrize("space", [RectA(3, 4), OG(5), LG(5)])
def test_corner_subsets_properties(space):
    for theta in _all_skews(space):
        corners = southeast_corners(theta)
        core = theta.without(corners)
        subsets = corner_subsets(theta)
        assert len(subsets) == 2 ** len(corners)
        assert len(set(subsets)) == len(subsets)
        assert theta in subsets and core in subsets
        for phi in subsets:
            assert core.boxes <= phi.boxes <= theta.boxes


# -- top row and north-east arm ---------------------------------------------------------


def test_remove_top_row():
    rest, a = remove_top_row(SkewShape.from_boxes([(1, 2), (2, 1)]))
    assert rest.boxes == {(2, 1)} and a == 1


def test_remove_top_row_single_row():
    rest, a = remove_top_row(SkewShape.from_boxes([(1, 1), (1, 2), (1, 3)]))
    assert not rest and a == 3


def test_remove_top_row_empty():
    with pytest.raises(EmptyShape):
        remove_top_row(SkewShape.from_boxes([]))


def test_arm_whole_column():
    theta = make_skew((1,), (2, 1), OG(2))
    assert theta.boxes == {(1, 2), (2, 2)}
    arm = northeast_arm(theta)
    assert arm.arm == theta.boxes and arm.a == 2 and not arm.rest and arm.armIsColumn


def test_arm_isolated_boxes():
    theta = SkewShape.from_boxes([(1, 4), (2, 2)], shifted=True)
    arm = northeast_arm(theta)
    assert arm.arm == {(1, 4)} and arm.a == 1
    assert arm.rest.boxes == {(2, 2)} and not arm.connected


def _brute_arm(boxes):
    """Largest row/column among square cuts anchored at the upper-right box."""
    top = min(r for r, _ in boxes)
    c0 = max(c for r, c in boxes if r == top)
    best = None
    for s in range(1, 20):
        cut = {(r, c) for r, c in boxes if top <= r <= top + s - 1 and c0 - s + 1 <= c <= c0}
        line = len({r for r, _ in cut}) == 1 or len({c for _, c in cut}) == 1
        if line and (best is None or len(cut) > len(best)):
            best = cut
    return best


def test_arm_non_rim_example():
    # (4,3)/(2) in rho_4 has (1,3) strictly north-west of (2,4), so it is not a rim
    theta = make_skew((2,), (4, 3), OG(4))
    assert theta.boxes == {(1, 3), (1, 4), (2, 2), (2, 3), (2, 4)}
    with pytest.raises(NotARim):
        northeast_arm(theta)
    arm = northeast_arm(theta, require_rim=False)
    assert arm.arm == _brute_arm(theta.boxes) == {(1, 4)}
    assert arm.a == 1 and arm.connected


def test_arm_empty():
    with pytest.raises(EmptyShape):
        northeast_arm(SkewShape.from_boxes([], shifted=True))


@pytest.mark.parametrize("space", [OG(6), LG(5)])
def test_arm_matches_brute_force_on_rims(space):
    for theta in _all_skews(space):
        if not theta or not diagram_stats(theta).isRim:
            continue
        arm = northeast_arm(theta)
        assert arm.arm == _brute_arm(theta.boxes)
        assert arm.arm | arm.rest.boxes == theta.boxes
        assert not (arm.arm & arm.rest.boxes)
        rows = {r for r, _ in theta.boxes}
        cols = {c for _, c in theta.boxes}
        assert (not arm.rest) == (len(rows) == 1 or len(cols) == 1)
        # a row and a column can only tie as a single box
        if len({r for r, _ in arm.arm}) == 1 and len({c for _, c in arm.arm}) == 1:
            assert arm.a == 1 and arm.armIsRow


# -- hypothesis ---------------------------------------------------------------------------


@st.composite
def strict_pair(draw):
    n = draw(st.integers(1, 9))
    nu = tuple(sorted(draw(st.sets(st.integers(1, n))), reverse=True))
    lam = []
    prev = None
    for part in nu:
        cap = part if prev is None else min(part, prev - 1)
        if cap <= 0:
            break
        x = draw(st.integers(0, cap))
        if x == 0:
            break
        lam.append(x)
        prev = x
    return n, tuple(lam), nu


@given(strict_pair())
def test_shifted_skew_invariants(data):
    n, lam, nu = data
    space = OG(n)
    theta = make_skew(lam, nu, space)
    assert len(theta) == sum(nu) - sum(lam)
    assert all(space.box_fits(b) for b in theta.boxes)
    st_ = diagram_stats(theta)
    assert st_.isRim == (st_.d == st_.weight)
    assert diagram_stats(SkewShape.from_boxes(theta.boxes, True)) == st_


@given(st.integers(1, 6), st.integers(1, 6), st.data())
def test_rect_dual_involution_random(m, k, data):
    space = RectA(m, k)
    part = data.draw(st.sampled_from(space.partitions()))
    assert dual_partition(dual_partition(part, space), space) == part


def test_combinations_sanity():
    # the staircase enumerator is the power set of {1..n}
    assert set(OG(4).partitions()) == {
        tuple(sorted(c, reverse=True)) for r in range(5) for c in combinations(range(1, 5), r)
    }
