"""Boards: recognition, symmetry, composition, hulls and rook enumeration."""

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from skewrook.boards import (
    MAX_WIDTH,
    Board,
    RookConfig,
    all_skew_ferrers_boards,
    block_sharp,
    col_lengths,
    covers,
    enumerate_rook_configs,
    flip_ud,
    intersect,
    is_ferrers,
    is_skew_ferrers,
    left_hull,
    max_configs,
    ones,
    right_hull,
    rotate180,
    row_lengths,
    triangular,
    zeros,
)
from skewrook.permutations import Permutation, all_permutations

P = Permutation.from_text

AZTEC_4 = "\n".join(
    [
        "...##...",
        "..####..",
        ".######.",
        "########",
        "########",
        ".######.",
        "..####..",
        "...##...",
    ]
)

# two small fixtures: a left-aligned shape and a right-aligned one
LAMBDA_BOARD = Board.parse("###.\n##..\n....")
MU_BOARD = Board.parse("###\n###\n..#")


@st.composite
def boards(draw, max_side=5):
    m = draw(st.integers(1, max_side))
    n = draw(st.integers(1, max_side))
    rows = draw(st.lists(st.integers(0, (1 << n) - 1), min_size=m, max_size=m))
    return Board(tuple(rows), n)


def test_parse_round_trip_frozen():
    b = Board.parse("#.\n.#")
    assert b.to_text() == "#.\n.#"
    assert b.dims == (2, 2)
    assert b.cell(1, 1) and not b.cell(1, 2)


@given(boards())
def test_parse_round_trips(b):
    assert Board.parse(b.to_text()) == b


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        Board.parse("#x")
    with pytest.raises(ValueError):
        Board.parse("##\n#")
    with pytest.raises(ValueError):
        Board.parse("")


def test_width_limit():
    Board((0,), MAX_WIDTH)
    with pytest.raises(ValueError):
        Board((0,), MAX_WIDTH + 1)
    with pytest.raises(ValueError):
        Board((1 << 3,), 3)  # mask bit outside the width


def test_standard_boards():
    assert ones(2, 2).count_ones() == 4
    assert zeros(2, 3).count_ones() == 0
    assert triangular(1) == Board.parse("#")
    assert triangular(3) == Board.parse("###\n##.\n#..")
    assert ones(2, 3).dims == (2, 3)


def test_profiles_frozen():
    assert row_lengths(LAMBDA_BOARD) == (3, 2, 0)
    assert col_lengths(LAMBDA_BOARD) == (2, 2, 1, 0)
    assert row_lengths(MU_BOARD) == (3, 3, 1)
    assert col_lengths(MU_BOARD) == (2, 2, 3)
    assert row_lengths(ones(2, 3)) == (3, 3)
    assert col_lengths(ones(2, 3)) == (2, 2, 2)


@given(boards())
def test_profiles_count_cells(b):
    assert sum(row_lengths(b)) == b.count_ones()
    assert sum(col_lengths(b)) == b.count_ones()
    assert b.count_ones() + b.count_zeros() == b.dims[0] * b.dims[1]


def test_flip_and_rotate_frozen():
    assert flip_ud(triangular(3)) == Board.parse("#..\n##.\n###")
    assert rotate180(ones(3, 2)) == ones(3, 2)
    assert rotate180(triangular(2)) == Board.parse(".#\n##")


@given(boards())
def test_flip_and_rotate_are_involutions(b):
    assert flip_ud(flip_ud(b)) == b
    assert rotate180(rotate180(b)) == b
    assert row_lengths(flip_ud(b)) == tuple(reversed(row_lengths(b)))
    assert col_lengths(rotate180(b)) == tuple(reversed(col_lengths(b)))


def test_is_ferrers_frozen():
    assert is_ferrers(LAMBDA_BOARD, "left")
    assert not is_ferrers(LAMBDA_BOARD, "right")
    assert is_ferrers(MU_BOARD, "right")
    assert is_ferrers(triangular(4), "left")
    assert is_ferrers(ones(2, 3), "left") and is_ferrers(ones(2, 3), "right")
    assert not is_ferrers(Board.parse(".#\n##"), "left")
    with pytest.raises(ValueError):
        is_ferrers(ones(1, 1), "diagonal")


def test_ferrers_local_condition_is_definitional():
    # left-aligned: each one-cell has ones directly left and directly above
    for b in _all_boards(3, 3):
        want = all(
            (j == 1 or b.cell(i, j - 1)) and (i == 1 or b.cell(i - 1, j))
            for i, j in b.one_cells()
        )
        assert is_ferrers(b, "left") == want, b.to_text()


def _all_boards(max_m, max_n):
    for m in range(1, max_m + 1):
        for n in range(1, max_n + 1):
            for rows in itertools.product(range(1 << n), repeat=m):
                yield Board(rows, n)


@pytest.mark.parametrize("align", ["right", "left"])
def test_skew_recognition_matches_difference_definition(align):
    # is_skew_ferrers against explicit lambda-minus-mu enumeration
    for m in range(1, 5):
        for n in range(1, 5):
            wanted = set(all_skew_ferrers_boards(m, n, align))
            for rows in itertools.product(range(1 << n), repeat=m):
                b = Board(rows, n)
                assert is_skew_ferrers(b, align) == (b in wanted), b.to_text()


@given(boards())
def test_skew_alignments_mirror(b):
    assert is_skew_ferrers(b, "left") == is_skew_ferrers(b.mirror_lr(), "right")


@given(boards(max_side=4))
def test_ferrers_boards_are_skew(b):
    for align in ("left", "right"):
        if is_ferrers(b, align):
            assert is_skew_ferrers(b, align)


def test_block_sharp_frozen():
    assert block_sharp(ones(1, 1), ones(1, 1)) == ones(2, 2)
    assert block_sharp(triangular(1), triangular(1)) == ones(2, 2)
    got = block_sharp(triangular(2), ones(1, 1))
    assert got == Board.parse("###\n#.#\n###")
    assert block_sharp(zeros(2, 2), zeros(3, 3)).dims == (5, 5)
    with pytest.raises(ValueError):
        block_sharp(ones(1, 2), ones(1, 1))


@given(boards(max_side=3), boards(max_side=3))
def test_block_sharp_layout(a, b):
    if a.dims[0] != a.dims[1] or b.dims[0] != b.dims[1]:
        return
    n, m = a.dims[0], b.dims[0]
    c = block_sharp(a, b)
    assert c.dims == (m + n, m + n)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            assert c.cell(i, j) == a.cell(i, j)
        for j in range(n + 1, n + m + 1):
            assert c.cell(i, j)
    for i in range(n + 1, n + m + 1):
        for j in range(1, n + 1):
            assert c.cell(i, j)
        for j in range(n + 1, n + m + 1):
            assert c.cell(i, j) == b.cell(i - n, j - n)


def test_right_hull_frozen():
    ident = Permutation.identity(4)
    assert right_hull(ident) == Board.parse("#...\n.#..\n..#.\n...#")
    h = right_hull(P("35124"))
    assert h.to_text() == "###..\n#####\n#####\n.####\n...##"
    assert right_hull(P("231")) == Board.parse("##.\n###\n###")


def test_aztec_intersection_frozen():
    got = intersect(right_hull(P("56781234")), left_hull(P("43218765")))
    assert got.to_text() == AZTEC_4


@given(st.integers(1, 6).flatmap(lambda n: st.permutations(range(1, n + 1))))
def test_hull_covers_and_flip_identity(word):
    p = Permutation(tuple(word))
    h = right_hull(p)
    assert is_skew_ferrers(h, "right")
    assert all(h.cell(i, j) for i, j in enumerate(p.word, 1))
    assert left_hull(p) == flip_ud(right_hull(p.flip_ud()))


def test_right_hull_minimality_exhaustive():
    for n in range(1, 4):
        skews = all_skew_ferrers_boards(n, n, "right")
        for p in all_permutations(n):
            h = right_hull(p)
            cells = tuple(enumerate(p.word, 1))
            for b in skews:
                if all(b.cell(i, j) for i, j in cells):
                    assert all(b.cell(i, j) for i, j in h.one_cells())


def test_intersect():
    b = Board.parse("#.\n##")
    assert intersect(b, ones(2, 2)) == b
    assert intersect(b, b) == b
    assert intersect(b, Board.parse(".#\n##")) == Board.parse("..\n##")
    with pytest.raises(ValueError):
        intersect(b, ones(2, 3))


def test_rook_config_validation():
    RookConfig.of((1, 1), (2, 2))
    with pytest.raises(ValueError):
        RookConfig.of((1, 1), (1, 2))
    with pytest.raises(ValueError):
        RookConfig.of((1, 1), (2, 1))


def test_covers():
    assert covers(triangular(2), RookConfig.of())
    assert covers(triangular(2), RookConfig.of((1, 2), (2, 1)))
    assert not covers(triangular(2), RookConfig.of((2, 2)))
    assert not covers(ones(2, 2), RookConfig.of((3, 1)))


@given(st.integers(1, 5).flatmap(lambda n: st.permutations(range(1, n + 1))))
def test_hull_covers_its_permutation(word):
    p = Permutation(tuple(word))
    config = RookConfig.of(*enumerate(p.word, 1))
    assert covers(right_hull(p), config)


def test_enumerate_rook_configs_frozen():
    assert list(enumerate_rook_configs(zeros(2, 2), 0)) == [RookConfig.of()]
    assert len(list(enumerate_rook_configs(ones(2, 2), 1))) == 4
    assert len(list(enumerate_rook_configs(ones(3, 3), 3))) == 6
    assert list(enumerate_rook_configs(ones(2, 2), 3)) == []


@given(boards(max_side=4), st.integers(0, 4))
def test_enumeration_is_duplicate_free_and_covered(b, k):
    configs = list(enumerate_rook_configs(b, k))
    assert len(configs) == len(set(configs))
    for c in configs:
        assert len(c.cells) == k
        assert covers(b, c)


@given(boards(max_side=4), st.integers(0, 3))
def test_enumeration_count_is_symmetry_invariant(b, k):
    count = sum(1 for _ in enumerate_rook_configs(b, k))
    assert count == sum(1 for _ in enumerate_rook_configs(flip_ud(b), k))
    assert count == sum(1 for _ in enumerate_rook_configs(rotate180(b), k))


def test_max_configs_frozen():
    assert max_configs(ones(3, 3)) == set(all_permutations(3))
    assert max_configs(triangular(2)) == {P("21")}
    assert max_configs(right_hull(P("231"))) == {
        P("123"),
        P("132"),
        P("213"),
        P("231"),
    }
    with pytest.raises(ValueError):
        max_configs(ones(2, 3))


@given(boards(max_side=4))
def test_max_configs_matches_enumeration(b):
    if b.dims[0] != b.dims[1]:
        return
    n = b.dims[0]
    want = {
        Permutation(tuple(j for _, j in sorted(c.cells)))
        for c in enumerate_rook_configs(b, n)
    }
    assert max_configs(b) == want


def test_all_skew_ferrers_boards_is_deduped_and_sorted():
    got = all_skew_ferrers_boards(3, 3, "right")
    assert len(got) == len(set(got))
    assert list(got) == sorted(got, key=lambda b: b.rows)
    for b in got:
        assert is_skew_ferrers(b, "right")
