import pytest

from cgb import gale
from cgb.board import BoardError, validate
from cgb.generators import gen_hex_dual, gen_random
from cgb.rules import BLUE, RED, TheoremViolation, make_coloring, winner

from conftest import all_full_colorings


def test_augment_minimal_counts(minimal_hex):
    g = gale.augment(minimal_hex)
    d = g.d_board
    assert (d.vertex_count, len(d.edges), len(d.triangles)) == (8, 17, 10)
    assert d.euler_characteristic() == 1
    assert validate(d).ok


@pytest.mark.parametrize("board", [gen_hex_dual(2, 2), gen_hex_dual(3, 3), gen_hex_dual(3, 5)])
def test_augment_adds_four_and_boundary_is_square(board):
    g = gale.augment(board)
    d = g.d_board
    assert d.vertex_count == board.vertex_count + 4
    assert validate(d).ok
    assert d.boundary_cycle == g.square
    assert [c for c in g.pre_coloring if c is not None] == [RED, RED, BLUE, BLUE]
    assert g.pre_coloring[g.r_minus] is RED and g.pre_coloring[g.b_plus] is BLUE


def test_augment_rejects_invalid(minimal_y):
    with pytest.raises(BoardError):
        gale.augment(minimal_y)


def test_classify_diagonal_example(minimal_hex):
    g = gale.augment(minimal_hex)
    col = g.lift(make_coloring(4, red=[0, 2], blue=[1, 3]))
    p = gale.classify(g, col)
    # r+ fans onto R2 = (2, 3) so meets 2; 0-2 diagonal; r- fans onto R1 = (0, 1)
    assert p.v_plus == {g.r_plus, 2, 0, g.r_minus}
    assert p.v_minus == set()
    assert p.w_plus == {g.b_plus, 3}
    assert p.w_minus == {g.b_minus, 1}
    rr = gale.retraction_check(g, p)
    assert rr.simplicial and not rr.identity_on_s and rr.cross_edges == ()
    out = gale.winner_from_classification(p)
    assert out.color is RED and {g.r_minus, g.r_plus} <= out.witness.vertices
    assert out.color is winner(minimal_hex, make_coloring(4, red=[0, 2], blue=[1, 3])).color


def test_classify_all_red(minimal_hex):
    g = gale.augment(minimal_hex)
    p = gale.classify(g, g.lift(make_coloring(4, red=range(4))))
    assert p.v_plus == {0, 1, 2, 3, g.r_minus, g.r_plus}
    assert p.w_minus == {g.b_minus} and p.w_plus == {g.b_plus}
    assert gale.winner_from_classification(p).color is RED


def test_classify_all_blue(minimal_hex):
    g = gale.augment(minimal_hex)
    p = gale.classify(g, g.lift(make_coloring(4, blue=range(4))))
    rr = gale.retraction_check(g, p)
    assert g.b_minus in p.w_plus and not rr.identity_on_s
    assert gale.winner_from_classification(p).color is BLUE


def test_classify_errors(minimal_hex):
    g = gale.augment(minimal_hex)
    with pytest.raises(ValueError):
        gale.classify(g, g.lift(make_coloring(4, red=[0])))
    flipped = list(g.lift(make_coloring(4, red=range(4))))
    flipped[g.r_minus] = BLUE
    with pytest.raises(ValueError):
        gale.classify(g, tuple(flipped))


@pytest.mark.parametrize("board", [gen_hex_dual(2, 2), gen_hex_dual(3, 3), gen_random(9, 4, 5)])
def test_exhaustive_gale_checks(board):
    g = gale.augment(board)
    n = board.vertex_count
    for col in all_full_colorings(n):
        p = gale.classify(g, g.lift(col))
        blocks = p.blocks()
        assert sum(len(b) for b in blocks) == g.d_board.vertex_count
        assert set().union(*blocks) == set(range(g.d_board.vertex_count))
        assert g.r_plus in p.v_plus and g.b_plus in p.w_plus
        rr = gale.retraction_check(g, p)
        assert rr.simplicial and rr.cross_edges == () and not rr.identity_on_s
        assert gale.winner_from_classification(p).color is winner(board, col).color
        # the augmented board played as Hex with its single-edge sides agrees too
        assert winner(g.d_board, g.lift(col)).color is winner(board, col).color


def test_partition_with_both_connected_is_a_violation(minimal_hex):
    g = gale.augment(minimal_hex)
    p = gale.classify(g, g.lift(make_coloring(4, red=[0, 2], blue=[1, 3])))
    fake = gale.GalePartition(p.v_plus, p.v_minus, p.w_plus | {g.b_minus}, p.w_minus - {g.b_minus},
                              *g.apexes)
    with pytest.raises(TheoremViolation):
        gale.winner_from_classification(fake)


def test_identity_on_s_detected_when_no_winner(minimal_hex):
    g = gale.augment(minimal_hex)
    p = gale.classify(g, g.lift(make_coloring(4, red=[0, 2], blue=[1, 3])))
    fake = gale.GalePartition(frozenset({g.r_plus, 2}), frozenset({0, g.r_minus}), p.w_plus, p.w_minus,
                              *g.apexes)
    rr = gale.retraction_check(g, fake)
    assert rr.identity_on_s
    assert rr.cross_edges  # the 0-2 diagonal joins V+ and V-
    assert not gale.winner_from_classification(fake).decided
    assert gale.winner_from_classification(fake).witness is None
