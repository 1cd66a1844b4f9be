import random

import pytest

from helpers import codes
from vbraid import gauss_moves as gm
from vbraid.errors import MoveNotApplicable, ParseError
from vbraid.gauss import components, format_gauss, parse_gauss, validate_gauss
from vbraid.invariants import f_poly, odd_writhe

EMPTY = parse_gauss("")


def test_r1_insert_examples():
    assert format_gauss(gm.r1_insert(EMPTY, 0, 0, "O", 1)) == "O1+,U1+"
    g = parse_gauss("O1+,U1+")
    assert format_gauss(gm.r1_insert(g, 0, 1, "U", -1)) == "O1+,U2-,O2-,U1+"


def test_r1_delete_wraps_around():
    g = parse_gauss("U1+,O2+,U2+,O1+")
    assert format_gauss(gm.r1_delete(g, 0, 3)) == "O1+,U1+"


def test_r2_insert_example():
    assert format_gauss(gm.r2_insert(EMPTY, 0, 0, 0, 0)) == "O1+,O2-,U2-,U1+"


def test_r2_delete_needs_pattern():
    with pytest.raises(MoveNotApplicable, match="pattern-not-found"):
        gm.r2_delete(parse_gauss("O1+,U1+"), 0, 0, 0, 1)


def test_r1_delete_needs_pattern():
    with pytest.raises(MoveNotApplicable, match="pattern-not-found"):
        gm.r1_delete(parse_gauss("O1+,U2+,O2+,U1+"), 0, 0)


def test_inserts_keep_f_poly_and_validity():
    rng = random.Random(21)
    for g in codes(60, seed=21):
        f = f_poly(g)
        c = rng.randrange(len(g.components))
        gap = rng.randint(0, len(g.components[c]))
        for h in (gm.r1_insert(g, c, gap, rng.choice("OU"), rng.choice((1, -1))),
                  gm.r2_insert(g, c, gap, rng.randrange(len(g.components)), 0,
                               rng.choice((1, -1)), rng.random() < 0.5)):
            assert validate_gauss(h) == []
            assert f_poly(h) == f


def test_forbidden_over_transposes():
    g = parse_gauss("O1+,O2+,U1+,U2+")
    h = gm.forbidden_over(g, 0, 0)
    assert format_gauss(h) == "O2+,O1+,U1+,U2+"
    assert odd_writhe(g) == 2 and odd_writhe(h) == 0
    assert components(g) == components(h) == 1


def test_forbidden_under_transposes():
    g = parse_gauss("O1+,O2+,U1+,U2+")
    h = gm.forbidden_under(g, 0, 2)
    assert format_gauss(h) == "O1+,O2+,U2+,U1+"
    assert odd_writhe(h) == 0


def test_forbidden_not_applicable():
    with pytest.raises(MoveNotApplicable, match="not-applicable"):
        gm.forbidden_over(parse_gauss("O1+,U1+"), 0, 0)


def test_nested_chord_code_has_no_over_pair():
    # nested chords 1221: no two consecutive Over passes anywhere
    g = parse_gauss("O1+,U2+,O2+,U1+")
    assert odd_writhe(g) == 0
    for pos in range(4):
        with pytest.raises(MoveNotApplicable):
            gm.forbidden_over(g, 0, pos)


def test_apply_gauss_move_records():
    g = gm.apply_gauss_move(EMPTY, '{"move": "r1_insert", "comp": 0, "gap": 0}')
    assert format_gauss(g) == "O1+,U1+"
    assert gm.apply_gauss_move(g, {"move": "r1_delete", "comp": 0, "pos": 0}) == EMPTY
    with pytest.raises(ParseError):
        gm.apply_gauss_move(g, {"move": "r3"})
    with pytest.raises(ParseError):
        gm.apply_gauss_move(g, {"move": "r1_delete", "comp": 0, "pos": 0, "bogus": 1})
