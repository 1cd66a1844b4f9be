import random

import pytest

from helpers import words
from vbraid.errors import ParseError
from vbraid.gauss import (GaussCode, canonical, close_braid, closure_components, code_writhe,
                          components, format_gauss, gauss_from_json, gauss_to_json, parse_gauss,
                          relabel, validate_gauss)
from vbraid.words import parse_word, underlying_permutation, writhe


def test_kink_closure():
    assert format_gauss(close_braid(parse_word("2 | s1"))) == "O1+,U1+"


def test_virtual_closure_is_empty():
    g = close_braid(parse_word("2 | v1"))
    assert components(g) == 1 and g.crossings == 0
    assert format_gauss(g) == ""


def test_unlink_closure():
    g = close_braid(parse_word("2 | "))
    assert g.components == ((), ())
    assert format_gauss(g) == ";"


def test_negative_crossing_closure():
    # s1' on 2: the strand from position 2 passes over first
    g = close_braid(parse_word("2 | s1'"))
    assert format_gauss(canonical(g)) in ("O1-,U1-", "U1-,O1-")


@pytest.mark.parametrize("text, n", [("2 | s1", 1), ("3 | ", 3), ("3 | s1 v2", 1), ("4 | s1 s3", 2)])
def test_components(text, n):
    assert components(close_braid(parse_word(text))) == n
    assert closure_components(parse_word(text)) == n


def test_components_of_code():
    assert components(parse_gauss("O1+,U2+,O2+,U1+")) == 1


def test_components_match_permutation_cycles():
    for w in words(200, seed=11):
        assert components(close_braid(w)) == len(underlying_permutation(w).cycles())


def test_closure_is_valid_and_keeps_writhe():
    for w in words(200, seed=12):
        g = close_braid(w)
        assert validate_gauss(g) == []
        assert code_writhe(g) == writhe(w)


@pytest.mark.parametrize("text, needle", [
    ("O1+,O1+", "two Over passes"),
    ("O1+,U1-", "sign mismatch"),
    ("O1+", "expected 2"),
    ("O2+,U2+", "ids"),
])
def test_validate_violations(text, needle):
    problems = validate_gauss(parse_gauss(text))
    assert any(needle in p for p in problems), problems


def test_validate_ok():
    assert validate_gauss(parse_gauss("O1+,U1+")) == []


def test_canonical_is_rotation_and_relabel_invariant():
    g = parse_gauss("O1+,U2-,O2-,U1+")
    rotated = parse_gauss("O5-,U7+,O7+,U5-")
    assert canonical(g) == canonical(rotated)
    two = parse_gauss("O1+,U2+;O2+,U1+")
    swapped = parse_gauss("O1+,U2+;O2+,U1+".split(";")[1] + ";" + "O1+,U2+")
    assert canonical(two) == canonical(swapped)


def test_canonical_is_idempotent():
    rng = random.Random(3)
    for w in words(50, seed=13, max_n=4, max_len=8):
        g = close_braid(w)
        c = canonical(g)
        assert canonical(c) == c
        comps = list(g.components)
        rng.shuffle(comps)
        assert canonical(GaussCode(tuple(comps))) == c


def test_relabel_first_appearance():
    assert format_gauss(relabel(parse_gauss("U9+,O4-,O9+,U4-"))) == "U1+,O2-,O1+,U2-"


@pytest.mark.parametrize("bad", ["X1+", "O1", "O+", "O1+,,U1+", "O0+,U0+"])
def test_parse_errors(bad):
    with pytest.raises(ParseError):
        parse_gauss(bad)


def test_unicode_minus_and_json():
    g = parse_gauss("O1+,U1−")
    assert g.components[0][1].sign == -1
    h = parse_gauss("O1+,U2-;O2-,U1+")
    assert gauss_from_json(gauss_to_json(h)) == h
