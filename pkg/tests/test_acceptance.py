"""Exit criteria, each checked at its stated tolerance (exact equality throughout).

Every test prints one ``criterion N: PASS|FAIL`` line; sub-checks print as
``criterion Na``.  Run alone with ``pytest tests/test_acceptance.py -v``.
"""

from __future__ import annotations

import random
import time

import pytest

from helpers import MORSE_CORPUS, codes, constructed_pair, polys, words
from vbraid import gauss_moves as gm
from vbraid.errors import MoveNotApplicable
from vbraid.gauss import close_braid, components, format_gauss, parse_gauss
from vbraid.invariants import bracket_braid, bracket_gauss, f_poly, f_poly_braid, odd_writhe
from vbraid.morse import (braid_morse, evaluate_morse, format_morse, parse_morse,
                          random_morse)
from vbraid.moves import (allowed_sides, conj_real, conj_virtual, destab, lmove_classical,
                          lmove_virtual, stab, thread_left, thread_right)
from vbraid.poly import format_poly, parse_poly
from vbraid.search import DISTINGUISHED, NOT_FOUND, SearchBudget, equiv_within, verify
from vbraid.words import BraidWord, free_reduce, parse_word, print_word

pytestmark = pytest.mark.acceptance


@pytest.fixture
def report(capsys):
    def emit(label: str, ok: bool, detail: str = "") -> None:
        with capsys.disabled():
            print(f"\ncriterion {label}: {'PASS' if ok else 'FAIL'}" + (f"  ({detail})" if detail else ""))
    return emit


def _profile(w: BraidWord) -> tuple:
    g = close_braid(w)
    comps = components(g)
    return f_poly(g, None), comps, odd_writhe(g) if comps == 1 else None


def _moved_words(w: BraidWord, rng: random.Random):
    n = w.strands
    if n > 1:
        i = rng.randint(1, n - 1)
        yield "conj_virtual", conj_virtual(w, i)
        for eps in (1, -1):
            yield "conj_real", conj_real(w, i, eps)
    yield "stab virtual", stab(w, "virtual")
    for eps in (1, -1):
        yield "stab real", stab(w, "real", eps)
        yield "thread_right", thread_right(w, eps)
        yield "thread_left", thread_left(w, eps)
    for _ in range(3):
        p, j = rng.randint(0, len(w)), rng.randint(1, n)
        yield "lmove virtual", lmove_virtual(w, p, j, "virtual")
        for eps in (1, -1):
            yield "lmove real", lmove_virtual(w, p, j, "real", eps)
        for side in allowed_sides(w, j):
            for flavor in ("over", "under"):
                for eps in (None, 1, -1):
                    yield "lmove classical", lmove_classical(w, p, j, flavor, eps, side)


def test_1_move_invariance(report):
    t0 = time.perf_counter()
    rng = random.Random(2024)
    failures = []
    checked = 0
    for w in words(200, seed=1):
        base = _profile(w)
        for name, moved in _moved_words(w, rng):
            checked += 1
            if _profile(moved) != base:
                failures.append(f"{name} on {print_word(w)}")
    elapsed = time.perf_counter() - t0
    ok = not failures and elapsed < 120
    report("1", ok, f"{checked} moved words, {len(failures)} mismatches, {elapsed:.1f}s")
    assert not failures, failures[:5]
    assert elapsed < 120


GOLDEN_WORDS = ["2 | s1", "2 | ", "2 | s1 s1 s1", "3 | s1 s2' s1 s2'", "2 | v1 s1 v1 s1",
                "3 | s1 v2 s1'", "1 | "]


def test_2_dual_oracle(report):
    batch = words(200, seed=2) + [parse_word(t) for t in GOLDEN_WORDS]
    bad = [print_word(w) for w in batch if bracket_braid(w) != bracket_gauss(close_braid(w))]
    report("2", not bad, f"{len(batch)} words, {len(bad)} disagreements")
    assert not bad, bad[:5]


def test_3_golden_values(report):
    kink = close_braid(parse_word("2 | s1"))
    unlink = close_braid(parse_word("2 | "))
    checks = {
        "3a bracket(close([s1] on 2)) = -A^3": bracket_gauss(kink) == parse_poly("-A^3"),
        "3b f(close([s1] on 2)) = 1": f_poly_braid(parse_word("2 | s1")) == parse_poly("1"),
        "3c bracket(close(empty on 2)) = -A^2 - A^-2": bracket_gauss(unlink) == parse_poly("-A^2 - A^-2"),
        "3d odd_writhe(O1+,U2+,O2+,U1+) = 2": odd_writhe(parse_gauss("O1+,U2+,O2+,U1+")) == 2,
    }
    for label, ok in checks.items():
        report(label, ok)
    report("3", all(checks.values()))
    assert all(checks.values()), [k for k, ok in checks.items() if not ok]


def _r2_positions(g, c1, g1, c2, g2):
    if c1 != c2:
        return g1, g2
    if g1 <= g2:
        return g1, g2 + 2
    return g1 + 2, g2


def test_4_inverse_pairs(report):
    rng = random.Random(4)
    bad = []
    for w in words(100, seed=4):
        w = free_reduce(w)
        for flavor, eps in (("virtual", 1), ("real", 1), ("real", -1)):
            if destab(stab(w, flavor, eps)) != w:
                bad.append(f"stab {flavor} {eps} on {print_word(w)}")
    for g in codes(100, seed=4):
        c = rng.randrange(len(g.components))
        gap = rng.randint(0, len(g.components[c]))
        for role in ("O", "U"):
            for sign in (1, -1):
                if gm.r1_delete(gm.r1_insert(g, c, gap, role, sign), c, gap) != g:
                    bad.append(f"r1 on {format_gauss(g)}")
        c1, c2 = rng.randrange(len(g.components)), rng.randrange(len(g.components))
        g1, g2 = rng.randint(0, len(g.components[c1])), rng.randint(0, len(g.components[c2]))
        p1, p2 = _r2_positions(g, c1, g1, c2, g2)
        for parallel in (False, True):
            for sign in (1, -1):
                ins = gm.r2_insert(g, c1, g1, c2, g2, sign, parallel)
                if gm.r2_delete(ins, c1, p1, c2, p2) != g:
                    bad.append(f"r2 on {format_gauss(g)} at {(c1, g1, c2, g2, parallel)}")
    report("4", not bad, f"{len(bad)} failures")
    assert not bad, bad[:5]


def test_5_forbidden_move_witness(report):
    g = parse_gauss("O1+,U2+,O2+,U1+")
    before = odd_writhe(g)
    results = []
    for pos in range(len(g.components[0])):
        try:
            h = gm.forbidden_over(g, 0, pos)
        except MoveNotApplicable:
            continue
        results.append((odd_writhe(h), components(h)))
    ok = before == 2 and (0, 1) in results
    report("5", ok, f"odd_writhe before={before}, applicable forbidden_over results={results}")
    assert ok


def test_6_braiding_round_trip(report):
    t0 = time.perf_counter()
    corpus = [parse_morse(t) for t in MORSE_CORPUS] + [random_morse(s) for s in range(100)]
    bad = []
    for m in corpus:
        g = evaluate_morse(m)
        b = braid_morse(m)
        if f_poly_braid(b) != f_poly(g) or components(close_braid(b)) != components(g):
            bad.append(format_morse(m))
    elapsed = time.perf_counter() - t0
    report("6", not bad and elapsed < 60, f"{len(corpus)} Morse words, {len(bad)} mismatches, {elapsed:.1f}s")
    assert not bad, bad[:5]
    assert elapsed < 60


DISTINGUISHED_PAIRS = [("2 | s1", "2 | "), ("2 | s1 s1 s1", "2 | s1"), ("3 | s1 s1 s1", "2 | s1' s1' s1'"),
                       ("3 | s1 s2' s1 s2'", "1 | "), ("2 | s1 s1", "2 | s1 s1 s1 s1")]


def test_7_search_soundness(report):
    budget = SearchBudget(max_strands=8, max_len=24, max_nodes=200_000)
    bad = []
    for k in range(20):
        base, moved, _ = constructed_pair(100 + k)
        res = equiv_within(moved, base, budget)
        if not (res.equivalent and verify(moved, base, res)):
            bad.append(f"{print_word(moved)} vs {print_word(base)}: {res.verdict}")
    for a, b in DISTINGUISHED_PAIRS:
        res = equiv_within(parse_word(a), parse_word(b), budget)
        if res.verdict != NOT_FOUND or not res.note.startswith(DISTINGUISHED):
            bad.append(f"{a} vs {b} not screened: {res.verdict} {res.note}")
    report("7", not bad, f"20 constructed + {len(DISTINGUISHED_PAIRS)} distinguished pairs, {len(bad)} failures")
    assert not bad, bad


def test_8_round_trips(report):
    rng = random.Random(8)
    bad = 0
    for w in words(1000, seed=8, max_n=9, max_len=20):
        text = print_word(w)
        bad += parse_word(text) != w or print_word(parse_word(text)) != text
    for g in codes(1000, seed=8):
        text = format_gauss(g)
        bad += parse_gauss(text) != g or format_gauss(parse_gauss(text)) != text
    for s in range(1000):
        m = random_morse(rng.randrange(1 << 30))
        text = format_morse(m)
        bad += parse_morse(text) != m or format_morse(parse_morse(text)) != text
    for p in polys(1000, seed=8):
        text = format_poly(p)
        bad += parse_poly(text) != p or format_poly(parse_poly(text)) != text
    report("8", bad == 0, f"4000 instances, {bad} unstable")
    assert bad == 0
