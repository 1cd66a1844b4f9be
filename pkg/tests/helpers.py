"""Seeded generators shared by the test modules."""

from __future__ import annotations

import random

from vbraid.gauss import GaussCode, close_braid
from vbraid.moves import MoveRecord, apply_move
from vbraid.poly import LaurentPoly
from vbraid.words import BraidWord, random_word


MORSE_CORPUS = [
    "cup1 cap1",
    "cup1 x1+ cap1",
    "cup1 x1- cap1",
    "cup1 v1 cap1",
    "cup1 cup1 cap1 cap1",
    "cup1 cup3 cap1 cap1",
    "cup1 cup1 v2 cap1 cap1",
    "cup1 cup1 x2+ x2+ cap1 cap1",
    "cup1 cup1 x2+ x2- cap1 cap1",
    "cup1 cup3 x2+ x2+ x2+ cap1 cap1",
    "cup1 cup3 x2- x2- x2- cap1 cap1",
    "cup1 cup3 x2+ v2 x2+ cap1 cap1",
    "cup1 cup3 x2+ x2+ cap1 cap1",
    "cup1 cup3 x2- x1+ x2- x3+ cap1 cap1",
    "cup1 cup3 x2+ x1- x3- x2+ cap1 cap1",
    "cup1 cup3 v2 x1+ v2 cap1 cap1",
    "cup1 cup3 x2+ v1 x2- v3 cap1 cap1",
    "cup1 cup1 cup1 x2+ v4 x3- cap1 cap1 cap1",
    "cup1 cup3 cup5 x2+ x4- v3 x2+ cap3 cap1 cap1",
    "cup1 x1+ cup1 v2 x1- cap2 cap1",
]


def words(count: int, seed: int, max_n: int = 5, max_len: int = 12) -> list[BraidWord]:
    rng = random.Random(seed)
    out = []
    for k in range(count):
        n = rng.randint(2, max_n)
        out.append(random_word(n, rng.randint(0, max_len), rng.randrange(1 << 30)))
    return out


def codes(count: int, seed: int) -> list[GaussCode]:
    return [close_braid(w) for w in words(count, seed, max_n=4, max_len=8)]


def polys(count: int, seed: int) -> list[LaurentPoly]:
    rng = random.Random(seed)
    return [LaurentPoly({rng.randint(-20, 20): rng.randint(-9, 9) for _ in range(rng.randint(0, 6))})
            for _ in range(count)]


def markov_step(w: BraidWord, rng: random.Random) -> MoveRecord:
    """One random forward Markov-type move applicable to ``w``."""
    eps = rng.choice((1, -1))
    opts = [MoveRecord.make("stab", flavor="virtual"),
            MoveRecord.make("stab", flavor="real", eps=eps),
            MoveRecord.make("thread_right", eps=eps),
            MoveRecord.make("thread_left", eps=eps)]
    if w.strands > 1:
        i = rng.randint(1, w.strands - 1)
        opts += [MoveRecord.make("conj_virtual", i=i), MoveRecord.make("conj_real", i=i, eps=eps)]
    return rng.choice(opts)


def constructed_pair(seed: int) -> tuple[BraidWord, BraidWord, list[MoveRecord]]:
    """A word and its image under one to three random moves."""
    rng = random.Random(seed)
    base = random_word(rng.randint(2, 3), rng.randint(0, 5), seed)
    moved, recs = base, []
    for _ in range(rng.randint(1, 3)):
        rec = markov_step(moved, rng)
        moved = apply_move(moved, rec)
        recs.append(rec)
    return base, moved, recs
