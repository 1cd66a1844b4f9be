"""Markov-type moves on virtual braid words.

Conjugation, right stabilization and the two algebraic threadings are
instantiated literally from their word templates.  The geometric L-moves cut
the strand at position ``j`` after letter ``p`` and route the new strand pair
to a fresh vertical line at the edge of the braid; the transports between the
cut and that line are virtual (``lmove_virtual``) or run entirely over/under
the braid (``lmove_classical``).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Iterator

from .errors import MoveNotApplicable, NotAllowed, NotDestabilizable, ParseError
from .words import (BraidWord, Generator, Kind, apply_relation, free_reduce,
                    relation_sites, sigma, v)


def _check_sign(eps: int) -> None:
    if eps not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {eps}")


def _check_index(w: BraidWord, i: int) -> None:
    if not 1 <= i < w.strands:
        raise MoveNotApplicable(f"index {i} out of range for {w.strands} strands")


def conj_virtual(w: BraidWord, i: int) -> BraidWord:
    _check_index(w, i)
    return BraidWord(w.strands, (v(i),) + w.letters + (v(i),))


def conj_real(w: BraidWord, i: int, eps: int = 1) -> BraidWord:
    """sigma_i^-eps . w . sigma_i^eps"""
    _check_sign(eps)
    _check_index(w, i)
    return BraidWord(w.strands, (sigma(i, -eps),) + w.letters + (sigma(i, eps),))


def stab(w: BraidWord, flavor: str = "real", eps: int = 1) -> BraidWord:
    n = w.strands
    if flavor == "virtual":
        extra = v(n)
    elif flavor == "real":
        _check_sign(eps)
        extra = sigma(n, eps)
    else:
        raise ValueError(f"stabilization flavor must be 'virtual' or 'real', got {flavor!r}")
    return BraidWord(n + 1, w.letters + (extra,))


def destab(w: BraidWord) -> BraidWord:
    """Drop a final letter on index n-1 when it is the only one using that index."""
    r = free_reduce(w)
    top = r.strands - 1
    uses = [k for k, g in enumerate(r.letters) if g.index == top]
    if len(uses) != 1 or uses[0] != len(r.letters) - 1:
        raise NotDestabilizable(
            f"need exactly one letter on index {top}, in last position; found {len(uses)}")
    return BraidWord(r.strands - 1, r.letters[:-1])


def destab_letter(w: BraidWord) -> Generator:
    """The letter ``destab`` would remove."""
    destab(w)
    return free_reduce(w).letters[-1]


def _thread_right_suffix(n: int, eps: int) -> tuple[Generator, ...]:
    return (sigma(n, eps), v(n - 1), sigma(n, -eps))


def _thread_left_suffix(n: int, eps: int) -> tuple[Generator, ...]:
    return (v(n), v(n - 1), sigma(n - 1, -eps), v(n), sigma(n - 1, eps), v(n - 1), v(n))


def thread_right(w: BraidWord, eps: int = 1) -> BraidWord:
    """alpha -> alpha sigma_n^eps v_{n-1} sigma_n^-eps on n + 1 strands."""
    _check_sign(eps)
    n = w.strands
    if n < 2:
        raise MoveNotApplicable("threading needs at least 2 strands; embed the word first")
    return BraidWord(n + 1, w.letters + _thread_right_suffix(n, eps))


def thread_left(w: BraidWord, eps: int = 1) -> BraidWord:
    """alpha -> alpha v_n v_{n-1} sigma_{n-1}^-eps v_n sigma_{n-1}^eps v_{n-1} v_n."""
    _check_sign(eps)
    n = w.strands
    if n < 2:
        raise MoveNotApplicable("threading needs at least 2 strands; embed the word first")
    return BraidWord(n + 1, w.letters + _thread_left_suffix(n, eps))


def _unthread(w: BraidWord, suffix_of, eps: int) -> BraidWord:
    r = free_reduce(w)
    n = r.strands - 1
    if n < 2:
        raise MoveNotApplicable("word is too narrow to carry a threading")
    suffix = suffix_of(n, eps)
    body = r.letters[:len(r.letters) - len(suffix)]
    if r.letters[len(body):] != suffix or any(g.index >= n for g in body):
        raise MoveNotApplicable("word does not end in the threading template")
    return BraidWord(n, body)


def unthread_right(w: BraidWord, eps: int = 1) -> BraidWord:
    """Inverse of ``thread_right``."""
    _check_sign(eps)
    return _unthread(w, _thread_right_suffix, eps)


def unthread_left(w: BraidWord, eps: int = 1) -> BraidWord:
    """Inverse of ``thread_left``."""
    _check_sign(eps)
    return _unthread(w, _thread_left_suffix, eps)


def _check_cut(w: BraidWord, p: int, j: int) -> None:
    if not 0 <= p <= len(w.letters):
        raise MoveNotApplicable(f"cut position {p} outside 0..{len(w.letters)}")
    if not 1 <= j <= w.strands:
        raise MoveNotApplicable(f"cut strand {j} outside 1..{w.strands}")


def lmove_virtual(w: BraidWord, p: int, j: int, flavor: str = "virtual", eps: int = 1) -> BraidWord:
    """Basic L-move with a virtual (``flavor='virtual'``) or real in-box kink."""
    _check_cut(w, p, j)
    n = w.strands
    back = tuple(v(i) for i in range(j + 1, n + 1))
    if flavor == "virtual":
        t = tuple(v(i) for i in range(n, j - 1, -1))
    elif flavor == "real":
        _check_sign(eps)
        t = tuple(v(i) for i in range(n, j, -1)) + (sigma(j, eps),)
    else:
        raise ValueError(f"lmove flavor must be 'virtual' or 'real', got {flavor!r}")
    return BraidWord(n + 1, w.letters[:p] + t + back + w.letters[p:])


def allowed_sides(w: BraidWord, j: int) -> list[str]:
    """Sides free of virtual crossings for a classical L-move cut at strand ``j``.

    A virtual crossing v_i spans positions i..i+1; one touching the line of
    the cut blocks both sides.
    """
    vids = [g.index for g in w.letters if g.kind is Kind.V]
    sides = []
    if all(i < j - 1 for i in vids):
        sides.append("right")
    if all(i > j for i in vids):
        sides.append("left")
    return sides


def lmove_side(w: BraidWord, j: int) -> str:
    """Preferred routing side (right first), or raise NotAllowed."""
    sides = allowed_sides(w, j)
    if not sides:
        raise NotAllowed(f"virtual crossings on both sides of strand {j}")
    return sides[0]


def lmove_classical(w: BraidWord, p: int, j: int, flavor: str = "over",
                    eps: int | None = None, side: str | None = None) -> BraidWord:
    """Classical L-move: the new strand pair runs entirely over or under the braid.

    ``eps`` sets the sign of the in-box kink; by default the kink follows the
    transport (over strand on top).  ``side`` forces the routing side, which
    otherwise comes from ``lmove_side``.
    """
    _check_cut(w, p, j)
    if flavor not in ("over", "under"):
        raise ValueError(f"classical lmove flavor must be 'over' or 'under', got {flavor!r}")
    if side is None:
        side = lmove_side(w, j)
    elif side not in allowed_sides(w, j):
        raise NotAllowed(f"virtual crossings block the {side} side of strand {j}")
    n = w.strands
    over = flavor == "over"
    # moving strand travels leftward (sigma_i^-1 puts it over) or rightward (sigma_i)
    left = -1 if over else 1
    right = -left
    if eps is not None:
        _check_sign(eps)
    if side == "right":
        to_cut = tuple(sigma(i, left) for i in range(n, j, -1))
        kink = sigma(j, left if eps is None else eps)
        back = tuple(sigma(i, right) for i in range(j + 1, n + 1))
        body_a, body_b = w.letters[:p], w.letters[p:]
    elif side == "left":
        # new strand at position 1, everything else shifted one to the right
        to_cut = tuple(sigma(i, right) for i in range(1, j))
        kink = sigma(j, right if eps is None else eps)
        back = tuple(sigma(i, left) for i in range(j - 1, 0, -1))
        body_a = tuple(g.shifted(1) for g in w.letters[:p])
        body_b = tuple(g.shifted(1) for g in w.letters[p:])
    else:
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    return BraidWord(n + 1, body_a + to_cut + (kink,) + back + body_b)


# ---------------------------------------------------------------------------
# move records

@dataclass(frozen=True)
class MoveRecord:
    """A named move with its parameters, e.g. ``{"move": "thread_right", "eps": 1}``."""

    name: str
    params: tuple[tuple[str, Any], ...] = field(default=())

    @classmethod
    def make(cls, name: str, **params) -> MoveRecord:
        return cls(name, tuple(sorted(params.items())))

    def get(self, key: str, default=None):
        return dict(self.params).get(key, default)

    def to_json(self) -> dict:
        return {"move": self.name, **dict(self.params)}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    @classmethod
    def from_json(cls, data: dict | str) -> MoveRecord:
        if isinstance(data, str):
            try:
                data = json.loads(data)
            except json.JSONDecodeError as exc:
                raise ParseError(f"bad move JSON: {exc}", exc.pos) from exc
        if not isinstance(data, dict) or "move" not in data:
            raise ParseError("move record needs a 'move' field")
        params = {k: val for k, val in data.items() if k != "move"}
        return cls.make(str(data["move"]), **params)

    def apply(self, w: BraidWord) -> BraidWord:
        return apply_move(w, self)

    def __str__(self) -> str:
        return self.dumps()


def apply_move(w: BraidWord, rec: MoveRecord) -> BraidWord:
    """Apply ``rec`` to ``w``; the result is not free-reduced."""
    p = dict(rec.params)
    name = rec.name
    try:
        if name == "conj_virtual":
            return conj_virtual(w, int(p["i"]))
        if name == "conj_real":
            return conj_real(w, int(p["i"]), int(p.get("eps", 1)))
        if name == "stab":
            return stab(w, p.get("flavor", "real"), int(p.get("eps", 1)))
        if name == "destab":
            return destab(w)
        if name == "thread_right":
            return thread_right(w, int(p.get("eps", 1)))
        if name == "thread_left":
            return thread_left(w, int(p.get("eps", 1)))
        if name == "unthread_right":
            return unthread_right(w, int(p.get("eps", 1)))
        if name == "unthread_left":
            return unthread_left(w, int(p.get("eps", 1)))
        if name in ("lmove", "lmove_virtual", "lmove_classical"):
            flavor = p.get("flavor", "virtual")
            if flavor in ("over", "under"):
                eps = p.get("eps")
                return lmove_classical(w, int(p["p"]), int(p["j"]), flavor,
                                       None if eps is None else int(eps), p.get("side"))
            return lmove_virtual(w, int(p["p"]), int(p["j"]), flavor, int(p.get("eps", 1)))
        if name == "relation":
            return apply_relation(w, p["rel"], int(p["pos"]), p.get("direction", "forward"))
    except KeyError as exc:
        raise ParseError(f"move {name!r} is missing parameter {exc}") from exc
    raise ParseError(f"unknown move {name!r}")


@dataclass(frozen=True)
class MoveBudget:
    max_strands: int = 6
    max_len: int = 16


def _markov_candidates(w: BraidWord) -> Iterator[MoveRecord]:
    n = w.strands
    for i in range(1, n):
        yield MoveRecord.make("conj_virtual", i=i)
        for eps in (1, -1):
            yield MoveRecord.make("conj_real", i=i, eps=eps)
    yield MoveRecord.make("stab", flavor="virtual")
    for eps in (1, -1):
        yield MoveRecord.make("stab", flavor="real", eps=eps)
    yield MoveRecord.make("destab")
    for name in ("thread_right", "thread_left", "unthread_right", "unthread_left"):
        for eps in (1, -1):
            yield MoveRecord.make(name, eps=eps)


def enumerate_moves(w: BraidWord, budget: MoveBudget = MoveBudget(),
                    relations: bool = False) -> list[tuple[MoveRecord, BraidWord]]:
    """Every single-move neighbour of ``w`` within ``budget``, free-reduced and deduplicated.

    With ``relations=True`` the single relation rewrites come first.
    """
    out = []
    seen = set()
    candidates: list[MoveRecord] = []
    if relations:
        candidates.extend(MoveRecord.make("relation", rel=rel, pos=pos, direction=d)
                          for rel, pos, d in relation_sites(w))
    candidates.extend(_markov_candidates(w))
    for rec in candidates:
        try:
            result = free_reduce(apply_move(w, rec))
        except MoveNotApplicable:
            continue
        if result.strands > budget.max_strands or len(result) > budget.max_len:
            continue
        key = (result.strands, result.letters)
        if key in seen:
            continue
        seen.add(key)
        out.append((rec, result))
    return out
