"""Bounded bidirectional search for L-equivalence of two virtual braids.

Neighbours are single relation rewrites plus the Markov moves (conjugations,
stabilizations and threadings with their inverses).  Nodes are free-reduced
words.  A negative answer is only a proof of inequivalence when the
invariants already tell the two braids apart.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InvalidInput, ResourceLimitError
from .gauss import closure_components
from .invariants import f_poly_braid
from .moves import MoveBudget, MoveRecord, apply_move, enumerate_moves
from .words import BraidWord, free_reduce, print_word

EQUIVALENT = "equivalent"
NOT_FOUND = "not-found-within-budget"
DISTINGUISHED = "distinguished-by-invariant"


@dataclass(frozen=True)
class SearchBudget:
    max_strands: int = 6
    max_len: int = 16
    max_nodes: int = 200_000

    def check(self, *words: BraidWord) -> None:
        if min(self.max_strands, self.max_len, self.max_nodes) < 1:
            raise InvalidInput(f"budget fields must be positive: {self}")
        for w in words:
            if w.strands > self.max_strands:
                raise InvalidInput(f"max_strands {self.max_strands} below input width {w.strands}")


@dataclass
class SearchResult:
    verdict: str
    path: list[MoveRecord] = field(default_factory=list)      # from a to the meeting word
    path_b: list[MoveRecord] = field(default_factory=list)    # from b to the meeting word
    meeting: str | None = None
    nodes_expanded: int = 0
    note: str = ""

    @property
    def equivalent(self) -> bool:
        return self.verdict == EQUIVALENT

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "path": [r.to_json() for r in self.path],
            "path_b": [r.to_json() for r in self.path_b],
            "meeting": self.meeting,
            "stats": {"nodes_expanded": self.nodes_expanded},
            "note": self.note,
        }


def canonical_key(w: BraidWord) -> str:
    return print_word(free_reduce(w))


def replay(w: BraidWord, path: list[MoveRecord]) -> BraidWord:
    w = free_reduce(w)
    for rec in path:
        w = free_reduce(apply_move(w, rec))
    return w


def verify(a: BraidWord, b: BraidWord, result: SearchResult) -> bool:
    """Replay both recorded paths and check they land on the meeting word."""
    if not result.equivalent:
        return False
    return (canonical_key(replay(a, result.path)) == result.meeting
            == canonical_key(replay(b, result.path_b)))


def _screen(a: BraidWord, b: BraidWord) -> str | None:
    if closure_components(a) != closure_components(b):
        return "component counts differ"
    try:
        if f_poly_braid(a) != f_poly_braid(b):
            return "f-polynomials differ"
    except ResourceLimitError:
        return None
    return None


def _path_to(visited: dict, key: str) -> list[MoveRecord]:
    path = []
    while True:
        parent, rec, _ = visited[key]
        if parent is None:
            break
        path.append(rec)
        key = parent
    path.reverse()
    return path


def equiv_within(a: BraidWord, b: BraidWord, budget: SearchBudget = SearchBudget()) -> SearchResult:
    budget.check(a, b)
    reason = _screen(a, b)
    if reason is not None:
        return SearchResult(NOT_FOUND, note=f"{DISTINGUISHED}: {reason}")
    moves_budget = MoveBudget(budget.max_strands, budget.max_len)
    ra, rb = free_reduce(a), free_reduce(b)
    ka, kb = canonical_key(ra), canonical_key(rb)
    if ka == kb:
        return SearchResult(EQUIVALENT, meeting=ka)
    # key -> (parent key, move, depth)
    visited = ({ka: (None, None, 0)}, {kb: (None, None, 0)})
    frontier: tuple[list[tuple[str, BraidWord]], ...] = ([(ka, ra)], [(kb, rb)])
    expanded = 0
    while frontier[0] and frontier[1]:
        side = 0 if len(frontier[0]) <= len(frontier[1]) else 1
        mine, other = visited[side], visited[1 - side]
        nxt = []
        meets = []
        for key, w in frontier[side]:
            if expanded >= budget.max_nodes:
                return SearchResult(NOT_FOUND, nodes_expanded=expanded,
                                    note="node budget exhausted")
            expanded += 1
            depth = mine[key][2]
            for rec, res in enumerate_moves(w, moves_budget, relations=True):
                rkey = canonical_key(res)
                if rkey in mine:
                    continue
                mine[rkey] = (key, rec, depth + 1)
                nxt.append((rkey, res))
                if rkey in other:
                    meets.append((depth + 1 + other[rkey][2], rkey))
        if meets:
            _, meet = min(meets)
            return SearchResult(EQUIVALENT, _path_to(visited[0], meet), _path_to(visited[1], meet),
                                meet, expanded)
        frontier = (nxt, frontier[1]) if side == 0 else (frontier[0], nxt)
    return SearchResult(NOT_FOUND, nodes_expanded=expanded,
                        note="search space exhausted within strand/length bounds")
