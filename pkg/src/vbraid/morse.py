"""Morse-word diagrams and their braiding.

A Morse word is a stack of slices over a running width.  ``cup<i>`` opens two
new points at i, i+1 (a local maximum), ``cap<i>`` joins points i, i+1 (a
local minimum), ``x<i>+``/``x<i>-`` is a positive/negative classical crossing
of points i, i+1 and ``v<i>`` a virtual one.  A crossing token fixes the sign;
which line is over then depends on the orientation of its two strands: when
both run the same vertical direction the line from top i to bottom i+1 is
over, otherwise the other line is.

Braiding keeps every real crossing at its own level and lets strands meet
it through virtual routing only (detour moves), so the braid's closure has
exactly the diagram's Gauss code.
"""

from __future__ import annotations

import json
import random
import re
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .errors import InvalidInput, ParseError
from .gauss import GaussCode, Pass, relabel
from .words import BraidWord, Generator, sigma, v


class Slice(NamedTuple):
    kind: str           # "cup", "cap", "x", "v"
    index: int
    sign: int = 0       # +1/-1 for "x"

    def token(self) -> str:
        if self.kind == "x":
            return f"x{self.index}{'+' if self.sign > 0 else '-'}"
        return f"{self.kind}{self.index}"


MorseWord = tuple[Slice, ...]

_SLICE = re.compile(r"(cup|cap|x|v)(\d+)([+\-−]?)")


def parse_slice(token: str, offset: int = 0) -> Slice:
    m = _SLICE.fullmatch(token)
    if m is None:
        raise ParseError(f"bad Morse token {token!r}", offset)
    kind, digits, sign = m.groups()
    if int(digits) < 1:
        raise ParseError(f"Morse indices start at 1: {token!r}", offset)
    if (kind == "x") != bool(sign):
        raise ParseError(f"only crossings x<i>+/- carry a sign: {token!r}", offset)
    return Slice(kind, int(digits), (1 if sign == "+" else -1) if sign else 0)


def parse_morse(text: str) -> MorseWord:
    return tuple(parse_slice(m.group(), m.start()) for m in re.finditer(r"\S+", text))


def format_morse(m: Sequence[Slice]) -> str:
    return " ".join(s.token() for s in m)


def morse_to_json(m: Sequence[Slice]) -> list[str]:
    return [s.token() for s in m]


def morse_from_json(data: list | str) -> MorseWord:
    if isinstance(data, str):
        data = json.loads(data)
    if not isinstance(data, list):
        raise ParseError("Morse JSON must be an array of tokens")
    return tuple(parse_slice(str(t)) for t in data)


def validate_morse(m: Sequence[Slice]) -> list[str]:
    """Width bookkeeping violations, one message per offending slice (empty if valid)."""
    problems = []
    width = 0
    for t, s in enumerate(m):
        if s.kind == "cup":
            if not 1 <= s.index <= width + 1:
                problems.append(f"slice {t}: {s.token()} outside width {width}")
                continue
            width += 2
        elif s.kind == "cap":
            if width == 0 or not 1 <= s.index < width:
                problems.append(f"slice {t}: {s.token()} needs points {s.index}, {s.index + 1} "
                                f"but width is {width}")
                continue
            width -= 2
        elif s.kind in ("x", "v"):
            if not 1 <= s.index < width:
                problems.append(f"slice {t}: {s.token()} needs points {s.index}, {s.index + 1} "
                                f"but width is {width}")
            if s.kind == "x" and s.sign not in (1, -1):
                problems.append(f"slice {t}: crossing sign must be +1 or -1")
        else:
            problems.append(f"slice {t}: unknown slice kind {s.kind!r}")
    if width != 0:
        problems.append(f"diagram ends with width {width}, expected 0")
    return problems


# ---------------------------------------------------------------------------
# tracing

class _Piece(NamedTuple):
    slice: int
    kind: str                   # "vert", "cup", "cap"
    ends: tuple                 # two boundary points (boundary, position)
    line: str = ""              # "A" (top i -> bottom i+1) / "B" for crossing slices
    pos: int = 0                # leftmost position, for scan order


@dataclass
class TracedDiagram:
    """Oriented circles of a Morse diagram.

    ``circles[c]`` lists the passes met along circle c as
    ``(slice, crossing_key, role, sign)``.
    """
    circles: list[list[tuple[int, int, str, int]]]
    down_arcs: int
    up_passes: int


def _pieces(m: Sequence[Slice]) -> list[_Piece]:
    out = []
    width = 0
    for t, s in enumerate(m):
        i = s.index
        if s.kind == "cup":
            for p in range(1, width + 1):
                out.append(_Piece(t, "vert", ((t, p), (t + 1, p if p < i else p + 2)), pos=p))
            out.append(_Piece(t, "cup", ((t + 1, i), (t + 1, i + 1)), pos=i))
            width += 2
        elif s.kind == "cap":
            for p in range(1, width + 1):
                if p in (i, i + 1):
                    continue
                out.append(_Piece(t, "vert", ((t, p), (t + 1, p if p < i else p - 2)), pos=p))
            out.append(_Piece(t, "cap", ((t, i), (t, i + 1)), pos=i))
            width -= 2
        else:
            for p in range(1, width + 1):
                if p == i:
                    out.append(_Piece(t, "vert", ((t, i), (t + 1, i + 1)),
                                      "A" if s.kind == "x" else "", pos=i))
                elif p == i + 1:
                    out.append(_Piece(t, "vert", ((t, i + 1), (t + 1, i)),
                                      "B" if s.kind == "x" else "", pos=i + 1))
                else:
                    out.append(_Piece(t, "vert", ((t, p), (t + 1, p)), pos=p))
    out.sort(key=lambda pc: (pc.slice, pc.pos, pc.kind))
    return out


def trace(m: Sequence[Slice]) -> TracedDiagram:
    problems = validate_morse(m)
    if problems:
        raise InvalidInput("invalid Morse word: " + "; ".join(problems))
    pieces = _pieces(m)
    at: dict[tuple[int, int], list[int]] = {}
    for k, pc in enumerate(pieces):
        for e in pc.ends:
            at.setdefault(e, []).append(k)
    used = [False] * len(pieces)
    direction = [0] * len(pieces)      # +1 down, -1 up, 0 for cups/caps
    circles_raw: list[list[tuple[int, tuple]]] = []
    for first in range(len(pieces)):
        if used[first]:
            continue
        # orient the circle's first vertical piece downward; fall back to its first piece
        members = _circle_of(first, pieces, at)
        start = next((k for k in sorted(members) if pieces[k].kind == "vert"), min(members))
        pc = pieces[start]
        entry = pc.ends[0]          # top end for vertical pieces, left end otherwise
        order = []
        k, here = start, entry
        while True:
            used[k] = True
            a, b = pieces[k].ends
            leave = b if here == a else a
            if pieces[k].kind == "vert":
                direction[k] = 1 if leave[0] > here[0] else -1
            order.append((k, here))
            nxt = [j for j in at[leave] if j != k]
            k, here = nxt[0], leave
            if k == start:
                break
        circles_raw.append(order)

    crossing_pieces: dict[int, list[int]] = {}
    for k, pc in enumerate(pieces):
        if pc.line:
            crossing_pieces.setdefault(pc.slice, []).append(k)
    circles = []
    up_passes = 0
    for order in circles_raw:
        passes = []
        for k, _ in order:
            pc = pieces[k]
            if not pc.line:
                continue
            s = m[pc.slice]
            partner = next(j for j in crossing_pieces[pc.slice] if j != k)
            same = direction[k] == direction[partner]
            over_line = "A" if same else "B"
            role = "O" if pc.line == over_line else "U"
            passes.append((pc.slice, pc.slice, role, s.sign))
            if direction[k] < 0:
                up_passes += 1
        circles.append(passes)
    down_arcs = sum(1 for s in m if s.kind == "cup")
    return TracedDiagram(circles, down_arcs, up_passes)


def _circle_of(start: int, pieces, at) -> set[int]:
    seen = {start}
    stack = [start]
    while stack:
        k = stack.pop()
        for e in pieces[k].ends:
            for j in at[e]:
                if j not in seen:
                    seen.add(j)
                    stack.append(j)
    return seen


def evaluate_morse(m: Sequence[Slice]) -> GaussCode:
    """Gauss code of the diagram, crossings numbered by first appearance."""
    traced = trace(m)
    comps = tuple(tuple(Pass(key, role, sign) for _, key, role, sign in circle)
                  for circle in traced.circles)
    return relabel(GaussCode(comps))


# ---------------------------------------------------------------------------
# braiding

def _runs(circle: list[tuple[int, int, str, int]]) -> list[list[tuple[int, int, str, int]]]:
    """Split a cyclic pass list into maximal runs of strictly increasing slice."""
    if not circle:
        return [[]]
    n = len(circle)
    starts = [k for k in range(n) if circle[k][0] <= circle[k - 1][0]]
    runs = []
    for a, b in zip(starts, starts[1:] + [starts[0] + n]):
        runs.append([circle[k % n] for k in range(a, b)])
    return runs


def braid_morse(m: Sequence[Slice]) -> BraidWord:
    """A virtual braid whose closure has the same Gauss code as the diagram."""
    traced = trace(m)
    runs = []          # (passes, successor run index)
    for circle in traced.circles:
        pieces = _runs(circle)
        base = len(runs)
        for r, passes in enumerate(pieces):
            runs.append((passes, base + (r + 1) % len(pieces)))
    n = len(runs)
    order = list(range(n))          # order[position - 1] = run there
    letters: list[Generator] = []

    def move(src: int, dst: int) -> None:
        # bubble the strand at index src to index dst with virtual swaps
        step = 1 if dst > src else -1
        for k in range(src, dst, step):
            lo = min(k, k + step)
            order[lo], order[lo + 1] = order[lo + 1], order[lo]
            letters.append(v(lo + 1))

    events: dict[int, dict[str, tuple[int, int]]] = {}
    for r, (passes, _) in enumerate(runs):
        for level, key, role, sign in passes:
            events.setdefault(level, {})[role] = (r, sign)
    for level in sorted(events):
        (r_over, sign), (r_under, _) = events[level]["O"], events[level]["U"]
        left, right = (r_over, r_under) if sign > 0 else (r_under, r_over)
        src = order.index(right)
        dst = order.index(left) + (1 if src > order.index(left) else 0)
        move(src, dst)
        i = order.index(left) + 1
        letters.append(sigma(i, sign))
        order[i - 1], order[i] = order[i], order[i - 1]
    # each run must end where its successor starts
    target = [0] * n
    for r, (_, succ) in enumerate(runs):
        target[succ] = r
    for k in range(n):
        move(order.index(target[k]), k)
    return BraidWord(max(n, 1), tuple(letters))


def random_morse(seed: int, max_width: int = 6, max_slices: int = 12) -> MorseWord:
    """A random valid Morse word (deterministic in ``seed``)."""
    rng = random.Random(seed)
    total = rng.randint(2, max_slices)
    out = []
    width = 0
    for t in range(total):
        left = total - t            # slices still to place, this one included
        options = []
        if width + 2 <= max_width and (width + 2) // 2 <= left - 1:
            options.extend(["cup"] * 2)
        if width >= 2:
            options.append("cap")
            if width // 2 <= left - 1:
                options.extend(["x", "x", "v"])
        if width // 2 >= left:
            options = ["cap"]
        if not options:
            break
        kind = rng.choice(options)
        if kind == "cup":
            out.append(Slice("cup", rng.randint(1, width + 1)))
            width += 2
        elif kind == "cap":
            out.append(Slice("cap", rng.randint(1, width - 1)))
            width -= 2
        else:
            out.append(Slice(kind, rng.randint(1, width - 1), rng.choice((1, -1)) if kind == "x" else 0))
    while width:
        out.append(Slice("cap", rng.randint(1, width - 1)))
        width -= 2
    if not out:
        out = [Slice("cup", 1), Slice("cap", 1)]
    return tuple(out)
