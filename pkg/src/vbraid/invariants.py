"""Exact invariants used as oracles: Kauffman bracket (two routes), f-polynomial, odd writhe.

The bracket of a positive crossing takes coefficient A on its oriented
smoothing and A^-1 on the other; a negative crossing swaps the two.  A loop
is worth d = -A^2 - A^-2 and the empty diagram's single loop is worth 1.
Virtual crossings never affect loop counts.
"""

from __future__ import annotations

import functools

import numpy as np

from . import _kernels
from .errors import InvalidInput, ResourceLimitError
from .gauss import GaussCode, close_braid, code_writhe
from .poly import LOOP, ONE, ZERO, LaurentPoly
from .words import BraidWord, Kind, writhe

DEFAULT_CROSSING_LIMIT = 20

_MINUS_A3 = LaurentPoly({3: -1})


@functools.lru_cache(maxsize=None)
def _loop_power(k: int) -> LaurentPoly:
    return LOOP ** k


def smoothing_tables(g: GaussCode) -> tuple[int, np.ndarray, np.ndarray, int]:
    """Arc-node edges for the A- and B-smoothing of every crossing.

    Arc ``p`` is the segment leaving pass ``p`` (global index).  Returns
    ``(n_arcs, opt_a, opt_b, empty_components)``.
    """
    offsets = []
    total = 0
    for comp in g.components:
        offsets.append(total)
        total += len(comp)

    def prev_arc(ci: int, pi: int) -> int:
        comp = g.components[ci]
        return offsets[ci] + (pi - 1) % len(comp)

    where: dict[int, dict[str, tuple[int, int]]] = {}
    signs: dict[int, int] = {}
    for ci, pi, p in g.passes():
        where.setdefault(p.id, {})[p.role] = (ci, pi)
        signs[p.id] = p.sign
    ids = sorted(where)
    opt_a = np.empty((len(ids), 4), dtype=np.int64)
    opt_b = np.empty((len(ids), 4), dtype=np.int64)
    for k, cid in enumerate(ids):
        o = where[cid]["O"]
        u = where[cid]["U"]
        o_in, o_out = prev_arc(*o), offsets[o[0]] + o[1]
        u_in, u_out = prev_arc(*u), offsets[u[0]] + u[1]
        oriented = (u_in, o_out, o_in, u_out)
        unoriented = (u_in, o_in, u_out, o_out)
        if signs[cid] > 0:
            opt_a[k], opt_b[k] = oriented, unoriented
        else:
            opt_a[k], opt_b[k] = unoriented, oriented
    empty = sum(1 for comp in g.components if not comp)
    return total, opt_a, opt_b, empty


def bracket_gauss(g: GaussCode, limit: int = DEFAULT_CROSSING_LIMIT,
                  use_numba: bool | None = None) -> LaurentPoly:
    """Kauffman bracket by exhaustive state sum over the Gauss code."""
    c = g.crossings
    if c > limit:
        raise ResourceLimitError(f"{c} crossings exceeds the state-sum limit of {limit}")
    n_arcs, opt_a, opt_b, empty = smoothing_tables(g)
    if c == 0:
        return _loop_power(empty - 1)
    hist = _kernels.state_histogram(n_arcs, opt_a, opt_b, use_numba=use_numba)
    total = ZERO
    # sum of A^(#a - #b) d^(loops - 1), grouped by loop count
    for loops in np.nonzero(hist.any(axis=0))[0]:
        col = hist[:, loops]
        by_a = LaurentPoly({2 * int(na) - c: int(col[na]) for na in np.nonzero(col)[0]})
        total = total + by_a * _loop_power(int(loops) + empty - 1)
    return total


def _close_matching(partner: tuple[int, ...], n: int) -> int:
    """Loops formed by joining bottom point n+i to top point i."""
    seen = [False] * (2 * n)
    loops = 0
    for start in range(2 * n):
        if seen[start]:
            continue
        loops += 1
        x = start
        while not seen[x]:
            seen[x] = True
            y = partner[x]
            seen[y] = True
            x = y - n if y >= n else y + n
    return loops


def bracket_braid(w: BraidWord, limit: int = DEFAULT_CROSSING_LIMIT) -> LaurentPoly:
    """Kauffman bracket of the closure of ``w``, swept letter by letter.

    The sweep state is a pairing of the n top endpoints and the n current
    bottom endpoints (virtual letters produce non-planar pairings), weighted
    by a polynomial.  Closing pairs bottom point i with top point i.
    """
    n = w.strands
    c = sum(1 for g in w.letters if g.kind is not Kind.V)
    if c > limit:
        raise ResourceLimitError(f"{c} crossings exceeds the state-sum limit of {limit}")
    start = tuple(list(range(n, 2 * n)) + list(range(n)))
    states: dict[tuple[int, ...], LaurentPoly] = {start: ONE}
    for g in w.letters:
        ba, bb = n + g.index - 1, n + g.index
        nxt: dict[tuple[int, ...], LaurentPoly] = {}

        def add(key, value):
            nxt[key] = nxt[key] + value if key in nxt else value

        for partner, value in states.items():
            p, q = partner[ba], partner[bb]
            if g.kind is Kind.V:
                if p == bb:
                    add(partner, value)
                    continue
                m = list(partner)
                m[p], m[bb], m[q], m[ba] = bb, p, ba, q
                add(tuple(m), value)
                continue
            vertical = 1 if g.kind is Kind.SIGMA else -1
            add(partner, value.shift(vertical))
            m = list(partner)
            if p == bb:
                cupcap = value.shift(-vertical) * LOOP
            else:
                m[p], m[q] = q, p
                cupcap = value.shift(-vertical)
            m[ba], m[bb] = bb, ba
            add(tuple(m), cupcap)
        states = {k: val for k, val in nxt.items() if not val.is_zero()}
    total = ZERO
    for partner, value in states.items():
        total = total + value * _loop_power(_close_matching(partner, n) - 1)
    return total


def normalize(bracket: LaurentPoly, wr: int) -> LaurentPoly:
    """(-A^3)^(-writhe) times the bracket."""
    return bracket * (_MINUS_A3 ** -wr)


def f_poly(g: GaussCode, w_writhe: int | None = None,
           limit: int = DEFAULT_CROSSING_LIMIT) -> LaurentPoly:
    wr = code_writhe(g) if w_writhe is None else w_writhe
    return normalize(bracket_gauss(g, limit), wr)


def f_poly_braid(w: BraidWord, limit: int = DEFAULT_CROSSING_LIMIT) -> LaurentPoly:
    return f_poly(close_braid(w), writhe(w), limit)


def odd_writhe(g: GaussCode) -> int:
    """Sum of signs of crossings with an odd number of passes between their two occurrences."""
    if len(g.components) != 1:
        raise InvalidInput(f"odd writhe needs a knot; got {len(g.components)} components")
    comp = g.components[0]
    first: dict[int, int] = {}
    total = 0
    for pos, p in enumerate(comp):
        if p.id in first:
            between = pos - first[p.id] - 1
            if between % 2:
                total += p.sign
        else:
            first[p.id] = pos
    return total
