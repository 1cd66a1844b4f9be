"""Reidemeister I/II and the forbidden moves, acting on Gauss codes.

Positions index passes within one component; a gap ``k`` means "before pass
``k``" (``k == len`` appends).  Inserted crossings take the next free ids and
deletions renumber the survivors so ids stay 1..c, which makes
``delete(insert(g))`` return ``g`` exactly.
"""

from __future__ import annotations

import json
from typing import Any

from .errors import MoveNotApplicable, ParseError
from .gauss import GaussCode, Pass


def _comp(g: GaussCode, comp: int) -> tuple[Pass, ...]:
    if not 0 <= comp < len(g.components):
        raise MoveNotApplicable(f"no component {comp}")
    return g.components[comp]


def _check_gap(g: GaussCode, comp: int, gap: int) -> None:
    if not 0 <= gap <= len(_comp(g, comp)):
        raise MoveNotApplicable(f"gap {gap} outside 0..{len(g.components[comp])}")


def _replace(g: GaussCode, comp: int, passes) -> GaussCode:
    comps = list(g.components)
    comps[comp] = tuple(passes)
    return GaussCode(tuple(comps))


def _drop(g: GaussCode, doomed: set[tuple[int, int]]) -> GaussCode:
    """Remove passes at (component, position) and renumber the remaining ids."""
    removed = {g.components[ci][pi].id for ci, pi in doomed}
    shift = {cid: cid - sum(1 for r in removed if r < cid)
             for cid in range(1, g.crossings + 1) if cid not in removed}
    comps = []
    for ci, comp in enumerate(g.components):
        comps.append(tuple(Pass(shift[p.id], p.role, p.sign)
                           for pi, p in enumerate(comp) if (ci, pi) not in doomed))
    return GaussCode(tuple(comps))


def r1_insert(g: GaussCode, comp: int, gap: int, role_first: str = "O", sign: int = 1) -> GaussCode:
    _check_gap(g, comp, gap)
    if role_first not in ("O", "U") or sign not in (1, -1):
        raise ValueError("role_first must be 'O' or 'U' and sign +1 or -1")
    k = g.crossings + 1
    second = "U" if role_first == "O" else "O"
    passes = list(g.components[comp])
    passes[gap:gap] = [Pass(k, role_first, sign), Pass(k, second, sign)]
    return _replace(g, comp, passes)


def r1_delete(g: GaussCode, comp: int, pos: int) -> GaussCode:
    """Remove a kink: the passes at ``pos`` and ``pos + 1`` (cyclically) share a crossing."""
    passes = _comp(g, comp)
    if not passes or not 0 <= pos < len(passes):
        raise MoveNotApplicable(f"pattern-not-found: no pass {pos} in component {comp}")
    nxt = (pos + 1) % len(passes)
    if nxt == pos or passes[pos].id != passes[nxt].id:
        raise MoveNotApplicable(f"pattern-not-found: no R1 kink at component {comp} pass {pos}")
    return _drop(g, {(comp, pos), (comp, nxt)})


def r2_insert(g: GaussCode, comp1: int, gap1: int, comp2: int, gap2: int,
              sign: int = 1, parallel: bool = False) -> GaussCode:
    """Push one strand over another.

    Crossings a (sign ``sign``) and b (opposite sign) are added; ``O_a O_b``
    goes at ``gap1`` and ``U_b U_a`` at ``gap2`` (``U_a U_b`` when the two
    strands run parallel).  On a shared component with equal gaps the over
    pair comes first.
    """
    _check_gap(g, comp1, gap1)
    _check_gap(g, comp2, gap2)
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    a, b = g.crossings + 1, g.crossings + 2
    over = [Pass(a, "O", sign), Pass(b, "O", -sign)]
    under = [Pass(a, "U", sign), Pass(b, "U", -sign)]
    if not parallel:
        under.reverse()
    if comp1 != comp2:
        comps = list(g.components)
        p1 = list(comps[comp1])
        p1[gap1:gap1] = over
        p2 = list(comps[comp2])
        p2[gap2:gap2] = under
        comps[comp1], comps[comp2] = tuple(p1), tuple(p2)
        return GaussCode(tuple(comps))
    passes = list(g.components[comp1])
    out = []
    for k in range(len(passes) + 1):
        if k == gap1:
            out.extend(over)
        if k == gap2:
            out.extend(under)
        if k < len(passes):
            out.append(passes[k])
    return _replace(g, comp1, out)


def _pair_at(g: GaussCode, comp: int, pos: int) -> tuple[tuple[int, int], tuple[int, int]]:
    passes = _comp(g, comp)
    if len(passes) < 2 or not 0 <= pos < len(passes):
        raise MoveNotApplicable(f"pattern-not-found: no pass pair at component {comp} pass {pos}")
    return (comp, pos), (comp, (pos + 1) % len(passes))


def r2_delete(g: GaussCode, comp1: int, pos1: int, comp2: int, pos2: int) -> GaussCode:
    """Undo an R2: two adjacent Over passes and two adjacent Under passes on the same two crossings."""
    over = _pair_at(g, comp1, pos1)
    under = _pair_at(g, comp2, pos2)
    po = [g.components[c][p] for c, p in over]
    pu = [g.components[c][p] for c, p in under]
    ok = (all(p.role == "O" for p in po) and all(p.role == "U" for p in pu)
          and po[0].id != po[1].id and {p.id for p in po} == {p.id for p in pu}
          and po[0].sign == -po[1].sign)
    if not ok or len(set(over) | set(under)) != 4:
        raise MoveNotApplicable(f"pattern-not-found: no R2 pair at ({comp1}, {pos1}) / ({comp2}, {pos2})")
    return _drop(g, set(over) | set(under))


def _forbidden(g: GaussCode, comp: int, pos: int, role: str) -> GaussCode:
    (c, i), (_, j) = _pair_at(g, comp, pos)
    passes = list(g.components[c])
    if passes[i].role != role or passes[j].role != role:
        raise MoveNotApplicable(f"not-applicable: passes {i}, {j} are not both {role}")
    passes[i], passes[j] = passes[j], passes[i]
    return _replace(g, c, passes)


def forbidden_over(g: GaussCode, comp: int, pos: int) -> GaussCode:
    """Swap two consecutive Over passes (sliding a strand over a virtual crossing)."""
    return _forbidden(g, comp, pos, "O")


def forbidden_under(g: GaussCode, comp: int, pos: int) -> GaussCode:
    return _forbidden(g, comp, pos, "U")


_GMOVES = {
    "r1_insert": (r1_insert, ("comp", "gap", "role_first", "sign")),
    "r1_delete": (r1_delete, ("comp", "pos")),
    "r2_insert": (r2_insert, ("comp1", "gap1", "comp2", "gap2", "sign", "parallel")),
    "r2_delete": (r2_delete, ("comp1", "pos1", "comp2", "pos2")),
    "forbidden_over": (forbidden_over, ("comp", "pos")),
    "forbidden_under": (forbidden_under, ("comp", "pos")),
}


def apply_gauss_move(g: GaussCode, record: dict[str, Any] | str) -> GaussCode:
    """Apply a JSON record such as ``{"move": "r1_insert", "comp": 0, "gap": 1}``."""
    if isinstance(record, str):
        try:
            record = json.loads(record)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad move JSON: {exc}", exc.pos) from exc
    name = record.get("move") if isinstance(record, dict) else None
    if name not in _GMOVES:
        raise ParseError(f"unknown Gauss move {name!r}; expected one of {sorted(_GMOVES)}")
    fn, names = _GMOVES[name]
    unknown = set(record) - set(names) - {"move"}
    if unknown:
        raise ParseError(f"unexpected parameters for {name}: {sorted(unknown)}")
    kwargs = {k: record[k] for k in names if k in record}
    try:
        return fn(g, **kwargs)
    except TypeError as exc:
        raise ParseError(f"bad parameters for {name}: {exc}") from exc
