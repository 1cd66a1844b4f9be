"""Gauss codes of virtual links and the closure of a virtual braid.

Virtual crossings leave no trace in a Gauss code, so the detour move acts as
the identity here.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .errors import ParseError
from .words import BraidWord, Kind, underlying_permutation


class Pass(NamedTuple):
    id: int
    role: str       # "O" or "U"
    sign: int       # +1 or -1

    def token(self) -> str:
        return f"{self.role}{self.id}{'+' if self.sign > 0 else '-'}"


@dataclass(frozen=True)
class GaussCode:
    components: tuple[tuple[Pass, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "components",
                           tuple(tuple(Pass(*p) for p in comp) for comp in self.components))
        if not self.components:
            raise ValueError("a Gauss code needs at least one component")

    @property
    def crossings(self) -> int:
        return sum(len(c) for c in self.components) // 2

    def passes(self) -> Iterable[tuple[int, int, Pass]]:
        for ci, comp in enumerate(self.components):
            for pi, p in enumerate(comp):
                yield ci, pi, p

    def __str__(self) -> str:
        return format_gauss(self)


def components(g: GaussCode) -> int:
    return len(g.components)


def code_writhe(g: GaussCode) -> int:
    return sum(p.sign for _, _, p in g.passes() if p.role == "O")


def validate_gauss(g: GaussCode) -> list[str]:
    """Every violated invariant, with location; an empty list means the code is valid."""
    seen: dict[int, list[tuple[int, int, Pass]]] = {}
    problems = []
    for ci, pi, p in g.passes():
        if p.role not in ("O", "U"):
            problems.append(f"component {ci} pass {pi}: bad role {p.role!r}")
        if p.sign not in (1, -1):
            problems.append(f"component {ci} pass {pi}: bad sign {p.sign!r}")
        seen.setdefault(p.id, []).append((ci, pi, p))
    for cid in sorted(seen):
        occ = seen[cid]
        if len(occ) != 2:
            problems.append(f"crossing {cid} appears {len(occ)} time(s), expected 2")
            continue
        roles = sorted(p.role for _, _, p in occ)
        if roles != ["O", "U"]:
            both = "Over" if roles[0] == "O" else "Under"
            problems.append(f"crossing {cid} has two {both} passes")
        if occ[0][2].sign != occ[1][2].sign:
            problems.append(f"crossing {cid}: sign mismatch between its passes")
    if sorted(seen) != list(range(1, len(seen) + 1)):
        problems.append(f"crossing ids are not 1..{len(seen)}: {sorted(seen)}")
    return problems


def relabel(g: GaussCode) -> GaussCode:
    """Renumber crossings 1..c by first appearance, keeping pass order."""
    mapping: dict[int, int] = {}
    for _, _, p in g.passes():
        mapping.setdefault(p.id, len(mapping) + 1)
    return GaussCode(tuple(tuple(Pass(mapping[p.id], p.role, p.sign) for p in comp)
                           for comp in g.components))


def canonical(g: GaussCode) -> GaussCode:
    """Lexicographically least code over component orders, rotations and relabelings.

    Two codes describe the same oriented Gauss diagram iff their canonical
    forms are equal.
    """
    comps = [c for c in g.components]
    best: list = [None]

    def encode(comp: Sequence[Pass], labels: dict[int, int]):
        fresh = dict(labels)
        out = []
        for p in comp:
            if p.id not in fresh:
                fresh[p.id] = len(fresh) + 1
            out.append((fresh[p.id], p.role, p.sign))
        return tuple(out), fresh

    def search(remaining: tuple[int, ...], labels: dict[int, int], prefix: tuple):
        if not remaining:
            if best[0] is None or prefix < best[0]:
                best[0] = prefix
            return
        options = {}
        for idx in remaining:
            comp = comps[idx]
            rotations = range(len(comp)) if comp else [0]
            for r in rotations:
                enc, fresh = encode(comp[r:] + comp[:r], labels)
                key = (enc, tuple(sorted(fresh.items())))
                options.setdefault(key, (idx, fresh))
        least = min(enc for enc, _ in options)
        candidate = prefix + (least,)
        if best[0] is not None and candidate > best[0][:len(candidate)]:
            return
        for (enc, _), (idx, fresh) in options.items():
            if enc == least:
                search(tuple(i for i in remaining if i != idx), fresh, candidate)

    search(tuple(range(len(comps))), {}, ())
    return GaussCode(tuple(tuple(Pass(*p) for p in comp) for comp in best[0]))


def close_braid(w: BraidWord) -> GaussCode:
    """Gauss code of the closure of ``w``.

    Each component is traced from its smallest top position.  Crossing ids
    are assigned by first appearance along that trace.
    """
    n = w.strands
    # per top position: the passes met going down and the bottom position reached
    runs: dict[int, tuple[list[tuple[int, str, int]], int]] = {}
    for start in range(1, n + 1):
        pos = start
        met = []
        for k, g in enumerate(w.letters):
            i = g.index
            if pos != i and pos != i + 1:
                continue
            if g.kind is not Kind.V:
                over_pos = i if g.kind is Kind.SIGMA else i + 1
                met.append((k, "O" if pos == over_pos else "U", g.exponent))
            pos = i + 1 if pos == i else i
        runs[start] = (met, pos)
    comps = []
    seen = set()
    for start in range(1, n + 1):
        if start in seen:
            continue
        comp = []
        pos = start
        while pos not in seen:
            seen.add(pos)
            met, pos = runs[pos]
            comp.extend(met)
        comps.append(comp)
    mapping: dict[int, int] = {}
    out = []
    for comp in comps:
        passes = []
        for k, role, sign in comp:
            mapping.setdefault(k, len(mapping) + 1)
            passes.append(Pass(mapping[k], role, sign))
        out.append(tuple(passes))
    return GaussCode(tuple(out))


def closure_components(w: BraidWord) -> int:
    return len(underlying_permutation(w).cycles())


# ---------------------------------------------------------------------------
# text / JSON

_PASS = re.compile(r"([OU])(\d+)([+\-−])")


def parse_gauss(text: str) -> GaussCode:
    """``O1+,U2+,O2+,U1+``; components separated by ``;``.  Empty text is one empty component."""
    comps = []
    offset = 0
    for chunk in text.split(";"):
        passes = []
        if chunk.strip():
            sub = 0
            for tok in chunk.split(","):
                t = tok.strip()
                m = _PASS.fullmatch(t)
                if m is None:
                    raise ParseError(f"bad pass {t!r}", offset + sub)
                role, digits, sign = m.groups()
                if int(digits) < 1:
                    raise ParseError(f"crossing ids start at 1: {t!r}", offset + sub)
                passes.append(Pass(int(digits), role, 1 if sign == "+" else -1))
                sub += len(tok) + 1
        comps.append(tuple(passes))
        offset += len(chunk) + 1
    return GaussCode(tuple(comps))


def format_gauss(g: GaussCode) -> str:
    return ";".join(",".join(p.token() for p in comp) for comp in g.components)


def gauss_to_json(g: GaussCode) -> dict:
    return {"components": [[{"id": p.id, "role": p.role, "sign": p.sign} for p in comp]
                           for comp in g.components]}


def gauss_from_json(data: dict | str) -> GaussCode:
    if isinstance(data, str):
        data = json.loads(data)
    try:
        comps = tuple(tuple(Pass(int(p["id"]), str(p["role"]), int(p["sign"])) for p in comp)
                      for comp in data["components"])
        return GaussCode(comps)
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad Gauss code JSON: {exc}") from exc
