"""Command-line interface: ``vbraid <command> ...``.

Exit codes: 0 success, 1 usage, 2 parse error, 3 move not applicable,
4 equivalence not found within budget, 5 resource limit.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import gauss_moves, moves
from .errors import (InvalidInput, MoveNotApplicable, ParseError, ResourceLimitError,
                     StrandMismatch)
from .gauss import (GaussCode, close_braid, format_gauss, gauss_from_json, gauss_to_json,
                    parse_gauss)
from .invariants import (DEFAULT_CROSSING_LIMIT, bracket_gauss, f_poly, odd_writhe)
from .morse import (braid_morse, evaluate_morse, morse_from_json, parse_morse)
from .poly import format_poly, poly_to_json
from .search import NOT_FOUND, SearchBudget, equiv_within
from .words import (BraidWord, Kind, free_reduce, parse_word, print_word, random_word,
                    underlying_permutation, word_from_json, word_to_json, writhe)

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_MOVE, EXIT_NOT_FOUND, EXIT_LIMIT = range(6)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _word(text: str) -> BraidWord:
    if text.lstrip().startswith("{"):
        return word_from_json(text)
    return parse_word(text)


def _code(text: str) -> GaussCode:
    if text.lstrip().startswith("{"):
        return gauss_from_json(text)
    return parse_gauss(text)


def _morse(text: str):
    if text.lstrip().startswith("["):
        return morse_from_json(text)
    return parse_morse(text)


def _knot_input(args) -> tuple[GaussCode, int]:
    """Gauss code and writhe for commands taking either a word or ``--code``."""
    if args.code:
        g = _code(args.input)
        return g, sum(p.sign for c in g.components for p in c if p.role == "O")
    w = _word(args.input)
    return close_braid(w), writhe(w)


def render(w: BraidWord) -> str:
    """One column per strand, one row per letter; ``\\`` marks the over strand, ``o`` a virtual crossing."""
    width = 2 * w.strands - 1
    rows = [" ".join(str(k % 10) for k in range(1, w.strands + 1))]
    middle = {Kind.SIGMA: "\\", Kind.SIGMA_INV: "/", Kind.V: "o"}
    for g in w.letters:
        row = ["|" if c % 2 == 0 else " " for c in range(width)]
        c = 2 * (g.index - 1)
        row[c:c + 3] = ["\\", middle[g.kind], "/"]
        rows.append("".join(row))
    return "\n".join(rows)


def _emit(args, text: str, payload) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _emit_word(args, w: BraidWord) -> None:
    _emit(args, print_word(w), word_to_json(w))


def _emit_code(args, g: GaussCode) -> None:
    _emit(args, format_gauss(g), gauss_to_json(g))


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="vbraid", description="Virtual braid words, L-moves and invariants.")
    p.add_argument("--json", action="store_true", help="emit JSON instead of text")
    p.add_argument("--limit", type=int, default=DEFAULT_CROSSING_LIMIT,
                   help="crossing cap for state sums (default %(default)s)")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    for name in ("parse", "normalize", "perm", "writhe", "close", "render", "destab"):
        sub.add_parser(name).add_argument("word")
    for name in ("bracket", "fpoly", "oddwrithe"):
        sp = sub.add_parser(name)
        sp.add_argument("input", help="braid word, or a Gauss code with --code")
        sp.add_argument("--code", action="store_true", help="input is a Gauss code")

    sp = sub.add_parser("move")
    sp.add_argument("record", help='JSON move record, e.g. {"move":"thread_right","eps":1}')
    sp.add_argument("word")

    sp = sub.add_parser("lmove")
    sp.add_argument("word")
    sp.add_argument("--p", type=int, required=True, help="cut after this many letters")
    sp.add_argument("--j", type=int, required=True, help="strand position of the cut")
    sp.add_argument("--flavor", choices=("virtual", "real", "over", "under"), default="virtual")
    sp.add_argument("--eps", type=int, choices=(1, -1))
    sp.add_argument("--side", choices=("left", "right"))

    for name in ("thread-right", "thread-left"):
        sp = sub.add_parser(name)
        sp.add_argument("word")
        sp.add_argument("--eps", type=int, choices=(1, -1), default=1)

    sp = sub.add_parser("stab")
    sp.add_argument("word")
    sp.add_argument("--flavor", choices=("virtual", "real"), default="real")
    sp.add_argument("--eps", type=int, choices=(1, -1), default=1)

    sp = sub.add_parser("gmove")
    sp.add_argument("record", help='JSON Gauss move, e.g. {"move":"r1_insert","comp":0,"gap":0}')
    sp.add_argument("code")

    sub.add_parser("braid").add_argument("morse")
    sub.add_parser("eval-morse").add_argument("morse")

    sp = sub.add_parser("equiv")
    sp.add_argument("a")
    sp.add_argument("b")
    sp.add_argument("--max-strands", type=int, default=6)
    sp.add_argument("--max-len", type=int, default=16)
    sp.add_argument("--max-nodes", type=int, default=200_000)

    sp = sub.add_parser("random")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--len", type=int, required=True, dest="length")
    sp.add_argument("--seed", type=int, default=0)
    return p


def _dispatch(args) -> int:
    cmd = args.command
    if cmd == "parse":
        _emit_word(args, _word(args.word))
    elif cmd == "normalize":
        _emit_word(args, free_reduce(_word(args.word)))
    elif cmd == "perm":
        perm = underlying_permutation(_word(args.word))
        _emit(args, " ".join(map(str, perm.images)),
              {"images": list(perm.images), "cycles": [list(c) for c in perm.cycles()]})
    elif cmd == "writhe":
        wr = writhe(_word(args.word))
        _emit(args, str(wr), wr)
    elif cmd == "close":
        _emit_code(args, close_braid(_word(args.word)))
    elif cmd in ("bracket", "fpoly"):
        g, wr = _knot_input(args)
        value = bracket_gauss(g, args.limit) if cmd == "bracket" else f_poly(g, wr, args.limit)
        _emit(args, format_poly(value), poly_to_json(value))
    elif cmd == "oddwrithe":
        g, _ = _knot_input(args)
        ow = odd_writhe(g)
        _emit(args, str(ow), ow)
    elif cmd == "move":
        _emit_word(args, moves.MoveRecord.from_json(args.record).apply(_word(args.word)))
    elif cmd == "lmove":
        w = _word(args.word)
        if args.flavor in ("over", "under"):
            out = moves.lmove_classical(w, args.p, args.j, args.flavor, args.eps, args.side)
        else:
            out = moves.lmove_virtual(w, args.p, args.j, args.flavor, args.eps or 1)
        _emit_word(args, out)
    elif cmd == "thread-right":
        _emit_word(args, moves.thread_right(_word(args.word), args.eps))
    elif cmd == "thread-left":
        _emit_word(args, moves.thread_left(_word(args.word), args.eps))
    elif cmd == "stab":
        _emit_word(args, moves.stab(_word(args.word), args.flavor, args.eps))
    elif cmd == "destab":
        _emit_word(args, moves.destab(_word(args.word)))
    elif cmd == "gmove":
        _emit_code(args, gauss_moves.apply_gauss_move(_code(args.code), args.record))
    elif cmd == "braid":
        _emit_word(args, braid_morse(_morse(args.morse)))
    elif cmd == "eval-morse":
        _emit_code(args, evaluate_morse(_morse(args.morse)))
    elif cmd == "equiv":
        a, b = _word(args.a), _word(args.b)
        budget = SearchBudget(args.max_strands, args.max_len, args.max_nodes)
        result = equiv_within(a, b, budget)
        print(json.dumps(result.to_json(), sort_keys=True))
        return EXIT_NOT_FOUND if result.verdict == NOT_FOUND else EXIT_OK
    elif cmd == "random":
        _emit_word(args, random_word(args.n, args.length, args.seed))
    elif cmd == "render":
        w = _word(args.word)
        _emit(args, render(w), {"rows": render(w).split("\n")})
    return EXIT_OK


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _dispatch(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except MoveNotApplicable as exc:
        print(f"not applicable: {exc}", file=sys.stderr)
        return EXIT_MOVE
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except (InvalidInput, StrandMismatch, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
