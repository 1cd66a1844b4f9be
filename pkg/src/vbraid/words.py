"""Words in the virtual braid group VB_n.

A word is read top to bottom.  ``s3`` is the classical generator sigma_3,
``s3'`` its inverse and ``v3`` the virtual generator (an involution).
Indices are 1-based.  In sigma_i the strand entering at position i passes
over the strand entering at position i + 1; sigma_i is a positive crossing.
"""

from __future__ import annotations

import enum
import json
import random
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Sequence

from .errors import ParseError, RelationMismatch, StrandMismatch


class Kind(enum.Enum):
    SIGMA = "s"
    SIGMA_INV = "s'"
    V = "v"


class Generator(NamedTuple):
    kind: Kind
    index: int

    @property
    def exponent(self) -> int:
        """+1 for sigma, -1 for sigma inverse, 0 for virtual letters."""
        if self.kind is Kind.SIGMA:
            return 1
        if self.kind is Kind.SIGMA_INV:
            return -1
        return 0

    @property
    def is_virtual(self) -> bool:
        return self.kind is Kind.V

    def inverse(self) -> Generator:
        if self.kind is Kind.SIGMA:
            return Generator(Kind.SIGMA_INV, self.index)
        if self.kind is Kind.SIGMA_INV:
            return Generator(Kind.SIGMA, self.index)
        return self

    def shifted(self, offset: int) -> Generator:
        return Generator(self.kind, self.index + offset)

    def token(self) -> str:
        if self.kind is Kind.SIGMA_INV:
            return f"s{self.index}'"
        return f"{self.kind.value}{self.index}"

    def __str__(self) -> str:
        return self.token()


def sigma(i: int, eps: int = 1) -> Generator:
    """sigma_i to the power ``eps`` (which must be +1 or -1)."""
    if eps not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {eps}")
    return Generator(Kind.SIGMA if eps == 1 else Kind.SIGMA_INV, i)


def v(i: int) -> Generator:
    return Generator(Kind.V, i)


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[Generator, ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise ValueError(f"strand count must be >= 1, got {self.strands}")
        object.__setattr__(self, "letters", tuple(self.letters))
        for g in self.letters:
            if not 1 <= g.index < self.strands:
                raise ValueError(
                    f"letter {g} out of range for a word on {self.strands} strands")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Generator]:
        return iter(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        return concat(self, other)

    def __str__(self) -> str:
        return print_word(self)

    def with_letters(self, letters: Iterable[Generator]) -> BraidWord:
        return BraidWord(self.strands, tuple(letters))


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1..n}; ``images[k - 1]`` is the image of k."""

    images: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a permutation: {self.images}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @property
    def size(self) -> int:
        return len(self.images)

    def __call__(self, k: int) -> int:
        return self.images[k - 1]

    def compose(self, other: Permutation) -> Permutation:
        """``self o other``: apply ``other`` first."""
        return Permutation(tuple(self(other(k)) for k in range(1, other.size + 1)))

    def inverse(self) -> Permutation:
        inv = [0] * self.size
        for k, img in enumerate(self.images, start=1):
            inv[img - 1] = k
        return Permutation(tuple(inv))

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(1, self.size + 1):
            if start in seen:
                continue
            cyc = []
            k = start
            while k not in seen:
                seen.add(k)
                cyc.append(k)
                k = self(k)
            out.append(tuple(cyc))
        return out


# ---------------------------------------------------------------------------
# text and JSON forms

_TOKEN = re.compile(r"([sv])(\d+)(')?")


def parse_generator(token: str, offset: int = 0) -> Generator:
    m = _TOKEN.fullmatch(token)
    if m is None:
        raise ParseError(f"bad generator token {token!r}", offset)
    letter, digits, prime = m.groups()
    index = int(digits)
    if index < 1:
        raise ParseError(f"generator index must be >= 1 in {token!r}", offset)
    if letter == "v":
        if prime:
            raise ParseError(f"virtual generators have no inverse: {token!r}", offset)
        return Generator(Kind.V, index)
    return Generator(Kind.SIGMA_INV if prime else Kind.SIGMA, index)


def parse_word(text: str) -> BraidWord:
    """Parse ``"[<n> |] token token ..."``.

    Without a declaration the strand count is one more than the largest
    index (1 for the empty word).
    """
    declared = None
    body_start = 0
    if "|" in text:
        head, _, _ = text.partition("|")
        head_s = head.strip()
        if not head_s.isdigit():
            raise ParseError(f"bad strand declaration {head_s!r}", 0)
        declared = int(head_s)
        if declared < 1:
            raise ParseError("strand count must be >= 1", 0)
        body_start = len(head) + 1
    letters = []
    for m in re.finditer(r"\S+", text[body_start:]):
        letters.append(parse_generator(m.group(), body_start + m.start()))
    needed = max((g.index for g in letters), default=0) + 1
    if declared is None:
        declared = needed
    elif declared < needed:
        raise ParseError(f"word uses index {needed - 1} but declares {declared} strands", 0)
    return BraidWord(declared, tuple(letters))


def print_word(w: BraidWord) -> str:
    return f"{w.strands} | " + " ".join(g.token() for g in w.letters)


def word_to_json(w: BraidWord) -> dict:
    return {"strands": w.strands, "word": [g.token() for g in w.letters]}


def word_from_json(data: dict | str) -> BraidWord:
    if isinstance(data, str):
        data = json.loads(data)
    try:
        strands = int(data["strands"])
        tokens = list(data["word"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad word JSON: {exc}") from exc
    letters = tuple(parse_generator(t) for t in tokens)
    if strands < 1 or any(g.index >= strands for g in letters):
        raise ParseError(f"letters out of range for {strands} strands")
    return BraidWord(strands, letters)


# ---------------------------------------------------------------------------
# group operations

def concat(a: BraidWord, b: BraidWord) -> BraidWord:
    if a.strands != b.strands:
        raise StrandMismatch(f"cannot multiply words on {a.strands} and {b.strands} strands")
    return BraidWord(a.strands, a.letters + b.letters)


def invert(w: BraidWord) -> BraidWord:
    return BraidWord(w.strands, tuple(g.inverse() for g in reversed(w.letters)))


def _cancels(a: Generator, b: Generator) -> bool:
    return a.index == b.index and a.inverse().kind is b.kind


def free_reduce(w: BraidWord) -> BraidWord:
    """Remove cancelling pairs (s_i s_i', s_i' s_i, v_i v_i) until none remain."""
    stack: list[Generator] = []
    for g in w.letters:
        if stack and _cancels(stack[-1], g):
            stack.pop()
        else:
            stack.append(g)
    if len(stack) == len(w.letters):
        return w
    return BraidWord(w.strands, tuple(stack))


def is_reduced(w: BraidWord) -> bool:
    return all(not _cancels(a, b) for a, b in zip(w.letters, w.letters[1:]))


def writhe(w: BraidWord) -> int:
    return sum(g.exponent for g in w.letters)


def underlying_permutation(w: BraidWord) -> Permutation:
    """Top position -> bottom position of every strand."""
    # where[k] = current position of the strand that started at top position k
    at = list(range(w.strands + 1))     # at[pos] = strand now at pos
    for g in w.letters:
        i = g.index
        at[i], at[i + 1] = at[i + 1], at[i]
    images = [0] * w.strands
    for pos in range(1, w.strands + 1):
        images[at[pos] - 1] = pos
    return Permutation(tuple(images))


def embed(w: BraidWord, new_strands: int) -> BraidWord:
    if new_strands < w.strands:
        raise StrandMismatch(f"cannot embed {w.strands} strands into {new_strands}")
    return BraidWord(new_strands, w.letters)


def random_word(n: int, length: int, seed: int) -> BraidWord:
    if length < 0:
        raise ValueError("length must be >= 0")
    if length == 0:
        return BraidWord(max(n, 1))
    if n < 2:
        raise ValueError("need at least 2 strands for a non-empty word")
    rng = random.Random(seed)
    alphabet = [g for i in range(1, n) for g in (sigma(i), sigma(i, -1), v(i))]
    return BraidWord(n, tuple(rng.choice(alphabet) for _ in range(length)))


# ---------------------------------------------------------------------------
# relations of VB_n

RELATIONS = ("far-commute", "braid", "v-braid", "mixed")


def _braid_triple(seg: Sequence[Generator], lo_first: bool) -> bool:
    """``seg`` reads x_i x_{i+1} x_i (lo_first) or x_{i+1} x_i x_{i+1}."""
    a, b, c = seg
    step = 1 if lo_first else -1
    return a == c and b.index == a.index + step


def _matches(rel: str, seg: Sequence[Generator], forward: bool) -> bool:
    if rel == "far-commute":
        a, b = seg
        return (b.index - a.index if forward else a.index - b.index) >= 2
    a, b, c = seg
    if not _braid_triple(seg, forward):
        return False
    if rel == "braid":
        return not a.is_virtual and a.kind is b.kind
    if rel == "v-braid":
        return a.is_virtual and b.is_virtual
    if rel == "mixed":
        return a.is_virtual and not b.is_virtual
    raise ValueError(f"unknown relation {rel!r}; expected one of {RELATIONS}")


def _rewrite(rel: str, seg: Sequence[Generator]) -> tuple[Generator, ...]:
    if rel == "far-commute":
        return (seg[1], seg[0])
    a, b, _ = seg
    # x_i y_j x_i  ->  x_j y_i x_j
    return (Generator(a.kind, b.index), Generator(b.kind, a.index), Generator(a.kind, b.index))


def relation_width(rel: str) -> int:
    return 2 if rel == "far-commute" else 3


def apply_relation(w: BraidWord, rel: str, position: int, direction: str = "forward") -> BraidWord:
    """Replace the factor starting at ``position`` by the other side of ``rel``.

    Forward reads the side with the lower index first (``v1 s2 v1 -> v2 s1 v2``,
    ``s1 s3 -> s3 s1``); backward is the reverse rewrite.
    """
    if direction not in ("forward", "backward"):
        raise ValueError(f"direction must be 'forward' or 'backward', got {direction!r}")
    if rel not in RELATIONS:
        raise ValueError(f"unknown relation {rel!r}; expected one of {RELATIONS}")
    width = relation_width(rel)
    seg = w.letters[position:position + width]
    if position < 0 or len(seg) < width or not _matches(rel, seg, direction == "forward"):
        raise RelationMismatch(f"relation {rel} ({direction}) does not match at position {position}")
    return BraidWord(w.strands, w.letters[:position] + _rewrite(rel, seg) + w.letters[position + width:])


def relation_sites(w: BraidWord) -> Iterator[tuple[str, int, str]]:
    """Every (relation, position, direction) that applies to ``w``, in a fixed order."""
    letters = w.letters
    for pos in range(len(letters)):
        for rel in RELATIONS:
            width = relation_width(rel)
            seg = letters[pos:pos + width]
            if len(seg) < width:
                continue
            for direction in ("forward", "backward"):
                if _matches(rel, seg, direction == "forward"):
                    yield rel, pos, direction
