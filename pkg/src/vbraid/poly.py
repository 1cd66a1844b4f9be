"""Exact Laurent polynomials in one variable ``A`` with integer coefficients."""

from __future__ import annotations

import json
import re
from typing import Mapping

from .errors import ParseError


class LaurentPoly:
    """Immutable; stored as a dict exponent -> nonzero int coefficient."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | None = None):
        clean = {}
        for e, c in (terms or {}).items():
            if c:
                clean[int(e)] = int(c)
        self._terms = clean
        self._hash = None

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> LaurentPoly:
        return cls({exponent: coeff})

    @classmethod
    def constant(cls, c: int) -> LaurentPoly:
        return cls({0: c})

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def degree_range(self) -> tuple[int, int]:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return min(self._terms), max(self._terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def scale(self, k: int) -> LaurentPoly:
        return LaurentPoly({e: c * k for e, c in self._terms.items()})

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by A^k."""
        return LaurentPoly({e + k: c for e, c in self._terms.items()})

    def __pow__(self, k: int) -> LaurentPoly:
        if k < 0:
            if len(self._terms) != 1 or abs(next(iter(self._terms.values()))) != 1:
                raise ValueError("only unit monomials have Laurent inverses")
            (e, c), = self._terms.items()
            return LaurentPoly({e * k: c ** -k})
        result = LaurentPoly.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __repr__(self):
        return f"LaurentPoly({format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)


def poly_add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p + q


def poly_mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p * q


def poly_scale(p: LaurentPoly, k: int) -> LaurentPoly:
    return p.scale(k)


A = LaurentPoly.monomial(1)
ONE = LaurentPoly.constant(1)
ZERO = LaurentPoly()
# value of an extra loop in the bracket state sum
LOOP = LaurentPoly({2: -1, -2: -1})


# ---------------------------------------------------------------------------
# text / JSON

def _format_term(e: int, c: int) -> str:
    mag = abs(c)
    if e == 0:
        return str(mag)
    var = "A" if e == 1 else f"A^{e}"
    return var if mag == 1 else f"{mag}{var}"


def format_poly(p: LaurentPoly) -> str:
    """Descending exponents, e.g. ``-A^2 - A^-2``; zero prints as ``0``."""
    items = sorted(p._terms.items(), reverse=True)
    if not items:
        return "0"
    parts = []
    for k, (e, c) in enumerate(items):
        term = _format_term(e, c)
        if k == 0:
            parts.append(("-" if c < 0 else "") + term)
        else:
            parts.append(("- " if c < 0 else "+ ") + term)
    return " ".join(parts)


_TERM = re.compile(r"\s*([+-])?\s*(\d+)?(?:(A)(?:\^(-?\d+))?)?\s*")


def parse_poly(text: str) -> LaurentPoly:
    s = text.replace("−", "-").strip()
    if not s:
        raise ParseError("empty polynomial")
    out: dict[int, int] = {}
    pos = 0
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        sign, digits, var, exp = m.groups()
        if m.end() == pos or (digits is None and var is None):
            raise ParseError(f"bad polynomial term in {text!r}", pos)
        if sign is None and not first:
            raise ParseError(f"missing operator in {text!r}", pos)
        coeff = int(digits) if digits else 1
        if sign == "-":
            coeff = -coeff
        e = (int(exp) if exp is not None else 1) if var else 0
        out[e] = out.get(e, 0) + coeff
        pos = m.end()
        first = False
    return LaurentPoly(out)


def poly_to_json(p: LaurentPoly) -> dict[str, int]:
    return {str(e): c for e, c in sorted(p._terms.items(), reverse=True)}


def poly_from_json(data: Mapping[str, int] | str) -> LaurentPoly:
    if isinstance(data, str):
        data = json.loads(data)
    try:
        return LaurentPoly({int(e): int(c) for e, c in data.items()})
    except (AttributeError, TypeError, ValueError) as exc:
        raise ParseError(f"bad polynomial JSON: {exc}") from exc
