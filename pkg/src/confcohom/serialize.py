"""JSON and text forms of ring elements, stable across runs.

JSON form: a list of term records {"coeff": "<decimal integer string>",
"factors": [{"copy": "w"|"wp", "i": ..., "j": ...}, ...]} sorted in
canonical monomial order.  Coefficients travel as strings so arbitrary
precision survives any JSON implementation.

Text form: the same thing humans type, e.g. "w(1,3)*wp(2,3) - 2*w(1,2)".
"""

from __future__ import annotations

import re

from .algebra import AlgebraContext, Element, Monomial, canonical_factors
from .errors import ParseError

_TOKEN_RE = re.compile(r"\s*(wp?\(\s*\d+\s*,\s*\d+\s*\)|\d+|[+\-*])")
_FACTOR_RE = re.compile(r"(wp?)\(\s*(\d+)\s*,\s*(\d+)\s*\)\Z")


def element_to_obj(e: Element) -> list[dict]:
    """Term records in canonical monomial order."""
    return [
        {
            "coeff": str(coeff),
            "factors": [{"copy": g.copy, "i": g.i, "j": g.j} for g in mono.factors],
        }
        for mono, coeff in e.terms()
    ]


def element_from_obj(ctx: AlgebraContext, obj) -> Element:
    """Rebuild an element from term records (factors in any order)."""
    if not isinstance(obj, list):
        raise ParseError(f"element JSON must be a list of terms, got {type(obj).__name__}")
    out = ctx.zero()
    for rec in obj:
        if not isinstance(rec, dict) or "coeff" not in rec or "factors" not in rec:
            raise ParseError(f"bad term record: {rec!r}")
        try:
            coeff = int(rec["coeff"])
        except (TypeError, ValueError):
            raise ParseError(f"bad coefficient: {rec['coeff']!r}")
        factors = []
        for f in rec["factors"]:
            if not isinstance(f, dict) or f.get("copy") not in ("w", "wp"):
                raise ParseError(f"bad factor record: {f!r}")
            try:
                i, j = int(f["i"]), int(f["j"])
            except (KeyError, TypeError, ValueError):
                raise ParseError(f"bad factor record: {f!r}")
            factors.append(ctx.generator(i, j, primed=(f["copy"] == "wp")))
        sign, mono = canonical_factors(tuple(factors), ctx.d_even)
        if sign:
            out = out + Element(ctx, {mono: sign * coeff})
    return out


def element_to_text(e: Element) -> str:
    """Human-readable form; parse_element_text inverts it."""
    return str(e)


def _tokenize(text: str) -> list[str]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            raise ParseError(f"unexpected input at position {pos}: {text[pos:pos + 12]!r}")
        tokens.append(m.group(1))
        pos = m.end()
    return tokens


def parse_element_text(ctx: AlgebraContext, text: str) -> Element:
    """Parse "w(1,3)*wp(2,3) - 2*w(1,2)" style element text."""
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty element text")
    result = ctx.zero()
    i = 0
    while i < len(tokens):
        sign = 1
        while i < len(tokens) and tokens[i] in "+-":
            if tokens[i] == "-":
                sign = -sign
            i += 1
        if i >= len(tokens):
            raise ParseError("dangling sign at end of element text")
        coeff = sign
        factors = []
        expect_atom = True
        while i < len(tokens) and tokens[i] not in "+-":
            t = tokens[i]
            if t == "*":
                if expect_atom:
                    raise ParseError("misplaced '*' in element text")
                expect_atom = True
                i += 1
                continue
            if not expect_atom:
                raise ParseError(f"missing operator before {t!r}")
            if t.isdigit():
                coeff *= int(t)
            else:
                f = _FACTOR_RE.match(t)
                assert f is not None  # the tokenizer only emits these shapes
                factors.append(
                    ctx.generator(int(f.group(2)), int(f.group(3)), primed=(f.group(1) == "wp"))
                )
            expect_atom = False
            i += 1
        if expect_atom:
            raise ParseError("term ends with an operator")
        fsign, mono = canonical_factors(tuple(factors), ctx.d_even)
        if fsign:
            result = result + Element(ctx, {mono: fsign * coeff})
    return result
