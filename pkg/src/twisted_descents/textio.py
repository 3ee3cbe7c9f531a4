"""Parsing and rendering for elements, tensors, and group-algebra sums.

The element grammar::

    element   = '0' | [sign] term ((' ')* sign (' ')* term)*
    term      = [coeff '*'] '[' blocklist ']'
    blocklist = block ('|' block)* | ''
    block     = '{' int (',' int)* '}'

Blocks must list their elements in strictly increasing order and be pairwise
disjoint within one bracket.  Renderings are canonical: terms in the standard
set-composition order, every coefficient explicit (``1*[{2}]``).
"""

from __future__ import annotations

from typing import Iterable

from .algebra import TDElement, TensorElement
from .setcomp import SetComposition


class ParseError(ValueError):
    """Malformed element text; ``position`` is the 0-based offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch: str) -> bool:
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def expect(self, ch: str):
        if not self.take(ch):
            found = self.peek() or "end of input"
            raise ParseError(f"expected {ch!r}, found {found!r}", self.pos)

    def integer(self) -> int:
        start = self.pos
        if self.peek() == "-":
            self.pos += 1
        if not self.peek().isdigit():
            raise ParseError("expected an integer", self.pos)
        while self.peek().isdigit():
            self.pos += 1
        return int(self.text[start : self.pos])


def _parse_block(sc: _Scanner) -> frozenset[int]:
    sc.expect("{")
    values = [sc.integer()]
    while sc.take(","):
        nxt = sc.integer()
        if nxt <= values[-1]:
            raise ParseError(
                "block elements must be strictly increasing", sc.pos - 1
            )
        values.append(nxt)
    sc.expect("}")
    if values[0] < 1:
        raise ParseError("block elements must be positive", sc.pos - 1)
    return frozenset(values)


def _parse_bracket(sc: _Scanner) -> SetComposition:
    start = sc.pos
    sc.expect("[")
    blocks: list[frozenset[int]] = []
    if sc.peek() != "]":
        blocks.append(_parse_block(sc))
        while sc.take("|"):
            blocks.append(_parse_block(sc))
    sc.expect("]")
    try:
        return SetComposition(blocks)
    except ValueError as exc:
        raise ParseError(str(exc), start) from None


def _parse_term(sc: _Scanner) -> tuple[int, SetComposition]:
    coeff = 1
    if sc.peek().isdigit():
        coeff = sc.integer()
        sc.skip_ws()
        sc.expect("*")
        sc.skip_ws()
    return coeff, _parse_bracket(sc)


def parse(text: str) -> TDElement:
    """Parse element text; raises ParseError with a position on bad input."""
    sc = _Scanner(text)
    sc.skip_ws()
    if sc.peek() == "0":
        mark = sc.pos
        sc.pos += 1
        sc.skip_ws()
        if sc.pos == len(text):
            return TDElement._make({})
        sc.pos = mark
    terms: dict[SetComposition, int] = {}
    sign = -1 if sc.take("-") else 1
    sc.take("+")
    sc.skip_ws()
    while True:
        coeff, key = _parse_term(sc)
        terms[key] = terms.get(key, 0) + sign * coeff
        sc.skip_ws()
        if sc.take("+"):
            sign = 1
        elif sc.take("-"):
            sign = -1
        else:
            break
        sc.skip_ws()
    if sc.pos != len(text):
        raise ParseError(f"unexpected {sc.peek()!r}", sc.pos)
    return TDElement._make({k: c for k, c in terms.items() if c})


def render_blocks(sc: SetComposition) -> str:
    return "[" + "|".join("{" + ",".join(map(str, b)) + "}" for b in sc.blocks) + "]"


def _join_terms(parts: list[tuple[int, str]]) -> str:
    if not parts:
        return "0"
    out = []
    for i, (coeff, body) in enumerate(parts):
        mag = f"{abs(coeff)}*{body}"
        if i == 0:
            out.append(("-" if coeff < 0 else "") + mag)
        else:
            out.append(("- " if coeff < 0 else "+ ") + mag)
    return " ".join(out)


def render(x: TDElement) -> str:
    """Canonical text for an element; the zero element renders as ``0``."""
    return _join_terms([(c, render_blocks(sc)) for sc, c in x])


def render_tensor(x: TensorElement, ascii_only: bool = False) -> str:
    sep = "(x)" if ascii_only else "⊗"
    return _join_terms(
        [(c, render_blocks(l) + sep + render_blocks(r)) for (l, r), c in x]
    )


def element_to_json(x: TDElement) -> dict:
    return {"terms": [{"coeff": c, "blocks": [list(b) for b in sc.blocks]} for sc, c in x]}


def element_from_json(obj) -> TDElement:
    if not isinstance(obj, dict) or "terms" not in obj:
        raise ValueError("expected an object with a 'terms' list")
    terms: dict[SetComposition, int] = {}
    for entry in obj["terms"]:
        try:
            key = SetComposition(entry["blocks"])
            coeff = int(entry["coeff"])
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed term {entry!r}") from exc
        terms[key] = terms.get(key, 0) + coeff
    return TDElement._make({k: c for k, c in terms.items() if c})


def tensor_to_json(x: TensorElement) -> dict:
    return {
        "terms": [
            {
                "coeff": c,
                "left": [list(b) for b in l.blocks],
                "right": [list(b) for b in r.blocks],
            }
            for (l, r), c in x
        ]
    }


def tensor_from_json(obj) -> TensorElement:
    if not isinstance(obj, dict) or "terms" not in obj:
        raise ValueError("expected an object with a 'terms' list")
    terms: dict = {}
    for entry in obj["terms"]:
        try:
            key = (SetComposition(entry["left"]), SetComposition(entry["right"]))
            coeff = int(entry["coeff"])
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed term {entry!r}") from exc
        terms[key] = terms.get(key, 0) + coeff
    return TensorElement._make({k: c for k, c in terms.items() if c})


def parse_ints(text: str, what: str) -> tuple[int, ...]:
    try:
        return tuple(int(piece.strip()) for piece in text.split(","))
    except ValueError:
        raise ParseError(f"malformed {what}: {text!r}", 0) from None


def parse_permutation(text: str) -> tuple[int, ...]:
    """One-line notation, e.g. ``3,1,2``."""
    values = parse_ints(text, "permutation")
    if sorted(values) != list(range(1, len(values) + 1)):
        raise ParseError(f"{values} is not a permutation of 1..{len(values)}", 0)
    return values


def parse_composition(text: str) -> tuple[int, ...]:
    """Comma-separated positive parts, e.g. ``2,1,1``."""
    values = parse_ints(text, "composition")
    if any(v < 1 for v in values):
        raise ParseError("composition parts must be positive", 0)
    return values


def render_permutation(p: Iterable[int]) -> str:
    return ",".join(map(str, p))


def render_composition(c: Iterable[int]) -> str:
    return "(" + ",".join(map(str, c)) + ")"
