"""Plain-text matrix files.

::

    ring poly over zmod 5
    dims 2 2
    [1,2] [0,1]
    [] 4

Line 1 names the ring, line 2 gives the dimensions, then one line per row
with whitespace-separated entries.  Integers and zmod entries are signed
decimals (zmod entries are reduced), rationals are ``p/q`` or ``p``, and
polynomials are ``[c0,c1,...]`` with coefficients in the base ring's
syntax.  Blank lines and lines starting with ``#`` are ignored.
"""

from __future__ import annotations

import re
from fractions import Fraction
from pathlib import Path
from typing import Optional

from .matrix import Matrix
from .rings import Element, Integers, IntegersMod, Polynomials, Rationals, Ring, RingError, make_ring


class ParseError(ValueError):
    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        self.message = message
        self.line = line
        self.column = column
        where = []
        if line is not None:
            where.append(f"line {line}")
        if column is not None:
            where.append(f"column {column}")
        super().__init__(f"{', '.join(where)}: {message}" if where else message)


_INT = re.compile(r"[+-]?\d+\Z")
_FRAC = re.compile(r"([+-]?\d+)/(\d+)\Z")


def format_element(ring: Ring, x: Element) -> str:
    if isinstance(ring, Polynomials):
        return "[" + ",".join(format_element(ring.base, c) for c in x) + "]"
    if isinstance(ring, Rationals):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    return str(x)


def parse_element(ring: Ring, text: str, column: int = 1, notes: Optional[list] = None) -> Element:
    """Parse one entry; ``column`` is where ``text`` starts, for error reports."""
    if isinstance(ring, Polynomials):
        return _parse_poly(ring, text, column, notes)
    if isinstance(ring, Rationals):
        m = _FRAC.match(text)
        if m:
            if int(m.group(2)) == 0:
                raise ParseError(f"zero denominator in {text!r}", column=column)
            return Fraction(int(m.group(1)), int(m.group(2)))
        if _INT.match(text):
            return Fraction(int(text))
        raise ParseError(f"expected a rational p/q, got {text!r}", column=column)
    if isinstance(ring, (Integers, IntegersMod)):
        if not _INT.match(text):
            raise ParseError(f"expected a decimal integer, got {text!r}", column=column)
        k = int(text)
        x = ring.from_int(k)
        if notes is not None and x != k:
            notes.append((column, f"{text} reduced to {x} mod {ring.modulus}"))
        return x
    raise ParseError(f"no entry syntax for ring {ring}", column=column)


def _parse_poly(ring: Polynomials, text: str, column: int, notes: Optional[list]) -> tuple:
    if len(text) < 2 or text[0] != "[" or text[-1] != "]":
        raise ParseError(f"expected a polynomial [c0,c1,...], got {text!r}", column=column)
    inner = text[1:-1]
    if not inner.strip():
        return ()
    coeffs = []
    for piece, offset in _split_top(inner, ","):
        stripped = piece.strip()
        if not stripped:
            raise ParseError("empty coefficient", column=column + 1 + offset)
        start = column + 1 + offset + (len(piece) - len(piece.lstrip()))
        coeffs.append(parse_element(ring.base, stripped, start, notes))
    return ring._trim(coeffs)


def _split_top(text: str, sep: Optional[str]) -> list[tuple[str, int]]:
    """Split at bracket depth 0 on ``sep`` (or on whitespace when None).

    Returns ``(piece, offset)`` pairs.  Unbalanced brackets raise ParseError.
    """
    pieces = []
    depth = 0
    start: Optional[int] = 0 if sep is not None else None
    for k, ch in enumerate(text):
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
            if depth < 0:
                raise ParseError("unbalanced ']'", column=k + 1)
        if depth == 0 and (ch == sep if sep is not None else ch.isspace()):
            if start is not None:
                pieces.append((text[start:k], start))
            start = k + 1 if sep is not None else None
        elif start is None:
            start = k
    if depth != 0:
        raise ParseError("unbalanced '['", column=len(text))
    if start is not None:
        pieces.append((text[start:], start))
    return pieces


def _content_lines(text: str):
    for number, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if stripped and not stripped.startswith("#"):
            yield number, line


def parse_matrix_text(text: str, notes: Optional[list] = None) -> tuple[Ring, Matrix]:
    """Parse the contents of a matrix file.

    If ``notes`` is a list, ``(line, column, message)`` triples are appended
    for zmod entries that had to be reduced.
    """
    lines = _content_lines(text)

    number, line = next(lines, (1, ""))
    words = line.split()
    if not words or words[0] != "ring":
        raise ParseError("first line must be 'ring <descriptor>'", line=number)
    try:
        ring = make_ring(" ".join(words[1:]))
    except RingError as exc:
        raise ParseError(str(exc), line=number) from None

    number, line = next(lines, (number + 1, ""))
    words = line.split()
    if len(words) != 3 or words[0] != "dims" or not all(w.isdigit() for w in words[1:]):
        raise ParseError("second line must be 'dims <m> <n>'", line=number)
    m, n = int(words[1]), int(words[2])

    # an m x 0 matrix is written as m empty lines, which are skipped like blanks
    rows: list = [[] for _ in range(m)] if n == 0 else []
    for number, line in lines:
        if len(rows) == m:
            raise ParseError(f"more than the declared {m} rows", line=number)
        try:
            tokens = _split_top(line, None)
        except ParseError as exc:
            raise ParseError(exc.message, line=number, column=exc.column) from None
        if len(tokens) != n:
            raise ParseError(f"expected {n} entries, found {len(tokens)}", line=number)
        entries = []
        for token, offset in tokens:
            local: list = []
            try:
                entries.append(parse_element(ring, token, offset + 1, local))
            except ParseError as exc:
                raise ParseError(exc.message, line=number, column=exc.column) from None
            if notes is not None:
                notes.extend((number, c, msg) for c, msg in local)
        rows.append(entries)
    if len(rows) != m:
        raise ParseError(f"declared {m} rows, found {len(rows)}")
    return ring, Matrix(ring, rows, n)


def parse_matrix_file(path, notes: Optional[list] = None) -> tuple[Ring, Matrix]:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    return parse_matrix_text(text, notes)


def render_matrix(a: Matrix) -> str:
    lines = [f"ring {a.ring.descriptor}", f"dims {a.nrows} {a.ncols}"]
    lines.extend(" ".join(format_element(a.ring, x) for x in r) for r in a.rows)
    return "\n".join(lines) + "\n"

