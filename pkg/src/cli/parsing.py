"""
Text forms of classes and Mukai vectors.

    class  := '[' int (',' int){9} [';' bit] ']'
    vector := '(' int ',' class ',' int ')'

The last component of a vector is s = 2a, so every entry stays integral.
Whitespace is allowed between tokens.
"""
from src.errors import ParseError
from src.lattice.classes import NSClass
from src.lattice.form import RANK
from src.mukai.vector import MukaiVector


class Scanner:
    """Character cursor with 1-based column reporting on one line of input."""

    def __init__(self, text: str, line: int = 1, source: str | None = None, offset: int = 0):
        self.text = text
        self.pos = 0
        self.line = line
        self.source = source
        self.offset = offset

    def error(self, message: str, pos: int | None = None) -> ParseError:
        column = self.offset + (self.pos if pos is None else pos) + 1
        return ParseError(message, line=self.line, column=column, source=self.source)

    def skip_space(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos] in " \t":
            self.pos += 1

    def peek(self) -> str:
        self.skip_space()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, char: str) -> None:
        found = self.peek()
        if found != char:
            shown = repr(found) if found else "end of input"
            raise self.error(f"expected {char!r}, found {shown}")
        self.pos += 1

    def integer(self) -> int:
        self.skip_space()
        start = self.pos
        if self.pos < len(self.text) and self.text[self.pos] in "+-":
            self.pos += 1
        digits = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == digits:
            self.pos = start
            raise self.error("expected an integer")
        return int(self.text[start:self.pos])

    def end(self) -> None:
        if self.peek():
            raise self.error(f"unexpected trailing input {self.text[self.pos:]!r}")

    def ns_class(self) -> NSClass:
        self.skip_space()
        opening = self.pos
        self.expect("[")
        coords = [self.integer()]
        while self.peek() == ",":
            self.pos += 1
            coords.append(self.integer())
        if len(coords) != RANK:
            raise self.error(f"expected {RANK} coordinates, got {len(coords)}", pos=opening)

        torsion = 0
        if self.peek() == ";":
            self.pos += 1
            bit_pos = self.pos
            torsion = self.integer()
            if torsion not in (0, 1):
                raise self.error(f"torsion bit must be 0 or 1, got {torsion}", pos=bit_pos)
        self.expect("]")
        return NSClass(tuple(coords), torsion)

    def mukai_vector(self) -> MukaiVector:
        self.expect("(")
        rank = self.integer()
        self.expect(",")
        c1 = self.ns_class()
        self.expect(",")
        s = self.integer()
        self.expect(")")
        return MukaiVector(rank, c1, s)


def parse_class(text: str, line: int = 1, source: str | None = None, offset: int = 0) -> NSClass:
    """
    Parse ``[c1,...,c10;t]``; the torsion part is optional and defaults to 0.

    Raises:
        ParseError: With the line and column of the first offending character
    """
    scanner = Scanner(text, line=line, source=source, offset=offset)
    value = scanner.ns_class()
    scanner.end()
    return value


def parse_vector(text: str, source: str | None = None) -> MukaiVector:
    """
    Parse ``(r,[c1,...,c10;t],s)`` and check r + s even.

    Raises:
        ParseError: On malformed text or a parity violation
    """
    scanner = Scanner(text, source=source)
    v = scanner.mukai_vector()
    scanner.end()
    if not v.has_valid_parity:
        raise ParseError(
            f"r + s must be even in (r, L, s), got r={v.rank}, s={v.a2}", source=source
        )
    return v
