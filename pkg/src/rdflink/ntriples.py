"""Line-oriented N-Triples parsing and canonical serialization.

A Graph is a frozenset of Triple values: duplicate statements collapse,
and two documents are equal iff they describe the same triple set.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field

__all__ = [
    "Term",
    "TermKind",
    "Triple",
    "Graph",
    "ParseError",
    "ErrorCategory",
    "ParseFailure",
    "LineKind",
    "iri",
    "literal",
    "bnode",
    "parse_line",
    "parse_document",
    "scan_document",
    "render_term",
    "render_triple",
    "serialize",
    "canonical_triples",
]

_BNODE_LABEL = re.compile(r"[A-Za-z][A-Za-z0-9]*\Z")
_LANG_TAG = re.compile(r"[A-Za-z]+(-[A-Za-z0-9]+)*\Z")


class TermKind(enum.Enum):
    IRI = "iri"
    LITERAL = "literal"
    BLANK = "bnode"


@dataclass(frozen=True, slots=True)
class Term:
    """An RDF term: IRI, literal, or blank node.

    `lexical` holds the IRI text without angle brackets, the literal's
    lexical form, or the blank-node label without the `_:` prefix.
    A literal may carry a language tag or a datatype IRI, never both.
    """

    kind: TermKind
    lexical: str
    language: str | None = None
    datatype: str | None = None

    def __post_init__(self) -> None:
        if self.kind is TermKind.IRI:
            _check_iri_text(self.lexical)
        elif self.kind is TermKind.BLANK:
            if not _BNODE_LABEL.match(self.lexical):
                raise ValueError(f"invalid blank node label: {self.lexical!r}")
        if self.kind is not TermKind.LITERAL:
            if self.language is not None or self.datatype is not None:
                raise ValueError("only literals carry a language or datatype")
        else:
            if self.language is not None and self.datatype is not None:
                raise ValueError("literal cannot have both language and datatype")
            if self.language is not None and not _LANG_TAG.match(self.language):
                raise ValueError(f"invalid language tag: {self.language!r}")
            if self.datatype is not None:
                _check_iri_text(self.datatype)

    @property
    def is_literal(self) -> bool:
        return self.kind is TermKind.LITERAL


def _check_iri_text(text: str) -> None:
    if not text:
        raise ValueError("IRI must be non-empty")
    if any(c in "<>" or c.isspace() for c in text):
        raise ValueError(f"IRI contains whitespace or angle bracket: {text!r}")


def iri(text: str) -> Term:
    return Term(TermKind.IRI, text)


def literal(lexical: str, language: str | None = None, datatype: str | None = None) -> Term:
    return Term(TermKind.LITERAL, lexical, language, datatype)


def bnode(label: str) -> Term:
    return Term(TermKind.BLANK, label)


@dataclass(frozen=True, slots=True)
class Triple:
    subject: Term
    predicate: Term
    object: Term

    def __post_init__(self) -> None:
        if self.subject.kind is TermKind.LITERAL:
            raise ValueError("literal cannot be a subject")
        if self.predicate.kind is not TermKind.IRI:
            raise ValueError("predicate must be an IRI")


Graph = frozenset  # frozenset[Triple]


class ErrorCategory(enum.Enum):
    BAD_IRI = "BadIri"
    BAD_LITERAL = "BadLiteral"
    BAD_BLANK_NODE = "BadBlankNode"
    MISSING_DOT = "MissingDot"
    TERM_COUNT = "TermCount"
    BAD_ESCAPE = "BadEscape"


@dataclass(frozen=True, slots=True)
class ParseError:
    """One malformed line; line and column are 1-based."""

    line: int
    column: int
    message: str
    category: ErrorCategory

    def __str__(self) -> str:
        return f"line {self.line}, col {self.column}: {self.message} [{self.category.value}]"


class ParseFailure(ValueError):
    """Raised by parse_document when the input has malformed lines."""

    def __init__(self, errors: list[ParseError]):
        self.errors = tuple(errors)
        super().__init__("; ".join(str(e) for e in errors))


class LineKind(enum.Enum):
    COMMENT = "comment"
    BLANK = "blank"


class _LineError(Exception):
    def __init__(self, column: int, message: str, category: ErrorCategory):
        self.column = column
        self.message = message
        self.category = category


_ECHAR = {"t": "\t", "n": "\n", "r": "\r", '"': '"', "\\": "\\"}


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def at_end(self) -> bool:
        return self.pos >= len(self.text)

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos] in " \t":
            self.pos += 1

    def _fail(self, message: str, category: ErrorCategory, column: int | None = None):
        raise _LineError(self.pos + 1 if column is None else column, message, category)

    def read_iri(self) -> Term:
        start = self.pos
        self.pos += 1  # consume '<'
        while not self.at_end():
            c = self.text[self.pos]
            if c == ">":
                text = self.text[start + 1 : self.pos]
                self.pos += 1
                if not text:
                    self._fail("empty IRI", ErrorCategory.BAD_IRI, start + 1)
                return Term(TermKind.IRI, text)
            if c in "< \t":
                self._fail(f"illegal character {c!r} in IRI", ErrorCategory.BAD_IRI)
            self.pos += 1
        self._fail("unterminated IRI", ErrorCategory.BAD_IRI, start + 1)

    def read_bnode(self) -> Term:
        start = self.pos
        self.pos += 1  # consume '_'
        if self.peek() != ":":
            self._fail("expected ':' after '_'", ErrorCategory.BAD_BLANK_NODE)
        self.pos += 1
        label_start = self.pos
        while not self.at_end() and self.text[self.pos].isalnum() and self.text[self.pos].isascii():
            self.pos += 1
        label = self.text[label_start : self.pos]
        if not _BNODE_LABEL.match(label):
            self._fail("invalid blank node label", ErrorCategory.BAD_BLANK_NODE, start + 1)
        return Term(TermKind.BLANK, label)

    def read_literal(self) -> Term:
        start = self.pos
        self.pos += 1  # consume '"'
        chars: list[str] = []
        while True:
            if self.at_end():
                self._fail("unterminated string literal", ErrorCategory.BAD_LITERAL, start + 1)
            c = self.text[self.pos]
            if c == '"':
                self.pos += 1
                break
            if c == "\\":
                chars.append(self._read_escape())
                continue
            chars.append(c)
            self.pos += 1
        lexical = "".join(chars)
        if self.peek() == "@":
            self.pos += 1
            tag_start = self.pos
            while not self.at_end() and (self.text[self.pos].isalnum() and self.text[self.pos].isascii() or self.text[self.pos] == "-"):
                self.pos += 1
            tag = self.text[tag_start : self.pos]
            if not _LANG_TAG.match(tag):
                self._fail("invalid language tag", ErrorCategory.BAD_LITERAL, tag_start + 1)
            return Term(TermKind.LITERAL, lexical, language=tag)
        if self.peek() == "^":
            caret = self.pos
            self.pos += 1
            if self.peek() != "^":
                self._fail("expected '^^' before datatype IRI", ErrorCategory.BAD_LITERAL, caret + 1)
            self.pos += 1
            if self.peek() != "<":
                self._fail("expected IRI after '^^'", ErrorCategory.BAD_IRI)
            dtype = self.read_iri()
            return Term(TermKind.LITERAL, lexical, datatype=dtype.lexical)
        return Term(TermKind.LITERAL, lexical)

    def _read_escape(self) -> str:
        col = self.pos + 1
        self.pos += 1  # consume '\'
        if self.at_end():
            self._fail("dangling escape at end of literal", ErrorCategory.BAD_ESCAPE, col)
        c = self.text[self.pos]
        self.pos += 1
        if c in _ECHAR:
            return _ECHAR[c]
        if c in "uU":
            width = 4 if c == "u" else 8
            digits = self.text[self.pos : self.pos + width]
            if len(digits) < width or any(d not in "0123456789abcdefABCDEF" for d in digits):
                self._fail(f"\\{c} needs {width} hex digits", ErrorCategory.BAD_ESCAPE, col)
            self.pos += width
            code = int(digits, 16)
            if code > 0x10FFFF or 0xD800 <= code <= 0xDFFF:
                self._fail(f"escape U+{code:X} is not a valid character", ErrorCategory.BAD_ESCAPE, col)
            return chr(code)
        self._fail(f"unknown escape \\{c}", ErrorCategory.BAD_ESCAPE, col)
        raise AssertionError("unreachable")

    def read_term(self) -> tuple[Term, int]:
        column = self.pos + 1
        c = self.peek()
        if c == "<":
            return self.read_iri(), column
        if c == '"':
            return self.read_literal(), column
        if c == "_":
            return self.read_bnode(), column
        self._fail(f"expected IRI, literal, or blank node, found {c!r}", ErrorCategory.BAD_IRI)
        raise AssertionError("unreachable")


def parse_line(line: str, line_number: int = 1):
    """Parse a single line (no terminator) into a Triple, LineKind, or ParseError."""
    sc = _Scanner(line)
    sc.skip_ws()
    if sc.at_end():
        return LineKind.BLANK
    if sc.peek() == "#":
        return LineKind.COMMENT
    try:
        terms: list[tuple[Term, int]] = []
        while True:
            sc.skip_ws()
            if sc.at_end():
                raise _LineError(sc.pos + 1, "statement not terminated by '.'", ErrorCategory.MISSING_DOT)
            if sc.peek() == ".":
                dot_col = sc.pos + 1
                sc.pos += 1
                sc.skip_ws()
                if not sc.at_end():
                    raise _LineError(sc.pos + 1, "unexpected content after '.'", ErrorCategory.MISSING_DOT)
                break
            terms.append(sc.read_term())
        if len(terms) != 3:
            raise _LineError(
                dot_col if len(terms) < 3 else terms[3][1],
                f"expected 3 terms before '.', found {len(terms)}",
                ErrorCategory.TERM_COUNT,
            )
        (s, s_col), (p, p_col), (o, _) = terms
        if s.kind is TermKind.LITERAL:
            raise _LineError(s_col, "literal cannot be a subject", ErrorCategory.BAD_LITERAL)
        if p.kind is TermKind.BLANK:
            raise _LineError(p_col, "blank node cannot be a predicate", ErrorCategory.BAD_BLANK_NODE)
        if p.kind is not TermKind.IRI:
            raise _LineError(p_col, "predicate must be an IRI", ErrorCategory.BAD_LITERAL)
        return Triple(s, p, o)
    except _LineError as e:
        return ParseError(line_number, e.column, e.message, e.category)


def scan_document(text: str) -> tuple[Graph, list[ParseError]]:
    """Parse every line, collecting both the triples and all errors found."""
    triples: set[Triple] = set()
    errors: list[ParseError] = []
    for number, raw in enumerate(text.split("\n"), start=1):
        line = raw[:-1] if raw.endswith("\r") else raw
        result = parse_line(line, number)
        if isinstance(result, Triple):
            triples.add(result)
        elif isinstance(result, ParseError):
            errors.append(result)
    return frozenset(triples), errors


def parse_document(text: str) -> Graph:
    """Parse a full document; raises ParseFailure listing every malformed line."""
    triples, errors = scan_document(text)
    if errors:
        raise ParseFailure(errors)
    return triples


def _escape(lexical: str) -> str:
    out = []
    for c in lexical:
        if c == "\\":
            out.append("\\\\")
        elif c == '"':
            out.append('\\"')
        elif c == "\n":
            out.append("\\n")
        elif c == "\r":
            out.append("\\r")
        elif c == "\t":
            out.append("\\t")
        else:
            out.append(c)
    return "".join(out)


def render_term(t: Term) -> str:
    if t.kind is TermKind.IRI:
        return f"<{t.lexical}>"
    if t.kind is TermKind.BLANK:
        return f"_:{t.lexical}"
    rendered = f'"{_escape(t.lexical)}"'
    if t.language is not None:
        return f"{rendered}@{t.language}"
    if t.datatype is not None:
        return f"{rendered}^^<{t.datatype}>"
    return rendered


def render_triple(t: Triple) -> str:
    return f"{render_term(t.subject)} {render_term(t.predicate)} {render_term(t.object)} ."


def canonical_triples(g: Graph) -> list[Triple]:
    """Triples in canonical document order (sorted rendered lines)."""
    return sorted(g, key=render_triple)


def serialize(g: Graph) -> str:
    """Canonical form: sorted lines, LF-terminated, minimal escaping."""
    # str sort order equals UTF-8 byte order: the encoding preserves
    # code-point order.
    return "".join(line + "\n" for line in sorted(render_triple(t) for t in g))
