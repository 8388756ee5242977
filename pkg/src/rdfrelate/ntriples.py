"""Terms, triples and a line-oriented N-Triples reader/writer.

Blank nodes are scoped to the document they were parsed from: ``_:x`` read
under two different ``doc_id`` values gives two distinct terms.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator

__all__ = [
    "TermKind",
    "Term",
    "Triple",
    "TripleSet",
    "ParseError",
    "parse_document",
    "parse_term",
    "serialize",
]


class TermKind(enum.Enum):
    IRI = "iri"
    LITERAL = "literal"
    BLANK = "blank"


_KIND_ORDER = {TermKind.IRI: 0, TermKind.BLANK: 1, TermKind.LITERAL: 2}
_IRI_FORBIDDEN = re.compile(r'[\s<>"]')
_LANG_RE = re.compile(r"^[a-zA-Z]+(-[a-zA-Z0-9]+)*$")


def _valid_label(label: str) -> bool:
    if not label or label.endswith("."):
        return False
    if not (label[0].isalnum() or label[0] == "_"):
        return False
    return all(c.isalnum() or c in "_-." for c in label[1:])


@dataclass(frozen=True)
class Term:
    """An RDF node.

    ``value`` holds the IRI text, the literal's lexical form, or the blank
    node label depending on ``kind``. Use the ``iri``/``literal``/``blank``
    constructors rather than building one directly.
    """

    kind: TermKind
    value: str
    datatype: str | None = None
    lang: str | None = None
    doc: str | None = None

    def __post_init__(self):
        if self.kind is TermKind.IRI:
            if not self.value or _IRI_FORBIDDEN.search(self.value):
                raise ValueError(f"invalid IRI text: {self.value!r}")
            if self.datatype or self.lang or self.doc:
                raise ValueError("IRI terms carry no datatype, language or document")
        elif self.kind is TermKind.LITERAL:
            if self.datatype is not None and self.lang is not None:
                raise ValueError("a literal has at most one of datatype and language tag")
            if self.datatype is not None and (
                not self.datatype or _IRI_FORBIDDEN.search(self.datatype)
            ):
                raise ValueError(f"invalid datatype IRI: {self.datatype!r}")
            if self.lang is not None and not _LANG_RE.match(self.lang):
                raise ValueError(f"invalid language tag: {self.lang!r}")
            if self.doc is not None:
                raise ValueError("literals are not document scoped")
        else:
            if not _valid_label(self.value):
                raise ValueError(f"invalid blank node label: {self.value!r}")
            if not self.doc:
                raise ValueError("blank nodes need an owning document id")
            if self.datatype or self.lang:
                raise ValueError("blank nodes carry no datatype or language")

    @classmethod
    def iri(cls, text: str) -> Term:
        return cls(TermKind.IRI, text)

    @classmethod
    def literal(cls, lexical: str, datatype: str | None = None, lang: str | None = None) -> Term:
        return cls(TermKind.LITERAL, lexical, datatype=datatype, lang=lang)

    @classmethod
    def blank(cls, label: str, doc: str) -> Term:
        return cls(TermKind.BLANK, label, doc=doc)

    @property
    def is_iri(self) -> bool:
        return self.kind is TermKind.IRI

    @property
    def is_literal(self) -> bool:
        return self.kind is TermKind.LITERAL

    @property
    def is_blank(self) -> bool:
        return self.kind is TermKind.BLANK

    def sort_key(self) -> tuple:
        return (
            _KIND_ORDER[self.kind],
            self.value,
            self.datatype or "",
            self.lang or "",
            self.doc or "",
        )

    def n3(self) -> str:
        """N-Triples spelling of the term (blank nodes lose their document id)."""
        if self.kind is TermKind.IRI:
            return f"<{self.value}>"
        if self.kind is TermKind.BLANK:
            return f"_:{self.value}"
        text = '"' + _escape_string(self.value) + '"'
        if self.datatype is not None:
            text += f"^^<{self.datatype}>"
        elif self.lang is not None:
            text += "@" + self.lang
        return text

    def __str__(self) -> str:
        return self.n3()

    def __repr__(self) -> str:
        if self.is_blank:
            return f"Term({self.n3()}@{self.doc})"
        return f"Term({self.n3()})"


@dataclass(frozen=True)
class Triple:
    subject: Term
    predicate: Term
    object: Term

    def __post_init__(self):
        if self.subject.is_literal:
            raise ValueError("a literal cannot be the subject of a triple")
        if self.predicate.is_blank:
            raise ValueError("a blank node cannot be the predicate of a triple")

    def __iter__(self) -> Iterator[Term]:
        return iter((self.subject, self.predicate, self.object))

    def terms(self) -> tuple[Term, Term, Term]:
        return (self.subject, self.predicate, self.object)

    def sort_key(self) -> tuple:
        return tuple(t.sort_key() for t in self.terms())

    def n3(self) -> str:
        return f"{self.subject.n3()} {self.predicate.n3()} {self.object.n3()} ."

    def __str__(self) -> str:
        return self.n3()

    def __repr__(self) -> str:
        return f"Triple({self.n3()})"


@dataclass(frozen=True, eq=False)
class TripleSet:
    """A named set of triples iterated in first-occurrence order."""

    graph_id: str
    triples: tuple[Triple, ...] = ()
    _members: frozenset = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not self.graph_id:
            raise ValueError("graph id must be nonempty")
        unique = tuple(dict.fromkeys(self.triples))
        object.__setattr__(self, "triples", unique)
        object.__setattr__(self, "_members", frozenset(unique))

    @classmethod
    def of(cls, graph_id: str, triples: Iterable[Triple] = ()) -> TripleSet:
        return cls(graph_id, tuple(triples))

    def __len__(self) -> int:
        return len(self.triples)

    def __iter__(self) -> Iterator[Triple]:
        return iter(self.triples)

    def __contains__(self, triple) -> bool:
        return triple in self._members

    def __eq__(self, other) -> bool:
        if not isinstance(other, TripleSet):
            return NotImplemented
        return self.graph_id == other.graph_id and self._members == other._members

    def __hash__(self) -> int:
        return hash((self.graph_id, self._members))

    def as_set(self) -> frozenset:
        return self._members


class ParseError(ValueError):
    """Malformed N-Triples input, located by 1-based line and column."""

    def __init__(self, reason: str, line: int = 1, column: int = 1, source: str | None = None):
        self.reason = reason
        self.line = line
        self.column = column
        self.source = source
        super().__init__(str(self))

    def __str__(self) -> str:
        return f"{self.source or '<input>'}:{self.line}:{self.column}: {self.reason}"


# -- reading ---------------------------------------------------------------

_ECHARS = {"t": "\t", "b": "\b", "n": "\n", "r": "\r", "f": "\f", '"': '"', "'": "'", "\\": "\\"}
_HEX = set("0123456789abcdefABCDEF")


class _Line:
    """Cursor over a single line of input."""

    def __init__(self, text: str, lineno: int, doc_id: str, source: str | None):
        self.text = text
        self.pos = 0
        self.lineno = lineno
        self.doc_id = doc_id
        self.source = source

    def error(self, reason: str, pos: int | None = None) -> ParseError:
        col = (self.pos if pos is None else pos) + 1
        return ParseError(reason, self.lineno, col, self.source)

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def at_end(self) -> bool:
        return self.pos >= len(self.text)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos] in " \t":
            self.pos += 1

    def read_uchar(self, start: int) -> str:
        # self.pos sits on the 'u' or 'U' after a backslash
        width = 4 if self.text[self.pos] == "u" else 8
        digits = self.text[self.pos + 1 : self.pos + 1 + width]
        if len(digits) != width or not set(digits) <= _HEX:
            raise self.error("malformed unicode escape", start)
        code = int(digits, 16)
        if code > 0x10FFFF or 0xD800 <= code <= 0xDFFF:
            raise self.error("unicode escape outside the valid code point range", start)
        self.pos += 1 + width
        return chr(code)

    def read_iri(self) -> str:
        start = self.pos
        self.pos += 1
        out = []
        while True:
            if self.at_end():
                raise self.error("unterminated IRI", start)
            c = self.text[self.pos]
            if c == ">":
                self.pos += 1
                break
            if c == "\\":
                esc = self.pos
                self.pos += 1
                if self.peek() not in ("u", "U"):
                    raise self.error("only \\u and \\U escapes are allowed in IRIs", esc)
                out.append(self.read_uchar(esc))
                continue
            if c in ' \t<"':
                raise self.error(f"illegal character {c!r} in IRI")
            out.append(c)
            self.pos += 1
        iri = "".join(out)
        if not iri:
            raise self.error("empty IRI", start)
        if _IRI_FORBIDDEN.search(iri):
            raise self.error("escaped IRI contains whitespace, quotes or angle brackets", start)
        return iri

    def read_string(self) -> str:
        start = self.pos
        self.pos += 1
        out = []
        while True:
            if self.at_end():
                raise self.error("unterminated string literal", start)
            c = self.text[self.pos]
            if c == '"':
                self.pos += 1
                return "".join(out)
            if c == "\\":
                esc = self.pos
                self.pos += 1
                nxt = self.peek()
                if nxt in ("u", "U"):
                    out.append(self.read_uchar(esc))
                elif nxt in _ECHARS:
                    out.append(_ECHARS[nxt])
                    self.pos += 1
                else:
                    raise self.error("malformed string escape", esc)
                continue
            out.append(c)
            self.pos += 1

    def read_term(self, what: str) -> Term:
        start = self.pos
        c = self.peek()
        if c == "<":
            return Term.iri(self.read_iri())
        if c == '"':
            lexical = self.read_string()
            if self.text.startswith("^^", self.pos):
                self.pos += 2
                if self.peek() != "<":
                    raise self.error("datatype must be an IRI")
                return Term.literal(lexical, datatype=self.read_iri())
            if self.peek() == "@":
                self.pos += 1
                tag_start = self.pos
                while self.pos < len(self.text) and (
                    self.text[self.pos].isalnum() or self.text[self.pos] == "-"
                ):
                    self.pos += 1
                tag = self.text[tag_start : self.pos]
                if not _LANG_RE.match(tag) or not tag.isascii():
                    raise self.error("malformed language tag", tag_start)
                return Term.literal(lexical, lang=tag)
            return Term.literal(lexical)
        if self.text.startswith("_:", self.pos):
            self.pos += 2
            label_start = self.pos
            while self.pos < len(self.text) and (
                self.text[self.pos].isalnum() or self.text[self.pos] in "_-."
            ):
                self.pos += 1
            # a trailing '.' belongs to the statement terminator
            while self.pos > label_start and self.text[self.pos - 1] == ".":
                self.pos -= 1
            label = self.text[label_start : self.pos]
            if not _valid_label(label):
                raise self.error("malformed blank node label", start)
            return Term.blank(label, self.doc_id)
        if self.at_end():
            raise self.error(f"expected {what} term, found end of line")
        if c == ".":
            raise self.error(f"expected {what} term before '.'")
        raise self.error(f"illegal term syntax starting with {c!r}")


def _parse_line(line: _Line, allow_literal_predicates: bool) -> Triple | None:
    line.skip_ws()
    if line.at_end() or line.peek() == "#":
        return None

    s_pos = line.pos
    subject = line.read_term("subject")
    if subject.is_literal:
        raise line.error("literal in subject position", s_pos)

    line.skip_ws()
    p_pos = line.pos
    predicate = line.read_term("predicate")
    if predicate.is_blank:
        raise line.error("blank node in predicate position", p_pos)
    if predicate.is_literal and not allow_literal_predicates:
        raise line.error("literal in predicate position", p_pos)

    line.skip_ws()
    obj = line.read_term("object")

    line.skip_ws()
    if line.at_end():
        raise line.error("missing terminal period")
    if line.peek() != ".":
        raise line.error(f"expected '.', found {line.peek()!r}")
    line.pos += 1
    line.skip_ws()
    if not line.at_end() and line.peek() != "#":
        raise line.error("unexpected content after '.'")
    return Triple(subject, predicate, obj)


def _lines(text) -> Iterator[str]:
    if isinstance(text, str):
        chunks: Iterable[str] = text.split("\n")
    else:
        chunks = text
    for chunk in chunks:
        yield chunk.rstrip("\n").rstrip("\r")


def parse_document(text, doc_id: str, *, allow_literal_predicates: bool = True, source: str | None = None) -> TripleSet:
    """Parse N-Triples text (a string or an iterable of lines).

    With ``allow_literal_predicates`` a quoted literal is accepted as a predicate, which
    plain N-Triples forbids. ``source`` only labels error messages.
    The first malformed line raises :class:`ParseError`.
    """
    if not doc_id:
        raise ValueError("doc_id must be nonempty")
    triples = []
    for lineno, raw in enumerate(_lines(text), start=1):
        triple = _parse_line(_Line(raw, lineno, doc_id, source), allow_literal_predicates)
        if triple is not None:
            triples.append(triple)
    return TripleSet(doc_id, tuple(triples))


def parse_term(token: str, doc_id: str) -> Term:
    line = _Line(token.strip(" \t"), 1, doc_id, None)
    if line.at_end():
        raise line.error("empty term")
    term = line.read_term("a")
    if not line.at_end():
        raise line.error("unexpected content after term")
    return term


# -- writing ---------------------------------------------------------------

_ESCAPES = {"\\": "\\\\", '"': '\\"', "\n": "\\n", "\r": "\\r"}


def _escape_string(text: str) -> str:
    return "".join(_ESCAPES.get(c, c) for c in text)


def serialize(g: TripleSet) -> str:
    if not len(g):
        return ""
    return "\n".join(t.n3() for t in g) + "\n"
