"""Turtle subset reader and writer.

The supported grammar (normatively documented in docs/turtle-subset.md):
@prefix directives, absolute IRIs in angle brackets, prefixed names, the
"a" keyword, ";" predicate lists, "," object lists, plain/typed/
language-tagged string literals, and "#" comments.  Blank nodes,
collections, numeric or boolean shorthand and @base are deliberately
outside the subset.

Parsing never raises on malformed input: errors become ParseDiagnostic
entries and the parser resynchronizes at the next "." so one bad
statement does not discard the rest of the document.  Serialization is
deterministic (sorted prefixes, subjects, predicates and objects), so
equal graphs always produce byte-identical files.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .graph import (
    Graph,
    Iri,
    Literal,
    MalformedTermError,
    RDF_TYPE,
    Term,
    Triple,
    term_sort_key,
)


class Severity(enum.Enum):
    ERROR = "error"
    WARNING = "warning"


@dataclass(frozen=True)
class ParseDiagnostic:
    line: int
    column: int
    message: str
    severity: Severity = Severity.ERROR

    def __str__(self) -> str:
        return f"{self.line}:{self.column}: {self.severity.value}: {self.message}"


_PNAME_LOCAL_CHARS = set(
    "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789_-%."
)
_PNAME_PREFIX_CHARS = set(
    "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789_-"
)
_STRING_ESCAPES = {'"': '"', "\\": "\\", "n": "\n", "r": "\r", "t": "\t"}


@dataclass(frozen=True)
class _Tok:
    kind: str  # iriref pname a string prefix_kw dot semi comma eof junk
    line: int
    col: int
    value: str = ""
    extra: object = None  # pname local part, or literal datatype/lang


class _Lexer:
    def __init__(self, text: str, diags: list[ParseDiagnostic]):
        self.text = text
        self.n = len(text)
        self.pos = 0
        self.line = 1
        self.col = 1
        self.diags = diags

    def _peek(self) -> str:
        return self.text[self.pos] if self.pos < self.n else ""

    def _advance(self) -> str:
        ch = self.text[self.pos]
        self.pos += 1
        if ch == "\n":
            self.line += 1
            self.col = 1
        else:
            self.col += 1
        return ch

    def _error(self, line: int, col: int, msg: str) -> None:
        self.diags.append(ParseDiagnostic(line, col, msg, Severity.ERROR))

    def _skip_ws(self) -> None:
        while self.pos < self.n:
            ch = self._peek()
            if ch in " \t\r\n":
                self._advance()
            elif ch == "#":
                while self.pos < self.n and self._peek() != "\n":
                    self._advance()
            else:
                return

    def next(self) -> _Tok:
        self._skip_ws()
        line, col = self.line, self.col
        if self.pos >= self.n:
            return _Tok("eof", line, col)
        ch = self._peek()
        if ch == ".":
            self._advance()
            return _Tok("dot", line, col)
        if ch == ";":
            self._advance()
            return _Tok("semi", line, col)
        if ch == ",":
            self._advance()
            return _Tok("comma", line, col)
        if ch == "<":
            return self._iriref(line, col)
        if ch == '"':
            return self._string(line, col)
        if ch == "@":
            return self._at_word(line, col)
        if ch in _PNAME_PREFIX_CHARS or ch == ":":
            return self._pname(line, col)
        self._advance()
        self._error(line, col, f"unexpected character {ch!r}")
        return _Tok("junk", line, col)

    def _iriref(self, line: int, col: int) -> _Tok:
        self._advance()  # <
        buf = []
        while self.pos < self.n:
            ch = self._peek()
            if ch == ">":
                self._advance()
                return _Tok("iriref", line, col, "".join(buf))
            if ch in " \t\r\n<":
                break
            buf.append(self._advance())
        self._error(line, col, "unterminated IRI")
        return _Tok("junk", line, col)

    def _string(self, line: int, col: int) -> _Tok:
        self._advance()  # "
        buf = []
        while self.pos < self.n:
            ch = self._peek()
            if ch == '"':
                self._advance()
                return self._literal_suffix(line, col, "".join(buf))
            if ch == "\n":
                break
            if ch == "\\":
                self._advance()
                esc = self._peek()
                if esc in _STRING_ESCAPES:
                    self._advance()
                    buf.append(_STRING_ESCAPES[esc])
                elif esc in ("u", "U"):
                    self._advance()
                    width = 4 if esc == "u" else 8
                    hex_digits = self.text[self.pos : self.pos + width]
                    if len(hex_digits) == width and all(
                        c in "0123456789abcdefABCDEF" for c in hex_digits
                    ):
                        for _ in range(width):
                            self._advance()
                        code = int(hex_digits, 16)
                        if code > 0x10FFFF:
                            self._error(line, col, "escape out of range")
                            return _Tok("junk", line, col)
                        buf.append(chr(code))
                    else:
                        self._error(self.line, self.col, "bad unicode escape")
                        return _Tok("junk", line, col)
                else:
                    self._error(self.line, self.col, f"bad escape \\{esc}")
                    return _Tok("junk", line, col)
            else:
                buf.append(self._advance())
        self._error(line, col, "unterminated string")
        return _Tok("junk", line, col)

    def _literal_suffix(self, line: int, col: int, lexical: str) -> _Tok:
        # "..."^^<dt> | "..."^^pname | "..."@lang | bare
        if self.text.startswith("^^", self.pos):
            self._advance()
            self._advance()
            tok = self.next()
            if tok.kind not in ("iriref", "pname"):
                self._error(line, col, "expected datatype IRI after ^^")
                return _Tok("junk", line, col)
            return _Tok("string", line, col, lexical, ("dt", tok))
        if self._peek() == "@":
            self._advance()
            tag = []
            while self.pos < self.n and (self._peek().isalnum() or self._peek() == "-"):
                tag.append(self._advance())
            if not tag:
                self._error(line, col, "empty language tag")
                return _Tok("junk", line, col)
            return _Tok("string", line, col, lexical, ("lang", "".join(tag)))
        return _Tok("string", line, col, lexical)

    def _at_word(self, line: int, col: int) -> _Tok:
        self._advance()  # @
        word = []
        while self.pos < self.n and self._peek().isalpha():
            word.append(self._advance())
        text = "".join(word)
        if text == "prefix":
            return _Tok("prefix_kw", line, col)
        self._error(line, col, f"unsupported directive @{text}")
        return _Tok("junk", line, col)

    def _pname(self, line: int, col: int) -> _Tok:
        prefix = []
        while self.pos < self.n and self._peek() in _PNAME_PREFIX_CHARS:
            prefix.append(self._advance())
        if self._peek() != ":":
            word = "".join(prefix)
            if word == "a":
                return _Tok("a", line, col)
            self._error(line, col, f"expected ':' in name {word!r}")
            return _Tok("junk", line, col)
        self._advance()  # :
        local = []
        while self.pos < self.n and self._peek() in _PNAME_LOCAL_CHARS:
            local.append(self._advance())
        # a trailing run of dots terminates the statement, not the name
        local_s = "".join(local)
        stripped = local_s.rstrip(".")
        for _ in range(len(local_s) - len(stripped)):
            self.pos -= 1
            self.col -= 1
        return _Tok("pname", line, col, "".join(prefix), stripped)


class _Parser:
    def __init__(self, text: str):
        self.diags: list[ParseDiagnostic] = []
        self.lexer = _Lexer(text, self.diags)
        self.graph = Graph()
        self.tok = self.lexer.next()

    def _advance(self) -> None:
        self.tok = self.lexer.next()

    def _error(self, msg: str) -> None:
        self.diags.append(
            ParseDiagnostic(self.tok.line, self.tok.col, msg, Severity.ERROR)
        )

    def _recover(self) -> None:
        # resynchronize after an error: consume through the next "."
        while self.tok.kind not in ("dot", "eof"):
            self._advance()
        if self.tok.kind == "dot":
            self._advance()

    def parse(self) -> tuple[Graph, list[ParseDiagnostic]]:
        while self.tok.kind != "eof":
            if self.tok.kind == "prefix_kw":
                self._prefix_directive()
            elif self.tok.kind in ("iriref", "pname"):
                self._statement()
            elif self.tok.kind == "junk":
                self._advance()
                self._recover()
            else:
                self._error(f"expected subject, found '{self.tok.kind}'")
                self._advance()
                self._recover()
        return self.graph, self.diags

    def _prefix_directive(self) -> None:
        self._advance()
        if self.tok.kind != "pname" or self.tok.extra != "":
            self._error("expected 'prefix:' after @prefix")
            self._recover()
            return
        prefix = self.tok.value
        self._advance()
        if self.tok.kind != "iriref":
            self._error("expected namespace IRI in @prefix")
            self._recover()
            return
        namespace = self.tok.value
        self._advance()
        if self.tok.kind != "dot":
            self._error("expected '.' after @prefix directive")
            self._recover()
            return
        self.graph.prefixes[prefix] = namespace
        self._advance()

    def _term_from_tok(self, want_iri: bool) -> Term | None:
        """Build a term from the current token; None records a diagnostic."""
        tok = self.tok
        if tok.kind == "iriref":
            try:
                return Iri(tok.value)
            except MalformedTermError as exc:
                self._error(str(exc))
                return None
        if tok.kind == "pname":
            ns = self.graph.prefixes.get(tok.value)
            if ns is None:
                self._error(f"unknown prefix {tok.value!r}")
                return None
            try:
                return Iri(ns + str(tok.extra))
            except MalformedTermError as exc:
                self._error(str(exc))
                return None
        if tok.kind == "string":
            if want_iri:
                self._error("literal not allowed here")
                return None
            if tok.extra is None:
                return Literal(tok.value)
            tag, payload = tok.extra  # type: ignore[misc]
            if tag == "lang":
                return Literal(tok.value, language=str(payload))
            dt_tok: _Tok = payload  # type: ignore[assignment]
            if dt_tok.kind == "iriref":
                try:
                    return Literal(tok.value, datatype=Iri(dt_tok.value))
                except MalformedTermError as exc:
                    self._error(str(exc))
                    return None
            ns = self.graph.prefixes.get(dt_tok.value)
            if ns is None:
                self._error(f"unknown prefix {dt_tok.value!r}")
                return None
            return Literal(tok.value, datatype=Iri(ns + str(dt_tok.extra)))
        self._error(f"expected term, found '{tok.kind}'")
        return None

    def _statement(self) -> None:
        subject = self._term_from_tok(want_iri=True)
        if not isinstance(subject, Iri):
            self._recover()
            return
        self._advance()
        while True:
            # predicate
            if self.tok.kind == "a":
                predicate: Iri | None = RDF_TYPE
            elif self.tok.kind in ("iriref", "pname"):
                term = self._term_from_tok(want_iri=True)
                predicate = term if isinstance(term, Iri) else None
            else:
                self._error(f"expected predicate, found '{self.tok.kind}'")
                predicate = None
            if predicate is None:
                self._recover()
                return
            self._advance()
            # object list
            while True:
                obj = self._term_from_tok(want_iri=False)
                if obj is None:
                    self._recover()
                    return
                self.graph.insert(Triple(subject, predicate, obj))
                self._advance()
                if self.tok.kind == "comma":
                    self._advance()
                    continue
                break
            if self.tok.kind == "semi":
                self._advance()
                if self.tok.kind == "dot":  # tolerate dangling ';'
                    self._advance()
                    return
                continue
            if self.tok.kind == "dot":
                self._advance()
                return
            self._error(f"expected ';', ',' or '.', found '{self.tok.kind}'")
            self._recover()
            return


def parse_turtle(text: str) -> tuple[Graph, list[ParseDiagnostic]]:
    """Parse the Turtle subset; malformed statements become diagnostics."""
    return _Parser(text).parse()


# ----------------------------------------------------------------------
# serialization


def _escape(lexical: str) -> str:
    out = lexical.replace("\\", "\\\\").replace('"', '\\"')
    return out.replace("\n", "\\n").replace("\r", "\\r").replace("\t", "\\t")


def _safe_local(local: str) -> bool:
    return local != "" and all(
        c in _PNAME_PREFIX_CHARS for c in local
    )


def _iri_text(graph: Graph, iri: Iri) -> str:
    shrunk = graph.shrink(iri)
    if shrunk is not None:
        _, _, local = shrunk.partition(":")
        if _safe_local(local):
            return shrunk
    return f"<{iri.value}>"


def _term_text(graph: Graph, term: Term) -> str:
    if isinstance(term, Iri):
        return _iri_text(graph, term)
    out = f'"{_escape(term.lexical)}"'
    if term.datatype is not None:
        out += f"^^{_iri_text(graph, term.datatype)}"
    elif term.language is not None:
        out += f"@{term.language}"
    return out


def serialize_turtle(graph: Graph) -> str:
    """Deterministic Turtle text: sorted prefixes, subjects, predicates, objects."""
    lines = [
        f"@prefix {prefix}: <{ns}> ."
        for prefix, ns in sorted(graph.prefixes.items())
    ]
    by_subject: dict[Iri, dict[Iri, list[Term]]] = {}
    for t in graph:  # already sorted
        by_subject.setdefault(t.subject, {}).setdefault(t.predicate, []).append(t.object)
    for subject in sorted(by_subject, key=lambda i: i.value):
        lines.append("")
        parts = []
        for predicate in sorted(by_subject[subject], key=lambda i: i.value):
            objects = sorted(by_subject[subject][predicate], key=term_sort_key)
            pred_text = "a" if predicate == RDF_TYPE else _iri_text(graph, predicate)
            obj_text = ", ".join(_term_text(graph, o) for o in objects)
            parts.append(f"{pred_text} {obj_text}")
        subj_text = _iri_text(graph, subject)
        joined = (" ;\n" + " " * 4).join(parts)
        lines.append(f"{subj_text} {joined} .")
    return "\n".join(lines) + "\n"
