"""Parser for the query subset.

Covers exactly what the analytical workload needs: PREFIX declarations,
SELECT with optional DISTINCT and COUNT aggregates, a WHERE block of
triple patterns with ';' and ',' continuation, GROUP BY, ORDER BY with
ASC/DESC, and LIMIT.  Anything else raises QuerySyntaxError carrying the
1-based position of the offending token.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..graph import DEFAULT_PREFIXES, Iri, Literal, MalformedTermError, RDF_TYPE
from .model import CountAggregate, OrderKey, QueryAst, TriplePattern, Var

_KEYWORDS = {
    "PREFIX", "SELECT", "DISTINCT", "WHERE", "GROUP", "BY", "ORDER",
    "ASC", "DESC", "LIMIT", "COUNT", "AS",
}
_NAME_CHARS = set(
    "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789_-"
)
_LOCAL_CHARS = _NAME_CHARS | {"%", "."}
_STRING_ESCAPES = {'"': '"', "\\": "\\", "n": "\n", "r": "\r", "t": "\t"}


class QuerySyntaxError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{line}:{column}: {message}")
        self.line = line
        self.column = column


@dataclass(frozen=True)
class _Tok:
    kind: str  # kw var iriref pname string int punct a eof
    line: int
    col: int
    value: str = ""
    extra: object = None


class _Lexer:
    def __init__(self, text: str):
        self.text = text
        self.n = len(text)
        self.pos = 0
        self.line = 1
        self.col = 1

    def _fail(self, msg: str, line: int | None = None, col: int | None = None):
        raise QuerySyntaxError(msg, line or self.line, col or self.col)

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

    def next(self) -> _Tok:
        while self.pos < self.n:
            ch = self._peek()
            if ch in " \t\r\n":
                self._advance()
            elif ch == "#":
                while self.pos < self.n and self._peek() != "\n":
                    self._advance()
            else:
                break
        line, col = self.line, self.col
        if self.pos >= self.n:
            return _Tok("eof", line, col)
        ch = self._peek()
        if ch in "{}().;,":
            self._advance()
            return _Tok("punct", line, col, ch)
        if ch == "?" or ch == "$":
            self._advance()
            name = []
            while self.pos < self.n and self._peek() in _NAME_CHARS:
                name.append(self._advance())
            if not name:
                self._fail("empty variable name", line, col)
            return _Tok("var", line, col, "".join(name))
        if ch == "<":
            self._advance()
            buf = []
            while self.pos < self.n:
                c = self._peek()
                if c == ">":
                    self._advance()
                    return _Tok("iriref", line, col, "".join(buf))
                if c in " \t\r\n<":
                    break
                buf.append(self._advance())
            self._fail("unterminated IRI", line, col)
        if ch == '"':
            return self._string(line, col)
        if ch in _NAME_CHARS:
            word = []
            while self.pos < self.n and self._peek() in _NAME_CHARS:
                word.append(self._advance())
            text = "".join(word)
            if self._peek() == ":":
                self._advance()
                local = []
                while self.pos < self.n and self._peek() in _LOCAL_CHARS:
                    local.append(self._advance())
                return _Tok("pname", line, col, text, "".join(local))
            if text.upper() in _KEYWORDS:
                return _Tok("kw", line, col, text.upper())
            if text == "a":
                return _Tok("a", line, col)
            if text.isdigit():
                return _Tok("int", line, col, text)
            self._fail(f"unexpected word {text!r}", line, col)
        if ch == ":":
            self._advance()
            local = []
            while self.pos < self.n and self._peek() in _LOCAL_CHARS:
                local.append(self._advance())
            return _Tok("pname", line, col, "", "".join(local))
        self._fail(f"unexpected character {ch!r}", line, col)
        raise AssertionError  # _fail always raises

    def _string(self, line: int, col: int) -> _Tok:
        self._advance()
        buf = []
        while self.pos < self.n:
            c = self._peek()
            if c == '"':
                self._advance()
                return self._suffix(line, col, "".join(buf))
            if c == "\n":
                break
            if c == "\\":
                self._advance()
                esc = self._peek()
                if esc in _STRING_ESCAPES:
                    self._advance()
                    buf.append(_STRING_ESCAPES[esc])
                elif esc in ("u", "U"):
                    self._advance()
                    width = 4 if esc == "u" else 8
                    digits = self.text[self.pos : self.pos + width]
                    if len(digits) != width or not all(
                        d in "0123456789abcdefABCDEF" for d in digits
                    ):
                        self._fail("bad unicode escape")
                    for _ in range(width):
                        self._advance()
                    code = int(digits, 16)
                    if code > 0x10FFFF:
                        self._fail("escape out of range", line, col)
                    buf.append(chr(code))
                else:
                    self._fail(f"bad escape \\{esc}")
            else:
                buf.append(self._advance())
        self._fail("unterminated string", line, col)
        raise AssertionError

    def _suffix(self, line: int, col: int, lexical: str) -> _Tok:
        if self.text.startswith("^^", self.pos):
            self._advance()
            self._advance()
            dt = self.next()
            if dt.kind not in ("iriref", "pname"):
                self._fail("expected datatype IRI after ^^", dt.line, dt.col)
            return _Tok("string", line, col, lexical, ("dt", dt))
        if self._peek() == "@":
            self._advance()
            tag = []
            while self.pos < self.n and (
                self._peek().isalnum() or self._peek() == "-"
            ):
                tag.append(self._advance())
            if not tag:
                self._fail("empty language tag", line, col)
            return _Tok("string", line, col, lexical, ("lang", "".join(tag)))
        return _Tok("string", line, col, lexical)


class _Parser:
    def __init__(self, text: str):
        self.lexer = _Lexer(text)
        self.prefixes: dict[str, str] = dict(DEFAULT_PREFIXES)
        self.tok = self.lexer.next()

    def _fail(self, msg: str, tok: _Tok | None = None):
        t = tok or self.tok
        raise QuerySyntaxError(msg, t.line, t.col)

    def _advance(self) -> _Tok:
        prev = self.tok
        self.tok = self.lexer.next()
        return prev

    def _expect_kw(self, kw: str) -> _Tok:
        if self.tok.kind != "kw" or self.tok.value != kw:
            self._fail(f"expected {kw}")
        return self._advance()

    def _expect_punct(self, ch: str) -> _Tok:
        if self.tok.kind != "punct" or self.tok.value != ch:
            self._fail(f"expected {ch!r}")
        return self._advance()

    def _at_kw(self, kw: str) -> bool:
        return self.tok.kind == "kw" and self.tok.value == kw

    def _at_punct(self, ch: str) -> bool:
        return self.tok.kind == "punct" and self.tok.value == ch

    # ------------------------------------------------------------------

    def parse(self) -> QueryAst:
        while self._at_kw("PREFIX"):
            self._prefix()
        self._expect_kw("SELECT")
        distinct = False
        if self._at_kw("DISTINCT"):
            distinct = True
            self._advance()
        projection = self._projection()
        self._expect_kw("WHERE")
        where = self._block()
        group_by: tuple[Var, ...] = ()
        order_by: tuple[OrderKey, ...] = ()
        limit: int | None = None
        if self._at_kw("GROUP"):
            self._advance()
            self._expect_kw("BY")
            group_by = self._var_list("GROUP BY")
        if self._at_kw("ORDER"):
            self._advance()
            self._expect_kw("BY")
            order_by = self._order_keys()
        if self._at_kw("LIMIT"):
            self._advance()
            if self.tok.kind != "int":
                self._fail("expected integer after LIMIT")
            limit = int(self._advance().value)
        if self.tok.kind != "eof":
            self._fail("unexpected trailing input")
        ast = QueryAst(
            projection=projection,
            distinct=distinct,
            where=where,
            group_by=group_by,
            order_by=order_by,
            limit=limit,
            prefixes=dict(self.prefixes),
        )
        self._validate(ast)
        return ast

    def _prefix(self) -> None:
        self._advance()
        if self.tok.kind != "pname" or self.tok.extra != "":
            self._fail("expected 'prefix:' after PREFIX")
        prefix = self._advance().value
        if self.tok.kind != "iriref":
            self._fail("expected namespace IRI")
        self.prefixes[prefix] = self._advance().value

    def _projection(self) -> tuple[Var | CountAggregate, ...]:
        items: list[Var | CountAggregate] = []
        while True:
            if self.tok.kind == "var":
                items.append(Var(self._advance().value))
            elif self._at_punct("("):
                self._advance()
                self._expect_kw("COUNT")
                self._expect_punct("(")
                if self.tok.kind != "var":
                    self._fail("expected variable in COUNT")
                arg = Var(self._advance().value)
                self._expect_punct(")")
                self._expect_kw("AS")
                if self.tok.kind != "var":
                    self._fail("expected alias variable after AS")
                alias = Var(self._advance().value)
                self._expect_punct(")")
                items.append(CountAggregate(arg, alias))
            else:
                break
        if not items:
            self._fail("empty SELECT projection")
        return tuple(items)

    def _var_list(self, context: str) -> tuple[Var, ...]:
        out: list[Var] = []
        while self.tok.kind == "var":
            out.append(Var(self._advance().value))
        if not out:
            self._fail(f"expected at least one variable in {context}")
        return tuple(out)

    def _order_keys(self) -> tuple[OrderKey, ...]:
        keys: list[OrderKey] = []
        while True:
            if self.tok.kind == "var":
                keys.append(OrderKey(Var(self._advance().value)))
            elif self._at_kw("ASC") or self._at_kw("DESC"):
                desc = self.tok.value == "DESC"
                self._advance()
                self._expect_punct("(")
                if self.tok.kind != "var":
                    self._fail("expected variable")
                keys.append(OrderKey(Var(self._advance().value), descending=desc))
                self._expect_punct(")")
            else:
                break
        if not keys:
            self._fail("expected at least one ORDER BY key")
        return tuple(keys)

    # ------------------------------------------------------------------
    # WHERE block

    def _block(self) -> tuple[TriplePattern, ...]:
        self._expect_punct("{")
        patterns: list[TriplePattern] = []
        while not self._at_punct("}"):
            if self.tok.kind == "eof":
                self._fail("unterminated WHERE block")
            patterns.extend(self._triples_same_subject())
            if self._at_punct("."):
                self._advance()
                continue
            if not self._at_punct("}"):
                self._fail("expected '.' or '}'")
        self._advance()
        return tuple(patterns)

    def _triples_same_subject(self) -> list[TriplePattern]:
        subject = self._term(position="subject")
        patterns: list[TriplePattern] = []
        while True:
            predicate = self._term(position="predicate")
            while True:
                obj = self._term(position="object")
                patterns.append(TriplePattern(subject, predicate, obj))
                if self._at_punct(","):
                    self._advance()
                    continue
                break
            if self._at_punct(";"):
                self._advance()
                if self._at_punct(".") or self._at_punct("}"):
                    break  # dangling ';'
                continue
            break
        return patterns

    def _term(self, position: str):
        tok = self.tok
        if tok.kind == "var":
            self._advance()
            return Var(tok.value)
        if tok.kind == "a":
            if position != "predicate":
                self._fail("'a' is only valid as a predicate")
            self._advance()
            return RDF_TYPE
        if tok.kind == "iriref":
            self._advance()
            try:
                return Iri(tok.value)
            except MalformedTermError as exc:
                self._fail(str(exc), tok)
        if tok.kind == "pname":
            self._advance()
            ns = self.prefixes.get(tok.value)
            if ns is None:
                self._fail(f"unknown prefix {tok.value!r}", tok)
            try:
                return Iri(ns + str(tok.extra))
            except MalformedTermError as exc:
                self._fail(str(exc), tok)
        if tok.kind == "string":
            if position != "object":
                self._fail("literal only allowed in object position", tok)
            self._advance()
            if tok.extra is None:
                return Literal(tok.value)
            tag, payload = tok.extra  # type: ignore[misc]
            if tag == "lang":
                return Literal(tok.value, language=str(payload))
            dt: _Tok = payload  # type: ignore[assignment]
            if dt.kind == "iriref":
                return Literal(tok.value, datatype=Iri(dt.value))
            ns = self.prefixes.get(dt.value)
            if ns is None:
                self._fail(f"unknown prefix {dt.value!r}", dt)
            return Literal(tok.value, datatype=Iri(ns + str(dt.extra)))
        self._fail(f"expected {position} term")
        raise AssertionError

    # ------------------------------------------------------------------

    def _validate(self, ast: QueryAst) -> None:
        where_vars = set()
        for p in ast.where:
            where_vars |= p.variables()
        aliases = {a.alias.name for a in ast.aggregates}
        plain = [p for p in ast.projection if isinstance(p, Var)]
        if len(set(ast.columns)) != len(ast.columns):
            self._fail("duplicate column in projection")
        for agg in ast.aggregates:
            if agg.var.name not in where_vars:
                self._fail(f"COUNT variable ?{agg.var.name} not in WHERE")
            if agg.alias.name in where_vars:
                self._fail(f"alias ?{agg.alias.name} already bound in WHERE")
        # a projected variable absent from WHERE is legal and simply never
        # binds, so the query evaluates to an empty table
        if ast.aggregates and not ast.group_by and plain:
            self._fail("plain variables need GROUP BY when aggregating")
        if ast.group_by:
            grouped = {v.name for v in ast.group_by}
            for v in ast.group_by:
                if v.name not in where_vars:
                    self._fail(f"GROUP BY ?{v.name} not in WHERE")
            for v in plain:
                if v.name not in grouped:
                    self._fail(f"projected ?{v.name} is not grouped")
        for key in ast.order_by:
            if key.var.name not in ast.columns:
                self._fail(f"ORDER BY ?{key.var.name} is not a result column")


def parse_query(text: str) -> QueryAst:
    """Parse query text; raises QuerySyntaxError with position on bad input."""
    return _Parser(text).parse()
