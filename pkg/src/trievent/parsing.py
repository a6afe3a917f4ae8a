"""Parsers for model files, event expressions and conditional terms.

Model files are line oriented (UTF-8, ``#`` comments):

    worlds: w1 w2 w3
    event a = {w1}
    event e = a & !b v c
    layer: w1=1/2 w2=1/4 w3=1/4

Event expressions use ``!``, ``&``, ``v`` (tightest to loosest), world-set
literals in braces, the constants TOP and BOT, and previously declared
event names.  Terms use ``~``, ``&``, ``v`` over basic conditionals
written ``[consequent|antecedent]`` plus the constants TRUE and FALSE;
the bar is only meaningful inside the brackets.  ``v``, ``TOP``, ``BOT``,
``TRUE`` and ``FALSE`` are reserved and cannot name worlds or events.

Malformed input raises :class:`ParseError` with a line and column;
references to undeclared names and violations of model invariants raise
:class:`ModelError`.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import ModelError, ParseError
from .events import Event, WorldSpace
from .model import Model
from .probability import ConditionalProbability
from .rationals import parse_rational
from .terms import (
    And,
    BasicConditional,
    CondTerm,
    Not,
    ONE,
    Or,
    ZERO,
    normalize,
)

RESERVED = frozenset({"v", "TOP", "BOT", "TRUE", "FALSE"})

_NAME_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<number>\d+(?:/\d+)?)
  | (?P<punct>[()\[\]{}|&!~=,])
    """,
    re.VERBOSE,
)

_PUNCT_KINDS = {
    "(": "LPAREN", ")": "RPAREN",
    "[": "LBRACKET", "]": "RBRACKET",
    "{": "LBRACE", "}": "RBRACE",
    "|": "BAR", "&": "AMP", "!": "BANG", "~": "TILDE",
    "=": "EQUALS", ",": "COMMA",
}


class Token:
    __slots__ = ("kind", "text", "line", "column")

    def __init__(self, kind: str, text: str, line: int, column: int):
        self.kind = kind
        self.text = text
        self.line = line
        self.column = column

    def __repr__(self):
        return f"Token({self.kind}, {self.text!r}, {self.line}:{self.column})"


def tokenize(text: str, line: int = 1, column_offset: int = 0) -> list[Token]:
    """Tokens with 1-based columns; raises on any unexpected character."""
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(
                f"unexpected character {text[pos]!r}", line, column_offset + pos + 1
            )
        pos = m.end()
        if m.lastgroup == "ws":
            continue
        if m.lastgroup == "punct":
            kind = _PUNCT_KINDS[m.group()]
        elif m.lastgroup == "name":
            kind = "NAME"
        else:
            kind = "NUMBER"
        tokens.append(Token(kind, m.group(), line, column_offset + m.start() + 1))
    return tokens


class _TokenStream:
    def __init__(self, tokens: list[Token], line: int, end_column: int):
        self._tokens = tokens
        self._pos = 0
        self._line = line
        self._end_column = end_column

    def peek(self) -> Token | None:
        if self._pos < len(self._tokens):
            return self._tokens[self._pos]
        return None

    def next(self) -> Token:
        token = self.peek()
        if token is None:
            raise ParseError("unexpected end of input", self._line, self._end_column)
        self._pos += 1
        return token

    def expect(self, kind: str, what: str) -> Token:
        token = self.peek()
        if token is None or token.kind != kind:
            raise self.error(f"expected {what}", token)
        return self.next()

    def error(self, message: str, token: Token | None = None) -> ParseError:
        if token is None:
            token = self.peek()
        if token is None:
            return ParseError(f"{message}, found end of input", self._line, self._end_column)
        return ParseError(f"{message}, found {token.text!r}", token.line, token.column)

    def at_or_operator(self) -> bool:
        token = self.peek()
        return token is not None and token.kind == "NAME" and token.text == "v"

    def done(self) -> bool:
        return self.peek() is None


def _stream(text: str, line: int = 1, column_offset: int = 0) -> _TokenStream:
    tokens = tokenize(text, line, column_offset)
    return _TokenStream(tokens, line, column_offset + len(text) + 1)


# Event expressions: or-expr > and-expr > not > atom.

def _ev_expr(stream: _TokenStream, model: Model) -> Event:
    left = _ev_and(stream, model)
    while stream.at_or_operator():
        stream.next()
        left = left.disj(_ev_and(stream, model))
    return left


def _ev_and(stream: _TokenStream, model: Model) -> Event:
    left = _ev_not(stream, model)
    while (token := stream.peek()) is not None and token.kind == "AMP":
        stream.next()
        left = left.conj(_ev_not(stream, model))
    return left


def _ev_not(stream: _TokenStream, model: Model) -> Event:
    token = stream.peek()
    if token is not None and token.kind == "BANG":
        stream.next()
        return _ev_not(stream, model).neg()
    return _ev_atom(stream, model)


def _ev_atom(stream: _TokenStream, model: Model) -> Event:
    token = stream.peek()
    if token is None:
        raise stream.error("expected an event expression")
    if token.kind == "LPAREN":
        stream.next()
        inner = _ev_expr(stream, model)
        stream.expect("RPAREN", "')'")
        return inner
    if token.kind == "LBRACE":
        stream.next()
        return _world_set(stream, model)
    if token.kind == "NAME":
        stream.next()
        if token.text == "TOP":
            return model.space.top
        if token.text == "BOT":
            return model.space.bottom
        if token.text in RESERVED:
            raise ParseError(
                f"reserved word {token.text!r} cannot be an event here",
                token.line,
                token.column,
            )
        try:
            return model.events[token.text]
        except KeyError:
            raise ModelError(
                f"unknown event name {token.text!r} "
                f"(line {token.line}, column {token.column})"
            ) from None
    raise stream.error("expected an event expression")


def _world_set(stream: _TokenStream, model: Model) -> Event:
    names = []
    while True:
        token = stream.peek()
        if token is not None and token.kind == "RBRACE":
            stream.next()
            break
        token = stream.expect("NAME", "a world name or '}'")
        names.append(token)
        if (nxt := stream.peek()) is not None and nxt.kind == "COMMA":
            stream.next()
    mask = 0
    for token in names:
        try:
            mask |= 1 << model.space.index(token.text)
        except KeyError:
            raise ModelError(
                f"unknown world name {token.text!r} "
                f"(line {token.line}, column {token.column})"
            ) from None
    return Event(model.space, mask)


# Terms: or-term > and-term > not > atom.

def _term_expr(stream: _TokenStream, model: Model) -> CondTerm:
    left = _term_and(stream, model)
    while stream.at_or_operator():
        stream.next()
        left = Or(left, _term_and(stream, model))
    return left


def _term_and(stream: _TokenStream, model: Model) -> CondTerm:
    left = _term_not(stream, model)
    while (token := stream.peek()) is not None and token.kind == "AMP":
        stream.next()
        left = And(left, _term_not(stream, model))
    return left


def _term_not(stream: _TokenStream, model: Model) -> CondTerm:
    token = stream.peek()
    if token is not None and token.kind == "TILDE":
        stream.next()
        return Not(_term_not(stream, model))
    return _term_atom(stream, model)


def _term_atom(stream: _TokenStream, model: Model) -> CondTerm:
    token = stream.peek()
    if token is None:
        raise stream.error("expected a term")
    if token.kind == "LPAREN":
        stream.next()
        inner = _term_expr(stream, model)
        stream.expect("RPAREN", "')'")
        return inner
    if token.kind == "LBRACKET":
        stream.next()
        consequent = _ev_expr(stream, model)
        stream.expect("BAR", "'|'")
        antecedent = _ev_expr(stream, model)
        stream.expect("RBRACKET", "']'")
        return BasicConditional(consequent, antecedent)
    if token.kind == "NAME" and token.text in ("TRUE", "FALSE"):
        stream.next()
        return ONE if token.text == "TRUE" else ZERO
    raise stream.error("expected a term")


def parse_event_expr(text: str, model: Model, line: int = 1, column_offset: int = 0) -> Event:
    """One complete event expression; the whole text must be consumed."""
    stream = _stream(text, line, column_offset)
    event = _ev_expr(stream, model)
    if not stream.done():
        raise stream.error("unexpected input after the event expression")
    return event


def parse_term(text: str, model: Model) -> CondTerm:
    """One complete term, normalized so constants are already absorbed."""
    stream = _stream(text)
    term = _term_expr(stream, model)
    if not stream.done():
        raise stream.error("unexpected input after the term")
    return normalize(term)


# Model files.

_EVENT_LINE = re.compile(r"^event\s+(\S+)\s*=\s*(.*)$")
_CHUNK = re.compile(r"\S+")
_LAYER_ITEM = re.compile(r"^([A-Za-z_][A-Za-z0-9_]*)=([+-]?\d+(?:/\d+)?)$")


def parse_model(text: str, source: str = "<model>") -> Model:
    """Model from the line-oriented file format."""
    space: WorldSpace | None = None
    model: Model | None = None
    layers: list[dict[int, Fraction]] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        if line.lstrip().startswith("worlds:"):
            if space is not None:
                raise ModelError(f"{source}: worlds declared twice (line {line_no})")
            rest = line.lstrip()[len("worlds:"):]
            offset = len(line) - len(rest)
            names = []
            for chunk in _CHUNK.finditer(rest):
                name = chunk.group()
                if not _NAME_RE.match(name):
                    raise ParseError(
                        f"bad world name {name!r}", line_no, offset + chunk.start() + 1
                    )
                if name in RESERVED:
                    raise ParseError(
                        f"reserved word {name!r} cannot name a world",
                        line_no,
                        offset + chunk.start() + 1,
                    )
                names.append(name)
            if not names:
                raise ModelError(f"{source}: empty worlds declaration (line {line_no})")
            if len(set(names)) != len(names):
                raise ModelError(f"{source}: duplicate world name (line {line_no})")
            space = WorldSpace(tuple(names))
            model = Model(space)
            continue
        if space is None or model is None:
            raise ModelError(
                f"{source}: 'worlds:' must come before any other declaration (line {line_no})"
            )
        if line.lstrip().startswith("event"):
            stripped = line.lstrip()
            offset = len(line) - len(stripped)
            m = _EVENT_LINE.match(stripped)
            if m is None:
                raise ParseError("malformed event line (want: event NAME = EXPR)", line_no, offset + 1)
            name = m.group(1)
            name_col = offset + m.start(1) + 1
            if not _NAME_RE.match(name):
                raise ParseError(f"bad event name {name!r}", line_no, name_col)
            if name in RESERVED:
                raise ParseError(f"reserved word {name!r} cannot name an event", line_no, name_col)
            if name in space.worlds:
                raise ModelError(
                    f"{source}: event name {name!r} collides with a world (line {line_no})"
                )
            if name in model.events:
                raise ModelError(f"{source}: event {name!r} declared twice (line {line_no})")
            expr_offset = offset + m.start(2)
            event = parse_event_expr(m.group(2), model, line_no, expr_offset)
            model.events[name] = event
            continue
        if line.lstrip().startswith("layer:"):
            stripped = line.lstrip()
            offset = len(line) - len(stripped)
            rest = stripped[len("layer:"):]
            rest_offset = offset + len("layer:")
            layer: dict[int, Fraction] = {}
            for chunk in _CHUNK.finditer(rest):
                column = rest_offset + chunk.start() + 1
                m = _LAYER_ITEM.match(chunk.group())
                if m is None:
                    raise ParseError(
                        f"malformed layer entry {chunk.group()!r} (want: world=p/q)",
                        line_no,
                        column,
                    )
                world, weight_text = m.group(1), m.group(2)
                try:
                    index = space.index(world)
                except KeyError:
                    raise ModelError(
                        f"{source}: unknown world {world!r} in layer (line {line_no})"
                    ) from None
                if index in layer:
                    raise ModelError(
                        f"{source}: world {world!r} repeated in layer (line {line_no})"
                    )
                layer[index] = parse_rational(weight_text)
            if not layer:
                raise ModelError(f"{source}: empty layer declaration (line {line_no})")
            layers.append(layer)
            continue
        raise ParseError(
            "unrecognized line (want worlds:, event, or layer:)",
            line_no,
            len(line) - len(line.lstrip()) + 1,
        )
    if model is None:
        raise ModelError(f"{source}: no worlds declaration")
    try:
        model.cp = ConditionalProbability(model.space, layers)
    except ValueError as exc:
        raise ModelError(f"{source}: {exc}") from None
    return model


def load_model(path) -> Model:
    """Model from a file path."""
    with open(path, encoding="utf-8") as handle:
        return parse_model(handle.read(), source=str(path))
