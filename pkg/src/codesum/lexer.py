"""Hand-written lexer for the supported source grammar.

Comments and whitespace are discarded; every surviving token carries its
1-based line and column so later stages can report positions and restore
source order.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .diagnostics import Diagnostic, error, warning


class TokenKind(Enum):
    IDENTIFIER = "identifier"
    KEYWORD = "keyword"
    PUNCTUATION = "punctuation"
    LITERAL = "literal"
    # Synthesized by the parser for assembled type names; never produced here.
    TYPE_TEXT = "type-text"


@dataclass(frozen=True)
class Token:
    kind: TokenKind
    text: str
    line: int
    column: int


KEYWORDS = frozenset(
    """
    abstract boolean break byte case catch char class continue default do
    double else enum extends final finally float for if implements import
    instanceof int interface long native new null package private protected
    public return short static strictfp super switch synchronized this throw
    throws transient true false try void volatile while
    """.split()
)

PRIMITIVE_TYPES = frozenset(
    ["boolean", "byte", "char", "double", "float", "int", "long", "short"]
)

# Longest match first.
_OPERATORS = (
    ">>>=", "<<=", ">>=", ">>>", "==", "!=", "<=", ">=", "&&", "||", "++",
    "--", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<", ">>", "->",
    "+", "-", "*", "/", "%", "=", "<", ">", "!", "&", "|", "^", "~", "?",
    ":", ";", ",", ".", "(", ")", "{", "}", "[", "]", "@",
)

_WHITESPACE = " \t\r\n\f"


def _is_identifier_start(ch: str) -> bool:
    return ch.isalpha() or ch in "_$"


def _is_identifier_part(ch: str) -> bool:
    return ch.isalnum() or ch in "_$"


def tokenize(
    source: str, file: str = "<source>", strict: bool = True
) -> tuple[list[Token], list[Diagnostic]]:
    """Split ``source`` into tokens.

    In strict mode the first lexical problem is reported as an error and
    scanning stops; in lenient mode it is reported as a warning and scanning
    resumes past the offending text.
    """
    tokens: list[Token] = []
    diagnostics: list[Diagnostic] = []
    pos = 0
    line = 1
    column = 1
    length = len(source)

    def advance(count: int) -> None:
        nonlocal pos, line, column
        for _ in range(count):
            if source[pos] == "\n":
                line += 1
                column = 1
            else:
                column += 1
            pos += 1

    def report(message: str, at_line: int, at_column: int) -> bool:
        """Record a lexical problem; True means stop scanning."""
        if strict:
            diagnostics.append(error(message, file, at_line, at_column))
            return True
        diagnostics.append(warning(message, file, at_line, at_column))
        return False

    while pos < length:
        ch = source[pos]

        if ch in _WHITESPACE:
            advance(1)
            continue

        if ch == "/" and pos + 1 < length and source[pos + 1] == "/":
            while pos < length and source[pos] != "\n":
                advance(1)
            continue

        if ch == "/" and pos + 1 < length and source[pos + 1] == "*":
            start_line, start_column = line, column
            advance(2)
            closed = False
            while pos < length:
                if source[pos] == "*" and pos + 1 < length and source[pos + 1] == "/":
                    advance(2)
                    closed = True
                    break
                advance(1)
            if not closed:
                if report("unterminated block comment", start_line, start_column):
                    break
            continue

        start_line, start_column = line, column

        if _is_identifier_start(ch):
            start = pos
            while pos < length and _is_identifier_part(source[pos]):
                advance(1)
            text = source[start:pos]
            kind = TokenKind.KEYWORD if text in KEYWORDS else TokenKind.IDENTIFIER
            tokens.append(Token(kind, text, start_line, start_column))
            continue

        if ch.isdigit():
            start = pos
            if ch == "0" and pos + 1 < length and source[pos + 1] in "xX":
                advance(2)
                while pos < length and (source[pos].isdigit() or source[pos] in "abcdefABCDEF"):
                    advance(1)
            else:
                while pos < length and source[pos].isdigit():
                    advance(1)
                if (
                    pos + 1 < length
                    and source[pos] == "."
                    and source[pos + 1].isdigit()
                ):
                    advance(1)
                    while pos < length and source[pos].isdigit():
                        advance(1)
                if pos < length and source[pos] in "eE":
                    lookahead = pos + 1
                    if lookahead < length and source[lookahead] in "+-":
                        lookahead += 1
                    if lookahead < length and source[lookahead].isdigit():
                        advance(lookahead - pos)
                        while pos < length and source[pos].isdigit():
                            advance(1)
            if pos < length and source[pos] in "lLfFdD":
                advance(1)
            tokens.append(Token(TokenKind.LITERAL, source[start:pos], start_line, start_column))
            continue

        if ch in "\"'":
            quote = ch
            start = pos
            advance(1)
            closed = False
            while pos < length and source[pos] != "\n":
                if source[pos] == "\\" and pos + 1 < length:
                    advance(2)
                    continue
                if source[pos] == quote:
                    advance(1)
                    closed = True
                    break
                advance(1)
            if not closed:
                label = "string" if quote == '"' else "character"
                if report(f"unterminated {label} literal", start_line, start_column):
                    break
                continue
            tokens.append(Token(TokenKind.LITERAL, source[start:pos], start_line, start_column))
            continue

        matched = None
        for op in _OPERATORS:
            if source.startswith(op, pos):
                matched = op
                break
        if matched is not None:
            advance(len(matched))
            tokens.append(Token(TokenKind.PUNCTUATION, matched, start_line, start_column))
            continue

        if report(f"illegal character {ch!r}", start_line, start_column):
            break
        advance(1)

    return tokens, diagnostics
