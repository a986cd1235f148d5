"""Lossless Java lexing, comment removal and identifier classification.

The lexer works on raw bytes and never drops anything: joining the text of
every token reproduces the input exactly.  Bytes >= 0x80 are treated as
identifier characters, which is how UTF-8 encoded Unicode identifiers end
up intact.

Identifier classification is a pattern-driven scan over the significant
tokens (whitespace and comments removed), not a Java parser.  It finds

* ``Type name`` declarations (fields, locals, parameters, catch and
  for-each variables, record components, pattern variables), including
  comma-separated declarator lists;
* method headers, ``Type name(...)`` followed by ``{``, ``;``, ``throws``
  or ``default``;
* ``class``/``interface``/``enum``/``record`` headers and enum constants.

Declarations whose type cannot be read off the tokens (``var``, untyped
lambda parameters) are skipped and reported in ``IdentifierTable.warnings``.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import LexError


class TokenKind(str, enum.Enum):
    IDENTIFIER = "identifier"
    KEYWORD = "keyword"
    PRIMITIVE = "primitive-type"
    STRING = "string-literal"
    CHAR = "char-literal"
    NUMBER = "number-literal"
    LINE_COMMENT = "line-comment"
    BLOCK_COMMENT = "block-comment"
    PUNCT = "operator-or-punct"
    WHITESPACE = "whitespace"


COMMENT_KINDS = frozenset({TokenKind.LINE_COMMENT, TokenKind.BLOCK_COMMENT})
TRIVIA_KINDS = COMMENT_KINDS | {TokenKind.WHITESPACE}

PRIMITIVE_TYPES = frozenset(
    b"boolean byte char short int long float double".split()
)

KEYWORDS = frozenset(
    b"""abstract assert break case catch class const continue default do else
    enum extends final finally for goto if implements import instanceof
    interface native new package private protected public return static
    strictfp super switch synchronized this throw throws transient try void
    volatile while true false null""".split()
)

# longest first so that maximal munch falls out of a linear scan
OPERATORS = sorted(
    """>>>= <<= >>= >>> ... -> :: ++ -- && || == != <= >= += -= *= /= %= &= |= ^=
    << >> ( ) { } [ ] ; , . @ = > < ! ~ ? : + - * / & | ^ %""".split(),
    key=len,
    reverse=True,
)
_OPERATORS_B = [op.encode() for op in OPERATORS]

_WS_RE = re.compile(rb"[ \t\n\r\f]+")
_IDENT_RE = re.compile(rb"[A-Za-z_$\x80-\xff][A-Za-z0-9_$\x80-\xff]*")
_NUMBER_RE = re.compile(
    rb"""
    0[xX][0-9a-fA-F_]*(?:\.[0-9a-fA-F_]*)?(?:[pP][+-]?[0-9_]+)?[lLfFdD]?
  | 0[bB][01_]+[lL]?
  | (?:[0-9][0-9_]*(?:\.[0-9_]*)?|\.[0-9][0-9_]*)(?:[eE][+-]?[0-9_]+)?[lLfFdD]?
    """,
    re.VERBOSE,
)
_LINE_END_RE = re.compile(rb"[\r\n]")


@dataclass(frozen=True)
class Token:
    kind: TokenKind
    text: bytes
    offset: int

    @property
    def end(self) -> int:
        return self.offset + len(self.text)


def _scan_quoted(src: bytes, pos: int, quote: int, what: str) -> int:
    i = pos + 1
    size = len(src)
    while i < size:
        ch = src[i]
        if ch == 0x5C:  # backslash
            i += 2
            continue
        if ch == quote:
            return i + 1
        if ch in (0x0A, 0x0D):
            break
        i += 1
    raise LexError(f"unterminated {what}", pos)


def _scan_text_block(src: bytes, pos: int) -> int:
    i = pos + 3
    size = len(src)
    while i < size:
        if src[i] == 0x5C:
            i += 2
            continue
        if src.startswith(b'"""', i):
            return i + 3
        i += 1
    raise LexError("unterminated text block", pos)


def lex(source: bytes) -> list[Token]:
    """Tokenize Java ``source``; ``b"".join(t.text for t in lex(s)) == s``."""
    src = bytes(source)
    size = len(src)
    tokens: list[Token] = []
    pos = 0
    while pos < size:
        ch = src[pos]
        if ch in b" \t\n\r\f":
            end = _WS_RE.match(src, pos).end()
            kind = TokenKind.WHITESPACE
        elif src.startswith(b"//", pos):
            m = _LINE_END_RE.search(src, pos)
            end = m.start() if m else size
            kind = TokenKind.LINE_COMMENT
        elif src.startswith(b"/*", pos):
            close = src.find(b"*/", pos + 2)
            if close < 0:
                raise LexError("unterminated block comment", pos)
            end = close + 2
            kind = TokenKind.BLOCK_COMMENT
        elif src.startswith(b'"""', pos):
            end = _scan_text_block(src, pos)
            kind = TokenKind.STRING
        elif ch == 0x22:
            end = _scan_quoted(src, pos, 0x22, "string literal")
            kind = TokenKind.STRING
        elif ch == 0x27:
            end = _scan_quoted(src, pos, 0x27, "char literal")
            kind = TokenKind.CHAR
        elif 0x30 <= ch <= 0x39 or (ch == 0x2E and pos + 1 < size and 0x30 <= src[pos + 1] <= 0x39):
            end = _NUMBER_RE.match(src, pos).end()
            kind = TokenKind.NUMBER
        elif (m := _IDENT_RE.match(src, pos)) is not None:
            end = m.end()
            word = src[pos:end]
            if word in PRIMITIVE_TYPES:
                kind = TokenKind.PRIMITIVE
            elif word in KEYWORDS:
                kind = TokenKind.KEYWORD
            else:
                kind = TokenKind.IDENTIFIER
        else:
            for op in _OPERATORS_B:
                if src.startswith(op, pos):
                    end = pos + len(op)
                    break
            else:
                # stray byte (e.g. '#', '`', control chars): keep it, one byte at a time
                end = pos + 1
            kind = TokenKind.PUNCT
        tokens.append(Token(kind, src[pos:end], pos))
        pos = end
    return tokens


def strip_comments(source: bytes) -> bytes:
    """Delete every comment token and keep all other bytes as they were."""
    return b"".join(t.text for t in lex(source) if t.kind not in COMMENT_KINDS)


def decode_name(raw: bytes) -> str:
    return raw.decode("utf-8", "surrogateescape")


def encode_name(name: str) -> bytes:
    return name.encode("utf-8", "surrogateescape")


class Category(str, enum.Enum):
    SIMPLE = "simple"
    CLASS = "class"
    METHOD = "method"


ALL_CATEGORIES = frozenset(Category)
CATEGORY_ORDER = (Category.SIMPLE, Category.CLASS, Category.METHOD)


def parse_categories(value: str | Iterable[str]) -> frozenset[Category]:
    """``"all"`` or any mix of ``simple``/``class``/``method`` (comma/pipe separated)."""
    if isinstance(value, str):
        value = re.split(r"[,|]", value)
    out: set[Category] = set()
    for word in value:
        word = word.strip().lower()
        if not word:
            continue
        if word == "all":
            out |= ALL_CATEGORIES
        else:
            try:
                out.add(Category(word))
            except ValueError:
                raise ValueError(f"unknown identifier category {word!r}") from None
    if not out:
        raise ValueError("no identifier category given")
    return frozenset(out)


def format_categories(cats: Iterable[Category]) -> str:
    cats = set(cats)
    return "|".join(c.value for c in CATEGORY_ORDER if c in cats)


@dataclass(frozen=True)
class IdentifierTable:
    """Declared identifiers of one file with their categories.

    ``identifiers`` holds every identifier token text in the file, declared
    or not; the neutralizer uses it to avoid replacement-name collisions.
    """

    categories: dict[str, frozenset[Category]]
    offsets: dict[str, tuple[int, ...]]
    identifiers: frozenset[str] = frozenset()
    warnings: tuple[str, ...] = ()

    def names(self) -> list[str]:
        return sorted(self.categories)

    def targeted(self, target: Iterable[Category]) -> list[str]:
        target = frozenset(target)
        return [name for name in self.names() if self.categories[name] & target]

    def export_lines(self, file_id: str) -> list[str]:
        return [
            f"{file_id}\t{name}\t{format_categories(self.categories[name])}\t"
            + ",".join(str(o) for o in self.offsets[name])
            for name in self.names()
        ]


# identifier tokens that are contextual keywords when they precede a name
_NOT_TYPE_WORDS = frozenset({b"yield", b"permits", b"record", b"sealed", b"exports", b"opens", b"requires"})
_MODIFIERS = frozenset(
    b"""public protected private static final abstract native synchronized
    transient volatile strictfp default""".split()
)
_VAR_TERMINATORS = frozenset({b"=", b";", b",", b")", b":", b"["})
_METHOD_FOLLOW = frozenset({b"{", b";", b"throws", b"default"})
_GENERIC_INNER = frozenset({b".", b",", b"?", b"extends", b"super", b"[", b"]", b"&", b"@"})
_OPEN = {b"(": b")", b"[": b"]", b"{": b"}"}
_CLOSE = frozenset(_OPEN.values())


class _Scanner:
    def __init__(self, tokens: Sequence[Token]):
        self.toks = [t for t in tokens if t.kind not in TRIVIA_KINDS]
        self.categories: dict[str, set[Category]] = {}
        self.offsets: dict[str, list[int]] = {}
        self.warnings: list[str] = []

    def text(self, i: int) -> bytes:
        if 0 <= i < len(self.toks):
            return self.toks[i].text
        return b""

    def kind(self, i: int):
        if 0 <= i < len(self.toks):
            return self.toks[i].kind
        return None

    def is_ident(self, i: int) -> bool:
        return self.kind(i) is TokenKind.IDENTIFIER

    def add(self, i: int, cat: Category) -> None:
        tok = self.toks[i]
        name = decode_name(tok.text)
        self.categories.setdefault(name, set()).add(cat)
        offs = self.offsets.setdefault(name, [])
        if tok.offset not in offs:
            offs.append(tok.offset)

    def warn(self, i: int, msg: str) -> None:
        tok = self.toks[i]
        self.warnings.append(f"offset {tok.offset}: {msg} {decode_name(tok.text)!r}")

    def qualified_start(self, j: int) -> int:
        while self.text(j - 1) == b"." and self.is_ident(j - 2):
            j -= 2
        return j

    def type_before(self, j: int):
        """Read a type that ends at token ``j``; return (start, base) or None.

        ``base`` is ``"primitive"``, ``"reference"``, ``"void"`` or ``"var"``.
        """
        if self.text(j) == b"...":
            j -= 1
        while self.text(j) == b"]" and self.text(j - 1) == b"[":
            j -= 2
        kind = self.kind(j)
        text = self.text(j)
        if kind is TokenKind.PRIMITIVE:
            return j, "primitive"
        if kind is TokenKind.KEYWORD and text == b"void":
            return j, "void"
        if kind is TokenKind.IDENTIFIER:
            if text in _NOT_TYPE_WORDS:
                return None
            start = self.qualified_start(j)
            if text == b"var" and start == j:
                return j, "var"
            return start, "reference"
        if text and set(text) == {0x3E}:  # one or more '>'
            depth = len(text)
            k = j - 1
            while k >= 0 and depth > 0:
                t = self.text(k)
                if t and set(t) == {0x3E}:
                    depth += len(t)
                elif t == b"<":
                    depth -= 1
                elif not (self.is_ident(k) or self.kind(k) is TokenKind.PRIMITIVE or t in _GENERIC_INNER):
                    return None
                k -= 1
            # k now sits just before the matching '<'
            if depth != 0 or not self.is_ident(k) or self.text(k) in _NOT_TYPE_WORDS:
                return None
            return self.qualified_start(k), "reference"
        return None

    def skip_balanced(self, i: int) -> int:
        """``i`` is an opening bracket; return the index after its partner."""
        depth = 0
        while i < len(self.toks):
            t = self.text(i)
            if t in _OPEN:
                depth += 1
            elif t in _CLOSE:
                depth -= 1
                if depth == 0:
                    return i + 1
            i += 1
        return i

    def skip_initializer(self, i: int) -> int:
        """Advance past an expression; stop at a depth-0 ``,`` or ``;`` or a closing bracket."""
        while i < len(self.toks):
            t = self.text(i)
            if t in _OPEN:
                i = self.skip_balanced(i)
                continue
            if t in (b",", b";") or t in _CLOSE:
                return i
            i += 1
        return i

    def declarators(self, name_idx: int, cat: Category) -> None:
        """Follow ``a = 1, b, c[] = {..}`` lists after the first declarator."""
        i = name_idx + 1
        while True:
            while self.text(i) == b"[" and self.text(i + 1) == b"]":
                i += 2
            if self.text(i) == b"=":
                i = self.skip_initializer(i + 1)
            if self.text(i) != b",":
                return
            nxt = i + 1
            after = nxt + 1
            if not self.is_ident(nxt) or self.text(after) not in (b"=", b",", b";", b"["):
                return
            self.add(nxt, cat)
            i = nxt + 1

    def type_headers(self) -> None:
        for i, tok in enumerate(self.toks):
            word = tok.text
            is_header = tok.kind is TokenKind.KEYWORD and word in (b"class", b"interface", b"enum")
            if tok.kind is TokenKind.IDENTIFIER and word == b"record":
                is_header = self.is_ident(i + 1) and self.text(i + 2) in (b"(", b"<")
            if not is_header or self.text(i - 1) == b"." or not self.is_ident(i + 1):
                continue
            self.add(i + 1, Category.CLASS)
            if word == b"enum":
                self.enum_constants(i + 2)

    def enum_constants(self, i: int) -> None:
        while i < len(self.toks) and self.text(i) != b"{":
            if self.text(i) in (b";", b"}"):
                return
            i += 1
        i += 1
        while i < len(self.toks):
            while self.text(i) == b"@" and self.is_ident(i + 1):
                i += 2
                if self.text(i) == b"(":
                    i = self.skip_balanced(i)
            if not self.is_ident(i):
                return
            self.add(i, Category.CLASS)
            i += 1
            if self.text(i) == b"(":
                i = self.skip_balanced(i)
            if self.text(i) == b"{":
                i = self.skip_balanced(i)
            if self.text(i) != b",":
                return
            i += 1

    def method_header(self, i: int) -> bool:
        close = self.skip_balanced(i + 1)
        while self.text(close) == b"[" and self.text(close + 1) == b"]":
            close += 2
        return self.text(close) in _METHOD_FOLLOW

    def members(self) -> None:
        for i, tok in enumerate(self.toks):
            if tok.kind is not TokenKind.IDENTIFIER:
                continue
            nxt = self.text(i + 1)
            if nxt == b"->" or (nxt == b")" and self.text(i + 2) == b"->" and self.text(i - 1) == b"("):
                self.warn(i, "untyped lambda parameter skipped:")
                continue
            typ = self.type_before(i - 1)
            if typ is None:
                continue
            start, base = typ
            # `a.b c`, `new T x` and `@Anno name` cannot start a declaration
            if self.text(start - 1) in (b".", b"new", b"::", b"@"):
                continue
            if nxt == b"(":
                if base != "var" and self.method_header(i):
                    self.add(i, Category.METHOD)
                continue
            pattern_var = self.text(start - 1) == b"instanceof"
            if (nxt not in _VAR_TERMINATORS and not pattern_var) or base == "void":
                continue
            if base == "var":
                self.warn(i, "declaration with inferred type skipped:")
                continue
            cat = Category.SIMPLE if base == "primitive" else Category.CLASS
            self.add(i, cat)
            self.declarators(i, cat)

    def run(self) -> IdentifierTable:
        self.type_headers()
        self.members()
        idents = frozenset(decode_name(t.text) for t in self.toks if t.kind is TokenKind.IDENTIFIER)
        return IdentifierTable(
            categories={k: frozenset(v) for k, v in self.categories.items()},
            offsets={k: tuple(sorted(v)) for k, v in self.offsets.items()},
            identifiers=idents,
            warnings=tuple(self.warnings),
        )


def classify_identifiers(source: bytes | Sequence[Token]) -> IdentifierTable:
    """Find user-declared identifiers and tag them simple / class / method.

    >>> classify_identifiers(b"int year; String name;").categories["name"]
    frozenset({<Category.CLASS: 'class'>})
    """
    tokens = lex(source) if isinstance(source, (bytes, bytearray, memoryview)) else source
    return _Scanner(tokens).run()
