"""Flat words and arrow terms: parsing, rendering and structural measures.

Two syntaxes live here.  Associative mode works with flat words over the
letters a-z plus the distinguished constant, written ``O``; bracketing is
meaningless, so a word is just a nonempty string of symbols.  Tree mode works
with fully parenthesised binary terms over ``>`` with the constant ``0``; a
postfix prime is sugar for ``(t>0)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

OMEGA = "O"
_LETTERS = frozenset("abcdefghijklmnopqrstuvwxyz")


class Mode(str, Enum):
    """Which syntax an identity or algebra is read in."""

    IS = "is"  # flat associative words with constant O
    IZ = "iz"  # binary arrow trees with constant 0


class ParseError(ValueError):
    """Rejected input, carrying the byte offset of the offending character."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (offset {offset})")
        self.offset = offset


# ---------------------------------------------------------------------------
# Flat words


@dataclass(frozen=True)
class Word:
    """Nonempty sequence of letters and ``O``.  Immutable and hashable."""

    symbols: str

    def __post_init__(self):
        if not self.symbols:
            raise ValueError("words are nonempty")
        for ch in self.symbols:
            if ch != OMEGA and ch not in _LETTERS:
                raise ValueError(f"invalid word symbol {ch!r}")

    def __str__(self) -> str:
        return self.symbols

    def __len__(self) -> int:
        return len(self.symbols)

    def __add__(self, other: "Word") -> "Word":
        return Word(self.symbols + other.symbols)


def parse_word(text: str) -> Word:
    """Parse a flat word; whitespace is ignored, anything else must be a-z or O."""
    out = []
    for i, ch in enumerate(text):
        if ch.isspace():
            continue
        if ch == OMEGA or ch in _LETTERS:
            out.append(ch)
        else:
            raise ParseError(f"unexpected character {ch!r}", i)
    if not out:
        raise ParseError("empty word", len(text))
    return Word("".join(out))


def render_word(w: Word) -> str:
    return w.symbols


@lru_cache(maxsize=1 << 16)
def content(w: Word) -> frozenset:
    """The set of letters occurring in w (``O`` excluded)."""
    return frozenset(ch for ch in w.symbols if ch != OMEGA)


@lru_cache(maxsize=1 << 16)
def los(w: Word):
    """Last-occurrence sequence: keep only each letter's final occurrence.

    Drops every ``O``.  Returns ``None`` when the word has no letters at all;
    that marker never escapes as a Word because the free algebra has no empty
    word.
    """
    last = {}
    for i, ch in enumerate(w.symbols):
        if ch != OMEGA:
            last[ch] = i
    if not last:
        return None
    return Word("".join(ch for _, ch in sorted((i, ch) for ch, i in last.items())))


def length(w: Word):
    """Symbol count for pure semigroup words, ``math.inf`` once O appears."""
    return math.inf if OMEGA in w.symbols else len(w.symbols)


@lru_cache(maxsize=1 << 16)
def contains_square(w: Word) -> bool:
    """True iff w = a b b c for some nonempty factor b (b may contain O)."""
    s = w.symbols
    n = len(s)
    for i in range(n - 1):
        for k in range(1, (n - i) // 2 + 1):
            if s[i:i + k] == s[i + k:i + 2 * k]:
                return True
    return False


def substitute(w: Word, mapping: dict) -> Word:
    """Replace each letter by its image word; O is fixed, absent letters too."""
    parts = []
    for ch in w.symbols:
        if ch == OMEGA:
            parts.append(OMEGA)
        else:
            img = mapping.get(ch)
            parts.append(img.symbols if img is not None else ch)
    return Word("".join(parts))


def normalize_is(w: Word) -> Word:
    """Canonical form under the full equational theory of associative mode.

    Semigroup words of one or two symbols are already canonical; every other
    word collapses to its last-occurrence sequence followed by a single O
    (just O when no letters remain).  Idempotent.
    """
    if length(w) <= 2:
        return w
    base = los(w)
    if base is None:
        return Word(OMEGA)
    return Word(base.symbols + OMEGA)


# ---------------------------------------------------------------------------
# Arrow trees


class TreeTerm:
    """Base class for tree-mode terms."""

    __slots__ = ()


@dataclass(frozen=True)
class Zero(TreeTerm):
    def __str__(self) -> str:
        return "0"


@dataclass(frozen=True)
class Var(TreeTerm):
    name: str

    def __post_init__(self):
        if self.name not in _LETTERS:
            raise ValueError(f"invalid variable name {self.name!r}")

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Arrow(TreeTerm):
    left: TreeTerm
    right: TreeTerm

    def __str__(self) -> str:
        if self.right == ZERO:
            return f"{self.left}'"
        return f"({self.left}>{self.right})"


ZERO = Zero()


def parse_term(text: str) -> TreeTerm:
    """Parse a tree term: ``0``, a letter, ``(t>t)``, with postfix primes."""
    pos = 0
    n = len(text)

    def skip_ws():
        nonlocal pos
        while pos < n and text[pos].isspace():
            pos += 1

    def parse_inner() -> TreeTerm:
        nonlocal pos
        skip_ws()
        if pos >= n:
            raise ParseError("unexpected end of input", pos)
        ch = text[pos]
        if ch == "0":
            pos += 1
            node: TreeTerm = ZERO
        elif ch in _LETTERS:
            pos += 1
            node = Var(ch)
        elif ch == "(":
            open_at = pos
            pos += 1
            left = parse_inner()
            skip_ws()
            if pos >= n or text[pos] != ">":
                raise ParseError("expected '>'", pos)
            pos += 1
            right = parse_inner()
            skip_ws()
            if pos >= n or text[pos] != ")":
                raise ParseError("unbalanced '('", open_at)
            pos += 1
            node = Arrow(left, right)
        else:
            raise ParseError(f"unexpected character {ch!r}", pos)
        while True:
            skip_ws()
            if pos < n and text[pos] == "'":
                pos += 1
                node = Arrow(node, ZERO)
            else:
                break
        return node

    node = parse_inner()
    skip_ws()
    if pos != n:
        raise ParseError(f"unexpected character {text[pos]!r}", pos)
    return node


def render_term(t: TreeTerm) -> str:
    """Canonical text: primes for right-zero arrows, parens everywhere else."""
    return str(t)


def term_letters(t: TreeTerm) -> frozenset:
    """All variable names occurring in t."""
    if isinstance(t, Var):
        return frozenset((t.name,))
    if isinstance(t, Arrow):
        return term_letters(t.left) | term_letters(t.right)
    return frozenset()


def substitute_term(t: TreeTerm, mapping: dict) -> TreeTerm:
    """Replace variables by their image terms; 0 and absent variables fixed."""
    if isinstance(t, Var):
        return mapping.get(t.name, t)
    if isinstance(t, Arrow):
        return Arrow(substitute_term(t.left, mapping), substitute_term(t.right, mapping))
    return t


# ---------------------------------------------------------------------------
# Identities


@dataclass(frozen=True)
class Identity:
    """An equation between two words (IS) or two tree terms (IZ)."""

    lhs: object
    rhs: object
    mode: Mode

    def __post_init__(self):
        want = Word if self.mode is Mode.IS else TreeTerm
        if not (isinstance(self.lhs, want) and isinstance(self.rhs, want)):
            raise ValueError(f"both sides must be {want.__name__} in mode {self.mode.value}")

    def __str__(self) -> str:
        return f"{self.lhs} = {self.rhs}"


def parse_identity(text: str, mode: Mode = Mode.IS) -> Identity:
    """Parse ``side = side`` in the given mode; offsets refer to the full text."""
    eq = text.find("=")
    if eq < 0:
        raise ParseError("expected '='", len(text))
    second = text.find("=", eq + 1)
    if second >= 0:
        raise ParseError("more than one '='", second)
    parse = parse_word if mode is Mode.IS else parse_term
    lhs = parse(text[:eq])
    try:
        rhs = parse(text[eq + 1:])
    except ParseError as exc:
        raise ParseError(str(exc).rsplit(" (offset", 1)[0], exc.offset + eq + 1) from None
    return Identity(lhs, rhs, mode)


def render_identity(ident: Identity) -> str:
    return str(ident)
