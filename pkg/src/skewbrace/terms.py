"""Stratified formal letters and reduced words of a free group.

A letter is a generator symbol, a formal dot pair, or a formal colon
pair, each carrying a sign; the starred (negative) copy of a letter
plays the role of its group inverse.  Words are reduced sequences of
letters; they form the elements of the free group over the alphabet,
with juxtaposition as multiplication.
"""
from __future__ import annotations

import functools
import re
from dataclasses import dataclass
from typing import Iterable, Iterator

GEN = "gen"
DOT = "dot"
COLON = "colon"

_GEN_NAME = re.compile(r"[a-z][a-z0-9]*\Z")

# Letters are interned: every structurally distinct letter exists exactly
# once, so equality and hashing are identity based and O(1).
_INTERN: dict[tuple, "Letter"] = {}


@dataclass(frozen=True, eq=False)
class Letter:
    """One alphabet symbol: a generator or a formal dot/colon pair.

    Construct only through make_gen, dot_letter, colon_letter and star;
    direct instantiation bypasses interning and the side conditions.
    """

    kind: str
    name: str | None
    left: "Letter | None"
    right: "Letter | None"
    negative: bool
    stratum: int

    def __repr__(self) -> str:
        return f"Letter({render_letter(self)})"


def _intern(kind: str, name: str | None, left: Letter | None,
            right: Letter | None, negative: bool) -> Letter:
    key = (kind, name, id(left), id(right), negative)
    found = _INTERN.get(key)
    if found is None:
        depth = 1 if kind == GEN else 1 + max(left.stratum, right.stratum)
        found = Letter(kind, name, left, right, negative, depth)
        _INTERN[key] = found
    return found


def make_gen(name: str) -> Letter:
    """Return the positive generator letter for a symbol like "x"."""
    if not isinstance(name, str) or not _GEN_NAME.match(name):
        raise ValueError(f"malformed generator symbol: {name!r}")
    return _intern(GEN, name, None, None, False)


def star(letter: Letter) -> Letter:
    """Return the same letter with flipped sign; an involution."""
    return _intern(letter.kind, letter.name, letter.left, letter.right,
                   not letter.negative)


def dot_letter(a: Letter, b: Letter) -> Letter:
    """Build the formal positive dot letter with children a and b.

    Rejects the one excluded shape: b must not be a positive dot whose
    left child is star(a); that pair is required to collapse instead.
    """
    if b.kind == DOT and not b.negative and b.left is star(a):
        raise ValueError("invalid dot letter: right child starts with the "
                         "starred left child and must collapse")
    return _intern(DOT, None, a, b, False)


def colon_letter(a: Letter, b: Letter) -> Letter:
    """Build the formal positive colon letter with children a and b."""
    if b.kind == COLON and not b.negative and b.left is star(a):
        raise ValueError("invalid colon letter: right child starts with the "
                         "starred left child and must collapse")
    return _intern(COLON, None, a, b, False)


def stratum(letter: Letter) -> int:
    """Smallest alphabet stage containing the letter; sign independent."""
    return letter.stratum


@dataclass(frozen=True)
class Word:
    """A reduced sequence of letters; the empty word is the identity."""

    letters: tuple[Letter, ...] = ()

    def __post_init__(self) -> None:
        ls = tuple(self.letters)
        object.__setattr__(self, "letters", ls)
        for a, b in zip(ls, ls[1:]):
            if b is star(a):
                raise ValueError(
                    f"word is not reduced at {render_letter(a)} "
                    f"{render_letter(b)}")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __repr__(self) -> str:
        return f"Word({render_word(self)})"


EMPTY = Word()


def reduce(raw: Iterable[Letter]) -> Word:
    """Delete adjacent letter/star pairs until none remain."""
    out: list[Letter] = []
    for letter in raw:
        if out and letter is star(out[-1]):
            out.pop()
        else:
            out.append(letter)
    return Word(tuple(out))


def mul(a: Word, b: Word) -> Word:
    """Product in the free group: concatenate, then reduce at the seam."""
    out = list(a.letters)
    for letter in b.letters:
        if out and letter is star(out[-1]):
            out.pop()
        else:
            out.append(letter)
    return Word(tuple(out))


def inv(a: Word) -> Word:
    """Group inverse: reverse the word and star every letter."""
    return Word(tuple(star(l) for l in reversed(a.letters)))


def word_stratum(w: Word) -> int:
    """Largest stratum among the word's letters; 0 for the empty word."""
    return max((l.stratum for l in w.letters), default=0)


@functools.cache
def letter_symbols(letter: Letter) -> frozenset[str]:
    """Generator symbols occurring anywhere inside a letter."""
    if letter.kind == GEN:
        return frozenset((letter.name,))
    return letter_symbols(letter.left) | letter_symbols(letter.right)


def word_symbols(w: Word) -> frozenset[str]:
    """Generator symbols occurring anywhere in a word."""
    out: frozenset[str] = frozenset()
    for letter in w.letters:
        out |= letter_symbols(letter)
    return out


@functools.cache
def render_letter(letter: Letter) -> str:
    """Canonical text form: symbol, (A . B) or (A : B), trailing ' if
    negative."""
    if letter.kind == GEN:
        base = letter.name
    else:
        op = "." if letter.kind == DOT else ":"
        base = f"({render_letter(letter.left)} {op} {render_letter(letter.right)})"
    return base + "'" if letter.negative else base


def render_word(w: Word) -> str:
    """Canonical text form: space-separated letters; `1` when empty."""
    if not w.letters:
        return "1"
    return " ".join(render_letter(l) for l in w.letters)
