"""The two left action operations of letters and words on words.

A letter acts on a word by peeling the word's last letter: the actor is
twisted by the peeled letter through the opposite operation and acts on
the prefix, and the actor applied to the peeled letter is appended on
the right.  A word acts letter by letter, rightmost letter innermost.

The letter-level operations collapse exactly one shape each: acting on
a pair that starts with the actor's star returns the pair's right child.
"""
from __future__ import annotations

from .terms import (COLON, DOT, EMPTY, Letter, Word, colon_letter,
                    dot_letter, mul, star)

_cache_enabled = False
_cache: dict[tuple[str, Letter, tuple[Letter, ...]], Word] = {}


def configure_cache(enabled: bool) -> None:
    """Enable or disable the read-through result cache; clears on toggle.

    The cache is a pure optimization: results must be identical with it
    on or off.
    """
    global _cache_enabled
    _cache_enabled = bool(enabled)
    _cache.clear()


def letter_dot(a: Letter, b: Letter) -> Letter:
    """a . b on letters, collapsing b = (star(a) . c) to c."""
    if b.kind == DOT and not b.negative and b.left is star(a):
        return b.right
    return dot_letter(a, b)


def letter_colon(a: Letter, b: Letter) -> Letter:
    """a : b on letters, collapsing b = (star(a) : c) to c."""
    if b.kind == COLON and not b.negative and b.left is star(a):
        return b.right
    return colon_letter(a, b)


def letter_act_dot(x: Letter, g: Word) -> Word:
    """Dot action of a single letter on a reduced word.

    Peels the last letter y of g: the prefix is acted on by the twisted
    letter (y : x), and (x . y) lands rightmost.  The empty word is
    fixed by every letter.
    """
    if not g:
        return EMPTY
    if _cache_enabled:
        hit = _cache.get((DOT, x, g.letters))
        if hit is not None:
            return hit
    y = g.letters[-1]
    prefix = Word(g.letters[:-1])
    out = mul(letter_act_dot(letter_colon(y, x), prefix),
              Word((letter_dot(x, y),)))
    if _cache_enabled:
        _cache[(DOT, x, g.letters)] = out
    return out


def letter_act_colon(x: Letter, g: Word) -> Word:
    """Colon action of a single letter on a reduced word; mirror of
    letter_act_dot with the twist computed through the dot operation."""
    if not g:
        return EMPTY
    if _cache_enabled:
        hit = _cache.get((COLON, x, g.letters))
        if hit is not None:
            return hit
    y = g.letters[-1]
    prefix = Word(g.letters[:-1])
    out = mul(letter_act_colon(letter_dot(y, x), prefix),
              Word((letter_colon(x, y),)))
    if _cache_enabled:
        _cache[(COLON, x, g.letters)] = out
    return out


def act_dot(a: Word, g: Word) -> Word:
    """Dot action of a word: fold the letters right to left, so the
    rightmost letter of the actor acts first."""
    for x in reversed(a.letters):
        g = letter_act_dot(x, g)
    return g


def act_colon(a: Word, g: Word) -> Word:
    """Colon action of a word: fold the letters right to left."""
    for x in reversed(a.letters):
        g = letter_act_colon(x, g)
    return g
