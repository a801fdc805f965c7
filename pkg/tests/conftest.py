"""Shared test helpers: seeded random term generators and a results summary.

Tests import the generators directly (``from conftest import random_word``).
Acceptance tests report one line per criterion through ``record_criterion``;
the lines are printed in a dedicated section at the end of the run whether
the criterion passed or failed.
"""

from __future__ import annotations

import random

import pytest

from skewbrace import Word, dot_letter, colon_letter, make_gen, star
from skewbrace.terms import Letter

SYMBOLS = ("x", "y", "z")


def random_letter(rng: random.Random, max_stratum: int = 3,
                  symbols: tuple[str, ...] = SYMBOLS) -> Letter:
    """Return a random alphabet letter of stratum at most max_stratum."""
    if max_stratum <= 1 or rng.random() < 0.4:
        letter = make_gen(rng.choice(symbols))
        return star(letter) if rng.random() < 0.5 else letter
    for _ in range(8):
        left = random_letter(rng, max_stratum - 1, symbols)
        right = random_letter(rng, max_stratum - 1, symbols)
        build = dot_letter if rng.random() < 0.5 else colon_letter
        try:
            letter = build(left, right)
        except ValueError:
            # the pair hit a cancellation side condition; draw again
            continue
        return star(letter) if rng.random() < 0.5 else letter
    letter = make_gen(rng.choice(symbols))
    return star(letter) if rng.random() < 0.5 else letter


def random_word(rng: random.Random, max_len: int, max_stratum: int = 3,
                symbols: tuple[str, ...] = SYMBOLS, min_len: int = 0) -> Word:
    """Return a random reduced word with min_len <= length <= max_len."""
    length = rng.randint(min_len, max_len)
    letters: list[Letter] = []
    while len(letters) < length:
        letter = random_letter(rng, max_stratum, symbols)
        if letters and letters[-1] is star(letter):
            continue
        letters.append(letter)
    return Word(tuple(letters))


def movable_letter(rng: random.Random,
                   symbols: tuple[str, ...] = SYMBOLS) -> Letter:
    """A pair letter over positive generators: every move applies."""
    a = make_gen(rng.choice(symbols))
    b = make_gen(rng.choice(symbols))
    build = dot_letter if rng.random() < 0.5 else colon_letter
    letter = build(a, b)
    return star(letter) if rng.random() < 0.5 else letter


def movable_word(rng: random.Random, max_len: int = 2,
                 symbols: tuple[str, ...] = SYMBOLS) -> Word:
    """A short word of movable letters, guaranteed reduced and nonempty."""
    letters = [movable_letter(rng, symbols)]
    while len(letters) < rng.randint(1, max_len):
        letter = movable_letter(rng, symbols)
        if letters[-1] is star(letter):
            continue
        letters.append(letter)
    return Word(tuple(letters))


_CRITERIA: list[tuple[int, str, bool, str]] = []


@pytest.fixture
def record_criterion():
    """Register a (number, name, ok, detail) line for the summary section."""

    def _record(number: int, name: str, ok: bool, detail: str) -> None:
        _CRITERIA.append((number, name, ok, detail))

    return _record


def pytest_terminal_summary(terminalreporter) -> None:
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number, name, ok, detail in sorted(_CRITERIA):
        status = "PASS" if ok else "FAIL"
        terminalreporter.write_line(
            f"criterion {number} [{status}] {name}: {detail}")
