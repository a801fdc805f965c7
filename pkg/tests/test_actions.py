"""Letter and word actions: recursion, cancellation, and known limits."""

import random

from conftest import random_word
from skewbrace import (
    EMPTY,
    Word,
    act_colon,
    act_dot,
    colon_letter,
    configure_cache,
    dot_letter,
    inv,
    make_gen,
    mul,
    star,
)
from skewbrace.actions import letter_act_colon, letter_act_dot, letter_colon, letter_dot


def oracle_letter_dot(a, b):
    """Independent oracle for the letter product with cancellation."""
    from skewbrace.terms import DOT
    if not b.negative and b.kind == DOT and b.left is star(a):
        return b.right
    return dot_letter(a, b)


def oracle_letter_colon(a, b):
    from skewbrace.terms import COLON
    if not b.negative and b.kind == COLON and b.left is star(a):
        return b.right
    return colon_letter(a, b)


def oracle_act_dot_letter(x, g):
    if not g:
        return EMPTY
    *rest, y = g.letters
    prefix = Word(tuple(rest))
    return mul(oracle_act_dot_letter(oracle_letter_colon(y, x), prefix),
               Word((oracle_letter_dot(x, y),)))


def oracle_act_colon_letter(x, g):
    if not g:
        return EMPTY
    *rest, y = g.letters
    prefix = Word(tuple(rest))
    return mul(oracle_act_colon_letter(oracle_letter_dot(y, x), prefix),
               Word((oracle_letter_colon(x, y),)))


def oracle_act_dot(a, g):
    for x in reversed(a.letters):
        g = oracle_act_dot_letter(x, g)
    return g


def oracle_act_colon(a, g):
    for x in reversed(a.letters):
        g = oracle_act_colon_letter(x, g)
    return g


def test_letter_products_cancel_inverse_pairs():
    x, y = make_gen("x"), make_gen("y")
    b = dot_letter(star(x), y)
    assert letter_dot(x, b) is y
    assert letter_dot(x, y) is dot_letter(x, y)
    c = colon_letter(star(x), y)
    assert letter_colon(x, c) is y
    assert letter_colon(x, y) is colon_letter(x, y)
    # a negative pair never cancels
    assert letter_dot(x, star(b)) is dot_letter(x, star(b))


def test_single_letter_actions_on_two_letter_words():
    x, y, z = make_gen("x"), make_gen("y"), make_gen("z")
    got = letter_act_dot(x, Word((y, z)))
    want = Word((dot_letter(colon_letter(z, x), y), dot_letter(x, z)))
    assert got == want
    got = letter_act_colon(x, Word((y, z)))
    want = Word((colon_letter(dot_letter(z, x), y), colon_letter(x, z)))
    assert got == want


def test_actions_fix_the_empty_word_and_empty_actor():
    rng = random.Random(5)
    for _ in range(50):
        g = random_word(rng, max_len=5)
        a = random_word(rng, max_len=4)
        assert act_dot(EMPTY, g) == g
        assert act_colon(EMPTY, g) == g
        assert act_dot(a, EMPTY) == EMPTY
        assert act_colon(a, EMPTY) == EMPTY


def test_actions_match_independent_recursion():
    rng = random.Random(17)
    for _ in range(150):
        a = random_word(rng, max_len=4, max_stratum=2)
        g = random_word(rng, max_len=4, max_stratum=2)
        assert act_dot(a, g) == oracle_act_dot(a, g)
        assert act_colon(a, g) == oracle_act_colon(a, g)


def test_cache_toggle_does_not_change_results():
    rng = random.Random(29)
    samples = [(random_word(rng, max_len=4), random_word(rng, max_len=4))
               for _ in range(40)]
    try:
        configure_cache(False)
        plain = [(act_dot(a, g), act_colon(a, g)) for a, g in samples]
        configure_cache(True)
        cached = [(act_dot(a, g), act_colon(a, g)) for a, g in samples]
    finally:
        configure_cache(True)
    assert plain == cached


def test_composition_law_holds_without_cancellation():
    # (ab).g = a.(b.g) whenever the product ab does not cancel letters
    rng = random.Random(41)
    checked = 0
    while checked < 120:
        a = random_word(rng, max_len=3)
        b = random_word(rng, max_len=3)
        if len(mul(a, b)) != len(a) + len(b):
            continue
        g = random_word(rng, max_len=4)
        assert act_dot(mul(a, b), g) == act_dot(a, act_dot(b, g))
        assert act_colon(mul(a, b), g) == act_colon(a, act_colon(b, g))
        checked += 1


def collision_operand():
    """A nonempty word that the single letter x maps to 1."""
    x, y = make_gen("x"), make_gen("y")
    first = dot_letter(star(colon_letter(y, x)), star(dot_letter(x, y)))
    return Word((first, y))


def test_letter_translations_are_not_injective():
    # pinned witness: the x-translation sends both this word and 1 to 1,
    # so the letter maps do not extend to a group action on all words
    x = make_gen("x")
    w = collision_operand()
    assert w != EMPTY
    assert act_dot(Word((x,)), w) == EMPTY
    assert act_dot(Word((x,)), EMPTY) == EMPTY


def test_composition_law_fails_across_cancellation():
    # pinned consequence of the collision: x' . (x . w) loses the word w
    x = make_gen("x")
    w = collision_operand()
    xw = Word((x,))
    composed = act_dot(Word((star(x),)), act_dot(xw, w))
    assert act_dot(mul(xw, inv(xw)), w) == w
    assert composed == EMPTY
    assert composed != w
