"""Finite brace tables: verification, enumeration, dictionary, file format."""

import itertools
import random

import pytest

from skewbrace import (
    BraceTable,
    DictionaryError,
    TwoOpBrace,
    cyclic_group,
    enumerate_braces,
    enumerate_group_tables,
    enumerate_twoop,
    format_braces,
    load_braces,
    parse_braces,
    permutation_group_table,
    save_braces,
    trivial_brace,
    twoop_to_brace,
    verify_brace,
    verify_twoop,
)


def relabeled(t: BraceTable, perm) -> BraceTable:
    inverse = [0] * t.order
    for i, p in enumerate(perm):
        inverse[p] = i

    def push(table):
        return tuple(tuple(perm[table[inverse[a]][inverse[b]]]
                           for b in range(t.order)) for a in range(t.order))

    return BraceTable(t.order, push(t.circ), push(t.dot), push(t.colon))


def test_cyclic_and_permutation_groups_are_groups():
    for n in range(1, 7):
        assert verify_brace(trivial_brace(cyclic_group(n))).ok
    sym3 = permutation_group_table(3)
    assert len(sym3) == 6
    assert verify_brace(trivial_brace(sym3)).ok


def test_trivial_brace_dot_is_projection():
    t = trivial_brace(cyclic_group(4))
    assert t.dot == tuple(tuple(range(4)) for _ in range(4))
    report = verify_brace(t)
    assert report.ok and str(report) == "valid"


def test_verify_brace_reports_broken_tables():
    t = trivial_brace(cyclic_group(3))
    bad_dot = [list(row) for row in t.dot]
    bad_dot[1][2] = 1  # breaks dot row identity/action law
    broken = BraceTable(t.order, t.circ, tuple(map(tuple, bad_dot)), t.colon)
    report = verify_brace(broken)
    assert not report.ok
    assert report.violations

    bad_circ = [list(row) for row in t.circ]
    bad_circ[1][1] = 1  # breaks Latin property / inverses
    broken = BraceTable(t.order, tuple(map(tuple, bad_circ)), t.dot, t.colon)
    assert not verify_brace(broken).ok


def test_brace_table_rejects_malformed_rows():
    with pytest.raises(ValueError):
        BraceTable(2, ((0, 1),), ((0, 1), (0, 1)), ((0, 1), (0, 1)))
    with pytest.raises(ValueError):
        BraceTable(2, ((0, 9), (1, 0)), ((0, 1), (0, 1)), ((0, 1), (0, 1)))


def test_group_table_counts_for_small_orders():
    # labelled groups with identity 0: one each for n<=3, then C4 three ways
    # plus one Klein table
    assert [len(enumerate_group_tables(n)) for n in (1, 2, 3, 4)] == [1, 1, 1, 4]
    for table in enumerate_group_tables(4):
        assert verify_brace(trivial_brace(table)).ok


def test_enumerate_braces_counts_and_validity():
    counts = [len(enumerate_braces(n)) for n in (1, 2, 3)]
    assert counts == [1, 1, 1]
    raw4 = enumerate_braces(4)
    assert len(raw4) == 10
    for t in raw4:
        assert verify_brace(t).ok
    assert len(enumerate_braces(4, up_to_iso=True)) == 4


def test_enumerate_braces_caps_order():
    with pytest.raises(ValueError):
        enumerate_braces(0)
    with pytest.raises(ValueError):
        enumerate_braces(5)
    assert len(enumerate_braces(4, cap=5)) == 10


def test_iso_representatives_are_pairwise_non_isomorphic():
    reps = enumerate_braces(4, up_to_iso=True)
    perms = [(0,) + p for p in itertools.permutations((1, 2, 3))]
    for i, s in enumerate(reps):
        for t in reps[i + 1:]:
            assert all(relabeled(s, perm) != t for perm in perms)


def test_every_raw_brace_is_isomorphic_to_a_representative():
    reps = set(enumerate_braces(4, up_to_iso=True))
    perms = [(0,) + p for p in itertools.permutations((1, 2, 3))]
    for t in enumerate_braces(4):
        assert any(relabeled(t, perm) in reps for perm in perms)


def test_trivial_braces_appear_in_enumeration():
    for n in (2, 3, 4):
        assert trivial_brace(cyclic_group(n)) in enumerate_braces(n)


def test_twoop_enumeration_and_dictionary_agree():
    for n in (1, 2, 3, 4):
        twoops = enumerate_twoop(n)
        assert all(verify_twoop(t).ok for t in twoops)
        images = {twoop_to_brace(t) for t in twoops}
        assert all(verify_brace(b).ok for b in images)
        assert images == set(enumerate_braces(n))


def test_twoop_to_brace_refuses_invalid_input():
    c2 = cyclic_group(2)
    good = TwoOpBrace(2, c2, c2)
    assert verify_twoop(good).ok
    assert verify_brace(twoop_to_brace(good)).ok
    # second operation is not a group table
    tampered = TwoOpBrace(3, cyclic_group(3),
                          ((0, 1, 2), (1, 0, 2), (2, 2, 0)))
    assert not verify_twoop(tampered).ok
    with pytest.raises(ValueError):
        twoop_to_brace(tampered)


def test_dictionary_error_carries_evidence():
    t = TwoOpBrace(2, cyclic_group(2), cyclic_group(2))
    err = DictionaryError("boom", t, ("law broken",))
    assert isinstance(err, ValueError)
    assert err.twoop is t
    assert err.violations == ("law broken",)


def test_brace_file_roundtrip(tmp_path):
    braces = list(enumerate_braces(3)) + list(enumerate_braces(4))[:3]
    path = tmp_path / "braces.txt"
    save_braces(path, braces)
    assert load_braces(path) == tuple(braces)

    text = "# a comment\n\n" + format_braces(braces[:1]) + "\n# trailing\n"
    assert parse_braces(text) == tuple(braces[:1])


def test_load_braces_refuses_corrupt_tables(tmp_path):
    t = trivial_brace(cyclic_group(2))
    text = format_braces([t]).replace("0 1", "1 1", 1)
    path = tmp_path / "bad.txt"
    path.write_text(text)
    with pytest.raises(ValueError):
        load_braces(path)


def test_parse_braces_rejects_garbage():
    for text in ("brace x\n", "brace 2\n0 1\n", "0 1\n1 0\n", "brace 1\n0\ndot\n"):
        with pytest.raises(ValueError):
            parse_braces(text)


def test_random_relabelings_of_braces_stay_valid():
    rng = random.Random(53)
    raw4 = enumerate_braces(4)
    for _ in range(20):
        t = rng.choice(raw4)
        perm = (0,) + tuple(rng.sample((1, 2, 3), 3))
        image = relabeled(t, perm)
        assert verify_brace(image).ok
        assert image in raw4
