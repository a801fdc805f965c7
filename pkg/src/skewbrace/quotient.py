"""Equality in the quotient of the free group by the brace congruence.

The congruence is generated by the pairs (x . y) x ~ (y : x) y over
generator letters, closed under products and both actions.  The decision
procedure is three-valued: Equal comes with a replayable derivation
trace, Distinct with a separating finite model and assignment, and
Unknown with the exhausted search budget.
"""
from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Sequence

from .actions import act_colon, act_dot, letter_colon, letter_dot
from .braces import BraceTable, enumerate_braces
from .hom import GeneratorMap, eval_word
from .terms import (COLON, DOT, GEN, Letter, Word, inv, mul, reduce,
                    render_word, star, word_stratum, word_symbols)

EQUAL = "equal"
DISTINCT = "distinct"
UNKNOWN = "unknown"


@dataclass(frozen=True)
class Budget:
    """Caps for the decision procedure; every field must be positive."""

    max_steps: int = 20_000
    max_word_len: int = 16
    max_stratum: int = 5
    max_brace_order: int = 4
    max_maps: int = 10_000

    def __post_init__(self) -> None:
        for name in ("max_steps", "max_word_len", "max_stratum",
                     "max_brace_order", "max_maps"):
            value = getattr(self, name)
            if not isinstance(value, int) or value < 1:
                raise ValueError(f"budget field {name} must be positive")


DEFAULT_BUDGET = Budget()


@dataclass(frozen=True)
class Step:
    """One derivation step: the move's rule id, the position it fired
    at, and the resulting word.  A `~rev` suffix on the rule id means
    the move ran from the resulting word back to the previous one."""

    rule: str
    pos: int
    word: Word


@dataclass(frozen=True)
class DistinctWitness:
    """A finite model and assignment under which the two words differ."""

    brace: BraceTable
    assignment: tuple[tuple[str, int], ...]
    image_a: int
    image_b: int

    def generator_map(self) -> GeneratorMap:
        return GeneratorMap(self.brace, dict(self.assignment))


@dataclass(frozen=True)
class SearchStats:
    """What the procedure actually spent."""

    steps: int = 0
    visited: int = 0
    maps_tried: int = 0
    braces_tried: int = 0


@dataclass(frozen=True)
class EqResult:
    """Three-valued verdict with its supporting evidence."""

    verdict: str
    trace: tuple[Step, ...] | None
    witness: DistinctWitness | None
    budget: Budget
    stats: SearchStats


def _is_pos_gen(letter: Letter) -> bool:
    return letter.kind == GEN and not letter.negative


def _gen_children(letter: Letter) -> bool:
    return _is_pos_gen(letter.left) and _is_pos_gen(letter.right)


def _swap_replacements(p: Letter, q: Letter) -> list[tuple[Letter, ...]]:
    """Rewrites of the adjacent factor [p, q] coming from the base pairs
    (x . y) x ~ (y : x) y over generators, in both directions and in
    inverted form."""
    out: list[tuple[Letter, ...]] = []
    if not p.negative and p.kind in (DOT, COLON) and _gen_children(p) \
            and q is p.left:
        if p.kind == DOT:
            out.append((letter_colon(p.right, p.left), p.right))
        else:
            out.append((letter_dot(p.right, p.left), p.right))
    if q.negative and q.kind in (DOT, COLON) and _gen_children(q) \
            and p is star(q.left):
        if q.kind == DOT:
            out.append((star(q.right), star(letter_colon(q.right, q.left))))
        else:
            out.append((star(q.right), star(letter_dot(q.right, q.left))))
    return out


def _unfold_replacements(l: Letter) -> list[tuple[Letter, ...]]:
    """Rewrites of a single pair letter over generators: the base pair
    with the trailing generator moved to the other side, for example
    (x . y) ~ (y : x) y x'; inverted letters unfold to the inverse."""
    if l.kind == GEN or not _gen_children(l):
        return []
    if not l.negative:
        twisted = letter_colon if l.kind == DOT else letter_dot
        return [(twisted(l.right, l.left), l.right, star(l.left))]
    twisted = letter_colon if l.kind == DOT else letter_dot
    return [(l.left, star(l.right), star(twisted(l.right, l.left)))]


@functools.lru_cache(maxsize=None)
def _letter_neighbor_words(letter: Letter) -> tuple[Word, ...]:
    found = {w for _, _, w in labeled_neighbors(Word((letter,)))}
    return tuple(sorted(found, key=_word_key))


def _child_replacements(l: Letter) -> list[tuple[Letter, ...]]:
    """Rewrites of a single pair letter obtained by rewriting one of its
    children and recomputing the pair through the word actions."""
    if l.kind == GEN:
        return []
    core = star(l) if l.negative else l
    act = act_dot if core.kind == DOT else act_colon
    out: list[tuple[Letter, ...]] = []
    for n in _letter_neighbor_words(core.left):
        replaced = act(n, Word((core.right,)))
        out.append((inv(replaced) if l.negative else replaced).letters)
    for n in _letter_neighbor_words(core.right):
        replaced = act(Word((core.left,)), n)
        out.append((inv(replaced) if l.negative else replaced).letters)
    return out


def _splice(letters: tuple[Letter, ...], i: int, width: int,
            replacement: tuple[Letter, ...]) -> Word:
    return reduce(letters[:i] + replacement + letters[i + width:])


def labeled_neighbors(w: Word) -> set[tuple[str, int, Word]]:
    """All words one congruence move away, labeled (rule, position)."""
    out: set[tuple[str, int, Word]] = set()
    ls = w.letters
    for i in range(len(ls) - 1):
        for repl in _swap_replacements(ls[i], ls[i + 1]):
            out.add(("swap", i, _splice(ls, i, 2, repl)))
    for i, letter in enumerate(ls):
        for repl in _unfold_replacements(letter):
            out.add(("unfold", i, _splice(ls, i, 1, repl)))
        for repl in _child_replacements(letter):
            out.add(("child", i, _splice(ls, i, 1, repl)))
    return out


def neighbors(w: Word) -> set[Word]:
    """All words one congruence move away."""
    return {word for _, _, word in labeled_neighbors(w)}


def _word_key(w: Word) -> tuple[int, str]:
    return (len(w.letters), render_word(w))


def _labeled_key(t: tuple[str, int, Word]) -> tuple:
    return (t[0], t[1], _word_key(t[2]))


@functools.lru_cache(maxsize=None)
def brace_library(max_order: int) -> tuple[BraceTable, ...]:
    """All models up to isomorphism with order at most max_order,
    ascending, used for refutation."""
    out: list[BraceTable] = []
    for n in range(1, max_order + 1):
        out.extend(enumerate_braces(n, up_to_iso=True, cap=max(4, max_order)))
    return tuple(out)


def _refute(a: Word, b: Word,
            budget: Budget) -> tuple[DistinctWitness | None, int, int]:
    syms = sorted(word_symbols(a) | word_symbols(b))
    tried = 0
    braces_tried = 0
    for brace in brace_library(budget.max_brace_order):
        braces_tried += 1
        for combo in itertools.product(range(brace.order), repeat=len(syms)):
            if tried >= budget.max_maps:
                return None, tried, braces_tried
            tried += 1
            f = GeneratorMap(brace, dict(zip(syms, combo)))
            ia, ib = eval_word(f, a), eval_word(f, b)
            if ia != ib:
                witness = DistinctWitness(brace, tuple(zip(syms, combo)),
                                          ia, ib)
                return witness, tried, braces_tried
    return None, tried, braces_tried


def _reverse_step(frm: Word, to: Word) -> Step:
    for rule, pos, v in sorted(labeled_neighbors(to), key=_labeled_key):
        if v == frm:
            return Step(rule + "~rev", pos, to)
    raise RuntimeError("search recorded an edge that cannot be replayed")


def _build_trace(pa: dict, pb: dict, meet: Word) -> tuple[Step, ...]:
    forward: list[Step] = []
    cur = meet
    while pa[cur] is not None:
        parent, rule, pos = pa[cur]
        forward.append(Step(rule, pos, cur))
        cur = parent
    forward.reverse()
    steps = forward
    cur = meet
    while pb[cur] is not None:
        parent, _, _ = pb[cur]
        steps.append(_reverse_step(cur, parent))
        cur = parent
    return tuple(steps)


def _search(a: Word, b: Word,
            budget: Budget) -> tuple[tuple[Step, ...] | None, int, int]:
    parents_a: dict[Word, tuple | None] = {a: None}
    parents_b: dict[Word, tuple | None] = {b: None}
    front_a, front_b = [a], [b]
    steps = 0
    # budget filters make moves one-way near the limits, so keep going
    # as long as either side can still grow
    while (front_a or front_b) and steps < budget.max_steps:
        if front_a and (not front_b or len(front_a) <= len(front_b)):
            front, parents, others, from_a = front_a, parents_a, parents_b, True
        else:
            front, parents, others, from_a = front_b, parents_b, parents_a, False
        new_front: list[Word] = []
        meet: Word | None = None
        for w in sorted(front, key=_word_key):
            if steps >= budget.max_steps:
                break
            steps += 1
            for rule, pos, v in sorted(labeled_neighbors(w), key=_labeled_key):
                if len(v.letters) > budget.max_word_len:
                    continue
                if word_stratum(v) > budget.max_stratum:
                    continue
                if v in parents:
                    continue
                parents[v] = (w, rule, pos)
                new_front.append(v)
                if v in others:
                    meet = v
                    break
            if meet is not None:
                break
        visited = len(parents_a) + len(parents_b)
        if meet is not None:
            return _build_trace(parents_a, parents_b, meet), steps, visited
        if from_a:
            front_a = new_front
        else:
            front_b = new_front
    return None, steps, len(parents_a) + len(parents_b)


def decide_eq(a: Word, b: Word, budget: Budget = DEFAULT_BUDGET) -> EqResult:
    """Decide equality in the quotient: Equal with a replayable trace,
    Distinct with a separating model, or Unknown with the spent budget.

    Refutation runs first (models in increasing order, assignments in
    lexicographic order); the bidirectional search over congruence moves
    runs second.  Both are deterministic.
    """
    if a == b:
        return EqResult(EQUAL, (), None, budget, SearchStats())
    witness, maps_tried, braces_tried = _refute(a, b, budget)
    if witness is not None:
        return EqResult(DISTINCT, None, witness, budget,
                        SearchStats(0, 0, maps_tried, braces_tried))
    trace, steps, visited = _search(a, b, budget)
    if trace is not None:
        return EqResult(EQUAL, trace, None, budget,
                        SearchStats(steps, visited, maps_tried, braces_tried))
    return EqResult(UNKNOWN, None, None, budget,
                    SearchStats(steps, visited, maps_tried, braces_tried))


def replay_trace(a: Word, trace: Sequence[Step]) -> bool:
    """Re-run a derivation: every hop must be a labeled move between the
    consecutive words, in the direction the step records."""
    cur = a
    for step in trace:
        if step.rule.endswith("~rev"):
            base = step.rule[: -len("~rev")]
            ok = (base, step.pos, cur) in labeled_neighbors(step.word)
        else:
            ok = (step.rule, step.pos, step.word) in labeled_neighbors(cur)
        if not ok:
            return False
        cur = step.word
    return True


def serialize_trace(trace: Sequence[Step]) -> str:
    """One step per line: `<rule-id> @ <position> : <rendered word>`."""
    return "\n".join(f"{s.rule} @ {s.pos} : {render_word(s.word)}"
                     for s in trace)


@dataclass(frozen=True)
class BraceIdentityReport:
    """Image agreement of (a . b) a and (b : a) b across a model library."""

    checked: int
    violations: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def check_brace_identity(a: Word, b: Word,
                         library: Sequence[BraceTable],
                         max_maps: int = DEFAULT_BUDGET.max_maps,
                         ) -> BraceIdentityReport:
    """Evaluate both sides of the defining identity in every library
    model under every generator assignment (capped), and report any
    disagreement; one would contradict the quotient being a model."""
    lhs = mul(act_dot(a, b), a)
    rhs = mul(act_colon(b, a), b)
    syms = sorted(word_symbols(a) | word_symbols(b))
    checked = 0
    violations: list[str] = []
    for brace in library:
        for combo in itertools.product(range(brace.order), repeat=len(syms)):
            if checked >= max_maps:
                return BraceIdentityReport(checked, tuple(violations))
            checked += 1
            f = GeneratorMap(brace, dict(zip(syms, combo)))
            va, vb = eval_word(f, lhs), eval_word(f, rhs)
            if va != vb:
                violations.append(
                    f"order {brace.order}, map {dict(zip(syms, combo))}: "
                    f"{va} != {vb}")
    return BraceIdentityReport(checked, tuple(violations))
