"""Evaluation of letters and words in a finite model.

A GeneratorMap assigns an element index to each generator symbol; the
induced evaluation sends starred letters to circle-inverses, formal dot
and colon letters through the model's action tables, and words to the
circle-product of their letters.  This is the workhorse for refutation
and for every quotient-level property check.
"""
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Mapping

from .braces import BraceTable, load_braces
from .terms import _GEN_NAME, DOT, GEN, Letter, Word, star

__all__ = [
    "GeneratorMap", "eval_letter", "eval_word", "HomCompatReport",
    "check_hom_action_compat", "save_generator_map", "load_generator_map",
]


@dataclass(frozen=True, eq=False)
class GeneratorMap:
    """Assignment of target elements to generator symbols."""

    target: BraceTable
    assignment: Mapping[str, int]

    def __post_init__(self) -> None:
        for name, idx in self.assignment.items():
            if not isinstance(name, str) or not _GEN_NAME.match(name):
                raise ValueError(f"bad generator symbol: {name!r}")
            if not 0 <= idx < self.target.order:
                raise ValueError(
                    f"assignment {name} = {idx} out of range for order "
                    f"{self.target.order}")


def _eval(f: GeneratorMap, letter: Letter, memo: dict[Letter, int]) -> int:
    found = memo.get(letter)
    if found is not None:
        return found
    if letter.negative:
        value = f.target.circ_inv(_eval(f, star(letter), memo))
    elif letter.kind == GEN:
        try:
            value = f.assignment[letter.name]
        except KeyError:
            raise ValueError(f"unassigned symbol: {letter.name}") from None
    else:
        table = f.target.dot if letter.kind == DOT else f.target.colon
        value = table[_eval(f, letter.left, memo)][_eval(f, letter.right, memo)]
    memo[letter] = value
    return value


def eval_letter(f: GeneratorMap, letter: Letter) -> int:
    """Element index of one letter: generators through the assignment,
    pairs through the action tables, negatives by circle-inverse."""
    return _eval(f, letter, {})


def eval_word(f: GeneratorMap, w: Word) -> int:
    """Circle-product of the letter evaluations; empty word is 0."""
    memo: dict[Letter, int] = {}
    out = 0
    for letter in w.letters:
        out = f.target.circ[out][_eval(f, letter, memo)]
    return out


@dataclass(frozen=True)
class HomCompatReport:
    """First mismatch between symbolic action and model action, if any."""

    mismatches: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.mismatches


def check_hom_action_compat(f: GeneratorMap, a: Word, b: Word) -> HomCompatReport:
    """Compare the evaluation of a symbolic action with the model-level
    action of the evaluations, for both operations."""
    from .actions import act_colon, act_dot

    out = []
    ia, ib = eval_word(f, a), eval_word(f, b)
    got_dot = eval_word(f, act_dot(a, b))
    want_dot = f.target.dot[ia][ib]
    if got_dot != want_dot:
        out.append(f"dot: image {got_dot} != table action {want_dot}")
    got_colon = eval_word(f, act_colon(a, b))
    want_colon = f.target.colon[ia][ib]
    if got_colon != want_colon:
        out.append(f"colon: image {got_colon} != table action {want_colon}")
    return HomCompatReport(tuple(out))


def save_generator_map(path: str | Path, f: GeneratorMap,
                       brace_path: str | Path) -> None:
    """Write a map file: a target header naming the brace file, then one
    `symbol = index` line per assignment."""
    lines = [f"target {brace_path}"]
    lines += [f"{name} = {idx}" for name, idx in sorted(f.assignment.items())]
    Path(path).write_text("\n".join(lines) + "\n")


def load_generator_map(path: str | Path,
                       target: BraceTable | None = None) -> GeneratorMap:
    """Read a map file; the target table comes from the header's brace
    file (resolved relative to the map file) unless one is passed in.

    The named brace file must contain exactly one table.
    """
    path = Path(path)
    header: str | None = None
    assignment: dict[str, int] = {}
    for raw in path.read_text().splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("target "):
            header = line[len("target "):].strip()
            continue
        parts = [p.strip() for p in line.split("=")]
        if len(parts) != 2 or not parts[0] or not parts[1]:
            raise ValueError(f"bad map line: {raw!r}")
        try:
            assignment[parts[0]] = int(parts[1])
        except ValueError:
            raise ValueError(f"bad index in map line: {raw!r}") from None
    if target is None:
        if header is None:
            raise ValueError("map file has no target header and no table "
                             "was supplied")
        brace_path = Path(header)
        if not brace_path.is_absolute():
            brace_path = path.parent / brace_path
        braces = load_braces(brace_path)
        if len(braces) != 1:
            raise ValueError(
                f"target file {brace_path} must contain exactly one brace, "
                f"found {len(braces)}")
        target = braces[0]
    return GeneratorMap(target, assignment)
