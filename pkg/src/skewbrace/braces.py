"""Finite skew-brace models as explicit tables.

A BraceTable stores a group operation and two left action tables that
satisfy the defining identity (a . b) o a = (b : a) o b.  The module
verifies tables, builds the trivial model on any group, enumerates all
models at small orders, and cross-checks the enumeration against an
independent two-group presentation through a machine-verified
dictionary.  Tables index elements 0..n-1 with the identity at 0.
"""
from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

Table = tuple[tuple[int, ...], ...]


def _freeze_table(rows: Sequence[Sequence[int]], n: int, label: str) -> Table:
    if len(rows) != n:
        raise ValueError(f"{label} table must have {n} rows")
    out = []
    for row in rows:
        row = tuple(int(v) for v in row)
        if len(row) != n:
            raise ValueError(f"{label} table must have {n} columns per row")
        for v in row:
            if not 0 <= v < n:
                raise ValueError(f"{label} table entry {v} out of range")
        out.append(row)
    return tuple(out)


@dataclass(frozen=True)
class ValidationReport:
    """Axiom check outcome: empty violations means valid."""

    violations: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def __str__(self) -> str:
        return "valid" if self.ok else "\n".join(self.violations)


@dataclass(frozen=True)
class BraceTable:
    """Group table plus two left action tables on the same index set."""

    order: int
    circ: Table
    dot: Table
    colon: Table

    def __post_init__(self) -> None:
        n = self.order
        if not isinstance(n, int) or n < 1:
            raise ValueError("order must be a positive integer")
        object.__setattr__(self, "circ", _freeze_table(self.circ, n, "circ"))
        object.__setattr__(self, "dot", _freeze_table(self.dot, n, "dot"))
        object.__setattr__(self, "colon", _freeze_table(self.colon, n, "colon"))

    def circ_inv(self, a: int) -> int:
        """Group inverse of a under the circle operation."""
        return self.circ[a].index(0)


def _group_violations(circ: Table, label: str = "circ") -> list[str]:
    n = len(circ)
    out = []
    for a in range(n):
        if circ[0][a] != a:
            out.append(f"{label}: identity row broken at {a}")
        if circ[a][0] != a:
            out.append(f"{label}: identity column broken at {a}")
    for a in range(n):
        if 0 not in circ[a]:
            out.append(f"{label}: element {a} has no inverse")
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if circ[circ[a][b]][c] != circ[a][circ[b][c]]:
                    out.append(f"{label}: not associative at ({a},{b},{c})")
                    if len(out) > 50:
                        return out
    return out


def _action_violations(circ: Table, action: Table, label: str) -> list[str]:
    n = len(circ)
    out = []
    for c in range(n):
        if action[0][c] != c:
            out.append(f"{label}: identity must act trivially, breaks at {c}")
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if action[circ[a][b]][c] != action[a][action[b][c]]:
                    out.append(f"{label}: action law fails at ({a},{b},{c})")
                    if len(out) > 50:
                        return out
    return out


def verify_brace(t: BraceTable) -> ValidationReport:
    """Check every axiom instance; report all violations found."""
    out = _group_violations(t.circ)
    out += _action_violations(t.circ, t.dot, "dot")
    out += _action_violations(t.circ, t.colon, "colon")
    if not out:
        for a in range(t.order):
            for b in range(t.order):
                if t.circ[t.dot[a][b]][a] != t.circ[t.colon[b][a]][b]:
                    out.append(f"compat: (a.b)oa != (b:a)ob at ({a},{b})")
    return ValidationReport(tuple(out))


def trivial_brace(group: Sequence[Sequence[int]]) -> BraceTable:
    """Trivial model on a group: dot projects, colon conjugates."""
    n = len(group)
    circ = _freeze_table(group, n, "circ")
    bad = _group_violations(circ)
    if bad:
        raise ValueError("input is not a group table: " + bad[0])
    inv = [circ[a].index(0) for a in range(n)]
    dot = tuple(tuple(range(n)) for _ in range(n))
    colon = tuple(tuple(circ[circ[b][a]][inv[b]] for a in range(n))
                  for b in range(n))
    return BraceTable(n, circ, dot, colon)


def cyclic_group(n: int) -> Table:
    """Addition table of the cyclic group of order n."""
    if n < 1:
        raise ValueError("order must be a positive integer")
    return tuple(tuple((a + b) % n for b in range(n)) for a in range(n))


def permutation_group_table(k: int) -> Table:
    """Composition table of all permutations of k points, identity first."""
    perms = sorted(itertools.permutations(range(k)))
    index = {p: i for i, p in enumerate(perms)}
    return tuple(tuple(index[tuple(p[q[i]] for i in range(k))] for q in perms)
                 for p in perms)


def enumerate_group_tables(n: int) -> tuple[Table, ...]:
    """All group tables on 0..n-1 with identity 0, in lexicographic order."""
    if n < 1:
        raise ValueError("order must be a positive integer")
    if n == 1:
        return (((0,),),)
    rows0 = tuple(range(n))
    results: list[Table] = []

    def extend(rows: list[tuple[int, ...]]) -> None:
        a = len(rows)
        if a == n:
            table = tuple(rows)
            if not _group_violations(table):
                results.append(table)
            return
        # row a starts with a (a o 0 = a); columns must stay Latin
        for rest in itertools.permutations(sorted(set(range(n)) - {a})):
            row = (a,) + rest
            if all(row[c] not in {r[c] for r in rows} for c in range(1, n)):
                rows.append(row)
                extend(rows)
                rows.pop()

    extend([rows0])
    return tuple(sorted(results))


def _compose(p: Sequence[int], q: Sequence[int]) -> tuple[int, ...]:
    return tuple(p[q[i]] for i in range(len(p)))


def _action_tables(circ: Table) -> list[Table]:
    """All assignments of a permutation to each element that send the
    identity to the identity map and turn the group product into map
    composition."""
    n = len(circ)
    idrow = tuple(range(n))
    perms = sorted(itertools.permutations(range(n)))

    def settle(rows: dict[int, tuple[int, ...]]) -> dict | None:
        changed = True
        while changed:
            changed = False
            known = list(rows)
            for a in known:
                for b in known:
                    c = circ[a][b]
                    comp = _compose(rows[a], rows[b])
                    if c in rows:
                        if rows[c] != comp:
                            return None
                    else:
                        rows[c] = comp
                        changed = True
        return rows

    results: list[Table] = []

    def extend(rows: dict[int, tuple[int, ...]]) -> None:
        if len(rows) == n:
            results.append(tuple(rows[e] for e in range(n)))
            return
        e = min(set(range(n)) - set(rows))
        for p in perms:
            trial = settle({**rows, e: p})
            if trial is not None:
                extend(trial)

    extend({0: idrow})
    return sorted(set(results))


def _derive_colon(circ: Table, dot: Table) -> Table | None:
    """Solve the colon table from the defining identity; reject it unless
    it is itself a left action."""
    n = len(circ)
    cinv = [circ[a].index(0) for a in range(n)]
    colon = tuple(tuple(circ[circ[dot[a][b]][a]][cinv[b]] for a in range(n))
                  for b in range(n))
    if _action_violations(circ, colon, "colon"):
        return None
    return colon


@functools.lru_cache(maxsize=None)
def _enumerate_braces_cached(n: int, up_to_iso: bool) -> tuple[BraceTable, ...]:
    found: list[BraceTable] = []
    for circ in enumerate_group_tables(n):
        for dot in _action_tables(circ):
            colon = _derive_colon(circ, dot)
            if colon is not None:
                found.append(BraceTable(n, circ, dot, colon))
    found.sort(key=lambda t: (t.circ, t.dot, t.colon))
    if not up_to_iso:
        return tuple(found)
    reps: dict[tuple, BraceTable] = {}
    for t in found:
        key = _canonical_key(t)
        if key not in reps:
            reps[key] = BraceTable(n, *key)
    return tuple(reps[k] for k in sorted(reps))


def enumerate_braces(n: int, up_to_iso: bool = False, *,
                     cap: int = 4) -> tuple[BraceTable, ...]:
    """All valid tables of the given order, identity pinned at 0.

    With up_to_iso, one canonical representative per class of
    identity-fixing relabelings.  Deterministic and order-stable.
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError("order must be a positive integer")
    if n > cap:
        raise ValueError(f"order {n} exceeds the enumeration cap {cap}")
    return _enumerate_braces_cached(n, bool(up_to_iso))


def _relabel(table: Table, perm: Sequence[int]) -> Table:
    n = len(table)
    out = [[0] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            out[perm[a]][perm[b]] = perm[table[a][b]]
    return tuple(tuple(row) for row in out)


def _canonical_key(t: BraceTable) -> tuple[Table, Table, Table]:
    """Minimal relabeling over all bijections fixing the identity."""
    best = None
    for rest in itertools.permutations(range(1, t.order)):
        perm = (0,) + rest
        key = (_relabel(t.circ, perm), _relabel(t.dot, perm),
               _relabel(t.colon, perm))
        if best is None or key < best:
            best = key
    return best


@dataclass(frozen=True)
class TwoOpBrace:
    """Two group operations on one index set, linked by the left
    compatibility law a o (b + c) = (a o b) - a + (a o c)."""

    order: int
    plus: Table
    circ: Table

    def __post_init__(self) -> None:
        n = self.order
        if not isinstance(n, int) or n < 1:
            raise ValueError("order must be a positive integer")
        object.__setattr__(self, "plus", _freeze_table(self.plus, n, "plus"))
        object.__setattr__(self, "circ", _freeze_table(self.circ, n, "circ"))


def verify_twoop(t: TwoOpBrace) -> ValidationReport:
    """Check both group structures and the compatibility law."""
    out = _group_violations(t.plus, "plus")
    out += _group_violations(t.circ, "circ")
    if not out:
        n = t.order
        pneg = [t.plus[a].index(0) for a in range(n)]
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    lhs = t.circ[a][t.plus[b][c]]
                    rhs = t.plus[t.plus[t.circ[a][b]][pneg[a]]][t.circ[a][c]]
                    if lhs != rhs:
                        out.append(f"compat fails at ({a},{b},{c})")
    return ValidationReport(tuple(out))


@functools.lru_cache(maxsize=None)
def _enumerate_twoop_cached(n: int) -> tuple[TwoOpBrace, ...]:
    groups = enumerate_group_tables(n)
    found = []
    for plus in groups:
        for circ in groups:
            t = TwoOpBrace(n, plus, circ)
            if verify_twoop(t).ok:
                found.append(t)
    return tuple(sorted(found, key=lambda t: (t.plus, t.circ)))


def enumerate_twoop(n: int, *, cap: int = 4) -> tuple[TwoOpBrace, ...]:
    """All valid two-operation tables of the given order."""
    if not isinstance(n, int) or n < 1:
        raise ValueError("order must be a positive integer")
    if n > cap:
        raise ValueError(f"order {n} exceeds the enumeration cap {cap}")
    return _enumerate_twoop_cached(n)


class DictionaryError(ValueError):
    """The two-operation to action-table dictionary failed to validate."""

    def __init__(self, message: str, twoop: TwoOpBrace,
                 violations: tuple[str, ...]):
        super().__init__(message)
        self.twoop = twoop
        self.violations = violations


def twoop_to_brace(t: TwoOpBrace) -> BraceTable:
    """Translate a two-operation table to an action-table model.

    The dot action is a . b = (-a) + (a o b); the colon action is solved
    from the defining identity.  The output is machine-verified and any
    failure raises loudly with the counterexample attached.
    """
    report = verify_twoop(t)
    if not report.ok:
        raise ValueError("invalid two-operation table: " +
                         report.violations[0])
    n = t.order
    pneg = [t.plus[a].index(0) for a in range(n)]
    cinv = [t.circ[a].index(0) for a in range(n)]
    dot = tuple(tuple(t.plus[pneg[a]][t.circ[a][b]] for b in range(n))
                for a in range(n))
    colon = tuple(tuple(t.circ[t.circ[dot[a][b]][a]][cinv[b]]
                        for a in range(n)) for b in range(n))
    out = BraceTable(n, t.circ, dot, colon)
    check = verify_brace(out)
    if not check.ok:
        raise DictionaryError(
            "dictionary output failed verification: " + check.violations[0],
            t, check.violations)
    return out


def format_braces(braces: Iterable[BraceTable]) -> str:
    """Render tables in the line-oriented text format."""
    blocks = []
    for t in braces:
        lines = [f"brace {t.order}"]
        lines += [" ".join(map(str, row)) for row in t.circ]
        lines.append("dot")
        lines += [" ".join(map(str, row)) for row in t.dot]
        lines.append("colon")
        lines += [" ".join(map(str, row)) for row in t.colon]
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + "\n"


def parse_braces(text: str) -> tuple[BraceTable, ...]:
    """Parse the text format; blank lines and # comments are ignored.

    Raises ValueError on structural problems; axiom checking is the
    caller's business (load_braces refuses invalid tables).
    """
    lines = [l.strip() for l in text.splitlines()]
    lines = [l for l in lines if l and not l.startswith("#")]
    out: list[BraceTable] = []
    i = 0

    def take_rows(n: int, what: str) -> list[list[int]]:
        nonlocal i
        rows = []
        for _ in range(n):
            if i >= len(lines):
                raise ValueError(f"unexpected end of input in {what} rows")
            try:
                rows.append([int(v) for v in lines[i].split()])
            except ValueError:
                raise ValueError(f"bad {what} row: {lines[i]!r}") from None
            i += 1
        return rows

    while i < len(lines):
        parts = lines[i].split()
        if len(parts) != 2 or parts[0] != "brace":
            raise ValueError(f"expected 'brace <n>', got {lines[i]!r}")
        try:
            n = int(parts[1])
        except ValueError:
            raise ValueError(f"bad order in {lines[i]!r}") from None
        i += 1
        circ = take_rows(n, "circ")
        if i >= len(lines) or lines[i] != "dot":
            raise ValueError("expected 'dot' section")
        i += 1
        dot = take_rows(n, "dot")
        if i >= len(lines) or lines[i] != "colon":
            raise ValueError("expected 'colon' section")
        i += 1
        colon = take_rows(n, "colon")
        out.append(BraceTable(n, tuple(map(tuple, circ)),
                              tuple(map(tuple, dot)),
                              tuple(map(tuple, colon))))
    return tuple(out)


def load_braces(path: str | Path) -> tuple[BraceTable, ...]:
    """Load and verify tables from a file; refuse any invalid table."""
    braces = parse_braces(Path(path).read_text())
    for idx, t in enumerate(braces):
        report = verify_brace(t)
        if not report.ok:
            raise ValueError(
                f"brace #{idx} in {path} is invalid: {report.violations[0]}")
    return braces


def save_braces(path: str | Path, braces: Iterable[BraceTable]) -> None:
    """Write tables to a file in the text format."""
    Path(path).write_text(format_braces(braces))
