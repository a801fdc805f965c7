"""Command-line front end.

Expressions use identifiers for generators, a postfix ' for inverses
(binds tightest), whitespace juxtaposition for the group product
(left-associative), infix . and : for the two actions (non-associative,
product binds tighter), parentheses, and 1 for the identity.

Subcommands: eq, normal-form, act, eval, enumerate, verify.  The eq
verdict maps to the exit code: 0 equal, 1 distinct, 2 unknown; every
error exits above 2.
"""
from __future__ import annotations

import argparse
import re
import sys
from dataclasses import dataclass

from .actions import act_colon, act_dot
from .braces import enumerate_braces, format_braces, load_braces, \
    parse_braces, verify_brace
from .hom import eval_word, load_generator_map
from .quotient import (Budget, EqResult, decide_eq, serialize_trace)
from .terms import EMPTY, Word, inv, make_gen, mul, render_word


class ParseError(ValueError):
    """Bad surface syntax; carries the offending character position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


@dataclass(frozen=True)
class Symbol:
    name: str


@dataclass(frozen=True)
class Identity:
    pass


@dataclass(frozen=True)
class Inverse:
    operand: "Expr"


@dataclass(frozen=True)
class Product:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class DotAct:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class ColonAct:
    left: "Expr"
    right: "Expr"


Expr = Symbol | Identity | Inverse | Product | DotAct | ColonAct

_IDENT = re.compile(r"[a-z][a-z0-9]*")
_ATOM_STARTERS = ("ident", "one", "lparen")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    out = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch == "1":
            out.append(("one", "1", i))
            i += 1
        elif ch == "'":
            out.append(("quote", ch, i))
            i += 1
        elif ch == ".":
            out.append(("dotop", ch, i))
            i += 1
        elif ch == ":":
            out.append(("colonop", ch, i))
            i += 1
        elif ch == "(":
            out.append(("lparen", ch, i))
            i += 1
        elif ch == ")":
            out.append(("rparen", ch, i))
            i += 1
        else:
            m = _IDENT.match(text, i)
            if not m:
                raise ParseError(f"unknown token {ch!r}", i)
            out.append(("ident", m.group(), i))
            i = m.end()
    return out


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def _peek(self) -> str | None:
        return self.tokens[self.i][0] if self.i < len(self.tokens) else None

    def _next(self) -> tuple[str, str, int]:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def _position(self) -> int:
        if self.i < len(self.tokens):
            return self.tokens[self.i][2]
        return len(self.text)

    def parse(self) -> Expr:
        node = self._act()
        if self.i < len(self.tokens):
            raise ParseError(f"unexpected token {self.tokens[self.i][1]!r}",
                             self._position())
        return node

    def _act(self) -> Expr:
        left = self._product()
        kind = self._peek()
        if kind not in ("dotop", "colonop"):
            return left
        self._next()
        right = self._product()
        if self._peek() in ("dotop", "colonop"):
            raise ParseError("'.' and ':' are not associative; parenthesize",
                             self._position())
        return DotAct(left, right) if kind == "dotop" else ColonAct(left, right)

    def _product(self) -> Expr:
        node = self._postfix()
        while self._peek() in _ATOM_STARTERS:
            node = Product(node, self._postfix())
        return node

    def _postfix(self) -> Expr:
        node = self._atom()
        while self._peek() == "quote":
            self._next()
            node = Inverse(node)
        return node

    def _atom(self) -> Expr:
        kind = self._peek()
        if kind == "ident":
            return Symbol(self._next()[1])
        if kind == "one":
            self._next()
            return Identity()
        if kind == "lparen":
            self._next()
            node = self._act()
            if self._peek() != "rparen":
                raise ParseError("unbalanced parenthesis", self._position())
            self._next()
            return node
        raise ParseError("expected an expression", self._position())


def parse(text: str) -> Expr:
    """Parse an expression; raise ParseError with a position on bad
    input."""
    return _Parser(text).parse()


def eval_to_word(e: Expr) -> Word:
    """Evaluate an expression tree to a reduced word."""
    if isinstance(e, Symbol):
        return Word((make_gen(e.name),))
    if isinstance(e, Identity):
        return EMPTY
    if isinstance(e, Inverse):
        return inv(eval_to_word(e.operand))
    if isinstance(e, Product):
        return mul(eval_to_word(e.left), eval_to_word(e.right))
    if isinstance(e, DotAct):
        return act_dot(eval_to_word(e.left), eval_to_word(e.right))
    if isinstance(e, ColonAct):
        return act_colon(eval_to_word(e.left), eval_to_word(e.right))
    raise TypeError(f"not an expression node: {e!r}")


def _word_of(text: str) -> Word:
    return eval_to_word(parse(text))


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message: str):  # keep exit codes above 2 for errors
        raise ValueError(message)


def _add_budget_flags(p: argparse.ArgumentParser) -> None:
    defaults = Budget()
    p.add_argument("--max-steps", type=int, default=defaults.max_steps)
    p.add_argument("--max-word-len", type=int, default=defaults.max_word_len)
    p.add_argument("--max-stratum", type=int, default=defaults.max_stratum)
    p.add_argument("--max-brace-order", type=int,
                   default=defaults.max_brace_order)
    p.add_argument("--max-maps", type=int, default=defaults.max_maps)


def _budget_from(args: argparse.Namespace) -> Budget:
    return Budget(max_steps=args.max_steps, max_word_len=args.max_word_len,
                  max_stratum=args.max_stratum,
                  max_brace_order=args.max_brace_order,
                  max_maps=args.max_maps)


def build_parser() -> argparse.ArgumentParser:
    p = _ArgumentParser(prog="skewbrace",
                        description="symbolic free skew-brace toolkit")
    sub = p.add_subparsers(dest="command", required=True)

    eq = sub.add_parser("eq", help="decide equality in the quotient")
    eq.add_argument("lhs")
    eq.add_argument("rhs")
    _add_budget_flags(eq)

    nf = sub.add_parser("normal-form",
                        help="reduced word of an expression")
    nf.add_argument("expr")

    act = sub.add_parser("act", help="apply one of the two actions")
    act.add_argument("op", choices=("dot", "colon"))
    act.add_argument("actor")
    act.add_argument("operand")

    ev = sub.add_parser("eval", help="evaluate in a finite model")
    ev.add_argument("expr")
    ev.add_argument("--map", required=True, dest="map_path")
    ev.add_argument("--brace", dest="brace_path")

    en = sub.add_parser("enumerate", help="enumerate models of one order")
    en.add_argument("order", type=int)
    en.add_argument("--iso", action="store_true",
                    help="one representative per isomorphism class")
    en.add_argument("--output", help="write to a file instead of stdout")
    en.add_argument("--cap", type=int, default=4,
                    help="largest allowed order")

    ve = sub.add_parser("verify", help="check a model file axiom by axiom")
    ve.add_argument("path")
    return p


def _print_eq_result(result: EqResult) -> None:
    print(result.verdict)
    if result.verdict == "equal" and result.trace:
        print(serialize_trace(result.trace))
    elif result.verdict == "distinct":
        w = result.witness
        print(f"brace order {w.brace.order}")
        for name, idx in w.assignment:
            print(f"{name} = {idx}")
        print(f"lhs image = {w.image_a}")
        print(f"rhs image = {w.image_b}")
    elif result.verdict == "unknown":
        print(f"steps used = {result.stats.steps}")
        print(f"words visited = {result.stats.visited}")
        print(f"maps tried = {result.stats.maps_tried}")


def _cmd_eq(args: argparse.Namespace) -> int:
    result = decide_eq(_word_of(args.lhs), _word_of(args.rhs),
                       _budget_from(args))
    _print_eq_result(result)
    return {"equal": 0, "distinct": 1, "unknown": 2}[result.verdict]


def _cmd_normal_form(args: argparse.Namespace) -> int:
    print(render_word(_word_of(args.expr)))
    return 0


def _cmd_act(args: argparse.Namespace) -> int:
    act = act_dot if args.op == "dot" else act_colon
    print(render_word(act(_word_of(args.actor), _word_of(args.operand))))
    return 0


def _cmd_eval(args: argparse.Namespace) -> int:
    target = None
    if args.brace_path:
        braces = load_braces(args.brace_path)
        if len(braces) != 1:
            raise ValueError(f"{args.brace_path} must contain exactly one "
                             f"brace, found {len(braces)}")
        target = braces[0]
    f = load_generator_map(args.map_path, target)
    print(eval_word(f, _word_of(args.expr)))
    return 0


def _cmd_enumerate(args: argparse.Namespace) -> int:
    braces = enumerate_braces(args.order, up_to_iso=args.iso, cap=args.cap)
    text = format_braces(braces)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        print(text, end="")
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    with open(args.path) as fh:
        braces = parse_braces(fh.read())
    if not braces:
        raise ValueError(f"no braces found in {args.path}")
    all_ok = True
    for idx, t in enumerate(braces, start=1):
        report = verify_brace(t)
        prefix = f"brace {idx}: " if len(braces) > 1 else ""
        print(f"{prefix}{report}")
        all_ok = all_ok and report.ok
    return 0 if all_ok else 1


_COMMANDS = {
    "eq": _cmd_eq,
    "normal-form": _cmd_normal_form,
    "act": _cmd_act,
    "eval": _cmd_eval,
    "enumerate": _cmd_enumerate,
    "verify": _cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
