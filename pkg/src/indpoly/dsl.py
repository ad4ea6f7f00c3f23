"""A small expression language for building graphs.

Grammar (whitespace-insensitive)::

    expr    := term ('+' term)*              Zykov sum, left-assoc
    term    := factor ('|' factor)*          disjoint union, left-assoc
    factor  := INT '*' factor                n disjoint copies
             | INT '#' factor                Zykov sum of n copies
             | atom postfix*
    postfix := '^*'                          pendant edge on every vertex
    atom    := 'K' INT | 'P' INT | 'C' INT | 'E' INT | 'K' INT ',' INT
             | '(' expr ')'
             | 'addedge(' expr ',' INT ',' INT ')'
             | 'deledge(' expr ',' INT ',' INT ')'

Examples: ``K24 + (K3 | K3 | K4)``, ``K10 + E6``, ``4*C5``, ``K3^*``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import reduce
from typing import Union

from . import graph as g
from .formats import ParseError
from .graph import Graph, GraphError


@dataclass(frozen=True)
class Atom:
    kind: str  # K, P, C, E, or KB for complete bipartite
    args: tuple[int, ...]
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Sum:
    left: "Expr"
    right: "Expr"
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class DisjointUnion:
    left: "Expr"
    right: "Expr"
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Repeat:
    op: str  # '*' (disjoint) or '#' (Zykov)
    count: int
    child: "Expr"
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Star:
    child: "Expr"
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class EdgeEdit:
    op: str  # addedge or deledge
    child: "Expr"
    u: int
    v: int
    pos: int = field(default=0, compare=False)


Expr = Union[Atom, Sum, DisjointUnion, Repeat, Star, EdgeEdit]

_TOKEN = re.compile(r"\s*(?:(?P<int>[0-9]+)|(?P<name>addedge|deledge|[KPCE])|(?P<sym>[+|*#^(),]))")


@dataclass(frozen=True)
class _Tok:
    kind: str
    text: str
    pos: int


def _tokenize(text: str) -> list[_Tok]:
    toks = []
    i = 0
    while i < len(text):
        if text[i].isspace():
            i += 1
            continue
        m = _TOKEN.match(text, i)
        if not m:
            raise ParseError(f"expr: unexpected character {text[i]!r} at position {i}")
        kind = m.lastgroup
        toks.append(_Tok(kind, m.group(kind), m.start(kind)))
        i = m.end()
    return toks


class _Parser:
    def __init__(self, text: str) -> None:
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0
        self.end = len(self.toks)

    def error(self, msg: str, pos: int | None = None) -> ParseError:
        if pos is None:
            pos = self.toks[self.i].pos if self.i < self.end else len(self.text)
        return ParseError(f"expr: {msg} at position {pos}")

    def peek(self, text: str | None = None) -> _Tok | None:
        if self.i >= self.end:
            return None
        tok = self.toks[self.i]
        if text is not None and tok.text != text:
            return None
        return tok

    def take(self, text: str | None = None, kind: str | None = None) -> _Tok:
        tok = self.peek()
        if tok is None:
            want = text or kind or "token"
            raise self.error(f"expected {want!r} but input ended")
        if (text is not None and tok.text != text) or (kind is not None and tok.kind != kind):
            raise self.error(f"expected {text or kind!r}, found {tok.text!r}")
        self.i += 1
        return tok

    def integer(self) -> tuple[int, int]:
        tok = self.take(kind="int")
        return int(tok.text), tok.pos

    def parse(self) -> Expr:
        if not self.toks:
            raise self.error("empty expression", 0)
        e = self.expr()
        if self.i != self.end:
            raise self.error(f"unexpected {self.toks[self.i].text!r}")
        return e

    def expr(self) -> Expr:
        left = self.term()
        while (tok := self.peek("+")) is not None:
            self.i += 1
            left = Sum(left, self.term(), tok.pos)
        return left

    def term(self) -> Expr:
        left = self.factor()
        while (tok := self.peek("|")) is not None:
            self.i += 1
            left = DisjointUnion(left, self.factor(), tok.pos)
        return left

    def factor(self) -> Expr:
        tok = self.peek()
        if tok is not None and tok.kind == "int":
            count, pos = self.integer()
            op = self.peek()
            if op is None or op.text not in ("*", "#"):
                raise self.error("expected '*' or '#' after repetition count")
            self.i += 1
            if count < 1:
                raise self.error("repetition count must be at least 1", pos)
            return Repeat(op.text, count, self.factor(), pos)
        e = self.atom()
        while (tok := self.peek("^")) is not None:
            self.i += 1
            self.take("*")
            e = Star(e, tok.pos)
        return e

    def atom(self) -> Expr:
        tok = self.peek()
        if tok is None:
            raise self.error("expected a graph")
        if tok.text == "(":
            self.i += 1
            e = self.expr()
            self.take(")")
            return e
        if tok.text in ("addedge", "deledge"):
            return self.edge_edit()
        if tok.kind != "name":
            raise self.error(f"expected a graph, found {tok.text!r}")
        self.i += 1
        a, apos = self.integer()
        if tok.text == "K" and self.peek(",") is not None and self._bipartite_comma():
            self.i += 1
            b, bpos = self.integer()
            if a < 1 or b < 1:
                raise self.error("K a,b needs both parts nonempty", apos if a < 1 else bpos)
            return Atom("KB", (a, b), tok.pos)
        minimum = 3 if tok.text == "C" else 1
        if a < minimum:
            raise self.error(f"{tok.text}{a}: size must be at least {minimum}", apos)
        return Atom(tok.text, (a,), tok.pos)

    def _bipartite_comma(self) -> bool:
        nxt = self.i + 1
        return nxt < self.end and self.toks[nxt].kind == "int"

    def edge_edit(self) -> Expr:
        head = self.take()
        self.take("(")
        # the closing ')' of this call bounds the child; the last four tokens
        # before it must be ', INT , INT'
        depth, j = 1, self.i
        while j < self.end:
            if self.toks[j].text == "(":
                depth += 1
            elif self.toks[j].text == ")":
                depth -= 1
                if depth == 0:
                    break
            j += 1
        if j >= self.end:
            raise self.error(f"unclosed '{head.text}('", head.pos)
        tail = self.toks[j - 4 : j]
        if len(tail) < 4 or j - 4 <= self.i or [t.kind for t in tail] != ["sym", "int", "sym", "int"] or tail[0].text != "," or tail[2].text != ",":
            raise self.error(f"{head.text} expects (expr, INT, INT)", head.pos)
        outer_end = self.end
        self.end = j - 4
        child = self.expr()
        if self.i != self.end:
            raise self.error(f"unexpected {self.toks[self.i].text!r}")
        self.end = outer_end
        self.i = j + 1
        return EdgeEdit(head.text, child, int(tail[1].text), int(tail[3].text), head.pos)


def parse_expr(text: str) -> Expr:
    return _Parser(text).parse()


_PREC = {Sum: 0, DisjointUnion: 1, Repeat: 2, Star: 3, Atom: 3, EdgeEdit: 3}


def render_expr(e: Expr) -> str:
    def wrap(child: Expr, at_least: int) -> str:
        s = render_expr(child)
        return f"({s})" if _PREC[type(child)] < at_least else s

    if isinstance(e, Atom):
        if e.kind == "KB":
            return f"K{e.args[0]},{e.args[1]}"
        return f"{e.kind}{e.args[0]}"
    if isinstance(e, Sum):
        return f"{wrap(e.left, 0)} + {wrap(e.right, 1)}"
    if isinstance(e, DisjointUnion):
        return f"{wrap(e.left, 1)} | {wrap(e.right, 2)}"
    if isinstance(e, Repeat):
        return f"{e.count}{e.op}{wrap(e.child, 2)}"
    if isinstance(e, Star):
        return f"{wrap(e.child, 3)}^*"
    if isinstance(e, EdgeEdit):
        return f"{e.op}({render_expr(e.child)}, {e.u}, {e.v})"
    raise TypeError(f"not an expression node: {e!r}")


_ATOMS = {
    "K": g.complete_graph,
    "P": g.path_graph,
    "C": g.cycle_graph,
    "E": g.empty_graph,
    "KB": g.complete_bipartite_graph,
}


def eval_expr(e: Expr) -> Graph:
    if isinstance(e, Atom):
        return _ATOMS[e.kind](*e.args)
    if isinstance(e, Sum):
        return g.zykov_sum(eval_expr(e.left), eval_expr(e.right))
    if isinstance(e, DisjointUnion):
        return g.disjoint_union(eval_expr(e.left), eval_expr(e.right))
    if isinstance(e, Repeat):
        child = eval_expr(e.child)
        combine = g.disjoint_union if e.op == "*" else g.zykov_sum
        return reduce(combine, [child] * e.count)
    if isinstance(e, Star):
        return g.star_graph(eval_expr(e.child))
    if isinstance(e, EdgeEdit):
        child = eval_expr(e.child)
        edit = g.add_edge if e.op == "addedge" else g.delete_edge
        try:
            return edit(child, e.u, e.v)
        except GraphError as exc:
            raise ParseError(f"expr: {e.op} at position {e.pos}: {exc}") from None
    raise TypeError(f"not an expression node: {e!r}")


def build(text: str) -> Graph:
    """Parse and evaluate in one step."""
    return eval_expr(parse_expr(text))
