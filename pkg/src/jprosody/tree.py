"""Bracketed syntactic trees over bunsetsu leaves.

Grammar (whitespace-insensitive, ``;`` starts a comment)::

    tree  := '(' TAG child+ ')'
    child := tree | leaf
    leaf  := surface '|' mora ('.' mora)* '|' accent

Example: ``(IP (PP (NP (N neko|ne.ko|1))) (VP (V naita|na.i.ta|0)))``.
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Iterator, Union

from .errors import (
    EmptyTree,
    HeadResolutionFailure,
    MalformedLeaf,
    NoClause,
    ParseError,
    UnbalancedBrackets,
    UnknownCategory,
    UnknownMoraToken,
)
from .lexicon import PWordLex, parse_moras

MAX_DISTANCE = 6


class Category(str, enum.Enum):
    IP = "IP"
    CP = "CP"
    NP = "NP"
    PP = "PP"
    VP = "VP"
    ADVP = "ADVP"
    N = "N"
    P = "P"
    V = "V"
    ADV = "ADV"
    PU = "PU"

    def __str__(self):
        return self.value


CLAUSAL = (Category.IP, Category.CP)


@dataclass(frozen=True)
class Node:
    category: Category
    children: tuple[Union["Node", PWordLex], ...]

    def __post_init__(self):
        if not self.children:
            raise EmptyTree(f"constituent {self.category} has no children")

    def leaves(self) -> Iterator[PWordLex]:
        for child in self.children:
            if isinstance(child, Node):
                yield from child.leaves()
            else:
                yield child


@dataclass(frozen=True)
class SyntacticTree:
    root: Node

    def __post_init__(self):
        if self.root.category not in CLAUSAL:
            raise NoClause(f"root category must be IP or CP, got {self.root.category}")

    def __str__(self):
        return serialize(self)


# -- parsing ---------------------------------------------------------------

_TOKEN = re.compile(r"(?P<comment>;[^\n]*)|(?P<open>\()|(?P<close>\))|(?P<atom>[^\s();]+)|(?P<ws>\s+)")


def _tokens(text: str):
    line, line_start = 1, 0
    for m in _TOKEN.finditer(text):
        kind = m.lastgroup
        col = m.start() - line_start + 1
        if kind == "ws":
            nl = m.group().count("\n")
            if nl:
                line += nl
                line_start = m.start() + m.group().rfind("\n") + 1
            continue
        if kind == "comment":
            continue
        yield kind, m.group(), line, col


def parse_leaf(atom: str, line: int | None = None, col: int | None = None) -> PWordLex:
    parts = atom.split("|")
    if len(parts) != 3 or not parts[0]:
        raise MalformedLeaf(f"leaf {atom!r} is not surface|moras|accent", line, col)
    surface, dotted, accent = parts
    if not accent.isdigit():
        raise MalformedLeaf(f"accent {accent!r} in leaf {atom!r} is not a non-negative integer", line, col)
    try:
        moras = parse_moras(dotted)
    except UnknownMoraToken as exc:
        raise MalformedLeaf(f"{exc} in leaf {atom!r}", line, col) from exc
    if int(accent) > len(moras):
        raise MalformedLeaf(f"accent {accent} exceeds the {len(moras)} moras of {atom!r}", line, col)
    return PWordLex(surface, moras, int(accent))


class _Parser:
    def __init__(self, text: str):
        self.toks = list(_tokens(text))
        self.pos = 0

    def peek(self):
        return self.toks[self.pos] if self.pos < len(self.toks) else None

    def node(self) -> Node:
        kind, _, line, col = self.toks[self.pos]
        assert kind == "open"
        self.pos += 1
        tok = self.peek()
        if tok is None:
            raise UnbalancedBrackets("input ends inside an open bracket", line, col)
        if tok[0] != "atom":
            raise ParseError("expected a category tag after '('", tok[2], tok[3])
        tag = tok[1]
        try:
            cat = Category(tag)
        except ValueError:
            raise UnknownCategory(f"unknown category {tag!r}", tok[2], tok[3]) from None
        self.pos += 1
        children = []
        while True:
            tok = self.peek()
            if tok is None:
                raise UnbalancedBrackets(f"missing ')' for {tag} opened here", line, col)
            kind, value, tline, tcol = tok
            if kind == "close":
                self.pos += 1
                break
            if kind == "open":
                children.append(self.node())
            else:
                children.append(parse_leaf(value, tline, tcol))
                self.pos += 1
        if not children:
            raise EmptyTree(f"constituent {tag} has no children", line, col)
        return Node(cat, tuple(children))

    def trees(self) -> list[tuple[int, SyntacticTree]]:
        out = []
        while (tok := self.peek()) is not None:
            kind, value, line, col = tok
            if kind == "close":
                raise UnbalancedBrackets("unexpected ')'", line, col)
            if kind == "atom":
                raise ParseError(f"stray text {value!r} outside any bracket", line, col)
            root = self.node()
            try:
                out.append((line, SyntacticTree(root)))
            except NoClause as exc:
                raise NoClause(f"line {line}: {exc}") from None
        return out


def parse_trees(text: str) -> list[tuple[int, SyntacticTree]]:
    """Parse every tree in ``text``; returns ``(start_line, tree)`` pairs."""
    return _Parser(text).trees()


def parse_tree(text: str) -> SyntacticTree:
    trees = parse_trees(text)
    if not trees:
        raise EmptyTree("no tree in input")
    if len(trees) > 1:
        raise ParseError(f"expected one tree, found {len(trees)}", trees[1][0])
    return trees[0][1]


def serialize_leaf(w: PWordLex) -> str:
    return f"{w.surface}|{w.dotted}|{w.accent_nucleus}"


def serialize(tree: SyntacticTree | Node) -> str:
    node = tree.root if isinstance(tree, SyntacticTree) else tree
    parts = [serialize(c) if isinstance(c, Node) else serialize_leaf(c) for c in node.children]
    return f"({node.category} {' '.join(parts)})"


# -- queries ---------------------------------------------------------------

def yield_pwords(tree: SyntacticTree) -> list[PWordLex]:
    return list(tree.root.leaves())


def _extent(node: Node, start: int) -> tuple[int, int]:
    """Return ``(end, head)`` word indices for the constituent starting at ``start``."""
    pos = start
    heads = []
    for child in node.children:
        if isinstance(child, Node):
            pos, head = _extent(child, pos)
            heads.append((child.category is Category.PU, head))
        else:
            heads.append((False, pos))
            pos += 1
    # Head-final: the rightmost non-punctuation child heads the constituent.
    content = [h for is_pu, h in heads if not is_pu]
    return pos, content[-1] if content else heads[-1][1]


def dependency_distances(tree: SyntacticTree) -> list[int | None]:
    """Distance in words from each bunsetsu to its head, clamped to 6.

    A word depends on the lexical head of the lowest constituent that it
    does not itself head. The sentence head gets ``None``.
    """
    # For each word, the lexical heads of its ancestors, innermost first,
    # and whether the word sits under punctuation.
    chains: list[tuple[list[int], bool]] = []

    def walk(node: Node, start: int, outer: list[int], in_pu: bool) -> int:
        here = [_extent(node, start)[1]] + outer
        in_pu = in_pu or node.category is Category.PU
        pos = start
        for child in node.children:
            if isinstance(child, Node):
                pos = walk(child, pos, here, in_pu)
            else:
                chains.append((here, in_pu))
                pos += 1
        return pos

    walk(tree.root, 0, [], False)

    out: list[int | None] = []
    for i, (chain, in_pu) in enumerate(chains):
        # Punctuation attaches forward to the next head that follows it.
        head = next((h for h in chain if (h > i if in_pu else h != i)), None)
        if head is None and chain[-1] != i:
            raise HeadResolutionFailure(f"punctuation word {i} has no following head")
        if head is None:
            out.append(None)
            continue
        if head < i:
            raise HeadResolutionFailure(
                f"word {i} ({yield_pwords(tree)[i].surface}) follows its head {head}; tree is not head-final"
            )
        out.append(min(head - i, MAX_DISTANCE))
    return out
