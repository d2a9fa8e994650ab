"""Projection of syntactic trees onto a recursive prosodic hierarchy.

The root clause becomes the PClause. A VP or PP that contains an NP
becomes a PPhrase, and each bunsetsu sits in a minimal PPhrase of its own.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Union

from .errors import HeadResolutionFailure
from .lexicon import PWordLex
from .tree import Category, Node, SyntacticTree, dependency_distances, yield_pwords

PHRASAL = (Category.VP, Category.PP)


@dataclass(frozen=True)
class PWord:
    lex: PWordLex
    # Distance to the syntactic head, when known. Not part of the prosodic
    # structure, so it is ignored by equality.
    dep: int | None = field(default=None, compare=False)

    @property
    def accented(self) -> bool:
        return self.lex.accented


@dataclass(frozen=True)
class PPhrase:
    children: tuple[Union["PPhrase", PWord], ...]

    def __post_init__(self):
        if not self.children:
            raise ValueError("PPhrase must not be empty")
        if not isinstance(self.children, tuple):
            object.__setattr__(self, "children", tuple(self.children))

    @property
    def minimal(self) -> bool:
        return not any(isinstance(c, PPhrase) for c in self.children)

    def words(self) -> Iterator[PWord]:
        for c in self.children:
            if isinstance(c, PWord):
                yield c
            else:
                yield from c.words()


@dataclass(frozen=True)
class PClause:
    """Root of a prosodic tree. Only PPhrases may sit directly below it."""

    children: tuple[PPhrase, ...]

    def __post_init__(self):
        if not isinstance(self.children, tuple):
            object.__setattr__(self, "children", tuple(self.children))
        if not self.children:
            raise ValueError("PClause must contain at least one PPhrase")
        for c in self.children:
            if not isinstance(c, PPhrase):
                raise ValueError(f"PClause child must be a PPhrase, got {type(c).__name__}")

    def words(self) -> Iterator[PWord]:
        for c in self.children:
            yield from c.words()


ProsodicTree = PClause


@dataclass(frozen=True)
class JuncturePosition:
    index: int  # gap between word ``index`` and ``index + 1``
    left_edge_count: int


def words(ptree: ProsodicTree) -> list[PWord]:
    return list(ptree.words())


def phrases(ptree: ProsodicTree) -> Iterator[tuple[PPhrase, int]]:
    """Yield every PPhrase with the index of its first word, in pre-order."""
    pos = 0

    def visit(p: PPhrase):
        nonlocal pos
        yield p, pos
        for c in p.children:
            if isinstance(c, PPhrase):
                yield from visit(c)
            else:
                pos += 1

    for p in ptree.children:
        yield from visit(p)


def minimal_phrases(ptree: ProsodicTree) -> list[tuple[PPhrase, int]]:
    return [(p, start) for p, start in phrases(ptree) if p.minimal]


def edges_by_word(ptree: ProsodicTree) -> list[int]:
    """Number of PPhrase left brackets opening at each word (index 0 included)."""
    counts = [0] * len(words(ptree))
    for _, start in phrases(ptree):
        counts[start] += 1
    return counts


def left_edge_counts(ptree: ProsodicTree) -> list[JuncturePosition]:
    counts = edges_by_word(ptree)
    return [JuncturePosition(i, counts[i + 1]) for i in range(len(counts) - 1)]


# -- projection ------------------------------------------------------------

def _contains_np(node: Node) -> bool:
    return any(
        isinstance(c, Node) and (c.category is Category.NP or _contains_np(c))
        for c in node.children
    )


def _phrase_spans(node: Node, start: int, out: set) -> int:
    pos = start
    for child in node.children:
        if isinstance(child, Node):
            pos = _phrase_spans(child, pos, out)
        else:
            pos += 1
    if node.category in PHRASAL and _contains_np(node):
        out.add((start, pos))
    return pos


def _build(spans: list[tuple[int, int]], items: list[PWord]) -> list:
    """Nest laminar spans over ``items``; spans sorted by (start, -end)."""
    out: list = []
    i, k = 0, 0
    n = len(items)
    while i < n:
        if k < len(spans) and spans[k][0] == i:
            start, end = spans[k]
            inner = []
            k += 1
            while k < len(spans) and spans[k][1] <= end:
                inner.append(spans[k])
                k += 1
            out.append(PPhrase(tuple(_build([(s - start, e - start) for s, e in inner], items[start:end]))))
            i = end
        else:
            out.append(items[i])
            i += 1
    return out


def project(tree: SyntacticTree) -> ProsodicTree:
    """Map ``tree`` to a PClause of (possibly recursive) PPhrases.

    Same-span VP/PP nodes collapse into one PPhrase. The minimal PPhrase
    wrapped around each word is always added, so a one-word PP yields
    ``[[w]]``.
    """
    # SyntacticTree guarantees an IP or CP root; a CP over IP is the same
    # span, so the root always becomes the single PClause.
    lexes = yield_pwords(tree)
    try:
        deps = dependency_distances(tree)
    except HeadResolutionFailure:
        # Without a head-final analysis there is simply no chain information.
        deps = [None] * len(lexes)
    items = [PWord(w, d) for w, d in zip(lexes, deps)]

    mapped: set[tuple[int, int]] = set()
    _phrase_spans(tree.root, 0, mapped)
    minimal = {(i, i + 1) for i in range(len(items))}
    # Mapped spans sort before identical minimal ones so they nest outside.
    spans = sorted([*sorted(mapped), *sorted(minimal)], key=lambda s: (s[0], -s[1]))
    return PClause(tuple(_build(spans, items)))


def with_deps(ptree: ProsodicTree, deps: list[int | None]) -> ProsodicTree:
    """Return a copy of ``ptree`` with dependency distances attached to its words."""
    it = iter(deps)

    def rebuild(p: PPhrase) -> PPhrase:
        return PPhrase(tuple(rebuild(c) if isinstance(c, PPhrase) else PWord(c.lex, next(it)) for c in p.children))

    return PClause(tuple(rebuild(p) for p in ptree.children))
