"""Serialisation into the three TTS input formats.

``baseline1``  moras and accents only::

    wa ga shi ya sa N no ... mo ra i ma \\shi ta .

``baseline2``  adds ``^`` (initial lowering, written before the second
mora) and ``#k`` dependency distances after every non-final word::

    wa ^ ga shi ya sa N no #1 ... mo ^ ra i ma \\shi ta .

``proposed``   the prosodic hierarchy, ``{}`` for the PClause and ``[]``
for each PPhrase::

    {[[wa ga shi ya sa N no][ma me u ri ya ku ga]][[me mo ga ki o][mo ra i ma \\shi ta]].}

Moras are space separated and ``\\`` is glued to the nucleus mora. Two
words that share a minimal PPhrase are separated by ``|``.
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Sequence

from .errors import StrayToken, UnbalancedBrackets, UnknownMoraToken
from .lexicon import PWordLex, first_syllable_heavy, parse_moras
from .spmh import PClause, PPhrase, ProsodicTree, PWord
from .tree import SyntacticTree, dependency_distances, yield_pwords

ACCENT = "\\"
LOWERING = "^"
WORD_SEP = "|"


class Format(str, enum.Enum):
    BASELINE1 = "baseline1"
    BASELINE2 = "baseline2"
    PROPOSED = "proposed"


@dataclass(frozen=True)
class AnnotatedString:
    format: Format
    text: str

    def __str__(self):
        return self.text


def mora_tokens(w: PWordLex) -> list[str]:
    toks = [m.text for m in w.moras]
    if w.accent_nucleus:
        toks[w.accent_nucleus - 1] = ACCENT + toks[w.accent_nucleus - 1]
    return toks


def initial_lowering_applies(w: PWordLex) -> bool:
    return len(w.moras) >= 2 and w.accent_nucleus != 1 and not first_syllable_heavy(w)


def emit_baseline1(words: Sequence[PWordLex]) -> AnnotatedString:
    if not words:
        raise ValueError("no words to annotate")
    toks = [t for w in words for t in mora_tokens(w)]
    return AnnotatedString(Format.BASELINE1, " ".join(toks + ["."]))


def emit_baseline2(tree: SyntacticTree) -> AnnotatedString:
    words = yield_pwords(tree)
    dists = dependency_distances(tree)
    toks: list[str] = []
    for w, d in zip(words, dists):
        mt = mora_tokens(w)
        if initial_lowering_applies(w):
            mt.insert(1, LOWERING)
        toks.extend(mt)
        if d is not None:
            toks.append(f"#{d}")
    toks.append(".")
    return AnnotatedString(Format.BASELINE2, " ".join(toks))


def _emit_phrase(p: PPhrase) -> str:
    parts: list[str] = []
    prev_word = False
    for c in p.children:
        if isinstance(c, PPhrase):
            if prev_word:
                parts.append(" ")
            parts.append(_emit_phrase(c))
            prev_word = False
        else:
            if prev_word:
                parts.append(f" {WORD_SEP} ")
            elif parts:
                parts.append(" ")
            parts.append(" ".join(mora_tokens(c.lex)))
            prev_word = True
    return "[" + "".join(parts) + "]"


def emit_proposed(ptree: ProsodicTree) -> AnnotatedString:
    body = "".join(_emit_phrase(p) for p in ptree.children)
    return AnnotatedString(Format.PROPOSED, "{" + body + ".}")


def emit(fmt: Format | str, tree: SyntacticTree, ptree: ProsodicTree | None = None) -> AnnotatedString:
    """Render ``tree`` in ``fmt``; the proposed format needs the rewritten ``ptree``."""
    fmt = Format(fmt)
    if fmt is Format.BASELINE1:
        return emit_baseline1(yield_pwords(tree))
    if fmt is Format.BASELINE2:
        return emit_baseline2(tree)
    if ptree is None:
        raise ValueError("proposed format requires a prosodic tree")
    return emit_proposed(ptree)


# -- reading the proposed format back -----------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<punct>[{}\[\]|.])|(?P<mora>\\?[A-Za-z]+)|(?P<bad>\S))")


def _lex(text: str):
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m.group("bad"):
            raise StrayToken(f"unexpected character {m.group('bad')!r}", 1, m.start("bad") + 1)
        kind = "punct" if m.group("punct") else "mora"
        yield kind, m.group(kind), m.start(kind) + 1
        pos = m.end()


def _word(toks: list[tuple[str, int]]) -> PWord:
    nucleus = 0
    texts = []
    for i, (t, col) in enumerate(toks, 1):
        if t.startswith(ACCENT):
            if nucleus:
                raise StrayToken(f"second accent mark in one word at {t!r}", 1, col)
            nucleus = i
            t = t[1:]
        texts.append(t)
    try:
        moras = parse_moras(texts)
    except UnknownMoraToken as exc:
        raise StrayToken(str(exc), 1, toks[0][1]) from None
    return PWord(PWordLex("".join(texts), moras, nucleus))


def parse_proposed(s: AnnotatedString | str) -> ProsodicTree:
    """Read proposed-format text back into a prosodic tree.

    The final ``.`` is optional. Dependency distances are not recoverable,
    so every word comes back with ``dep=None``.
    """
    if isinstance(s, AnnotatedString):
        if s.format is not Format.PROPOSED:
            raise ValueError(f"cannot parse {s.format.value} text as proposed")
        s = s.text
    toks = list(_lex(s))
    if not toks or toks[0][1] != "{":
        raise StrayToken("proposed text must start with '{'", 1, toks[0][2] if toks else 1)

    pos = 1
    stack: list[list] = [[]]  # children under construction; stack[0] is the clause
    opened: list[int] = []
    word: list[tuple[str, int]] = []
    closed = False
    sep_col = 0  # column of a '|' still waiting for its right-hand word

    def end_word():
        if word:
            if len(stack) == 1:
                raise StrayToken("word outside any PPhrase", 1, word[0][1])
            stack[-1].append(_word(word))
            word.clear()

    while pos < len(toks):
        kind, val, col = toks[pos]
        pos += 1
        if kind == "mora":
            word.append((val, col))
            sep_col = 0
            continue
        if sep_col:
            raise StrayToken("'|' must separate two words", 1, sep_col)
        if val == WORD_SEP:
            if not word:
                raise StrayToken("'|' must separate two words", 1, col)
            end_word()
            sep_col = col
        elif val == "[":
            end_word()
            stack.append([])
            opened.append(col)
        elif val == "]":
            end_word()
            if len(stack) == 1:
                raise UnbalancedBrackets("unexpected ']'", 1, col)
            children = stack.pop()
            opened.pop()
            if not children:
                raise StrayToken("empty PPhrase", 1, col)
            stack[-1].append(PPhrase(tuple(children)))
        elif val == ".":
            end_word()
            if len(stack) != 1:
                raise UnbalancedBrackets("'.' inside an open PPhrase", 1, opened[-1])
        elif val == "}":
            end_word()
            if len(stack) != 1:
                raise UnbalancedBrackets("'}' closes the clause while a PPhrase is open", 1, opened[-1])
            closed = True
            break
        else:  # a second '{'
            raise StrayToken("nested '{'", 1, col)
    if not closed:
        end_word()
        raise UnbalancedBrackets("missing closing bracket", 1, opened[-1] if opened else 1)
    if pos < len(toks):
        raise StrayToken(f"text after closing '}}': {toks[pos][1]!r}", 1, toks[pos][2])
    if not stack[0]:
        raise StrayToken("empty clause", 1, 1)
    return PClause(tuple(stack[0]))


def strip_hierarchy(text: str) -> str:
    """Project proposed text onto the baseline-1 alphabet."""
    flat = re.sub(r"[{}\[\]|^]", " ", text)
    return " ".join(flat.replace(".", " . ").split())
