"""Well-formedness rewriting of projected prosodic trees.

Two procedural passes, always in this order:

1. accent culminativity / anti-lapse: a minimal PPhrase ends right after
   each accented word, so ``[A A]`` and ``[A U]`` split while ``[U A]``
   and ``[U U]`` survive;
2. rhythmic-boost re-phrasing: a left-branching run of at least
   ``boost_min_run`` accented minimal PPhrases under one parent is grouped
   pairwise into intermediate PPhrases.

Both passes only add brackets; no edge created by the projection is lost.
"""
from __future__ import annotations

from dataclasses import dataclass

from .spmh import PClause, PPhrase, ProsodicTree, PWord, minimal_phrases


@dataclass(frozen=True)
class ConstraintConfig:
    enable_boost_rephrasing: bool = True
    boost_min_run: int = 4

    def __post_init__(self):
        if self.boost_min_run < 2:
            raise ValueError(f"boost_min_run must be >= 2, got {self.boost_min_run}")


def _segments(ws: list[PWord]) -> list[list[PWord]]:
    segs: list[list[PWord]] = [[]]
    for w in ws:
        segs[-1].append(w)
        if w.accented:
            segs.append([])
    return [s for s in segs if s]


def _split(p: PPhrase) -> list[PPhrase]:
    if p.minimal:
        segs = _segments(list(p.children))
        if len(segs) == 1:
            return [p]
        return [PPhrase(tuple(s)) for s in segs]

    # Mixed phrase: loose words get their own minimal phrases.
    out: list[PPhrase] = []
    run: list[PWord] = []
    for c in p.children:
        if isinstance(c, PWord):
            run.append(c)
            continue
        out.extend(PPhrase(tuple(s)) for s in _segments(run))
        run = []
        out.extend(_split(c))
    out.extend(PPhrase(tuple(s)) for s in _segments(run))
    return [PPhrase(tuple(out))]


def enforce_culminativity_and_antilapse(ptree: ProsodicTree) -> ProsodicTree:
    return PClause(tuple(q for p in ptree.children for q in _split(p)))


def _accented_minimal(c) -> bool:
    return isinstance(c, PPhrase) and c.minimal and any(w.accented for w in c.children)


def _regroup(children, cfg: ConstraintConfig) -> tuple:
    out: list = []
    run: list[PPhrase] = []

    def flush():
        if len(run) >= cfg.boost_min_run:
            for i in range(0, len(run) - 1, 2):
                out.append(PPhrase((run[i], run[i + 1])))
            if len(run) % 2:
                out.append(run[-1])
        else:
            out.extend(run)
        run.clear()

    for c in children:
        if _accented_minimal(c):
            # A run continues only while each member modifies the next word.
            if run and run[-1].children[-1].dep != 1:
                flush()
            run.append(c)
            continue
        flush()
        if isinstance(c, PPhrase) and not c.minimal:
            out.append(PPhrase(_regroup(c.children, cfg)))
        else:
            out.append(c)
    flush()
    return tuple(out)


def rephrase_boost(ptree: ProsodicTree, cfg: ConstraintConfig | None = None) -> ProsodicTree:
    cfg = cfg or ConstraintConfig()
    if not cfg.enable_boost_rephrasing:
        return ptree
    return PClause(_regroup(ptree.children, cfg))


def apply_all(ptree: ProsodicTree, cfg: ConstraintConfig | None = None) -> ProsodicTree:
    return rephrase_boost(enforce_culminativity_and_antilapse(ptree), cfg)


@dataclass(frozen=True)
class PhraseStatus:
    start: int
    pattern: str  # e.g. "UA"
    culminative: bool
    right_edge: bool

    @property
    def ok(self) -> bool:
        return self.culminative and self.right_edge


def phrase_status(ptree: ProsodicTree) -> list[PhraseStatus]:
    """Culminativity and right-edge status of every minimal PPhrase."""
    out = []
    for p, start in minimal_phrases(ptree):
        ws = list(p.children)
        pattern = "".join("A" if w.accented else "U" for w in ws)
        out.append(PhraseStatus(
            start,
            pattern,
            culminative=pattern.count("A") <= 1,
            right_edge=all(not w.accented for w in ws[:-1]),
        ))
    return out


def satisfied(ptree: ProsodicTree) -> bool:
    return all(s.ok for s in phrase_status(ptree))
