"""Rule-based F0 rendering from a prosodic tree.

Pitch is handled in semitones relative to ``base_hz``. Each word carries a
register (a multiplier on its whole pitch range): an accent multiplies the
register by ``downstep_factor`` for everything that follows, and a gap
opened by ``n`` PPhrase left brackets restores part of the lost range,

    R <- R + (1 - R) * (1 - (1 - edge_recovery) ** (n - 1))

so a plain minimal-phrase boundary (n = 1) keeps downstep running while
every extra bracket resets more of it. The %L at the start of a minimal
phrase is lowered by ``dip_per_edge_st`` per bracket beyond the first,
which makes the initial rise grow with boundary depth.
"""
from __future__ import annotations

import csv
import enum
import io
import json
import math
from dataclasses import asdict, dataclass, fields
from typing import Sequence

import numpy as np

from .errors import EmptyTargets
from .lexicon import first_syllable_heavy
from .spmh import ProsodicTree, edges_by_word, minimal_phrases, words


@dataclass(frozen=True)
class F0Params:
    base_hz: float = 120.0
    h_level_st: float = 10.0
    l_level_st: float = 0.0
    dip_per_edge_st: float = 2.0
    downstep_factor: float = 0.7
    edge_recovery: float = 0.4
    mora_duration_s: float = 0.12
    frame_rate_hz: float = 100.0
    final_l_st: float = -4.0

    def __post_init__(self):
        if not 0 < self.downstep_factor < 1:
            raise ValueError(f"downstep_factor must be in (0, 1), got {self.downstep_factor}")
        if not 0 <= self.edge_recovery <= 1:
            raise ValueError(f"edge_recovery must be in [0, 1], got {self.edge_recovery}")
        for name in ("base_hz", "mora_duration_s", "frame_rate_hz"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")
        if self.mora_duration_s * self.frame_rate_hz < 1:
            raise ValueError("frame rate too low: every mora needs at least one frame")

    @classmethod
    def field_names(cls) -> set[str]:
        return {f.name for f in fields(cls)}

    def replace(self, **kw) -> "F0Params":
        return F0Params(**{**asdict(self), **kw})


class Tone(str, enum.Enum):
    BOUNDARY_L = "%L"
    PHRASAL_H = "H"
    ACCENT_H_STAR = "H*"
    ACCENT_FALL_L = "+L"
    FINAL_L = "L%"


@dataclass(frozen=True)
class ToneTarget:
    mora_index: int
    tone: Tone
    level: float  # semitones above base_hz, register included
    pword_index: int = -1


@dataclass
class Contour:
    frame_rate_hz: float
    t: np.ndarray
    f0: np.ndarray
    mora: np.ndarray
    pword: np.ndarray

    @property
    def frames(self) -> list[tuple[float, float, int, int]]:
        return [(float(a), float(b), int(c), int(d)) for a, b, c, d in zip(self.t, self.f0, self.mora, self.pword)]

    def __len__(self):
        return len(self.t)

    def to_dict(self) -> dict:
        return {
            "frame_rate_hz": self.frame_rate_hz,
            "frames": [{"t": t, "f0": f, "mora": m, "pword": w} for t, f, m, w in self.frames],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=1)

    def to_csv(self) -> str:
        buf = io.StringIO()
        out = csv.writer(buf, lineterminator="\n")
        out.writerow(["t", "f0", "mora", "pword"])
        for t, f, m, w in self.frames:
            out.writerow([repr(t), repr(f), m, w])
        return buf.getvalue()

    @classmethod
    def from_dict(cls, d: dict) -> "Contour":
        fr = d["frames"]
        return cls(
            d["frame_rate_hz"],
            np.array([x["t"] for x in fr], dtype=float),
            np.array([x["f0"] for x in fr], dtype=float),
            np.array([x["mora"] for x in fr], dtype=int),
            np.array([x["pword"] for x in fr], dtype=int),
        )


def recover(register: float, n_edges: int, rho: float) -> float:
    if n_edges <= 1:
        return register
    return register + (1 - register) * (1 - (1 - rho) ** (n_edges - 1))


def compute_registers(ptree: ProsodicTree, params: F0Params | None = None) -> list[float]:
    """Register multiplier in force at each word's pitch peak."""
    params = params or F0Params()
    edges = edges_by_word(ptree)
    regs = []
    r = 1.0
    for i, w in enumerate(words(ptree)):
        if i:
            r = recover(r, edges[i], params.edge_recovery)
        regs.append(r)
        if w.accented:
            r *= params.downstep_factor
    return regs


def assign_tones(ptree: ProsodicTree, params: F0Params | None = None,
                 registers: Sequence[float] | None = None) -> list[ToneTarget]:
    params = params or F0Params()
    ws = words(ptree)
    regs = registers if registers is not None else compute_registers(ptree, params)
    shift = [12 * math.log2(r) for r in regs]
    edges = edges_by_word(ptree)

    offsets = [0]
    for w in ws:
        offsets.append(offsets[-1] + len(w.lex.moras))
    mora_word = [i for i, w in enumerate(ws) for _ in w.lex.moras]

    nuclei = {offsets[i] + w.lex.accent_nucleus - 1 for i, w in enumerate(ws) if w.lex.accent_nucleus}

    targets: list[ToneTarget] = []
    phrase_starts = {start: p for p, start in minimal_phrases(ptree)}
    for i, w in enumerate(ws):
        lex = w.lex
        m0 = offsets[i]
        if i in phrase_starts:
            n = max(edges[i], 1)
            targets.append(ToneTarget(m0, Tone.BOUNDARY_L,
                                      params.l_level_st - params.dip_per_edge_st * (n - 1) + shift[i], i))
            phrase_moras = sum(len(x.lex.moras) for x in phrase_starts[i].children)
            h_mora = m0 + 1
            # An H* on the second mora stands in for the phrasal H.
            if (phrase_moras >= 2 and lex.accent_nucleus != 1 and not first_syllable_heavy(lex)
                    and h_mora not in nuclei):
                j = mora_word[h_mora]
                targets.append(ToneTarget(h_mora, Tone.PHRASAL_H, params.h_level_st + shift[j], j))
        if lex.accent_nucleus:
            nuc = m0 + lex.accent_nucleus - 1
            targets.append(ToneTarget(nuc, Tone.ACCENT_H_STAR, params.h_level_st + shift[i], i))
            fall = nuc + 1 if lex.accent_nucleus < len(lex.moras) else nuc
            targets.append(ToneTarget(fall, Tone.ACCENT_FALL_L, params.l_level_st + shift[i], i))
    last = len(ws) - 1
    targets.append(ToneTarget(offsets[-1] - 1, Tone.FINAL_L, params.final_l_st + shift[last], last))
    # Stable sort keeps emission order for targets sharing a mora.
    return sorted(targets, key=lambda t: t.mora_index)


def _anchors(targets: Sequence[ToneTarget], dur: float) -> tuple[np.ndarray, np.ndarray]:
    by_mora: dict[int, list[ToneTarget]] = {}
    for t in targets:
        by_mora.setdefault(t.mora_index, []).append(t)
    times, levels = [], []
    moras = sorted(by_mora)
    for k, m in enumerate(moras):
        group = by_mora[m]
        for j, t in enumerate(group, 1):
            times.append((m + j / (len(group) + 1)) * dur)
            levels.append(t.level)
        # A phrasal H is sustained up to the mora before the next target.
        nxt = moras[k + 1] if k + 1 < len(moras) else None
        if group[-1].tone is Tone.PHRASAL_H and nxt is not None and nxt > m + 1:
            times.append((nxt - 0.5) * dur)
            levels.append(group[-1].level)
    return np.asarray(times), np.asarray(levels)


def render_contour(targets: Sequence[ToneTarget], params: F0Params | None = None,
                   mora_words: Sequence[int] | None = None) -> Contour:
    """Sample a log-linear interpolation through ``targets``.

    Targets sit at mora centres (spread evenly when several share a mora);
    the contour is flat before the first and after the last target.
    ``mora_words`` maps each mora to its word; by default it is filled
    forward from the targets' own word indices.
    """
    params = params or F0Params()
    if not targets:
        raise EmptyTargets("cannot render a contour without tone targets")
    targets = sorted(targets, key=lambda t: t.mora_index)
    n_moras = targets[-1].mora_index + 1
    if mora_words is None:
        fill, cur = [], max(targets[0].pword_index, 0)
        it = iter(targets)
        t = next(it, None)
        for m in range(n_moras):
            while t is not None and t.mora_index == m:
                cur = max(t.pword_index, 0)
                t = next(it, None)
            fill.append(cur)
        mora_words = fill
    else:
        n_moras = max(n_moras, len(mora_words))

    dur = params.mora_duration_s
    n_frames = math.ceil(n_moras * dur * params.frame_rate_hz - 1e-9)
    t = np.arange(n_frames) / params.frame_rate_hz
    mora = np.minimum(np.floor(t / dur + 1e-9).astype(int), n_moras - 1)
    at, av = _anchors(targets, dur)
    st = np.interp(t, at, av)
    f0 = params.base_hz * np.exp2(st / 12.0)
    pword = np.asarray(mora_words, dtype=int)[mora]
    return Contour(params.frame_rate_hz, t, f0, mora, pword)


def synthesize(ptree: ProsodicTree, params: F0Params | None = None) -> Contour:
    params = params or F0Params()
    targets = assign_tones(ptree, params)
    mora_words = [i for i, w in enumerate(words(ptree)) for _ in w.lex.moras]
    return render_contour(targets, params, mora_words)
