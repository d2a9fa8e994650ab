"""Semitone metrics on rendered contours and pattern verdicts.

Rise size follows the initial-lowering measurement: the peak over the
second mora after a juncture minus the trough over the first, in
semitones. Peak descent between two words is taken later-minus-earlier,
so ordinary downstep comes out negative.
"""
from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass, field

from .errors import InsufficientMoras, MissingWord, NonPositiveFrequency
from .f0 import Contour


def semitones(f1: float, f0: float) -> float:
    """Interval from ``f0`` up to ``f1`` in semitones."""
    if f1 <= 0 or f0 <= 0:
        raise NonPositiveFrequency(f"frequencies must be positive, got {f1} and {f0}")
    return 12.0 * math.log2(f1 / f0)


def _word_first_mora(contour: Contour, word: int) -> int:
    sel = contour.mora[contour.pword == word]
    if sel.size == 0:
        raise MissingWord(f"no frames for word {word}")
    return int(sel.min())


def rise_size(contour: Contour, gap_index: int) -> float:
    """Rise after the gap between word ``gap_index`` and the next word."""
    first = _word_first_mora(contour, gap_index + 1)
    m1 = contour.f0[contour.mora == first]
    m2 = contour.f0[contour.mora == first + 1]
    if m1.size == 0 or m2.size == 0:
        raise InsufficientMoras(f"fewer than two moras follow gap {gap_index}")
    return semitones(float(m2.max()), float(m1.min()))


def word_peak(contour: Contour, word: int) -> float:
    sel = contour.f0[contour.pword == word]
    if sel.size == 0:
        raise MissingWord(f"no frames for word {word}")
    return float(sel.max())


def peak_descent(contour: Contour, word_i: int, word_j: int) -> float:
    return semitones(word_peak(contour, word_j), word_peak(contour, word_i))


def classify_initial_lowering(rise_a: float, rise_b: float, tree_kind: str) -> bool:
    """Natural pattern: the deeper boundary (B in tree 1, A in tree 2) rises more."""
    if not (math.isfinite(rise_a) and math.isfinite(rise_b)):
        raise ValueError("rise sizes must be finite")
    if tree_kind == "tree1":
        return rise_b > rise_a
    if tree_kind == "tree2":
        return rise_a > rise_b
    raise ValueError(f"tree_kind must be 'tree1' or 'tree2', got {tree_kind!r}")


def classify_boost(d12: float, d23: float, d34: float, margin: float = 0.0) -> bool:
    if margin < 0:
        raise ValueError("margin must be non-negative")
    if not all(math.isfinite(x) for x in (d12, d23, d34)):
        raise ValueError("descents must be finite")
    return d12 < 0 and d34 < 0 and d23 > d12 + margin and d23 > d34 + margin


@dataclass
class JunctureMetrics:
    rise_size_st: dict[str, float] = field(default_factory=dict)
    peak_descent_st: dict[str, float] = field(default_factory=dict)
    verdicts: dict[str, bool] = field(default_factory=dict)


def measure_rises(contour: Contour, gaps: dict[str, int]) -> dict[str, float]:
    return {label: rise_size(contour, g) for label, g in gaps.items()}


def measure_descents(contour: Contour, word_ids: list[int]) -> dict[str, float]:
    out = {}
    for k in range(len(word_ids) - 1):
        out[f"N{k + 1}-N{k + 2}"] = peak_descent(contour, word_ids[k], word_ids[k + 1])
    return out


# -- reports -----------------------------------------------------------------

@dataclass
class Row:
    model: str
    sentence: int
    cond: str
    values: dict[str, float]
    verdict: bool


def _fmt(v: float) -> str:
    return f"{v:.2f}"


def format_table(rows: list[Row], value_cols: list[str], with_cond: bool = True) -> str:
    head = ["model", "sentence"] + (["cond"] if with_cond else []) + value_cols + ["Same pattern as natural prosody?"]
    body = []
    for r in rows:
        cells = [r.model, str(r.sentence)] + ([r.cond] if with_cond else [])
        cells += [_fmt(r.values[c]) for c in value_cols]
        cells.append("Yes" if r.verdict else "No")
        body.append(cells)
    widths = [max(len(x) for x in col) for col in zip(head, *body)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(head, widths)).rstrip()]
    lines.append("  ".join("-" * w for w in widths))
    lines += ["  ".join(c.ljust(w) for c, w in zip(cells, widths)).rstrip() for cells in body]
    return "\n".join(lines)


def rows_to_json(rows: list[Row]) -> str:
    return json.dumps([{**asdict(r), "values": {k: round(v, 6) for k, v in r.values.items()}} for r in rows], indent=1)
