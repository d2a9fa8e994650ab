"""Moras, accent class and syllable weight for bunsetsu-level words.

Moras are written in Hepburn-style romaji, one token per mora. Two
special tokens exist: ``N`` for the moraic nasal and ``Q`` for the first
half of a geminate. A long vowel is spelled by repeating the vowel as its
own mora (``ko.o``), which is how the second half of a heavy syllable is
recognised.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .errors import UnknownMoraToken

VOWELS = "aiueo"

_ONSETS = "k g s z t d n h b p m r".split()
_PALATAL = "ky gy sh j ch ny hy by py my ry".split()

MORA_ALPHABET = frozenset(
    list(VOWELS)
    + [c + v for c in _ONSETS for v in VOWELS if c + v not in ("si", "ti", "tu", "hu", "zi", "di", "du")]
    + [p + v for p in _PALATAL for v in "auo"]
    + ["shi", "chi", "tsu", "fu", "ji", "ya", "yu", "yo", "wa", "wo", "je", "che", "she", "fa", "fi", "fe", "fo"]
    + ["N", "Q"]
)


class MoraKind(enum.Enum):
    REGULAR = "regular"
    MORAIC_NASAL = "moraic_nasal"
    GEMINATE = "geminate"
    LONG_VOWEL_SECOND_HALF = "long_vowel_second_half"


class AccentClass(enum.Enum):
    A = "A"  # accented
    U = "U"  # unaccented


@dataclass(frozen=True)
class Mora:
    text: str
    kind: MoraKind = MoraKind.REGULAR

    @property
    def vowel(self) -> str | None:
        if self.text and self.text[-1] in VOWELS:
            return self.text[-1]
        return None

    def __str__(self):
        return self.text


@dataclass(frozen=True)
class PWordLex:
    """One bunsetsu: a content word fused with its particles.

    ``accent_nucleus`` is 1-based; 0 marks an unaccented word. The surface
    form is informational only and is ignored by equality, so a word read
    back from mora-only notation compares equal to its source.
    """

    surface: str = field(compare=False)
    moras: tuple[Mora, ...]
    accent_nucleus: int = 0

    def __post_init__(self):
        if not self.moras:
            raise ValueError(f"word {self.surface!r} has no moras")
        if not 0 <= self.accent_nucleus <= len(self.moras):
            raise ValueError(
                f"accent nucleus {self.accent_nucleus} out of range for "
                f"{len(self.moras)}-mora word {self.surface!r}"
            )

    @classmethod
    def from_dotted(cls, surface: str, dotted: str, accent: int = 0) -> "PWordLex":
        return cls(surface, parse_moras(dotted), accent)

    @property
    def accented(self) -> bool:
        return self.accent_nucleus >= 1

    @property
    def dotted(self) -> str:
        return ".".join(m.text for m in self.moras)

    def __len__(self):
        return len(self.moras)


def _classify(token: str, previous: Mora | None) -> MoraKind:
    if token == "N":
        return MoraKind.MORAIC_NASAL
    if token == "Q":
        return MoraKind.GEMINATE
    if len(token) == 1 and token in VOWELS and previous is not None and previous.vowel == token:
        return MoraKind.LONG_VOWEL_SECOND_HALF
    return MoraKind.REGULAR


def parse_moras(text: str | list[str] | tuple[str, ...]) -> tuple[Mora, ...]:
    """Split a dotted mora string (``ko.o.e.N.de``) into classified moras.

    A pre-split sequence of tokens is accepted too.
    """
    tokens = text.split(".") if isinstance(text, str) else list(text)
    moras: list[Mora] = []
    for tok in tokens:
        if tok not in MORA_ALPHABET:
            raise UnknownMoraToken(f"unknown mora token {tok!r}")
        moras.append(Mora(tok, _classify(tok, moras[-1] if moras else None)))
    if not moras:
        raise UnknownMoraToken("empty mora sequence")
    return tuple(moras)


def accent_class(w: PWordLex) -> AccentClass:
    return AccentClass.A if w.accent_nucleus >= 1 else AccentClass.U


def first_syllable_heavy(w: PWordLex) -> bool:
    # Diphthong offglides (mo.ra.i) deliberately do not count.
    return len(w.moras) >= 2 and w.moras[1].kind is not MoraKind.REGULAR
