"""Syntax-to-prosody compiler for Tokyo Japanese.

Pipeline: bracketed syntactic tree -> projected prosodic tree ->
well-formedness rewriting -> TTS annotation strings and a rule-based F0
contour -> semitone metrics.
"""
from .annotate import emit, emit_baseline1, emit_baseline2, emit_proposed, parse_proposed
from .experiment import prosodic_structure, run_experiment
from .f0 import F0Params, assign_tones, compute_registers, render_contour, synthesize
from .fixtures import load_fixture
from .lexicon import PWordLex, accent_class, first_syllable_heavy, parse_moras
from .measure import (
    classify_boost,
    classify_initial_lowering,
    measure_descents,
    measure_rises,
    peak_descent,
    rise_size,
    semitones,
    word_peak,
)
from .spmh import PClause, PPhrase, PWord, edges_by_word, left_edge_counts, project
from .tree import dependency_distances, parse_tree, serialize, yield_pwords
from .wellformedness import ConstraintConfig, apply_all, phrase_status

__version__ = "0.1.0"
