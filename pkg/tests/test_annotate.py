import re

import pytest
from hypothesis import given, settings

from jprosody.annotate import (
    AnnotatedString,
    Format,
    emit,
    emit_baseline1,
    emit_baseline2,
    emit_proposed,
    parse_proposed,
    strip_hierarchy,
)
from jprosody.errors import StrayToken, UnbalancedBrackets
from jprosody.experiment import prosodic_structure
from jprosody.fixtures import load_fixture
from jprosody.lexicon import PWordLex
from jprosody.spmh import PClause, PPhrase, PWord, left_edge_counts, words
from jprosody.tree import parse_tree, yield_pwords

from strategies import prosodic_trees


def test_baseline1_tree1():
    tree, _ = load_fixture("tree1")
    assert emit_baseline1(yield_pwords(tree)).text == (
        "wa ga shi ya sa N no ma me u ri ya ku ga me mo ga ki o mo ra i ma \\shi ta .")


@pytest.mark.parametrize("nucleus, expected", [(0, "ne ko ."), (1, "\\ne ko ."), (2, "ne \\ko .")])
def test_baseline1_accent_marker(nucleus, expected):
    assert emit_baseline1([PWordLex.from_dotted("neko", "ne.ko", nucleus)]).text == expected


def test_baseline1_needs_words():
    with pytest.raises(ValueError):
        emit_baseline1([])


@pytest.mark.parametrize("fid, marks", [
    ("tree1", ["#1", "#2", "#1"]),
    ("tree2", ["#3", "#1", "#1"]),
    ("boost4N", ["#6", "#1", "#1", "#1", "#2", "#1"]),
])
def test_baseline2_distances(fid, marks):
    tree, _ = load_fixture(fid)
    assert re.findall(r"#\d", emit_baseline2(tree).text) == marks


@pytest.mark.parametrize("leaf, expected", [
    ("ne.ko|0", "ne ^ ko ."),
    ("ne.ko|1", "\\ne ko ."),      # accented first mora: no lowering mark
    ("ko.o.e.N.de|0", "ko o e N de ."),  # heavy first syllable
    ("ya.ma|2", "ya ^ \\ma ."),
    ("a|0", "a ."),
])
def test_baseline2_lowering_marker(leaf, expected):
    assert emit_baseline2(parse_tree(f"(IP (N w|{leaf}))")).text == expected


def test_proposed_tree1():
    tree, exp = load_fixture("tree1")
    assert emit_proposed(prosodic_structure(tree)).text == exp["proposed"]


def test_proposed_word_separator():
    a = PWord(PWordLex.from_dotted("neko", "ne.ko"))
    b = PWord(PWordLex.from_dotted("karasu", "ka.ra.su", 2))
    p = PClause((PPhrase((a, b)),))
    assert emit_proposed(p).text == "{[ne ko | ka \\ra su].}"
    assert parse_proposed(emit_proposed(p)) == p


def test_proposed_mixed_phrase():
    a = PWord(PWordLex.from_dotted("a", "a"))
    p = PClause((PPhrase((PPhrase((a,)), a, PPhrase((a,)))),))
    assert emit_proposed(p).text == "{[[a] a [a]].}"
    assert parse_proposed(emit_proposed(p).text) == p


def test_parse_simple():
    p = parse_proposed("{[ne ko]}")
    (phrase,) = p.children
    (w,) = phrase.children
    assert [m.text for m in w.lex.moras] == ["ne", "ko"] and w.lex.accent_nucleus == 0


@pytest.mark.parametrize("text, exc", [
    ("{[a}", UnbalancedBrackets),
    ("{[a]", UnbalancedBrackets),
    ("{[a]]}", UnbalancedBrackets),
    ("{a}", StrayToken),
    ("[a]", StrayToken),
    ("{[a]}x", StrayToken),
    ("{[a]}}", StrayToken),
    ("{[\\a \\i]}", StrayToken),
    ("{[a # i]}", StrayToken),
    ("{[xq]}", StrayToken),
    ("{[]}", StrayToken),
    ("{}", StrayToken),
    ("{[a | ]}", StrayToken),
])
def test_parse_errors(text, exc):
    with pytest.raises(exc):
        parse_proposed(text)


def test_parse_rejects_other_formats():
    with pytest.raises(ValueError):
        parse_proposed(AnnotatedString(Format.BASELINE1, "a ."))


def test_emit_dispatch():
    tree, exp = load_fixture("tree2")
    assert emit("baseline1", tree).text == exp["baseline1"]
    assert emit(Format.BASELINE2, tree).text == exp["baseline2"]
    with pytest.raises(ValueError):
        emit("proposed", tree)


def test_edge_counts_visible_in_brackets(fixture_item):
    _, tree, exp = fixture_item
    p = prosodic_structure(tree)
    text = emit_proposed(p).text
    # '[' run opening each word after the first
    runs = [len(m.group(1)) for m in re.finditer(r"\](\[+)", text)]
    assert runs == [j.left_edge_count for j in left_edge_counts(p)]


def test_alphabet_projection(fixture_item):
    _, tree, _ = fixture_item
    proposed = emit_proposed(prosodic_structure(tree)).text
    assert strip_hierarchy(proposed) == emit_baseline1(yield_pwords(tree)).text
    assert strip_hierarchy(emit_baseline2(tree).text.replace("#", " #")).replace(" ", "") != ""


def test_accent_marks_one_per_accented_word(fixture_item):
    _, tree, _ = fixture_item
    n_acc = sum(w.accented for w in yield_pwords(tree))
    for text in (emit_baseline1(yield_pwords(tree)).text, emit_baseline2(tree).text,
                 emit_proposed(prosodic_structure(tree)).text):
        assert text.count("\\") == n_acc


@settings(max_examples=200)
@given(prosodic_trees(with_deps=False))
def test_round_trip(p):
    assert parse_proposed(emit_proposed(p)) == p


@settings(max_examples=200)
@given(prosodic_trees())
def test_projection_onto_baseline1(p):
    b1 = emit_baseline1([w.lex for w in words(p)]).text
    assert strip_hierarchy(emit_proposed(p).text) == b1
